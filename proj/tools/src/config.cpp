#include "deepzero_cli/config.hpp"

#include <charconv>
#include <sstream>

#include "deepzero/errors.hpp"
#include "deepzero/sweep.hpp"

namespace deepzero::cli {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Verify:
      return "verify";
    case Command::SamplingSweep:
      return "sampling-sweep";
    case Command::ThetaSweep:
      return "theta-sweep";
    case Command::RecoverDemo:
      return "recover-demo";
    case Command::GramExport:
      return "gram-export";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw ConfigError(key + ": not a number: '" + text + "'");
  }
  return v;
}

Index parse_index(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw ConfigError(key + ": not an integer: '" + text + "'");
  }
  return static_cast<Index>(v);
}

std::vector<std::string> split_list(const std::string& key, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  if (parts.empty()) throw ConfigError(key + ": empty list");
  return parts;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_number(xs[i]);
    } else {
      out += std::to_string(xs[i]);
    }
  }
  return out;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "beta") {
    cfg.beta = parse_real(key, value);
  } else if (key == "parity") {
    try {
      cfg.parity = parse_parity(trim(value));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "degrees") {
    cfg.degrees.clear();
    for (const auto& s : split_list(key, value)) cfg.degrees.push_back(parse_index(key, s));
  } else if (key == "thetas") {
    cfg.thetas.clear();
    for (const auto& s : split_list(key, value)) cfg.thetas.push_back(parse_real(key, s));
  } else if (key == "pad") {
    if (trim(value) == "auto") {
      cfg.pad = Pad::automatic();
    } else {
      const Index p = parse_index(key, value);
      if (p < 0) throw ConfigError("pad: must be 'auto' or a nonnegative integer");
      cfg.pad = Pad::fixed(p);
    }
  } else if (key == "tol") {
    cfg.tol = parse_real(key, value);
  } else if (key == "out") {
    cfg.out = trim(value);
  } else if (key == "format") {
    cfg.format = trim(value);
  } else if (key == "degree") {
    cfg.degree = parse_index(key, value);
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!std::isfinite(cfg.beta)) throw ConfigError("beta must be finite");
  const bool needs_positive_beta = cfg.command == Command::ThetaSweep || cfg.command == Command::RecoverDemo;
  if (needs_positive_beta && !(cfg.beta > 0.0)) throw ConfigError("beta must be > 0");
  if (cfg.beta < 0.0) throw ConfigError("beta must be >= 0");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("tol must be > 0");
  switch (cfg.command) {
    case Command::SamplingSweep:
      if (cfg.degrees.empty()) throw ConfigError("degrees: empty list");
      for (std::size_t i = 0; i < cfg.degrees.size(); ++i) {
        if (cfg.degrees[i] < 2) throw ConfigError("degrees: each degree must be >= 2");
        if (i > 0 && cfg.degrees[i] <= cfg.degrees[i - 1]) {
          throw ConfigError("degrees: must be strictly increasing");
        }
      }
      break;
    case Command::ThetaSweep:
      if (cfg.thetas.empty()) throw ConfigError("thetas: empty list");
      for (std::size_t i = 0; i < cfg.thetas.size(); ++i) {
        if (!(cfg.thetas[i] > 0.0) || !std::isfinite(cfg.thetas[i])) {
          throw ConfigError("thetas: each theta must be > 0");
        }
        if (i > 0 && cfg.thetas[i] >= cfg.thetas[i - 1]) {
          throw ConfigError("thetas: must be strictly decreasing");
        }
      }
      break;
    case Command::GramExport:
      if (cfg.degree < 2) throw ConfigError("degree must be >= 2");
      if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
      break;
    case Command::Verify:
    case Command::RecoverDemo:
      break;
  }
}

std::string describe(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# config command=" << to_string(cfg.command) << " beta=" << format_number(cfg.beta)
     << " parity=" << to_string(cfg.parity) << " degrees=" << join(cfg.degrees)
     << " thetas=" << join(cfg.thetas)
     << " pad=" << (cfg.pad.is_auto() ? std::string("auto") : std::to_string(cfg.pad.fixed_rows()))
     << " tol=" << (cfg.tol ? format_number(*cfg.tol) : std::string("default")) << " format=" << cfg.format
     << " degree=" << cfg.degree << " out=" << (cfg.out.empty() ? std::string("-") : cfg.out);
  return os.str();
}

}  // namespace deepzero::cli
