#include "deepzero/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace deepzero {

SweepRecord& SweepRecord::set(std::string name, double value) {
  for (auto& [k, v] : fields_) {
    if (k == name) {
      v = value;
      return *this;
    }
  }
  fields_.emplace_back(std::move(name), value);
  return *this;
}

std::optional<double> SweepRecord::get(std::string_view name) const {
  for (const auto& [k, v] : fields_) {
    if (k == name) return v;
  }
  return std::nullopt;
}

double SweepRecord::at(std::string_view name) const {
  if (auto v = get(name)) return *v;
  throw std::out_of_range("SweepRecord: no field " + std::string(name));
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& os, const SweepRecord& rec, const std::vector<std::string>& columns,
                   bool with_error_column) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    const auto v = rec.get(columns[i]);
    os << format_number(v ? *v : std::nan(""));
  }
  if (with_error_column) os << ',' << csv_field(rec.error());
  os << '\n';
}

}  // namespace deepzero
