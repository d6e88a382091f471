#include "deepzero/serialize.hpp"

#include "deepzero/errors.hpp"
#include "deepzero/sweep.hpp"

namespace deepzero {

namespace {

nlohmann::json matrix_block(const Eigen::MatrixXcd& m) {
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

}  // namespace

nlohmann::json to_json(const FockVector& v) {
  std::vector<double> re;
  std::vector<double> im;
  for (Index j = 0; j < v.degree(); ++j) {
    re.push_back(v.coeffs()[j].real());
    im.push_back(v.coeffs()[j].imag());
  }
  return {{"degree", v.degree()}, {"re", re}, {"im", im}};
}

FockVector fock_from_json(const nlohmann::json& j) {
  const auto n = j.at("degree").get<Index>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (n < 0 || re.size() != static_cast<std::size_t>(n) || im.size() != re.size()) {
    throw DomainError("FockVector JSON: degree and array lengths disagree");
  }
  Eigen::VectorXcd c(n);
  for (Index k = 0; k < n; ++k) c[k] = {re[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k)]};
  return FockVector(std::move(c));
}

nlohmann::json to_json(const OperatorMatrix& m) {
  nlohmann::json j = matrix_block(m.entries);
  j["tail_leak"] = m.tail_leak;
  return j;
}

OperatorMatrix operator_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Index>();
  const auto cols = j.at("cols").get<Index>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (rows < 0 || cols < 0 || re.size() != static_cast<std::size_t>(rows * cols) || im.size() != re.size()) {
    throw DomainError("OperatorMatrix JSON: shape and array lengths disagree");
  }
  OperatorMatrix m;
  m.entries.resize(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(r * cols + c);
      m.entries(r, c) = {re[k], im[k]};
    }
  }
  m.tail_leak = j.value("tail_leak", 0.0);
  return m;
}

nlohmann::json to_json(const SeminormForm& form) {
  return {{"E", form.E.describe()},   {"beta", form.beta},           {"degree", form.degree},
          {"pad", form.pad},          {"tail_leak", form.tail_leak}, {"matrix", matrix_block(form.matrix)}};
}

void write_csv(std::ostream& os, const L2Function& f) {
  os << "t,re,im,weight\n";
  const auto& t = f.grid()->nodes();
  const auto& w = f.grid()->weights();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Complex v = f.values()[static_cast<Index>(i)];
    os << format_number(t[i]) << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << ','
       << format_number(w[i]) << '\n';
  }
}

}  // namespace deepzero
