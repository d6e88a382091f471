#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deepzero {

// One row of an experiment sweep: ordered name/value pairs plus an optional
// error tag for rows whose computation failed.
class SweepRecord {
 public:
  SweepRecord& set(std::string name, double value);
  std::optional<double> get(std::string_view name) const;
  // Throws std::out_of_range when absent.
  double at(std::string_view name) const;

  const std::vector<std::pair<std::string, double>>& fields() const noexcept { return fields_; }

  const std::string& error() const noexcept { return error_; }
  void set_error(std::string e) { error_ = std::move(e); }
  bool ok() const noexcept { return error_.empty(); }

 private:
  std::vector<std::pair<std::string, double>> fields_;
  std::string error_;
};

// Shortest round-trip form; non-finite values print as nan / inf / -inf.
std::string format_number(double x);

// Quotes the field when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);

// Writes `columns` of the record in order; missing values print as nan.
void write_csv_row(std::ostream& os, const SweepRecord& rec, const std::vector<std::string>& columns,
                   bool with_error_column = false);

}  // namespace deepzero
