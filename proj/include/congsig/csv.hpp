#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace congsig {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Minimal comma-separated writer: no quoting, since every field is numeric or a bare name.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(std::string_view s);
  CsvWriter& field(double v);
  CsvWriter& field(std::size_t v);
  void end_row();

  void header(const std::vector<std::string>& names);

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace congsig
