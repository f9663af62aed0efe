#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zreg/complexval.hpp"

namespace zreg {

// One diagnostic row: truncation index, computed value, reference value and
// absolute error against the reference.
struct ConvergenceRow {
  std::uint64_t n = 0;
  ComplexValue value;
  ComplexValue reference;
  double abs_err = 0.0;
};

// Carrier for limit diagnostics: quantities whose finite-n values are
// verified exactly while the limit itself is only reported.
class ConvergenceTable {
 public:
  ConvergenceTable() = default;
  ConvergenceTable(ComplexValue z, std::string method)
      : z_(z), method_(std::move(method)) {}

  void add_row(std::uint64_t n, ComplexValue value, ComplexValue reference);
  const std::vector<ConvergenceRow>& rows() const { return rows_; }

  ComplexValue z() const { return z_; }
  const std::string& method() const { return method_; }
  // Empty unless explicitly stamped: identical configs must produce
  // bit-identical serializations.
  const std::string& generated_at() const { return generated_at_; }
  void stamp(std::string when) { generated_at_ = std::move(when); }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  const std::vector<std::string>& notes() const { return notes_; }

  // CSV columns: n, re, im, ref_re, ref_im, abs_err.
  void write_csv(std::ostream& os) const;
  nlohmann::json to_json() const;

 private:
  ComplexValue z_;
  std::string method_;
  std::string generated_at_;
  std::vector<std::string> notes_;
  std::vector<ConvergenceRow> rows_;
};

}  // namespace zreg
