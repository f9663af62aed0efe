#include "zreg/table.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace zreg {

void ConvergenceTable::add_row(std::uint64_t n, ComplexValue value,
                               ComplexValue reference) {
  if (!rows_.empty() && n <= rows_.back().n)
    throw TableError("convergence table rows must have strictly increasing n");
  require_finite(value, "convergence table value");
  rows_.push_back({n, value, reference, std::abs(value - reference)});
}

void ConvergenceTable::write_csv(std::ostream& os) const {
  os << "n,re,im,ref_re,ref_im,abs_err\n";
  for (const auto& r : rows_) {
    os << r.n << ',' << fmt17(r.value.real()) << ',' << fmt17(r.value.imag())
       << ',' << fmt17(r.reference.real()) << ',' << fmt17(r.reference.imag())
       << ',' << fmt17(r.abs_err) << '\n';
  }
}

nlohmann::json ConvergenceTable::to_json() const {
  nlohmann::json j;
  j["z"] = format_complex(z_);
  j["method"] = method_;
  if (!generated_at_.empty()) j["generated_at"] = generated_at_;
  if (!notes_.empty()) j["notes"] = notes_;
  j["columns"] = {"n", "re", "im", "ref_re", "ref_im", "abs_err"};
  auto rows = nlohmann::json::array();
  for (const auto& r : rows_) {
    rows.push_back({r.n, fmt17(r.value.real()), fmt17(r.value.imag()),
                    fmt17(r.reference.real()), fmt17(r.reference.imag()),
                    fmt17(r.abs_err)});
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace zreg
