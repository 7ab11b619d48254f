#include <algorithm>
#include <cstdint>
#include <vector>

#include "neuberg/kernels.hpp"
#include "neuberg/polynomial.hpp"

namespace neuberg {

namespace {

/// Evaluates f on the row y = const for every x in F_p.
class RowEvaluator {
 public:
  explicit RowEvaluator(const Poly2& f) : f_(f), p_(static_cast<std::uint32_t>(f.modulus())) {
    xs_.resize(p_);
    for (std::uint32_t x = 0; x < p_; ++x) xs_[x] = x;
    values_.resize(p_);
  }

  const std::vector<std::uint32_t>& row(Num y) {
    const auto c = f_.x_coefficients(y);
    coeffs_.assign(c.size(), 0);
    std::transform(c.begin(), c.end(), coeffs_.begin(),
                   [](Num v) { return static_cast<std::uint32_t>(v.value()); });
    kernels::horner_mod(coeffs_, xs_, values_, p_);
    return values_;
  }

 private:
  const Poly2& f_;
  std::uint32_t p_;
  std::vector<std::uint32_t> xs_, coeffs_, values_;
};

}  // namespace

std::vector<Pt> affine_zeros(const Poly2& f, std::uint64_t max_enum) {
  const std::uint64_t p = f.modulus();
  check_enumeration_bound(p, max_enum);
  std::vector<Pt> out;
  RowEvaluator rows(f);
  for (std::uint64_t y = 0; y < p; ++y) {
    const Num ny(static_cast<std::int64_t>(y), p);
    const auto& vals = rows.row(ny);
    for (std::uint64_t x = 0; x < p; ++x) {
      if (vals[x] == 0) out.emplace_back(Num(static_cast<std::int64_t>(x), p), ny);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pt> common_affine_zeros(const Poly2& f, const Poly2& g, std::uint64_t max_enum) {
  const std::uint64_t p = f.modulus();
  if (g.modulus() != p) throw Error(Errc::FieldMismatch, "polynomials over different fields");
  check_enumeration_bound(p, max_enum);
  std::vector<Pt> out;
  RowEvaluator rf(f), rg(g);
  for (std::uint64_t y = 0; y < p; ++y) {
    const Num ny(static_cast<std::int64_t>(y), p);
    const auto& vf = rf.row(ny);
    const auto& vg = rg.row(ny);
    for (std::uint64_t x = 0; x < p; ++x) {
      if (vf[x] == 0 && vg[x] == 0) out.emplace_back(Num(static_cast<std::int64_t>(x), p), ny);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace neuberg
