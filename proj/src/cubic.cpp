#include "neuberg/cubic.hpp"

#include <algorithm>
#include <map>

namespace neuberg {

namespace {

Num dot(const std::array<Num, 3>& u, const std::array<Num, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

bool all_zero(const std::array<Num, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

std::array<Num, 3> combine(Num s, const std::array<Num, 3>& u, Num t, const std::array<Num, 3>& v) {
  return {s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]};
}

}  // namespace

Cubic Cubic::make(const Poly2& f) {
  if (f.degree() != 3) {
    throw Error(Errc::DegreeMismatch, "a cubic needs degree 3, got " + std::to_string(f.degree()));
  }
  Poly2 g = f.normalized();
  Form3 G = homogenize(g, 3);
  return Cubic(std::move(g), std::move(G));
}

bool Cubic::is_on(const ProjPt& P) const { return F_.eval(P.coords()).is_zero(); }

void Cubic::require_on(const ProjPt& P) const {
  if (!is_on(P)) throw Error(Errc::NotOnCurve, to_string(P) + " is not on the curve");
}

std::vector<ProjPt> Cubic::infinite_points(std::uint64_t max_enum) const {
  check_enumeration_bound(modulus(), max_enum);
  const Field fld(modulus());
  std::vector<ProjPt> out;
  if (F_.eval(fld.one(), fld.zero(), fld.zero()).is_zero()) out.push_back(ProjPt::make(fld, 1, 0, 0));
  for (const Num x : fld.elements(max_enum)) {
    if (F_.eval(x, fld.one(), fld.zero()).is_zero()) out.push_back(ProjPt::make(x, fld.one(), fld.zero()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPt> Cubic::enumerate_points(std::uint64_t max_enum) const {
  std::vector<ProjPt> out;
  for (const Pt& a : affine_zeros(f_, max_enum)) out.emplace_back(a);
  for (const ProjPt& P : infinite_points(max_enum)) out.push_back(P);
  return out;
}

std::vector<ProjPt> Cubic::singular_points(std::uint64_t max_enum) const {
  std::vector<ProjPt> out;
  for (const ProjPt& P : enumerate_points(max_enum)) {
    if (all_zero(gradient(P))) out.push_back(P);
  }
  return out;
}

ProjLine Cubic::tangent_line(const ProjPt& P) const {
  require_on(P);
  const auto g = gradient(P);
  if (all_zero(g)) throw Error(Errc::SingularPoint, to_string(P) + " is singular");
  return ProjLine::make(g);
}

ProjPt Cubic::star(const ProjPt& X, const ProjPt& Y) const {
  require_on(X);
  require_on(Y);
  const auto gx = gradient(X);
  const auto gy = gradient(Y);
  if (all_zero(gx)) throw Error(Errc::SingularPoint, to_string(X) + " is singular");
  if (all_zero(gy)) throw Error(Errc::SingularPoint, to_string(Y) + " is singular");

  if (X != Y) {
    // F(sX + tY) = s^2 t (gx.Y) + s t^2 (gy.X) since F(X) = F(Y) = 0; the
    // remaining root is s : t = gy.X : -(gx.Y).
    const Num a = dot(gx, Y.coords());
    const Num b = dot(gy, X.coords());
    if (a.is_zero() && b.is_zero()) {
      throw Error(Errc::LineOnCurve, "line " + to_string(join(X, Y)) + " lies on the curve");
    }
    return ProjPt::make(combine(b, X.coords(), -a, Y.coords()));
  }

  // Tangent case: take W on the tangent, W != X. Along sX + tW the
  // restriction is t^2 (s (gw.X) + t F(W)).
  std::optional<ProjPt> W;
  for (int k = 0; k < 3 && !W; ++k) {
    std::array<Num, 3> e{Num(0, modulus()), Num(0, modulus()), Num(0, modulus())};
    e[static_cast<std::size_t>(k)] = Num(1, modulus());
    const auto w = formula::cross(gx, e);
    if (all_zero(w)) continue;
    const ProjPt cand = ProjPt::make(w);
    if (cand != X) W = cand;
  }
  const Num c1 = dot(gradient(*W), X.coords());
  const Num c0 = F_.eval(W->coords());
  if (c0.is_zero() && c1.is_zero()) {
    throw Error(Errc::LineOnCurve, "tangent at " + to_string(X) + " lies on the curve");
  }
  return ProjPt::make(combine(c0, X.coords(), -c1, W->coords()));
}

std::vector<ProjPt> Cubic::tangential_preimages(const ProjPt& P, std::uint64_t max_enum) const {
  require_on(P);
  std::vector<ProjPt> out;
  for (const ProjPt& X : enumerate_points(max_enum)) {
    if (all_zero(gradient(X))) continue;
    if (!dot(gradient(X), P.coords()).is_zero()) continue;
    // Every tangent at P passes through P; keep P only when it is a flex.
    if (X == P && star(P, P) != P) continue;
    out.push_back(X);
  }
  return out;
}

std::vector<ProjPt> quadrangle_to(const Cubic& c, const ProjPt& P, std::uint64_t max_enum) {
  std::vector<ProjPt> out = c.tangential_preimages(P, max_enum);
  std::erase(out, P);
  return out;
}

CubicGroup::CubicGroup(Cubic curve, const ProjPt& base, std::uint64_t max_enum)
    : curve_(std::move(curve)), base_(base) {
  if (!curve_.is_on(base_)) throw Error(Errc::NotOnCurve, to_string(base_) + " is not on the curve");
  points_ = curve_.enumerate_points(max_enum);
  for (const ProjPt& P : points_) {
    if (all_zero(curve_.gradient(P))) {
      throw Error(Errc::SingularPoint, "curve is singular at " + to_string(P));
    }
  }
  tangential_ = curve_.star(base_, base_);
}

ProjPt CubicGroup::mul(const ProjPt& X, const ProjPt& Y) const {
  return curve_.star(curve_.star(X, Y), base_);
}

ProjPt CubicGroup::inv(const ProjPt& X) const { return curve_.star(X, tangential_); }

ProjPt CubicGroup::pow(const ProjPt& X, std::uint64_t n) const {
  ProjPt result = base_, acc = X;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = mul(result, acc);
    acc = mul(acc, acc);
  }
  return result;
}

std::uint64_t CubicGroup::element_order(const ProjPt& X) const {
  if (!curve_.is_on(X)) throw Error(Errc::NotOnCurve, to_string(X) + " is not on the curve");
  ProjPt acc = X;
  for (std::uint64_t n = 1; n <= points_.size(); ++n) {
    if (acc == base_) return n;
    acc = mul(acc, X);
  }
  throw Error(Errc::DegenerateConfiguration, "no finite order for " + to_string(X));
}

std::vector<std::uint64_t> CubicGroup::structure() const {
  std::vector<std::uint64_t> orders;
  for (const ProjPt& P : points_) orders.push_back(element_order(P));

  // For each prime q | n, N_k = #{x : ord(x) | q^k} = q^(sum_i min(k, e_i)),
  // so log_q(N_k / N_{k-1}) counts cyclic q-factors of exponent >= k.
  std::uint64_t n = points_.size();
  std::map<std::uint64_t, std::vector<unsigned>> ranks;  // q -> r_1 >= r_2 >= ...
  for (std::uint64_t q = 2, m = n; m > 1; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    std::uint64_t prev = 1;
    for (std::uint64_t qk = q;; qk *= q) {
      const auto count = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [qk](std::uint64_t o) { return qk % o == 0; }));
      unsigned r = 0;
      for (std::uint64_t ratio = count / prev; ratio > 1; ratio /= q) ++r;
      if (r == 0) break;
      ranks[q].push_back(r);
      prev = count;
    }
  }
  std::size_t factors = 0;
  for (const auto& [q, r] : ranks) factors = std::max<std::size_t>(factors, r.front());
  // The i-th largest factor takes q^#{k : r_k >= i}.
  std::vector<std::uint64_t> out(factors, 1);
  for (const auto& [q, r] : ranks) {
    for (std::size_t i = 0; i < factors; ++i) {
      for (unsigned rk : r) {
        if (rk >= i + 1) out[i] *= q;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool CubicGroup::collinear_product(const ProjPt& X, const ProjPt& Y, const ProjPt& Z) const {
  return mul(mul(X, Y), Z) == tangential_;
}

}  // namespace neuberg
