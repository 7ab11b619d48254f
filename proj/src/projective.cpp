#include "neuberg/projective.hpp"

namespace neuberg {

namespace {

std::array<Num, 3> scale_last_to_one(const std::array<Num, 3>& v) {
  const Num last = !v[2].is_zero() ? v[2] : !v[1].is_zero() ? v[1] : v[0];
  const Num k = last.inverse();
  return {v[0] * k, v[1] * k, v[2] * k};
}

bool all_zero(const std::array<Num, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Num det(const std::array<Num, 3>& a, const std::array<Num, 3>& b, const std::array<Num, 3>& c) {
  const auto h = formula::cross(a, b);
  return h[0] * c[0] + h[1] * c[1] + h[2] * c[2];
}

}  // namespace

ProjPt::ProjPt(const Pt& a) : v_{a.x, a.y, Num(1, a.modulus())} {}

ProjPt ProjPt::make(Num X, Num Y, Num Z) {
  const std::array<Num, 3> v{X, Y, Z};
  if (all_zero(v)) throw Error(Errc::InvalidInput, "[0:0:0] is not a projective point");
  ProjPt P;
  P.v_ = scale_last_to_one(v);
  return P;
}

std::optional<Pt> ProjPt::affine() const {
  if (!is_affine()) return std::nullopt;
  return Pt{v_[0], v_[1]};
}

bool ProjPt::operator<(const ProjPt& o) const {
  if (is_affine() != o.is_affine()) return is_affine();
  if (v_[0] != o.v_[0]) return v_[0] < o.v_[0];
  return v_[1] < o.v_[1];
}

std::string to_string(const ProjPt& a) {
  if (a.is_affine()) return to_string(*a.affine());
  return "[" + to_string(a.X()) + ":" + to_string(a.Y()) + ":0]";
}

ProjLine ProjLine::make(Num a, Num b, Num c) {
  const std::array<Num, 3> v{a, b, c};
  if (all_zero(v)) throw Error(Errc::InvalidLine, "<0:0:0> is not a line");
  ProjLine l;
  l.v_ = scale_last_to_one(v);
  return l;
}

bool ProjLine::contains(const ProjPt& P) const {
  const auto& w = P.coords();
  return (v_[0] * w[0] + v_[1] * w[1] + v_[2] * w[2]).is_zero();
}

std::optional<Ln> ProjLine::affine() const {
  if (is_line_at_infinity()) return std::nullopt;
  return Ln::make(v_[0], v_[1], v_[2]);
}

std::string to_string(const ProjLine& l) {
  const auto& v = l.coords();
  return "<" + to_string(v[0]) + ":" + to_string(v[1]) + ":" + to_string(v[2]) + ">";
}

ProjLine join(const ProjPt& P, const ProjPt& Q) {
  if (P == Q) throw Error(Errc::CoincidentPoints, "join of " + to_string(P) + " with itself");
  return ProjLine::make(formula::cross(P.coords(), Q.coords()));
}

ProjPt meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Error(Errc::CoincidentPoints, "meet of " + to_string(l) + " with itself");
  return ProjPt::make(formula::cross(l.coords(), m.coords()));
}

bool are_collinear(const ProjPt& P, const ProjPt& Q, const ProjPt& R) {
  return det(P.coords(), Q.coords(), R.coords()).is_zero();
}

}  // namespace neuberg
