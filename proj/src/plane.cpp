#include "neuberg/plane.hpp"

namespace neuberg {

std::string to_string(const Pt& a) { return "[" + to_string(a.x) + "," + to_string(a.y) + "]"; }

Ln Ln::make(Num a, Num b, Num c) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidLine, "<0:0:c> is not a line");
  const Num last = !c.is_zero() ? c : !b.is_zero() ? b : a;
  const Num k = last.inverse();
  return Ln(a * k, b * k, c * k);
}

std::string to_string(const Ln& l) {
  return "<" + to_string(l.a()) + ":" + to_string(l.b()) + ":" + to_string(l.c()) + ">";
}

Num quadrance(const Pt& a1, const Pt& a2) {
  const Num dx = a2.x - a1.x;
  const Num dy = a2.y - a1.y;
  return dx * dx + dy * dy;
}

Ln line_through(const Pt& a1, const Pt& a2) {
  if (a1 == a2) throw Error(Errc::CoincidentPoints, "line through " + to_string(a1) + " twice");
  const auto c = formula::join(a1.x, a1.y, a2.x, a2.y);
  return Ln::make(c[0], c[1], c[2]);
}

bool is_null(const Ln& l) { return (l.a() * l.a() + l.b() * l.b()).is_zero(); }

bool is_perpendicular(const Ln& l1, const Ln& l2) {
  return (l1.a() * l2.a() + l1.b() * l2.b()).is_zero();
}

bool is_parallel(const Ln& l1, const Ln& l2) {
  return (l1.a() * l2.b() - l2.a() * l1.b()).is_zero();
}

namespace {

void require_non_null(const Ln& l) {
  if (is_null(l)) throw Error(Errc::NullLine, to_string(l) + " is null");
}

}  // namespace

Num spread(const Ln& l1, const Ln& l2) {
  require_non_null(l1);
  require_non_null(l2);
  const Num num = l1.a() * l2.b() - l2.a() * l1.b();
  return num * num / ((l1.a() * l1.a() + l1.b() * l1.b()) * (l2.a() * l2.a() + l2.b() * l2.b()));
}

Ln altitude(const Ln& l, const Pt& a) {
  // Perpendicular direction: normal (b, -a).
  return Ln::make(l.b(), -l.a(), l.a() * a.y - l.b() * a.x);
}

Num foot_parameter(const Ln& l, const Pt& a) {
  require_non_null(l);
  return l.eval(a) / (l.a() * l.a() + l.b() * l.b());
}

Pt foot_of_altitude(const Ln& l, const Pt& a) {
  const Num t = foot_parameter(l, a);
  return {a.x - t * l.a(), a.y - t * l.b()};
}

Pt reflect_point(const Ln& l, const Pt& a) {
  require_non_null(l);
  auto [x, y] = formula::reflect_point(l.a(), l.b(), l.c(), a.x, a.y);
  return {x, y};
}

Ln reflect_line(const Ln& l, const Ln& m) {
  require_non_null(l);
  const auto c = formula::reflect_line(l.a(), l.b(), l.c(), m.a(), m.b(), m.c());
  return Ln::make(c[0], c[1], c[2]);
}

Pt midpoint(const Pt& a, const Pt& b) {
  const Num half = Num(2, a.modulus()).inverse();
  return {(a.x + b.x) * half, (a.y + b.y) * half};
}

Pt centroid(const Pt& a, const Pt& b, const Pt& c) {
  const Num third = Num(3, a.modulus()).inverse();
  return {(a.x + b.x + c.x) * third, (a.y + b.y + c.y) * third};
}

bool is_collinear(const Pt& a, const Pt& b, const Pt& c) {
  return ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)).is_zero();
}

bool triple_quad_collinear(const Pt& a, const Pt& b, const Pt& c) {
  const Num q1 = quadrance(b, c);
  const Num q2 = quadrance(a, c);
  const Num q3 = quadrance(a, b);
  const Num s = q1 + q2 + q3;
  return s * s == 2 * (q1 * q1 + q2 * q2 + q3 * q3);
}

std::optional<Pt> intersect(const Ln& l1, const Ln& l2) {
  const auto h = formula::cross(std::array{l1.a(), l1.b(), l1.c()}, std::array{l2.a(), l2.b(), l2.c()});
  if (h[2].is_zero()) return std::nullopt;
  const Num inv = h[2].inverse();
  return Pt{h[0] * inv, h[1] * inv};
}

bool are_concurrent(const Ln& l1, const Ln& l2, const Ln& l3) {
  const auto h = formula::cross(std::array{l1.a(), l1.b(), l1.c()}, std::array{l2.a(), l2.b(), l2.c()});
  return (h[0] * l3.a() + h[1] * l3.b() + h[2] * l3.c()).is_zero();
}

Tri Tri::make(const Pt& a1, const Pt& a2, const Pt& a3) {
  if (a1 == a2 || a2 == a3 || a1 == a3 || is_collinear(a1, a2, a3)) {
    throw Error(Errc::DegenerateTriangle,
                to_string(a1) + ", " + to_string(a2) + ", " + to_string(a3) + " are collinear");
  }
  return Tri({a1, a2, a3});
}

Ln Tri::side(int i) const { return line_through(vertex((i + 1) % 3), vertex((i + 2) % 3)); }

Num Tri::quadrance(int i) const {
  return neuberg::quadrance(vertex((i + 1) % 3), vertex((i + 2) % 3));
}

Num Tri::spread(int i) const { return neuberg::spread(side((i + 1) % 3), side((i + 2) % 3)); }

bool Tri::non_null() const {
  return !is_null(side(0)) && !is_null(side(1)) && !is_null(side(2));
}

}  // namespace neuberg
