#include "neuberg/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace neuberg {

std::string monomial_key(const Mono2& m) {
  std::string out;
  auto factor = [&out](const char* var, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor("x", m.i);
  factor("y", m.j);
  return out.empty() ? "1" : out;
}

std::string monomial_key(const Mono3& m) {
  std::string out;
  auto factor = [&out](const char* var, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor("X", m.i);
  factor("Y", m.j);
  factor("Z", m.k);
  return out.empty() ? "1" : out;
}

Poly2::Poly2(std::uint64_t p, unsigned degree_cap) : p_(p), cap_(degree_cap) {}

Poly2 Poly2::constant(Num c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(Num c, unsigned i, unsigned j) {
  Poly2 f(c.modulus());
  f.add_term(c, i, j);
  return f;
}

int Poly2::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

Num Poly2::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find(Mono2{i, j});
  return it == terms_.end() ? Num(0, p_) : it->second;
}

void Poly2::add_term(Num c, unsigned i, unsigned j) {
  if (c.modulus() != p_) throw Error(Errc::FieldMismatch, "coefficient from another field");
  if (c.is_zero()) return;
  if (i + j > cap_) {
    throw Error(Errc::DegreeBound,
                "degree " + std::to_string(i + j) + " exceeds cap " + std::to_string(cap_));
  }
  const Mono2 m{i, j};
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Num Poly2::eval(Num x, Num y) const {
  Num acc(0, p_);
  for (const auto& [m, c] : terms_) acc += c * x.pow(m.i) * y.pow(m.j);
  return acc;
}

std::vector<Num> Poly2::x_coefficients(Num y) const {
  const int deg = std::max(degree(), 0);
  std::vector<Num> out(static_cast<std::size_t>(deg) + 1, Num(0, p_));
  for (const auto& [m, c] : terms_) {
    out[static_cast<std::size_t>(deg) - m.i] += c * y.pow(m.j);
  }
  return out;
}

void Poly2::check_same(const Poly2& g) const {
  if (p_ != g.p_) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

Poly2 Poly2::operator+(const Poly2& g) const {
  check_same(g);
  Poly2 r(p_, std::max(cap_, g.cap_));
  r.terms_ = terms_;
  for (const auto& [m, c] : g.terms_) r.add_term(c, m.i, m.j);
  return r;
}

Poly2 Poly2::operator-(const Poly2& g) const { return *this + (-g); }

Poly2 Poly2::operator*(const Poly2& g) const {
  check_same(g);
  Poly2 r(p_, std::max(cap_, g.cap_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : g.terms_) r.add_term(c1 * c2, m1.i + m2.i, m1.j + m2.j);
  }
  return r;
}

Poly2 Poly2::operator*(Num c) const {
  Poly2 r(p_, cap_);
  for (const auto& [m, v] : terms_) r.add_term(v * c, m.i, m.j);
  return r;
}

Poly2 Poly2::operator+(Num c) const {
  Poly2 r = *this;
  r.add_term(c, 0, 0);
  return r;
}

Poly2 Poly2::operator-(Num c) const { return *this + (-c); }

Poly2 Poly2::operator-() const { return *this * Num(-1, p_); }

Poly2 Poly2::partial_x() const {
  Poly2 r(p_, cap_);
  for (const auto& [m, c] : terms_) {
    if (m.i > 0) r.add_term(c * static_cast<std::int64_t>(m.i), m.i - 1, m.j);
  }
  return r;
}

Poly2 Poly2::partial_y() const {
  Poly2 r(p_, cap_);
  for (const auto& [m, c] : terms_) {
    if (m.j > 0) r.add_term(c * static_cast<std::int64_t>(m.j), m.i, m.j - 1);
  }
  return r;
}

Poly2 Poly2::truncated(unsigned d) const {
  Poly2 r(p_, cap_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= d) r.add_term(c, m.i, m.j);
  }
  return r;
}

Poly2 Poly2::homogeneous_part(unsigned d) const {
  Poly2 r(p_, cap_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.add_term(c, m.i, m.j);
  }
  return r;
}

Poly2 Poly2::substitute(const Poly2& gx, const Poly2& gy) const {
  check_same(gx);
  check_same(gy);
  const unsigned cap = std::max({cap_, gx.cap_, gy.cap_});
  const unsigned d = static_cast<unsigned>(std::max(degree(), 0));
  std::vector<Poly2> xp(d + 1, Poly2(p_, cap)), yp(d + 1, Poly2(p_, cap));
  xp[0] = yp[0] = Poly2::constant(Num(1, p_));
  for (unsigned e = 1; e <= d; ++e) {
    xp[e] = xp[e - 1] * gx;
    yp[e] = yp[e - 1] * gy;
  }
  Poly2 r(p_, cap);
  for (const auto& [m, c] : terms_) r += xp[m.i] * yp[m.j] * c;
  return r;
}

Poly2 Poly2::translated(Num dx, Num dy) const {
  const Field f(p_);
  return substitute(Poly2::x(f) + dx, Poly2::y(f) + dy);
}

Num Poly2::leading_coeff() const {
  return terms_.empty() ? Num(0, p_) : terms_.begin()->second;
}

Poly2 Poly2::normalized() const {
  if (terms_.empty()) return *this;
  return *this * leading_coeff().inverse();
}

bool Poly2::proportional_to(const Poly2& g) const {
  if (is_zero() || g.is_zero()) return false;
  return normalized() == g.normalized();
}

std::string to_string(const Poly2& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string key = monomial_key(m);
    if (key == "1") {
      out += to_string(c);
    } else if (c.value() == 1) {
      out += key;
    } else {
      out += to_string(c) + "*" + key;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, const Field& f) : s_(s), f_(f) {}

  Poly2 parse() {
    Poly2 out(f_.p());
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      parse_term(out, sign);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  void parse_term(Poly2& out, std::int64_t sign) {
    Num coeff = f_(sign);
    unsigned ei = 0, ej = 0;
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= f_(static_cast<std::int64_t>(number() % f_.p()));
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(number());
        }
        (c == 'x' ? ei : ej) += e;
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (peek() == 'x' || peek() == 'y') continue;
      break;
    }
    if (!any) fail("empty term");
    out.add_term(coeff, ei, ej);
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(take() - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
    }
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }

  std::string_view s_;
  const Field& f_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly2(std::string_view text, const Field& f) { return PolyParser(text, f).parse(); }

Poly2 det3(const std::array<std::array<Poly2, 3>, 3>& m) {
  const auto minor = [&m](int r1, int c1, int r2, int c2) {
    return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
  };
  return m[0][0] * minor(1, 1, 2, 2) - m[0][1] * minor(1, 0, 2, 2) + m[0][2] * minor(1, 0, 2, 1);
}

Form3::Form3(std::uint64_t p, unsigned degree) : p_(p), d_(degree) {}

Num Form3::coeff(unsigned i, unsigned j, unsigned k) const {
  auto it = terms_.find(Mono3{i, j, k});
  return it == terms_.end() ? Num(0, p_) : it->second;
}

void Form3::add_term(Num c, unsigned i, unsigned j, unsigned k) {
  if (c.modulus() != p_) throw Error(Errc::FieldMismatch, "coefficient from another field");
  if (i + j + k != d_) {
    throw Error(Errc::DegreeMismatch, "monomial of degree " + std::to_string(i + j + k) +
                                          " in a form of degree " + std::to_string(d_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Mono3{i, j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Num Form3::eval(Num X, Num Y, Num Z) const {
  Num acc(0, p_);
  for (const auto& [m, c] : terms_) acc += c * X.pow(m.i) * Y.pow(m.j) * Z.pow(m.k);
  return acc;
}

Form3 Form3::partial(int var) const {
  Form3 r(p_, d_ == 0 ? 0 : d_ - 1);
  for (const auto& [m, c] : terms_) {
    const unsigned e = var == 0 ? m.i : var == 1 ? m.j : m.k;
    if (e == 0) continue;
    const Num dc = c * static_cast<std::int64_t>(e);
    if (var == 0) r.add_term(dc, m.i - 1, m.j, m.k);
    if (var == 1) r.add_term(dc, m.i, m.j - 1, m.k);
    if (var == 2) r.add_term(dc, m.i, m.j, m.k - 1);
  }
  return r;
}

std::array<Num, 3> Form3::gradient(const std::array<Num, 3>& v) const {
  std::array<Num, 3> g{Num(0, p_), Num(0, p_), Num(0, p_)};
  for (const auto& [m, c] : terms_) {
    if (m.i > 0) g[0] += c * static_cast<std::int64_t>(m.i) * v[0].pow(m.i - 1) * v[1].pow(m.j) * v[2].pow(m.k);
    if (m.j > 0) g[1] += c * static_cast<std::int64_t>(m.j) * v[0].pow(m.i) * v[1].pow(m.j - 1) * v[2].pow(m.k);
    if (m.k > 0) g[2] += c * static_cast<std::int64_t>(m.k) * v[0].pow(m.i) * v[1].pow(m.j) * v[2].pow(m.k - 1);
  }
  return g;
}

std::string to_string(const Form3& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string key = monomial_key(m);
    if (key == "1") {
      out += to_string(c);
    } else if (c.value() == 1) {
      out += key;
    } else {
      out += to_string(c) + "*" + key;
    }
  }
  return out;
}

Form3 homogenize(const Poly2& f, unsigned d) {
  if (f.degree() > static_cast<int>(d)) {
    throw Error(Errc::DegreeMismatch, "cannot homogenize degree " + std::to_string(f.degree()) +
                                          " to degree " + std::to_string(d));
  }
  Form3 F(f.modulus(), d);
  for (const auto& [m, c] : f.terms()) F.add_term(c, m.i, m.j, d - m.i - m.j);
  return F;
}

Poly2 dehomogenize(const Form3& F) {
  Poly2 f(F.modulus(), std::max(kDefaultDegreeCap, F.degree()));
  for (const auto& [m, c] : F.terms()) f.add_term(c, m.i, m.j);
  return f;
}

}  // namespace neuberg
