#include "neuberg/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>

#include "neuberg/cubic.hpp"
#include "neuberg/desmic.hpp"
#include "neuberg/error.hpp"
#include "neuberg/golden.hpp"
#include "neuberg/labels.hpp"
#include "neuberg/neuberg.hpp"

namespace neuberg {

namespace {

using golden::XY;
using golden::XYZ;

class Recorder {
 public:
  void add(std::string name, bool pass, std::string expected, std::string got) {
    checks_.push_back({std::move(name), pass, std::move(expected), std::move(got)});
  }

  template <class T>
  void equal(std::string name, const T& expected, const T& got) {
    add(std::move(name), expected == got, str(expected), str(got));
  }

  // Runs fn; an exception becomes a failed check carrying its message.
  template <class Fn>
  void guarded(const std::string& name, Fn fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(name, false, "no error", e.what());
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

  static std::string str(Num a) { return to_string(a); }
  static std::string str(const Pt& a) { return to_string(a); }
  static std::string str(const Ln& l) { return to_string(l); }
  static std::string str(const ProjPt& P) { return to_string(P); }
  static std::string str(const ProjLine& l) { return to_string(l); }
  static std::string str(const Poly2& f) { return to_string(f); }
  static std::string str(bool b) { return b ? "true" : "false"; }
  static std::string str(std::size_t n) { return std::to_string(n); }
  static std::string str(const std::string& s) { return s; }
  template <class T>
  static std::string str(const std::vector<T>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + str(v[i]);
    return out + "}";
  }
  template <class T>
  static std::string str(const std::optional<T>& v) {
    return v ? str(*v) : "none";
  }
  template <class T>
  static std::string str(const std::set<T>& s) {
    return str(std::vector<T>(s.begin(), s.end()));
  }

 private:
  std::vector<Check> checks_;
};

Pt pt(const Field& f, const XY& a) { return Pt(f(a.x), f(a.y)); }
ProjPt ppt(const Field& f, const XY& a) { return ProjPt(pt(f, a)); }
ProjPt ppt(const Field& f, const XYZ& a) { return ProjPt::make(f(a.X), f(a.Y), f(a.Z)); }
Ln line(const Field& f, const std::array<long, 3>& v) { return Ln::make(f(v[0]), f(v[1]), f(v[2])); }

Poly2 linear(const Field& f, const golden::Linear& v) {
  Poly2 g(f.p());
  g.add_term(f(v[0]), 1, 0);
  g.add_term(f(v[1]), 0, 1);
  g.add_term(f(v[2]), 0, 0);
  return g;
}

Poly2 poly(const Field& f, const std::vector<std::array<long, 3>>& terms) {
  Poly2 g(f.p());
  for (const auto& t : terms) g.add_term(f(t[0]), static_cast<unsigned>(t[1]), static_cast<unsigned>(t[2]));
  return g;
}

// l = k * m entrywise for a single nonzero k.
bool proportional(const std::array<Poly2, 3>& l, const std::array<Poly2, 3>& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (m[i].is_zero()) continue;
    const auto& [mono, c] = *m[i].terms().begin();
    const Num k = l[i].coeff(mono.i, mono.j) / c;
    if (k.is_zero()) return false;
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(l[j] == m[j] * k)) return false;
    }
    return true;
  }
  return false;
}

std::string str3(const std::array<Poly2, 3>& l) {
  return "<" + to_string(l[0]) + " : " + to_string(l[1]) + " : " + to_string(l[2]) + ">";
}

// Resolves "[x,y]", a named point, or a name followed by "*" (conjugate).
ProjPt resolve(const std::string& token, const std::vector<NamedPoint>& names, const Tri& t) {
  const Field f(t.modulus());
  if (!token.empty() && token.front() == '[') {
    long x = 0, y = 0;
    if (std::sscanf(token.c_str(), "[%ld,%ld]", &x, &y) != 2) throw Error(Errc::ParseError, token);
    return ProjPt(Pt(f(x), f(y)));
  }
  if (auto P = find_named(names, token)) return *P;
  if (token.size() > 1 && token.back() == '*') {
    const ProjPt base = resolve(token.substr(0, token.size() - 1), names, t);
    if (auto c = isogonal_conjugate(t, base)) return *c;
  }
  throw Error(Errc::InvalidInput, "unknown point " + token);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<Check> verify_paper(std::uint64_t max_enum) {
  const golden::Example g;
  const Field f(golden::kP);
  Recorder r;

  // Field facts.
  {
    std::vector<Num> by_root, printed;
    for (long k = 1; k <= 11; ++k) by_root.push_back(f(k) * f(k));
    for (long s : g.squares) printed.push_back(f(s));
    r.equal("squares as k^2 for k = 1..11", printed, by_root);
    std::vector<Num> sorted = printed;
    std::sort(sorted.begin(), sorted.end());
    r.equal("set of nonzero squares", sorted, f.squares(max_enum));
    r.equal("-1 is a square", g.minus_one_square, is_square(f(-1)));
    r.equal("3 = 7^2", f(3), f(g.root_of_three) * f(g.root_of_three));
  }

  // The reference triangle comes from the incenters alone.
  const Tri inc = Tri::make(pt(f, g.incenters[0]), pt(f, g.incenters[1]), pt(f, g.incenters[2]));
  r.equal("I0 = orthocenter of I1 I2 I3", pt(f, g.orthocenter), orthocenter(inc));
  const Tri t = orthic_triangle(inc);
  const char* const vname[3] = {"A1", "A2", "A3"};
  for (int i = 0; i < 3; ++i) {
    r.equal(std::string("altitude foot ") + vname[i], pt(f, g.feet[static_cast<std::size_t>(i)]), t.vertex(i));
  }
  const Pt I0 = orthocenter(inc);

  // Sides, spreads and bisectors.
  r.equal("line A1A2", line(f, g.side_lines[0]), line_through(t.vertex(0), t.vertex(1)));
  r.equal("line A2A3", line(f, g.side_lines[1]), line_through(t.vertex(1), t.vertex(2)));
  r.equal("line A1A3 (printed as A1A2)", line(f, g.side_lines[2]), line_through(t.vertex(0), t.vertex(2)));
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.equal(std::string("spread s") + std::to_string(i + 1), f(g.spreads[k]), t.spread(i));
    const Pt A = t.vertex(i);
    const Ln bis = line_through(A, I0);
    const Num s1 = spread(bis, line_through(A, t.vertex((i + 1) % 3)));
    const Num s2 = spread(bis, line_through(A, t.vertex((i + 2) % 3)));
    r.equal(std::string("spread of A") + std::to_string(i + 1) + "I0 with the first side", f(g.bisector_spreads[k]), s1);
    r.equal(std::string("spread of A") + std::to_string(i + 1) + "I0 with the second side", f(g.bisector_spreads[k]), s2);
    r.equal(std::string("S2 of bisector spread at A") + std::to_string(i + 1), f(g.spreads[k]),
            spread_poly_s2(f(g.bisector_spreads[k])));
  }

  // The cubic.
  const NeubergConstruction nc = neuberg_construction(t);
  const Cubic& curve = nc.cubic;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string n = "P" + std::to_string(i + 1);
    r.equal("reflection map " + n + " x", linear(f, g.reflections[i][0]), nc.reflections[i].first);
    r.equal("reflection map " + n + " y", linear(f, g.reflections[i][1]), nc.reflections[i].second);
    const std::array<Poly2, 3> printed{linear(f, g.joins[i][0]), linear(f, g.joins[i][1]), linear(f, g.joins[i][2])};
    r.add("line " + n + "A" + std::to_string(i + 1), proportional(nc.lines[i], printed), str3(printed),
          str3(nc.lines[i]));
  }
  const Poly2 eq1 = poly(f, g.cubic);
  r.equal("cubic equation", eq1, curve.affine());
  {
    const Poly2 tx = poly(f, g.tangent_x), ty = poly(f, g.tangent_y), tc = poly(f, g.tangent_c);
    std::vector<ProjPt> bad;
    std::size_t n = 0;
    for (const Pt& P : affine_zeros(curve.affine(), max_enum)) {
      ++n;
      const auto l = ProjLine::make(tx.eval(P), ty.eval(P), tc.eval(P));
      if (!(l == curve.tangent_line(ProjPt(P)))) bad.push_back(ProjPt(P));
    }
    r.add("tangent line formula at every affine point", bad.empty() && n > 0, "{}", Recorder::str(bad));
  }
  {
    const ConjugationMap printed{poly(f, g.conj_X), poly(f, g.conj_Y), poly(f, g.conj_Z)};
    const ConjugationMap got = isogonal_map(t);
    r.add("isogonal conjugate formula", printed.equivalent(got),
          "[" + to_string(printed.X) + ", " + to_string(printed.Y) + "] / (" + to_string(printed.Z) + ")",
          "[" + to_string(got.X) + ", " + to_string(got.Y) + "] / (" + to_string(got.Z) + ")");
    const Poly2 cond = Poly2::y(f) * printed.Z - printed.Y;
    r.add("y = Y/Z is the cubic", cond.proportional_to(eq1), to_string(eq1), to_string(cond.normalized()));
    r.add("Euler-parallel locus is the cubic", euler_parallel_locus(t).proportional_to(eq1), to_string(eq1),
          to_string(euler_parallel_locus(t)));
  }
  r.equal("nonsingular", true, curve.is_nonsingular(max_enum));
  r.equal("affine point count", g.affine_point_count, affine_zeros(curve.affine(), max_enum).size());
  r.equal("points at infinity", std::vector<ProjPt>{ppt(f, g.infinity_e)}, curve.infinite_points(max_enum));

  // The point table and its labels.
  const auto names = named_points(t);
  {
    std::vector<ProjPt> printed;
    for (const auto& e : g.table) printed.push_back(ppt(f, e.point));
    std::sort(printed.begin(), printed.end());
    r.equal("all points of the curve", printed, curve.enumerate_points(max_enum));
    for (const auto& e : g.table) {
      if (e.label.empty()) continue;
      const ProjPt P = ppt(f, e.point);
      for (const std::string& token : split(e.label, '=')) {
        const std::string name = "table label " + to_string(P) + " = " + token;
        r.guarded(name, [&] { r.equal(name, P, resolve(token, names, t)); });
      }
    }
  }

  // Group law with base I0.
  const ProjPt inf = ppt(f, g.infinity_e);
  const ProjPt pI0(I0);
  const std::array<ProjPt, 3> pI{ProjPt(inc.vertex(0)), ProjPt(inc.vertex(1)), ProjPt(inc.vertex(2))};
  r.equal("I0 * I0", inf, curve.star(pI0, pI0));
  const CubicGroup grp(curve, pI0, max_enum);
  {
    std::vector<ProjPt> order_two;
    for (const ProjPt& X : grp.points()) {
      if (X != pI0 && curve.star(X, X) == inf) order_two.push_back(X);
    }
    r.equal("points of order two", std::vector<ProjPt>{pI[0], pI[2], pI[1]}, order_two);
    bool klein = true;
    for (const ProjPt& X : {pI0, pI[0], pI[1], pI[2]}) {
      for (const ProjPt& Y : {pI0, pI[0], pI[1], pI[2]}) {
        const ProjPt Z = grp.mul(X, Y);
        klein = klein && (Z == pI0 || Z == pI[0] || Z == pI[1] || Z == pI[2]);
      }
      klein = klein && grp.mul(X, X) == pI0;
    }
    r.equal("incenters form a Klein 4-group", true, klein);
    for (int i = 0; i < 3; ++i) {
      r.equal(std::string(vname[i]) + " = I" + std::to_string((i + 1) % 3 + 1) + " * I" + std::to_string((i + 2) % 3 + 1),
              ProjPt(t.vertex(i)), curve.star(pI[static_cast<std::size_t>((i + 1) % 3)], pI[static_cast<std::size_t>((i + 2) % 3)]));
    }
    std::vector<ProjPt> bad;
    for (const ProjPt& X : grp.points()) {
      const auto c = isogonal_conjugate(t, X);
      if (c && *c != grp.inv(X)) bad.push_back(X);
      if (curve.star(X, inf) != grp.inv(X)) bad.push_back(X);
    }
    r.add("inverse = X * ∞e = X*", bad.empty(), "{}", Recorder::str(bad));
  }
  r.guarded("recovery", [&] {
    const auto rec = recover_triangle(curve, max_enum);
    const std::set<ProjPt> want_i{pI0, pI[0], pI[1], pI[2]};
    r.equal("recovered incenters", want_i, std::set<ProjPt>(rec.incenters.begin(), rec.incenters.end()));
    std::set<ProjPt> want_a, got_a;
    for (int i = 0; i < 3; ++i) {
      want_a.insert(ProjPt(t.vertex(i)));
      got_a.insert(ProjPt(rec.orthic.vertex(i)));
    }
    r.equal("recovered triangle", want_a, got_a);
    r.equal("asymptote parallel to the Euler line", true,
            rec.asymptote.affine().has_value() && is_parallel(*rec.asymptote.affine(), euler_line(t)));
  });

  // Named points.
  for (int i = 0; i < 3; ++i) {
    r.equal(std::string("Ā") + std::to_string(i + 1), pt(f, g.reflected_vertices[static_cast<std::size_t>(i)]),
            reflect_point(t.side(i), t.vertex(i)));
  }
  r.equal("orthocenter O", pt(f, g.O), orthocenter(t));
  r.equal("circumcenter C", pt(f, g.C), circumcenter(t));
  r.equal("O* = C", std::optional<Pt>(pt(f, g.C)), isogonal_conjugate(t, orthocenter(t)));
  r.equal("Euler line y = 21", Ln::make(f(0), f(1), -f(g.euler_y)), euler_line(t));
  r.equal("Euler line meets infinity at ∞e", true, ProjLine(euler_line(t)).contains(inf));
  r.equal("∞e*", std::optional<ProjPt>(ppt(f, g.infinity_e_conjugate)), isogonal_conjugate(t, inf));

  std::array<std::pair<Pt, Pt>, 3> eq;
  for (int i = 0; i < 3; ++i) eq[static_cast<std::size_t>(i)] = equilateral_points(t, i);
  {
    const Pt A1 = t.vertex(0), A3 = t.vertex(2), E2 = eq[1].first, E2p = eq[1].second;
    const Num q = f(g.equilateral_quadrance);
    const std::vector<Num> got{quadrance(A1, A3), quadrance(A1, E2), quadrance(A3, E2), quadrance(A1, E2p),
                               quadrance(A3, E2p)};
    r.equal("equilateral quadrances on A1A3", std::vector<Num>(5, q), got);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + 1);
    r.equal("E" + k, pt(f, g.E[i]), eq[i].first);
    r.equal("E" + k + "′", pt(f, g.E_primed[i]), eq[i].second);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string k = std::to_string(i + 1);
    r.equal("E" + k + "*", std::optional<Pt>(pt(f, g.E_star[i])), isogonal_conjugate(t, eq[i].first));
    r.equal("E" + k + "′*", std::optional<Pt>(pt(f, g.E_primed_star[i])), isogonal_conjugate(t, eq[i].second));
  }
  {
    const auto n = napoleon(t);
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string k = std::to_string(i + 1);
      r.equal("G" + k, pt(f, g.G[i]), n.unprimed[i]);
      r.equal("G" + k + "′", pt(f, g.G_primed[i]), n.primed[i]);
    }
    std::vector<Num> q, qp;
    for (std::size_t i = 0; i < 3; ++i) {
      q.push_back(quadrance(n.unprimed[i], n.unprimed[(i + 1) % 3]));
      qp.push_back(quadrance(n.primed[i], n.primed[(i + 1) % 3]));
    }
    r.equal("Napoleon quadrances", std::vector<Num>(3, f(g.napoleon_quadrance)), q);
    r.equal("Napoleon quadrances (primed)", std::vector<Num>(3, f(g.napoleon_quadrance_primed)), qp);
  }
  {
    const auto a1 = apollonius_circle(t, 0);
    r.equal("bisector feet X1, Y1 on A2A3",
            std::set<Pt>{pt(f, g.bisector_feet_A1[0]), pt(f, g.bisector_feet_A1[1])},
            std::set<Pt>{a1.foot_first, a1.foot_second});
    for (int i = 0; i < 3; ++i) {
      const auto& c = g.apollonius[static_cast<std::size_t>(i)];
      const Circle want{Pt(f(c[0]), f(c[1])), f(c[2])};
      const Circle got = apollonius_circle(t, i).circle;
      r.add(std::string("Apollonius circle at A") + std::to_string(i + 1),
            want.center == got.center && want.quadrance == got.quadrance, to_string(want), to_string(got));
    }
  }
  const auto iso = isodynamic_points(t);
  r.equal("isodynamic points S, S′", std::vector<Pt>{pt(f, g.S), pt(f, g.S_primed)}, iso);
  const auto lines = special_lines(t);
  r.equal("Lemoine line", line(f, g.lemoine), lines.lemoine);
  {
    bool on = true;
    for (int i = 0; i < 3; ++i) on = on && line(f, g.lemoine).contains(apollonius_circle(t, i).circle.center);
    r.equal("Apollonius centers on the Lemoine line", true, on);
  }
  r.equal("F = S*", std::optional<Pt>(pt(f, g.F)), isogonal_conjugate(t, pt(f, g.S)));
  r.equal("F′ = S′*", std::optional<Pt>(pt(f, g.F_primed)), isogonal_conjugate(t, pt(f, g.S_primed)));
  r.equal("F perspector of A and E", std::optional<Pt>(pt(f, g.F)),
          perspector(t, Tri::make(eq[0].first, eq[1].first, eq[2].first)));
  r.equal("F′ perspector of A and E′", std::optional<Pt>(pt(f, g.F_primed)),
          perspector(t, Tri::make(eq[0].second, eq[1].second, eq[2].second)));
  r.equal("Brocard line", line(f, g.brocard), lines.brocard);
  r.equal("K = G*", std::optional<Pt>(pt(f, g.K)), isogonal_conjugate(t, centroid(t)));
  {
    const Ln b = line(f, g.brocard);
    r.equal("Brocard line through C, K, S, S′", true,
            b.contains(circumcenter(t)) && b.contains(pt(f, g.K)) && b.contains(pt(f, g.S)) &&
                b.contains(pt(f, g.S_primed)));
    r.equal("Brocard line perpendicular to Lemoine line", true, is_perpendicular(b, line(f, g.lemoine)));
  }

  // Quadrangles.
  for (std::size_t k = 0; k < g.quadrangles.size(); ++k) {
    const auto& q = g.quadrangles[k];
    const std::string name = "quadrangle " + q.text;
    r.guarded(name, [&] {
      std::vector<ProjPt> want;
      for (const auto& token : q.points) want.push_back(resolve(token, names, t));
      std::sort(want.begin(), want.end());
      const ProjPt target = ppt(f, q.target);
      const auto got = quadrangle_to(curve, target, max_enum);
      std::string got_s = Recorder::str(got);
      if (got != want) {
        // Name the point whose quadrangle the printed points do form, if any.
        for (const ProjPt& P : grp.points()) {
          if (quadrangle_to(curve, P, max_enum) == want ||
              curve.tangential_preimages(P, max_enum) == want) {
            got_s += "; the printed points are the tangential preimages of " + to_string(P);
            break;
          }
        }
      }
      r.add(name, got == want, Recorder::str(want), got_s);
    });
  }

  // Desmic tables.
  for (std::size_t k = 0; k < g.desmic.size(); ++k) {
    const std::string tag = "Desmic table " + std::to_string(k + 1);
    r.guarded(tag, [&] {
      DesmicArray d;
      for (std::size_t row = 0; row < 3; ++row) {
        for (std::size_t col = 0; col < 4; ++col) d.rows[row][col] = resolve(g.desmic[k].cells[row][col], names, t);
      }
      const DesmicReport plain = desmic_verify(d);
      const DesmicReport aware = desmic_verify(d, &curve);
      if (plain.degenerate) {
        // Repeated rows: read incidence on the curve, where a repeated point
        // is a tangency, and compare only one-point-per-row triples.
        r.equal(tag + ": repeated rows flagged degenerate", true, aware.degenerate);
        r.add(tag + ": the 16 predicted triples hold on the curve", aware.aligned(), "16 predicted, 0 other",
              std::to_string(aware.predicted_holding) + " predicted, " + std::to_string(aware.extra.size()) + " other");
      } else {
        std::string got = std::to_string(plain.collinear_count()) + " (" + std::to_string(plain.predicted_holding) +
                          " predicted";
        for (const CellTriple& c : plain.within_row) {
          got += "; also " + to_string(d.at(c[0])) + " " + to_string(d.at(c[1])) + " " + to_string(d.at(c[2]));
        }
        for (const CellTriple& c : plain.extra) {
          got += "; also " + to_string(d.at(c[0])) + " " + to_string(d.at(c[1])) + " " + to_string(d.at(c[2]));
        }
        got += ")";
        r.add(tag + ": exactly 16 collinear triples", plain.ok(), std::to_string(g.desmic_collinearities), got);
      }
      const DesmicArray built = desmic_from_collinear(curve, d.rows[0][3], d.rows[1][3], d.rows[2][3], max_enum);
      bool same = true;
      for (std::size_t row = 0; row < 3; ++row) {
        std::set<ProjPt> a(d.rows[row].begin(), d.rows[row].end()), b(built.rows[row].begin(), built.rows[row].end());
        same = same && a == b;
      }
      if (!plain.degenerate) same = same && equivalent(d, built);
      r.equal(tag + ": rebuilt from its D column", true, same);
    });
  }
  return r.take();
}

}  // namespace neuberg
