#include "neuberg/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "neuberg/conics.hpp"
#include "neuberg/cubic.hpp"
#include "neuberg/desmic.hpp"
#include "neuberg/error.hpp"
#include "neuberg/json_io.hpp"
#include "neuberg/labels.hpp"
#include "neuberg/neuberg.hpp"
#include "neuberg/svg.hpp"
#include "neuberg/verify.hpp"

namespace neuberg {

namespace {

// ---- input parsing ----

std::vector<long long> parse_ints(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, s.find(':') != std::string::npos ? ':' : ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(Errc::ParseError, "bad number '" + item + "' in " + what);
    out.push_back(v);
  }
  if (out.size() != n) {
    throw Error(Errc::ParseError, what + " needs " + std::to_string(n) + " numbers, got '" + s + "'");
  }
  return out;
}

Num num(const Field& f, long long v) { return f(static_cast<std::int64_t>(v)); }

// "x,y" is affine; "X:Y:Z" is projective.
ProjPt parse_point(const Field& f, const std::string& s) {
  if (s.find(':') != std::string::npos) {
    const auto v = parse_ints(s, 3, "point");
    return ProjPt::make(num(f, v[0]), num(f, v[1]), num(f, v[2]));
  }
  const auto v = parse_ints(s, 2, "point");
  return ProjPt(Pt(num(f, v[0]), num(f, v[1])));
}

Pt parse_affine(const Field& f, const std::string& s) {
  const auto v = parse_ints(s, 2, "point");
  return Pt(num(f, v[0]), num(f, v[1]));
}

Tri parse_triangle(const Field& f, const std::string& s) {
  const auto v = parse_ints(s, 6, "triangle");
  return Tri::make(Pt(num(f, v[0]), num(f, v[1])), Pt(num(f, v[2]), num(f, v[3])), Pt(num(f, v[4]), num(f, v[5])));
}

// ---- text helpers ----

// Residue with its negative alias when that reads better, e.g. "17 (= -6)".
std::string aliased(Num a) {
  const std::int64_t s = a.signed_value();
  if (s >= 0) return to_string(a);
  return to_string(a) + " (= " + std::to_string(s) + ")";
}

template <class T>
std::string join_str(const std::vector<T>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, std::string>) {
      out += v[i];
    } else {
      out += to_string(v[i]);
    }
  }
  return out;
}

std::string structure_str(const std::vector<std::uint64_t>& d) {
  if (d.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " x " : "") + std::string("Z/") + std::to_string(d[i]);
  return out;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- shared options ----

struct Settings {
  bool json = false;
  std::uint64_t max_enum = kDefaultMaxEnum;
};

struct CurveArgs {
  std::string curve;
  std::string triangle;
};

void add_curve_args(CLI::App* s, CurveArgs& a) {
  s->add_option("--curve", a.curve, "cubic in x, y, e.g. \"y^3 + x^2*y + 22*y^2 + 7*x*y + 9*x^2 + 13*y\"");
  s->add_option("--triangle", a.triangle, "x1,y1,x2,y2,x3,y3; use the Neuberg cubic of this triangle");
}

struct CurveSource {
  std::optional<Tri> tri;
  std::optional<Cubic> curve;
};

CurveSource load_curve(const Field& f, const CurveArgs& a) {
  if (a.curve.empty() == a.triangle.empty()) throw Error(Errc::InvalidInput, "give exactly one of --curve and --triangle");
  CurveSource src;
  if (!a.triangle.empty()) {
    src.tri = parse_triangle(f, a.triangle);
    src.curve = neuberg_cubic(*src.tri);
  } else {
    src.curve = Cubic::make(parse_poly2(a.curve, f));
  }
  return src;
}

std::vector<NamedPoint> names_for(const CurveSource& src) {
  return src.tri ? named_points(*src.tri) : std::vector<NamedPoint>{};
}

// ---- commands ----

int field_info(const Settings& s, std::uint64_t p, std::ostream& out) {
  const Field f(p);
  const auto squares = f.squares(s.max_enum);
  std::vector<Num> by_root;
  for (std::uint64_t k = 1; k <= (p - 1) / 2; ++k) by_root.push_back(f(static_cast<std::int64_t>(k)).pow(2));
  const auto info = [&](Num a) { return std::make_pair(is_square(a), sqrt(a)); };
  const auto [m1_sq, m1_roots] = info(f(-1));
  const auto [t_sq, t_roots] = info(f(3));
  const auto [m3_sq, m3_roots] = info(f(-3));
  if (s.json) {
    Json j = document("field-info");
    j["p"] = p;
    Json sq = Json::array(), br = Json::array();
    for (Num a : squares) sq.push_back(a.value());
    for (Num a : by_root) br.push_back(a.value());
    j["squares"] = sq;
    j["squares_by_root"] = br;
    auto entry = [](bool square, const std::vector<Num>& roots) {
      Json e;
      e["square"] = square;
      Json r = Json::array();
      for (Num a : roots) r.push_back(a.value());
      e["roots"] = r;
      return e;
    };
    j["minus_one"] = entry(m1_sq, m1_roots);
    j["three"] = entry(t_sq, t_roots);
    j["minus_three"] = entry(m3_sq, m3_roots);
    j["smallest_nonsquare"] = f.nonsquare().value();
    write_json(out, j);
    return kExitOk;
  }
  out << "p = " << p << "\n";
  out << "squares: " << join_str(squares) << "\n";
  out << "squares as k^2, k = 1.." << (p - 1) / 2 << ": " << join_str(by_root) << "\n";
  auto line = [&](const char* name, Num a, bool square, const std::vector<Num>& roots) {
    out << name << " = " << aliased(a) << ": " << (square ? "square, roots " + join_str(roots) : "nonsquare") << "\n";
  };
  line("-1", f(-1), m1_sq, m1_roots);
  line("3", f(3), t_sq, t_roots);
  line("-3", f(-3), m3_sq, m3_roots);
  out << "smallest nonsquare: " << to_string(f.nonsquare()) << "\n";
  return kExitOk;
}

template <class T, class Fn>
void maybe_text(std::ostream& out, const std::string& name, const Maybe<T>& m, Fn fmt) {
  out << "  " << name << ": " << (m.has_value() ? fmt(*m) : "undefined (" + m.reason + ")") << "\n";
}

template <class T, class Fn>
Json maybe_json(const Maybe<T>& m, Fn fmt) {
  if (m.has_value()) return fmt(*m);
  return Json{{"undefined", m.reason}};
}

int triangle_report(const Settings& s, const Tri& t, std::ostream& out) {
  const CenterReport c = center_report(t);
  Json j = document("triangle-report");
  j["p"] = t.modulus();
  j["triangle"] = to_json(t);
  Json sides = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json e;
    e["line"] = to_json(t.side(i));
    e["null"] = is_null(t.side(i));
    e["quadrance"] = to_json(t.quadrance(i));
    e["spread"] = to_json(t.spread(i));
    sides.push_back(e);
  }
  j["sides"] = sides;
  j["quadrea"] = to_json(quadrea(t));
  Json bis = Json::array();
  for (int v = 0; v < 3; ++v) {
    const auto b = vertex_bisectors(t, v);
    if (!b) {
      bis.push_back(nullptr);
      continue;
    }
    bis.push_back(Json::array({{{"line", to_json(b->first)}, {"spread", to_json(bisector_spread(t, v, b->first))}},
                               {{"line", to_json(b->second)}, {"spread", to_json(bisector_spread(t, v, b->second))}}}));
  }
  j["bisectors"] = bis;
  auto pt_j = [](const Pt& P) { return to_json(P); };
  auto ln_j = [](const Ln& l) { return to_json(l); };
  Json centers;
  centers["orthocenter"] = maybe_json(c.orthocenter, pt_j);
  centers["circumcenter"] = maybe_json(c.circumcenter, pt_j);
  centers["centroid"] = maybe_json(c.centroid, pt_j);
  centers["symmedian"] = maybe_json(c.symmedian, pt_j);
  centers["euler_line"] = maybe_json(c.euler, ln_j);
  centers["incenters"] = maybe_json(c.incenters, [](const std::array<Pt, 4>& q) {
    Json a = Json::array();
    for (const Pt& P : q) a.push_back(to_json(P));
    return a;
  });
  auto pair_j = [](const std::pair<Pt, Pt>& q) { return Json::array({to_json(q.first), to_json(q.second)}); };
  centers["isodynamic"] = maybe_json(c.isodynamic, pair_j);
  centers["fermat"] = maybe_json(c.fermat, pair_j);
  centers["lemoine_line"] = maybe_json(c.lemoine, ln_j);
  centers["brocard_line"] = maybe_json(c.brocard, ln_j);
  j["centers"] = centers;
  Json eq = Json::array();
  std::string eq_reason;
  for (int i = 0; i < 3; ++i) {
    try {
      const auto [e, e2] = equilateral_points(t, i);
      eq.push_back(Json::array({to_json(e), to_json(e2)}));
    } catch (const Error& e) {
      eq_reason = e.what();
    }
  }
  j["equilateral_points"] = eq_reason.empty() ? eq : Json{{"undefined", eq_reason}};
  Json apo = Json::array();
  std::string apo_reason;
  for (int i = 0; i < 3; ++i) {
    try {
      apo.push_back(to_json(apollonius_circle(t, i).circle));
    } catch (const Error& e) {
      apo_reason = e.what();
    }
  }
  j["apollonius_circles"] = apo_reason.empty() ? apo : Json{{"undefined", apo_reason}};
  if (s.json) {
    write_json(out, j);
    return kExitOk;
  }
  out << "triangle " << to_string(t.vertex(0)) << " " << to_string(t.vertex(1)) << " " << to_string(t.vertex(2))
      << " over F_" << t.modulus() << "\n";
  for (int i = 0; i < 3; ++i) {
    out << "  side " << i + 1 << ": " << to_string(t.side(i)) << (is_null(t.side(i)) ? " (null)" : "")
        << ", quadrance " << aliased(t.quadrance(i)) << ", spread " << aliased(t.spread(i)) << "\n";
  }
  out << "  quadrea: " << aliased(quadrea(t)) << "\n";
  for (int v = 0; v < 3; ++v) {
    const auto b = vertex_bisectors(t, v);
    out << "  bisectors at A" << v + 1 << ": ";
    if (!b) {
      out << "none (vertex spread is not a square)\n";
      continue;
    }
    out << to_string(b->first) << " spread " << aliased(bisector_spread(t, v, b->first)) << ", " << to_string(b->second)
        << " spread " << aliased(bisector_spread(t, v, b->second)) << "\n";
  }
  auto pt_s = [](const Pt& P) { return to_string(P); };
  auto ln_s = [](const Ln& l) { return to_string(l); };
  auto pair_s = [](const std::pair<Pt, Pt>& q) { return to_string(q.first) + " " + to_string(q.second); };
  maybe_text(out, "orthocenter", c.orthocenter, pt_s);
  maybe_text(out, "circumcenter", c.circumcenter, pt_s);
  maybe_text(out, "centroid", c.centroid, pt_s);
  maybe_text(out, "symmedian point", c.symmedian, pt_s);
  maybe_text(out, "Euler line", c.euler, ln_s);
  maybe_text(out, "incenters", c.incenters, [](const std::array<Pt, 4>& q) {
    return to_string(q[0]) + " " + to_string(q[1]) + " " + to_string(q[2]) + " " + to_string(q[3]);
  });
  maybe_text(out, "isodynamic points", c.isodynamic, pair_s);
  maybe_text(out, "Fermat points", c.fermat, pair_s);
  maybe_text(out, "Lemoine line", c.lemoine, ln_s);
  maybe_text(out, "Brocard line", c.brocard, ln_s);
  if (eq_reason.empty()) {
    for (int i = 0; i < 3; ++i) {
      const auto [e, e2] = equilateral_points(t, i);
      out << "  equilateral apexes on side " << i + 1 << ": " << to_string(e) << " " << to_string(e2) << "\n";
    }
  } else {
    out << "  equilateral apexes: undefined (" << eq_reason << ")\n";
  }
  if (apo_reason.empty()) {
    for (int i = 0; i < 3; ++i) out << "  Apollonius circle at A" << i + 1 << ": " << to_string(apollonius_circle(t, i).circle) << "\n";
  } else {
    out << "  Apollonius circles: undefined (" << apo_reason << ")\n";
  }
  return kExitOk;
}

int neuberg_cmd(const Settings& s, const Tri& t, std::ostream& out) {
  const NeubergConstruction nc = neuberg_construction(t);
  const Cubic& c = nc.cubic;
  const auto names = named_points(t);
  const auto pts = c.enumerate_points(s.max_enum);
  const bool nonsingular = c.is_nonsingular(s.max_enum);
  std::optional<CubicGroup> grp;
  if (nonsingular && !pts.empty()) {
    const auto I0 = find_named(names, "I0");
    try {
      grp.emplace(c, I0 && c.is_on(*I0) ? *I0 : pts.front(), s.max_enum);
    } catch (const Error&) {
      // A line component can hide from the rational singularity test.
    }
  }
  if (s.json) {
    Json j = document("neuberg");
    j["p"] = t.modulus();
    j["triangle"] = to_json(t);
    Json refl = Json::array(), lines = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      refl.push_back(Json::array({to_json(nc.reflections[i].first), to_json(nc.reflections[i].second)}));
      lines.push_back(Json::array({to_json(nc.lines[i][0]), to_json(nc.lines[i][1]), to_json(nc.lines[i][2])}));
    }
    j["reflections"] = refl;
    j["lines"] = lines;
    j["f"] = to_json(c.affine());
    j["nonsingular"] = nonsingular;
    j["point_count"] = pts.size();
    Json jp = Json::array();
    Json jl = Json::object();
    for (const ProjPt& P : pts) {
      jp.push_back(to_json(P));
      if (const std::string l = label_of(names, P); !l.empty()) jl[to_string(P)] = l;
    }
    j["points"] = jp;
    j["labels"] = jl;
    if (grp) {
      j["group"] = {{"base", to_json(grp->base())}, {"structure", grp->structure()}};
    } else {
      j["group"] = nullptr;
    }
    write_json(out, j);
    return kExitOk;
  }
  out << "Neuberg cubic of " << to_string(t.vertex(0)) << " " << to_string(t.vertex(1)) << " " << to_string(t.vertex(2))
      << " over F_" << t.modulus() << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  P" << i + 1 << " = [" << to_string(nc.reflections[i].first) << ", " << to_string(nc.reflections[i].second)
        << "]\n";
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  P" << i + 1 << "A" << i + 1 << " = <" << to_string(nc.lines[i][0]) << " : " << to_string(nc.lines[i][1])
        << " : " << to_string(nc.lines[i][2]) << ">\n";
  }
  out << "  equation: " << to_string(c.affine()) << " = 0\n";
  out << "  nonsingular: " << (nonsingular ? "yes" : "no") << "\n";
  out << "  points (" << pts.size() << "):\n";
  for (const ProjPt& P : pts) {
    const std::string l = label_of(names, P);
    out << "    " << to_string(P) << (l.empty() ? "" : "  " + l) << "\n";
  }
  if (grp) out << "  group with base " << to_string(grp->base()) << ": " << structure_str(grp->structure()) << "\n";
  return kExitOk;
}

struct GroupArgs {
  CurveArgs curve;
  std::string base;
  std::string x, y;
};

int group_cmd(const Settings& s, const Field& f, const GroupArgs& a, const std::string& op, std::ostream& out) {
  const CurveSource src = load_curve(f, a.curve);
  const Cubic& c = *src.curve;
  const auto names = names_for(src);
  ProjPt base;
  if (!a.base.empty()) {
    base = parse_point(f, a.base);
  } else if (const auto I0 = find_named(names, "I0"); I0 && c.is_on(*I0)) {
    base = *I0;
  } else {
    const auto pts = c.enumerate_points(s.max_enum);
    if (pts.empty()) throw Error(Errc::InvalidInput, "the curve has no points");
    base = pts.front();
  }
  const CubicGroup g(c, base, s.max_enum);
  Json j = document("group " + op);
  j["p"] = f.p();
  j["base"] = to_json(base);
  std::ostringstream text;
  text << "base " << to_string(base) << "\n";
  if (op == "mul") {
    const ProjPt X = parse_point(f, a.x), Y = parse_point(f, a.y);
    const ProjPt prod = g.mul(X, Y), st = c.star(X, Y);
    j["x"] = to_json(X);
    j["y"] = to_json(Y);
    j["star"] = to_json(st);
    j["product"] = to_json(prod);
    text << to_string(X) << " * " << to_string(Y) << " = " << to_string(st) << "\n";
    text << to_string(X) << " . " << to_string(Y) << " = " << to_string(prod) << "\n";
  } else if (op == "inv") {
    const ProjPt X = parse_point(f, a.x);
    j["x"] = to_json(X);
    j["inverse"] = to_json(g.inv(X));
    text << "inverse of " << to_string(X) << " = " << to_string(g.inv(X)) << "\n";
  } else if (op == "order") {
    j["group_order"] = g.order();
    text << "group order " << g.order() << "\n";
    if (!a.x.empty()) {
      const ProjPt X = parse_point(f, a.x);
      j["x"] = to_json(X);
      j["element_order"] = g.element_order(X);
      text << "order of " << to_string(X) << " = " << g.element_order(X) << "\n";
    }
  } else if (op == "structure") {
    j["group_order"] = g.order();
    j["invariant_factors"] = g.structure();
    text << "group order " << g.order() << ": " << structure_str(g.structure()) << "\n";
  } else {
    const ProjPt X = parse_point(f, a.x);
    const auto q = quadrangle_to(c, X, s.max_enum);
    j["target"] = to_json(X);
    Json pts = Json::array();
    for (const ProjPt& P : q) pts.push_back({{"point", to_json(P)}, {"label", label_of(names, P)}});
    j["quadrangle"] = pts;
    std::vector<std::string> parts;
    for (const ProjPt& P : q) {
      const std::string l = label_of(names, P);
      parts.push_back(to_string(P) + (l.empty() ? "" : " (" + l + ")"));
    }
    text << "quadrangle to " << to_string(X) << ": " << join_str(parts, ", ") << "\n";
  }
  if (s.json) {
    write_json(out, j);
  } else {
    out << text.str();
  }
  return kExitOk;
}

DesmicArray parse_rows(const Field& f, const std::vector<std::string>& rows) {
  if (rows.size() != 3) throw Error(Errc::InvalidInput, "give --row three times");
  DesmicArray d;
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<std::string> cells;
    std::stringstream in(rows[r]);
    std::string cell;
    while (std::getline(in, cell, ';')) cells.push_back(cell);
    if (cells.size() != 4) throw Error(Errc::ParseError, "row '" + rows[r] + "' needs 4 points separated by ';'");
    for (std::size_t c = 0; c < 4; ++c) d.rows[r][c] = parse_point(f, cells[c]);
  }
  return d;
}

void desmic_text(std::ostream& out, const DesmicArray& d, const std::vector<NamedPoint>& names) {
  for (const auto& row : d.rows) {
    out << " ";
    for (const ProjPt& P : row) {
      const std::string l = label_of(names, P);
      out << " " << to_string(P) << (l.empty() ? "" : " (" + l + ")");
    }
    out << "\n";
  }
}

void report_text(std::ostream& out, const DesmicReport& r, const DesmicArray& d) {
  out << "  predicted triples holding: " << r.predicted_holding << " of 16\n";
  out << "  collinear triples in all: " << r.collinear_count() << "\n";
  if (r.degenerate) out << "  degenerate: a point occurs in two cells\n";
  auto list = [&](const char* what, const std::vector<CellTriple>& ts) {
    for (const CellTriple& t : ts) {
      out << "  " << what << ":";
      for (const Cell& c : t) out << " (" << c.row << "," << c.col << ")=" << to_string(d.at(c));
      out << "\n";
    }
  };
  list("missing", r.missing);
  list("extra", r.extra);
  list("sharing a row", r.within_row);
  out << "  verdict: " << (r.ok() ? "Desmic" : r.aligned() ? "predicted triples hold, with extra collinearities" : "not Desmic")
      << "\n";
}

struct DesmicArgs {
  CurveArgs curve;
  std::vector<std::string> rows;
  std::vector<std::string> d;
  std::string triangle, P, Q;
};

int desmic_cmd(const Settings& s, const Field& f, const DesmicArgs& a, const std::string& op, std::ostream& out) {
  Json j = document("desmic " + op);
  j["p"] = f.p();
  std::vector<NamedPoint> names;
  DesmicArray d;
  DesmicReport rep;
  int code = kExitOk;
  if (op == "verify") {
    d = parse_rows(f, a.rows);
    std::optional<CurveSource> src;
    if (!a.curve.curve.empty() || !a.curve.triangle.empty()) src = load_curve(f, a.curve);
    if (src) names = names_for(*src);
    rep = desmic_verify(d, src ? &*src->curve : nullptr);
    j["incidence"] = src ? "curve" : "determinant";
    // Repeated rows can only be read through curve incidence.
    const bool pass = rep.degenerate ? (src && rep.aligned()) : rep.ok();
    code = pass ? kExitOk : kExitVerifyFailed;
  } else if (op == "from-collinear") {
    const CurveSource src = load_curve(f, a.curve);
    names = names_for(src);
    if (a.d.size() != 3) throw Error(Errc::InvalidInput, "give --d three times");
    d = desmic_from_collinear(*src.curve, parse_point(f, a.d[0]), parse_point(f, a.d[1]), parse_point(f, a.d[2]),
                              s.max_enum);
    rep = desmic_verify(d, &*src.curve);
  } else {
    const Tri t = parse_triangle(f, a.triangle);
    d = desmic_from_triangle(t.vertex(0), t.vertex(1), t.vertex(2), parse_affine(f, a.P), parse_affine(f, a.Q));
    rep = desmic_verify(d);
  }
  if (s.json) {
    j["array"] = to_json(d);
    Json labels = Json::array();
    for (const auto& row : d.rows) {
      Json r = Json::array();
      for (const ProjPt& P : row) r.push_back(label_of(names, P));
      labels.push_back(r);
    }
    j["labels"] = labels;
    j["report"] = to_json(rep);
    write_json(out, j);
    return code;
  }
  out << "Desmic array over F_" << f.p() << ":\n";
  desmic_text(out, d, names);
  report_text(out, rep, d);
  return code;
}

struct ConicArgs {
  long long a = 1, b = 0, c = 0;
  std::string point;
  long long x0 = 0, x1 = 0;
  std::uint64_t p_min = 5, p_max = 47, curves = 5, seed = 1;
};

int conics_cmd(const Settings& s, std::uint64_t p, const ConicArgs& a, const std::string& op, std::ostream& out) {
  Json j = document("tangent-conics " + op);
  if (op == "sweep") {
    const SweepReport rep = disjointness_sweep(a.p_min, a.p_max, a.curves, a.seed, s.max_enum);
    const bool holds = rep.theorem_holds();
    j["p_range"] = {a.p_min, a.p_max};
    j["curves_per_p"] = a.curves;
    j["seed"] = a.seed;
    j["theorem_holds"] = holds;
    j["primes"] = to_json(rep);
    if (s.json) {
      write_json(out, j);
    } else {
      for (const SweepPrime& sp : rep.primes) {
        std::uint64_t pairs = 0, inter = 0, dis = 0;
        for (const SweepCurve& c : sp.curves) {
          pairs += c.pairs_checked;
          inter += c.intersecting;
          dis += c.disagreements;
        }
        out << "p = " << sp.p << (sp.minus3_square ? "  -3 square    " : "  -3 nonsquare ") << sp.curves.size()
            << " curves, " << pairs << " pairs, " << inter << " intersecting, " << dis << " disagreements\n";
        for (const SweepCurve& c : sp.curves) {
          if (!c.witness) continue;
          out << "  witness on y^2 = x^3 + " << to_string(c.curve.b) << "x + " << to_string(c.curve.c) << ": x0 = "
              << to_string(c.witness->x0) << ", x1 = " << to_string(c.witness->x1) << " meet at "
              << join_str(c.witness->points) << "\n";
          break;
        }
      }
      out << (holds ? "every pair agrees with the discriminant criterion; no intersections where -3 is a nonsquare\n"
                    : "FAILED: see the counts above\n");
    }
    return holds ? kExitOk : kExitVerifyFailed;
  }
  const Field f(p);
  const auto w = WeierstrassCurve::make(num(f, a.a), num(f, a.b), num(f, a.c));
  j["p"] = p;
  j["curve"] = {{"a", to_json(w.a)}, {"b", to_json(w.b)}, {"c", to_json(w.c)}};
  if (op == "conic") {
    const Pt A = parse_affine(f, a.point);
    const Poly2 q = weierstrass_tangent_conic(w, A.x, A.y);
    const bool agrees = q == taylor_conic(w.poly(), A);
    j["point"] = to_json(A);
    j["conic"] = to_json(q);
    j["taylor_agrees"] = agrees;
    if (s.json) {
      write_json(out, j);
    } else {
      out << "tangent conic at " << to_string(A) << ": " << to_string(q) << " = 0\n";
      out << "matches the degree-2 Taylor truncation: " << (agrees ? "yes" : "no") << "\n";
    }
    return agrees ? kExitOk : kExitVerifyFailed;
  }
  const PairResult r = conic_pair_status(w, num(f, a.x0), num(f, a.x1));
  j["x0"] = to_json(num(f, a.x0));
  j["x1"] = to_json(num(f, a.x1));
  j["status"] = to_string(r.status);
  Json pts = Json::array();
  for (const Pt& P : r.points) pts.push_back(to_json(P));
  j["points"] = pts;
  if (s.json) {
    write_json(out, j);
  } else {
    out << "tangent conics over x0 = " << to_string(num(f, a.x0)) << " and x1 = " << to_string(num(f, a.x1)) << ": "
        << to_string(r.status);
    if (!r.points.empty()) out << " at " << join_str(r.points);
    out << "\n";
  }
  return kExitOk;
}

int verify_cmd(const Settings& s, std::ostream& out) {
  const auto checks = verify_paper(s.max_enum);
  const auto failed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  if (s.json) {
    Json j = document("verify-paper");
    Json arr = Json::array();
    for (const Check& c : checks) {
      arr.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"expected", c.expected}, {"got", c.got}});
    }
    j["checks"] = arr;
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    write_json(out, j);
  } else {
    for (const Check& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) out << "\n     expected: " << c.expected << "\n     got:      " << c.got;
      out << "\n";
    }
    out << checks.size() - failed << " of " << checks.size() << " checks pass\n";
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int plot_cmd(const Settings& s, const Field& f, const CurveArgs& a, const std::string& path, std::ostream& out) {
  const CurveSource src = load_curve(f, a);
  const auto zeros = affine_zeros(src.curve->affine(), s.max_enum);
  std::vector<PlotLabel> labels;
  const auto names = names_for(src);
  for (const Pt& P : zeros) {
    const std::string l = label_of(names, ProjPt(P));
    if (!l.empty()) labels.push_back({P, l});
  }
  const std::string svg = scatter_svg(f.p(), zeros, labels, to_string(src.curve->affine()) + " = 0 over F_" + std::to_string(f.p()));
  std::ofstream file(path);
  if (!file) throw Error(Errc::InvalidInput, "cannot write " + path);
  file << svg;
  if (s.json) {
    Json j = document("plot");
    j["p"] = f.p();
    j["out"] = path;
    j["points"] = zeros.size();
    j["labels"] = labels.size();
    write_json(out, j);
  } else {
    out << "wrote " << path << " (" << zeros.size() << " points, " << labels.size() << " labels)\n";
  }
  return kExitOk;
}

std::uint64_t env_max_enum() {
  const char* v = std::getenv("NEUBERG_MAX_ENUM");
  if (v == nullptr || *v == '\0') return kDefaultMaxEnum;
  std::size_t used = 0;
  std::uint64_t n = 0;
  try {
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || v[used] != '\0') throw Error(Errc::ParseError, std::string("NEUBERG_MAX_ENUM='") + v + "' is not a number");
  return n;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal geometry over prime fields: triangles, Neuberg cubics, group law, Desmic arrays, tangent conics",
               "neuberg-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;
  std::uint64_t max_enum_flag = 0;
  app.add_flag("--json", s.json, "machine-readable output");
  auto* max_opt = app.add_option("--max-enum", max_enum_flag, "bound on field enumeration (default 100000)");

  std::uint64_t p = 0;
  auto* field_info_cmd = app.add_subcommand("field-info", "squares and square roots in F_p");
  field_info_cmd->add_option("-p,--prime", p, "odd prime")->required();

  std::string tri_text;
  auto* tri_cmd = app.add_subcommand("triangle-report", "sides, spreads, bisectors and centers");
  tri_cmd->add_option("-p,--prime", p, "odd prime")->required();
  tri_cmd->add_option("--triangle", tri_text, "x1,y1,x2,y2,x3,y3")->required();

  auto* neu_cmd = app.add_subcommand("neuberg", "Neuberg cubic with labeled points");
  neu_cmd->add_option("-p,--prime", p, "odd prime")->required();
  neu_cmd->add_option("--triangle", tri_text, "x1,y1,x2,y2,x3,y3")->required();

  GroupArgs ga;
  auto* grp_cmd = app.add_subcommand("group", "chord-tangent group on a cubic");
  grp_cmd->require_subcommand(1);
  grp_cmd->add_option("-p,--prime", p, "odd prime")->required();
  add_curve_args(grp_cmd, ga.curve);
  grp_cmd->add_option("--base", ga.base, "identity element (default I0 for a triangle, else the first point)");
  auto* g_mul = grp_cmd->add_subcommand("mul", "X . Y and X * Y");
  g_mul->add_option("X", ga.x, "point x,y or X:Y:Z")->required();
  g_mul->add_option("Y", ga.y, "point")->required();
  auto* g_inv = grp_cmd->add_subcommand("inv", "inverse");
  g_inv->add_option("X", ga.x, "point")->required();
  auto* g_order = grp_cmd->add_subcommand("order", "group order, and element order when X is given");
  g_order->add_option("X", ga.x, "point");
  auto* g_struct = grp_cmd->add_subcommand("structure", "invariant factors");
  auto* g_quad = grp_cmd->add_subcommand("quadrangle", "points whose tangent passes through X");
  g_quad->add_option("X", ga.x, "point")->required();

  DesmicArgs da;
  auto* des_cmd = app.add_subcommand("desmic", "Desmic arrays");
  des_cmd->require_subcommand(1);
  des_cmd->add_option("-p,--prime", p, "odd prime")->required();
  auto* d_verify = des_cmd->add_subcommand("verify", "count collinear triples of a 3x4 array");
  d_verify->add_option("--row", da.rows, "four points separated by ';' (give three times)")->required();
  add_curve_args(d_verify, da.curve);
  auto* d_coll = des_cmd->add_subcommand("from-collinear", "array from three collinear curve points");
  add_curve_args(d_coll, da.curve);
  d_coll->add_option("--d", da.d, "point (give three times)")->required();
  auto* d_tri = des_cmd->add_subcommand("from-triangle", "array from a triangle and two points");
  d_tri->add_option("--triangle", da.triangle, "x1,y1,x2,y2,x3,y3")->required();
  d_tri->add_option("--P", da.P, "x,y")->required();
  d_tri->add_option("--Q", da.Q, "x,y")->required();

  ConicArgs ca;
  auto* con_cmd = app.add_subcommand("tangent-conics", "tangent conics of y^2 = ax^3 + bx + c");
  con_cmd->require_subcommand(1);
  auto* c_conic = con_cmd->add_subcommand("conic", "tangent conic at a point");
  auto* c_pair = con_cmd->add_subcommand("pair", "identical, disjoint or intersecting");
  for (auto* sub : {c_conic, c_pair}) {
    sub->add_option("-p,--prime", p, "odd prime")->required();
    sub->add_option("-a", ca.a, "coefficient of x^3")->default_val(1);
    sub->add_option("-b", ca.b, "coefficient of x")->default_val(0);
    sub->add_option("-c", ca.c, "constant")->default_val(0);
  }
  c_conic->add_option("--point", ca.point, "x,y on the curve")->required();
  c_pair->add_option("--x0", ca.x0, "abscissa of the first base point")->required();
  c_pair->add_option("--x1", ca.x1, "abscissa of the second base point")->required();
  auto* c_sweep = con_cmd->add_subcommand("sweep", "exhaustive check over a range of primes");
  c_sweep->add_option("--p-min", ca.p_min, "smallest prime")->default_val(5);
  c_sweep->add_option("--p-max", ca.p_max, "largest prime")->default_val(47);
  c_sweep->add_option("--curves", ca.curves, "curves per prime")->default_val(5);
  c_sweep->add_option("--seed", ca.seed, "seed for curve sampling")->default_val(1);

  app.add_subcommand("verify-paper", "recompute the F_23 example and compare");

  CurveArgs pa;
  std::string out_path;
  auto* plot = app.add_subcommand("plot", "SVG scatter of a curve's affine points");
  plot->add_option("-p,--prime", p, "odd prime")->required();
  add_curve_args(plot, pa);
  plot->add_option("--out", out_path, "SVG file to write")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    s.max_enum = max_opt->count() > 0 ? max_enum_flag : env_max_enum();
    if (field_info_cmd->parsed()) return field_info(s, p, out);
    if (tri_cmd->parsed()) return triangle_report(s, parse_triangle(Field(p), tri_text), out);
    if (neu_cmd->parsed()) return neuberg_cmd(s, parse_triangle(Field(p), tri_text), out);
    if (grp_cmd->parsed()) {
      const std::string op = g_mul->parsed() ? "mul" : g_inv->parsed() ? "inv" : g_order->parsed() ? "order"
                             : g_struct->parsed() ? "structure" : "quadrangle";
      return group_cmd(s, Field(p), ga, op, out);
    }
    if (des_cmd->parsed()) {
      const std::string op = d_verify->parsed() ? "verify" : d_coll->parsed() ? "from-collinear" : "from-triangle";
      return desmic_cmd(s, Field(p), da, op, out);
    }
    if (con_cmd->parsed()) {
      const std::string op = c_sweep->parsed() ? "sweep" : c_conic->parsed() ? "conic" : "pair";
      return conics_cmd(s, p, ca, op, out);
    }
    if (plot->parsed()) return plot_cmd(s, Field(p), pa, out_path, out);
    return verify_cmd(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace neuberg
