#include "neuberg/labels.hpp"

#include <functional>

#include "neuberg/error.hpp"

namespace neuberg {

namespace {

const char* const kIndex[3] = {"1", "2", "3"};

void add(std::vector<NamedPoint>& out, const std::string& name, const std::function<std::optional<ProjPt>()>& fn) {
  try {
    if (auto P = fn()) out.push_back({name, *P});
  } catch (const Error&) {
    // The point does not exist for this triangle or field.
  }
}

}  // namespace

std::vector<NamedPoint> named_points(const Tri& t) {
  std::vector<NamedPoint> out;
  for (int i = 0; i < 4; ++i) {
    add(out, "I" + std::to_string(i), [&]() -> std::optional<ProjPt> {
      return ProjPt(incenter_quadrangle(t).points[static_cast<std::size_t>(i)]);
    });
  }
  for (int i = 0; i < 3; ++i) {
    add(out, std::string("A") + kIndex[i], [&]() -> std::optional<ProjPt> { return ProjPt(t.vertex(i)); });
  }
  std::vector<Pt> iso;
  try {
    iso = isodynamic_points(t);
  } catch (const Error&) {
  }
  const char* const iso_names[2][2] = {{"S", "F"}, {"S′", "F′"}};
  for (std::size_t k = 0; k < 2 && k < iso.size(); ++k) add(out, iso_names[k][0], [&] { return std::optional(ProjPt(iso[k])); });
  for (std::size_t k = 0; k < 2 && k < iso.size(); ++k) {
    add(out, iso_names[k][1], [&] { return isogonal_conjugate(t, ProjPt(iso[k])); });
  }
  add(out, "O", [&] { return std::optional(ProjPt(orthocenter(t))); });
  add(out, "C", [&] { return std::optional(ProjPt(circumcenter(t))); });
  for (int i = 0; i < 3; ++i) {
    add(out, std::string("Ā") + kIndex[i], [&] { return std::optional(ProjPt(reflect_point(t.side(i), t.vertex(i)))); });
  }
  std::array<std::optional<std::pair<Pt, Pt>>, 3> eq;
  for (int i = 0; i < 3; ++i) {
    try {
      eq[static_cast<std::size_t>(i)] = equilateral_points(t, i);
    } catch (const Error&) {
    }
  }
  for (int primed = 0; primed < 2; ++primed) {
    for (int i = 0; i < 3; ++i) {
      const auto& e = eq[static_cast<std::size_t>(i)];
      if (!e) continue;
      const Pt P = primed ? e->second : e->first;
      add(out, std::string("E") + kIndex[i] + (primed ? "′" : ""), [&] { return std::optional(ProjPt(P)); });
    }
  }
  for (int primed = 0; primed < 2; ++primed) {
    for (int i = 0; i < 3; ++i) {
      const auto& e = eq[static_cast<std::size_t>(i)];
      if (!e) continue;
      const Pt P = primed ? e->second : e->first;
      add(out, std::string("E") + kIndex[i] + (primed ? "′*" : "*"), [&] { return isogonal_conjugate(t, ProjPt(P)); });
    }
  }
  std::optional<ProjPt> inf;
  try {
    const Ln e = euler_line(t);
    inf = ProjPt::make(e.b(), -e.a(), Num(0, t.modulus()));
  } catch (const Error&) {
  }
  if (inf) {
    add(out, "∞e", [&] { return inf; });
    add(out, "∞e*", [&] { return isogonal_conjugate(t, *inf); });
  }
  return out;
}

std::string label_of(const std::vector<NamedPoint>& names, const ProjPt& P) {
  std::string out;
  for (const NamedPoint& n : names) {
    if (n.point != P) continue;
    if (!out.empty()) out += "=";
    out += n.name;
  }
  return out;
}

std::optional<ProjPt> find_named(const std::vector<NamedPoint>& names, const std::string& name) {
  for (const NamedPoint& n : names) {
    if (n.name == name) return n.point;
  }
  return std::nullopt;
}

}  // namespace neuberg
