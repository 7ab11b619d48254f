#pragma once

/// Named points of a triangle that lie on its Neuberg cubic.

#include <optional>
#include <string>
#include <vector>

#include "neuberg/projective.hpp"
#include "neuberg/triangle.hpp"

namespace neuberg {

struct NamedPoint {
  std::string name;
  ProjPt point;
};

/// In a fixed order: I0..I3, A1..A3, S, S′, F, F′, O, C, Ā1..Ā3, E1..E3,
/// E1′..E3′, E1*..E3*, E1′*..E3′*, ∞e, ∞e*. Ā_i is A_i reflected in the
/// opposite side, E_i and E_i′ are the equilateral apexes on that side,
/// S and S′ the isodynamic points, F = S*, and ∞e the point at infinity of
/// the Euler line. Names whose point does not exist over the field are
/// left out.
std::vector<NamedPoint> named_points(const Tri& t);

/// All names of P joined with "=", in the order above; "" when unnamed.
std::string label_of(const std::vector<NamedPoint>& names, const ProjPt& P);

/// The point called `name`, if present.
std::optional<ProjPt> find_named(const std::vector<NamedPoint>& names, const std::string& name);

}  // namespace neuberg
