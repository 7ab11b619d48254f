#pragma once

/// Published values of the worked example over F_23, stored as printed.
/// Signed entries such as -6 are kept signed and reduced when compared.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace neuberg::golden {

inline constexpr std::uint64_t kP = 23;

struct XY {
  long x, y;
};

/// Projective [X:Y:Z]; affine entries have Z = 1.
struct XYZ {
  long X, Y, Z;
};

struct Labeled {
  XYZ point;
  std::string label;  // "" when unlabeled; synonyms joined by "="
};

/// Coefficients (cx, cy, c0) of cx*x + cy*y + c0.
using Linear = std::array<long, 3>;

struct Quadrangle {
  std::vector<std::string> points;
  XYZ target;
  std::string text;
};

struct DesmicTable {
  std::array<std::array<std::string, 4>, 3> cells;  // names, or "[x,y]"
};

/// Data of the example, in the order it is published.
struct Example {
  std::vector<long> squares{1, 4, 9, 16, 2, 13, 3, 18, 12, 8, 6};
  bool minus_one_square = false;
  long root_of_three = 7;

  std::array<XY, 3> incenters{{{6, 4}, {22, 22}, {21, 12}}};  // I1, I2, I3
  XY orthocenter{0, 0};                                       // I0
  std::array<XY, 3> feet{{{13, 1}, {5, 5}, {2, 11}}};         // A1, A2, A3

  /// A1A2, A2A3, and the third side (printed with the label A1A2).
  std::array<std::array<long, 3>, 3> side_lines{{{3, 6, 1}, {6, 3, 1}, {12, 4, 1}}};
  std::array<long, 3> spreads{12, 16, 6};
  std::array<long, 3> bisector_spreads{5, -6, -7};

  /// P_i = [first, second] as linear forms in x, y.
  std::array<std::array<Linear, 2>, 3> reflections{{
      {{{4, 13, 12}, {13, 19, 6}}},
      {{{13, 4, 1}, {4, 10, 8}}},
      {{{19, 13, 6}, {13, 4, 12}}},
  }};
  /// Lines P_i A_i as <l0 : l1 : l2> with linear-form entries.
  std::array<std::array<Linear, 3>, 3> joins{{
      {{{13, 19, 5}, {19, 10, 1}, {19, 19, 3}}},
      {{{4, 10, 3}, {10, 19, 4}, {22, 16, 11}}},
      {{{13, 4, 1}, {4, 10, 19}, {22, 20, 19}}},
  }};

  /// y^3 + x^2 y + 22 y^2 + 7 x y + 9 x^2 + 13 y, as (coefficient, i, j) for x^i y^j.
  std::vector<std::array<long, 3>> cubic{{1, 0, 3}, {1, 2, 1}, {22, 0, 2}, {7, 1, 1}, {9, 2, 0}, {13, 0, 1}};

  /// Tangent at [a, b]: x*(18a + 7b + 2ab) + y*(7a + 21b + a^2 + 3b^2 + 13)
  /// + 3b + 7ab + 9a^2 + 22b^2, each part as (coefficient, i, j) for a^i b^j.
  std::vector<std::array<long, 3>> tangent_x{{18, 1, 0}, {7, 0, 1}, {2, 1, 1}};
  std::vector<std::array<long, 3>> tangent_y{{7, 1, 0}, {21, 0, 1}, {1, 2, 0}, {3, 0, 2}, {13, 0, 0}};
  std::vector<std::array<long, 3>> tangent_c{{3, 0, 1}, {7, 1, 1}, {9, 2, 0}, {22, 0, 2}};

  /// P* = [X/Z, Y/Z].
  std::vector<std::array<long, 3>> conj_X{{2, 1, 0}, {22, 1, 1}, {2, 2, 0}, {17, 0, 2}};
  std::vector<std::array<long, 3>> conj_Y{{2, 0, 1}, {15, 1, 1}, {1, 2, 0}, {2, 0, 2}};
  std::vector<std::array<long, 3>> conj_Z{{4, 1, 0}, {20, 0, 1}, {5, 2, 0}, {5, 0, 2}, {21, 0, 0}};

  std::size_t affine_point_count = 27;
  XYZ infinity_e{1, 0, 0};

  std::vector<Labeled> table{
      {{0, 0, 1}, "I0"},     {{0, 8, 1}, "E3′"},   {{0, 16, 1}, "S′"},     {{2, 11, 1}, "A3"},
      {{3, 13, 1}, "S=Ā3"},  {{4, 5, 1}, ""},      {{5, 5, 1}, "A2"},      {{5, 14, 1}, "∞e*"},
      {{6, 4, 1}, "I1"},     {{7, 1, 1}, ""},      {{7, 2, 1}, "E2′"},     {{7, 21, 1}, "O"},
      {{8, 10, 1}, "Ā1=E2"}, {{13, 1, 1}, "A1"},   {{13, 7, 1}, ""},       {{13, 16, 1}, "F′"},
      {{14, 9, 1}, ""},      {{16, 11, 1}, ""},    {{17, 7, 1}, "E1′"},    {{17, 8, 1}, ""},
      {{17, 9, 1}, "Ā2=E1"}, {{18, 21, 1}, "C=E3"}, {{19, 13, 1}, "F"},    {{21, 2, 1}, ""},
      {{21, 10, 1}, ""},     {{21, 12, 1}, "I3"},  {{22, 22, 1}, "I2"},    {{1, 0, 0}, "∞e"},
  };

  std::array<XY, 3> reflected_vertices{{{8, 10}, {17, 9}, {3, 13}}};  // Ā1, Ā2, Ā3
  XY O{7, 21};
  XY C{18, 21};
  long euler_y = 21;  // the Euler line is y = 21
  XY infinity_e_conjugate{5, 14};

  long equilateral_quadrance = 14;  // Q(A1, A3) = Q(A1, E2) = ... on side A1A3
  std::array<XY, 3> E{{{17, 9}, {8, 10}, {18, 21}}};
  std::array<XY, 3> E_primed{{{13, 7}, {7, 2}, {0, 8}}};
  std::array<XY, 3> E_star{{{14, 9}, {21, 10}, {7, 21}}};
  std::array<XY, 3> E_primed_star{{{17, 7}, {21, 2}, {17, 8}}};

  std::array<XY, 3> G{{{8, 16}, {0, 15}, {12, 9}}};
  std::array<XY, 3> G_primed{{{22, 0}, {15, 20}, {6, 20}}};
  long napoleon_quadrance = 19;
  long napoleon_quadrance_primed = 12;

  std::array<XY, 2> bisector_feet_A1{{{20, 21}, {12, 14}}};  // X1, Y1 on A2A3
  /// (x - cx)^2 + (y - cy)^2 = q for vertices A1, A2, A3.
  std::array<std::array<long, 3>, 3> apollonius{{{16, 6, 11}, {1, 14, 5}, {4, 17, 17}}};
  XY S{3, 13};
  XY S_primed{0, 16};
  std::array<long, 3> lemoine{16, 7, 1};
  XY F{19, 13};
  XY F_primed{13, 16};
  std::array<long, 3> brocard{10, 10, 1};
  XY K{10, 6};

  std::vector<Quadrangle> quadrangles{
      {{"A1", "A2", "A3", "∞e"}, {5, 14, 1}, "A1,A2,A3,∞e : ∞e*"},
      {{"I1", "I2", "I3", "I0"}, {1, 0, 0}, "I1,I2,I3,I0 : ∞e"},
      {{"Ā1", "Ā2", "Ā3", "C"}, {0, 8, 1}, "Ā1,Ā2,Ā3,C : [0,8]"},
      {{"Ā1*", "Ā2*", "Ā3*", "O"}, {17, 8, 1}, "Ā1*,Ā2*,Ā3*,O : [17,8]"},
  };

  std::vector<DesmicTable> desmic{
      {{{{"A1", "A2", "A3", "∞e"}, {"I1", "I2", "I3", "I0"}, {"I1", "I2", "I3", "I0"}}}},
      {{{{"A1", "A2", "A3", "∞e"}, {"E1", "E2", "E3", "[3,13]"}, {"E1*", "E2*", "E3*", "[19,13]"}}}},
      {{{{"A1", "A2", "A3", "∞e"}, {"E1′", "E2′", "E3′", "[0,16]"}, {"E1′*", "E2′*", "E3′*", "[13,16]"}}}},
  };
  std::size_t desmic_collinearities = 16;
};

}  // namespace neuberg::golden
