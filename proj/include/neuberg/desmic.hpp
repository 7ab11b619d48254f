#pragma once

/// Desmic arrays: 12 points in a 3x4 grid with 16 collinear triples.
///
/// A triple is predicted collinear when its points come from different rows
/// and either (no point from column 3) the columns are distinct, or (one
/// point from column 3) the other two share a column, or all three are from
/// column 3.

#include <array>
#include <optional>
#include <vector>

#include "neuberg/cubic.hpp"
#include "neuberg/projective.hpp"

namespace neuberg {

struct Cell {
  int row;  // 0..2
  int col;  // 0..3; column 3 holds the D points

  bool operator==(const Cell&) const = default;
};

using CellTriple = std::array<Cell, 3>;

struct DesmicArray {
  std::array<std::array<ProjPt, 4>, 3> rows;

  const ProjPt& at(const Cell& c) const {
    return rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
  }
};

/// Same array after a common permutation of columns 0..2 in every row. The
/// predicted triples are invariant under such permutations.
bool equivalent(const DesmicArray& a, const DesmicArray& b);

/// The 16 predicted triples in a fixed order.
const std::vector<CellTriple>& predicted_triples();

struct DesmicReport {
  bool degenerate = false;  // some point occurs in two cells
  int predicted_holding = 0;
  std::vector<CellTriple> missing;     // predicted but not collinear
  std::vector<CellTriple> extra;       // one point per row, collinear, not predicted
  std::vector<CellTriple> within_row;  // two or three points from one row, collinear

  /// The 16 predicted triples hold and no other one-per-row triple does.
  /// Column order only affects this part.
  bool aligned() const { return predicted_holding == 16 && extra.empty(); }
  /// Exactly the 16 predicted triples are collinear among all 220.
  bool ok() const { return aligned() && within_row.empty(); }
  int collinear_count() const {
    return predicted_holding + static_cast<int>(extra.size() + within_row.size());
  }
};

/// Tests all 220 triples. Without a curve, incidence is the determinant
/// test. With a curve, a triple (P, Q, R) counts as collinear when P * Q = R,
/// so a repeated point reads as a tangency.
DesmicReport desmic_verify(const DesmicArray& d, const Cubic* curve = nullptr);

/// Rows are the tangential preimage sets of D_r * D_r (each contains D_r),
/// with D_r in column 3. Row 0 keeps sorted order; rows 1 and 2 take the
/// first column order that is aligned. Throws `Errc::InvalidInput` when the
/// points are not collinear on the curve, `Errc::IncompleteQuadrangle`, or
/// `Errc::AlignmentFailure`.
DesmicArray desmic_from_collinear(const Cubic& c, const ProjPt& d1, const ProjPt& d2,
                                  const ProjPt& d3, std::uint64_t max_enum = kDefaultMaxEnum);

/// Triangle ABC with points P, Q: A' = (BP)(CQ), B' = (CP)(AQ),
/// C' = (AP)(BQ), A'' = (BQ)(CP), B'' = (CQ)(AP), C'' = (AQ)(BP). Column 3
/// holds the perspectors D (of rows 1, 2), D' (rows 2, 0), D'' (rows 0, 1).
/// Throws `Errc::DegenerateConfiguration` unless the result verifies.
DesmicArray desmic_from_triangle(const Pt& a, const Pt& b, const Pt& c, const Pt& p, const Pt& q);

}  // namespace neuberg
