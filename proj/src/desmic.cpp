#include "neuberg/desmic.hpp"

#include <algorithm>

namespace neuberg {

namespace {

std::vector<CellTriple> build_predicted() {
  std::vector<CellTriple> out;
  for (int c0 = 0; c0 < 4; ++c0) {
    for (int c1 = 0; c1 < 4; ++c1) {
      for (int c2 = 0; c2 < 4; ++c2) {
        const int ds = (c0 == 3) + (c1 == 3) + (c2 == 3);
        bool ok = false;
        if (ds == 0) ok = c0 != c1 && c1 != c2 && c0 != c2;
        if (ds == 1) {
          ok = c0 == 3 ? c1 == c2 : c1 == 3 ? c0 == c2 : c0 == c1;
        }
        if (ds == 3) ok = true;
        if (ok) out.push_back({Cell{0, c0}, Cell{1, c1}, Cell{2, c2}});
      }
    }
  }
  return out;
}

bool same_triple(const CellTriple& a, const CellTriple& b) {
  return std::is_permutation(a.begin(), a.end(), b.begin());
}

bool incident(const ProjPt& p, const ProjPt& q, const ProjPt& r, const Cubic* curve) {
  if (curve == nullptr) return are_collinear(p, q, r);
  try {
    return curve->star(p, q) == r;
  } catch (const Error& e) {
    if (e.code() == Errc::LineOnCurve) return true;
    throw;
  }
}

// Row r of the array built from D_r: the other three preimages of D_r * D_r.
std::array<ProjPt, 3> quadrangle_row(const Cubic& c, const ProjPt& d, std::uint64_t max_enum) {
  auto pre = c.tangential_preimages(c.star(d, d), max_enum);
  if (std::find(pre.begin(), pre.end(), d) == pre.end() || pre.size() != 4) {
    throw Error(Errc::IncompleteQuadrangle, "quadrangle to " + to_string(c.star(d, d)) + " has " +
                                                std::to_string(pre.size()) + " points");
  }
  std::erase(pre, d);
  return {pre[0], pre[1], pre[2]};
}

ProjPt meet_of_joins(const ProjPt& a, const ProjPt& b, const ProjPt& c, const ProjPt& d) {
  return meet(join(a, b), join(c, d));
}

std::optional<ProjPt> projective_perspector(const std::array<ProjPt, 3>& u,
                                            const std::array<ProjPt, 3>& v) {
  const ProjLine l0 = join(u[0], v[0]), l1 = join(u[1], v[1]), l2 = join(u[2], v[2]);
  if (l0 == l1) return std::nullopt;
  const ProjPt m = meet(l0, l1);
  if (!l2.contains(m)) return std::nullopt;
  return m;
}

}  // namespace

bool equivalent(const DesmicArray& a, const DesmicArray& b) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    bool same = true;
    for (std::size_t r = 0; r < 3 && same; ++r) {
      same = a.rows[r][3] == b.rows[r][3];
      for (std::size_t c = 0; c < 3 && same; ++c) same = a.rows[r][perm[c]] == b.rows[r][c];
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

const std::vector<CellTriple>& predicted_triples() {
  static const std::vector<CellTriple> triples = build_predicted();
  return triples;
}

DesmicReport desmic_verify(const DesmicArray& d, const Cubic* curve) {
  std::vector<Cell> cells;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) cells.push_back({r, c});
  }
  DesmicReport rep;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (d.at(cells[i]) == d.at(cells[j])) rep.degenerate = true;
    }
  }
  const auto& predicted = predicted_triples();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      for (std::size_t k = j + 1; k < cells.size(); ++k) {
        const CellTriple t{cells[i], cells[j], cells[k]};
        const bool is_predicted = std::any_of(predicted.begin(), predicted.end(),
                                              [&t](const CellTriple& p) { return same_triple(p, t); });
        const bool holds = incident(d.at(t[0]), d.at(t[1]), d.at(t[2]), curve);
        if (is_predicted && holds) ++rep.predicted_holding;
        if (is_predicted && !holds) rep.missing.push_back(t);
        if (is_predicted || !holds) continue;
        const bool transversal = t[0].row != t[1].row && t[1].row != t[2].row && t[0].row != t[2].row;
        (transversal ? rep.extra : rep.within_row).push_back(t);
      }
    }
  }
  return rep;
}

DesmicArray desmic_from_collinear(const Cubic& c, const ProjPt& d1, const ProjPt& d2,
                                  const ProjPt& d3, std::uint64_t max_enum) {
  if (c.star(d1, d2) != d3) {
    throw Error(Errc::InvalidInput, to_string(d1) + ", " + to_string(d2) + ", " + to_string(d3) +
                                        " are not collinear on the curve");
  }
  const std::array<ProjPt, 3> ds{d1, d2, d3};
  std::array<std::array<ProjPt, 3>, 3> q;
  for (std::size_t r = 0; r < 3; ++r) {
    q[r] = quadrangle_row(c, ds[r], max_enum);
    std::sort(q[r].begin(), q[r].end());
  }
  auto p1 = q[1];
  do {
    auto p2 = q[2];
    do {
      DesmicArray d;
      const std::array<std::array<ProjPt, 3>, 3> rows{q[0], p1, p2};
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t col = 0; col < 3; ++col) d.rows[r][col] = rows[r][col];
        d.rows[r][3] = ds[r];
      }
      if (desmic_verify(d, &c).aligned()) return d;
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  throw Error(Errc::AlignmentFailure, "no column order satisfies the 16 collinearities");
}

DesmicArray desmic_from_triangle(const Pt& a, const Pt& b, const Pt& c, const Pt& p, const Pt& q) {
  const ProjPt A(a), B(b), C(c), P(p), Q(q);
  DesmicArray d;
  try {
    const std::array<ProjPt, 3> r0{A, B, C};
    const std::array<ProjPt, 3> r1{meet_of_joins(B, P, C, Q), meet_of_joins(C, P, A, Q),
                                   meet_of_joins(A, P, B, Q)};
    const std::array<ProjPt, 3> r2{meet_of_joins(B, Q, C, P), meet_of_joins(C, Q, A, P),
                                   meet_of_joins(A, Q, B, P)};
    const auto dd = projective_perspector(r1, r2);
    const auto d1 = projective_perspector(r2, r0);
    const auto d2 = projective_perspector(r0, r1);
    if (!dd || !d1 || !d2) throw Error(Errc::DegenerateConfiguration, "triangles not perspective");
    const std::array<std::array<ProjPt, 3>, 3> rows{r0, r1, r2};
    const std::array<ProjPt, 3> ds{*dd, *d1, *d2};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t col = 0; col < 3; ++col) d.rows[r][col] = rows[r][col];
      d.rows[r][3] = ds[r];
    }
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateConfiguration) throw;
    throw Error(Errc::DegenerateConfiguration, e.what());
  }
  const auto rep = desmic_verify(d);
  if (rep.degenerate || !rep.ok()) {
    throw Error(Errc::DegenerateConfiguration,
                "configuration has " + std::to_string(rep.collinear_count()) + " collinear triples");
  }
  return d;
}

}  // namespace neuberg
