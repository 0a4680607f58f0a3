#pragma once

#include "blp/model.hpp"

#include <utility>

namespace blp {

/// Bilevel-correct big-M constants computed from integer-scaled data, plus
/// the breakdown used to derive them.
struct BigMResult {
  Rat mp;        // ell! * mf_bound * ml_bound^(ell-1)
  Rat md;        // max|q| * (1 + r! * r * max|W|^r), or max|q| when r = 0
  std::size_t ell = 0;  // k + r + 1 + m
  Rat ml_bound;
  Rat mf_bound;
  RowScaling scaling;
};

/// Dual-side bound: covers every reduced cost of any basis of W w.r.t. q.
Rat compute_md(const ScaledInstance& scaled);

/// Primal-side bound: covers every coordinate of every vertex of the
/// per-basis polyhedron the optimistic solver optimizes over.
BigMResult compute_mp(const ScaledInstance& scaled);

/// Empirically tight (Mp*, Md*) by enumerating every lower-level basis with
/// nonnegative reduced costs: Md* is the largest reduced cost seen, Mp* the
/// largest lower-level coordinate (y or basic slack) over all vertices of the
/// per-basis polyhedra. (0, 0) when no valid basis exists. Desk scale only.
std::pair<Rat, Rat> tight_bounds_by_enumeration(const BlpInstance& inst);

}  // namespace blp
