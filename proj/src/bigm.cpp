#include "blp/bigm.hpp"

#include <algorithm>

namespace blp {

Rat compute_md(const ScaledInstance& scaled) {
  const BlpInstance& inst = scaled.instance;
  const Rat mq = max_abs(inst.q);
  if (inst.r == 0) return mq;
  const unsigned r = static_cast<unsigned>(inst.r);
  return mq * (1 + Rat(factorial(r)) * Rat(inst.r) * rat_pow(max_abs(inst.W), r));
}

BigMResult compute_mp(const ScaledInstance& scaled) {
  const BlpInstance& inst = scaled.instance;
  BigMResult out;
  out.scaling = scaled.scaling;
  out.md = compute_md(scaled);
  out.ell = inst.k + inst.r + 1 + inst.m;

  const Rat ma = max_abs(inst.A);
  const Rat mb = max_abs(inst.B);
  const Rat mt = max_abs(inst.T);
  const Rat mw = max_abs(inst.W);
  const Rat mq = max_abs(inst.q);
  const Rat mav = max_abs(inst.a);
  const Rat mh = max_abs(inst.h);

  Rat ml = std::max({ma, mb, mt, mw, mq, Rat(1)});
  Rat mf = std::max(mav, mh);
  if (inst.r >= 1) {
    const unsigned r = static_cast<unsigned>(inst.r);
    const Rat rfact = Rat(factorial(r));
    const Rat wpow = rat_pow(mw, r - 1);
    ml = std::max({ml, Rat(rfact * wpow * mt), Rat(rfact * Rat(inst.r) * mq * wpow * mt)});
    mf = std::max({mf, Rat(rfact * wpow * mh), Rat(rfact * Rat(inst.r) * mq * wpow * mh)});
  }
  out.ml_bound = ml;
  out.mf_bound = mf;
  out.mp = Rat(factorial(static_cast<unsigned>(out.ell))) * mf *
           rat_pow(ml, static_cast<unsigned>(out.ell - 1));
  return out;
}

namespace {

// The polyhedron behind one valid basis, in standard form over (x, y, z):
// coupling rows, lower rows, the value row, and the slacked basic-feasibility
// rows W_B^{-1} T x + z = W_B^{-1} h.
struct BasisPolyhedron {
  RatMatrix a;
  RatVector b;
};

BasisPolyhedron basis_polyhedron(const BlpInstance& inst, const Basis& basis) {
  const std::size_t n = inst.n;
  const std::size_t m = inst.m;
  const std::size_t r = inst.r;
  const RatMatrix wb = inst.W.select_columns(basis);
  const RatMatrix basis_rows = *solve_square_multi(wb, inst.T);
  const RatVector basis_rhs = *solve_square(wb, inst.h);
  RatVector qb(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) qb[i] = inst.q[basis[i]];
  const RatVector u = *solve_square(wb.transposed(), qb);
  const RatVector ut = vec_mat(u, inst.T);

  const std::size_t rows = inst.k + r + 1 + r;
  BasisPolyhedron poly{RatMatrix(rows, n + m + r), RatVector(rows)};
  std::size_t row = 0;
  for (std::size_t i = 0; i < inst.k; ++i, ++row) {
    for (std::size_t j = 0; j < n; ++j) poly.a(row, j) = inst.A(i, j);
    for (std::size_t j = 0; j < m; ++j) poly.a(row, n + j) = inst.B(i, j);
    poly.b[row] = inst.a[i];
  }
  for (std::size_t i = 0; i < r; ++i, ++row) {
    for (std::size_t j = 0; j < n; ++j) poly.a(row, j) = inst.T(i, j);
    for (std::size_t j = 0; j < m; ++j) poly.a(row, n + j) = inst.W(i, j);
    poly.b[row] = inst.h[i];
  }
  for (std::size_t j = 0; j < n; ++j) poly.a(row, j) = ut[j];
  for (std::size_t j = 0; j < m; ++j) poly.a(row, n + j) = inst.q[j];
  poly.b[row] = dot(u, inst.h);
  ++row;
  for (std::size_t i = 0; i < r; ++i, ++row) {
    for (std::size_t j = 0; j < n; ++j) poly.a(row, j) = basis_rows(i, j);
    poly.a(row, n + m + i) = 1;
    poly.b[row] = basis_rhs[i];
  }
  return poly;
}

}  // namespace

std::pair<Rat, Rat> tight_bounds_by_enumeration(const BlpInstance& inst) {
  Rat mp_star = 0;
  Rat md_star = 0;
  for (const Basis& basis : enumerate_bases(inst.W)) {
    const RatVector rc = reduced_costs(inst.W, inst.q, basis);
    if (!std::all_of(rc.begin(), rc.end(), [](const Rat& v) { return v >= 0; }))
      continue;
    for (const Rat& v : rc) md_star = std::max(md_star, v);
    const BasisPolyhedron poly = basis_polyhedron(inst, basis);
    for (const RatVector& vertex : enumerate_vertices(poly.a, poly.b)) {
      // Lower-level coordinates: the y block and the basic slacks z, which
      // carry the basic solution W_B^{-1}(h - Tx).
      for (std::size_t j = inst.n; j < vertex.size(); ++j)
        mp_star = std::max(mp_star, vertex[j]);
    }
  }
  return {mp_star, md_star};
}

}  // namespace blp
