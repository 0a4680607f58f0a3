#include "blp/lp.hpp"

#include <algorithm>
#include <set>

namespace blp {

LinearSystem LinearSystem::with_cols(std::size_t cols, bool nonneg_default) {
  LinearSystem sys;
  sys.eq_lhs = RatMatrix(0, cols);
  sys.le_lhs = RatMatrix(0, cols);
  sys.ge_lhs = RatMatrix(0, cols);
  sys.nonneg.assign(cols, nonneg_default);
  return sys;
}

namespace {

void append_row(RatMatrix& block, RatVector& rhs_block, const RatVector& lhs,
                const Rat& rhs, std::size_t cols) {
  if (lhs.size() != cols) throw std::invalid_argument("row width mismatch");
  RatMatrix grown(block.rows() + 1, cols);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) grown(i, j) = block(i, j);
  for (std::size_t j = 0; j < cols; ++j) grown(block.rows(), j) = lhs[j];
  block = std::move(grown);
  rhs_block.push_back(rhs);
}

}  // namespace

void LinearSystem::append_eq(const RatVector& lhs, const Rat& rhs) {
  append_row(eq_lhs, eq_rhs, lhs, rhs, cols());
}
void LinearSystem::append_le(const RatVector& lhs, const Rat& rhs) {
  append_row(le_lhs, le_rhs, lhs, rhs, cols());
}
void LinearSystem::append_ge(const RatVector& lhs, const Rat& rhs) {
  append_row(ge_lhs, ge_rhs, lhs, rhs, cols());
}

LpOutcome LpOutcome::optimal(Basis basis, RatVector point, Rat value) {
  LpOutcome out;
  out.tag = OutcomeTag::Optimal;
  out.basis = std::move(basis);
  out.point = std::move(point);
  out.value = std::move(value);
  return out;
}

LpOutcome LpOutcome::unbounded() {
  LpOutcome out;
  out.tag = OutcomeTag::Unbounded;
  return out;
}

namespace {

constexpr std::size_t knone = static_cast<std::size_t>(-1);

// Dense rational tableau. rows_[i] holds the constraint coefficients, rhs_[i]
// the (always nonnegative) right-hand side, zrow_ the reduced costs of the
// current basis.
struct Tableau {
  std::vector<RatVector> rows;
  RatVector rhs;
  RatVector zrow;
  std::vector<std::size_t> basic;  // basic column of each row
  std::vector<char> is_basic;      // per column

  std::size_t ncols() const { return zrow.size(); }

  void pivot(std::size_t r, std::size_t e) {
    const Rat piv = rows[r][e];
    if (piv != 1) {
      for (Rat& v : rows[r]) v /= piv;
      rhs[r] /= piv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][e] == 0) continue;
      const Rat f = rows[i][e];
      for (std::size_t j = 0; j < ncols(); ++j) rows[i][j] -= f * rows[r][j];
      rows[i][e] = 0;
      rhs[i] -= f * rhs[r];
    }
    if (zrow[e] != 0) {
      const Rat f = zrow[e];
      for (std::size_t j = 0; j < ncols(); ++j) zrow[j] -= f * rows[r][j];
      zrow[e] = 0;
    }
    is_basic[basic[r]] = 0;
    basic[r] = e;
    is_basic[e] = 1;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = ratio test with ties broken by lowest basic column index.
  // Returns Optimal or Unbounded; terminates on every input.
  OutcomeTag run_bland() {
    for (;;) {
      std::size_t e = knone;
      for (std::size_t j = 0; j < ncols(); ++j) {
        if (zrow[j] < 0) {
          e = j;
          break;
        }
      }
      if (e == knone) return OutcomeTag::Optimal;
      std::size_t leave = knone;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][e] <= 0) continue;
        const Rat ratio = rhs[i] / rows[i][e];
        if (leave == knone || ratio < best_ratio ||
            (ratio == best_ratio && basic[i] < basic[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == knone) return OutcomeTag::Unbounded;
      pivot(leave, e);
    }
  }
};

}  // namespace

LpOutcome solve(const StandardLp& lp) {
  const std::size_t m = lp.a.rows();
  const std::size_t n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n)
    throw std::invalid_argument("solve: inconsistent LP dimensions");

  Tableau t;
  t.rows.resize(m);
  t.rhs.resize(m);
  t.basic.resize(m);
  t.is_basic.assign(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i] < 0;
    RatVector row(n + m);
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rat(-lp.a(i, j)) : lp.a(i, j);
    row[n + i] = 1;
    t.rows[i] = std::move(row);
    t.rhs[i] = flip ? Rat(-lp.b[i]) : lp.b[i];
    t.basic[i] = n + i;
    t.is_basic[n + i] = 1;
  }

  if (m > 0) {
    // Phase one: minimize the sum of artificials.
    t.zrow.assign(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      Rat acc = 0;
      for (std::size_t i = 0; i < m; ++i) acc += t.rows[i][j];
      t.zrow[j] = -acc;
    }
    if (t.run_bland() != OutcomeTag::Optimal)
      throw std::logic_error("phase one cannot be unbounded");
    Rat artificial_level = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basic[i] >= n) artificial_level += t.rhs[i];
    if (artificial_level > 0) return LpOutcome::infeasible();

    // Pivot zero-level artificials out of the basis; rows that offer no
    // structural pivot are redundant and dropped.
    std::vector<char> keep(m, 1);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basic[i] < n) continue;
      std::size_t enter = knone;
      for (std::size_t j = 0; j < n; ++j) {
        if (!t.is_basic[j] && t.rows[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter == knone) {
        keep[i] = 0;
      } else {
        t.pivot(i, enter);
      }
    }
    std::size_t w = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (!keep[i]) continue;
      if (w != i) {
        t.rows[w] = std::move(t.rows[i]);
        t.rhs[w] = std::move(t.rhs[i]);
        t.basic[w] = t.basic[i];
      }
      ++w;
    }
    t.rows.resize(w);
    t.rhs.resize(w);
    t.basic.resize(w);
  }

  // Phase two over the structural columns only.
  for (auto& row : t.rows) row.resize(n);
  t.is_basic.assign(n, 0);
  for (std::size_t b : t.basic) t.is_basic[b] = 1;
  t.zrow.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat acc = lp.c[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      acc -= lp.c[t.basic[i]] * t.rows[i][j];
    t.zrow[j] = acc;
  }
  if (t.run_bland() == OutcomeTag::Unbounded) return LpOutcome::unbounded();

  RatVector x(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) x[t.basic[i]] = t.rhs[i];
  Basis basis = t.basic;
  std::sort(basis.begin(), basis.end());
  Rat value = dot(lp.c, x);
  return LpOutcome::optimal(std::move(basis), std::move(x), std::move(value));
}

StandardizedSystem standardize(const LinearSystem& sys, const RatVector& objective) {
  const std::size_t nc = sys.cols();
  if (objective.size() != nc) throw std::invalid_argument("objective width mismatch");
  if (sys.eq_lhs.cols() != nc || sys.le_lhs.cols() != nc || sys.ge_lhs.cols() != nc)
    throw std::invalid_argument("system blocks disagree on column count");
  if (sys.eq_rhs.size() != sys.eq_lhs.rows() || sys.le_rhs.size() != sys.le_lhs.rows() ||
      sys.ge_rhs.size() != sys.ge_lhs.rows())
    throw std::invalid_argument("system rhs length mismatch");

  StandardizedSystem out;
  out.original_cols = nc;
  out.pos_col.resize(nc);
  out.neg_col.assign(nc, StandardizedSystem::npos);
  std::size_t next = 0;
  for (std::size_t j = 0; j < nc; ++j) {
    out.pos_col[j] = next++;
    if (!sys.nonneg[j]) out.neg_col[j] = next++;
  }
  const std::size_t nle = sys.le_lhs.rows();
  const std::size_t nge = sys.ge_lhs.rows();
  const std::size_t total = next + nle + nge;
  const std::size_t mrows = sys.eq_lhs.rows() + nle + nge;

  RatMatrix a(mrows, total);
  RatVector b(mrows);
  auto emit = [&](std::size_t row, const RatMatrix& src, std::size_t i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const Rat& v = src(i, j);
      if (v == 0) continue;
      a(row, out.pos_col[j]) = v;
      if (out.neg_col[j] != StandardizedSystem::npos) a(row, out.neg_col[j]) = -v;
    }
  };
  std::size_t row = 0;
  for (std::size_t i = 0; i < sys.eq_lhs.rows(); ++i, ++row) {
    emit(row, sys.eq_lhs, i);
    b[row] = sys.eq_rhs[i];
  }
  for (std::size_t i = 0; i < nle; ++i, ++row) {
    emit(row, sys.le_lhs, i);
    a(row, next + i) = 1;
    b[row] = sys.le_rhs[i];
  }
  for (std::size_t i = 0; i < nge; ++i, ++row) {
    emit(row, sys.ge_lhs, i);
    a(row, next + nle + i) = -1;
    b[row] = sys.ge_rhs[i];
  }

  RatVector c(total, Rat(0));
  for (std::size_t j = 0; j < nc; ++j) {
    c[out.pos_col[j]] = objective[j];
    if (out.neg_col[j] != StandardizedSystem::npos) c[out.neg_col[j]] = -objective[j];
  }
  out.lp = StandardLp{std::move(a), std::move(b), std::move(c)};
  return out;
}

RatVector StandardizedSystem::recover(const RatVector& standard_point) const {
  RatVector x(original_cols);
  for (std::size_t j = 0; j < original_cols; ++j) {
    x[j] = standard_point[pos_col[j]];
    if (neg_col[j] != npos) x[j] -= standard_point[neg_col[j]];
  }
  return x;
}

LpOutcome optimize(const LinearSystem& sys, const RatVector& objective) {
  const StandardizedSystem std_form = standardize(sys, objective);
  LpOutcome out = solve(std_form.lp);
  if (out.tag != OutcomeTag::Optimal) return out;
  return LpOutcome::optimal({}, std_form.recover(out.point), out.value);
}

std::optional<RatVector> check_feasible(const LinearSystem& sys) {
  LpOutcome out = optimize(sys, RatVector(sys.cols(), Rat(0)));
  if (out.tag != OutcomeTag::Optimal) return std::nullopt;
  return out.point;
}

RatVector reduced_costs(const RatMatrix& a, const RatVector& c, const Basis& basis) {
  if (c.size() != a.cols()) throw std::invalid_argument("cost width mismatch");
  if (basis.size() != a.rows()) throw SingularBasisError();
  for (std::size_t j : basis)
    if (j >= a.cols()) throw SingularBasisError();
  RatVector cb(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) cb[i] = c[basis[i]];
  auto u = solve_square(a.select_columns(basis).transposed(), cb);
  if (!u) throw SingularBasisError();
  std::vector<char> in_basis(a.cols(), 0);
  for (std::size_t j : basis) in_basis[j] = 1;
  RatVector rc;
  rc.reserve(a.cols() - basis.size());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (in_basis[j]) continue;
    rc.push_back(c[j] - dot(*u, a.column(j)));
  }
  return rc;
}

namespace {

// Depth-first enumeration over columns with incremental elimination: a
// candidate column extends the current prefix iff it has a nonzero entry in
// a row not yet used as pivot. Prunes dependent prefixes early.
void enumerate_bases_rec(const RatMatrix& reduced, const std::vector<char>& used_row,
                         std::size_t start, Basis& chosen, std::size_t target,
                         std::vector<Basis>& out) {
  if (chosen.size() == target) {
    out.push_back(chosen);
    return;
  }
  const std::size_t need = target - chosen.size();
  for (std::size_t j = start; j + need <= reduced.cols(); ++j) {
    std::size_t pivot_row = knone;
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
      if (!used_row[i] && reduced(i, j) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == knone) continue;
    RatMatrix next = reduced;
    std::vector<char> next_used = used_row;
    next_used[pivot_row] = 1;
    for (std::size_t i = 0; i < next.rows(); ++i) {
      if (next_used[i] || next(i, j) == 0) continue;
      const Rat f = next(i, j) / next(pivot_row, j);
      for (std::size_t j2 = j + 1; j2 < next.cols(); ++j2)
        next(i, j2) -= f * next(pivot_row, j2);
      next(i, j) = 0;
    }
    chosen.push_back(j);
    enumerate_bases_rec(next, next_used, j + 1, chosen, target, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Basis> enumerate_bases(const RatMatrix& m) {
  std::vector<Basis> out;
  if (m.rows() > m.cols()) return out;
  Basis chosen;
  std::vector<char> used(m.rows(), 0);
  enumerate_bases_rec(m, used, 0, chosen, m.rows(), out);
  return out;
}

std::vector<RatVector> enumerate_vertices(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::size_t n = a.cols();
  // Reduce [A | b] to an independent row set; inconsistency means empty.
  std::vector<RatVector> work(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    work[i] = a.row(i);
    work[i].push_back(b[i]);
  }
  std::size_t pr = 0;
  for (std::size_t col = 0; col < n && pr < work.size(); ++col) {
    std::size_t p = pr;
    while (p < work.size() && work[p][col] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[pr], work[p]);
    for (std::size_t i = pr + 1; i < work.size(); ++i) {
      if (work[i][col] == 0) continue;
      const Rat f = work[i][col] / work[pr][col];
      for (std::size_t j = col; j <= n; ++j) work[i][j] -= f * work[pr][j];
    }
    ++pr;
  }
  for (std::size_t i = pr; i < work.size(); ++i)
    if (work[i][n] != 0) return {};

  RatMatrix ar(pr, n);
  RatVector br(pr);
  for (std::size_t i = 0; i < pr; ++i) {
    for (std::size_t j = 0; j < n; ++j) ar(i, j) = work[i][j];
    br[i] = work[i][n];
  }

  std::vector<RatVector> out;
  std::set<RatVector> seen;
  for (const Basis& basis : enumerate_bases(ar)) {
    auto xb = solve_square(ar.select_columns(basis), br);
    bool ok = true;
    for (const Rat& v : *xb) {
      if (v < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    RatVector x(n, Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) x[basis[i]] = (*xb)[i];
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace blp
