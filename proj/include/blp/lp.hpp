#pragma once

#include "blp/linalg.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace blp {

/// min c'x  s.t.  Ax = b, x >= 0. Redundant rows are permitted; the engine
/// detects rank internally.
struct StandardLp {
  RatMatrix a;
  RatVector b;
  RatVector c;
};

/// Mixed equality/inequality system over one shared column space. Any block
/// may be empty; variables with nonneg[j] = false are free.
struct LinearSystem {
  RatMatrix eq_lhs;
  RatVector eq_rhs;
  RatMatrix le_lhs;
  RatVector le_rhs;
  RatMatrix ge_lhs;
  RatVector ge_rhs;
  std::vector<bool> nonneg;

  static LinearSystem with_cols(std::size_t cols, bool nonneg_default = true);
  std::size_t cols() const { return nonneg.size(); }
  void append_eq(const RatVector& lhs, const Rat& rhs);
  void append_le(const RatVector& lhs, const Rat& rhs);
  void append_ge(const RatVector& lhs, const Rat& rhs);
};

/// Ordered set of column indices into the target matrix.
using Basis = std::vector<std::size_t>;

enum class OutcomeTag { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  OutcomeTag tag = OutcomeTag::Infeasible;
  Basis basis;      // meaningful on Optimal from solve()
  RatVector point;  // basic feasible solution on Optimal
  Rat value;        // exact objective value on Optimal

  static LpOutcome optimal(Basis basis, RatVector point, Rat value);
  static LpOutcome infeasible() { return LpOutcome{}; }
  static LpOutcome unbounded();
};

class SingularBasisError : public std::runtime_error {
 public:
  SingularBasisError() : std::runtime_error("basis submatrix is singular") {}
};

/// Exact two-phase primal simplex with Bland's anti-cycling rule. Terminates
/// on every input; all three outcomes are values.
LpOutcome solve(const StandardLp& lp);

/// Standard-form image of a LinearSystem: free variables split into
/// differences of nonnegative pairs, le/ge rows slacked. Kept public so the
/// desk-scale oracles can enumerate vertices of the converted system.
struct StandardizedSystem {
  StandardLp lp;
  std::size_t original_cols = 0;
  std::vector<std::size_t> pos_col;  // column carrying +x_j
  std::vector<std::size_t> neg_col;  // column carrying -x_j; npos if nonneg
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  RatVector recover(const RatVector& standard_point) const;
};

StandardizedSystem standardize(const LinearSystem& sys, const RatVector& objective);

/// min objective'x over the system; point is mapped back to system columns.
/// The basis field of the result is left empty (it indexes the internal
/// standard form, not the caller's columns).
LpOutcome optimize(const LinearSystem& sys, const RatVector& objective);

/// Exact feasibility check; returns a witness point or nullopt.
std::optional<RatVector> check_feasible(const LinearSystem& sys);

/// c_j - c_B' A_B^{-1} A_j over nonbasic columns, in ascending column order.
/// Independent of any right-hand side. Throws SingularBasisError when the
/// indexed submatrix is not square invertible.
RatVector reduced_costs(const RatMatrix& a, const RatVector& c, const Basis& basis);

/// All column subsets of size m.rows() with invertible submatrix, in
/// lexicographic order. The empty basis for a zero-row matrix.
std::vector<Basis> enumerate_bases(const RatMatrix& m);

/// All basic feasible solutions of {Ax = b, x >= 0}, deduplicated by exact
/// equality, in first-seen basis order. Redundant rows are eliminated first;
/// an inconsistent system yields the empty sequence.
std::vector<RatVector> enumerate_vertices(const RatMatrix& a, const RatVector& b);

}  // namespace blp
