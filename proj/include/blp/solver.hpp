#pragma once

#include "blp/certificates.hpp"

#include <optional>

namespace blp {

struct BilevelOutcome {
  OutcomeTag tag = OutcomeTag::Infeasible;
  RatVector x;
  RatVector y;
  Rat value;
  OptCert certificate;  // the basis realizing the optimum, on Optimal
};

/// Exact optimistic solve by exhausting lower-level bases: every basis of W
/// with nonnegative reduced costs w.r.t. q contributes one LP over its
/// certified region; the best optimum wins, ties going to the
/// lexicographically first basis. Any unbounded per-basis LP makes the whole
/// problem unbounded. Desk scale.
BilevelOutcome solve_optimistic(const BlpInstance& inst);

/// yes with the lexicographically first basis accepted by check_opt_cert, or
/// nothing.
std::optional<OptCert> decide_optimistic(const DecisionInstance& dec);

/// yes with the lexicographically first pair (basis, basis_hat) accepted by
/// check_pess_cert, or nothing. Sign conditions are tested before any LP.
std::optional<PessCert> decide_pessimistic(const DecisionInstance& dec);

}  // namespace blp
