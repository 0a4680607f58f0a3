#pragma once

#include "blp/model.hpp"

#include <optional>
#include <variant>

namespace blp {

/// Optimistic certificate: one basis of W with nonnegative reduced costs
/// w.r.t. q whose associated linear system is feasible.
struct OptCert {
  Basis basis;  // size r, columns of W
};

/// Pessimistic certificate: a basis of W plus a basis of [W; q'] satisfying
/// the sign conditions and the x-space system.
struct PessCert {
  Basis basis;      // size r, columns of W
  Basis basis_hat;  // size r + 1, columns of [W; q']
};

enum class CheckFailure { None, SingularBasis, ReducedCostSign, SystemInfeasible };

const char* to_string(CheckFailure failure);

struct CheckReport {
  bool accepted = false;
  CheckFailure failed_condition = CheckFailure::None;
  // (x; y) concatenated for optimistic checks, x alone for pessimistic.
  std::optional<RatVector> witness;
};

/// Rows (2b)-(2e): the bilevel-feasible points certified by basis b, over
/// (x, y) >= 0. Throws SingularBasisError.
LinearSystem opt_feasible_region(const BlpInstance& inst, const Basis& b);

/// opt_feasible_region plus the objective row c'x + d'y <= alpha.
LinearSystem opt_system(const BlpInstance& inst, const Rat& alpha, const Basis& b);

/// One system over x >= 0 only: lower-level basis feasibility for b, the
/// worst-case objective bound and basic feasibility for basis_hat, and the
/// zero-reduced-cost coupling identities. Throws SingularBasisError.
LinearSystem pess_systems(const BlpInstance& inst, const Rat& alpha, const Basis& b,
                          const Basis& basis_hat);

CheckReport check_opt_cert(const DecisionInstance& dec, const Basis& b);
CheckReport check_pess_cert(const DecisionInstance& dec, const PessCert& cert);

/// [W; q'], the lower-level matrix extended by the objective row.
RatMatrix extended_lower_matrix(const BlpInstance& inst);

/// Certificate file format: `OPT-CERT` followed by r 1-based column indices,
/// or `PESS-CERT` followed by r indices, `;`, and r+1 indices.
std::variant<OptCert, PessCert> parse_certificate(const std::string& text);
std::string serialize_certificate(const OptCert& cert);
std::string serialize_certificate(const PessCert& cert);

}  // namespace blp
