#include "blp/solver.hpp"

#include <algorithm>

namespace blp {

namespace {

bool all_nonneg(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x >= 0; });
}

bool all_nonpos(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x <= 0; });
}

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace

BilevelOutcome solve_optimistic(const BlpInstance& inst) {
  inst.validate();
  const RatVector objective = [&] {
    RatVector obj = inst.c;
    obj.insert(obj.end(), inst.d.begin(), inst.d.end());
    return obj;
  }();

  BilevelOutcome best;
  bool have_best = false;
  for (const Basis& basis : enumerate_bases(inst.W)) {
    if (!all_nonneg(reduced_costs(inst.W, inst.q, basis))) continue;
    const LpOutcome out = optimize(opt_feasible_region(inst, basis), objective);
    if (out.tag == OutcomeTag::Unbounded) {
      BilevelOutcome result;
      result.tag = OutcomeTag::Unbounded;
      result.certificate = OptCert{basis};
      return result;
    }
    if (out.tag != OutcomeTag::Optimal) continue;
    if (!have_best || out.value < best.value) {
      best.tag = OutcomeTag::Optimal;
      best.x.assign(out.point.begin(), out.point.begin() + inst.n);
      best.y.assign(out.point.begin() + inst.n, out.point.end());
      best.value = out.value;
      best.certificate = OptCert{basis};
      have_best = true;
    }
  }
  if (!have_best) return BilevelOutcome{};
  return best;
}

std::optional<OptCert> decide_optimistic(const DecisionInstance& dec) {
  dec.instance.validate();
  for (const Basis& basis : enumerate_bases(dec.instance.W)) {
    if (check_opt_cert(dec, basis).accepted) return OptCert{basis};
  }
  return std::nullopt;
}

std::optional<PessCert> decide_pessimistic(const DecisionInstance& dec) {
  const BlpInstance& inst = dec.instance;
  inst.validate();
  std::vector<Basis> lower_bases;
  for (const Basis& basis : enumerate_bases(inst.W)) {
    if (all_nonneg(reduced_costs(inst.W, inst.q, basis))) lower_bases.push_back(basis);
  }
  if (lower_bases.empty()) return std::nullopt;

  const RatMatrix ext = extended_lower_matrix(inst);
  std::vector<Basis> hat_bases;
  for (const Basis& basis_hat : enumerate_bases(ext)) {
    if (!all_nonpos(reduced_costs(ext, inst.d, basis_hat))) continue;
    bool coupling_flat = true;
    for (std::size_t i = 0; i < inst.k && coupling_flat; ++i)
      coupling_flat = all_zero(reduced_costs(ext, inst.B.row(i), basis_hat));
    if (coupling_flat) hat_bases.push_back(basis_hat);
  }

  for (const Basis& basis : lower_bases) {
    for (const Basis& basis_hat : hat_bases) {
      PessCert cert{basis, basis_hat};
      if (check_pess_cert(dec, cert).accepted) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace blp
