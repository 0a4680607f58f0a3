#include "blp/certificates.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blp {

const char* to_string(CheckFailure failure) {
  switch (failure) {
    case CheckFailure::None: return "none";
    case CheckFailure::SingularBasis: return "singular-basis";
    case CheckFailure::ReducedCostSign: return "reduced-cost-sign";
    case CheckFailure::SystemInfeasible: return "system-infeasible";
  }
  return "unknown";
}

namespace {

bool valid_basis_shape(const Basis& b, std::size_t size, std::size_t cols) {
  if (b.size() != size) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= cols) return false;
    if (i > 0 && b[i] <= b[i - 1]) return false;
  }
  return true;
}

bool all_nonneg(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x >= 0; });
}

bool all_nonpos(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x <= 0; });
}

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVector concat(const RatVector& lhs, const RatVector& rhs) {
  RatVector out = lhs;
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

}  // namespace

LinearSystem opt_feasible_region(const BlpInstance& inst, const Basis& b) {
  const std::size_t n = inst.n;
  const std::size_t m = inst.m;
  if (!valid_basis_shape(b, inst.r, m)) throw SingularBasisError();
  const RatMatrix wb = inst.W.select_columns(b);
  const auto basis_rows = solve_square_multi(wb, inst.T);  // W_B^{-1} T
  const auto basis_rhs = solve_square(wb, inst.h);         // W_B^{-1} h
  if (!basis_rows || !basis_rhs) throw SingularBasisError();
  RatVector qb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) qb[i] = inst.q[b[i]];
  const auto u = solve_square(wb.transposed(), qb);  // u' = q_B' W_B^{-1}
  const RatVector ut = vec_mat(*u, inst.T);
  const Rat uh = dot(*u, inst.h);

  LinearSystem sys = LinearSystem::with_cols(n + m);
  for (std::size_t i = 0; i < inst.k; ++i)
    sys.append_eq(concat(inst.A.row(i), inst.B.row(i)), inst.a[i]);
  for (std::size_t i = 0; i < inst.r; ++i)
    sys.append_eq(concat(inst.T.row(i), inst.W.row(i)), inst.h[i]);
  // Value row: q_B' W_B^{-1} T x + q'y = q_B' W_B^{-1} h.
  sys.append_eq(concat(ut, inst.q), uh);
  // Basic feasibility of b: -(W_B^{-1} T) x >= -W_B^{-1} h.
  for (std::size_t i = 0; i < inst.r; ++i) {
    RatVector row(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = -(*basis_rows)(i, j);
    sys.append_ge(row, -(*basis_rhs)[i]);
  }
  return sys;
}

LinearSystem opt_system(const BlpInstance& inst, const Rat& alpha, const Basis& b) {
  LinearSystem sys = opt_feasible_region(inst, b);
  sys.append_le(concat(inst.c, inst.d), alpha);
  return sys;
}

CheckReport check_opt_cert(const DecisionInstance& dec, const Basis& b) {
  const BlpInstance& inst = dec.instance;
  CheckReport report;
  if (!valid_basis_shape(b, inst.r, inst.m)) {
    report.failed_condition = CheckFailure::SingularBasis;
    return report;
  }
  RatVector rc;
  try {
    rc = reduced_costs(inst.W, inst.q, b);
  } catch (const SingularBasisError&) {
    report.failed_condition = CheckFailure::SingularBasis;
    return report;
  }
  if (!all_nonneg(rc)) {
    report.failed_condition = CheckFailure::ReducedCostSign;
    return report;
  }
  auto witness = check_feasible(opt_system(inst, dec.alpha, b));
  if (!witness) {
    report.failed_condition = CheckFailure::SystemInfeasible;
    return report;
  }
  report.accepted = true;
  report.witness = std::move(witness);
  return report;
}

RatMatrix extended_lower_matrix(const BlpInstance& inst) {
  RatMatrix ext(inst.r + 1, inst.m);
  for (std::size_t i = 0; i < inst.r; ++i)
    for (std::size_t j = 0; j < inst.m; ++j) ext(i, j) = inst.W(i, j);
  for (std::size_t j = 0; j < inst.m; ++j) ext(inst.r, j) = inst.q[j];
  return ext;
}

LinearSystem pess_systems(const BlpInstance& inst, const Rat& alpha, const Basis& b,
                          const Basis& basis_hat) {
  const std::size_t n = inst.n;
  const std::size_t r = inst.r;
  if (!valid_basis_shape(b, r, inst.m) || !valid_basis_shape(basis_hat, r + 1, inst.m))
    throw SingularBasisError();
  const RatMatrix wb = inst.W.select_columns(b);
  const auto basis_rows = solve_square_multi(wb, inst.T);  // W_B^{-1} T
  const auto basis_rhs = solve_square(wb, inst.h);         // W_B^{-1} h
  if (!basis_rows || !basis_rhs) throw SingularBasisError();
  RatVector qb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) qb[i] = inst.q[b[i]];
  const auto u = solve_square(wb.transposed(), qb);

  // Right-hand side of the optimal-face system as an affine map g0 - G x.
  RatMatrix gmap(r + 1, n);
  RatVector g0(r + 1);
  const RatVector ut = vec_mat(*u, inst.T);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) gmap(i, j) = inst.T(i, j);
    g0[i] = inst.h[i];
  }
  for (std::size_t j = 0; j < n; ++j) gmap(r, j) = ut[j];
  g0[r] = dot(*u, inst.h);

  const RatMatrix ext = extended_lower_matrix(inst);
  const RatMatrix ext_b = ext.select_columns(basis_hat);
  const auto kg = solve_square_multi(ext_b, gmap);  // Ehat^{-1} G
  const auto kg0 = solve_square(ext_b, g0);         // Ehat^{-1} g0
  if (!kg || !kg0) throw SingularBasisError();

  const RatMatrix ext_bt = ext_b.transposed();
  auto project = [&](const RatVector& cost) {
    RatVector sub(basis_hat.size());
    for (std::size_t i = 0; i < basis_hat.size(); ++i) sub[i] = cost[basis_hat[i]];
    return *solve_square(ext_bt, sub);  // cost_Bhat' Ehat^{-1} as a column
  };

  LinearSystem sys = LinearSystem::with_cols(n);
  // Basis b stays feasible: -(W_B^{-1} T) x >= -W_B^{-1} h.
  for (std::size_t i = 0; i < r; ++i) {
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = -(*basis_rows)(i, j);
    sys.append_ge(row, -(*basis_rhs)[i]);
  }
  // Worst-case objective bound: (c' - wd' G) x <= alpha - wd' g0.
  const RatVector wd = project(inst.d);
  {
    const RatVector wdg = vec_mat(wd, gmap);
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = inst.c[j] - wdg[j];
    sys.append_le(row, alpha - dot(wd, g0));
  }
  // Basic feasibility of basis_hat: -(Ehat^{-1} G) x >= -Ehat^{-1} g0.
  for (std::size_t i = 0; i < r + 1; ++i) {
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = -(*kg)(i, j);
    sys.append_ge(row, -(*kg0)[i]);
  }
  // Coupling identities: (a^i - w_i' G) x = a_i - w_i' g0 for each row i of
  // Ax + By = a, with w_i' = (B row i)_Bhat' Ehat^{-1}.
  for (std::size_t i = 0; i < inst.k; ++i) {
    const RatVector wi = project(inst.B.row(i));
    const RatVector wig = vec_mat(wi, gmap);
    RatVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = inst.A(i, j) - wig[j];
    sys.append_eq(row, inst.a[i] - dot(wi, g0));
  }
  return sys;
}

CheckReport check_pess_cert(const DecisionInstance& dec, const PessCert& cert) {
  const BlpInstance& inst = dec.instance;
  CheckReport report;
  if (!valid_basis_shape(cert.basis, inst.r, inst.m) ||
      !valid_basis_shape(cert.basis_hat, inst.r + 1, inst.m)) {
    report.failed_condition = CheckFailure::SingularBasis;
    return report;
  }
  const RatMatrix ext = extended_lower_matrix(inst);
  RatVector rc_q, rc_d;
  try {
    rc_q = reduced_costs(inst.W, inst.q, cert.basis);
    rc_d = reduced_costs(ext, inst.d, cert.basis_hat);
  } catch (const SingularBasisError&) {
    report.failed_condition = CheckFailure::SingularBasis;
    return report;
  }
  if (!all_nonneg(rc_q) || !all_nonpos(rc_d)) {
    report.failed_condition = CheckFailure::ReducedCostSign;
    return report;
  }
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (!all_zero(reduced_costs(ext, inst.B.row(i), cert.basis_hat))) {
      report.failed_condition = CheckFailure::ReducedCostSign;
      return report;
    }
  }
  auto witness = check_feasible(pess_systems(inst, dec.alpha, cert.basis, cert.basis_hat));
  if (!witness) {
    report.failed_condition = CheckFailure::SystemInfeasible;
    return report;
  }
  report.accepted = true;
  report.witness = std::move(witness);
  return report;
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

Basis read_indices(const std::vector<std::string>& tokens, std::size_t begin,
                   std::size_t end) {
  Basis b;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& t = tokens[i];
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("bad certificate index '" + t + "'", 1, 1);
    }
    const unsigned long long v = std::stoull(t);
    if (v == 0) throw ParseError("certificate indices are 1-based", 1, 1);
    b.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace

std::variant<OptCert, PessCert> parse_certificate(const std::string& text) {
  const std::vector<std::string> tokens = split_tokens(text);
  if (tokens.empty()) throw ParseError("empty certificate", 1, 1);
  if (tokens[0] == "OPT-CERT") {
    return OptCert{read_indices(tokens, 1, tokens.size())};
  }
  if (tokens[0] == "PESS-CERT") {
    auto sep = std::find(tokens.begin(), tokens.end(), ";");
    if (sep == tokens.end()) throw ParseError("missing ';' in PESS-CERT", 1, 1);
    const std::size_t split = static_cast<std::size_t>(sep - tokens.begin());
    PessCert cert;
    cert.basis = read_indices(tokens, 1, split);
    cert.basis_hat = read_indices(tokens, split + 1, tokens.size());
    return cert;
  }
  throw ParseError("expected OPT-CERT or PESS-CERT, got '" + tokens[0] + "'", 1, 1);
}

namespace {

void write_indices(std::ostream& os, const Basis& b) {
  for (std::size_t j : b) os << ' ' << (j + 1);
}

}  // namespace

std::string serialize_certificate(const OptCert& cert) {
  std::ostringstream os;
  os << "OPT-CERT";
  write_indices(os, cert.basis);
  os << '\n';
  return os.str();
}

std::string serialize_certificate(const PessCert& cert) {
  std::ostringstream os;
  os << "PESS-CERT";
  write_indices(os, cert.basis);
  os << " ;";
  write_indices(os, cert.basis_hat);
  os << '\n';
  return os.str();
}

}  // namespace blp
