#include "blp/kkt.hpp"

#include <optional>
#include <sstream>

namespace blp {

MilpModel build_milp(const BlpInstance& inst, const BigMResult& bigm) {
  MilpModel model;
  model.n = inst.n;
  model.m = inst.m;
  model.r = inst.r;
  model.c = inst.c;
  model.d = inst.d;
  model.mp = bigm.mp;
  model.md = bigm.md;
  const std::size_t n = inst.n, m = inst.m, r = inst.r;
  const std::size_t cols = model.cols();
  auto zero_row = [&] { return RatVector(cols, Rat(0)); };

  for (std::size_t i = 0; i < inst.k; ++i) {
    MilpModel::Row row{"up" + std::to_string(i + 1), zero_row(), MilpModel::Sense::Eq,
                       inst.a[i]};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = inst.A(i, j);
    for (std::size_t j = 0; j < m; ++j) row.coeffs[n + j] = inst.B(i, j);
    model.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < r; ++i) {
    MilpModel::Row row{"ll" + std::to_string(i + 1), zero_row(), MilpModel::Sense::Eq,
                       inst.h[i]};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = inst.T(i, j);
    for (std::size_t j = 0; j < m; ++j) row.coeffs[n + j] = inst.W(i, j);
    model.rows.push_back(std::move(row));
  }
  // Dual feasibility W'lambda <= q.
  for (std::size_t j = 0; j < m; ++j) {
    MilpModel::Row row{"du" + std::to_string(j + 1), zero_row(), MilpModel::Sense::Le,
                       inst.q[j]};
    for (std::size_t i = 0; i < r; ++i) row.coeffs[n + m + i] = inst.W(i, j);
    model.rows.push_back(std::move(row));
  }
  // Complementarity, primal side: y_i + Mp z_i <= Mp.
  for (std::size_t i = 0; i < m; ++i) {
    MilpModel::Row row{"pc" + std::to_string(i + 1), zero_row(), MilpModel::Sense::Le,
                       bigm.mp};
    row.coeffs[n + i] = 1;
    row.coeffs[n + m + r + i] = bigm.mp;
    model.rows.push_back(std::move(row));
  }
  // Complementarity, dual side: -(W'lambda)_i - Md z_i <= -q_i.
  for (std::size_t i = 0; i < m; ++i) {
    MilpModel::Row row{"dc" + std::to_string(i + 1), zero_row(), MilpModel::Sense::Le,
                       Rat(-inst.q[i])};
    for (std::size_t j = 0; j < r; ++j) row.coeffs[n + m + j] = -inst.W(j, i);
    row.coeffs[n + m + r + i] = -bigm.md;
    model.rows.push_back(std::move(row));
  }
  return model;
}

namespace {

std::string variable_name(const MilpModel& model, std::size_t col) {
  if (col < model.n) return "x" + std::to_string(col + 1);
  col -= model.n;
  if (col < model.m) return "y" + std::to_string(col + 1);
  col -= model.m;
  if (col < model.r) return "l" + std::to_string(col + 1);
  return "z" + std::to_string(col - model.r + 1);
}

bool smooth_denominator(const Rat& v) {
  Int den = denominator(v);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

// Exact decimal expansion; requires a 2-5-smooth denominator.
std::string decimal_string(const Rat& v) {
  Int den = denominator(v);
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  const unsigned digits = std::max(twos, fives);
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const Int scaled_abs = Int(abs(numerator(v))) * Int(scale / Int(denominator(v)));
  const Int whole = scaled_abs / scale;
  std::string frac = Int(scaled_abs % scale).str();
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (v < 0 ? "-" : "") + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

void append_terms(std::ostream& os, const MilpModel& model, const RatVector& coeffs) {
  bool first = true;
  bool any = false;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rat& coef = coeffs[j];
    if (coef == 0) continue;
    any = true;
    const Rat mag = abs(coef);
    if (first) {
      os << (coef < 0 ? "- " : "");
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    if (mag != 1) os << decimal_string(mag) << ' ';
    os << variable_name(model, j);
    first = false;
  }
  if (!any) {
    // Convention for an all-zero left-hand side.
    os << "0 " << (model.cols() > 0 ? variable_name(model, 0) : std::string("x1"));
  }
}

}  // namespace

std::string write_lp_format(const MilpModel& model) {
  // Rows whose denominators are not 2-5-smooth are cleared to integers; the
  // objective keeps its optimum set under positive scaling, with the factor
  // recorded up front.
  RatVector objective(model.cols(), Rat(0));
  for (std::size_t j = 0; j < model.n; ++j) objective[j] = model.c[j];
  for (std::size_t j = 0; j < model.m; ++j) objective[model.n + j] = model.d[j];
  Int obj_factor = 1;
  {
    bool smooth = true;
    for (const Rat& v : objective) smooth = smooth && smooth_denominator(v);
    if (!smooth) {
      obj_factor = lcm_denominators(objective);
      for (Rat& v : objective) v *= Rat(obj_factor);
    }
  }

  std::ostringstream os;
  os << "\\ big-M constants: Mp = " << to_string(model.mp)
     << "  Md = " << to_string(model.md) << '\n';
  if (obj_factor != 1) os << "\\ objective scaled by " << obj_factor.str() << '\n';
  os << "Minimize\n obj: ";
  append_terms(os, model, objective);
  os << '\n';
  os << "Subject To\n";
  for (const MilpModel::Row& row : model.rows) {
    RatVector coeffs = row.coeffs;
    Rat rhs = row.rhs;
    bool smooth = smooth_denominator(rhs);
    for (const Rat& v : coeffs) smooth = smooth && smooth_denominator(v);
    if (!smooth) {
      RatVector all = coeffs;
      all.push_back(rhs);
      const Rat f{lcm_denominators(all)};
      for (Rat& v : coeffs) v *= f;
      rhs *= f;
    }
    os << ' ' << row.name << ": ";
    append_terms(os, model, coeffs);
    os << (row.sense == MilpModel::Sense::Eq ? " = " : " <= ") << decimal_string(rhs)
       << '\n';
  }
  os << "Bounds\n";
  for (std::size_t i = 0; i < model.r; ++i)
    os << " l" << (i + 1) << " free\n";
  os << "Binary\n";
  if (model.m > 0) {
    os << ' ';
    for (std::size_t i = 0; i < model.m; ++i) os << (i > 0 ? " " : "") << 'z' << (i + 1);
    os << '\n';
  }
  os << "End\n";
  return os.str();
}

LpOutcome solve_by_z_enumeration(const MilpModel& model) {
  const std::size_t n = model.n, m = model.m, r = model.r;
  if (m > 20) throw std::invalid_argument("z enumeration beyond desk scale");
  const std::size_t cont = n + m + r;

  RatVector objective(cont, Rat(0));
  for (std::size_t j = 0; j < n; ++j) objective[j] = model.c[j];
  for (std::size_t j = 0; j < m; ++j) objective[n + j] = model.d[j];

  // The constraint rows are shared by every z assignment; only right-hand
  // sides move. Build the system once and patch rhs per assignment.
  LinearSystem sys = LinearSystem::with_cols(cont);
  for (std::size_t j = n + m; j < cont; ++j) sys.nonneg[j] = false;  // lambda free
  struct Slot {
    bool eq;
    std::size_t index;
    const MilpModel::Row* row;
  };
  std::vector<Slot> slots;
  for (const MilpModel::Row& row : model.rows) {
    const RatVector lhs(row.coeffs.begin(), row.coeffs.begin() + cont);
    if (row.sense == MilpModel::Sense::Eq) {
      sys.append_eq(lhs, row.rhs);
      slots.push_back({true, sys.eq_rhs.size() - 1, &row});
    } else {
      sys.append_le(lhs, row.rhs);
      slots.push_back({false, sys.le_rhs.size() - 1, &row});
    }
  }

  std::optional<LpOutcome> best;
  RatVector best_z;
  for (std::size_t g = 0; g < (std::size_t{1} << m); ++g) {
    RatVector z(m);
    for (std::size_t i = 0; i < m; ++i) z[i] = (g >> (m - 1 - i)) & 1u;
    for (const Slot& slot : slots) {
      Rat rhs = slot.row->rhs;
      for (std::size_t i = 0; i < m; ++i) rhs -= slot.row->coeffs[cont + i] * z[i];
      (slot.eq ? sys.eq_rhs : sys.le_rhs)[slot.index] = std::move(rhs);
    }
    LpOutcome out = optimize(sys, objective);
    if (out.tag == OutcomeTag::Unbounded) return LpOutcome::unbounded();
    if (out.tag != OutcomeTag::Optimal) continue;
    if (!best || out.value < best->value) {
      best = out;
      best_z = z;
    }
  }
  if (!best) return LpOutcome::infeasible();
  RatVector point = best->point;
  point.insert(point.end(), best_z.begin(), best_z.end());
  return LpOutcome::optimal({}, std::move(point), best->value);
}

}  // namespace blp
