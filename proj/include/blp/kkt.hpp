#pragma once

#include "blp/bigm.hpp"

#include <string>

namespace blp {

/// Single-level MILP image of a bilevel instance: primal and dual feasibility
/// for the lower level plus big-M linearized complementarity
///   y_i <= Mp (1 - z_i),  (q - W'lambda)_i <= Md z_i.
/// Variable order is x (n, >= 0), y (m, >= 0), lambda (r, free), z (m, binary).
struct MilpModel {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  RatVector c;  // objective on x
  RatVector d;  // objective on y
  Rat mp;
  Rat md;

  enum class Sense { Eq, Le };
  struct Row {
    std::string name;
    RatVector coeffs;  // over (x, y, lambda, z)
    Sense sense = Sense::Eq;
    Rat rhs;
  };
  std::vector<Row> rows;

  std::size_t cols() const { return n + m + r + m; }
};

/// Assembles the MILP. The instance must already be integer-scaled with the
/// same scaling the big-M constants were computed from.
MilpModel build_milp(const BlpInstance& inst, const BigMResult& bigm);

/// Deterministic algebraic LP-format text: Minimize / Subject To / Bounds /
/// Binary / End with variables x1.., y1.., l1.., z1... Coefficients whose
/// denominators are 2-5-smooth are written as exact decimals; any other row
/// is pre-multiplied to integers (the objective records its factor in the
/// comment header).
std::string write_lp_format(const MilpModel& model);

/// Exact desk-scale MILP solve: enumerates all 2^m assignments of z, solves
/// each remaining LP exactly, and reports the best outcome. Any unbounded
/// restriction makes the whole model unbounded. Among equal optima the
/// lexicographically smallest z wins. The point is (x, y, lambda, z); the
/// basis field is left empty.
LpOutcome solve_by_z_enumeration(const MilpModel& model);

}  // namespace blp
