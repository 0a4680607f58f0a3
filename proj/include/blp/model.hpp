#pragma once

#include "blp/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace blp {

/// The nine data blocks of a bilevel linear program
///   min c'x + d'y  s.t.  Ax + By = a, x >= 0,
///                        y in argmin { q'v : Tx + Wv = h, v >= 0 }.
struct BlpInstance {
  std::size_t n = 0;  // upper variables
  std::size_t m = 0;  // lower variables
  std::size_t k = 0;  // coupling rows
  std::size_t r = 0;  // lower rows
  RatVector c;        // n
  RatVector d;        // m
  RatVector q;        // m
  RatMatrix A;        // k x n
  RatMatrix B;        // k x m
  RatVector a;        // k
  RatMatrix T;        // r x n
  RatMatrix W;        // r x m
  RatVector h;        // r

  bool operator==(const BlpInstance&) const = default;
  void validate() const;  // throws DimensionError
};

struct DecisionInstance {
  BlpInstance instance;
  Rat alpha;
};

struct RowScaling {
  std::vector<Int> upper_rows;  // factor per row of [A B a]
  std::vector<Int> lower_rows;  // factor per row of [T W h]
  Int q_scale = 1;
};

/// Instance with integer A,B,a,T,W,h,q. c and d are never scaled: they enter
/// no big-M formula and leaving them alone keeps objective values identical.
struct ScaledInstance {
  BlpInstance instance;
  RowScaling scaling;
};

/// Single-level binary program min g'x s.t. Dx <= e, x binary.
struct BinaryProgram {
  std::size_t p = 0;  // variables
  std::size_t t = 0;  // constraint rows
  RatVector g;        // p
  RatMatrix D;        // t x p
  RatVector e;        // t
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class DimensionError : public std::runtime_error {
 public:
  DimensionError(const std::string& block, std::size_t expected, std::size_t got);
  explicit DimensionError(const std::string& message);
  const std::string& block() const { return block_; }

 private:
  std::string block_;
};

class NegativeUpperDecision : public std::runtime_error {
 public:
  NegativeUpperDecision() : std::runtime_error("upper-level decision has a negative entry") {}
};

struct ParsedInstance {
  BlpInstance instance;
  std::optional<Rat> alpha;  // present iff the file carries an alpha: line

  DecisionInstance decision() const;
};

/// Parses the `BLP v1` instance grammar. Throws ParseError (with line/column)
/// or DimensionError (naming the offending block).
ParsedInstance parse_instance(const std::string& text);
std::string serialize_instance(const BlpInstance& inst,
                               const std::optional<Rat>& alpha = std::nullopt);

/// Parses the `BIN v1` binary-program grammar.
BinaryProgram parse_binary_program(const std::string& text);
std::string serialize_binary_program(const BinaryProgram& bp);

/// Clears denominators row by row: each row of [A|B|a] and of [T|W|h] is
/// multiplied by the lcm of its entries' denominators, q by the lcm of its
/// own. Feasible sets and the lower-level argmin are unchanged.
ScaledInstance scale_to_integers(const BlpInstance& inst);

/// The follower's problem min q'y s.t. Wy = h - T xbar, y >= 0.
StandardLp lower_level_at(const BlpInstance& inst, const RatVector& xbar);

enum class InfeasibilityReason {
  None,
  XNegative,
  YNegative,
  CouplingViolated,
  LowerRowsViolated,
  LowerLevelNoOptimum,
  YNotLowerLevelOptimal,
};

const char* to_string(InfeasibilityReason reason);

struct FeasibilityVerdict {
  bool feasible = false;
  InfeasibilityReason reason = InfeasibilityReason::None;
};

/// Optimistic bilevel feasibility of (x, y): checks signs, coupling, lower
/// rows, and exact lower-level optimality of y, reporting the first violated
/// condition.
FeasibilityVerdict is_bilevel_feasible(const BlpInstance& inst, const RatVector& x,
                                       const RatVector& y);

/// Encodes a binary program as a bilevel instance: per binary variable the
/// follower maximizes y_i subject to y_i <= x_i and y_i <= 1 - x_i, and the
/// upper level pins y_i = 0, which forces x_i in {0,1}.
BlpInstance gen_binary_gadget(const BinaryProgram& bp);

}  // namespace blp
