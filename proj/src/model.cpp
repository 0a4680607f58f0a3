#include "blp/model.hpp"

#include <cctype>
#include <sstream>

namespace blp {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", col " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

DimensionError::DimensionError(const std::string& block, std::size_t expected,
                               std::size_t got)
    : std::runtime_error("block '" + block + "': expected " + std::to_string(expected) +
                         " entries, got " + std::to_string(got)),
      block_(block) {}

DimensionError::DimensionError(const std::string& message)
    : std::runtime_error(message), block_() {}

void BlpInstance::validate() const {
  auto check_vec = [](const RatVector& v, std::size_t len, const char* name) {
    if (v.size() != len) throw DimensionError(name, len, v.size());
  };
  auto check_mat = [](const RatMatrix& mt, std::size_t rr, std::size_t cc,
                      const char* name) {
    if (mt.rows() != rr || mt.cols() != cc)
      throw DimensionError(name, rr * cc, mt.rows() * mt.cols());
  };
  check_vec(c, n, "c");
  check_vec(d, m, "d");
  check_vec(q, m, "q");
  check_mat(A, k, n, "A");
  check_mat(B, k, m, "B");
  check_vec(a, k, "a");
  check_mat(T, r, n, "T");
  check_mat(W, r, m, "W");
  check_vec(h, r, "h");
}

DecisionInstance ParsedInstance::decision() const {
  if (!alpha) throw DimensionError("instance has no alpha: line");
  return DecisionInstance{instance, *alpha};
}

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::string current;
  int tok_line = 0, tok_col = 0;
  bool in_comment = false;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back({current, tok_line, tok_col});
      current.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      in_comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (in_comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      flush();
      in_comment = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      if (current.empty()) {
        tok_line = line;
        tok_col = col;
      }
      current.push_back(ch);
    }
    ++col;
  }
  flush();
  return tokens;
}

bool is_label(const std::string& text) {
  return !text.empty() && text.back() == ':';
}

class TokenReader {
 public:
  explicit TokenReader(const std::string& text) : tokens_(tokenize(text)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (at_end()) throw ParseError("unexpected end of input", last_line(), last_col());
    return tokens_[pos_];
  }

  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }

  void expect_word(const std::string& word) {
    Token t = next();
    if (t.text != word)
      throw ParseError("expected '" + word + "', got '" + t.text + "'", t.line, t.col);
  }

  std::size_t read_count(const char* what) {
    Token t = next();
    for (char ch : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError(std::string("expected nonnegative integer for ") + what +
                             ", got '" + t.text + "'",
                         t.line, t.col);
    }
    if (t.text.empty() || t.text.size() > 9)
      throw ParseError(std::string("bad ") + what + " '" + t.text + "'", t.line, t.col);
    return static_cast<std::size_t>(std::stoull(t.text));
  }

  Rat read_rational() {
    Token t = next();
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), t.line, t.col);
    }
  }

  /// Reads rationals until the next label token (or EOF); count must match.
  RatVector read_block(const std::string& label, std::size_t expected) {
    Token t = next();
    if (t.text != label)
      throw ParseError("expected '" + label + "', got '" + t.text + "'", t.line, t.col);
    RatVector values;
    while (!at_end() && !is_label(peek().text)) values.push_back(read_rational());
    if (values.size() != expected)
      throw DimensionError(label.substr(0, label.size() - 1), expected, values.size());
    return values;
  }

  RatMatrix read_matrix(const std::string& label, std::size_t rows, std::size_t cols) {
    RatVector flat = read_block(label, rows * cols);
    RatMatrix mt(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) mt(i, j) = flat[i * cols + j];
    return mt;
  }

  int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
  int last_col() const { return tokens_.empty() ? 1 : tokens_.back().col; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void write_vector(std::ostream& os, const char* label, const RatVector& v) {
  os << label;
  for (const Rat& x : v) os << ' ' << to_string(x);
  os << '\n';
}

void write_matrix(std::ostream& os, const char* label, const RatMatrix& mt) {
  os << label << '\n';
  if (mt.cols() == 0) return;
  for (std::size_t i = 0; i < mt.rows(); ++i) {
    for (std::size_t j = 0; j < mt.cols(); ++j) {
      if (j > 0) os << ' ';
      os << to_string(mt(i, j));
    }
    os << '\n';
  }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  TokenReader in(text);
  in.expect_word("BLP");
  in.expect_word("v1");
  in.expect_word("dims:");
  ParsedInstance out;
  BlpInstance& inst = out.instance;
  inst.n = in.read_count("n");
  inst.m = in.read_count("m");
  inst.k = in.read_count("k");
  inst.r = in.read_count("r");
  inst.c = in.read_block("c:", inst.n);
  inst.d = in.read_block("d:", inst.m);
  inst.q = in.read_block("q:", inst.m);
  inst.A = in.read_matrix("A:", inst.k, inst.n);
  inst.B = in.read_matrix("B:", inst.k, inst.m);
  inst.a = in.read_block("a:", inst.k);
  inst.T = in.read_matrix("T:", inst.r, inst.n);
  inst.W = in.read_matrix("W:", inst.r, inst.m);
  inst.h = in.read_block("h:", inst.r);
  if (!in.at_end()) {
    RatVector alpha = in.read_block("alpha:", 1);
    out.alpha = alpha[0];
  }
  if (!in.at_end()) {
    Token t = in.next();
    throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.col);
  }
  return out;
}

std::string serialize_instance(const BlpInstance& inst, const std::optional<Rat>& alpha) {
  std::ostringstream os;
  os << "BLP v1\n";
  os << "dims: " << inst.n << ' ' << inst.m << ' ' << inst.k << ' ' << inst.r << '\n';
  write_vector(os, "c:", inst.c);
  write_vector(os, "d:", inst.d);
  write_vector(os, "q:", inst.q);
  write_matrix(os, "A:", inst.A);
  write_matrix(os, "B:", inst.B);
  write_vector(os, "a:", inst.a);
  write_matrix(os, "T:", inst.T);
  write_matrix(os, "W:", inst.W);
  write_vector(os, "h:", inst.h);
  if (alpha) os << "alpha: " << to_string(*alpha) << '\n';
  return os.str();
}

BinaryProgram parse_binary_program(const std::string& text) {
  TokenReader in(text);
  in.expect_word("BIN");
  in.expect_word("v1");
  in.expect_word("dims:");
  BinaryProgram bp;
  bp.p = in.read_count("p");
  bp.t = in.read_count("t");
  bp.g = in.read_block("g:", bp.p);
  bp.D = in.read_matrix("D:", bp.t, bp.p);
  bp.e = in.read_block("e:", bp.t);
  if (!in.at_end()) {
    Token t = in.next();
    throw ParseError("unexpected trailing token '" + t.text + "'", t.line, t.col);
  }
  return bp;
}

std::string serialize_binary_program(const BinaryProgram& bp) {
  std::ostringstream os;
  os << "BIN v1\n";
  os << "dims: " << bp.p << ' ' << bp.t << '\n';
  write_vector(os, "g:", bp.g);
  write_matrix(os, "D:", bp.D);
  write_vector(os, "e:", bp.e);
  return os.str();
}

namespace {

Int row_denominator_lcm(const RatMatrix& lhs1, const RatMatrix& lhs2, const Rat& rhs,
                        std::size_t row) {
  Int l = 1;
  for (std::size_t j = 0; j < lhs1.cols(); ++j)
    l = boost::multiprecision::lcm(l, Int(denominator(lhs1(row, j))));
  for (std::size_t j = 0; j < lhs2.cols(); ++j)
    l = boost::multiprecision::lcm(l, Int(denominator(lhs2(row, j))));
  return boost::multiprecision::lcm(l, Int(denominator(rhs)));
}

void scale_row(RatMatrix& lhs1, RatMatrix& lhs2, Rat& rhs, std::size_t row, const Int& f) {
  const Rat factor(f);
  for (std::size_t j = 0; j < lhs1.cols(); ++j) lhs1(row, j) *= factor;
  for (std::size_t j = 0; j < lhs2.cols(); ++j) lhs2(row, j) *= factor;
  rhs *= factor;
}

}  // namespace

ScaledInstance scale_to_integers(const BlpInstance& inst) {
  ScaledInstance out{inst, {}};
  BlpInstance& s = out.instance;
  out.scaling.upper_rows.resize(inst.k);
  out.scaling.lower_rows.resize(inst.r);
  for (std::size_t i = 0; i < inst.k; ++i) {
    const Int f = row_denominator_lcm(s.A, s.B, s.a[i], i);
    scale_row(s.A, s.B, s.a[i], i, f);
    out.scaling.upper_rows[i] = f;
  }
  for (std::size_t i = 0; i < inst.r; ++i) {
    const Int f = row_denominator_lcm(s.T, s.W, s.h[i], i);
    scale_row(s.T, s.W, s.h[i], i, f);
    out.scaling.lower_rows[i] = f;
  }
  out.scaling.q_scale = lcm_denominators(s.q);
  const Rat qf(out.scaling.q_scale);
  for (Rat& v : s.q) v *= qf;
  return out;
}

StandardLp lower_level_at(const BlpInstance& inst, const RatVector& xbar) {
  if (xbar.size() != inst.n) throw DimensionError("xbar", inst.n, xbar.size());
  for (const Rat& v : xbar)
    if (v < 0) throw NegativeUpperDecision();
  RatVector b = inst.h;
  const RatVector tx = mat_vec(inst.T, xbar);
  for (std::size_t i = 0; i < inst.r; ++i) b[i] -= tx[i];
  return StandardLp{inst.W, std::move(b), inst.q};
}

const char* to_string(InfeasibilityReason reason) {
  switch (reason) {
    case InfeasibilityReason::None: return "none";
    case InfeasibilityReason::XNegative: return "x >= 0 violated";
    case InfeasibilityReason::YNegative: return "y >= 0 violated";
    case InfeasibilityReason::CouplingViolated: return "coupling violated";
    case InfeasibilityReason::LowerRowsViolated: return "lower-level rows violated";
    case InfeasibilityReason::LowerLevelNoOptimum: return "lower-level-has-no-optimum";
    case InfeasibilityReason::YNotLowerLevelOptimal: return "y not lower-level optimal";
  }
  return "unknown";
}

FeasibilityVerdict is_bilevel_feasible(const BlpInstance& inst, const RatVector& x,
                                       const RatVector& y) {
  if (x.size() != inst.n) throw DimensionError("x", inst.n, x.size());
  if (y.size() != inst.m) throw DimensionError("y", inst.m, y.size());
  auto fail = [](InfeasibilityReason why) { return FeasibilityVerdict{false, why}; };
  for (const Rat& v : x)
    if (v < 0) return fail(InfeasibilityReason::XNegative);
  for (const Rat& v : y)
    if (v < 0) return fail(InfeasibilityReason::YNegative);
  const RatVector ax = mat_vec(inst.A, x);
  const RatVector by = mat_vec(inst.B, y);
  for (std::size_t i = 0; i < inst.k; ++i)
    if (ax[i] + by[i] != inst.a[i]) return fail(InfeasibilityReason::CouplingViolated);
  const RatVector tx = mat_vec(inst.T, x);
  const RatVector wy = mat_vec(inst.W, y);
  for (std::size_t i = 0; i < inst.r; ++i)
    if (tx[i] + wy[i] != inst.h[i]) return fail(InfeasibilityReason::LowerRowsViolated);
  const LpOutcome ll = solve(lower_level_at(inst, x));
  if (ll.tag != OutcomeTag::Optimal)
    return fail(InfeasibilityReason::LowerLevelNoOptimum);
  if (dot(inst.q, y) != ll.value)
    return fail(InfeasibilityReason::YNotLowerLevelOptimal);
  return FeasibilityVerdict{true, InfeasibilityReason::None};
}

BlpInstance gen_binary_gadget(const BinaryProgram& bp) {
  BlpInstance inst;
  const std::size_t p = bp.p;
  const std::size_t t = bp.t;
  inst.n = p + t;       // original binaries plus one slack per Dx <= e row
  inst.m = 3 * p;       // (y_i, u_i, v_i) per binary variable
  inst.k = t + p;       // slacked rows of D, then the coupling rows y_i = 0
  inst.r = 2 * p;       // y_i <= x_i and y_i <= 1 - x_i in slack form

  inst.c.assign(inst.n, Rat(0));
  for (std::size_t j = 0; j < p; ++j) inst.c[j] = bp.g[j];
  inst.d.assign(inst.m, Rat(0));
  inst.q.assign(inst.m, Rat(0));
  for (std::size_t i = 0; i < p; ++i) inst.q[3 * i] = -1;  // follower maximizes y_i

  inst.A = RatMatrix(inst.k, inst.n);
  inst.B = RatMatrix(inst.k, inst.m);
  inst.a.assign(inst.k, Rat(0));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < p; ++j) inst.A(i, j) = bp.D(i, j);
    inst.A(i, p + i) = 1;
    inst.a[i] = bp.e[i];
  }
  for (std::size_t i = 0; i < p; ++i) {
    inst.B(t + i, 3 * i) = 1;  // y_i = 0
  }

  inst.T = RatMatrix(inst.r, inst.n);
  inst.W = RatMatrix(inst.r, inst.m);
  inst.h.assign(inst.r, Rat(0));
  for (std::size_t i = 0; i < p; ++i) {
    // -x_i + y_i + u_i = 0
    inst.T(2 * i, i) = -1;
    inst.W(2 * i, 3 * i) = 1;
    inst.W(2 * i, 3 * i + 1) = 1;
    // x_i + y_i + v_i = 1
    inst.T(2 * i + 1, i) = 1;
    inst.W(2 * i + 1, 3 * i) = 1;
    inst.W(2 * i + 1, 3 * i + 2) = 1;
    inst.h[2 * i + 1] = 1;
  }
  return inst;
}

}  // namespace blp
