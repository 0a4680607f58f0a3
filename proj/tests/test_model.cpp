#include "blp/model.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace blp;
using blp::testing::frac;
using blp::testing::mat;
using blp::testing::path_instance;
using blp::testing::uniq_instance;
using blp::testing::vec;

namespace {

std::string path_text() {
  return serialize_instance(path_instance());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string data_dir() {
  if (const char* env = std::getenv("BLP_DATA")) return env;
  return "../data";
}

}  // namespace

TEST_CASE("PATH parses with the expected shape") {
  const ParsedInstance parsed = parse_instance(path_text());
  CHECK(parsed.instance == path_instance());
  CHECK_FALSE(parsed.alpha.has_value());
  CHECK(parsed.instance.n == 0);
  CHECK(parsed.instance.m == 2);
  CHECK(parsed.instance.k == 1);
  CHECK(parsed.instance.r == 1);
}

TEST_CASE("shipped fixture files match the in-memory fixtures") {
  CHECK(parse_instance(read_file(data_dir() + "/path.blp")).instance == path_instance());
  CHECK(parse_instance(read_file(data_dir() + "/uniq.blp")).instance == uniq_instance());
  CHECK(parse_instance(read_file(data_dir() + "/couple.blp")).instance ==
        blp::testing::couple_instance());
}

TEST_CASE("mutated instance text never escapes the two parse error types") {
  std::mt19937_64 rng(89);
  const std::string base = serialize_instance(path_instance(), Rat(1));
  std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
  const std::string alphabet = "0123456789/-+.:aWz #\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = base;
    const int edits = 1 + trial % 3;
    for (int e = 0; e < edits; ++e) text[pos(rng)] = alphabet[pick(rng)];
    try {
      (void)parse_instance(text);
    } catch (const ParseError&) {
    } catch (const DimensionError&) {
    }
  }
  CHECK(true);  // reaching here means no unexpected exception or crash
}

TEST_CASE("alpha line turns an instance into a decision instance") {
  const ParsedInstance parsed = parse_instance(path_text() + "alpha: 1\n");
  REQUIRE(parsed.alpha.has_value());
  CHECK(*parsed.alpha == 1);
  CHECK(parsed.decision().alpha == 1);
  CHECK(parsed.decision().instance == path_instance());
}

TEST_CASE("block with the wrong entry count raises DimensionError naming it") {
  // A is declared 1x0 by dims but carries one entry.
  std::string text = path_text();
  text.replace(text.find("A:\n"), 3, "A:\n7\n");
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("'A'"), DimensionError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_instance("BLP v1\ndims: 0 2 1 1\nc:\nd: 1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(ex.line() == 4);
    CHECK(ex.column() == 6);
  }
  CHECK_THROWS_AS(parse_instance("BLP v2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance(path_text() + "alpha: 1\nextra"), ParseError);
}

TEST_CASE("serialize/parse round-trips exactly") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const BlpInstance inst = blp::testing::random_instance(rng, trial % 2 == 0);
    CHECK(parse_instance(serialize_instance(inst)).instance == inst);
    const ParsedInstance with_alpha =
        parse_instance(serialize_instance(inst, Rat(trial) / 7));
    CHECK(with_alpha.instance == inst);
    REQUIRE(with_alpha.alpha.has_value());
    CHECK(*with_alpha.alpha == Rat(trial) / 7);
  }
}

TEST_CASE("binary program grammar round-trips") {
  BinaryProgram bp;
  bp.p = 2;
  bp.t = 1;
  bp.g = {Rat(-3), Rat(-5)};
  bp.D = mat({{1, 1}});
  bp.e = vec({1});
  const BinaryProgram parsed = parse_binary_program(serialize_binary_program(bp));
  CHECK(parsed.p == bp.p);
  CHECK(parsed.t == bp.t);
  CHECK(parsed.g == bp.g);
  CHECK(parsed.D == bp.D);
  CHECK(parsed.e == bp.e);
  CHECK_THROWS_AS(parse_binary_program("BIN v1\ndims: 1 0\ng: 1 2\nD:\ne:\n"),
                  DimensionError);
}

TEST_CASE("scaling clears denominators row by row") {
  SUBCASE("integer instances scale by 1") {
    const ScaledInstance s = scale_to_integers(path_instance());
    CHECK(s.instance == path_instance());
    CHECK(s.scaling.upper_rows == std::vector<Int>{1});
    CHECK(s.scaling.lower_rows == std::vector<Int>{1});
    CHECK(s.scaling.q_scale == 1);
  }
  SUBCASE("single lower row (1/2)x + (1/3)y = 1 becomes 3x + 2y = 6") {
    BlpInstance inst = uniq_instance();
    inst.T(0, 0) = frac(1, 2);
    inst.W(0, 0) = frac(1, 3);
    inst.W(0, 1) = 0;
    inst.h[0] = 1;
    const ScaledInstance s = scale_to_integers(inst);
    CHECK(s.instance.T(0, 0) == 3);
    CHECK(s.instance.W(0, 0) == 2);
    CHECK(s.instance.h[0] == 6);
    CHECK(s.scaling.lower_rows == std::vector<Int>{6});
  }
  SUBCASE("q = (1/2, 1/4) scales by 4 to (2, 1)") {
    BlpInstance inst = uniq_instance();
    inst.q = {frac(1, 2), frac(1, 4)};
    const ScaledInstance s = scale_to_integers(inst);
    CHECK(s.scaling.q_scale == 4);
    CHECK(s.instance.q == vec({2, 1}));
  }
}

TEST_CASE("scaling preserves bilevel feasibility on random rational instances") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const BlpInstance inst = blp::testing::random_instance(rng, false);
    const ScaledInstance scaled = scale_to_integers(inst);
    for (int sample = 0; sample < 3; ++sample) {
      RatVector x(inst.n), y(inst.m);
      for (Rat& v : x) v = Rat(small(rng) + 2) / den(rng);
      for (Rat& v : y) v = Rat(small(rng) + 2) / den(rng);
      const FeasibilityVerdict original = is_bilevel_feasible(inst, x, y);
      const FeasibilityVerdict rescaled = is_bilevel_feasible(scaled.instance, x, y);
      CHECK(original.feasible == rescaled.feasible);
    }
  }
}

TEST_CASE("scaling preserves the solver's optimum (c, d untouched)") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const BlpInstance inst = blp::testing::random_instance(rng, false);
    const ScaledInstance scaled = scale_to_integers(inst);
    const BilevelOutcome original = solve_optimistic(inst);
    const BilevelOutcome rescaled = solve_optimistic(scaled.instance);
    CHECK(original.tag == rescaled.tag);
    if (original.tag == OutcomeTag::Optimal) CHECK(original.value == rescaled.value);
  }
}

TEST_CASE("lower_level_at builds the follower's standard form") {
  SUBCASE("PATH at the empty decision") {
    const StandardLp ll = lower_level_at(path_instance(), {});
    CHECK(ll.a == mat({{1, 1}}));
    CHECK(ll.b == vec({2}));
    CHECK(ll.c == vec({0, 0}));
  }
  SUBCASE("right-hand side shifts by T xbar") {
    BlpInstance inst = uniq_instance();
    inst.T = mat({{1}});
    inst.h = vec({1});
    const StandardLp ll = lower_level_at(inst, vec({1}));
    CHECK(ll.b == vec({0}));
  }
  SUBCASE("r = 0 gives a zero-row LP") {
    BlpInstance inst = uniq_instance();
    inst.r = 0;
    inst.T = RatMatrix(0, 1);
    inst.W = RatMatrix(0, 2);
    inst.h = {};
    const StandardLp ll = lower_level_at(inst, vec({1}));
    CHECK(ll.a.rows() == 0);
  }
  SUBCASE("negative upper decision is rejected") {
    CHECK_THROWS_AS(lower_level_at(uniq_instance(), {Rat(-1)}), NegativeUpperDecision);
  }
}

TEST_CASE("bilevel feasibility names the first violated condition") {
  const BlpInstance path = path_instance();
  CHECK(is_bilevel_feasible(path, {}, vec({1, 1})).feasible);
  {
    const FeasibilityVerdict v = is_bilevel_feasible(path, {}, vec({2, 0}));
    CHECK_FALSE(v.feasible);
    CHECK(v.reason == InfeasibilityReason::CouplingViolated);
  }
  {
    const FeasibilityVerdict v = is_bilevel_feasible(path, {}, {Rat(3), Rat(-1)});
    CHECK_FALSE(v.feasible);
    CHECK(v.reason == InfeasibilityReason::YNegative);
  }
  {
    // q = 0 makes every lower-feasible y optimal, so a non-optimal y needs a
    // nonzero q: UNIQ with y1 > 0 wastes follower objective.
    const FeasibilityVerdict v =
        is_bilevel_feasible(uniq_instance(), vec({1}), vec({1, 0}));
    CHECK_FALSE(v.feasible);
    CHECK(v.reason == InfeasibilityReason::YNotLowerLevelOptimal);
  }
  {
    // Unbounded lower level: min -y over y >= 0 with no rows.
    BlpInstance inst = uniq_instance();
    inst.r = 0;
    inst.T = RatMatrix(0, 1);
    inst.W = RatMatrix(0, 2);
    inst.h = {};
    inst.q = {Rat(-1), Rat(0)};
    const FeasibilityVerdict v = is_bilevel_feasible(inst, vec({0}), vec({0, 0}));
    CHECK_FALSE(v.feasible);
    CHECK(v.reason == InfeasibilityReason::LowerLevelNoOptimum);
  }
}

TEST_CASE("gadget construction shape and membership") {
  BinaryProgram bp;
  bp.p = 2;
  bp.t = 1;
  bp.g = {Rat(-3), Rat(-5)};
  bp.D = mat({{1, 1}});
  bp.e = vec({1});
  const BlpInstance gadget = gen_binary_gadget(bp);
  gadget.validate();
  CHECK(gadget.n == 3);   // x1 x2 + one slack
  CHECK(gadget.m == 6);   // (y,u,v) per binary
  CHECK(gadget.k == 3);   // slacked knapsack row + two coupling rows
  CHECK(gadget.r == 4);
  CHECK_FALSE(enumerate_bases(gadget.W).empty());

  // x = (0,1), slack 0: y_i = min(x_i, 1-x_i) = 0, u_i = x_i, v_i = 1 - x_i.
  const RatVector x = vec({0, 1, 0});
  const RatVector y = vec({0, 0, 1, 0, 1, 0});
  CHECK(is_bilevel_feasible(gadget, x, y).feasible);
  CHECK(dot(gadget.c, x) + dot(gadget.d, y) == -5);

  // Fractional x1 = 1/2 forces y1 = 1/2 at the follower's optimum, so any y
  // obeying the coupling row y1 = 0 is not lower-level optimal.
  const RatVector xf = {frac(1, 2), Rat(0), frac(1, 2)};
  const RatVector yf = {Rat(0), frac(1, 2), frac(1, 2), Rat(0), Rat(0), Rat(1)};
  const FeasibilityVerdict v = is_bilevel_feasible(gadget, xf, yf);
  CHECK_FALSE(v.feasible);
  CHECK(v.reason == InfeasibilityReason::YNotLowerLevelOptimal);

  // x1 above 1 makes the lower level infeasible outright.
  const FeasibilityVerdict w =
      is_bilevel_feasible(gadget, vec({2, 0, 0}), vec({0, 2, 0, 0, 1, 0}));
  CHECK_FALSE(w.feasible);
}
