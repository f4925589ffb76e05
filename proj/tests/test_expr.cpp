#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "printers.hpp"
#include "cliff/expr.hpp"
#include "cliff/serialize.hpp"
#include "matrix_eval.hpp"

namespace cliff {
namespace {

TetradIndex ix(int v) { return TetradIndex(v); }

Multivector simplify(std::string_view text) { return evaluate(*parse(text)); }

std::size_t error_offset(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError &e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for \"" << text << "\"";
  return std::string_view::npos;
}

TEST(Parse, TreeShape) {
  const auto ast = parse("2*g(0) - g5");
  const auto *sub = std::get_if<Binary>(&ast->node);
  ASSERT_NE(sub, nullptr);
  EXPECT_EQ(sub->op, BinaryOp::subtract);
  EXPECT_TRUE(std::holds_alternative<PseudoscalarTerm>(sub->rhs->node));
  EXPECT_EQ(sub->rhs->offset, 9U);
  const auto *mul = std::get_if<Binary>(&sub->lhs->node);
  ASSERT_NE(mul, nullptr);
  EXPECT_EQ(mul->op, BinaryOp::multiply);
  const auto *gen = std::get_if<GeneratorTerm>(&mul->rhs->node);
  ASSERT_NE(gen, nullptr);
  EXPECT_EQ(gen->indices.size(), 1U);
}

TEST(Parse, BracketDefinition) {
  const auto ast = parse("1/2*(g(0)*g(1)-g(1)*g(0))");
  const auto *mul = std::get_if<Binary>(&ast->node);
  ASSERT_NE(mul, nullptr);
  EXPECT_EQ(mul->op, BinaryOp::multiply);
  EXPECT_EQ(std::get<Literal>(mul->lhs->node).value, Rational(1, 2));
  const auto *group = std::get_if<Group>(&mul->rhs->node);
  ASSERT_NE(group, nullptr);
  EXPECT_EQ(std::get<Binary>(group->inner->node).op, BinaryOp::subtract);
  EXPECT_EQ(evaluate(*ast), simplify("g(0,1)"));
}

TEST(Parse, WhitespaceIsInsignificant) {
  EXPECT_EQ(simplify("  g ( 0 , 1 ) *g5 "), simplify("g(0,1)*g5"));
  EXPECT_EQ(simplify("1 / 2"), Multivector::scalar(Rational(1, 2)));
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(error_offset("g(0)*"), 5U);
  EXPECT_EQ(error_offset("g(4)"), 2U);
  EXPECT_EQ(error_offset("g(0,1,2,3)"), 8U);
  EXPECT_EQ(error_offset("g(0"), 3U);
  EXPECT_EQ(error_offset("eta(0)"), 3U);
  EXPECT_EQ(error_offset("1/0"), 2U);
  EXPECT_EQ(error_offset("h(0)"), 0U);
  EXPECT_EQ(error_offset("g(0) g(1)"), 5U);
  EXPECT_EQ(error_offset(""), 0U);
}

TEST(Parse, ErrorMessages) {
  try {
    parse("g(0)*");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_STREQ(e.what(), "syntax error at offset 5: expected a factor");
    EXPECT_EQ(e.message(), "expected a factor");
  }
}

TEST(Parse, DeepNestingIsAnErrorNotACrash) {
  const std::string deep(10000, '(');
  EXPECT_THROW(parse(deep + "1"), ParseError);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(simplify("g(0)*g(1)*g(2)*g(3)"), Multivector(Blade::pseudoscalar()));
  EXPECT_EQ(simplify("g(0)*g(0,1)"), Multivector(Blade::vector(ix(1))));
  EXPECT_EQ(simplify("g(1,0)"), Multivector(Blade::bivector(ix(0), ix(1)), -1));
  EXPECT_EQ(simplify("g(2,2)"), Multivector());
  EXPECT_EQ(simplify("g(0)*g(0)"), Multivector::scalar(1));
  EXPECT_EQ(simplify("g5*g5"), Multivector::scalar(-1));
  EXPECT_EQ(simplify("eta(1,1) + eps(1,0,2,3)"), Multivector::scalar(-2));
  EXPECT_EQ(simplify("1/2*(g(0)+g(0))"), Multivector(Blade::vector(ix(0))));
  EXPECT_EQ(simplify("--g(3)"), Multivector(Blade::vector(ix(3))));
  Multivector expected = Multivector::scalar(-1);
  expected.add_term(Blade::bivector(ix(0), ix(1)), 1);
  EXPECT_EQ(simplify("(g(0)+g(1))*g(1)"), expected);
}

TEST(Render, Plain) {
  EXPECT_EQ(render(Multivector::scalar(1), RenderFormat::plain), "1");
  EXPECT_EQ(render(Multivector(), RenderFormat::plain), "0");
  EXPECT_EQ(render(simplify("(g(0)+g(1))*g(1)"), RenderFormat::plain), "-1 + g(0,1)");
  EXPECT_EQ(render(simplify("-1/2*g(2,1)"), RenderFormat::plain), "1/2*g(1,2)");
}

TEST(Render, Latex) {
  EXPECT_EQ(render(Multivector(Blade::pseudoscalar()), RenderFormat::latex), "\\gamma^{(5)}");
  EXPECT_EQ(render(simplify("g(0)*g5"), RenderFormat::latex), "\\gamma^{[123]}");
  EXPECT_EQ(render(simplify("1/2 - 3/4*g(2)"), RenderFormat::latex), "\\frac{1}{2} - \\frac{3}{4}\\gamma^{2}");
  EXPECT_EQ(render(Multivector(), RenderFormat::latex), "0");
  EXPECT_EQ(render(Blade::scalar(), RenderFormat::latex), "\\mathbb{I}");
}

TEST(Render, Json) {
  EXPECT_EQ(render(simplify("(g(0)+g(1))*g(1)"), RenderFormat::json),
            R"({"scalar":"-1","bivector":{"0,1":"1"}})");
  EXPECT_EQ(render(Multivector(), RenderFormat::json), "{}");
}

TEST(Render, FormatNames) {
  EXPECT_EQ(parse_format("latex"), RenderFormat::latex);
  EXPECT_FALSE(parse_format("tex").has_value());
}

TEST(Render, EveryBladeRoundTripsThroughPlain) {
  std::set<std::string> seen_plain;
  std::set<std::string> seen_latex;
  for (auto b : Blade::all()) {
    const std::string text = render(Multivector(b), RenderFormat::plain);
    EXPECT_EQ(simplify(text), Multivector(b)) << text;
    EXPECT_TRUE(seen_plain.insert(text).second);
    EXPECT_TRUE(seen_latex.insert(render(b, RenderFormat::latex)).second);
  }
}

TEST(Render, InjectiveOnRandomValues) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution present(0.25);
  for (auto fmt : {RenderFormat::plain, RenderFormat::latex, RenderFormat::json}) {
    std::map<std::string, Multivector> seen;
    for (int trial = 0; trial < 2000; ++trial) {
      Multivector mv;
      for (auto b : Blade::all()) {
        if (present(rng)) {
          mv.add_term(b, Rational(num(rng), den(rng)));
        }
      }
      const auto [it, fresh] = seen.emplace(render(mv, fmt), mv);
      EXPECT_TRUE(fresh || it->second == mv) << it->first;
    }
  }
}

// Random syntax trees of bounded depth, rendered back to text.
class ExprGenerator {
public:
  explicit ExprGenerator(unsigned seed) : rng_(seed) {}

  std::string expr(int depth) {
    const int choice = pick(depth <= 0 ? 4 : 8);
    switch (choice) {
    case 0:
      return std::to_string(pick(5)) + "/" + std::to_string(1 + pick(3));
    case 1: {
      const int n = 1 + pick(3);
      std::string out = "g(";
      for (int i = 0; i < n; ++i) {
        out += (i ? "," : "") + std::to_string(pick(4));
      }
      return out + ")";
    }
    case 2:
      return pick(2) ? "g5" : "eta(" + std::to_string(pick(4)) + "," + std::to_string(pick(4)) + ")";
    case 3:
      return "eps(" + std::to_string(pick(4)) + "," + std::to_string(pick(4)) + "," +
             std::to_string(pick(4)) + "," + std::to_string(pick(4)) + ")";
    case 4:
      return "-" + expr(depth - 1);
    case 5:
      return "(" + expr(depth - 1) + " + " + expr(depth - 1) + ")";
    case 6:
      return "(" + expr(depth - 1) + " - " + expr(depth - 1) + ")";
    default:
      return expr(depth - 1) + "*" + expr(depth - 1);
    }
  }

private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

class RandomExpressions : public ::testing::TestWithParam<RepresentationKind> {};

TEST_P(RandomExpressions, EngineAgreesWithMatrices) {
  const auto &rep = Representation::get(GetParam());
  ExprGenerator gen(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string text = gen.expr(4);
    const auto ast = parse(text);
    const auto value = evaluate(*ast);
    EXPECT_EQ(value, rep.decompose(testing::evaluate_matrix(*ast, rep))) << text;
    // Rendering is a fixed point of simplify.
    const auto plain = render(value, RenderFormat::plain);
    EXPECT_EQ(simplify(plain), value) << plain;
    EXPECT_EQ(multivector_from_json(nlohmann::json::parse(render(value, RenderFormat::json))), value);
  }
}

INSTANTIATE_TEST_SUITE_P(BothRepresentations, RandomExpressions,
                         ::testing::Values(RepresentationKind::standard, RepresentationKind::chiral),
                         [](const auto &info) { return std::string(to_string(info.param)); });

} // namespace
} // namespace cliff
