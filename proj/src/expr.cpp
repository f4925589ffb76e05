#include "cliff/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "cliff/serialize.hpp"

namespace cliff {

ParseError::ParseError(std::size_t offset, const std::string &message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset), message_(message) {}

namespace {

constexpr int kMaxDepth = 200;

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      fail(pos_, std::string("unexpected '") + src_[pos_] + "'");
    }
    return e;
  }

private:
  [[noreturn]] static void fail(std::size_t at, const std::string &message) {
    throw ParseError(at, message);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_, std::string("expected '") + c + "'");
    }
  }

  static ExprPtr make(std::size_t at, auto node) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    e->offset = at;
    return e;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser &p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) {
        fail(p_.pos_, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p_.depth_; }
    Parser &p_;
  };

  ExprPtr expr() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t start = pos_;
    auto lhs = term();
    for (;;) {
      BinaryOp op;
      if (accept('+')) {
        op = BinaryOp::add;
      } else if (accept('-')) {
        op = BinaryOp::subtract;
      } else {
        return lhs;
      }
      auto rhs = term();
      lhs = make(start, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr term() {
    skip_ws();
    const std::size_t start = pos_;
    auto lhs = factor();
    while (accept('*')) {
      auto rhs = factor();
      lhs = make(start, Binary{BinaryOp::multiply, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  std::int64_t integer(std::string_view what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail(start, "expected " + std::string(what));
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{}) {
      fail(start, "integer literal out of range");
    }
    return value;
  }

  TetradIndex index() {
    skip_ws();
    const std::size_t start = pos_;
    const std::int64_t v = integer("an index");
    if (v > 3) {
      fail(start, "index " + std::to_string(v) + " out of range 0..3");
    }
    return TetradIndex(static_cast<int>(v));
  }

  std::vector<TetradIndex> index_list(std::size_t max_count, std::string_view name) {
    expect('(');
    std::vector<TetradIndex> out;
    do {
      skip_ws();
      const std::size_t at = pos_;
      out.push_back(index());
      if (out.size() > max_count) {
        fail(at, std::string(name) + "(...) takes at most " + std::to_string(max_count) +
                     " indices");
      }
    } while (accept(','));
    expect(')');
    return out;
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    return src_.substr(start, pos_ - start);
  }

  ExprPtr factor() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      fail(pos_, "expected a factor");
    }
    const char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      return make(start, Negation{factor()});
    }
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')');
      return make(start, Group{std::move(inner)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t num = integer("a number");
      std::int64_t den = 1;
      if (accept('/')) {
        skip_ws();
        const std::size_t den_at = pos_;
        den = integer("a denominator");
        if (den == 0) {
          fail(den_at, "zero denominator");
        }
      }
      return make(start, Literal{Rational(num, den)});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string_view name = identifier();
      if (name == "g5") {
        return make(start, PseudoscalarTerm{});
      }
      if (name == "g") {
        return make(start, GeneratorTerm{index_list(3, "g")});
      }
      if (name == "eta") {
        const auto idx = exact_indices(2, "eta");
        return make(start, MetricTerm{idx[0], idx[1]});
      }
      if (name == "eps") {
        const auto idx = exact_indices(4, "eps");
        return make(start, EpsilonTerm{{idx[0], idx[1], idx[2], idx[3]}});
      }
      fail(start, "unknown name '" + std::string(name) + "'");
    }
    fail(start, std::string("unexpected '") + c + "'");
  }

  std::vector<TetradIndex> exact_indices(std::size_t count, std::string_view name) {
    const std::size_t open = pos_;
    auto idx = index_list(count, name);
    if (idx.size() != count) {
      fail(open, std::string(name) + "(...) takes exactly " + std::to_string(count) + " indices");
    }
    return idx;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

struct Evaluator {
  const ProductEngine &engine;

  Multivector operator()(const Literal &n) const { return Multivector::scalar(n.value); }
  Multivector operator()(const GeneratorTerm &n) const { return bracket(n.indices); }
  Multivector operator()(const PseudoscalarTerm &) const {
    return Multivector(Blade::pseudoscalar());
  }
  Multivector operator()(const MetricTerm &n) const {
    return Multivector::scalar(metric(n.a, n.b));
  }
  Multivector operator()(const EpsilonTerm &n) const {
    return Multivector::scalar(epsilon_symbol(n.indices));
  }
  Multivector operator()(const Negation &n) const { return -evaluate(*n.operand, engine); }
  Multivector operator()(const Group &n) const { return evaluate(*n.inner, engine); }
  Multivector operator()(const Binary &n) const {
    auto lhs = evaluate(*n.lhs, engine);
    auto rhs = evaluate(*n.rhs, engine);
    switch (n.op) {
    case BinaryOp::add:
      return lhs + rhs;
    case BinaryOp::subtract:
      return lhs - rhs;
    case BinaryOp::multiply:
      return engine.product(lhs, rhs);
    }
    return {};
  }
};

std::string latex_coefficient(const Rational &magnitude) {
  if (magnitude.denominator() == 1) {
    return std::to_string(magnitude.numerator());
  }
  return "\\frac{" + std::to_string(magnitude.numerator()) + "}{" +
         std::to_string(magnitude.denominator()) + "}";
}

std::string render_latex(const Multivector &mv) {
  if (mv.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto &[blade, coeff] : mv.terms()) {
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (blade.grade() == 0) {
      out += latex_coefficient(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += latex_coefficient(magnitude);
    }
    out += render(blade, RenderFormat::latex);
  }
  return out;
}

} // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse_all(); }

Multivector evaluate(const Expr &expr, const ProductEngine &engine) {
  return std::visit(Evaluator{engine}, expr.node);
}

std::optional<RenderFormat> parse_format(std::string_view name) {
  if (name == "plain") {
    return RenderFormat::plain;
  }
  if (name == "latex") {
    return RenderFormat::latex;
  }
  if (name == "json") {
    return RenderFormat::json;
  }
  return std::nullopt;
}

std::string render(Blade b, RenderFormat fmt) {
  switch (fmt) {
  case RenderFormat::plain:
    return to_string(b);
  case RenderFormat::json:
    return to_json(Multivector(b)).dump();
  case RenderFormat::latex:
    break;
  }
  switch (b.grade()) {
  case 0:
    return "\\mathbb{I}";
  case 1:
    return "\\gamma^{" + std::to_string(b.indices()[0].value()) + "}";
  case 4:
    return "\\gamma^{(5)}";
  default:
    break;
  }
  std::string out = "\\gamma^{[";
  for (auto i : b.indices()) {
    out += std::to_string(i.value());
  }
  return out + "]}";
}

std::string render(const Multivector &mv, RenderFormat fmt) {
  switch (fmt) {
  case RenderFormat::plain:
    return to_string(mv);
  case RenderFormat::latex:
    return render_latex(mv);
  case RenderFormat::json:
    return to_json(mv).dump();
  }
  return {};
}

} // namespace cliff
