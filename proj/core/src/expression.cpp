#include "conemm/expression.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace conemm {

using Scalar = std::function<double(double, double)>;
using Cond = std::function<bool(double, double)>;

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ScalarExpr scalar() {
    ScalarExpr e;
    e.fn_ = expr();
    finish();
    e.text_ = std::string(s_);
    return e;
  }

  ConditionExpr condition() {
    ConditionExpr e;
    e.fn_ = disjunction();
    finish();
    e.text_ = std::string(s_);
    return e;
  }

  ValueExpr value() {
    ValueExpr e;
    const std::string name = identifier();
    expect('(');
    std::vector<Scalar> args;
    if (!peek(')')) {
      args.push_back(expr());
      while (accept(',')) args.push_back(expr());
    }
    expect(')');
    finish();
    e.text_ = std::string(s_);
    auto need = [&](std::size_t n) {
      if (args.size() != n)
        fail(name + " expects " + std::to_string(n) + " arguments");
    };
    if (name == "interval" || name == "interval_open_lo" || name == "interval_open_hi") {
      need(2);
      const bool olo = name == "interval_open_lo", ohi = name == "interval_open_hi";
      e.fn_ = [a = args[0], b = args[1], olo, ohi](double x, double y) {
        return ValueSet::interval(a(x, y), b(x, y), olo, ohi);
      };
      e.dim_ = 1;
    } else if (name == "point") {
      if (args.empty() || args.size() > static_cast<std::size_t>(kMaxCoordDim))
        fail("point expects 1 to 4 coordinates");
      e.dim_ = static_cast<int>(args.size());
      e.fn_ = [args](double x, double y) {
        Vec p;
        for (const auto& a : args) p.push_back(a(x, y));
        return ValueSet::point(p);
      };
    } else if (name == "disc") {
      need(3);
      e.dim_ = 2;
      e.fn_ = [a = args[0], b = args[1], r = args[2]](double x, double y) {
        return ValueSet::disc(a(x, y), b(x, y), r(x, y));
      };
    } else if (name == "quarter_disc") {
      need(1);
      e.dim_ = 2;
      e.fn_ = [r = args[0]](double x, double y) {
        const double rad = r(x, y);
        return ValueSet::disc(0.0, 0.0, rad, ValueSet::Box{0.0, 1.0, 0.0, 1.0});
      };
    } else {
      fail("unknown value constructor '" + name + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("expression '" + std::string(s_) + "' at offset " +
                       std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }
  bool peek_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end >= s_.size() ||
           !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
  }
  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  Cond disjunction() {
    Cond lhs = conjunction();
    while (peek_word("or")) {
      pos_ += 2;
      Cond rhs = conjunction();
      lhs = [lhs, rhs](double x, double y) { return lhs(x, y) || rhs(x, y); };
    }
    return lhs;
  }
  Cond conjunction() {
    Cond lhs = negation();
    while (peek_word("and")) {
      pos_ += 3;
      Cond rhs = negation();
      lhs = [lhs, rhs](double x, double y) { return lhs(x, y) && rhs(x, y); };
    }
    return lhs;
  }
  Cond negation() {
    if (peek_word("not")) {
      pos_ += 3;
      Cond inner = negation();
      return [inner](double x, double y) { return !inner(x, y); };
    }
    if (peek_word("true")) {
      pos_ += 4;
      return [](double, double) { return true; };
    }
    if (peek_word("false")) {
      pos_ += 5;
      return [](double, double) { return false; };
    }
    // A parenthesis may open either a condition or an arithmetic term.
    const std::size_t save = pos_;
    if (accept('(')) {
      try {
        Cond inner = disjunction();
        expect(')');
        skip();
        if (pos_ == s_.size() || peek(')') || peek_word("and") || peek_word("or"))
          return inner;
      } catch (const InvalidInput&) {
      }
      pos_ = save;
    }
    return comparison();
  }
  Cond comparison() {
    Scalar lhs = expr();
    std::string op;
    for (const char* cand : {"<=", ">=", "==", "!=", "<", ">"})
      if (accept(std::string_view(cand))) {
        op = cand;
        break;
      }
    if (op.empty()) fail("expected comparison operator");
    Scalar rhs = expr();
    if (op == "<=") return [lhs, rhs](double x, double y) { return lhs(x, y) <= rhs(x, y); };
    if (op == ">=") return [lhs, rhs](double x, double y) { return lhs(x, y) >= rhs(x, y); };
    if (op == "==") return [lhs, rhs](double x, double y) { return lhs(x, y) == rhs(x, y); };
    if (op == "!=") return [lhs, rhs](double x, double y) { return lhs(x, y) != rhs(x, y); };
    if (op == "<") return [lhs, rhs](double x, double y) { return lhs(x, y) < rhs(x, y); };
    return [lhs, rhs](double x, double y) { return lhs(x, y) > rhs(x, y); };
  }

  Scalar expr() {
    Scalar lhs = term();
    while (true) {
      if (accept('+')) {
        Scalar rhs = term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) + rhs(x, y); };
      } else if (accept('-')) {
        Scalar rhs = term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) - rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }
  Scalar term() {
    Scalar lhs = unary();
    while (true) {
      if (accept('*')) {
        Scalar rhs = unary();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) * rhs(x, y); };
      } else if (accept('/')) {
        Scalar rhs = unary();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) / rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }
  Scalar unary() {
    if (accept('-')) {
      Scalar inner = unary();
      return [inner](double x, double y) {
        const double v = inner(x, y);
        return v == 0.0 ? 0.0 : -v;
      };
    }
    if (accept('+')) return unary();
    return primary();
  }
  Scalar primary() {
    skip();
    if (accept('(')) {
      Scalar inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      std::size_t used = 0;
      const double v = std::stod(std::string(s_.substr(pos_)), &used);
      pos_ += used;
      return [v](double, double) { return v; };
    }
    const std::string id = identifier();
    if (id == "x") return [](double x, double) { return x; };
    if (id == "y") return [](double, double y) { return y; };
    if (id == "pi") return [](double, double) { return std::numbers::pi; };
    expect('(');
    std::vector<Scalar> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    auto need = [&](std::size_t n) {
      if (args.size() != n) fail(id + " expects " + std::to_string(n) + " arguments");
    };
    if (id == "sqrt") {
      need(1);
      return [a = args[0]](double x, double y) { return std::sqrt(a(x, y)); };
    }
    if (id == "abs") {
      need(1);
      return [a = args[0]](double x, double y) { return std::abs(a(x, y)); };
    }
    if (id == "min") {
      need(2);
      return [a = args[0], b = args[1]](double x, double y) { return std::min(a(x, y), b(x, y)); };
    }
    if (id == "max") {
      need(2);
      return [a = args[0], b = args[1]](double x, double y) { return std::max(a(x, y), b(x, y)); };
    }
    if (id == "pow") {
      need(2);
      return [a = args[0], b = args[1]](double x, double y) { return std::pow(a(x, y), b(x, y)); };
    }
    fail("unknown function '" + id + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

ScalarExpr ScalarExpr::parse(std::string_view text) { return ExprParser(text).scalar(); }
ConditionExpr ConditionExpr::parse(std::string_view text) { return ExprParser(text).condition(); }
ValueExpr ValueExpr::parse(std::string_view text) { return ExprParser(text).value(); }

}  // namespace conemm
