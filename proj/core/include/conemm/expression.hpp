#ifndef CONEMM_EXPRESSION_HPP
#define CONEMM_EXPRESSION_HPP

#include <functional>
#include <string>
#include <string_view>

#include "conemm/value_set.hpp"

namespace conemm {

/**
 * @brief Small expression language for fixture files.
 *
 * Scalars: numbers, x, y, pi, + - * /, parentheses, and the functions
 * sqrt, abs, min, max, pow. Conditions: comparisons (< <= > >= == !=)
 * joined by and/or/not, plus the literals true/false. Values:
 * interval(lo, hi), interval_open_lo(lo, hi), interval_open_hi(lo, hi),
 * point(e1, ..., ed), disc(cu, cv, r), quarter_disc(r).
 */
class ScalarExpr {
 public:
  static ScalarExpr parse(std::string_view text);
  double operator()(double x, double y) const { return fn_(x, y); }
  const std::string& text() const { return text_; }

 private:
  std::function<double(double, double)> fn_;
  std::string text_;
  friend class ExprParser;
};

class ConditionExpr {
 public:
  static ConditionExpr parse(std::string_view text);
  bool operator()(double x, double y) const { return fn_(x, y); }
  const std::string& text() const { return text_; }

 private:
  std::function<bool(double, double)> fn_;
  std::string text_;
  friend class ExprParser;
};

class ValueExpr {
 public:
  static ValueExpr parse(std::string_view text);
  ValueSet operator()(double x, double y) const { return fn_(x, y); }
  int dim() const { return dim_; }
  const std::string& text() const { return text_; }

 private:
  std::function<ValueSet(double, double)> fn_;
  int dim_ = 1;
  std::string text_;
  friend class ExprParser;
};

}  // namespace conemm

#endif  // CONEMM_EXPRESSION_HPP
