#ifndef CONEMM_CURVES_HPP
#define CONEMM_CURVES_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conemm/types.hpp"

namespace conemm {

/**
 * @brief Reweighting curve g : Delta_{n-1} -> Delta_{n-1} with g_i(0) = 0
 * and g_i(1) = 1.
 *
 * A curve may depend on the domain tuple (x_1, ..., x_n) it is applied to.
 */
class GCurve {
 public:
  virtual ~GCurve() = default;
  virtual std::string name() const = 0;
  virtual Vec params() const { return {}; }
  virtual void apply(std::span<const double> lambda, std::span<const Coord> xs,
                     std::span<double> out) const = 0;

  Vec operator()(std::span<const double> lambda, std::span<const Coord> xs) const {
    Vec out(lambda.size());
    apply(lambda, xs, out);
    return out;
  }
};

class IdentityCurve final : public GCurve {
 public:
  std::string name() const override { return "identity"; }
  void apply(std::span<const double> lambda, std::span<const Coord>,
             std::span<double> out) const override;
};

/// g_i = lambda_i^{p_i} / sum_j lambda_j^{p_j}.
class PowerCurve final : public GCurve {
 public:
  explicit PowerCurve(Vec exponents);
  std::string name() const override { return "power"; }
  Vec params() const override { return p_; }
  void apply(std::span<const double> lambda, std::span<const Coord>,
             std::span<double> out) const override;

 private:
  Vec p_;
};

/**
 * @brief Tuple-dependent curve for maps with a jump at a threshold c.
 *
 * With H = {i : x_i > c} and phi = max(0, sum lambda_i x_i - c), the weights
 * are lambda_i phi for i in H and lambda_i otherwise, renormalized. All mass
 * stays off H while the combined point is at or below c.
 */
class GateCurve final : public GCurve {
 public:
  explicit GateCurve(double threshold) : c_(threshold) {}
  std::string name() const override { return "gate"; }
  Vec params() const override { return {c_}; }
  void apply(std::span<const double> lambda, std::span<const Coord> xs,
             std::span<double> out) const override;

 private:
  double c_;
};

/**
 * @brief Finite family searched for reweighting witnesses.
 *
 * Order for arity n: identity, registered curves, then renormalized powers
 * with every exponent vector over the base exponents (the all-ones vector is
 * skipped as it equals the identity).
 */
class GCurveFamily {
 public:
  static GCurveFamily standard();
  static GCurveFamily identity_only();

  void register_curve(std::shared_ptr<const GCurve> curve);
  void set_exponents(Vec exponents) { exponents_ = std::move(exponents); }
  const Vec& exponents() const { return exponents_; }
  bool include_identity() const { return identity_; }

  std::vector<std::shared_ptr<const GCurve>> curves_for(int n) const;
  bool empty() const { return !identity_ && registered_.empty() && exponents_.empty(); }

 private:
  bool identity_ = true;
  std::vector<std::shared_ptr<const GCurve>> registered_;
  Vec exponents_;
};

/// Rebuilds a curve from its name and parameters (used by witness replay).
std::shared_ptr<const GCurve> make_curve(const std::string& name, const Vec& params);

}  // namespace conemm

#endif  // CONEMM_CURVES_HPP
