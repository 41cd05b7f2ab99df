#include "conemm/curves.hpp"

#include <algorithm>
#include <cmath>

namespace conemm {
namespace {

void normalize_into(std::span<const double> w, std::span<double> out,
                    std::span<const double> fallback) {
  double s = 0.0;
  for (double v : w) s += v;
  if (!(s > 0.0)) {
    std::copy(fallback.begin(), fallback.end(), out.begin());
    return;
  }
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / s;
}

}  // namespace

void IdentityCurve::apply(std::span<const double> lambda, std::span<const Coord>,
                          std::span<double> out) const {
  std::copy(lambda.begin(), lambda.end(), out.begin());
}

PowerCurve::PowerCurve(Vec exponents) : p_(std::move(exponents)) {
  for (double p : p_)
    if (!(p > 0.0)) throw InvalidInput("power curve exponents must be positive");
}

void PowerCurve::apply(std::span<const double> lambda, std::span<const Coord>,
                       std::span<double> out) const {
  if (lambda.size() != p_.size())
    throw InvalidInput("power curve arity does not match the weights");
  std::array<double, 16> buf{};
  Vec heap;
  std::span<double> w;
  if (lambda.size() <= buf.size()) {
    w = std::span<double>(buf.data(), lambda.size());
  } else {
    heap.resize(lambda.size());
    w = heap;
  }
  for (std::size_t i = 0; i < lambda.size(); ++i)
    w[i] = lambda[i] <= 0.0 ? 0.0 : std::pow(lambda[i], p_[i]);
  normalize_into(w, out, lambda);
}

void GateCurve::apply(std::span<const double> lambda, std::span<const Coord> xs,
                      std::span<double> out) const {
  if (lambda.size() != xs.size())
    throw InvalidInput("gate curve needs one domain point per weight");
  double xl = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) xl += lambda[i] * xs[i][0];
  const double phi = std::max(0.0, xl - c_);
  std::array<double, 16> buf{};
  Vec heap;
  std::span<double> w;
  if (lambda.size() <= buf.size()) {
    w = std::span<double>(buf.data(), lambda.size());
  } else {
    heap.resize(lambda.size());
    w = heap;
  }
  for (std::size_t i = 0; i < lambda.size(); ++i)
    w[i] = xs[i][0] > c_ ? lambda[i] * phi : lambda[i];
  normalize_into(w, out, lambda);
}

GCurveFamily GCurveFamily::standard() {
  GCurveFamily f;
  f.exponents_ = {0.5, 1.0, 2.0, 3.0};
  return f;
}

GCurveFamily GCurveFamily::identity_only() { return GCurveFamily{}; }

void GCurveFamily::register_curve(std::shared_ptr<const GCurve> curve) {
  if (!curve) throw InvalidInput("null curve");
  registered_.push_back(std::move(curve));
}

std::vector<std::shared_ptr<const GCurve>> GCurveFamily::curves_for(int n) const {
  if (n <= 0) throw InvalidInput("curve arity must be positive");
  std::vector<std::shared_ptr<const GCurve>> out;
  if (identity_) out.push_back(std::make_shared<IdentityCurve>());
  for (const auto& c : registered_) out.push_back(c);
  if (exponents_.empty() || n == 1) return out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Vec p(n);
    bool all_one = true;
    for (int i = 0; i < n; ++i) {
      p[i] = exponents_[idx[i]];
      all_one = all_one && p[i] == 1.0;
    }
    if (!all_one) out.push_back(std::make_shared<PowerCurve>(std::move(p)));
    int i = n - 1;
    while (i >= 0 && ++idx[i] == exponents_.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::shared_ptr<const GCurve> make_curve(const std::string& name, const Vec& params) {
  if (name == "identity") return std::make_shared<IdentityCurve>();
  if (name == "power") return std::make_shared<PowerCurve>(params);
  if (name == "gate") {
    if (params.size() != 1) throw InvalidInput("gate curve takes one parameter");
    return std::make_shared<GateCurve>(params[0]);
  }
  throw InvalidInput("unknown curve '" + name + "'");
}

}  // namespace conemm
