#include "conemm/domain.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace conemm {
namespace {

constexpr double kSnapTol = 1e-12;

void enumerate_compositions(int n, int total, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    enumerate_compositions(n, total - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

DomainGrid DomainGrid::interval(double lo, double hi, int resolution) {
  return box({lo}, {hi}, resolution);
}

DomainGrid DomainGrid::box(Vec lo, Vec hi, int resolution) {
  if (resolution <= 0) throw InvalidInput("grid resolution must be positive");
  if (lo.empty() || lo.size() != hi.size())
    throw InvalidInput("box bounds must be nonempty and equal length");
  if (static_cast<int>(lo.size()) > kMaxCoordDim)
    throw InvalidInput("domain dimension exceeds the supported maximum");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i])) throw InvalidInput("box with lo > hi");
  DomainGrid g;
  g.shape_ = lo.size() == 1 ? Shape::interval : Shape::box;
  g.resolution_ = resolution;
  g.lo_ = std::move(lo);
  g.hi_ = std::move(hi);
  const int d = g.dim();
  std::vector<int> idx(d, 0);
  while (true) {
    Coord c(d);
    for (int a = 0; a < d; ++a) c[a] = g.lattice_value(a, idx[a], resolution);
    g.points_.push_back(c);
    int a = d - 1;
    // A degenerate axis contributes a single coordinate.
    auto top = [&](int ax) { return g.lo_[ax] == g.hi_[ax] ? 0 : resolution; };
    while (a >= 0 && ++idx[a] > top(a)) idx[a--] = 0;
    if (a < 0) break;
  }
  g.lattice_count_ = g.points_.size();
  return g;
}

DomainGrid DomainGrid::simplex(int n, int resolution) {
  if (resolution <= 0) throw InvalidInput("grid resolution must be positive");
  if (n <= 0 || n > kMaxCoordDim) throw InvalidInput("simplex arity out of range");
  DomainGrid g;
  g.shape_ = Shape::simplex;
  g.resolution_ = resolution;
  g.lo_.assign(n, 0.0);
  g.hi_.assign(n, 1.0);
  for (const auto& ks : simplex_lattice_numerators(n, resolution + 1)) {
    Coord c(n);
    for (int a = 0; a < n; ++a) c[a] = g.lattice_value(a, ks[a], resolution);
    g.points_.push_back(c);
  }
  g.lattice_count_ = g.points_.size();
  return g;
}

void DomainGrid::add_extra_points(const std::vector<Coord>& extra) {
  for (const auto& c : extra) {
    if (c.dim() != dim() || !contains(c)) continue;
    bool dup = false;
    for (const auto& p : points_) dup = dup || p == c;
    if (!dup) points_.push_back(c);
  }
}

bool DomainGrid::contains(const Coord& x, double tol) const {
  if (x.dim() != dim()) return false;
  double sum = 0.0;
  for (int a = 0; a < dim(); ++a) {
    if (!(x[a] >= lo_[a] - tol && x[a] <= hi_[a] + tol)) return false;
    sum += x[a];
  }
  if (shape_ == Shape::simplex && std::abs(sum - 1.0) > 1e-9) return false;
  return true;
}

double DomainGrid::lattice_value(int axis, long long k, long long den) const {
  const long long g = std::gcd(k, den);
  if (g > 1) {
    k /= g;
    den /= g;
  }
  const double lo = lo_[axis], hi = hi_[axis];
  const double dk = static_cast<double>(k), dd = static_cast<double>(den);
  return (lo * dd + (hi - lo) * dk) / dd;
}

Coord DomainGrid::snap(const Coord& x, int lattice_factor) const {
  if (lattice_factor <= 0) throw InvalidInput("lattice factor must be positive");
  if (!contains(x, kSnapTol)) throw InvalidInput("point lies outside the domain");
  const long long den = static_cast<long long>(resolution_) * lattice_factor;
  Coord out = x;
  for (int a = 0; a < dim(); ++a) {
    const double width = hi_[a] - lo_[a];
    if (width == 0.0) {
      out[a] = lo_[a];
      continue;
    }
    const long long k = std::llround((x[a] - lo_[a]) / width * static_cast<double>(den));
    const double cand = lattice_value(a, k, den);
    if (std::abs(cand - x[a]) <= kSnapTol) out[a] = cand;
  }
  return out;
}

DomainGrid DomainGrid::with_resolution(int resolution) const {
  if (shape_ == Shape::simplex) return simplex(dim(), resolution);
  return box(lo_, hi_, resolution);
}

std::size_t DomainGrid::expected_lattice_count(Shape shape, int dim, int resolution) {
  if (shape == Shape::simplex) {
    // C(resolution + dim - 1, dim - 1)
    std::size_t c = 1;
    for (int i = 1; i < dim; ++i) c = c * (resolution + i) / i;
    return c;
  }
  std::size_t c = 1;
  for (int i = 0; i < dim; ++i) c *= static_cast<std::size_t>(resolution + 1);
  return c;
}

std::string DomainGrid::to_string(Shape shape) {
  switch (shape) {
    case Shape::interval: return "interval";
    case Shape::box: return "box";
    case Shape::simplex: return "simplex";
  }
  return "?";
}

std::string DomainGrid::describe() const {
  std::ostringstream os;
  os << to_string(shape_);
  if (shape_ == Shape::simplex) {
    os << " Delta_" << dim() - 1;
  } else {
    for (int a = 0; a < dim(); ++a)
      os << (a ? "x" : " ") << '[' << lo_[a] << ',' << hi_[a] << ']';
  }
  os << " res=" << resolution_ << " points=" << points_.size();
  return os.str();
}

Weights::Weights(Vec lambda, double tol) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw InvalidInput("empty weight vector");
  double s = 0.0;
  for (double v : lambda_) {
    if (v < -tol) throw InvalidInput("negative weight");
    s += v;
  }
  if (std::abs(s - 1.0) > tol) throw InvalidInput("weights do not sum to one");
}

std::vector<std::vector<int>> simplex_lattice_numerators(int n, int steps) {
  if (n <= 0 || steps <= 0) throw InvalidInput("simplex lattice needs n, steps > 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_compositions(n, steps - 1, cur, out);
  return out;
}

std::vector<Vec> simplex_lattice(int n, int steps) {
  const int m = steps - 1;
  std::vector<Vec> out;
  for (const auto& ks : simplex_lattice_numerators(n, steps)) {
    Vec l(n);
    for (int i = 0; i < n; ++i) l[i] = m == 0 ? 1.0 / n : static_cast<double>(ks[i]) / m;
    out.push_back(std::move(l));
  }
  return out;
}

Coord combine(const std::vector<Coord>& xs, const Vec& lambda) {
  if (xs.empty() || xs.size() != lambda.size())
    throw InvalidInput("combination needs matching points and weights");
  Coord out(xs.front().dim());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int a = 0; a < out.dim(); ++a) out[a] += lambda[i] * xs[i][a];
  return out;
}

}  // namespace conemm
