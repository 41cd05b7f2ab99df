#include "conemm/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace conemm {

PointCloud::PointCloud(int dim, std::vector<double> flat)
    : dim_(dim), data_(std::move(flat)) {
  if (dim_ <= 0 || data_.size() % dim_ != 0)
    throw InvalidInput("point buffer size is not a multiple of the dimension");
}

PointCloud PointCloud::from_points(const std::vector<Vec>& points) {
  if (points.empty()) return PointCloud();
  PointCloud out(static_cast<int>(points.front().size()));
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p);
  return out;
}

PointCloud PointCloud::singleton(ConstSpan p) {
  PointCloud out(static_cast<int>(p.size()));
  out.push_back(p);
  return out;
}

void PointCloud::push_back(ConstSpan p) {
  if (dim_ == 0) dim_ = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != dim_)
    throw InvalidInput("point dimension mismatch");
  data_.insert(data_.end(), p.begin(), p.end());
}

void PointCloud::append(const PointCloud& other) {
  if (other.empty()) return;
  if (dim_ == 0) dim_ = other.dim_;
  if (other.dim_ != dim_) throw InvalidInput("point dimension mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
}

std::vector<Vec> PointCloud::to_vectors() const {
  std::vector<Vec> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

PointCloud PointCloud::negated() const {
  PointCloud out = *this;
  for (double& v : out.data_) v = v == 0.0 ? 0.0 : -v;
  return out;
}

PointCloud PointCloud::deduplicated(double tol) const {
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto pa = (*this)[a];
    auto pb = (*this)[b];
    if (lex_less(pa, pb)) return true;
    if (lex_less(pb, pa)) return false;
    return a < b;
  });
  PointCloud out(dim_);
  out.reserve(n);
  const double tol_sq = tol * tol;
  for (std::size_t idx : order) {
    auto p = (*this)[idx];
    bool dup = false;
    // Kept points are sorted by first coordinate, so only a short tail can be
    // within tol.
    for (std::size_t k = out.size(); k-- > 0;) {
      auto q = out[k];
      if (p[0] - q[0] > tol) break;
      if (distance_sq(p, q) <= tol_sq) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

bool PointCloud::contains_near(ConstSpan p, double tol) const {
  const double tol_sq = tol * tol;
  for (std::size_t i = 0; i < size(); ++i)
    if (distance_sq((*this)[i], p) <= tol_sq) return true;
  return false;
}

double PointCloud::min_distance(const PointCloud& other) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < other.size(); ++j)
      best = std::min(best, distance_sq((*this)[i], other[j]));
  return std::sqrt(best);
}

bool clouds_meet(const PointCloud& a, const PointCloud& b, double tol) {
  if (a.empty() || b.empty()) return false;
  const PointCloud& small = a.size() <= b.size() ? a : b;
  const PointCloud& large = a.size() <= b.size() ? b : a;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (large.contains_near(small[i], tol)) return true;
  return false;
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  if (a.empty() || b.empty())
    throw InvalidInput("Hausdorff distance needs nonempty clouds");
  auto directed = [](const PointCloud& from, const PointCloud& to) {
    double worst = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < to.size(); ++j)
        best = std::min(best, distance_sq(from[i], to[j]));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace conemm
