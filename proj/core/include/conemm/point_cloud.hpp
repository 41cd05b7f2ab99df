#ifndef CONEMM_POINT_CLOUD_HPP
#define CONEMM_POINT_CLOUD_HPP

#include <cstddef>
#include <vector>

#include "conemm/types.hpp"

namespace conemm {

/// Finite set of points in R^d stored row-major in one buffer.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(int dim) : dim_(dim) {}
  PointCloud(int dim, std::vector<double> flat);

  static PointCloud from_points(const std::vector<Vec>& points);
  static PointCloud singleton(ConstSpan p);

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return size() == 0; }

  ConstSpan operator[](std::size_t i) const {
    return {data_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  Vec point(std::size_t i) const {
    auto p = (*this)[i];
    return Vec(p.begin(), p.end());
  }

  void reserve(std::size_t n) { data_.reserve(n * dim_); }
  void push_back(ConstSpan p);
  void append(const PointCloud& other);

  const std::vector<double>& data() const { return data_; }
  std::vector<Vec> to_vectors() const;

  PointCloud negated() const;

  /// Lexicographically sorted copy with points closer than `tol` to an
  /// already kept point removed.
  PointCloud deduplicated(double tol) const;

  bool contains_near(ConstSpan p, double tol) const;
  double min_distance(const PointCloud& other) const;

  friend bool operator==(const PointCloud& a, const PointCloud& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

/// Nonempty intersection of two sampled sets: some pair of points within tol.
bool clouds_meet(const PointCloud& a, const PointCloud& b, double tol);

/// Symmetric Hausdorff distance (Euclidean) between two nonempty clouds.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

}  // namespace conemm

#endif  // CONEMM_POINT_CLOUD_HPP
