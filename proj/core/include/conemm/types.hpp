#ifndef CONEMM_TYPES_HPP
#define CONEMM_TYPES_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace conemm {

using Vec = std::vector<double>;
using ConstSpan = std::span<const double>;

/// Thrown when a caller passes arguments outside an operation's contract.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a fixture's branch rules overlap or leave a gap.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxCoordDim = 4;

/// Fixed-capacity coordinate used for domain points, so the tuple sweeps do
/// not allocate.
class Coord {
 public:
  Coord() = default;
  explicit Coord(int dim) : dim_(dim) { check(dim); }
  Coord(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
    check(dim_);
    int i = 0;
    for (double x : xs) c_[i++] = x;
  }
  explicit Coord(ConstSpan xs) : dim_(static_cast<int>(xs.size())) {
    check(dim_);
    for (int i = 0; i < dim_; ++i) c_[i] = xs[i];
  }

  int dim() const { return dim_; }
  double& operator[](int i) { return c_[i]; }
  double operator[](int i) const { return c_[i]; }
  ConstSpan span() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }
  Vec vec() const { return Vec(c_.begin(), c_.begin() + dim_); }

  friend bool operator==(const Coord& a, const Coord& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  static void check(int dim) {
    if (dim < 0 || dim > kMaxCoordDim)
      throw InvalidInput("coordinate dimension must be in [0, " +
                         std::to_string(kMaxCoordDim) + "]");
  }
  std::array<double, kMaxCoordDim> c_{};
  int dim_ = 0;
};

inline double dot(ConstSpan a, ConstSpan b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double distance_sq(ConstSpan a, ConstSpan b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// Lexicographic order on equal-length coordinate lists.
inline bool lex_less(ConstSpan a, ConstSpan b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace conemm

#endif  // CONEMM_TYPES_HPP
