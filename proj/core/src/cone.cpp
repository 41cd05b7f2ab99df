#include "conemm/cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace conemm {
namespace {

// Gauss-Jordan inverse with partial pivoting; empty result when singular.
std::vector<Vec> invert(const std::vector<Vec>& m) {
  const std::size_t n = m.size();
  std::vector<Vec> a = m;
  std::vector<Vec> inv(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-12) return {};
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    const double p = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= p;
      inv[c][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

double clean(double v) { return std::abs(v) < 1e-14 ? 0.0 : v; }

}  // namespace

Cone::Cone(std::vector<Vec> normals, std::optional<Vec> interior_witness,
           double eps_cone, double eps_interior, std::string name)
    : eps_cone_(eps_cone), eps_interior_(eps_interior), name_(std::move(name)) {
  if (normals.empty()) throw InvalidInput("cone needs at least one halfspace");
  dim_ = static_cast<int>(normals.front().size());
  if (dim_ <= 0) throw InvalidInput("cone dimension must be positive");
  if (eps_cone < 0.0 || !(eps_interior > 0.0))
    throw InvalidInput("eps_cone must be >= 0 and eps_interior > 0");
  for (auto& n : normals) {
    if (static_cast<int>(n.size()) != dim_)
      throw InvalidInput("cone normals have inconsistent dimensions");
    const double len = std::sqrt(dot(n, n));
    if (len < 1e-12) throw InvalidInput("cone normal has zero length");
    for (double& v : n) v = clean(v / len);
  }
  normals_ = std::move(normals);

  key_normal_.assign(dim_, 0.0);
  for (const auto& n : normals_)
    for (int k = 0; k < dim_; ++k) key_normal_[k] += n[k];

  if (static_cast<int>(normals_.size()) == dim_) inverse_ = invert(normals_);

  if (interior_witness) {
    witness_ = *interior_witness;
  } else if (!inverse_.empty()) {
    // N w = 1 puts w at unit distance from every facet.
    witness_.assign(dim_, 0.0);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) witness_[r] += inverse_[r][c];
  } else {
    witness_ = key_normal_;
  }
  if (static_cast<int>(witness_.size()) != dim_)
    throw InvalidInput("interior witness has wrong dimension");
  for (const auto& n : normals_)
    if (dot(n, witness_) < eps_interior_)
      throw InvalidInput("cone has no interior witness (empty interior?)");
}

Cone Cone::nonneg_reals() { return Cone({{1.0}}, {}, kDefaultEpsCone, kDefaultEpsInterior, "Rplus"); }

Cone Cone::nonneg_orthant(int dim) {
  if (dim <= 0) throw InvalidInput("orthant dimension must be positive");
  std::vector<Vec> ns(dim, Vec(dim, 0.0));
  for (int i = 0; i < dim; ++i) ns[i][i] = 1.0;
  std::string name = dim == 1 ? "Rplus" : "R" + std::to_string(dim) + "plus";
  return Cone(std::move(ns), {}, kDefaultEpsCone, kDefaultEpsInterior, name);
}

Cone Cone::nonpos_orthant(int dim) {
  if (dim <= 0) throw InvalidInput("orthant dimension must be positive");
  std::vector<Vec> ns(dim, Vec(dim, 0.0));
  for (int i = 0; i < dim; ++i) ns[i][i] = -1.0;
  std::string name = dim == 1 ? "minusRplus" : "minusR" + std::to_string(dim) + "plus";
  return Cone(std::move(ns), {}, kDefaultEpsCone, kDefaultEpsInterior, name);
}

Cone Cone::from_name(std::string_view name) {
  if (name == "Rplus") return nonneg_orthant(1);
  if (name == "minusRplus") return nonpos_orthant(1);
  if (name == "R2plus") return nonneg_orthant(2);
  if (name == "minusR2plus") return nonpos_orthant(2);
  if (name == "R3plus") return nonneg_orthant(3);
  if (name == "minusR3plus") return nonpos_orthant(3);
  throw InvalidInput("unknown cone name '" + std::string(name) + "'");
}

void Cone::check_dim(ConstSpan z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw InvalidInput("vector dimension " + std::to_string(z.size()) +
                       " does not match cone dimension " + std::to_string(dim_));
}

bool Cone::contains(ConstSpan z) const {
  check_dim(z);
  for (const auto& n : normals_)
    if (dot(n, z) < -eps_cone_) return false;
  return true;
}

bool Cone::contains_interior(ConstSpan z) const {
  check_dim(z);
  for (const auto& n : normals_)
    if (dot(n, z) < eps_interior_) return false;
  return true;
}

bool Cone::dominates(ConstSpan a, ConstSpan b) const {
  check_dim(a);
  check_dim(b);
  for (const auto& n : normals_) {
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) s += n[k] * (a[k] - b[k]);
    if (s < -eps_cone_) return false;
  }
  return true;
}

bool Cone::dominates_interior(ConstSpan a, ConstSpan b) const {
  check_dim(a);
  check_dim(b);
  for (const auto& n : normals_) {
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) s += n[k] * (a[k] - b[k]);
    if (s < eps_interior_) return false;
  }
  return true;
}

double Cone::order_key(ConstSpan z) const { return dot(key_normal_, z); }

Cone Cone::negated() const {
  std::vector<Vec> ns = normals_;
  for (auto& n : ns)
    for (double& v : n) v = v == 0.0 ? 0.0 : -v;
  Vec w = witness_;
  for (double& v : w) v = v == 0.0 ? 0.0 : -v;
  std::string nm = name_.empty() ? std::string{}
                   : name_.rfind("minus", 0) == 0 ? name_.substr(5)
                                                  : "minus" + name_;
  return Cone(std::move(ns), std::move(w), eps_cone_, eps_interior_, nm);
}

Cone Cone::with_tolerances(double eps_cone, double eps_interior) const {
  return Cone(normals_, witness_, eps_cone, eps_interior, name_);
}

std::optional<Vec> Cone::join(ConstSpan a, ConstSpan b) const {
  if (inverse_.empty()) return std::nullopt;
  check_dim(a);
  check_dim(b);
  Vec c(dim_);
  for (int j = 0; j < dim_; ++j)
    c[j] = std::max(dot(normals_[j], a), dot(normals_[j], b));
  Vec out(dim_, 0.0);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) out[r] += inverse_[r][k] * c[k];
    out[r] = clean(out[r]);
  }
  return out;
}

bool Cone::is_pointed_sampled(int resolution) const {
  if (resolution <= 0) throw InvalidInput("resolution must be positive");
  // Strict test (no tolerance) on unit directions from a product angle grid.
  auto both = [&](const Vec& z) {
    bool pos = true, neg = true;
    for (const auto& n : normals_) {
      const double s = dot(n, z);
      if (s < 0.0) pos = false;
      if (s > 0.0) neg = false;
    }
    return pos && neg;
  };
  if (dim_ == 1) return !both({1.0});
  const int steps = 2 * resolution;
  Vec angles(dim_ - 1, 0.0);
  std::vector<int> idx(dim_ - 1, 0);
  const double pi = std::numbers::pi;
  while (true) {
    Vec z(dim_);
    double s = 1.0;
    for (int k = 0; k < dim_ - 1; ++k) {
      const double range = k == dim_ - 2 ? 2.0 * pi : pi;
      const double t = range * idx[k] / steps;
      z[k] = s * std::cos(t);
      s *= std::sin(t);
    }
    z[dim_ - 1] = s;
    for (double& v : z) v = clean(v);
    if (dot(z, z) > 0.5 && both(z)) return false;
    int k = 0;
    while (k < dim_ - 1 && ++idx[k] == steps) idx[k++] = 0;
    if (k == dim_ - 1) break;
  }
  return true;
}

std::string Cone::describe() const {
  std::ostringstream os;
  if (!name_.empty()) os << name_ << ' ';
  os << "{";
  for (std::size_t j = 0; j < normals_.size(); ++j) {
    if (j) os << ", ";
    os << '(';
    for (int k = 0; k < dim_; ++k) os << (k ? "," : "") << normals_[j][k];
    os << ')';
  }
  os << "}";
  return os.str();
}

bool cone_contains(const Cone& cone, ConstSpan z, bool interior) {
  return interior ? cone.contains_interior(z) : cone.contains(z);
}

namespace {

bool translate_test(const PointCloud& a, const PointCloud& b, const Cone& cone,
                    Sign sign, bool interior) {
  if (a.empty() || b.empty())
    throw InvalidInput("cone translate containment needs nonempty sets");
  if (a.dim() != b.dim() || a.dim() != cone.dim())
    throw InvalidInput("dimension mismatch in cone translate containment");
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      // minus: a in b - S  <=>  b - a in S; plus: a - b in S
      found = sign == Sign::minus
                  ? (interior ? cone.dominates_interior(b[j], a[i])
                              : cone.dominates(b[j], a[i]))
                  : (interior ? cone.dominates_interior(a[i], b[j])
                              : cone.dominates(a[i], b[j]));
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool subset_of_translate(const PointCloud& a, const PointCloud& b,
                         const Cone& cone, Sign sign) {
  return translate_test(a, b, cone, sign, false);
}

bool subset_of_translate_interior(const PointCloud& a, const PointCloud& b,
                                  const Cone& cone, Sign sign) {
  return translate_test(a, b, cone, sign, true);
}

bool ConeRelation::evaluate(const Cone& cone) const {
  const Cone c = cone.with_tolerances(eps_cone, eps_interior);
  switch (kind) {
    case Kind::in_plus:
      return subset_of_translate(lhs, rhs, c, Sign::plus);
    case Kind::in_minus:
      return subset_of_translate(lhs, rhs, c, Sign::minus);
    case Kind::subset_minus:
      return subset_of_translate(lhs, rhs, c, Sign::minus);
    case Kind::subset_plus:
      return subset_of_translate(lhs, rhs, c, Sign::plus);
  }
  return false;
}

std::string to_string(ConeRelation::Kind kind) {
  switch (kind) {
    case ConeRelation::Kind::in_plus: return "in_plus";
    case ConeRelation::Kind::in_minus: return "in_minus";
    case ConeRelation::Kind::subset_minus: return "subset_minus";
    case ConeRelation::Kind::subset_plus: return "subset_plus";
  }
  return "?";
}

}  // namespace conemm
