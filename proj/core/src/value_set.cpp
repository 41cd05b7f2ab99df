#include "conemm/value_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace conemm {
namespace {

double clean(double v) { return std::abs(v) < 1e-14 ? 0.0 : v; }
double neg(double v) { return v == 0.0 ? 0.0 : -v; }

}  // namespace

ValueSet ValueSet::interval(double lo, double hi, bool open_lo, bool open_hi) {
  if (!(lo <= hi)) throw InvalidInput("interval with lo > hi");
  if (lo == hi && (open_lo || open_hi))
    throw InvalidInput("degenerate open interval is empty");
  ValueSet v;
  v.kind_ = Kind::interval;
  v.lo_ = clean(lo);
  v.hi_ = clean(hi);
  v.open_lo_ = open_lo;
  v.open_hi_ = open_hi;
  return v;
}

ValueSet ValueSet::point(ConstSpan p) { return points(PointCloud::singleton(p)); }

ValueSet ValueSet::points(PointCloud cloud) {
  if (cloud.empty()) throw InvalidInput("empty point set value");
  ValueSet v;
  v.kind_ = Kind::points;
  v.pts_ = std::move(cloud);
  return v;
}

ValueSet ValueSet::disc(double cu, double cv, double radius) {
  return disc(cu, cv, radius, Box{});
}

ValueSet ValueSet::disc(double cu, double cv, double radius, Box clip) {
  if (!(radius >= 0.0)) throw InvalidInput("negative disc radius");
  if (clip.ulo > clip.uhi || clip.vlo > clip.vhi)
    throw InvalidInput("empty disc clip box");
  ValueSet v;
  v.kind_ = Kind::disc;
  v.cu_ = clean(cu);
  v.cv_ = clean(cv);
  v.r_ = radius;
  v.box_ = clip;
  if (!v.contains(std::array<double, 2>{v.cu_, v.cv_}, 1e-12)) {
    // All sampled points start from the center; require it inside the clip.
    throw InvalidInput("disc center lies outside its clip box");
  }
  return v;
}

int ValueSet::dim() const {
  switch (kind_) {
    case Kind::interval: return 1;
    case Kind::disc: return 2;
    case Kind::points: return pts_.dim();
  }
  return 0;
}

int ValueSet::disc_radial_steps(int value_resolution) {
  const int r = static_cast<int>(std::lround(16.0 * (value_resolution - 1) / 100.0));
  return std::max(1, r);
}

PointCloud ValueSet::sample(int value_resolution) const {
  if (value_resolution <= 0) throw InvalidInput("value_resolution must be positive");
  switch (kind_) {
    case Kind::points:
      return pts_;
    case Kind::interval: {
      PointCloud out(1);
      if (lo_ == hi_) {
        out.push_back(std::array<double, 1>{lo_});
        return out;
      }
      const int m = std::max(2, value_resolution) - 1;
      for (int k = 0; k <= m; ++k) {
        if ((k == 0 && open_lo_) || (k == m && open_hi_)) continue;
        const double t = (lo_ * (m - k) + hi_ * k) / m;
        out.push_back(std::array<double, 1>{clean(t)});
      }
      if (out.empty()) out.push_back(std::array<double, 1>{clean(0.5 * (lo_ + hi_))});
      return out;
    }
    case Kind::disc: {
      PointCloud out(2);
      out.push_back(std::array<double, 2>{cu_, cv_});
      if (r_ == 0.0) return out;
      const int radial = disc_radial_steps(value_resolution);
      const int angular = 2 * radial;
      for (int k = 1; k <= radial; ++k) {
        const double rk = r_ * k / radial;
        for (int j = 0; j < angular; ++j) {
          const double th = 2.0 * std::numbers::pi * j / angular;
          const std::array<double, 2> p{clean(cu_ + rk * std::cos(th)),
                                        clean(cv_ + rk * std::sin(th))};
          if (contains(p, 1e-12)) out.push_back(p);
        }
      }
      return out;
    }
  }
  return {};
}

bool ValueSet::contains(ConstSpan p, double tol) const {
  if (static_cast<int>(p.size()) != dim())
    throw InvalidInput("value point dimension mismatch");
  switch (kind_) {
    case Kind::interval: {
      const double x = p[0];
      const bool above = open_lo_ ? x - lo_ > tol : x >= lo_ - tol;
      const bool below = open_hi_ ? hi_ - x > tol : x <= hi_ + tol;
      return above && below;
    }
    case Kind::points:
      return pts_.contains_near(p, tol);
    case Kind::disc: {
      const double du = p[0] - cu_, dv = p[1] - cv_;
      const double rr = r_ + tol;
      return du * du + dv * dv <= rr * rr && p[0] >= box_.ulo - tol &&
             p[0] <= box_.uhi + tol && p[1] >= box_.vlo - tol &&
             p[1] <= box_.vhi + tol;
    }
  }
  return false;
}

ValueSet ValueSet::negated() const {
  ValueSet v = *this;
  switch (kind_) {
    case Kind::interval:
      v.lo_ = neg(hi_);
      v.hi_ = neg(lo_);
      v.open_lo_ = open_hi_;
      v.open_hi_ = open_lo_;
      break;
    case Kind::points:
      v.pts_ = pts_.negated();
      break;
    case Kind::disc:
      v.cu_ = neg(cu_);
      v.cv_ = neg(cv_);
      v.box_ = Box{-box_.uhi, -box_.ulo, -box_.vhi, -box_.vlo};
      break;
  }
  return v;
}

std::string ValueSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::interval:
      os << (open_lo_ ? '(' : '[') << lo_ << ", " << hi_ << (open_hi_ ? ')' : ']');
      break;
    case Kind::points:
      os << '{';
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) os << ", ";
        os << '(';
        for (int k = 0; k < pts_.dim(); ++k) os << (k ? "," : "") << pts_[i][k];
        os << ')';
      }
      os << '}';
      break;
    case Kind::disc:
      os << "disc(center=(" << cu_ << ',' << cv_ << "), r=" << r_;
      if (std::isfinite(box_.ulo) || std::isfinite(box_.uhi) ||
          std::isfinite(box_.vlo) || std::isfinite(box_.vhi))
        os << ", clip=[" << box_.ulo << ',' << box_.uhi << "]x[" << box_.vlo
           << ',' << box_.vhi << ']';
      os << ')';
      break;
  }
  return os.str();
}

}  // namespace conemm
