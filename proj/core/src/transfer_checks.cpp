#include <algorithm>
#include <cstdint>
#include <memory>

#include "check_internal.hpp"

namespace conemm::detail {
namespace {

using Mode = ExtremalMode;

bool is_iii(PropertyKind k) {
  return k == PropertyKind::transfer_mu_iii || k == PropertyKind::transfer_weak_mu_iii;
}

bool is_weak(PropertyKind k) {
  return k == PropertyKind::transfer_weak_mu_v || k == PropertyKind::transfer_weak_mu_iii;
}

/**
 * Feasible z_i sets as bitsets over the second grid, one per
 * (x_lambda, z, x_i). The check for a tuple is the intersection of these
 * sets over every lattice lambda.
 */
class TransferEngine {
 public:
  TransferEngine(EvalContext& ctx, bool iii)
      : ctx_(ctx),
        iii_(iii),
        nx_(ctx.first_grid_size()),
        ny_(ctx.second_grid_size()),
        words_((ny_ + 63) / 64) {}

  int words() const { return words_; }

  /// Class of (x_lambda, z): true when F(x_lambda, z) meets the weakly
  /// extremal set of the row union (Max_w for type v, Min_w for type iii).
  bool attains(int xl, int z) {
    ZRow& r = zrow(xl, z);
    if (r.cls < 0) {
      const Mode m = iii_ ? Mode::min_w : Mode::max_w;
      r.cls = ctx_.meets(xl, z, ctx_.row_extremal(xl, m)) ? 1 : 0;
    }
    return r.cls == 1;
  }

  const std::uint64_t* bits(int xl, int z, int xi) {
    ZRow& r = zrow(xl, z);
    std::uint64_t* out = r.bits.data() + static_cast<std::size_t>(xi) * words_;
    if (r.done[xi]) return out;
    r.done[xi] = 1;
    const bool strict = attains(xl, z);
    const Cone& cone = ctx_.cone();
    std::fill(out, out + words_, 0);
    if (!iii_) {
      const PointCloud top = ctx_.meet_extremal(xl, z, xi, Mode::max);
      if (top.empty()) {
        fill_all(out);
        return out;
      }
      const Inclusion inc = strict ? Inclusion::minus : Inclusion::minus_interior;
      for (int zi = 0; zi < ny_; ++zi)
        if (!first_uncovered(top, ctx_.extremal(xi, zi, Mode::max), cone, inc))
          out[zi / 64] |= std::uint64_t{1} << (zi % 64);
    } else {
      const PointCloud& low = ctx_.extremal(xl, z, Mode::min);
      const Inclusion inc = strict ? Inclusion::plus : Inclusion::plus_interior;
      for (int zi = 0; zi < ny_; ++zi) {
        const PointCloud& lhs = reverse_meet(xi, zi, xl);
        if (lhs.empty() || !first_uncovered(lhs, low, cone, inc))
          out[zi / 64] |= std::uint64_t{1} << (zi % 64);
      }
    }
    return out;
  }

 private:
  struct ZRow {
    int cls = -1;
    std::vector<std::uint64_t> bits;
    std::vector<char> done;
  };

  void fill_all(std::uint64_t* out) const {
    for (int zi = 0; zi < ny_; ++zi) out[zi / 64] |= std::uint64_t{1} << (zi % 64);
  }

  ZRow& zrow(int xl, int z) {
    if (static_cast<int>(store_.size()) <= xl) store_.resize(xl + 1);
    auto& rows = store_[xl];
    if (rows.empty()) rows.resize(ny_);
    auto& r = rows[z];
    if (!r) {
      r = std::make_unique<ZRow>();
      r->bits.assign(static_cast<std::size_t>(nx_) * words_, 0);
      r->done.assign(nx_, 0);
    }
    return *r;
  }

  /// Min of F(x_i, z_i) intersected with F(x_lambda, X); empty when disjoint.
  const PointCloud& reverse_meet(int xi, int zi, int xl) {
    const std::uint64_t key = (static_cast<std::uint64_t>(xi * ny_ + zi) << 32) |
                              static_cast<std::uint32_t>(xl);
    auto it = reverse_.find(key);
    if (it != reverse_.end()) return it->second;
    return reverse_.emplace(key, ctx_.meet_extremal(xi, zi, xl, Mode::min)).first->second;
  }

  EvalContext& ctx_;
  bool iii_;
  int nx_, ny_, words_;
  std::vector<std::vector<std::unique_ptr<ZRow>>> store_;
  std::unordered_map<std::uint64_t, PointCloud> reverse_;
};

struct Blocked {
  bool blocked = false;
  std::size_t lambda = 0;  ///< lattice index where the feasible set emptied
};

/// Intersects the feasible z_i sets over the distinct x_lambda of a tuple.
Blocked blocked_at(TransferEngine& eng, const std::vector<int>& xls,
                   const std::vector<std::size_t>& rep, int z, int xi,
                   std::vector<std::uint64_t>& acc) {
  std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
  for (std::size_t u = 0; u < xls.size(); ++u) {
    const std::uint64_t* b = eng.bits(xls[u], z, xi);
    std::uint64_t any = 0;
    for (int w = 0; w < eng.words(); ++w) any |= (acc[w] &= b[w]);
    if (!any) return {true, rep[u]};
  }
  return {};
}

struct TupleLambdas {
  std::vector<int> xls;
  std::vector<std::size_t> rep;
};

TupleLambdas tuple_lambdas(EvalContext& ctx, const std::vector<Coord>& xs,
                           const LambdaGrid& lg) {
  thread_local std::vector<std::size_t> seen;
  thread_local std::size_t epoch = 0;
  ++epoch;
  TupleLambdas t;
  for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
    const int id = ctx.first_id(combine(xs, lg.lambdas[l]));
    if (static_cast<int>(seen.size()) <= id) seen.resize(id + 1, 0);
    if (seen[id] == epoch) continue;
    seen[id] = epoch;
    t.xls.push_back(id);
    t.rep.push_back(l);
  }
  return t;
}

void check_kind(const SetValuedFixture& fx, const Cone& cone, PropertyKind kind) {
  if (kind == PropertyKind::transfer_mu_scalar && !fx.single_valued())
    throw InvalidInput("transfer_mu_scalar needs a single-valued fixture; '" +
                       fx.name() + "' is set-valued");
  if (fx.arity() != 2)
    throw InvalidInput("transfer conditions need a two-argument fixture");
  (void)cone;
}

}  // namespace

Verdict check_transfer_mu(const SetValuedFixture& fx, const Cone& cone,
                          const PropertySpec& spec, const CheckOptions& opt) {
  check_kind(fx, cone, spec.kind);
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  TransferEngine eng(ctx, is_iii(spec.kind));
  const bool weak = is_weak(spec.kind);
  const int m = ctx.first_grid_size();
  const int ny = ctx.second_grid_size();
  std::vector<std::uint64_t> acc(eng.words());
  long long tuples = 0, tests = 0;
  bool done = false;

  for (int n = 1; n <= opt.cfg.n_max && !done; ++n) {
    const LambdaGrid& lg = lambda_grid(n, opt.cfg.lambda_steps);
    for_each_tuple(m, n, [&](const std::vector<int>& ids) {
      ++tuples;
      const auto xs = points_of(ctx, ids);
      const TupleLambdas tl = tuple_lambdas(ctx, xs, lg);
      for (int z = 0; z < ny; ++z) {
        int blocked_count = 0;
        Blocked first;
        int first_i = -1;
        for (int i = 0; i < n; ++i) {
          ++tests;
          const Blocked b = blocked_at(eng, tl.xls, tl.rep, z, ids[i], acc);
          if (!b.blocked) {
            if (weak) break;
            continue;
          }
          ++blocked_count;
          if (first_i < 0) {
            first = b;
            first_i = i;
          }
          if (!weak) break;
        }
        const bool refuted = weak ? blocked_count == n : blocked_count > 0;
        if (!refuted) continue;
        out.status = Status::refuted;
        out.witness.x = xs;
        out.witness.y = {ctx.second_point(z)};
        out.witness.index = weak ? -1 : first_i;
        out.witness.lambda = lg.lambdas[first.lambda];
        const int xl = ctx.first_id(combine(xs, out.witness.lambda));
        out.witness.note = eng.attains(xl, z)
                               ? "value meets the weakly extremal row set"
                               : "value misses the weakly extremal row set";
        done = true;
        return false;
      }
      return true;
    });
  }
  out.coverage["tuples"] = tuples;
  out.coverage["z"] = ny;
  out.coverage["index_tests"] = tests;
  out.coverage["cells"] = ctx.cells_evaluated();
  return out;
}

bool replay_transfer_mu(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                        const CheckOptions& opt) {
  if (v.status != Status::refuted) return false;
  const Witness& w = v.witness;
  if (w.x.empty() || w.y.size() != 1) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  TransferEngine eng(ctx, is_iii(v.property.kind));
  std::vector<std::uint64_t> acc(eng.words());
  const int n = static_cast<int>(w.x.size());
  const TupleLambdas tl =
      tuple_lambdas(ctx, w.x, lambda_grid(n, opt.cfg.lambda_steps));
  const int z = ctx.second_id(w.y[0]);
  auto blocked = [&](int i) {
    return blocked_at(eng, tl.xls, tl.rep, z, ctx.first_id(w.x[i]), acc).blocked;
  };
  if (is_weak(v.property.kind)) {
    for (int i = 0; i < n; ++i)
      if (!blocked(i)) return false;
    return true;
  }
  return w.index >= 0 && w.index < n && blocked(w.index);
}

}  // namespace conemm::detail
