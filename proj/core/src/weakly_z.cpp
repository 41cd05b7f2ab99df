#include "check_internal.hpp"

namespace conemm {
namespace detail {
namespace {

using Mode = ExtremalMode;

constexpr std::uint8_t kVacuous = 255;

/// F(x, y) meets z + S, tested on the upper frontier of the sample.
bool meets_target(EvalContext& ctx, int x, int y, ConstSpan z) {
  const PointCloud& top = ctx.extremal(x, y, Mode::max);
  for (std::size_t k = 0; k < top.size(); ++k)
    if (ctx.cone().dominates(top[k], z)) return true;
  return false;
}

enum class SearchResult { found, exhausted, budget };

struct LambdaCheck {
  int xl;
  Vec g;
};

/// Selection search over y_i in T(x_i) with face pruning.
class TargetSearch {
 public:
  TargetSearch(EvalContext& ctx, ConstSpan z, const std::vector<std::vector<int>>& choices,
               const std::vector<std::vector<LambdaCheck>>& by_last, long long budget)
      : ctx_(ctx), z_(z), choices_(choices), by_last_(by_last), budget_(budget) {
    pick_.assign(choices.size(), 0);
  }

  SearchResult run() { return descend(0); }
  std::vector<int> picked() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < pick_.size(); ++i) out.push_back(choices_[i][pick_[i]]);
    return out;
  }
  long long nodes() const { return nodes_; }

 private:
  bool passes(int depth) {
    const int first_y = choices_[0][pick_[0]];
    bool uniform = true;
    for (int i = 1; i <= depth; ++i) uniform = uniform && choices_[i][pick_[i]] == first_y;
    for (const LambdaCheck& c : by_last_[depth]) {
      int y = first_y;
      if (!uniform) {
        Coord comb(ctx_.second_point(first_y).dim());
        for (int i = 0; i <= depth; ++i) {
          if (c.g[i] == 0.0) continue;
          const Coord& yi = ctx_.second_point(choices_[i][pick_[i]]);
          for (int a = 0; a < comb.dim(); ++a) comb[a] += c.g[i] * yi[a];
        }
        y = ctx_.second_id(comb);
      }
      if (!meets_target(ctx_, c.xl, y, z_)) return false;
    }
    return true;
  }

  SearchResult descend(int depth) {
    if (depth == static_cast<int>(choices_.size())) return SearchResult::found;
    for (std::size_t k = 0; k < choices_[depth].size(); ++k) {
      if (++nodes_ > budget_ && budget_ > 0) return SearchResult::budget;
      pick_[depth] = static_cast<int>(k);
      if (!passes(depth)) continue;
      const SearchResult r = descend(depth + 1);
      if (r != SearchResult::exhausted) return r;
    }
    return SearchResult::exhausted;
  }

  EvalContext& ctx_;
  ConstSpan z_;
  const std::vector<std::vector<int>>& choices_;
  const std::vector<std::vector<LambdaCheck>>& by_last_;
  long long budget_;
  std::vector<int> pick_;
  long long nodes_ = 0;
};

std::vector<std::vector<LambdaCheck>> lambda_checks(EvalContext& ctx,
                                                    const std::vector<Coord>& xs,
                                                    const GCurve& curve) {
  const int n = static_cast<int>(xs.size());
  const LambdaGrid& lg = lambda_grid(n, ctx.config().lambda_steps);
  std::vector<std::vector<LambdaCheck>> by_last(n);
  for (std::size_t l = 0; l < lg.lambdas.size(); ++l)
    by_last[lg.last[l]].push_back({ctx.first_id(combine(xs, lg.lambdas[l])),
                                   curve(lg.lambdas[l], xs)});
  return by_last;
}

int curve_slot(Verdict& out, const GCurve& c) {
  for (std::size_t i = 0; i < out.strategy_curves.size(); ++i)
    if (out.strategy_curves[i].first == c.name() &&
        out.strategy_curves[i].second == c.params())
      return static_cast<int>(i);
  out.strategy_curves.emplace_back(c.name(), c.params());
  return static_cast<int>(out.strategy_curves.size() - 1);
}

}  // namespace

Verdict check_weakly_z(const SetValuedFixture& fx, const Cone& cone, const PropertySpec& spec,
                       const CheckOptions& opt) {
  if (fx.arity() != 2) throw InvalidInput("weakly_z needs a two-argument fixture");
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  const FixtureView view = oriented_view(fx, spec);
  EvalContext ctx(view, cone, opt.cfg);
  const std::vector<Vec> targets =
      opt.z_set.empty() ? default_weakly_z_targets(view, cone, opt.cfg) : opt.z_set;
  for (const auto& z : targets)
    if (static_cast<int>(z.size()) != cone.dim())
      throw InvalidInput("weakly_z target has the wrong dimension");
  if (targets.size() > 65535) throw InvalidInput("too many weakly_z targets");
  out.strategy_targets = targets;
  const GCurveFamily family = effective_family(fx, opt);
  const int m = ctx.first_grid_size();
  const int ny = ctx.second_grid_size();

  // T(x) per target: second-grid y with F(x, y) meeting z + S.
  std::vector<std::vector<std::vector<int>>> reach(targets.size(),
                                                   std::vector<std::vector<int>>(m));
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < ny; ++y)
        if (meets_target(ctx, x, y, targets[t])) reach[t][x].push_back(y);

  long long tuples = 0, vacuous = 0, searches = 0, nodes = 0;
  bool failed = false;
  for (int n = 1; n <= opt.cfg.n_max && !failed; ++n) {
    const auto curves = ordered_curves(family, n);
    for_each_tuple(m, n, [&](const std::vector<int>& ids) {
      ++tuples;
      const auto xs = points_of(ctx, ids);
      std::vector<std::vector<std::vector<LambdaCheck>>> checks(curves.size());
      for (std::size_t t = 0; t < targets.size(); ++t) {
        StrategyRow row;
        row.n = static_cast<std::uint8_t>(n);
        row.target = static_cast<std::uint16_t>(t);
        for (int i = 0; i < n; ++i) row.tuple[i] = static_cast<std::uint16_t>(ids[i]);
        std::vector<std::vector<int>> choices;
        int empty_at = -1;
        for (int i = 0; i < n; ++i) {
          choices.push_back(reach[t][ids[i]]);
          if (choices.back().empty() && empty_at < 0) empty_at = i;
        }
        if (empty_at >= 0) {
          ++vacuous;
          row.curve = kVacuous;
          row.choice[0] = static_cast<std::uint16_t>(empty_at);
          out.strategy.push_back(row);
          continue;
        }
        bool found = false, cut = false;
        for (std::size_t c = 0; c < curves.size() && !found; ++c) {
          if (checks[c].empty()) checks[c] = lambda_checks(ctx, xs, *curves[c]);
          ++searches;
          TargetSearch s(ctx, targets[t], choices, checks[c], opt.cfg.search_budget);
          const SearchResult r = s.run();
          nodes += s.nodes();
          if (r == SearchResult::budget) cut = true;
          if (r != SearchResult::found) continue;
          found = true;
          row.curve = static_cast<std::uint8_t>(curve_slot(out, *curves[c]));
          const auto picked = s.picked();
          for (int i = 0; i < n; ++i) row.choice[i] = static_cast<std::uint16_t>(picked[i]);
          out.strategy.push_back(row);
        }
        if (found) continue;
        if (cut) ++out.inconclusive;
        out.status = Status::not_confirmed;
        out.witness = Witness{};
        out.witness.x = xs;
        out.witness.target = targets[t];
        out.witness.note = cut ? "selection search hit the node budget"
                               : "no selection and curve keep the value above z";
        failed = true;
        return false;
      }
      return true;
    });
  }
  if (out.status == Status::confirmed) {
    for (auto it = out.strategy.rbegin(); it != out.strategy.rend(); ++it) {
      if (it->curve == kVacuous) continue;
      out.witness.x.clear();
      for (int i = 0; i < it->n; ++i) {
        out.witness.x.push_back(ctx.first_point(it->tuple[i]));
        out.witness.y.push_back(ctx.second_point(it->choice[i]));
      }
      out.witness.target = targets[it->target];
      out.witness.curve = out.strategy_curves[it->curve].first;
      out.witness.curve_params = out.strategy_curves[it->curve].second;
      break;
    }
  } else {
    out.strategy.clear();
    out.strategy_curves.clear();
  }
  out.coverage["targets"] = static_cast<long long>(targets.size());
  out.coverage["tuples"] = tuples;
  out.coverage["vacuous"] = vacuous;
  out.coverage["searches"] = searches;
  out.coverage["nodes"] = nodes;
  return out;
}

bool replay_weakly_z(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                     const CheckOptions& opt) {
  if (v.status != Status::confirmed || v.strategy.empty()) return false;
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  const int ny = ctx.second_grid_size();
  for (const auto& row : v.strategy) {
    const Vec& z = v.strategy_targets.at(row.target);
    if (row.curve == kVacuous) {
      const int x = row.tuple.at(row.choice[0]);
      for (int y = 0; y < ny; ++y)
        if (meets_target(ctx, x, y, z)) return false;
      continue;
    }
    const auto& [name, params] = v.strategy_curves.at(row.curve);
    const auto curve = make_curve(name, params);
    std::vector<Coord> xs, ys;
    for (int i = 0; i < row.n; ++i) {
      if (!meets_target(ctx, row.tuple[i], row.choice[i], z)) return false;
      xs.push_back(ctx.first_point(row.tuple[i]));
      ys.push_back(ctx.second_point(row.choice[i]));
    }
    for (const auto& lambda : lambda_grid(row.n, opt.cfg.lambda_steps).lambdas) {
      const int xl = ctx.first_id(combine(xs, lambda));
      const int yl = ctx.second_id(combine(ys, (*curve)(lambda, xs)));
      if (!meets_target(ctx, xl, yl, z)) return false;
    }
  }
  return true;
}

}  // namespace detail

std::vector<Vec> default_weakly_z_targets(const FixtureView& view, const Cone& cone,
                                          const ToleranceConfig& cfg) {
  EvalContext ctx(view, cone, cfg);
  PointCloud pool(cone.dim());
  for (int x = 0; x < ctx.first_grid_size(); ++x)
    pool.append(ctx.row_extremal(x, ExtremalMode::max_w));
  return extremal_points(pool, cone, ExtremalMode::min).to_vectors();
}

}  // namespace conemm
