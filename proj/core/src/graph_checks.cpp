#include <unordered_set>

#include "check_internal.hpp"

namespace conemm::detail {
namespace {

/// Identity of a curve restricted to a face of the simplex; empty when the
/// curve's restriction is not known to be the same family member.
std::string face_signature(const GCurve& c, const std::vector<int>& face) {
  const std::string name = c.name();
  if (name == "identity") return "identity";
  if (name == "gate") return "gate:" + std::to_string(c.params().at(0));
  if (name == "power") {
    const Vec p = c.params();
    std::string s = "power";
    bool all_one = true;
    for (int i : face) {
      all_one = all_one && p[i] == 1.0;
      s += ":" + std::to_string(p[i]);
    }
    return all_one ? "identity" : s;
  }
  return {};
}

std::string failure_key(const std::string& sig, int slice, const std::vector<int>& ids) {
  std::string k = sig + "|" + std::to_string(slice);
  for (int i : ids) k += "," + std::to_string(i);
  return k;
}

enum class SearchResult { found, exhausted, budget };

/// Depth-first search for a selection y_i in F(x_i) with
/// sum g_i(lambda) y_i in F(x_lambda) for every lattice lambda.
class SelectionSearch {
 public:
  SelectionSearch(EvalContext& ctx, int slice, const std::vector<int>& ids,
                  const GCurve& curve, long long budget)
      : ctx_(ctx), ids_(ids), budget_(budget), d_(ctx.value_dim()) {
    const int n = static_cast<int>(ids.size());
    const auto xs = points_of(ctx, ids);
    const LambdaGrid& lg = lambda_grid(n, ctx.config().lambda_steps);
    by_last_.resize(n);
    for (std::size_t l = 0; l < lg.lambdas.size(); ++l) {
      Check c;
      c.lambda = lg.lambdas[l];
      c.g = curve(c.lambda, xs);
      c.region = &ctx.region(ctx.first_id(combine(xs, c.lambda)), slice);
      by_last_[lg.last[l]].push_back(std::move(c));
    }
    for (int i = 0; i < n; ++i) cands_.push_back(&ctx.values(ids[i], slice));
    choice_.assign(n, 0);
  }

  SearchResult run() {
    nodes_ = 0;
    return descend(0);
  }

  const std::vector<int>& choice() const { return choice_; }
  const Vec& first_failure() const { return first_fail_; }
  long long nodes() const { return nodes_; }

 private:
  struct Check {
    Vec lambda;
    Vec g;
    const ValueSet* region;
  };

  bool passes(int depth) {
    const double tol = ctx_.cone().eps_cone();
    std::array<double, kMaxCoordDim> y{};
    for (const Check& c : by_last_[depth]) {
      y.fill(0.0);
      for (int i = 0; i <= depth; ++i) {
        if (c.g[i] == 0.0) continue;
        const auto v = (*cands_[i])[choice_[i]];
        for (int a = 0; a < d_; ++a) y[a] += c.g[i] * v[a];
      }
      if (!c.region->contains(ConstSpan(y.data(), d_), tol)) {
        if (first_fail_.empty()) first_fail_ = c.lambda;
        return false;
      }
    }
    return true;
  }

  SearchResult descend(int depth) {
    if (depth == static_cast<int>(ids_.size())) return SearchResult::found;
    const int count = static_cast<int>(cands_[depth]->size());
    for (int k = 0; k < count; ++k) {
      if (++nodes_ > budget_ && budget_ > 0) return SearchResult::budget;
      choice_[depth] = k;
      if (!passes(depth)) continue;
      const SearchResult r = descend(depth + 1);
      if (r != SearchResult::exhausted) return r;
    }
    return SearchResult::exhausted;
  }

  EvalContext& ctx_;
  const std::vector<int>& ids_;
  long long budget_;
  int d_;
  std::vector<std::vector<Check>> by_last_;
  std::vector<const PointCloud*> cands_;
  std::vector<int> choice_;
  Vec first_fail_;
  long long nodes_ = 0;
};

/// True when some sub-pair already failed for the restriction of @p curve.
bool pair_failed(const std::unordered_set<std::string>& failed, const GCurve& curve,
                 int slice, const std::vector<int>& ids) {
  if (ids.size() < 3) return false;
  bool hit = false;
  for_each_tuple(static_cast<int>(ids.size()), 2, [&](const std::vector<int>& face) {
    const std::string sig = face_signature(curve, face);
    if (sig.empty()) return true;
    hit = failed.count(failure_key(sig, slice, {ids[face[0]], ids[face[1]]})) > 0;
    return !hit;
  });
  return hit;
}

int curve_slot(Verdict& out, const GCurve& c) {
  for (std::size_t i = 0; i < out.strategy_curves.size(); ++i)
    if (out.strategy_curves[i].first == c.name() &&
        out.strategy_curves[i].second == c.params())
      return static_cast<int>(i);
  out.strategy_curves.emplace_back(c.name(), c.params());
  return static_cast<int>(out.strategy_curves.size() - 1);
}

Witness selection_witness(EvalContext& ctx, int slice, const std::vector<int>& ids,
                          const std::vector<int>& choice, const GCurve& curve) {
  Witness w;
  w.x = points_of(ctx, ids);
  w.y = {ctx.second_point(slice)};
  for (std::size_t i = 0; i < ids.size(); ++i)
    w.values.push_back(ctx.values(ids[i], slice).point(choice[i]));
  w.curve = curve.name();
  w.curve_params = curve.params();
  return w;
}

}  // namespace

Verdict check_graph(const SetValuedFixture& fx, const Cone& cone,
                    const PropertySpec& spec, const CheckOptions& opt) {
  Verdict out = blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  const bool wnq = spec.kind == PropertyKind::wnq;
  const GCurveFamily family = wnq ? effective_family(fx, opt) : GCurveFamily::identity_only();
  const int m = ctx.first_grid_size();
  const int slices = ctx.second_grid_size();
  std::unordered_set<std::string> failed;
  long long tuples = 0, searches = 0, nodes = 0;
  bool done = false;

  for (int y = 0; y < slices && !done; ++y) {
    for (int n = 1; n <= opt.cfg.n_max && !done; ++n) {
      const auto curves = ordered_curves(family, n);
      for_each_tuple(m, n, [&](const std::vector<int>& ids) {
        ++tuples;
        bool found = false, cut = false;
        Vec fail_lambda;
        for (const auto& curve : curves) {
          if (pair_failed(failed, *curve, y, ids)) continue;
          ++searches;
          SelectionSearch s(ctx, y, ids, *curve, opt.cfg.search_budget);
          const SearchResult r = s.run();
          nodes += s.nodes();
          if (fail_lambda.empty()) fail_lambda = s.first_failure();
          if (r == SearchResult::found) {
            found = true;
            if (wnq) {
              StrategyRow row;
              row.n = static_cast<std::uint8_t>(n);
              row.curve = static_cast<std::uint8_t>(curve_slot(out, *curve));
              row.slice = static_cast<std::uint16_t>(y);
              for (int i = 0; i < n; ++i) {
                row.tuple[i] = static_cast<std::uint16_t>(ids[i]);
                row.choice[i] = static_cast<std::uint16_t>(s.choice()[i]);
              }
              out.strategy.push_back(row);
              out.witness = selection_witness(ctx, y, ids, s.choice(), *curve);
            }
            break;
          }
          if (r == SearchResult::budget) {
            cut = true;
          } else if (n == 2) {
            const std::string sig = face_signature(*curve, {0, 1});
            if (!sig.empty()) failed.insert(failure_key(sig, y, ids));
          }
        }
        if (found) return true;
        if (cut) ++out.inconclusive;
        if (cut && !wnq) return true;
        out.status = wnq ? Status::not_confirmed : Status::refuted;
        out.witness = Witness{};
        out.witness.x = points_of(ctx, ids);
        out.witness.y = {ctx.second_point(y)};
        out.witness.lambda = fail_lambda;
        out.witness.note = cut ? "selection search hit the node budget"
                               : "no selection satisfies every lattice weight";
        done = true;
        return false;
      });
    }
  }
  if (out.status != Status::confirmed) {
    out.strategy.clear();
    out.strategy_curves.clear();
  }
  out.coverage["slices"] = slices;
  out.coverage["tuples"] = tuples;
  out.coverage["searches"] = searches;
  out.coverage["nodes"] = nodes;
  return out;
}

bool replay_graph(const Verdict& v, const SetValuedFixture& fx, const Cone& cone,
                  const CheckOptions& opt) {
  EvalContext ctx(oriented_view(fx, v.property), cone, opt.cfg);
  if (v.status == Status::refuted) {
    const Witness& w = v.witness;
    if (w.x.empty() || w.y.size() != 1) return false;
    std::vector<int> ids;
    for (const auto& x : w.x) ids.push_back(ctx.first_id(x));
    IdentityCurve id;
    SelectionSearch s(ctx, ctx.second_id(w.y[0]), ids, id, 0);
    return s.run() == SearchResult::exhausted;
  }
  if (v.status != Status::confirmed || v.strategy.empty()) return false;
  const double tol = cone.eps_cone();
  for (const auto& row : v.strategy) {
    const auto& [name, params] = v.strategy_curves.at(row.curve);
    const auto curve = make_curve(name, params);
    std::vector<int> ids(row.tuple.begin(), row.tuple.begin() + row.n);
    const auto xs = points_of(ctx, ids);
    const LambdaGrid& lg = lambda_grid(row.n, opt.cfg.lambda_steps);
    for (const auto& lambda : lg.lambdas) {
      const Vec g = (*curve)(lambda, xs);
      Vec y(ctx.value_dim(), 0.0);
      for (int i = 0; i < row.n; ++i) {
        const auto val = ctx.values(ids[i], row.slice)[row.choice[i]];
        for (int a = 0; a < ctx.value_dim(); ++a) y[a] += g[i] * val[a];
      }
      if (!ctx.region(ctx.first_id(combine(xs, lambda)), row.slice).contains(y, tol))
        return false;
    }
  }
  return true;
}

}  // namespace conemm::detail

namespace conemm {

Verdict check_wcg_tuple(const SetValuedFixture& fx, const Cone& cone,
                        const std::vector<Coord>& xs, const CheckOptions& opt) {
  const PropertySpec spec{PropertyKind::wcg, Arg::first, Polarity::convex};
  Verdict out = detail::blank_verdict(fx, cone, spec, opt.cfg);
  EvalContext ctx(oriented_view(fx, spec), cone, opt.cfg);
  std::vector<int> ids;
  for (const auto& x : xs) ids.push_back(ctx.first_id(x));
  IdentityCurve id;
  for (int y = 0; y < ctx.second_grid_size(); ++y) {
    detail::SelectionSearch s(ctx, y, ids, id, opt.cfg.search_budget);
    const auto r = s.run();
    if (r == detail::SearchResult::budget) ++out.inconclusive;
    if (r != detail::SearchResult::exhausted) continue;
    out.status = Status::refuted;
    out.witness.x = xs;
    out.witness.y = {ctx.second_point(y)};
    out.witness.lambda = s.first_failure();
    out.witness.note = "no selection satisfies every lattice weight";
    break;
  }
  out.coverage["slices"] = ctx.second_grid_size();
  out.coverage["tuples"] = 1;
  return out;
}

}  // namespace conemm
