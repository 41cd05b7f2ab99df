#include "conemm/verdict.hpp"

#include <bit>
#include <cstdio>

namespace conemm {
namespace {

struct KindName {
  PropertyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {PropertyKind::properly_qc_iii, "properly_qc_iii"},
    {PropertyKind::properly_qc_v, "properly_qc_v"},
    {PropertyKind::naturally_qc_iii, "naturally_qc_iii"},
    {PropertyKind::naturally_qc_v, "naturally_qc_v"},
    {PropertyKind::s_qc, "s_qc"},
    {PropertyKind::qc, "qc"},
    {PropertyKind::natural_qc_scalar, "natural_qc_scalar"},
    {PropertyKind::wcg, "wcg"},
    {PropertyKind::wnq, "wnq"},
    {PropertyKind::transfer_mu_v, "transfer_mu_v"},
    {PropertyKind::transfer_mu_iii, "transfer_mu_iii"},
    {PropertyKind::transfer_weak_mu_v, "transfer_weak_mu_v"},
    {PropertyKind::transfer_weak_mu_iii, "transfer_weak_mu_iii"},
    {PropertyKind::transfer_mu_scalar, "transfer_mu_scalar"},
    {PropertyKind::pair_properly_iii, "pair_properly_iii"},
    {PropertyKind::pair_properly_v, "pair_properly_v"},
    {PropertyKind::pair_properly_plain, "pair_properly_plain"},
    {PropertyKind::pair_properly_scalar, "pair_properly_scalar"},
    {PropertyKind::transfer_properly_iii, "transfer_properly_iii"},
    {PropertyKind::transfer_properly_v, "transfer_properly_v"},
    {PropertyKind::alpha, "alpha"},
    {PropertyKind::alpha_prime, "alpha_prime"},
    {PropertyKind::gamma, "gamma"},
    {PropertyKind::gamma_prime, "gamma_prime"},
    {PropertyKind::weakly_z, "weakly_z"},
};

nlohmann::json coord_json(const Coord& c) { return c.vec(); }

Coord coord_from(const nlohmann::json& j) {
  const Vec v = j.get<Vec>();
  return Coord(ConstSpan(v));
}

}  // namespace

std::string to_string(PropertyKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "?";
}

std::string to_string(Arg arg) { return arg == Arg::first ? "first" : "second"; }

std::string to_string(Polarity p) {
  return p == Polarity::convex ? "convex" : "concave";
}

PropertyKind parse_property_kind(std::string_view s) {
  for (const auto& k : kKindNames)
    if (s == k.name) return k.kind;
  throw InvalidInput("unknown property '" + std::string(s) + "'");
}

Arg parse_arg(std::string_view s) {
  if (s == "first") return Arg::first;
  if (s == "second") return Arg::second;
  throw InvalidInput("argument must be 'first' or 'second', got '" + std::string(s) + "'");
}

Polarity parse_polarity(std::string_view s) {
  if (s == "convex") return Polarity::convex;
  if (s == "concave") return Polarity::concave;
  throw InvalidInput("polarity must be 'convex' or 'concave', got '" +
                     std::string(s) + "'");
}

const std::vector<PropertyKind>& all_property_kinds() {
  static const std::vector<PropertyKind> kinds = [] {
    std::vector<PropertyKind> v;
    for (const auto& k : kKindNames) v.push_back(k.kind);
    return v;
  }();
  return kinds;
}

bool is_existential(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::wnq:
    case PropertyKind::alpha:
    case PropertyKind::alpha_prime:
    case PropertyKind::gamma:
    case PropertyKind::gamma_prime:
    case PropertyKind::weakly_z:
      return true;
    default:
      return false;
  }
}

bool is_single_map(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::properly_qc_iii:
    case PropertyKind::properly_qc_v:
    case PropertyKind::naturally_qc_iii:
    case PropertyKind::naturally_qc_v:
    case PropertyKind::s_qc:
    case PropertyKind::qc:
    case PropertyKind::natural_qc_scalar:
    case PropertyKind::wcg:
    case PropertyKind::wnq:
      return true;
    default:
      return false;
  }
}

bool needs_single_valued(PropertyKind kind) {
  return kind == PropertyKind::natural_qc_scalar ||
         kind == PropertyKind::transfer_mu_scalar ||
         kind == PropertyKind::pair_properly_scalar;
}

std::string PropertySpec::id() const {
  return to_string(kind) + "[" + to_string(arg) + "," + to_string(polarity) + "]";
}

PropertySpec PropertySpec::parse(std::string_view id) {
  PropertySpec s;
  const auto open = id.find('[');
  if (open == std::string_view::npos) {
    s.kind = parse_property_kind(id);
    return s;
  }
  if (id.back() != ']') throw InvalidInput("malformed property id '" + std::string(id) + "'");
  s.kind = parse_property_kind(id.substr(0, open));
  const auto body = id.substr(open + 1, id.size() - open - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw InvalidInput("malformed property id '" + std::string(id) + "'");
  s.arg = parse_arg(body.substr(0, comma));
  s.polarity = parse_polarity(body.substr(comma + 1));
  return s;
}

FixtureView oriented_view(const SetValuedFixture& fx, const PropertySpec& spec) {
  FixtureView v(fx);
  const bool primed = spec.kind == PropertyKind::alpha_prime ||
                      spec.kind == PropertyKind::gamma_prime;
  if ((spec.arg == Arg::second || primed) && fx.arity() != 2)
    throw InvalidInput("fixture '" + fx.name() + "' has a single argument");
  if (spec.arg == Arg::second) v = v.transpose();
  if (spec.polarity == Polarity::concave) v = v.negate();
  if (primed) v = v.mirror();
  return v;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::refuted: return "Refuted";
    case Status::not_refuted: return "NotRefuted";
    case Status::confirmed: return "Confirmed";
    case Status::not_confirmed: return "NotConfirmed";
  }
  return "?";
}

int exit_code(Status s) { return is_failure(s) ? 1 : 0; }

nlohmann::json Witness::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (!x.empty()) {
    auto& a = j["x"] = nlohmann::json::array();
    for (const auto& c : x) a.push_back(coord_json(c));
  }
  if (!y.empty()) {
    auto& a = j["y"] = nlohmann::json::array();
    for (const auto& c : y) a.push_back(coord_json(c));
  }
  if (!lambda.empty()) j["lambda"] = lambda;
  if (!values.empty()) j["values"] = values;
  if (!target.empty()) j["target"] = target;
  if (index >= 0) j["index"] = index;
  if (!curve.empty()) {
    j["curve"] = curve;
    j["curve_params"] = curve_params;
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

Witness Witness::from_json(const nlohmann::json& j) {
  Witness w;
  try {
    if (j.contains("x"))
      for (const auto& c : j["x"]) w.x.push_back(coord_from(c));
    if (j.contains("y"))
      for (const auto& c : j["y"]) w.y.push_back(coord_from(c));
    w.lambda = j.value("lambda", Vec{});
    w.values = j.value("values", std::vector<Vec>{});
    w.target = j.value("target", Vec{});
    w.index = j.value("index", -1);
    w.curve = j.value("curve", std::string{});
    w.curve_params = j.value("curve_params", Vec{});
    w.note = j.value("note", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed witness: ") + e.what());
  }
  return w;
}

std::uint64_t Verdict::strategy_digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& r : strategy) {
    mix(r.n);
    mix(r.curve);
    mix(r.target);
    mix(r.slice);
    for (int i = 0; i < r.n; ++i) {
      mix(r.tuple[i]);
      mix(r.choice[i]);
    }
  }
  for (const auto& [name, params] : strategy_curves) {
    for (char c : name) mix(static_cast<unsigned char>(c));
    for (double p : params) mix(std::bit_cast<std::uint64_t>(p));
  }
  return h;
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["fixture"] = fixture;
  j["cone"] = cone;
  j["property"] = property.id();
  j["status"] = to_string(status);
  j["witness"] = witness.to_json();
  if (!table.empty()) {
    auto& t = j["table"] = nlohmann::json::array();
    for (const auto& w : table) t.push_back(w.to_json());
  }
  if (!strategy.empty()) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(strategy_digest()));
    nlohmann::json s;
    s["rows"] = strategy.size();
    s["digest"] = buf;
    auto& c = s["curves"] = nlohmann::json::array();
    for (const auto& [name, params] : strategy_curves)
      c.push_back({{"name", name}, {"params", params}});
    j["strategy"] = s;
  }
  j["coverage"] = coverage;
  j["inconclusive"] = inconclusive;
  j["tolerances"] = tolerances.to_json();
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace conemm
