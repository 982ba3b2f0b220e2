#include "thetapairs/serialize.hpp"

#include "thetapairs/error.hpp"
#include "thetapairs/group.hpp"
#include "thetapairs/maps.hpp"

namespace thetapairs {

using json = nlohmann::ordered_json;

namespace {

json valuation_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string text(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" is not a rational string");
}

BigRational rational(const json& j, const char* key) { return parse_rational(text(j, key)); }
BigInt integer(const json& j, const char* key) { return parse_integer(text(j, key)); }

bool boolean(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" is not a boolean");
  }
  return v.get<bool>();
}

long whole(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" is not an integer");
  }
  return v.get<long>();
}

Valuation valuation_from(const json& v) {
  if (v.is_string() && v.get<std::string>() == "inf") return Valuation::infinity();
  if (v.is_number_integer()) return Valuation(v.get<long>());
  throw Error(ErrorCode::ParseError, "valuation must be an integer or \"inf\"");
}

std::vector<BigInt> integer_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw Error(ErrorCode::ParseError, std::string(key) + " is not an array");
  std::vector<BigInt> out;
  for (const json& e : v) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, std::string(key) + " entry is not a string");
    out.push_back(parse_integer(e.get<std::string>()));
  }
  return out;
}

HolmPoint holm_from(const json& j) { return HolmPoint{rational(j, "x"), rational(j, "y")}; }

ECPoint ec_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return ECPoint::infinity();
  return ECPoint(rational(j, "X"), rational(j, "Y"));
}

ThetaTriangle triangle_from(const json& j, const BigRational& cos_theta) {
  return ThetaTriangle{rational(j, "a"), rational(j, "b"), rational(j, "c"), cos_theta,
                       rational(j, "normalized_area")};
}

FilterReport filter_from(const json& j) {
  FilterReport f;
  f.positive = boolean(j, "positive");
  f.parity_ok = boolean(j, "parity_ok");
  f.gcd_ok = boolean(j, "gcd_ok");
  const json& per_prime = field(j, "per_prime");
  if (!per_prime.is_object()) throw Error(ErrorCode::ParseError, "per_prime is not an object");
  for (const auto& [p, v] : per_prime.items()) {
    f.per_prime.emplace(parse_integer(p), PrimeValuations{valuation_from(field(v, "ord_A_x")),
                                                          valuation_from(field(v, "ord_A_y"))});
  }
  const json& u = field(j, "u_profile");
  if (!u.is_object()) throw Error(ErrorCode::ParseError, "u_profile is not an object");
  for (const auto& [p, v] : u.items()) {
    std::optional<long> m;
    if (v.is_number_integer()) m = v.get<long>();
    else if (!v.is_null()) throw Error(ErrorCode::ParseError, "u_profile entry must be int or null");
    f.u_profile.emplace(parse_integer(p), m);
  }
  return f;
}

}  // namespace

json to_json(const HolmPoint& p) { return {{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }

json to_json(const ECPoint& q) {
  if (q.is_infinity()) return "infinity";
  return {{"X", to_string(q.X())}, {"Y", to_string(q.Y())}};
}

json to_json(const FilterReport& f) {
  json per_prime = json::object();
  for (const auto& [p, v] : f.per_prime) {
    per_prime[to_string(p)] = {{"ord_A_x", valuation_json(v.ord_A_x)},
                               {"ord_A_y", valuation_json(v.ord_A_y)}};
  }
  json u = json::object();
  for (const auto& [p, m] : f.u_profile) {
    u[to_string(p)] = m ? json(*m) : json(nullptr);
  }
  return {{"positive", f.positive}, {"parity_ok", f.parity_ok}, {"gcd_ok", f.gcd_ok},
          {"per_prime", per_prime},  {"u_profile", u}};
}

json to_json(const ThetaTriangle& t) {
  return {{"a", to_string(t.side_a)},
          {"b", to_string(t.side_b)},
          {"c", to_string(t.side_c)},
          {"normalized_area", to_string(t.normalized_area)}};
}

json to_json(const PairCertificate& c) {
  auto strings = [](const std::vector<BigInt>& v) {
    json out = json::array();
    for (const BigInt& n : v) out.push_back(to_string(n));
    return out;
  };
  json j;
  j["config"] = {{"k", to_string(c.config.k)},
                 {"l", to_string(c.config.l)},
                 {"s", to_string(c.config.angle.s)},
                 {"r", to_string(c.config.angle.r)}};
  j["multiplier"] = c.multiplier;
  j["sign"] = c.sign;
  j["ec_point"] = to_json(c.ec_point);
  j["holm_point"] = to_json(c.holm_point);
  j["A_x"] = to_string(c.A_x);
  j["A_y"] = to_string(c.A_y);
  j["N_x"] = to_string(c.N_x);
  j["N_y"] = to_string(c.N_y);
  j["N_x_primes"] = strings(c.N_x_primes);
  j["N_y_primes"] = strings(c.N_y_primes);
  j["triangle_x"] = to_json(c.triangle_x);
  j["triangle_y"] = to_json(c.triangle_y);
  j["filter"] = to_json(c.filter);
  return j;
}

std::string certificate_line(const PairCertificate& c) { return to_json(c).dump(); }

PairCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "certificate is not a JSON object");
  const json& config = field(j, "config");
  PairCertificate c;
  c.config = make_config(integer(config, "k"), integer(config, "l"),
                         make_angle(integer(config, "s"), integer(config, "r")));
  c.multiplier = whole(j, "multiplier");
  c.sign = static_cast<int>(whole(j, "sign"));
  c.ec_point = ec_from(field(j, "ec_point"));
  c.holm_point = holm_from(field(j, "holm_point"));
  c.A_x = rational(j, "A_x");
  c.A_y = rational(j, "A_y");
  c.N_x = integer(j, "N_x");
  c.N_y = integer(j, "N_y");
  c.N_x_primes = integer_list(j, "N_x_primes");
  c.N_y_primes = integer_list(j, "N_y_primes");
  c.triangle_x = triangle_from(field(j, "triangle_x"), c.config.beta());
  c.triangle_y = triangle_from(field(j, "triangle_y"), c.config.beta());
  c.filter = filter_from(field(j, "filter"));
  return c;
}

json curve_info_json(const CurveConfig& cfg) {
  json rows = json::array();
  for (const NinePoint& p : nine_points(cfg)) {
    rows.push_back({{"name", p.name}, {"holm", to_json(p.holm)}, {"ec", to_json(p.ec)}});
  }
  return {{"k", to_string(cfg.k)},
          {"l", to_string(cfg.l)},
          {"s", to_string(cfg.angle.s)},
          {"r", to_string(cfg.angle.r)},
          {"beta", to_string(cfg.beta())},
          {"a", to_string(cfg.a)},
          {"b", to_string(cfg.b)},
          {"discriminant", to_string(discriminant(cfg))},
          {"j_invariant", to_string(j_invariant(cfg))},
          {"nine_points", rows},
          {"p0", to_json(tangent_point_p0(cfg))}};
}

json points_json(const CurveConfig& cfg) {
  auto row = [&cfg](const std::string& name, const HolmPoint& holm, const ECPoint& ec) {
    json r = {{"name", name},
              {"holm", to_json(holm)},
              {"ec", to_json(ec)},
              {"holm_on_curve", holm_contains(cfg, holm)},
              {"ec_on_curve", ec_contains(cfg, ec)},
              {"map_matches", to_jacobian(cfg, holm) == ec}};
    return r;
  };
  json rows = json::array();
  for (const NinePoint& p : nine_points(cfg)) {
    json r = row(p.name, p.holm, p.ec);
    r["corrected"] = p.corrected;
    if (p.corrected) {
      r["printed"] = to_json(p.printed);
      r["printed_on_curve"] = ec_contains(cfg, p.printed);
    }
    rows.push_back(std::move(r));
  }
  const HolmPoint p0 = tangent_point_p0(cfg);
  json r0 = row("P0", p0, to_jacobian(cfg, p0));
  r0["corrected"] = false;
  rows.push_back(std::move(r0));
  return {{"k", to_string(cfg.k)},
          {"l", to_string(cfg.l)},
          {"s", to_string(cfg.angle.s)},
          {"r", to_string(cfg.angle.r)},
          {"points", rows}};
}

}  // namespace thetapairs
