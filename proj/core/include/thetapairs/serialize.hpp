#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "thetapairs/curve.hpp"
#include "thetapairs/generator.hpp"

namespace thetapairs {

// JSON shapes shared by the CLI and the tests. Rationals are "num/den"
// strings in lowest terms, integers "n", valuations an int or "inf".

nlohmann::ordered_json to_json(const HolmPoint& p);
nlohmann::ordered_json to_json(const ECPoint& q);  // "infinity" or {"X","Y"}
nlohmann::ordered_json to_json(const FilterReport& f);
nlohmann::ordered_json to_json(const ThetaTriangle& t);
nlohmann::ordered_json to_json(const PairCertificate& c);

// {k, l, s, r, beta, a, b, discriminant, j_invariant, nine_points, p0}.
nlohmann::ordered_json curve_info_json(const CurveConfig& cfg);
// Nine-point table plus P0, each row with on-curve checks and the
// correction flag for the tabulated image.
nlohmann::ordered_json points_json(const CurveConfig& cfg);

// Parses one certificate. Throws ParseError on missing or malformed fields;
// the config is rebuilt with make_config, so invalid configs surface as the
// corresponding config error.
PairCertificate certificate_from_json(const nlohmann::ordered_json& j);

// Single-line JSON text.
std::string certificate_line(const PairCertificate& c);

}  // namespace thetapairs
