#pragma once

#include <json.hpp>

#include "decomp/montecarlo.hpp"
#include "decomp/oracle.hpp"
#include "decomp/rational.hpp"
#include "decomp/structure.hpp"
#include "decomp/suen.hpp"
#include "decomp/theta.hpp"

namespace decomp {

// Exact rationals are emitted as {num, den} strings so arbitrary-precision
// values survive the trip through JSON.
nlohmann::json to_json(const Rational& q);

nlohmann::json to_json(const CentralizerProfile& p);
nlohmann::json to_json(const ThetaResult& r);
nlohmann::json to_json(const ThetaBounds& b);
nlohmann::json to_json(const SuenReport& r);
nlohmann::json to_json(const oracle::ExactDistribution& d);

}  // namespace decomp
