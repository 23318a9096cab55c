#pragma once

#include <json.hpp>

#include "superchar/characters.hpp"
#include "superchar/homology.hpp"
#include "superchar/klcore.hpp"
#include "superchar/laurent.hpp"
#include "superchar/partition.hpp"
#include "superchar/reflections.hpp"
#include "superchar/verify.hpp"
#include "superchar/weight.hpp"

namespace superchar {

using Json = nlohmann::json;

// Integers that overflow int64 are written as decimal strings.
Json big_json(const BigInt& x);
BigInt big_from_json(const Json& j);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json theta_json(const ThetaSequence& t);

// {"coords":{"-2":1,"1":3}} keyed by doubled index.
Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);
Json dominant_json(const DominantWeight& d);
// Missing "m" / "Y" fall back to the given defaults.
DominantWeight dominant_from_json(const Json& j, int default_m = 1, const std::vector<int>& default_Y = {});

// {"-1":1}: exponent -> coefficient.
Json laurent_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json trace_json(const std::vector<TraceStep>& steps);
// {"anchor":..., "terms":[{"weight":..., "mult":...}]}, by depth then weight.
Json character_json(const CharSeries& c);
Json kl_json(const KLTable& t);
Json criterion_json(const CriterionResult& r);

}  // namespace superchar
