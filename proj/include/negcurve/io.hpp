#pragma once

// JSON forms of the engine results. Indices are 1-based, rationals are
// "p/q" strings and classes use the "d;k1,...,ks" text form.

#include "negcurve/classify.hpp"
#include "negcurve/configs.hpp"
#include "negcurve/cremona.hpp"
#include "negcurve/polytope.hpp"

#include <json.hpp>

namespace negcurve {

using Json = nlohmann::ordered_json;

Json to_json(const Configuration& cfg);
Json to_json(const VertexCert& v);
Json lemma_json(int k, const ConstraintSystem& sys, const SumSquaresMax& m);
Json to_json(const ProbeReport& p);
Json to_json(const GiantCover& g);
Json to_json(const ClassificationReport& r);
Json to_json(const BncReport& b, const Configuration& cfg);
Json to_json(const OrbitGraph& g);
Json to_json(const NegativeClass& n);

}  // namespace negcurve
