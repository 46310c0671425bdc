#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grig/evidence.hpp"
#include "grig/homology.hpp"
#include "grig/pants.hpp"
#include "grig/portrait.hpp"
#include "grig/schreier.hpp"

namespace grig {

// JSON objects use nlohmann::json's sorted keys, so output is
// byte-deterministic. Vertex lists are lexicographic.

nlohmann::json to_json(const Portrait& p);                  // {"depth","swaps"}
nlohmann::json to_json(const SchreierGraph& g);             // {"level","edges"}
nlohmann::json to_json(const LiftedElement& h);             // {"depth","portrait","twists"}
nlohmann::json twists_json(const std::map<BinaryWord, std::int64_t>& twists);
nlohmann::json to_json(const ShoePermutation& p);           // {"N","moved"}
nlohmann::json to_json(const OrderHistogram& h);
nlohmann::json to_json(const GrowthTable& t);               // array of ball sizes
nlohmann::json to_json(const FreenessCertificate& c);
nlohmann::json to_json(const KernelReport& r);

/// {"histogram": ..., "ball": [...], "certificates": [...]}
nlohmann::json evidence_report(const OrderHistogram& histogram, const GrowthTable& ball,
                               const std::vector<FreenessCertificate>& certificates);

/// Binary tree down to the portrait depth; edges below a swap vertex are
/// drawn doubled.
std::string to_dot(const Portrait& p);
/// One undirected edge per generator orbit, labelled a, b, c or d.
std::string to_dot(const SchreierGraph& g);

} // namespace grig
