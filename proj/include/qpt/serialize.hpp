#pragma once

#include "qpt/automorphism.hpp"

#include <json.hpp>

#include <vector>

namespace qpt {

using Json = nlohmann::json;

// Numeric payloads travel as strings of exact decimal integers/rationals
// ("-3/2"), so documents round-trip bit-exactly.

Json json_of(const Rat& x);
Json json_of(const Int& x);
Json json_of(const IntVec& v);
Json json_of(const IntMat& m);
Json json_of(const RatMat& m);
Json json_of(const Sublattice& lat);
Json json_of(const LaurentPoly& f);
Json json_of(const TorusAutomorphism& phi);

Rat rat_from_json(const Json& j);
Int int_from_json(const Json& j);
IntVec int_vec_from_json(const Json& j);
IntMat int_mat_from_json(const Json& j);
RatMat rat_mat_from_json(const Json& j);

/// Words are 1-based in documents, 0-based in memory.
Json word_to_json(const std::vector<int>& word);
std::vector<int> word_from_json(const Json& j);

}  // namespace qpt
