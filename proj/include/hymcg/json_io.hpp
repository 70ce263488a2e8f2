#pragma once

#include <json.hpp>

#include "hymcg/hyp_dictionary.hpp"
#include "hymcg/strata.hpp"
#include "hymcg/surface.hpp"
#include "hymcg/symplectic.hpp"
#include "hymcg/words.hpp"

namespace hymcg {

// Integers that fit int64 are emitted as JSON numbers, larger ones as decimal
// strings; readers accept both. Keeps serialization exact for any magnitude.
nlohmann::json bigintToJson(const BigInt& v);
BigInt bigintFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Surface& s);
Surface surfaceFromJson(const nlohmann::json& j);

nlohmann::json toJson(const HyperellipticSurface& h);
HyperellipticSurface hyperellipticFromJson(const nlohmann::json& j);

nlohmann::json toJson(const QuotientProfile& q);
QuotientProfile quotientProfileFromJson(const nlohmann::json& j);

nlohmann::json toJson(const TwistWord& w);
TwistWord twistWordFromJson(const nlohmann::json& j);

nlohmann::json toJson(const Permutation& p);
Permutation permutationFromJson(const nlohmann::json& j);

nlohmann::json toJson(const SympMatrix& m);
SympMatrix sympMatrixFromJson(const nlohmann::json& j);

nlohmann::json toJson(const LaminarFamily& f);
LaminarFamily laminarFamilyFromJson(const nlohmann::json& j);

nlohmann::json toJson(const StableTree& t);
StableTree stableTreeFromJson(const nlohmann::json& j);

nlohmann::json toJson(const HomologyResult& h);

nlohmann::json toJson(const SymmetricCurveClass& c);
SymmetricCurveClass curveClassFromJson(const nlohmann::json& j, int g);

nlohmann::json toJson(const CutComponent& c);
nlohmann::json toJson(const HypCutProfile& p);
nlohmann::json toJson(const StabilizerProfile& p);

}  // namespace hymcg
