#include "hymcg/json_io.hpp"

#include <limits>

namespace hymcg {

using nlohmann::json;

namespace {

int getInt(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + field + "'");
  return j[field].get<int>();
}

}  // namespace

json bigintToJson(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt bigintFromJson(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer or a decimal string");
}

json toJson(const Surface& s) {
  return {{"genus", s.genus()},
          {"punctures", s.punctures()},
          {"boundary", s.boundary()}};
}

Surface surfaceFromJson(const json& j) {
  return Surface(getInt(j, "genus"), getInt(j, "punctures"), getInt(j, "boundary"));
}

json toJson(const HyperellipticSurface& h) {
  json j = toJson(h.base());
  j["wPoints"] = h.wPoints();
  j["wPunctures"] = h.wPunctures();
  j["wBoundary"] = h.wBoundary();
  return j;
}

HyperellipticSurface hyperellipticFromJson(const json& j) {
  return HyperellipticSurface(surfaceFromJson(j), getInt(j, "wPoints"),
                              getInt(j, "wPunctures"), getInt(j, "wBoundary"));
}

json toJson(const QuotientProfile& q) {
  json j = toJson(q.quotient);
  j["branchPoints"] = q.branchPoints;
  return j;
}

QuotientProfile quotientProfileFromJson(const json& j) {
  return QuotientProfile{surfaceFromJson(j), getInt(j, "branchPoints")};
}

json toJson(const TwistWord& w) {
  return {{"genus", w.genus()}, {"word", w.str()}};
}

TwistWord twistWordFromJson(const json& j) {
  if (!j.contains("word") || !j["word"].is_string())
    throw ParseError("missing word literal");
  return TwistWord::parse(getInt(j, "genus"), j["word"].get<std::string>());
}

json toJson(const Permutation& p) {
  json images = json::array();
  for (int v : p.images()) images.push_back(v + 1);
  return {{"degree", p.degree()}, {"images", images}, {"cycles", p.cycles()}};
}

Permutation permutationFromJson(const json& j) {
  const int degree = getInt(j, "degree");
  if (!j.contains("images") || !j["images"].is_array())
    throw ParseError("missing permutation images");
  std::vector<int> images;
  for (const auto& x : j["images"]) images.push_back(x.get<int>() - 1);
  return Permutation(degree, std::move(images));
}

json toJson(const SympMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(bigintToJson(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  json j = {{"size", m.size()}, {"rows", rows}};
  if (m.modulus()) j["modulus"] = *m.modulus();
  return j;
}

SympMatrix sympMatrixFromJson(const json& j) {
  const int size = getInt(j, "size");
  std::optional<std::int64_t> modulus;
  if (j.contains("modulus")) modulus = j["modulus"].get<std::int64_t>();
  SympMatrix m(size, modulus);
  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != size)
    throw ParseError("matrix rows have wrong shape");
  for (int r = 0; r < size; ++r) {
    if (static_cast<int>(rows[r].size()) != size)
      throw ParseError("matrix rows have wrong shape");
    for (int c = 0; c < size; ++c) m.set(r, c, bigintFromJson(rows[r][c]));
  }
  return m;
}

json toJson(const LaminarFamily& f) {
  return {{"n", f.n()}, {"members", f.members()}};
}

LaminarFamily laminarFamilyFromJson(const json& j) {
  const int n = getInt(j, "n");
  std::vector<std::vector<int>> members;
  for (const auto& mem : j.at("members"))
    members.push_back(mem.get<std::vector<int>>());
  return LaminarFamily(n, std::move(members));
}

json toJson(const StableTree& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices) vertices.push_back({{"legs", v.legs}});
  json edges = json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  return {{"n", t.n},
          {"vertices", vertices},
          {"edges", edges},
          {"edgeMembers", t.edgeMembers}};
}

StableTree stableTreeFromJson(const json& j) {
  StableTree t;
  t.n = getInt(j, "n");
  for (const auto& v : j.at("vertices"))
    t.vertices.push_back({v.at("legs").get<std::vector<int>>()});
  for (const auto& e : j.at("edges"))
    t.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("edgeMembers"))
    for (const auto& m : j["edgeMembers"])
      t.edgeMembers.push_back(m.get<std::vector<int>>());
  return t;
}

json toJson(const HomologyResult& h) {
  return {{"fVector", h.fVector},
          {"betti", h.betti},
          {"eulerCharacteristic", h.eulerCharacteristic}};
}

json toJson(const SymmetricCurveClass& c) {
  json j = {{"kind", curveKindName(c.kind)}, {"subset", c.subset}};
  if (c.kind != CurveKind::NonseparatingInvariant)
    j["genera"] = {c.genusLeft, c.genusRight};
  return j;
}

SymmetricCurveClass curveClassFromJson(const json& j, int g) {
  return classifyCurve(j.at("subset").get<std::vector<int>>(), g);
}

json toJson(const CutComponent& c) {
  json j = {{"genus", c.genus},
            {"boundary", c.boundary},
            {"branch", c.branch},
            {"action", c.action == ComponentAction::Invariant ? "invariant"
                                                              : "swapped"}};
  if (c.action == ComponentAction::Swapped) j["partner"] = c.partner;
  return j;
}

json toJson(const HypCutProfile& p) {
  json classes = json::array();
  for (const auto& c : p.classes) classes.push_back(toJson(c));
  json components = json::array();
  for (const auto& c : p.components) components.push_back(toJson(c));
  return {{"classes", classes},
          {"components", components},
          {"upstairsSimplexSize", p.upstairsSimplexSize}};
}

json toJson(const StabilizerProfile& p) {
  json twists = json::array();
  for (const auto& t : p.twists) {
    twists.push_back({{"kind", curveKindName(t.curveClass.kind)},
                      {"subset", t.curveClass.subset},
                      {"lattice", t.lattice == TwistLattice::Z ? "Z" : "2Z"}});
  }
  json factors = json::array();
  for (const auto& c : p.cutFactors) factors.push_back(toJson(c));
  return {{"twists", twists},
          {"cutFactors", factors},
          {"symmetryPart", bigintToJson(p.symmetryPart)}};
}

}  // namespace hymcg
