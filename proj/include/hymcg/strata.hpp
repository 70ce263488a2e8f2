#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hymcg/errors.hpp"

namespace hymcg {

/// Vertex filter for curve systems on the n-punctured sphere.
///   Full:     every essential curve.
///   Bounding: only curves cutting off a 2-punctured disc (side size 2 or n-2).
enum class Variant { Full, Bounding };

/// Which relabeling group orbits are taken under: the pure group fixes the
/// punctures pointwise, the full group permutes them.
enum class OrbitGroup { Pure, Full };

Variant parseVariant(std::string_view s);
OrbitGroup parseOrbitGroup(std::string_view s);

/// Orbit of a multicurve on the n-punctured sphere, recorded as a laminar
/// family: each curve is stored as the side of the puncture partition not
/// containing puncture 1, so members are subsets of {2,...,n} of size between
/// 2 and n-2, pairwise nested or disjoint, no duplicates. Members are kept
/// sorted, and the family lexicographically ordered.
class LaminarFamily {
public:
  LaminarFamily(int n, std::vector<std::vector<int>> members);

  /// Parses the literal form, a JSON array of arrays: `[[2,3],[2,3,4,5]]`.
  /// Sides containing puncture 1 are normalized to their complement.
  static LaminarFamily parse(int n, std::string_view literal);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  std::string str() const;

  friend bool operator==(const LaminarFamily&, const LaminarFamily&) = default;

private:
  int n_;
  std::vector<std::vector<int>> members_;
};

/// Number of single-curve orbits under the chosen group and vertex filter.
int countVertexOrbits(int n, Variant variant, OrbitGroup group);

/// All orbit simplices of the given dimension (families of size dim+1).
/// For the full group, canonical representatives under puncture relabeling
/// (lexicographically minimal serialization); supported there for n <= 8.
std::vector<LaminarFamily> enumerateSimplices(int n, int dim, Variant variant,
                                              OrbitGroup group);

/// Largest family size under the variant filter, minus one. Exact
/// branch-and-bound search.
int complexDimension(int n, Variant variant);

struct HomologyResult {
  std::vector<std::uint64_t> fVector;   // simplices per dimension
  std::vector<std::uint64_t> betti;     // rational Betti numbers
  long long eulerCharacteristic = 0;    // alternating sum of the f-vector
};

/// Rational homology of the orbit complex (pure group): integer boundary
/// matrices, ranks by Smith normal form. maxDim < 0 means the full complex.
HomologyResult homology(int n, Variant variant, int maxDim = -1,
                        std::uint64_t simplexCap = 500'000);

struct TreeVertex {
  std::vector<int> legs;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

/// Dual tree of a sphere curve system: one vertex per complementary piece,
/// one edge per curve, legs labeled by punctures. Stability: every vertex
/// has legs + incident edges >= 3.
struct StableTree {
  int n = 0;
  std::vector<TreeVertex> vertices;
  std::vector<std::pair<int, int>> edges;      // (outer vertex, inner vertex)
  std::vector<std::vector<int>> edgeMembers;   // normalized member per edge

  int degree(int vertex) const;
  bool stable() const;
  std::string dot() const;

  friend bool operator==(const StableTree&, const StableTree&) = default;
};

StableTree familyToTree(const LaminarFamily& f);

/// Inverse of familyToTree: each edge contributes the side of its leg
/// partition not containing leg 1.
LaminarFamily treeToFamily(const StableTree& t);

/// Seeded, platform-independent random family (for property checks).
LaminarFamily randomLaminarFamily(int n, std::mt19937_64& rng);

}  // namespace hymcg
