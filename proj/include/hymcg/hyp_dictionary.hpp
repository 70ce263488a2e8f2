#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hymcg/bigint.hpp"
#include "hymcg/strata.hpp"
#include "hymcg/surface.hpp"

namespace hymcg {

/// How a sphere-side curve lifts to the genus-g double cover branched over
/// 2g+2 points:
///   - a 2-point side lifts to a single invariant nonseparating curve,
///   - an odd side lifts to a single invariant separating curve,
///   - an even side of size 4..2g-2 lifts to two disjoint curves swapped by
///     the involution.
enum class CurveKind { NonseparatingInvariant, SeparatingInvariant, SwappedPair };

std::string curveKindName(CurveKind k);

struct SymmetricCurveClass {
  CurveKind kind;
  std::vector<int> subset;  // the recorded sphere side
  // For SeparatingInvariant: genera of the two sides (sum = g).
  // For SwappedPair: genera of the two complementary pieces (sum = g-1).
  int genusLeft = -1;
  int genusRight = -1;

  friend bool operator==(const SymmetricCurveClass&,
                         const SymmetricCurveClass&) = default;

  std::string str() const;
};

SymmetricCurveClass classifyCurve(const std::vector<int>& subset, int g);

struct LiftResult {
  std::vector<SymmetricCurveClass> classes;
  /// Number of distinct isotopy classes upstairs: invariant members count
  /// once, swapped pairs twice.
  int upstairsSimplexSize = 0;
};

LiftResult liftMulticurve(const LaminarFamily& f, int g);

enum class ComponentAction { Invariant, Swapped };

struct CutComponent {
  int genus = 0;
  int boundary = 0;          // boundary circles after cutting
  int branch = 0;            // branch points carried
  ComponentAction action = ComponentAction::Invariant;
  int partner = -1;          // index of the swapped partner, -1 if invariant
  int fixedBoundary = 0;     // boundary circles fixed setwise by the involution

  friend bool operator==(const CutComponent&, const CutComponent&) = default;
};

/// Decomposition of the covering surface cut along the symmetric multicurve
/// over a laminar family. Swapped components appear as adjacent pairs with
/// identical (genus, boundary) data. With merging on (the default), the
/// annulus piece between the two isotopic lifts of each 2-point-side curve is
/// absorbed into the curve record instead of being listed.
struct HypCutProfile {
  std::vector<SymmetricCurveClass> classes;
  std::vector<CutComponent> components;
  int upstairsSimplexSize = 0;
};

HypCutProfile cutProfile(const LaminarFamily& f, int g, bool mergeAnnuli = true);

enum class StabilizerFlavor { Full, PureOriented };

StabilizerFlavor parseStabilizerFlavor(std::string_view s);

enum class TwistLattice { Z, TwoZ };

struct TwistGenerator {
  SymmetricCurveClass curveClass;
  /// Allowed exponents of the twist about this class (for a swapped pair,
  /// of the bitwist about both lifts; the involution forces equal exponents).
  TwistLattice lattice;
};

/// Structural profile of the multicurve stabilizer: twist lattices per curve
/// class, the cut factors, and the order of the ambient symmetric group on
/// the oriented lifted curves (the symmetry part acts inside it).
struct StabilizerProfile {
  std::vector<TwistGenerator> twists;
  std::vector<CutComponent> cutFactors;
  BigInt symmetryPart;  // (2 * upstairsSimplexSize)!
};

StabilizerProfile stabilizerProfile(const LaminarFamily& f, int g,
                                    StabilizerFlavor flavor);

/// Validated surface types of the cut pieces: invariant components as
/// hyperelliptic surfaces (their fixed-locus constraint is re-checked),
/// swapped pairs as plain surfaces, one entry per pair.
DisconnectedHyperelliptic toDisconnectedSurface(const LaminarFamily& f, int g);

}  // namespace hymcg
