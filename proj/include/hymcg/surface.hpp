#pragma once

#include <vector>

#include "hymcg/errors.hpp"

namespace hymcg {

/// Topological type of a compact connected oriented surface: genus, number of
/// punctures and number of boundary circles. Pure value type.
class Surface {
public:
  Surface(int genus, int punctures, int boundary);

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int boundary() const { return boundary_; }

  int eulerCharacteristic() const {
    return 2 - 2 * genus_ - punctures_ - boundary_;
  }
  bool hyperbolic() const { return eulerCharacteristic() < 0; }

  /// Closed surface of the same genus (punctures filled, boundary capped).
  Surface filled() const { return Surface(genus_, 0, 0); }
  /// Boundary circles turned into punctures.
  Surface interior() const { return Surface(genus_, punctures_ + boundary_, 0); }

  friend bool operator==(const Surface&, const Surface&) = default;

private:
  int genus_;
  int punctures_;
  int boundary_;
};

/// A surface carrying an order-2 symmetry with genus-0 quotient. Tracks the
/// sizes of the three parts of the fixed locus: isolated fixed points,
/// fixed punctures and setwise-fixed boundary circles. Their total is always
/// 2*genus + 2, and the remaining punctures/boundary come in swapped pairs.
class HyperellipticSurface {
public:
  HyperellipticSurface(const Surface& base, int w_points, int w_punctures,
                       int w_boundary);

  const Surface& base() const { return base_; }
  int wPoints() const { return wPoints_; }
  int wPunctures() const { return wPunctures_; }
  int wBoundary() const { return wBoundary_; }

  friend bool operator==(const HyperellipticSurface&,
                         const HyperellipticSurface&) = default;

private:
  Surface base_;
  int wPoints_;
  int wPunctures_;
  int wBoundary_;
};

/// Genus-0 quotient of a hyperelliptic surface together with the size of the
/// branch locus (images of the isolated fixed points).
struct QuotientProfile {
  Surface quotient;
  int branchPoints;

  friend bool operator==(const QuotientProfile&, const QuotientProfile&) = default;
};

/// A disconnected hyperelliptic surface, as produced by cutting along a
/// symmetric multicurve: components fixed by the involution, plus one entry
/// per pair of swapped homeomorphic components.
struct DisconnectedHyperelliptic {
  std::vector<HyperellipticSurface> invariant;
  std::vector<Surface> swappedPairs;
};

Surface makeSurface(int genus, int punctures, int boundary);

HyperellipticSurface makeHyperelliptic(const Surface& s, int w_points,
                                       int w_punctures, int w_boundary);

QuotientProfile quotientSurface(const HyperellipticSurface& h);

}  // namespace hymcg
