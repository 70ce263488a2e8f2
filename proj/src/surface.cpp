#include "hymcg/surface.hpp"

#include <string>

namespace hymcg {

Surface::Surface(int genus, int punctures, int boundary)
    : genus_(genus), punctures_(punctures), boundary_(boundary) {
  if (genus < 0 || punctures < 0 || boundary < 0)
    throw InvalidTopologicalType("surface type (" + std::to_string(genus) + "," +
                                 std::to_string(punctures) + "," +
                                 std::to_string(boundary) +
                                 ") has a negative entry");
}

HyperellipticSurface::HyperellipticSurface(const Surface& base, int w_points,
                                           int w_punctures, int w_boundary)
    : base_(base),
      wPoints_(w_points),
      wPunctures_(w_punctures),
      wBoundary_(w_boundary) {
  if (w_points < 0 || w_punctures < 0 || w_boundary < 0)
    throw InvalidTopologicalType("negative fixed-locus count");
  const int expected = 2 * base.genus() + 2;
  if (w_points + w_punctures + w_boundary != expected)
    throw FixedLocusMismatch(
        "fixed locus has " +
        std::to_string(w_points + w_punctures + w_boundary) +
        " pieces, needs exactly " + std::to_string(expected));
  const int free_punctures = base.punctures() - w_punctures;
  const int free_boundary = base.boundary() - w_boundary;
  if (free_punctures < 0 || free_punctures % 2 != 0)
    throw PairingViolation("punctures not fixed by the involution must come in "
                           "swapped pairs (remainder " +
                           std::to_string(free_punctures) + ")");
  if (free_boundary < 0 || free_boundary % 2 != 0)
    throw PairingViolation("boundary circles not fixed by the involution must "
                           "come in swapped pairs (remainder " +
                           std::to_string(free_boundary) + ")");
}

Surface makeSurface(int genus, int punctures, int boundary) {
  return Surface(genus, punctures, boundary);
}

HyperellipticSurface makeHyperelliptic(const Surface& s, int w_points,
                                       int w_punctures, int w_boundary) {
  return HyperellipticSurface(s, w_points, w_punctures, w_boundary);
}

QuotientProfile quotientSurface(const HyperellipticSurface& h) {
  const Surface& s = h.base();
  // Fixed punctures/boundary descend one-to-one, swapped pairs two-to-one.
  const int q_punctures = h.wPunctures() + (s.punctures() - h.wPunctures()) / 2;
  const int q_boundary = h.wBoundary() + (s.boundary() - h.wBoundary()) / 2;
  QuotientProfile q{Surface(0, q_punctures, q_boundary), h.wPoints()};

  // Closed-up double cover is branched over the whole fixed locus: the
  // 2g+2 constraint makes this an identity, kept as an internal check.
  const int total_fixed = h.wPoints() + h.wPunctures() + h.wBoundary();
  const int chi_up = s.filled().eulerCharacteristic();
  const int chi_down = q.quotient.filled().eulerCharacteristic();
  if (chi_up != 2 * chi_down - total_fixed)
    throw Error("internal: branched-cover Euler characteristic mismatch");
  return q;
}

}  // namespace hymcg
