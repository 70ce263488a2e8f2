#include "hymcg/hyp_dictionary.hpp"

#include <algorithm>
#include <numeric>

namespace hymcg {

namespace {

void checkGenus(int g) {
  if (g < 1) throw InvalidGenus("dictionary needs genus >= 1");
}

}  // namespace

std::string curveKindName(CurveKind k) {
  switch (k) {
    case CurveKind::NonseparatingInvariant: return "nonseparatingInvariant";
    case CurveKind::SeparatingInvariant: return "separatingInvariant";
    case CurveKind::SwappedPair: return "swappedPair";
  }
  return "?";
}

std::string SymmetricCurveClass::str() const {
  std::string out = curveKindName(kind);
  if (kind != CurveKind::NonseparatingInvariant)
    out += "(" + std::to_string(genusLeft) + "," + std::to_string(genusRight) + ")";
  return out;
}

SymmetricCurveClass classifyCurve(const std::vector<int>& subset, int g) {
  checkGenus(g);
  const int n = 2 * g + 2;
  std::vector<int> a = subset;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end())
    throw InvalidCurve("duplicate points in curve side");
  for (int p : a)
    if (p < 2 || p > n)
      throw InvalidCurve("side must be a subset of {2,...," + std::to_string(n) +
                         "}");
  const int s = static_cast<int>(a.size());
  if (s < 2 || s > 2 * g)
    throw InvalidCurve("side size must lie in 2..2g");

  SymmetricCurveClass c;
  c.subset = std::move(a);
  if (s == 2 || s == 2 * g) {
    // One side is a 2-point disc: single nonseparating lift (the two
    // preimages of the circle are isotopic).
    c.kind = CurveKind::NonseparatingInvariant;
  } else if (s % 2 == 1) {
    // Odd branch parity: connected preimage, separates the cover.
    c.kind = CurveKind::SeparatingInvariant;
    c.genusLeft = (s - 1) / 2;
    c.genusRight = g - c.genusLeft;
  } else {
    // Even side of size 4..2g-2: two disjoint lifts swapped by the
    // involution.
    c.kind = CurveKind::SwappedPair;
    c.genusLeft = (s - 2) / 2;
    c.genusRight = (2 * g - s) / 2;
  }
  return c;
}

LiftResult liftMulticurve(const LaminarFamily& f, int g) {
  checkGenus(g);
  if (f.n() != 2 * g + 2)
    throw InvalidCurve("family lives on " + std::to_string(f.n()) +
                       " punctures, expected " + std::to_string(2 * g + 2));
  LiftResult out;
  for (const auto& mem : f.members()) {
    auto c = classifyCurve(mem, g);
    out.upstairsSimplexSize += c.kind == CurveKind::SwappedPair ? 2 : 1;
    out.classes.push_back(std::move(c));
  }
  return out;
}

HypCutProfile cutProfile(const LaminarFamily& f, int g, bool mergeAnnuli) {
  checkGenus(g);
  const int n = 2 * g + 2;
  auto lift = liftMulticurve(f, g);
  const StableTree tree = familyToTree(f);

  HypCutProfile out;
  out.classes = std::move(lift.classes);
  out.upstairsSimplexSize = lift.upstairsSimplexSize;

  // Which tree vertices are the pair-side discs of 2-point curves: those
  // pieces lift to the annulus between the two isotopic preimages and get
  // absorbed into the curve record when merging.
  std::vector<bool> drop(tree.vertices.size(), false);
  if (mergeAnnuli) {
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
      if (out.classes[i].kind != CurveKind::NonseparatingInvariant) continue;
      const int s = static_cast<int>(out.classes[i].subset.size());
      // Member i's own region is vertex i+1; the root region is vertex 0.
      drop[s == 2 ? i + 1 : 0] = true;
    }
  }

  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    const int branch = static_cast<int>(tree.vertices[v].legs.size());
    int deg = 0, odd_edges = 0;
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      if (tree.edges[e].first != static_cast<int>(v) &&
          tree.edges[e].second != static_cast<int>(v))
        continue;
      ++deg;
      if (tree.edgeMembers[e].size() % 2 == 1) ++odd_edges;
    }

    const int chi_down = 2 - deg;  // sphere piece with deg boundary circles
    const int chi_up = 2 * chi_down - branch;
    const bool connected = branch > 0 || odd_edges > 0;

    if (drop[v]) continue;

    if (connected) {
      const int boundary_up = odd_edges + 2 * (deg - odd_edges);
      const int genus = (2 - boundary_up - chi_up) / 2;
      out.components.push_back({genus, boundary_up, branch,
                                ComponentAction::Invariant, -1, odd_edges});
    } else {
      // Trivial monodromy on the piece: two swapped homeomorphic copies.
      const int chi_each = chi_up / 2;
      const int genus = (2 - deg - chi_each) / 2;
      const int base = static_cast<int>(out.components.size());
      out.components.push_back(
          {genus, deg, 0, ComponentAction::Swapped, base + 1, 0});
      out.components.push_back(
          {genus, deg, 0, ComponentAction::Swapped, base, 0});
    }
  }

  // Cutting never changes the total Euler characteristic; annuli dropped by
  // merging contribute zero. Kept as an internal consistency check.
  int chi_total = 0;
  for (const auto& c : out.components)
    chi_total += 2 - 2 * c.genus - c.boundary;
  if (chi_total != 2 - 2 * g)
    throw Error("internal: cut profile Euler characteristic mismatch");

  return out;
}

StabilizerProfile stabilizerProfile(const LaminarFamily& f, int g,
                                    StabilizerFlavor flavor) {
  auto profile = cutProfile(f, g);

  StabilizerProfile out;
  for (const auto& c : profile.classes) {
    TwistLattice lattice = TwistLattice::Z;
    if (flavor == StabilizerFlavor::PureOriented &&
        c.kind == CurveKind::NonseparatingInvariant)
      lattice = TwistLattice::TwoZ;
    // Swapped pairs enter through the bitwist about both lifts, exponent
    // lattice Z in both flavors; separating invariant curves keep Z.
    out.twists.push_back({c, lattice});
  }
  out.cutFactors = std::move(profile.components);
  out.symmetryPart = factorial(2 * profile.upstairsSimplexSize);
  return out;
}

StabilizerFlavor parseStabilizerFlavor(std::string_view s) {
  if (s == "full") return StabilizerFlavor::Full;
  if (s == "pure" || s == "pureOriented") return StabilizerFlavor::PureOriented;
  throw ParseError("unknown stabilizer flavor '" + std::string(s) +
                   "' (want full|pure)");
}

DisconnectedHyperelliptic toDisconnectedSurface(const LaminarFamily& f, int g) {
  const auto profile = cutProfile(f, g);
  DisconnectedHyperelliptic out;
  for (std::size_t i = 0; i < profile.components.size(); ++i) {
    const auto& c = profile.components[i];
    if (c.action == ComponentAction::Invariant) {
      // Re-validates the fixed-locus constraint of each invariant piece.
      out.invariant.push_back(makeHyperelliptic(
          Surface(c.genus, 0, c.boundary), c.branch, 0, c.fixedBoundary));
    } else if (c.partner > static_cast<int>(i)) {
      out.swappedPairs.push_back(Surface(c.genus, 0, c.boundary));
    }
  }
  return out;
}

}  // namespace hymcg
