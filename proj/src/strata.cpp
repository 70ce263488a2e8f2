#include "hymcg/strata.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hymcg/rand_util.hpp"
#include "hymcg/snf.hpp"

namespace hymcg {

namespace {

using Mask = std::uint32_t;  // bit p-1 <=> puncture p

int popcount(Mask m) { return std::popcount(m); }

Mask fullMask(int n) { return (Mask{1} << n) - 1; }

std::vector<int> maskToList(Mask m) {
  std::vector<int> out;
  for (int p = 1; m; ++p, m >>= 1)
    if (m & 1) out.push_back(p);
  return out;
}

Mask listToMask(const std::vector<int>& v, int n) {
  Mask m = 0;
  for (int p : v) {
    if (p < 1 || p > n) throw ParseError("puncture label out of range 1..n");
    if (m & (Mask{1} << (p - 1))) throw ParseError("duplicate puncture label");
    m |= Mask{1} << (p - 1);
  }
  return m;
}

// Record the side not containing puncture 1.
Mask normalizeSide(Mask m, int n) {
  return (m & 1) ? (fullMask(n) & ~m) : m;
}

bool sideOk(Mask m, int n) {
  const int s = popcount(m);
  return s >= 2 && s <= n - 2;
}

bool laminarPair(Mask a, Mask b) {
  const Mask c = a & b;
  return c == 0 || c == a || c == b;
}

bool variantOk(Mask m, int n, Variant v) {
  if (v == Variant::Full) return true;
  const int s = popcount(m);
  return s == 2 || s == n - 2;
}

// Candidate sides in the canonical order (lex order of the element lists).
std::vector<Mask> vertexCandidates(int n, Variant variant) {
  if (n < 4) throw NoEssentialCurves("no essential curves for n < 4");
  if (n > 30) throw ComplexTooLarge("n too large");
  std::vector<Mask> out;
  for (Mask m = 0; m <= fullMask(n); ++m) {
    if (m & 1) continue;
    if (!sideOk(m, n)) continue;
    if (!variantOk(m, n, variant)) continue;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return maskToList(a) < maskToList(b);
  });
  return out;
}

std::vector<std::vector<int>> masksToLists(const std::vector<Mask>& ms) {
  std::vector<std::vector<int>> out;
  out.reserve(ms.size());
  for (Mask m : ms) out.push_back(maskToList(m));
  return out;
}

// Canonical representative under puncture relabeling: lexicographically
// minimal serialization over all n! permutations.
std::vector<std::vector<int>> canonicalizeFull(const std::vector<Mask>& members,
                                               int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> best;
  bool have = false;
  do {
    std::vector<std::vector<int>> relabeled;
    relabeled.reserve(members.size());
    for (Mask m : members) {
      Mask im = 0;
      for (int p = 1; p <= n; ++p)
        if (m & (Mask{1} << (p - 1))) im |= Mask{1} << (perm[p - 1] - 1);
      relabeled.push_back(maskToList(normalizeSide(im, n)));
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (!have || relabeled < best) {
      best = std::move(relabeled);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void enumerateRec(const std::vector<Mask>& cand, int from, int want,
                  std::vector<Mask>& cur, std::vector<std::vector<Mask>>& out) {
  if (want == 0) {
    out.push_back(cur);
    return;
  }
  const int left = static_cast<int>(cand.size()) - from;
  if (left < want) return;
  for (int i = from; i < static_cast<int>(cand.size()); ++i) {
    bool ok = true;
    for (Mask m : cur)
      if (!laminarPair(m, cand[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(cand[i]);
    enumerateRec(cand, i + 1, want - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Mask>> enumerateFamilies(int n, int count, Variant v) {
  const auto cand = vertexCandidates(n, v);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  enumerateRec(cand, 0, count, cur, out);
  return out;
}

}  // namespace

Variant parseVariant(std::string_view s) {
  if (s == "full") return Variant::Full;
  if (s == "b" || s == "bounding") return Variant::Bounding;
  throw ParseError("unknown variant '" + std::string(s) + "' (want full|b)");
}

OrbitGroup parseOrbitGroup(std::string_view s) {
  if (s == "pure") return OrbitGroup::Pure;
  if (s == "full") return OrbitGroup::Full;
  throw ParseError("unknown group '" + std::string(s) + "' (want pure|full)");
}

LaminarFamily::LaminarFamily(int n, std::vector<std::vector<int>> members)
    : n_(n) {
  if (n < 4) throw NoEssentialCurves("laminar families need n >= 4");
  if (n > 30) throw ComplexTooLarge("n too large");
  std::vector<Mask> masks;
  masks.reserve(members.size());
  for (const auto& mem : members) {
    Mask m = normalizeSide(listToMask(mem, n), n);
    if (!sideOk(m, n))
      throw InvalidCurve("member of size " + std::to_string(popcount(m)) +
                         " is not an essential curve side for n = " +
                         std::to_string(n));
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw InvalidCurve("duplicate member");
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!laminarPair(masks[i], masks[j]))
        throw InvalidCurve("members are neither nested nor disjoint");
  members_ = masksToLists(masks);
  std::sort(members_.begin(), members_.end());
}

LaminarFamily LaminarFamily::parse(int n, std::string_view literal) {
  nlohmann::json j = nlohmann::json::parse(literal, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw ParseError("family literal must be a JSON array of arrays");
  std::vector<std::vector<int>> members;
  for (const auto& item : j) {
    if (!item.is_array()) throw ParseError("family member must be an array");
    std::vector<int> mem;
    for (const auto& x : item) {
      if (!x.is_number_integer()) throw ParseError("puncture label must be an integer");
      mem.push_back(x.get<int>());
    }
    members.push_back(std::move(mem));
  }
  return LaminarFamily(n, std::move(members));
}

std::string LaminarFamily::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t k = 0; k < members_[i].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(members_[i][k]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

int countVertexOrbits(int n, Variant variant, OrbitGroup group) {
  return static_cast<int>(enumerateSimplices(n, 0, variant, group).size());
}

std::vector<LaminarFamily> enumerateSimplices(int n, int dim, Variant variant,
                                              OrbitGroup group) {
  if (dim < 0) throw RangeError("dimension must be >= 0");
  auto families = enumerateFamilies(n, dim + 1, variant);
  std::vector<LaminarFamily> out;
  if (group == OrbitGroup::Pure) {
    out.reserve(families.size());
    for (auto& f : families) out.emplace_back(n, masksToLists(f));
    return out;
  }
  if (n > 8)
    throw RangeError("full-group canonical forms supported for n <= 8");
  std::set<std::vector<std::vector<int>>> reps;
  for (const auto& f : families) reps.insert(canonicalizeFull(f, n));
  for (const auto& r : reps) out.emplace_back(n, r);
  return out;
}

int complexDimension(int n, Variant variant) {
  const auto cand = vertexCandidates(n, variant);
  const int total = static_cast<int>(cand.size());
  int best = 0;

  // Branch and bound over candidate indices.
  std::vector<Mask> cur;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(cur.size()));
    if (static_cast<int>(cur.size()) + (total - from) <= best) return;
    for (int i = from; i < total; ++i) {
      bool ok = true;
      for (Mask m : cur)
        if (!laminarPair(m, cand[i])) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(cand[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best - 1;
}

HomologyResult homology(int n, Variant variant, int maxDim,
                        std::uint64_t simplexCap) {
  if (n > 8) throw ComplexTooLarge("homology supported for n <= 8");
  const int dim = complexDimension(n, variant);

  // All simplices, grouped per dimension, each family sorted by vertex order.
  std::vector<std::vector<std::vector<Mask>>> simplices(dim + 1);
  std::uint64_t total = 0;
  for (int d = 0; d <= dim; ++d) {
    simplices[d] = enumerateFamilies(n, d + 1, variant);
    for (auto& f : simplices[d]) std::sort(f.begin(), f.end());
    std::sort(simplices[d].begin(), simplices[d].end());
    total += simplices[d].size();
    if (total > simplexCap)
      throw ComplexTooLarge("complex exceeds the simplex cap of " +
                            std::to_string(simplexCap));
  }

  std::vector<std::map<std::vector<Mask>, int>> index(dim + 1);
  for (int d = 0; d <= dim; ++d)
    for (std::size_t i = 0; i < simplices[d].size(); ++i)
      index[d][simplices[d][i]] = static_cast<int>(i);

  // rank of the boundary map from dimension d to d-1
  std::vector<int> ranks(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) {
    SparseIntMatrix bd(static_cast<int>(simplices[d].size()),
                       static_cast<int>(simplices[d - 1].size()));
    for (std::size_t r = 0; r < simplices[d].size(); ++r) {
      const auto& f = simplices[d][r];
      int sign = 1;
      for (std::size_t k = 0; k < f.size(); ++k) {
        std::vector<Mask> face;
        face.reserve(f.size() - 1);
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != k) face.push_back(f[t]);
        bd.set(static_cast<int>(r), index[d - 1].at(face), sign);
        sign = -sign;
      }
    }
    ranks[d] = smithNormalForm(std::move(bd)).rank;
  }

  HomologyResult out;
  const int report = maxDim < 0 ? dim : std::min(maxDim, dim);
  for (int d = 0; d <= dim; ++d) {
    out.fVector.push_back(simplices[d].size());
    out.eulerCharacteristic += (d % 2 == 0 ? 1LL : -1LL) *
                               static_cast<long long>(simplices[d].size());
  }
  for (int d = 0; d <= report; ++d) {
    const auto b = static_cast<std::uint64_t>(
        static_cast<long long>(simplices[d].size()) - ranks[d] - ranks[d + 1]);
    out.betti.push_back(b);
  }
  return out;
}

int StableTree::degree(int vertex) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == vertex) + (b == vertex);
  return d;
}

bool StableTree::stable() const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (static_cast<int>(vertices[v].legs.size()) + degree(static_cast<int>(v)) < 3)
      return false;
  return true;
}

std::string StableTree::dot() const {
  std::ostringstream out;
  out << "graph stable_tree {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out << "  v" << v << " [label=\"{";
    for (std::size_t k = 0; k < vertices[v].legs.size(); ++k) {
      if (k) out << ',';
      out << vertices[v].legs[k];
    }
    out << "}\"];\n";
  }
  for (const auto& [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

StableTree familyToTree(const LaminarFamily& f) {
  const int n = f.n();
  std::vector<Mask> masks;
  masks.reserve(f.size());
  for (const auto& mem : f.members()) masks.push_back(listToMask(mem, n));

  // Parent of a member: the smallest member strictly containing it.
  const int k = static_cast<int>(masks.size());
  std::vector<int> parent(k, -1);  // -1 = root region
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if ((masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
        if (parent[i] == -1 || (masks[j] & masks[parent[i]]) == masks[j])
          parent[i] = j;
      }
    }
  }

  StableTree tree;
  tree.n = n;
  tree.vertices.resize(k + 1);
  // Vertex 0 is the root region (contains puncture 1), vertex i+1 the region
  // just inside member i.
  std::vector<Mask> innerLegs(k + 1, 0);
  innerLegs[0] = fullMask(n);
  for (int i = 0; i < k; ++i) innerLegs[i + 1] = masks[i];
  for (int i = 0; i < k; ++i) innerLegs[parent[i] + 1] &= ~masks[i];
  for (int v = 0; v <= k; ++v) tree.vertices[v].legs = maskToList(innerLegs[v]);
  for (int i = 0; i < k; ++i) {
    tree.edges.emplace_back(parent[i] + 1, i + 1);
    tree.edgeMembers.push_back(maskToList(masks[i]));
  }
  return tree;
}

LaminarFamily treeToFamily(const StableTree& t) {
  const int nv = static_cast<int>(t.vertices.size());
  // Adjacency for side computation.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, edge)
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    adj[t.edges[e].first].emplace_back(t.edges[e].second, static_cast<int>(e));
    adj[t.edges[e].second].emplace_back(t.edges[e].first, static_cast<int>(e));
  }
  std::vector<std::vector<int>> members;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    // Legs on the side of edge e rooted at its second endpoint.
    std::vector<int> stack{t.edges[e].second};
    std::vector<bool> seen(nv, false);
    seen[t.edges[e].second] = true;
    std::vector<int> side;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      side.insert(side.end(), t.vertices[v].legs.begin(),
                  t.vertices[v].legs.end());
      for (const auto& [w, ei] : adj[v]) {
        if (ei == static_cast<int>(e) || seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    std::sort(side.begin(), side.end());
    members.push_back(std::move(side));
  }
  return LaminarFamily(t.n, std::move(members));
}

LaminarFamily randomLaminarFamily(int n, std::mt19937_64& rng) {
  auto cand = vertexCandidates(n, Variant::Full);
  // Fisher-Yates with the reproducible uniform helper.
  for (std::size_t i = cand.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniformBelow(rng, i));
    std::swap(cand[i - 1], cand[j]);
  }
  const auto target = uniformBelow(rng, static_cast<std::uint64_t>(n - 2)) + 1;
  std::vector<Mask> picked;
  for (Mask m : cand) {
    if (picked.size() >= target) break;
    bool ok = true;
    for (Mask p : picked)
      if (!laminarPair(p, m)) {
        ok = false;
        break;
      }
    if (ok) picked.push_back(m);
  }
  return LaminarFamily(n, masksToLists(picked));
}

}  // namespace hymcg
