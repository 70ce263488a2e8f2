#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hymcg/bigint.hpp"
#include "hymcg/errors.hpp"
#include "hymcg/words.hpp"

namespace hymcg {

/// Square matrix of even size 2g over Z, or over Z/m when a modulus is set,
/// preserving the standard symplectic form. The form is taken in the
/// interleaved basis a1, b1, ..., ag, bg with <a_i, b_i> = 1, i.e. J is block
/// diagonal with 2x2 blocks [[0,1],[-1,0]].
///
/// Matrices act on row vectors, x -> x*M, so the product A*B is
/// "apply A, then B" and matches the left-to-right word convention.
class SympMatrix {
public:
  SympMatrix(int size, std::optional<std::int64_t> modulus = {});

  static SympMatrix identity(int size, std::optional<std::int64_t> modulus = {});

  int size() const { return size_; }
  std::optional<std::int64_t> modulus() const { return modulus_; }

  const BigInt& at(int r, int c) const { return e_[r * size_ + c]; }
  void set(int r, int c, BigInt v);

  SympMatrix operator*(const SympMatrix& rhs) const;
  friend bool operator==(const SympMatrix&, const SympMatrix&) = default;

  /// Symplectic inverse -J M^T J; exact, valid whenever M^T J M = J.
  SympMatrix inverse() const;
  SympMatrix negated() const;
  SympMatrix reducedMod(std::int64_t m) const;

  bool isIdentity() const;
  bool isMinusIdentity() const;
  /// Exact check of M^T J M = J (over Z, or mod m).
  bool isSymplectic() const;

  /// Canonical byte key of the residue tuple; modular matrices only.
  std::string key() const;

private:
  BigInt canon(BigInt v) const;

  int size_;
  std::optional<std::int64_t> modulus_;
  std::vector<BigInt> e_;  // row-major
};

/// <x, y> = x^T J y in the interleaved basis.
BigInt symplecticPairing(const std::vector<BigInt>& x, const std::vector<BigInt>& y);

/// Homology classes of a maximal chain of curves on the closed genus-g
/// surface: v1 = a1, v_{2i} = b_i, v_{2i+1} = a_i + a_{i+1}, v_{2g+1} = a_g.
/// Consecutive classes pair to +-1, distant ones to 0, each is primitive and
/// together they span the full lattice; the constructor asserts all of this.
struct ChainClasses {
  int genus;
  std::vector<std::vector<BigInt>> vectors;  // 2g+1 vectors of length 2g
};

ChainClasses chainClasses(int genus);

/// Transvection x -> x + <x, v> v as a matrix (row-vector action).
SympMatrix transvection(const std::vector<BigInt>& v,
                        std::optional<std::int64_t> modulus = {});

/// e-th power in one step: x -> x + e <x, v> v.
SympMatrix transvectionPower(const std::vector<BigInt>& v, const BigInt& exponent,
                             std::optional<std::int64_t> modulus = {});

/// Word evaluation: ordered product of chain-class transvections raised to
/// the letter exponents. Homomorphism for concatenation.
SympMatrix evaluate(const TwistWord& w, std::optional<std::int64_t> modulus = {});

/// True iff the word acts trivially on homology mod m (m >= 2).
bool levelMembership(const TwistWord& w, std::int64_t m);

/// The 2g+1 chain transvections over Z/m (optionally their squares), in
/// chain order. Convenience generating set for closures.
std::vector<SympMatrix> chainTransvections(int genus,
                                           std::optional<std::int64_t> modulus,
                                           bool squares = false);

/// Exact closure of a finite matrix group given by generators mod m.
/// Breadth-first under multiplication by generators and inverses; order and
/// membership are schedule-independent.
class GroupClosure {
public:
  std::uint64_t order() const { return order_; }
  bool contains(const SympMatrix& m) const;

  int size() const { return size_; }
  std::int64_t modulus() const { return modulus_; }

private:
  friend GroupClosure groupClosure(const std::vector<SympMatrix>&, std::uint64_t);

  int size_ = 0;
  std::int64_t modulus_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::string> keys_;  // sorted
};

GroupClosure groupClosure(const std::vector<SympMatrix>& generators,
                          std::uint64_t cap = 10'000'000);

/// |Sp(2g, Z/p)| = p^{g^2} * prod_{i=1..g} (p^{2i} - 1), p prime.
BigInt spOrder(int genus, std::int64_t p);

/// All braid and commutation relations of the chain transvections, checked
/// exactly over Z (or mod m). Returns true when every relation holds.
bool braidRelationsHold(int genus, std::optional<std::int64_t> modulus = {});

}  // namespace hymcg
