#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hymcg/bigint.hpp"
#include "hymcg/errors.hpp"

namespace hymcg {

/// One letter of a twist word: generator index in 1..2g+1 and an integer
/// exponent (arbitrary precision, so high twist powers never overflow).
struct TwistLetter {
  int index;
  BigInt exponent;

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

/// A word in the chain twist generators t_1, ..., t_{2g+1} of a closed
/// genus-g surface. Letters with zero exponent are dropped on construction;
/// adjacent letters are merged only by reduce().
///
/// Composition convention, shared across the whole library: a word acts
/// left to right, i.e. "t1 t2" means apply t1 first, then t2.
class TwistWord {
public:
  explicit TwistWord(int genus, std::vector<TwistLetter> letters = {});

  /// Parses the literal syntax: whitespace-separated tokens `t<i>` or
  /// `t<i>^<e>`, e.g. "t1 t2 t3^2 t2 t1". "e" (or an empty string) is the
  /// empty word.
  static TwistWord parse(int genus, std::string_view literal);

  int genus() const { return genus_; }
  const std::vector<TwistLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Total length counted with exponent multiplicity (sum of |e|).
  BigInt length() const;

  TwistWord concat(const TwistWord& other) const;
  TwistWord inverse() const;

  std::string str() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

private:
  int genus_;
  std::vector<TwistLetter> letters_;
};

/// Freely reduces a word: merges adjacent letters with equal index and drops
/// vanishing exponents, cascading. Idempotent, same group element.
TwistWord reduce(const TwistWord& w);

/// The word t1 t2 ... t_{2g} t_{2g+1}^2 t_{2g} ... t2 t1 realizing the
/// hyperelliptic involution; length 4g+2 counted with multiplicity.
TwistWord involutionWord(int genus);

/// Permutation of {1, ..., degree}. Value type, 1-based interface.
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  Permutation(int degree, std::vector<int> images_zero_based);

  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point - 1] + 1; }

  /// Apply this permutation first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  bool isIdentity() const;
  const std::vector<int>& images() const { return images_; }

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Action of a twist word on the 2g+2 marked points of the quotient sphere:
/// t_i acts as the adjacent transposition (i, i+1), applied left to right
/// with exponent parity.
Permutation rhoW(const TwistWord& w);

/// Order of the permutation group generated by the images of t_1..t_{2g+1},
/// computed by breadth-first closure. Supported for 1 <= g <= 4.
std::uint64_t permGroupOrder(int genus);

}  // namespace hymcg
