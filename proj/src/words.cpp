#include "hymcg/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace hymcg {

TwistWord::TwistWord(int genus, std::vector<TwistLetter> letters)
    : genus_(genus) {
  if (genus < 1)
    throw InvalidGenus("twist words need genus >= 1, got " +
                       std::to_string(genus));
  const int max_index = 2 * genus + 1;
  letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.index < 1 || l.index > max_index)
      throw ParseError("generator index t" + std::to_string(l.index) +
                       " out of range 1.." + std::to_string(max_index));
    if (l.exponent != 0) letters_.push_back(std::move(l));
  }
}

TwistWord TwistWord::parse(int genus, std::string_view literal) {
  std::vector<TwistLetter> letters;
  std::istringstream in{std::string(literal)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;  // explicit empty word
    if (tok.size() < 2 || tok[0] != 't')
      throw ParseError("bad word token '" + tok + "'");
    const auto caret = tok.find('^');
    const std::string idx_part = tok.substr(1, caret == std::string::npos
                                                   ? std::string::npos
                                                   : caret - 1);
    if (idx_part.empty() ||
        !std::all_of(idx_part.begin(), idx_part.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad generator index in token '" + tok + "'");
    TwistLetter l;
    l.index = std::stoi(idx_part);
    if (caret == std::string::npos) {
      l.exponent = 1;
    } else {
      const std::string exp_part = tok.substr(caret + 1);
      try {
        l.exponent = BigInt(exp_part);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
    }
    letters.push_back(std::move(l));
  }
  return TwistWord(genus, std::move(letters));
}

BigInt TwistWord::length() const {
  BigInt total = 0;
  for (const auto& l : letters_) total += abs(l.exponent);
  return total;
}

TwistWord TwistWord::concat(const TwistWord& other) const {
  if (other.genus_ != genus_)
    throw InvalidGenus("cannot concatenate words of different genus");
  std::vector<TwistLetter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return TwistWord(genus_, std::move(letters));
}

TwistWord TwistWord::inverse() const {
  std::vector<TwistLetter> letters(letters_.rbegin(), letters_.rend());
  for (auto& l : letters) l.exponent = -l.exponent;
  return TwistWord(genus_, std::move(letters));
}

std::string TwistWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 't' + std::to_string(l.index);
    if (l.exponent != 1) out += '^' + l.exponent.str();
  }
  return out;
}

TwistWord reduce(const TwistWord& w) {
  std::vector<TwistLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().index == l.index) {
      stack.back().exponent += l.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TwistWord(w.genus(), std::move(stack));
}

TwistWord involutionWord(int genus) {
  if (genus < 1)
    throw InvalidGenus("involution word needs genus >= 1, got " +
                       std::to_string(genus));
  std::vector<TwistLetter> letters;
  letters.reserve(4 * genus + 1);
  for (int i = 1; i <= 2 * genus; ++i) letters.push_back({i, 1});
  letters.push_back({2 * genus + 1, 2});
  for (int i = 2 * genus; i >= 1; --i) letters.push_back({i, 1});
  return TwistWord(genus, std::move(letters));
}

Permutation::Permutation(int degree) : images_(degree) {
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(int degree, std::vector<int> images)
    : images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != degree)
    throw Error("permutation image table has wrong size");
  std::vector<bool> seen(degree, false);
  for (int v : images_) {
    if (v < 0 || v >= degree || seen[v])
      throw Error("permutation image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree)
    throw Error("transposition point out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree())
    throw Error("cannot compose permutations of different degree");
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.images_[i] = next.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

bool Permutation::isIdentity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = images_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation rhoW(const TwistWord& w) {
  const int degree = 2 * w.genus() + 2;
  Permutation p(degree);
  for (const auto& l : w.letters()) {
    if (l.exponent % 2 != 0)
      p = p.then(Permutation::transposition(degree, l.index, l.index + 1));
  }
  return p;
}

namespace {

// Pack a permutation of up to 16 points into 4-bit nibbles.
std::uint64_t packPerm(const std::array<std::uint8_t, 16>& p, int n) {
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) k |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return k;
}

}  // namespace

std::uint64_t permGroupOrder(int genus) {
  if (genus < 1 || genus > 4)
    throw RangeError("permutation closure supported for genus 1..4, got " +
                     std::to_string(genus));
  const int n = 2 * genus + 2;

  std::array<std::uint8_t, 16> ident{};
  for (int i = 0; i < n; ++i) ident[i] = static_cast<std::uint8_t>(i);

  std::unordered_set<std::uint64_t> seen;
  std::deque<std::array<std::uint8_t, 16>> queue;
  seen.insert(packPerm(ident, n));
  queue.push_back(ident);

  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    // Postcompose with each adjacent transposition (they are involutions,
    // so generators and inverses coincide).
    for (int g = 0; g < 2 * genus + 1; ++g) {
      auto next = cur;
      for (int i = 0; i < n; ++i) {
        if (next[i] == g)
          next[i] = static_cast<std::uint8_t>(g + 1);
        else if (next[i] == g + 1)
          next[i] = static_cast<std::uint8_t>(g);
      }
      if (seen.insert(packPerm(next, n)).second) queue.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace hymcg
