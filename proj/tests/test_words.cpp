#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hymcg/rand_util.hpp"
#include "hymcg/words.hpp"

using namespace hymcg;

TEST_CASE("parsing and printing word literals") {
  const auto w = TwistWord::parse(2, "t1 t2 t3^2 t2 t1");
  CHECK(w.letters().size() == 5);
  CHECK(w.str() == "t1 t2 t3^2 t2 t1");
  CHECK(TwistWord::parse(2, "").empty());
  CHECK(TwistWord::parse(2, "e").empty());
  CHECK(TwistWord::parse(2, "t1^-3").str() == "t1^-3");
  CHECK_THROWS_AS(TwistWord::parse(2, "t6"), ParseError);   // max index 5
  CHECK_THROWS_AS(TwistWord::parse(2, "s1"), ParseError);
  CHECK_THROWS_AS(TwistWord::parse(2, "t1^x"), ParseError);
  CHECK_THROWS_AS(TwistWord::parse(0, "t1"), InvalidGenus);
}

TEST_CASE("free reduction") {
  CHECK(reduce(TwistWord::parse(1, "t1 t1^-1")).empty());
  CHECK(reduce(TwistWord::parse(1, "t1^2 t1^-1")) == TwistWord::parse(1, "t1"));
  CHECK(reduce(TwistWord::parse(1, "t1 t2")) == TwistWord::parse(1, "t1 t2"));
  // Cascading cancellation.
  CHECK(reduce(TwistWord::parse(2, "t1 t2 t2^-1 t1^-1")).empty());
  // Idempotent.
  const auto w = TwistWord::parse(2, "t1 t1 t2 t2^-2 t2");
  CHECK(reduce(reduce(w)) == reduce(w));
}

TEST_CASE("involution word shape") {
  CHECK(involutionWord(1).str() == "t1 t2 t3^2 t2 t1");
  CHECK(involutionWord(2).str() == "t1 t2 t3 t4 t5^2 t4 t3 t2 t1");
  for (int g = 1; g <= 6; ++g) {
    CHECK(involutionWord(g).length() == 4 * g + 2);
    CHECK(involutionWord(g).letters().size() == 4 * g + 1);
  }
  CHECK_THROWS_AS(involutionWord(0), InvalidGenus);
}

TEST_CASE("permutation basics") {
  const auto t = Permutation::transposition(6, 1, 2);
  CHECK(t.apply(1) == 2);
  CHECK(t.apply(2) == 1);
  CHECK(t.apply(3) == 3);
  CHECK(t.then(t).isIdentity());
  CHECK(t.cycles() == "(1 2)");
  CHECK(Permutation(5).cycles() == "()");
  const auto u = Permutation::transposition(6, 2, 3);
  CHECK(t.then(u).apply(1) == 3);  // 1 -> 2 -> 3, left-to-right
  CHECK((t.then(u)).inverse().then(t.then(u)).isIdentity());
}

TEST_CASE("rhoW on generators and small words") {
  CHECK(rhoW(TwistWord::parse(2, "t1")) == Permutation::transposition(6, 1, 2));
  CHECK(rhoW(TwistWord::parse(2, "t1^2")).isIdentity());
  CHECK(rhoW(TwistWord::parse(2, "t1^5")) == Permutation::transposition(6, 1, 2));
  CHECK(rhoW(involutionWord(2)).isIdentity());
}

TEST_CASE("rhoW fixes every marked point on the involution word") {
  for (int g = 1; g <= 6; ++g) CHECK(rhoW(involutionWord(g)).isIdentity());
}

TEST_CASE("rhoW is a homomorphism") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = randomWord(2, 8, 3, rng);
    const auto v = randomWord(2, 8, 3, rng);
    CHECK(rhoW(u.concat(v)) == rhoW(u).then(rhoW(v)));
    CHECK(rhoW(reduce(u)) == rhoW(u));
  }
}

TEST_CASE("adjacent transpositions generate the full symmetric group") {
  CHECK(permGroupOrder(1) == 24);
  CHECK(permGroupOrder(2) == 720);
  CHECK(permGroupOrder(3) == 40320);
  CHECK_THROWS_AS(permGroupOrder(0), RangeError);
  CHECK_THROWS_AS(permGroupOrder(5), RangeError);
}
