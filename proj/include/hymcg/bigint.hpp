#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hymcg {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace hymcg
