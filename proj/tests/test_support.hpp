#pragma once

#include <random>
#include <vector>

#include "quatlie/algebra.hpp"

namespace quatlie::testing {

/// Independent oracle for blade products: concatenate the two ascending index
/// lists, bubble-sort counting transpositions, contract equal neighbours
/// through the metric.
inline std::pair<int, BladeMask> blade_product_oracle(BladeMask a, BladeMask b,
                                                      const Signature& sig) {
  std::vector<int> indices;
  for (int i = 1; i <= sig.n(); ++i)
    if (a & (BladeMask(1) << (i - 1))) indices.push_back(i);
  for (int i = 1; i <= sig.n(); ++i)
    if (b & (BladeMask(1) << (i - 1))) indices.push_back(i);

  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
      if (indices[i] > indices[i + 1]) {
        std::swap(indices[i], indices[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  std::vector<int> reduced;
  for (std::size_t i = 0; i < indices.size();) {
    if (i + 1 < indices.size() && indices[i] == indices[i + 1]) {
      sign *= sig.eta(indices[i]);
      i += 2;
    } else {
      reduced.push_back(indices[i]);
      ++i;
    }
  }
  BladeMask out = 0;
  for (int i : reduced) out |= BladeMask(1) << (i - 1);
  return {sign, out};
}

inline Multivector random_multivector(Signature sig, std::mt19937_64& rng, int max_terms = 5,
                                      bool complex_coeffs = true) {
  Multivector u(sig);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<BladeMask> mask(0, (BladeMask(1) << sig.n()) - 1);
  for (int t = 0; t < max_terms; ++t) {
    Rational re(num(rng), den(rng));
    Rational im = complex_coeffs ? Rational(num(rng), den(rng)) : Rational(0);
    u.add_term(mask(rng), ExactComplex(re, im));
  }
  return u;
}

}  // namespace quatlie::testing
