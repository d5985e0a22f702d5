#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spearlab/linalg.hpp"
#include "spearlab/linop.hpp"
#include "spearlab/polytope.hpp"
#include "spearlab/rational.hpp"
#include "spearlab/space.hpp"

namespace testing {

using spearlab::RatMatrix;
using spearlab::Rational;
using spearlab::RatVector;

inline Rational q(const char* s) { return Rational::parse(s); }

// v({"1", "-1/2"}) reads nicer in tests than a chain of Rational(...) ctors
inline RatVector v(std::initializer_list<const char*> entries) {
  RatVector out;
  for (const char* e : entries) out.push_back(Rational::parse(e));
  return out;
}

inline RatVector vi(std::initializer_list<int> entries) {
  return RatVector(entries.begin(), entries.end());
}

inline RatMatrix m(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RatVector> r;
  for (auto row : rows) r.emplace_back(row.begin(), row.end());
  return RatMatrix::from_rows(r);
}

inline std::set<RatVector> as_set(const std::vector<RatVector>& xs) {
  return {xs.begin(), xs.end()};
}

inline Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t n, int max_num = 5,
                               int max_den = 4) {
  RatVector x(n);
  for (auto& e : x) e = random_rational(rng, max_num, max_den);
  return x;
}

// random full-dimensional point set; ±e_i are mixed in so the hull
// always contains a neighbourhood of 0 after symmetrization
inline std::vector<RatVector> random_symmetric_generators(std::mt19937_64& rng, std::size_t dim,
                                                          std::size_t extra) {
  std::vector<RatVector> pts;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e = spearlab::unit_vector(dim, i);
    if (coin(rng)) e[i] = Rational(coin(rng) ? 2 : 1, 1 + coin(rng));
    pts.push_back(e);
  }
  for (std::size_t k = 0; k < extra; ++k) {
    RatVector x = random_vector(rng, dim, 3, 2);
    if (!spearlab::is_zero(x)) pts.push_back(x);
  }
  return pts;
}

// signed permutation matrices are the isometries shared by l1/linf balls
inline RatMatrix random_signed_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  RatMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = coin(rng) ? 1 : -1;
  return p;
}

}  // namespace testing
