// polycyclic.hpp
// The polycyclic monoid P_n (n >= 2): normal forms y x^{-1}, zero,
// multiplication, cyclic reduction, conjugacy deciders, and the strict
// growth and conjugacy growth functions and series, cross-checked by a
// brute-force ball oracle.
//
// Words are strings over letters 0..n-1.  Length of y x^{-1} is |y|+|x|,
// the zero has length 1, the identity length 0.

#ifndef CONJLAB_POLYCYCLIC_HPP
#define CONJLAB_POLYCYCLIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {

struct PolyElement {
  bool zero = false;
  std::string y, x;  // bytes 0..n-1; element is y * x^{-1}

  static PolyElement make_zero() { return {true, "", ""}; }
  static PolyElement one() { return {}; }
  static PolyElement word(std::string up, std::string down = "") {
    return {false, std::move(up), std::move(down)};
  }

  int length() const { return zero ? 1 : int(y.size() + x.size()); }
  bool is_one() const { return !zero && y.empty() && x.empty(); }

  bool operator==(const PolyElement& o) const {
    return zero == o.zero && (zero || (y == o.y && x == o.x));
  }
  bool operator<(const PolyElement& o) const {
    if (zero != o.zero) return zero < o.zero;
    if (y != o.y) return y < o.y;
    return x < o.x;
  }
};

enum class PolyRelation { N, C, P, PSTAR };

// literal: `p1 p2 / p1` for (p1 p2)(p1)^{-1}; `0`, `1`
PolyElement parse_poly(const std::string& literal, int n);
std::string poly_str(const PolyElement& a);

PolyElement poly_mul(const PolyElement& a, const PolyElement& b);
PolyElement poly_inverse(const PolyElement& a);
PolyElement cyclic_reduce(const PolyElement& a);
// rho(a): the element x^{-1} y, always 0 or a one-sided word.
PolyElement rho(const PolyElement& a);

// Primary conjugacy in a free monoid: cyclic rotation.
bool free_monoid_primary_conj(const std::string& u, const std::string& v);

bool poly_conj(PolyRelation rel, const PolyElement& a, const PolyElement& b);

struct GrowthTable {
  std::string relation;
  std::vector<long long> values;  // m = 0..M
};

// Closed-form growth values.  relation: "sigma", "n", "c", "pstar".
GrowthTable growth_function(int n, int max_m, const std::string& relation);
// Power series coefficients of the closed-form growth series.
GrowthTable series_coefficients(int n, int max_m, const std::string& relation);

// Necklace count: number of primary-conjugacy classes of words of length m
// over an n-letter alphabet.
long long necklace_count(int n, int m);
// The same via the double divisor sum with the Moebius function.
long long necklace_count_moebius(int n, int m);

// Brute-force class counts on the ball of radius max_m: number of classes
// whose least member length is exactly m, computed with definitional
// deciders restricted to bounded conjugators.
GrowthTable ball_oracle(int n, int max_m, const std::string& relation);

}  // namespace conjlab

#endif  // CONJLAB_POLYCYCLIC_HPP
