// inner.hpp
// Partial inner automorphisms of a finite semigroup: the domains D_{g,h},
// the maps phi_{g,h} : a -> hag, and the inverse monoid Inn(S) they
// generate under composition.  Also the completely 0-simple natural
// conjugacy criterion on Rees matrix semigroups and the census of
// generator maps of Inn(T_n).

#ifndef CONJLAB_INNER_HPP
#define CONJLAB_INNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {

// Partial injection on the element set of S; map[a] = image or -1.
struct PartialAut {
  std::vector<int> map;
  int source_g = -1, source_h = -1;  // provenance when built as phi_{g,h}

  int domain_size() const;
  std::vector<int> domain() const;
  bool empty() const { return domain_size() == 0; }
  bool is_identity() const;

  // a (f.g) = (a f) g on the composable subset.
  PartialAut compose(const PartialAut& o) const;
  PartialAut inverse() const;

  bool operator==(const PartialAut& o) const { return map == o.map; }
  bool operator<(const PartialAut& o) const { return map < o.map; }
};

// D_{g,h} = {a in S : gh.a = a.gh = a}; g, h are S^1 indices of the table
// returned by adjoin_identity(s).
std::vector<int> domain_gh(const CayleyTable& s, int g, int h);
PartialAut phi_gh(const CayleyTable& s, int g, int h);

struct InnMonoid {
  std::vector<PartialAut> elements;   // sorted
  int generator_count = 0;            // distinct phi_{g,h}
  CayleyTable realization;            // composition table of the elements

  int index_of(const PartialAut& f) const;
};

InnMonoid generate_inn(const CayleyTable& s, size_t bound = 200000);

// Natural conjugacy of nonzero triples (i,a,lam), (j,b,mu) of the 0-Rees
// matrix semigroup over spec: sandwich entries at the crossing positions
// are nonzero and p_{mu j} b is group-conjugate to a p_{lam i}.
bool rees_conj_n(const ReesMatrixSpec& spec, int i, int a, int lam, int j, int b, int mu);

// Counts of the distinct generator maps phi_{g,h} of Inn(T_n), computed by
// brute force over conjugator pairs and independently from the parameter
// count (partition/section tuples plus the constant-to-constant maps and
// the empty map).
struct GeneratorCensus {
  long long brute = 0;
  long long parametric = 0;
};
GeneratorCensus tn_generator_census(int n);

}  // namespace conjlab

#endif  // CONJLAB_INNER_HPP
