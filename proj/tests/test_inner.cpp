#include "doctest.h"

#include <set>

#include "conjlab/conjugacy.hpp"
#include "conjlab/fixtures.hpp"
#include "conjlab/inner.hpp"
#include "conjlab/transform.hpp"

using namespace conjlab;

TEST_CASE("domains") {
  // group: D_{g,h} nonempty only when gh = 1
  CayleyTable z2 = cyclic_group(2);
  CHECK(domain_gh(z2, 0, 1).empty());
  CHECK(domain_gh(z2, 0, 0).size() == 2);
  CHECK(domain_gh(z2, 1, 1).size() == 2);
  // monoid with g = h = 1
  CayleyTable s = fixtures::mon8();
  CHECK(domain_gh(s, 1, 1).size() == 8);
}

TEST_CASE("phi maps") {
  CayleyTable z2 = cyclic_group(2);
  CHECK(phi_gh(z2, 0, 0).is_identity());
  CHECK(phi_gh(z2, 0, 1).empty());
  CayleyTable cl = fixtures::clifford8();
  PartialAut f = phi_gh(cl, 5, 5);
  CHECK(f.map[3] == 4);  // s3 s1 s3 = s2
}

TEST_CASE("phi_{g,h} and phi_{h,g} are mutually inverse isomorphisms") {
  for (auto& [name, s] : fixtures::all()) {
    CayleyTable s1 = adjoin_identity(s);
    for (int g = 0; g < s1.order(); ++g)
      for (int h = 0; h < s1.order(); ++h) {
        PartialAut f = phi_gh(s, g, h);
        PartialAut finv = phi_gh(s, h, g);
        for (int a = 0; a < s.order(); ++a)
          if (f.map[a] >= 0) {
            CHECK(finv.map[f.map[a]] == a);
            // multiplicative where defined
            for (int b = 0; b < s.order(); ++b)
              if (f.map[b] >= 0) {
                int ab = s.product(a, b);
                if (f.map[ab] >= 0) CHECK(f.map[ab] == s.product(f.map[a], f.map[b]));
              }
          }
      }
  }
}

TEST_CASE("domains are downward directed in the natural order") {
  CayleyTable s = fixtures::clifford8();
  auto leq = natural_partial_order(s);
  CayleyTable s1 = adjoin_identity(s);
  for (int g = 0; g < s1.order(); ++g)
    for (int h = 0; h < s1.order(); ++h) {
      std::vector<int> dom = domain_gh(s, g, h);
      std::set<int> in(dom.begin(), dom.end());
      for (int a : dom)
        for (int c = 0; c < s.order(); ++c)
          if (leq[size_t(c) * s.order() + a]) CHECK(in.count(c));
    }
}

TEST_CASE("natural conjugacy is the definition chase through phi") {
  for (auto& [name, s] : fixtures::all()) {
    ConjugacyEngine eng(s);
    CayleyTable s1 = adjoin_identity(s);
    const int n = s.order();
    std::vector<char> via_phi(size_t(n) * n, 0);
    for (int g = 0; g < s1.order(); ++g)
      for (int h = 0; h < s1.order(); ++h) {
        PartialAut f = phi_gh(s, g, h);
        for (int a = 0; a < n; ++a)
          if (f.map[a] >= 0) via_phi[size_t(a) * n + f.map[a]] = 1;
      }
    auto nmat = eng.relation_matrix(Relation::N);
    CHECK(via_phi == nmat);
  }
}

TEST_CASE("Inn of cyclic groups is the 2-chain") {
  for (int n : {2, 3}) {
    InnMonoid inn = generate_inn(cyclic_group(n));
    REQUIRE(inn.elements.size() == 2);
    CHECK(inn.elements[0].empty());
    CHECK(inn.elements[1].is_identity());
    // meet-semilattice structure
    CHECK(inn.realization.product(0, 1) == 0);
    CHECK(inn.realization.product(1, 1) == 1);
  }
}

TEST_CASE("Inn(S_3) is the inner automorphism group plus the empty map") {
  InnMonoid inn = generate_inn(symmetric_group_table(3));
  CHECK(inn.elements.size() == 7);
  int bijective = 0;
  for (auto& f : inn.elements)
    if (f.domain_size() == 6) ++bijective;
  CHECK(bijective == 6);
}

TEST_CASE("generated Inn is an inverse monoid") {
  for (auto& [name, s] : fixtures::all()) {
    if (s.order() > 8) continue;
    InnMonoid inn = generate_inn(s);
    // idempotents commute
    auto idem = inn.realization.idempotents();
    for (int e : idem)
      for (int f : idem)
        CHECK(inn.realization.product(e, f) == inn.realization.product(f, e));
    CHECK(is_inverse_semigroup(inn.realization));
  }
}

TEST_CASE("Inn(I_2) is isomorphic to I_2") {
  TransformationRealization i2 = realize(enumerate_in(2));
  InnMonoid inn = generate_inn(i2.table);
  CHECK(inn.elements.size() == 7);
  std::vector<int> inv = inverse_map(i2.table);
  std::set<int> images;
  for (int g = 0; g < i2.table.order(); ++g)
    images.insert(inn.index_of(phi_gh(i2.table, g, inv[g])));
  CHECK(images.size() == 7);
}

TEST_CASE("inverse semigroup domains are below D_{g,g^-1}") {
  TransformationRealization i2 = realize(enumerate_in(2));
  const CayleyTable& s = i2.table;
  std::vector<int> inv = inverse_map(s);
  for (int g = 0; g < s.order(); ++g) {
    std::vector<int> base = domain_gh(s, g, inv[g]);
    std::set<int> in(base.begin(), base.end());
    for (int h = 0; h < s.order(); ++h)
      for (int a : domain_gh(s, g, h)) CHECK(in.count(a));
  }
}

TEST_CASE("epigroup witnesses extend to mutually inverse ones") {
  CayleyTable s = fixtures::flip4();
  ConjugacyEngine eng(s);
  CayleyTable s1 = eng.table_s1();
  EpigroupData epi = epigroup_data(s1);
  for (int g = 0; g < s1.order(); ++g)
    for (int h = 0; h < s1.order(); ++h) {
      PartialAut f = phi_gh(s, g, h);
      const int gh = s1.product(g, h);
      const int gbar = s1.product(epi.at[gh].omega, g);
      const int hbar = s1.product(h, epi.at[gh].pseudo_inverse);
      PartialAut fbar = phi_gh(s, gbar, hbar);
      for (int a = 0; a < s.order(); ++a)
        if (f.map[a] >= 0) CHECK(fbar.map[a] == f.map[a]);
    }
  // strictness: phi_{1,3} (indices 0,2) extends properly
  PartialAut f = phi_gh(s, 0, 2);
  EpigroupData epi2 = epigroup_data(adjoin_identity(s));
  const int gh = adjoin_identity(s).product(0, 2);
  PartialAut fbar = phi_gh(s, adjoin_identity(s).product(epi2.at[gh].omega, 0),
                           adjoin_identity(s).product(2, epi2.at[gh].pseudo_inverse));
  CHECK(fbar.domain_size() > f.domain_size());
}

TEST_CASE("Rees criterion for abelian groups reduces to a shifted equality") {
  ReesMatrixSpec spec{cyclic_group(2), 2, 2, {0, 0, 0, 0}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      // identity sandwich over an abelian group: conjugacy iff a = b
      CHECK(rees_conj_n(spec, 0, a, 0, 1, b, 1) == (a == b));
      CHECK(rees_conj_n(spec, 0, a, 1, 0, b, 0) == (a == b));
    }
  // zero sandwich entries rule a pair of distinct triples out
  ReesMatrixSpec zspec{cyclic_group(2), 2, 2, {0, -1, -1, 0}};
  CHECK_FALSE(rees_conj_n(zspec, 0, 0, 1, 1, 0, 0));
  CHECK(rees_conj_n(zspec, 0, 0, 0, 0, 0, 0));
  // equal triples are related even across a zero entry (identity conjugators)
  CHECK(rees_conj_n(zspec, 0, 0, 1, 0, 0, 1));
}

TEST_CASE("census identities") {
  CHECK(tn_generator_census(1).brute == 1);
  for (int n = 1; n <= 3; ++n) {
    GeneratorCensus c = tn_generator_census(n);
    CHECK(c.brute == c.parametric);
  }
}
