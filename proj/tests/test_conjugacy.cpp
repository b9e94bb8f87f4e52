#include "doctest.h"

#include <set>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/fixtures.hpp"
#include "conjlab/transform.hpp"

using namespace conjlab;

namespace {

// The eight equations relating a, b and conjugators g, h.
bool eq(const CayleyTable& s1, int idx, int a, int b, int g, int h) {
  auto p = [&](int x, int y) { return s1.product(x, y); };
  switch (idx) {
    case 1: return p(a, g) == p(g, b);
    case 2: return p(b, h) == p(h, a);
    case 3: return p(p(h, a), g) == b;
    case 4: return p(p(g, b), h) == a;
    case 5: return p(p(h, g), b) == b;
    case 6: return p(p(g, h), a) == a;
    case 7: return p(b, p(h, g)) == b;
    case 8: return p(a, p(g, h)) == a;
  }
  return false;
}

// The last two quadruple sets {(i),(ii),(v),(vii)} and {(i),(ii),(vi),(viii)}
// do NOT force the remaining equations (see the counterexample test below),
// so only these fourteen are asserted as sufficient.
const std::vector<std::vector<int>> kSufficientSets = {
    {1, 3, 4}, {2, 3, 4}, {1, 3, 8}, {2, 4, 7}, {1, 4, 5}, {2, 3, 6},
    {1, 5, 8}, {2, 6, 7}, {3, 4, 5}, {3, 4, 6}, {3, 4, 7}, {3, 4, 8},
    {3, 6, 8}, {4, 5, 7}};

}  // namespace

TEST_CASE("each sufficient equation subset forces all eight") {
  for (auto& [name, s] : fixtures::all()) {
    CayleyTable s1 = adjoin_identity(s);
    const int n = s.order(), m = s1.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int g = 0; g < m; ++g)
          for (int h = 0; h < m; ++h)
            for (auto& subset : kSufficientSets) {
              bool all_subset = true;
              for (int i : subset) all_subset &= eq(s1, i, a, b, g, h);
              if (!all_subset) continue;
              for (int i = 1; i <= 8; ++i) REQUIRE(eq(s1, i, a, b, g, h));
            }
  }
}

TEST_CASE("the two four-equation quadruples are not sufficient") {
  // with a the zero, b the identity and both conjugators the zero, the
  // quadruples {(i),(ii),(v),(vii)} and {(i),(ii),(vi),(viii)} hold even
  // though the zero is conjugate only to itself
  CayleyTable s = fixtures::mon8();
  CayleyTable s1 = adjoin_identity(s);
  const int a = 1, b = 0, g = 0, h = 0;  // identity and zero of the fixture
  for (int i : {1, 2, 5, 7}) CHECK(eq(s1, i, a, b, g, h));
  CHECK_FALSE(eq(s1, 4, a, b, g, h));
  for (int i : {1, 2, 6, 8}) CHECK(eq(s1, i, b, a, g, h));
  CHECK_FALSE(eq(s1, 3, b, a, g, h));
  ConjugacyEngine eng(s);
  CHECK_FALSE(eng.decide(Relation::N, a, b).has_value());
}

TEST_CASE("mon8 separations") {
  CayleyTable s = fixtures::mon8();
  ConjugacyEngine eng(s);
  auto wp = eng.decide(Relation::P, 2, 3);
  REQUIRE(wp);
  CHECK(eng.verify(Relation::P, 2, 3, *wp));
  CHECK(wp->chain == std::vector<std::pair<int, int>>{{3, 7}});
  CHECK(eng.decide(Relation::C, 2, 3));
  CHECK_FALSE(eng.decide(Relation::N, 2, 3));
}

TEST_CASE("zero is conjugate only to itself") {
  for (auto& [name, s] : fixtures::all()) {
    if (!s.zero()) continue;
    ConjugacyEngine eng(s);
    const int z = *s.zero();
    CHECK(eng.decide(Relation::N, z, z));
    for (int x = 0; x < s.order(); ++x)
      if (x != z) CHECK_FALSE(eng.decide(Relation::N, z, x));
  }
}

TEST_CASE("monoid identity class is {gh : hg = 1}") {
  for (auto& [name, s] : fixtures::all()) {
    if (!s.is_monoid()) continue;
    const int one = *s.identity();
    ConjugacyEngine eng(s);
    ClassPartition part = eng.classes(Relation::N);
    std::set<int> expect;
    for (int g = 0; g < s.order(); ++g)
      for (int h = 0; h < s.order(); ++h)
        if (s.product(h, g) == one) expect.insert(s.product(g, h));
    std::set<int> got;
    for (int x = 0; x < s.order(); ++x)
      if (part.related(one, x)) got.insert(x);
    CHECK(expect == got);
  }
}

TEST_CASE("witnesses verify and search is deterministic") {
  CayleyTable s = fixtures::clifford8();
  ConjugacyEngine eng(s);
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      for (Relation r : {Relation::N, Relation::O, Relation::C, Relation::W,
                         Relation::TR, Relation::G, Relation::P}) {
        auto w1 = eng.decide(r, a, b);
        auto w2 = eng.decide(r, a, b);
        if (w1) {
          CHECK(eng.verify(r, a, b, *w1));
          CHECK(w1->g == w2->g);
          CHECK(w1->h == w2->h);
        }
      }
}

TEST_CASE("classes agree with pairwise deciders") {
  for (auto& [name, s] : fixtures::all()) {
    ConjugacyEngine eng(s);
    for (Relation r : {Relation::N, Relation::PSTAR, Relation::G}) {
      ClassPartition part = eng.classes(r);
      for (int a = 0; a < s.order(); ++a)
        for (int b = 0; b < s.order(); ++b)
          CHECK(part.related(a, b) == eng.decide(r, a, b).has_value());
    }
  }
}

TEST_CASE("powers inherit conjugators") {
  for (auto& [name, s] : fixtures::all()) {
    CayleyTable s1 = adjoin_identity(s);
    ConjugacyEngine eng(s);
    EpigroupData epi = epigroup_data(s1);
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b) {
        auto w = eng.decide(Relation::N, a, b);
        if (!w) continue;
        for (int k = 2; k <= 4; ++k) {
          Witness wk = *w;
          CHECK(eng.verify(Relation::N, s1.power(a, k), s1.power(b, k), wk));
        }
        Witness womega = *w;
        CHECK(eng.verify(Relation::N, epi.at[a].omega, epi.at[b].omega, womega));
        CHECK(eng.verify(Relation::N, epi.at[a].pseudo_inverse, epi.at[b].pseudo_inverse,
                         womega));
      }
  }
}

TEST_CASE("idempotent classes contain only idempotents") {
  for (auto& [name, s] : fixtures::all()) {
    ConjugacyEngine eng(s);
    ClassPartition part = eng.classes(Relation::N);
    for (int e = 0; e < s.order(); ++e) {
      if (!s.is_idempotent(e)) continue;
      for (int a = 0; a < s.order(); ++a)
        if (part.related(e, a)) CHECK(s.is_idempotent(a));
    }
  }
}

TEST_CASE("H composed with ~n commutes") {
  for (auto& [name, s] : fixtures::all()) {
    ConjugacyEngine eng(s);
    GreenData green = green_relations(s);
    auto nmat = eng.relation_matrix(Relation::N);
    const int n = s.order();
    auto compose = [&](bool h_first, int a, int b) {
      for (int c = 0; c < n; ++c) {
        bool left = h_first ? green.h_related(a, c) : nmat[size_t(a) * n + c];
        bool right = h_first ? nmat[size_t(c) * n + b] : green.h_related(c, b);
        if (left && right) return true;
      }
      return false;
    };
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(compose(true, a, b) == compose(false, a, b));
  }
}

TEST_CASE("completely regular: N = P = TR and single-conjugator form") {
  CayleyTable s = fixtures::cr7();
  REQUIRE(is_completely_regular(s));
  ConjugacyEngine eng(s);
  CayleyTable s1 = adjoin_identity(s);
  EpigroupData epi = epigroup_data(s1);
  auto nmat = eng.relation_matrix(Relation::N);
  auto pmat = eng.relation_matrix(Relation::P);
  auto trmat = eng.relation_matrix(Relation::TR);
  CHECK(nmat == pmat);
  CHECK(nmat == trmat);
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool single = false;
      for (int g = 0; g < s1.order() && !single; ++g) {
        int g0 = epi.at[g].omega;
        single = s1.product(a, g) == s1.product(g, b) && s1.product(g0, a) == a &&
                 s1.product(b, g0) == b;
      }
      CHECK(single == bool(nmat[size_t(a) * n + b]));
    }
  // i* closure equals natural conjugacy on completely regular fixtures
  auto istar = eng.relation_matrix(Relation::ISTAR);
  CHECK(istar == nmat);
}

TEST_CASE("inverse semigroups: N = I") {
  for (auto table : {fixtures::clifford8()}) {
    REQUIRE(is_inverse_semigroup(table));
    ConjugacyEngine eng(table);
    auto nmat = eng.relation_matrix(Relation::N);
    auto imat = eng.relation_matrix(Relation::I);
    CHECK(nmat == imat);
  }
  TransformationRealization i2 = realize(enumerate_in(2));
  ConjugacyEngine eng(i2.table);
  CHECK(eng.relation_matrix(Relation::N) == eng.relation_matrix(Relation::I));
}

TEST_CASE("i-conjugacy unsupported elsewhere") {
  // T_2 is completely regular, so use T_3, which is neither inverse nor
  // completely regular
  TransformationRealization t3 = realize(enumerate_tn(3));
  REQUIRE_FALSE(is_inverse_semigroup(t3.table));
  REQUIRE_FALSE(is_completely_regular(t3.table));
  ConjugacyEngine eng(t3.table);
  CHECK_FALSE(eng.supports(Relation::I));
  CHECK_THROWS_AS(eng.decide(Relation::I, 0, 1), Error);
}

TEST_CASE("bands: N classes equal D classes") {
  for (auto& s : all_semigroups_up_to_iso(4)) {
    if (!is_band(s)) continue;
    ConjugacyEngine eng(s);
    ClassPartition part = eng.classes(Relation::N);
    GreenData green = green_relations(s);
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b)
        CHECK(part.related(a, b) == green.d_related(a, b));
  }
}

TEST_CASE("regular + N == P characterizes complete regularity") {
  for (auto& s : all_semigroups_up_to_iso(4)) {
    ConjugacyEngine eng(s);
    bool np = eng.relation_matrix(Relation::N) == eng.relation_matrix(Relation::P);
    CHECK(is_completely_regular(s) == (is_regular(s) && np));
  }
}

TEST_CASE("3-nilpotent semigroups have trivial natural conjugacy") {
  for (auto& s : all_semigroups_up_to_iso(4)) {
    if (!s.zero()) continue;
    const int z = *s.zero();
    bool nil3 = true;
    for (int a = 0; a < s.order() && nil3; ++a)
      for (int b = 0; b < s.order() && nil3; ++b)
        for (int c = 0; c < s.order() && nil3; ++c)
          nil3 = s.product(s.product(a, b), c) == z;
    if (!nil3) continue;
    ConjugacyEngine eng(s);
    ClassPartition part = eng.classes(Relation::N);
    CHECK(part.num_classes == s.order());
  }
}

TEST_CASE("natural conjugacy meets the natural order trivially") {
  // on stable semigroups (all finite ones) the two can only share the diagonal
  for (auto& [name, s] : fixtures::all()) {
    ConjugacyEngine eng(s);
    auto nmat = eng.relation_matrix(Relation::N);
    auto leq = natural_partial_order(s);
    const int n = s.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && leq[size_t(a) * n + b]) CHECK_FALSE(nmat[size_t(a) * n + b]);
  }
}

TEST_CASE("commutative cancellative: O classes are singletons") {
  CayleyTable z4 = cyclic_group(4);
  ConjugacyEngine eng(z4);
  ClassPartition part = eng.classes(Relation::O);
  CHECK(part.num_classes == 4);
}

TEST_CASE("O is universal with a zero") {
  CayleyTable s = fixtures::mon8();
  ConjugacyEngine eng(s);
  ClassPartition part = eng.classes(Relation::O);
  CHECK(part.num_classes == 1);
}

TEST_CASE("witness normalization produces mutually inverse pairs") {
  CayleyTable s = fixtures::flip4();
  ConjugacyEngine eng(s);
  CayleyTable s1 = eng.table_s1();
  // the pair (1,3) is not itself a witness for 1 ~n 2 (1 lies outside its
  // domain), but its mutually inverse companion (1,2) is
  auto [gbar, hbar] = eng.mutually_inverse_pair(0, 2);
  CHECK(gbar == 0);
  CHECK(hbar == 1);
  Witness nw;
  nw.kind = Witness::Kind::PairGH;
  nw.g = gbar;
  nw.h = hbar;
  CHECK(eng.verify(Relation::N, 0, 1, nw));
  CHECK(s1.product(s1.product(nw.g, nw.h), nw.g) == nw.g);
  CHECK(s1.product(s1.product(nw.h, nw.g), nw.h) == nw.h);
  // normalizing an actual witness keeps it valid and mutually inverse
  Witness nnw = eng.normalize_witness(0, 1, nw);
  CHECK(s1.product(s1.product(nnw.g, nnw.h), nnw.g) == nnw.g);
  CHECK(eng.verify(Relation::N, 0, 1, nnw));
  // a bogus witness is rejected
  Witness bad;
  bad.kind = Witness::Kind::PairGH;
  bad.g = 3;
  bad.h = 3;
  if (!eng.verify(Relation::N, 0, 1, bad)) CHECK_THROWS_AS(eng.normalize_witness(0, 1, bad), Error);
  // Clifford fixture: witness (s3, s3) for s1 ~n s2 re-normalizes fine
  CayleyTable cl = fixtures::clifford8();
  ConjugacyEngine ceng(cl);
  Witness cw;
  cw.kind = Witness::Kind::PairGH;
  cw.g = 5;
  cw.h = 5;
  REQUIRE(ceng.verify(Relation::N, 3, 4, cw));
  Witness cnw = ceng.normalize_witness(3, 4, cw);
  CHECK(ceng.verify(Relation::N, 3, 4, cnw));
}

TEST_CASE("parallel class sweep agrees with the single-threaded one") {
  TransformationRealization t3 = realize(enumerate_tn(3));
  ConjugacyEngine eng(t3.table);
  setenv("CONJLAB_THREADS", "1", 1);
  ClassPartition single = eng.classes(Relation::N);
  setenv("CONJLAB_THREADS", "4", 1);
  ClassPartition parallel = eng.classes(Relation::N);
  unsetenv("CONJLAB_THREADS");
  CHECK(single.class_of == parallel.class_of);
  CHECK(single.num_classes == parallel.num_classes);
}

TEST_CASE("compare reports the inclusion chain") {
  CayleyTable s = fixtures::mon8();
  ConjugacyEngine eng(s);
  std::vector<Relation> rels = {Relation::N, Relation::PSTAR, Relation::C, Relation::O};
  auto cmp = eng.compare(rels);
  CHECK(cmp[0][1] == CompareResult::Subset);   // N within P*
  CHECK(cmp[0][2] == CompareResult::Subset);   // N within C
  CHECK(cmp[1][3] == CompareResult::Subset);   // P* within O
  CHECK(cmp[3][0] == CompareResult::Superset);
  CHECK(cmp[0][0] == CompareResult::Equal);
}
