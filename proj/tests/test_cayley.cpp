#include "doctest.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "conjlab/cayley.hpp"
#include "conjlab/fixtures.hpp"
#include "conjlab/transform.hpp"

using namespace conjlab;

TEST_CASE("build validates shape, range and associativity") {
  CHECK_NOTHROW(CayleyTable::build({{0}}));
  CHECK_THROWS_AS(CayleyTable::build({{0, 1}, {1, 5}}), Error);
  // (0*1)*2 != 0*(1*2)
  std::vector<std::vector<int>> bad = {{0, 0, 0}, {0, 0, 1}, {0, 2, 2}};
  try {
    CayleyTable::build(bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == Err::NonAssociative);
  }
}

TEST_CASE("identity and zero detection") {
  CayleyTable one = CayleyTable::build({{0}});
  CHECK(one.identity() == 0);
  CHECK(one.zero() == 0);
  CayleyTable s = fixtures::mon8();
  CHECK(s.identity() == 1);
  CHECK(s.zero() == 0);
  CHECK(fixtures::flip4().identity() == std::nullopt);
}

TEST_CASE("text format round trip") {
  for (auto& [name, s] : fixtures::all()) {
    CayleyTable again = parse_cayley_string(format_cayley(s));
    CHECK(again == s);
  }
  CHECK_THROWS_AS(parse_cayley_string("2\n0 1\n"), Error);
}

TEST_CASE("bundled data files match the embedded fixtures") {
  const std::string dir = std::string(CONJLAB_SOURCE_DIR) + "/data/";
  for (const char* name : {"mon8", "flip4", "clifford8", "cr7", "ord3a", "ord3b"}) {
    std::ifstream in(dir + name + ".tbl");
    REQUIRE(in.good());
    CayleyTable from_file = parse_cayley(in);
    bool found = false;
    for (auto& [fname, table] : fixtures::all())
      if (fname == name) {
        CHECK(from_file == table);
        found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("D is the composition of R and L both ways") {
  for (auto& [name, s] : fixtures::all()) {
    GreenData g = green_relations(s);
    const int n = s.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool rl = false, lr = false;
        for (int c = 0; c < n; ++c) {
          rl |= g.r_related(a, c) && g.l_related(c, b);
          lr |= g.l_related(a, c) && g.r_related(c, b);
        }
        CHECK(g.d_related(a, b) == rl);
        CHECK(rl == lr);
        CHECK(g.h_related(a, b) == (g.r_related(a, b) && g.l_related(a, b)));
      }
  }
}

TEST_CASE("green relations on the 8-element monoid") {
  CayleyTable s = fixtures::mon8();
  GreenData g = green_relations(s);
  CHECK(g.r_related(2, 3));
  CHECK(g.d_related(2, 3));
  CHECK(g.num_d == g.num_j);
  CHECK(g.d == g.j);
}

TEST_CASE("groups are a single D-class and H = R = L") {
  for (int n : {2, 3, 4}) {
    CayleyTable g = cyclic_group(n);
    GreenData green = green_relations(g);
    CHECK(green.num_d == 1);
    CHECK(green.num_h == 1);
  }
  GreenData green = green_relations(symmetric_group_table(3));
  CHECK(green.num_d == 1);
}

TEST_CASE("T_3 D-classes are the rank levels") {
  TransformationRealization t3 = realize(enumerate_tn(3));
  GreenData green = green_relations(t3.table);
  CHECK(green.num_d == 3);
  std::map<int, int> size_by_class;
  for (int i = 0; i < t3.table.order(); ++i) ++size_by_class[green.d[i]];
  std::multiset<int> sizes;
  for (auto& [c, s] : size_by_class) sizes.insert(s);
  CHECK(sizes == std::multiset<int>{3, 18, 6});
  for (int i = 0; i < t3.table.order(); ++i)
    for (int j = 0; j < t3.table.order(); ++j)
      CHECK(green.d_related(i, j) == (t3.elems[i].rank() == t3.elems[j].rank()));
}

TEST_CASE("natural partial order basics") {
  CayleyTable s = fixtures::ord3a();
  auto leq = natural_partial_order(s);
  CHECK(leq[0 * 3 + 1]);      // 0 < 1
  CHECK_FALSE(leq[1 * 3 + 0]);
  // in a group the order is equality
  CayleyTable g = cyclic_group(4);
  auto gleq = natural_partial_order(g);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(bool(gleq[a * 4 + b]) == (a == b));
}

TEST_CASE("epigroup data") {
  // idempotents have index 1 and are their own pseudo-inverse
  CayleyTable s = fixtures::clifford8();
  EpigroupData e = epigroup_data(s);
  for (int a = 0; a < s.order(); ++a)
    if (s.is_idempotent(a)) {
      CHECK(e.at[a].index == 1);
      CHECK(e.at[a].omega == a);
      CHECK(e.at[a].pseudo_inverse == a);
    }
  // truncated addition: 1^omega = 0 with index n+1
  CayleyTable t = truncated_addition(3);
  EpigroupData et = epigroup_data(t);
  CHECK(et.at[1].omega == 0);
  CHECK(et.at[1].index == 4);
  // a transposition in S_3 squares to the identity
  CayleyTable s3 = symmetric_group_table(3);
  EpigroupData e3 = epigroup_data(s3);
  for (int a = 0; a < 6; ++a)
    if (!s3.is_idempotent(a) && s3.product(a, a) == *s3.identity()) {
      CHECK(e3.at[a].omega == *s3.identity());
      CHECK(e3.at[a].omega_plus_one == a);
    }
  // the defining identities hold everywhere
  for (auto& [name, table] : fixtures::all()) {
    EpigroupData ed = epigroup_data(table);
    for (int a = 0; a < table.order(); ++a) {
      const auto& x = ed.at[a];
      CHECK(table.product(table.product(x.pseudo_inverse, a), x.pseudo_inverse) ==
            x.pseudo_inverse);
      CHECK(table.product(a, x.pseudo_inverse) == table.product(x.pseudo_inverse, a));
      CHECK(table.product(table.power(a, x.index + 1), x.pseudo_inverse) ==
            table.power(a, x.index));
      CHECK(table.is_idempotent(x.omega));
      CHECK(table.product(a, x.pseudo_inverse) == x.omega);
    }
  }
}

TEST_CASE("subsemigroup, centralizer, units") {
  CayleyTable s = fixtures::clifford8();
  // centralizer of the identity is everything
  CHECK(centralizer(s, 6).table.order() == 8);
  // the skewed centralizers: C(s1) = {e, f, s1, c}, C(s2) = {e, f, s2}
  Subsemigroup c1 = centralizer(s, 3);
  CHECK(c1.to_parent == std::vector<int>{0, 3, 6, 7});
  Subsemigroup c2 = centralizer(s, 4);
  CHECK(c2.to_parent == std::vector<int>{0, 4, 6});
  // units of T_3 form S_3
  TransformationRealization t3 = realize(enumerate_tn(3));
  Subsemigroup units = units_group(t3.table);
  CHECK(units.table.order() == 6);
  CHECK(is_group(units.table));
  // centralizer of a zero is everything
  CHECK(centralizer(fixtures::mon8(), 0).table.order() == 8);
}

TEST_CASE("inverse semigroup predicate") {
  TransformationRealization i2 = realize(enumerate_in(2));
  CHECK(is_inverse_semigroup(i2.table));
  TransformationRealization t2 = realize(enumerate_tn(2));
  CHECK_FALSE(is_inverse_semigroup(t2.table));
  CHECK(is_inverse_semigroup(fixtures::clifford8()));
}

TEST_CASE("adjoin identity is identity on monoids") {
  CayleyTable s = fixtures::mon8();
  CHECK(adjoin_identity(s) == s);
  CayleyTable f = fixtures::flip4();
  CayleyTable f1 = adjoin_identity(f);
  CHECK(f1.order() == 5);
  CHECK(f1.identity() == 4);
}

TEST_CASE("Rees matrix semigroups") {
  // trivial group, 1x1 sandwich
  ReesMatrixSpec triv{CayleyTable::build({{0}}), 1, 1, {0}};
  CHECK(rees_matrix_semigroup(triv, false).order() == 1);
  CHECK(rees_matrix_semigroup(triv, true).order() == 2);
  // Z_2 with identity sandwich, no zero: completely simple of order 8
  ReesMatrixSpec spec{cyclic_group(2), 2, 2, {0, 0, 0, 0}};
  CayleyTable s = rees_matrix_semigroup(spec, false);
  CHECK(s.order() == 8);
  CHECK(int(s.idempotents().size()) == 4);
  // with zero and diagonal sandwich: order 9, zero absorbs
  ReesMatrixSpec zspec{cyclic_group(2), 2, 2, {0, -1, -1, 0}};
  CayleyTable z = rees_matrix_semigroup(zspec, true);
  CHECK(z.order() == 9);
  CHECK(z.zero() == 0);
  // all-zero column rejected
  ReesMatrixSpec bad{cyclic_group(2), 2, 2, {-1, 0, -1, 0}};
  CHECK_THROWS_AS(rees_matrix_semigroup(bad, true), Error);
  // primitive idempotent exists (completely 0-simple)
  {
    CayleyTable t = rees_matrix_semigroup(zspec, true);
    auto leq = natural_partial_order(t);
    bool found_primitive = false;
    for (int e : t.idempotents()) {
      if (e == 0) continue;
      bool primitive = true;
      for (int f : t.idempotents())
        if (f != 0 && f != e && leq[size_t(f) * t.order() + e]) primitive = false;
      found_primitive |= primitive;
    }
    CHECK(found_primitive);
  }
}

TEST_CASE("semigroup enumeration counts") {
  CHECK(all_semigroups_up_to_iso(1).size() == 1);
  CHECK(all_semigroups_up_to_iso(2).size() == 5);
  CHECK(all_semigroups_up_to_iso(3).size() == 24);
  CHECK(all_semigroups_up_to_iso(4).size() == 188);
}

TEST_CASE("direct products multiply componentwise") {
  CayleyTable z6 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(z6.order() == 6);
  CHECK(is_group(z6));
  CHECK(is_commutative(z6));
}
