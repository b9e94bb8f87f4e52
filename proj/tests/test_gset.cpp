#include "doctest.h"

#include "conjlab/conjugacy.hpp"
#include "conjlab/gset.hpp"
#include "conjlab/transform.hpp"

using namespace conjlab;

namespace {

GSetSpec z2_free() {
  GSetSpec s;
  s.group = {{2}};
  s.orbit_stabs = {{0}};
  return s;
}

GSetSpec z2_free_plus_fixed() {
  GSetSpec s;
  s.group = {{2}};
  s.orbit_stabs = {{0}, {0, 1}};
  return s;
}

}  // namespace

TEST_CASE("group arithmetic") {
  AbelianGroup g{{2, 3}};
  CHECK(g.order() == 6);
  CHECK(g.add(g.from_tuple({1, 2}), g.from_tuple({1, 1})) == g.from_tuple({0, 0}));
  CHECK(g.neg(g.from_tuple({1, 2})) == g.from_tuple({1, 1}));
  CHECK(subgroup_closure(g, {g.from_tuple({0, 1})}).size() == 3);
}

TEST_CASE("G-set description parsing round trip") {
  GSetSpec s;
  s.group = {{2, 2}};
  s.orbit_stabs = {subgroup_closure(s.group, {}),
                   subgroup_closure(s.group, {s.group.from_tuple({1, 0})})};
  GSetSpec t = parse_gset(format_gset(s));
  CHECK(t.group.moduli == s.group.moduli);
  CHECK(t.orbit_stabs == s.orbit_stabs);
}

TEST_CASE("endomorphism counts") {
  CHECK(enumerate_end(z2_free()).size() == 2);
  CHECK(enumerate_end(z2_free_plus_fixed()).size() == 3);
  // trivial group: End = T_n
  GSetSpec triv;
  triv.group = {{1}};
  triv.orbit_stabs = {{0}, {0}, {0}};
  CHECK(enumerate_end(triv).size() == 27);
  GSetRealization real = realize_end(triv);
  TransformationRealization t3 = realize(enumerate_tn(3));
  ConjugacyEngine a(real.table), b(t3.table);
  CHECK(a.classes(Relation::N).num_classes == b.classes(Relation::N).num_classes);
}

TEST_CASE("stabilizers never shrink along an endomorphism") {
  GSetSpec s;
  s.group = {{2, 2}};
  s.orbit_stabs = {subgroup_closure(s.group, {}),
                   subgroup_closure(s.group, {s.group.from_tuple({1, 0})})};
  for (auto& f : enumerate_end(s))
    for (int o = 0; o < s.num_orbits(); ++o) {
      const auto& from = s.orbit_stabs[o];
      const auto& to = s.orbit_stabs[f.image[o].first];
      CHECK(std::includes(to.begin(), to.end(), from.begin(), from.end()));
    }
}

TEST_CASE("trim traces") {
  // automorphisms keep the whole labelled graph
  GSetSpec s = z2_free();
  GEndomorphism identity{{{0, 0}}};
  LabeledOrbitGraph t = g_trim(s, identity);
  CHECK(t.orbits.size() == 1);
  CHECK(t.label[0] == 0);
  GEndomorphism twist{{{0, 1}}};
  CHECK(g_trim(s, twist).label[0] == 1);
  // two free orbits collapsing onto the second one
  GSetSpec s2;
  s2.group = {{2}};
  s2.orbit_stabs = {{0}, {0}};
  GEndomorphism both_to_second{{{1, 0}, {1, 0}}};
  LabeledOrbitGraph t2 = g_trim(s2, both_to_second);
  CHECK(t2.orbits == std::vector<int>{1});
  // free orbit into the fixed point: the free orbit is dominated and removed
  GSetSpec s3 = z2_free_plus_fixed();
  GEndomorphism to_fixed{{{1, 0}, {1, 0}}};
  LabeledOrbitGraph t3 = g_trim(s3, to_fixed);
  CHECK(t3.orbits == std::vector<int>{1});
}

TEST_CASE("swap against twisted swap on two free orbits") {
  GSetSpec s;
  s.group = {{2}};
  s.orbit_stabs = {{0}, {0}};
  GEndomorphism swap{{{1, 0}, {0, 0}}};
  GEndomorphism twisted{{{1, 0}, {0, 1}}};
  CHECK_FALSE(conj_n_gset(s, swap, twisted));
  GSetRealization real = realize_end(s);
  ConjugacyEngine eng(real.table);
  CHECK_FALSE(eng.decide(Relation::N, real.index_of(swap), real.index_of(twisted)).has_value());
  CHECK(conj_n_gset(s, swap, swap));
}

TEST_CASE("constant maps to the fixed point are conjugate") {
  GSetSpec s = z2_free_plus_fixed();
  // both orbits map into the fixed orbit
  GEndomorphism f{{{1, 0}, {1, 0}}};
  GEndomorphism g = f;
  CHECK(conj_n_gset(s, f, g));
}

TEST_CASE("the composition convention matches the realization") {
  GSetSpec s = z2_free_plus_fixed();
  GSetRealization real = realize_end(s);
  for (auto& f : real.elems)
    for (auto& g : real.elems) {
      int i = real.index_of(f), j = real.index_of(g);
      CHECK(real.table.product(i, j) == real.index_of(compose_end(s, f, g)));
    }
}
