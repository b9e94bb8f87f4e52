// gset.hpp
// Finite G-sets for abelian G: orbits given by point stabilizers,
// enumeration of the equivariant endomorphism monoid End_G(X), the
// labelled orbit-graph trim, and the natural-conjugacy decider based on
// tag- and label-preserving trim isomorphism.
//
// In this module transformations compose right to left: (f.g)(x) = f(g(x)).

#ifndef CONJLAB_GSET_HPP
#define CONJLAB_GSET_HPP

#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {

// G = Z_{m1} x ... x Z_{mk}; elements are mixed-radix indices.
struct AbelianGroup {
  std::vector<int> moduli;

  int order() const;
  int add(int a, int b) const;
  int neg(int a) const;
  std::vector<int> tuple(int a) const;
  int from_tuple(const std::vector<int>& t) const;
  std::string tuple_str(int a) const;
};

// Closure of a generating set as a sorted element list.
std::vector<int> subgroup_closure(const AbelianGroup& g, std::vector<int> gens);

struct GSetSpec {
  AbelianGroup group;
  // per orbit: the point stabilizer as a sorted element set (must be a
  // subgroup).  Orbit i has group.order()/stab.size() points, identified
  // with cosets of the stabilizer.
  std::vector<std::vector<int>> orbit_stabs;

  int num_orbits() const { return int(orbit_stabs.size()); }
  int orbit_size(int o) const;
  int total_points() const;
  // canonical coset representative (least element of a + H_o)
  int coset_rep(int o, int a) const;
};

GSetSpec parse_gset(const std::string& text);
std::string format_gset(const GSetSpec& spec);

// An equivariant endomorphism: per orbit, the image (target orbit, coset
// representative) of the orbit's base point.
struct GEndomorphism {
  std::vector<std::pair<int, int>> image;

  bool operator==(const GEndomorphism& o) const { return image == o.image; }
  bool operator<(const GEndomorphism& o) const { return image < o.image; }
};

// All equivariant endomorphisms (stabilizers may only grow along the map).
std::vector<GEndomorphism> enumerate_end(const GSetSpec& spec, size_t bound = 100000);

// (f.g): apply g first.
GEndomorphism compose_end(const GSetSpec& spec, const GEndomorphism& f, const GEndomorphism& g);

std::string end_str(const GSetSpec& spec, const GEndomorphism& f);

// Labelled orbit graph after the trim procedure: the kept orbits with their
// stabilizer tags, out-edges, and cycle labels (coset representative of the
// returning group element; -1 off cycles).
struct LabeledOrbitGraph {
  std::vector<int> orbits;             // kept orbit indices
  std::vector<int> out;                // per kept orbit: target orbit index
  std::vector<std::vector<int>> stab;  // per kept orbit: stabilizer element set
  std::vector<int> label;              // per kept orbit: coset rep or -1
};

LabeledOrbitGraph g_trim(const GSetSpec& spec, const GEndomorphism& f);

// Existence of a digraph isomorphism between the trims that preserves
// stabilizer tags and cycle labels.
bool conj_n_gset(const GSetSpec& spec, const GEndomorphism& f1, const GEndomorphism& f2);

struct GSetRealization {
  CayleyTable table;  // product(i, j) = elems[i] composed after elems[j]
  std::vector<GEndomorphism> elems;

  int index_of(const GEndomorphism& f) const;
};

GSetRealization realize_end(const GSetSpec& spec, size_t bound = 3000);

}  // namespace conjlab

#endif  // CONJLAB_GSET_HPP
