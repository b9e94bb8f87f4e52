// transform.hpp
// Partial transformations of {1..n}, their functional digraphs with prune
// and trim, a canonical form for functional digraphs, and fast natural
// conjugacy deciders for the classical transformation monoids: P_n, T_n,
// I_n, injective and surjective full maps, T(X,Y), O_n and OI_n.  Also
// conjugacy by permutation (extended digraphs) and linear conjugacy.
//
// Points are 0-based internally; the `[a1,...,an]` literal format is
// 1-based with `-` for undefined.

#ifndef CONJLAB_TRANSFORM_HPP
#define CONJLAB_TRANSFORM_HPP

#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {

class PartialMap {
 public:
  PartialMap() = default;
  PartialMap(int n, std::vector<int> img);

  static PartialMap parse(const std::string& literal);
  static PartialMap identity(int n);
  static PartialMap empty(int n);

  int n() const { return n_; }
  bool defined(int x) const { return img_[x] >= 0; }
  int apply(int x) const { return img_[x]; }  // -1 when undefined
  const std::vector<int>& img() const { return img_; }

  bool full() const;
  bool injective() const;
  bool surjective() const;
  bool order_preserving() const;

  std::vector<int> dom() const;
  std::vector<int> ima() const;
  std::vector<int> span() const;
  int rank() const;

  // x(fg) = (xf)g: apply this first, then rhs.
  PartialMap compose(const PartialMap& rhs) const;
  PartialMap power(int k) const;

  std::string str() const;  // 1-based literal

  bool operator==(const PartialMap& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator<(const PartialMap& o) const { return img_ < o.img_; }

 private:
  int n_ = 0;
  std::vector<int> img_;
};

// Functional digraph on a subset of {0..n-1}: out-degree <= 1.
struct FunctionalDigraph {
  int n = 0;
  std::vector<char> present;  // vertex set
  std::vector<int> out;       // out[x] = successor, -1 if none or absent

  int vertex_count() const;
  bool has_edge(int x, int y) const {
    return x >= 0 && x < n && present[x] && out[x] == y;
  }
  std::vector<int> vertices() const;
  std::vector<char> initial() const;        // no in-edges
  std::vector<char> terminal() const;       // no out-edges
  std::vector<char> bottom_initial() const; // initial, all co-preimages initial
  bool operator==(const FunctionalDigraph& o) const {
    return n == o.n && present == o.present && out == o.out;
  }
};

// Digraph on span(alpha).
FunctionalDigraph digraph(const PartialMap& alpha);
// Digraph on all of {0..n-1}, with points outside the span isolated.
FunctionalDigraph extended_digraph(const PartialMap& alpha);

// Remove all initial vertices (single pass; unique).
FunctionalDigraph prune(const FunctionalDigraph& g);
// Keep exactly one vertex of each initial bundle, drop all other initial
// vertices (unique up to isomorphism).
FunctionalDigraph trim(const FunctionalDigraph& g);

// Canonical encoding: equal strings iff the digraphs are isomorphic.
// Components are rho-shapes or in-trees; tree codes are sorted child
// concatenations, cycle codes are rotated to the lexicographic minimum,
// component codes are sorted.
std::string canonical_form(const FunctionalDigraph& g);
bool iso_digraph(const FunctionalDigraph& a, const FunctionalDigraph& b);

// --- natural conjugacy deciders ---------------------------------------------

// P_n and T_n: prune isomorphism.
bool conj_n_full(const PartialMap& a, const PartialMap& b);
// I_n (injective partial) and injective or surjective full maps: whole
// digraph isomorphism.
bool conj_n_injective(const PartialMap& a, const PartialMap& b);
bool conj_n_surjective(const PartialMap& a, const PartialMap& b);
// T(X,Y): images inside Y (0-based set).
bool conj_n_txy(const PartialMap& a, const PartialMap& b, const std::vector<int>& y);
// O_n: order-preserving full maps; order-relabelled prune equality.
bool conj_n_on(const PartialMap& a, const PartialMap& b);
// The relabelling core of the O_n decider, without the membership checks.
bool prune_relabel_equal(const PartialMap& a, const PartialMap& b);
// OI_n: order-preserving injective partial maps; order-relabelled whole
// digraph equality.
bool conj_n_oin(const PartialMap& a, const PartialMap& b);
// The relabelling core of the OI_n decider, without the membership checks:
// equal span sizes and the order isomorphism between the spans carries the
// digraph of a onto the digraph of b.
bool span_relabel_equal(const PartialMap& a, const PartialMap& b);
// All members of the OI_n class of a (by substituting every k-subchain).
std::vector<PartialMap> class_oin(const PartialMap& a);

// Conjugacy by permutation: isomorphism of extended digraphs.
bool conj_by_permutation(const PartialMap& a, const PartialMap& b);

// Linear conjugacy.
bool conj_lin_tn(const PartialMap& a, const PartialMap& b);
bool conj_lin_pn(const PartialMap& a, const PartialMap& b);
bool conj_lin_in(const PartialMap& a, const PartialMap& b);

// --- enumeration and Cayley realizations --------------------------------------

std::vector<PartialMap> enumerate_tn(int n);
std::vector<PartialMap> enumerate_pn(int n);
std::vector<PartialMap> enumerate_in(int n);
std::vector<PartialMap> enumerate_on(int n);
std::vector<PartialMap> enumerate_oin(int n);
std::vector<PartialMap> enumerate_txy(int n, const std::vector<int>& y);

struct TransformationRealization {
  CayleyTable table;
  std::vector<PartialMap> elems;

  int index_of(const PartialMap& m) const;
};

// Cayley table under left-to-right composition.  The element list must be
// closed under composition.
TransformationRealization realize(std::vector<PartialMap> elems);

}  // namespace conjlab

#endif  // CONJLAB_TRANSFORM_HPP
