// conjugacy.hpp
// Definition-level deciders and class enumerators for the conjugacy
// relations on a finite Cayley table:
//
//   G      unit-group conjugacy            ag = gb with g a unit of S^1
//   N      natural conjugacy               ag=gb, bh=ha, hag=b, gbh=a
//   P      primary conjugacy               a=uv, b=vu
//   PSTAR  transitive closure of P
//   O      two-sided intertwiner           ag=gb and bh=ha
//   C      zero-respecting refinement of O via the sets p(a)
//   W      shift-equivalence style         ag=gb, bh=ha, gh=a^m, hg=b^m
//   TR     trace conjugacy                 ag=gb, bh=ha, gh=a^w, hg=b^w
//   LIN    TR plus D-relatedness of all powers
//   I      single-conjugator conjugacy on inverse / completely regular tables
//   ISTAR  transitive closure of I
//
// All deciders work on S^1 internally and return witnesses that can be
// re-verified by pure table lookups.

#ifndef CONJLAB_CONJUGACY_HPP
#define CONJLAB_CONJUGACY_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conjlab/cayley.hpp"

namespace conjlab {

enum class Relation { G, N, P, PSTAR, O, C, W, TR, LIN, I, ISTAR };

const char* relation_name(Relation r);
std::optional<Relation> relation_from_name(const std::string& s);

struct Witness {
  enum class Kind { PairGH, Chain, SinglePower, Unit };
  Kind kind = Kind::PairGH;
  int g = -1, h = -1;                         // PairGH, Unit (g only)
  long long m = 0;                            // SinglePower
  std::vector<std::pair<int, int>> chain;     // Chain
};

struct ClassPartition {
  Relation relation;
  std::vector<int> class_of;        // class id per element
  std::vector<int> representatives; // least element per class, indexed by id
  int num_classes = 0;

  bool related(int a, int b) const { return class_of[a] == class_of[b]; }
  std::vector<std::vector<int>> classes() const;
};

enum class CompareResult { Equal, Subset, Superset, Incomparable };
const char* compare_name(CompareResult r);

// Precomputes S^1, epigroup data, units, p-sets and inverse data once, then
// answers decide/classes/compare queries.  All queries are const.
class ConjugacyEngine {
 public:
  explicit ConjugacyEngine(const CayleyTable& s);

  const CayleyTable& table() const { return s_; }
  const CayleyTable& table_s1() const { return s1_; }
  // Index of the identity of S^1 (may be the adjoined element).
  int one() const { return one_; }

  bool supports(Relation r) const;

  // Some(witness) iff related; witnesses use S^1 indices.
  std::optional<Witness> decide(Relation r, int a, int b) const;

  // Re-verify a witness by table lookups only.
  bool verify(Relation r, int a, int b, const Witness& w) const;

  ClassPartition classes(Relation r) const;

  // Pairwise boolean matrix of the relation (n*n, row-major).
  std::vector<char> relation_matrix(Relation r) const;

  std::vector<std::vector<CompareResult>> compare(const std::vector<Relation>& rels) const;

  // The mutually inverse pair dominating (g, h): any partial inner map
  // phi_{g,h} extends to phi over this pair.
  std::pair<int, int> mutually_inverse_pair(int g, int h) const;

  // Replace an N-witness by a mutually inverse pair that still conjugates
  // (g', h' with g'h'g' = g', h'g'h' = h').  Throws InvalidWitness if the
  // input does not verify.
  Witness normalize_witness(int a, int b, const Witness& w) const;

  // Membership set p(a) = {g in S^1 : for all m, ma != 0 implies (ma)g != 0},
  // with p(0) = {1}.  When S has no zero this is all of S^1.
  std::vector<char> p_set(int a) const;

  const GreenData& green() const;
  const EpigroupData& epigroup_s1() const { return epi1_; }

 private:
  CayleyTable s_;
  CayleyTable s1_;
  int n_ = 0;    // order of S
  int n1_ = 0;   // order of S^1
  int one_ = -1;
  EpigroupData epi1_;            // epigroup data of S^1
  std::vector<int> units_;       // unit elements of S^1
  mutable std::unique_ptr<GreenData> green_;  // lazy
  mutable std::vector<int> inverse_;  // unique/commuting inverses in S^1 (lazy)
  mutable int inverse_state_ = 0;     // 0 unknown, 1 inverse sgp, 2 completely regular, 3 unsupported
  // Conjugator-sequence pairs (g1..gk, gk^-1..g1^-1) for the i-closure,
  // with BFS parent links for witness reconstruction: {w, wt, parent, gen}.
  mutable std::vector<std::array<int, 4>> istar_pairs_;

  int prod(int a, int b) const { return s1_.product(a, b); }
  void ensure_inverses() const;
  void ensure_istar_pairs() const;
  std::optional<Witness> decide_n(int a, int b) const;
  std::optional<Witness> decide_p(int a, int b) const;
  std::optional<Witness> decide_o(int a, int b) const;
  std::optional<Witness> decide_c(int a, int b) const;
  std::optional<Witness> decide_w(int a, int b) const;
  std::optional<Witness> decide_tr(int a, int b) const;
  std::optional<Witness> decide_g(int a, int b) const;
  std::optional<Witness> decide_i(int a, int b) const;
  ClassPartition classes_n() const;
  ClassPartition classes_from_edges(Relation rel,
                                    const std::vector<std::pair<int, int>>& edges) const;
};

// Number of worker threads honoured by the parallel class sweeps:
// min(hardware, CONJLAB_THREADS).
int worker_count();

}  // namespace conjlab

#endif  // CONJLAB_CONJUGACY_HPP
