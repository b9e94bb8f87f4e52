// cayley.hpp
// Finite semigroups as explicit multiplication tables, with Green's
// relations, the natural partial order, epigroup structure (index,
// omega power, pseudo-inverse), and the standard constructors
// (adjoined identity, subsemigroup, centralizer, units group,
// Rees matrix semigroups, direct products).
//
// Elements are integer indices 0..order-1.  Labels are display-only.

#ifndef CONJLAB_CAYLEY_HPP
#define CONJLAB_CAYLEY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjlab {

enum class Err {
  NonAssociative,
  IndexOutOfRange,
  AllZeroRowOrColumn,
  RelationUnsupported,
  InvalidWitness,
  NotInjective,
  NotSurjective,
  NotOrderPreserving,
  ImageNotInY,
  SizeMismatch,
  BoundExceeded,
  ParseError,
  BadInput,
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class CayleyTable {
 public:
  CayleyTable() = default;

  // Validating constructor: checks shape, entry range and associativity
  // (exhaustive, order^3).  Identity and zero are auto-detected.
  static CayleyTable build(const std::vector<std::vector<int>>& raw,
                           std::vector<std::string> labels = {});

  // Constructor for tables produced by constructions that are associative
  // by design (function composition, diagram gluing, ...).  Skips the
  // order^3 check; still detects identity/zero.
  static CayleyTable trusted(int order, std::vector<uint16_t> flat,
                             std::vector<std::string> labels = {});

  int order() const { return order_; }
  int product(int a, int b) const { return table_[size_t(a) * order_ + b]; }
  const uint16_t* row(int a) const { return table_.data() + size_t(a) * order_; }

  std::optional<int> identity() const {
    return identity_ < 0 ? std::nullopt : std::optional<int>(identity_);
  }
  std::optional<int> zero() const {
    return zero_ < 0 ? std::nullopt : std::optional<int>(zero_);
  }
  bool is_monoid() const { return identity_ >= 0; }

  std::string label(int a) const;
  void set_label(int a, std::string s);
  bool has_labels() const { return !labels_.empty(); }

  // a^k for k >= 1.
  int power(int a, long long k) const;

  bool is_idempotent(int a) const { return product(a, a) == a; }
  std::vector<int> idempotents() const;

  bool operator==(const CayleyTable& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  int order_ = 0;
  std::vector<uint16_t> table_;
  int identity_ = -1;
  int zero_ = -1;
  std::vector<std::string> labels_;

  void detect_special();
};

// ---------------------------------------------------------------------------
// Green's relations.  Partitions are stored as class ids per element,
// normalized so that ids appear in order of least member.
struct GreenData {
  std::vector<int> r, l, j, h, d;
  int num_r = 0, num_l = 0, num_j = 0, num_h = 0, num_d = 0;

  bool r_related(int a, int b) const { return r[a] == r[b]; }
  bool l_related(int a, int b) const { return l[a] == l[b]; }
  bool j_related(int a, int b) const { return j[a] == j[b]; }
  bool h_related(int a, int b) const { return h[a] == h[b]; }
  bool d_related(int a, int b) const { return d[a] == d[b]; }
};

GreenData green_relations(const CayleyTable& s);

// Natural (Mitsch) partial order:  a <= b  iff  sa = a = sb and at = a = bt
// for some s,t in S^1.  Returned as a boolean matrix leq[a*n+b].
std::vector<char> natural_partial_order(const CayleyTable& s);

// ---------------------------------------------------------------------------
// Epigroup structure.  Every finite semigroup is an epigroup: some power of
// each element lies in a subgroup.  For element a: `index` is the least n
// such that a^n lies in a subgroup, `omega` is the identity of that group,
// `pseudo_inverse` is the group inverse of a^(omega+1), and `omega_plus_one`
// is omega * a.
struct EpigroupData {
  struct Elem {
    int index = 0;
    int omega = -1;
    int pseudo_inverse = -1;
    int omega_plus_one = -1;
  };
  std::vector<Elem> at;
};

EpigroupData epigroup_data(const CayleyTable& s);

// ---------------------------------------------------------------------------
// Constructors.

// Result of carving a subsemigroup out of a parent table: the closed
// subtable plus the index translation back into the parent.
struct Subsemigroup {
  CayleyTable table;
  std::vector<int> to_parent;
};

// S^1: the table itself when S is a monoid, otherwise S with a fresh
// identity adjoined as the last index.
CayleyTable adjoin_identity(const CayleyTable& s);

Subsemigroup subsemigroup(const CayleyTable& s, const std::vector<int>& seed);
Subsemigroup centralizer(const CayleyTable& s, int a);
Subsemigroup units_group(const CayleyTable& s);

bool is_inverse_semigroup(const CayleyTable& s);
// For an inverse semigroup: the unique inverse of each element.
std::vector<int> inverse_map(const CayleyTable& s);

bool is_regular(const CayleyTable& s);
bool is_completely_regular(const CayleyTable& s);
bool is_band(const CayleyTable& s);
bool is_commutative(const CayleyTable& s);
bool is_group(const CayleyTable& s);

// A Lambda x I sandwich matrix over a group, entries -1 meaning zero.
struct ReesMatrixSpec {
  CayleyTable group;
  int i_size = 0;
  int lambda_size = 0;
  std::vector<int> sandwich;  // row-major, lambda_size rows, i_size cols

  int entry(int lam, int i) const { return sandwich[size_t(lam) * i_size + i]; }
};

// Rees matrix semigroup on I x Gamma x Lambda, optionally with a zero
// adjoined (index 0 when present).  Triples are linearized row-major in
// (i, g, lambda) order after the optional zero.  With a zero, the sandwich
// matrix must have no all-zero row or column.
CayleyTable rees_matrix_semigroup(const ReesMatrixSpec& spec, bool with_zero);

// Index of triple (i, g, lam) in the table built above.
int rees_index(const ReesMatrixSpec& spec, bool with_zero, int i, int g, int lam);

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

// Cyclic group Z_n as a Cayley table, and Z_{m1} x ... x Z_{mk}.
CayleyTable cyclic_group(int n);
CayleyTable abelian_group_table(const std::vector<int>& moduli);
CayleyTable symmetric_group_table(int n);

// The epigroup on {0,1,...,n} with truncated addition: x*y = x+y if
// x+y <= n, else 0.
CayleyTable truncated_addition(int n);

// ---------------------------------------------------------------------------
// Text format.  First line `n`, then n lines of n space-separated 0-based
// indices, then optional `identity=<i>`, `zero=<i>`, `label <i> <text>`.
// Lines starting with `#` are comments.  This is the fixture format used
// across the repository.
CayleyTable parse_cayley(std::istream& in);
CayleyTable parse_cayley_string(const std::string& text);
std::string format_cayley(const CayleyTable& s);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of all semigroups of a given order up to
// isomorphism (backtracking over tables with associativity pruning,
// canonical-form dedup).  Intended for order <= 4.
std::vector<CayleyTable> all_semigroups_up_to_iso(int order);

}  // namespace conjlab

#endif  // CONJLAB_CAYLEY_HPP
