#include "conjlab/cayley.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace conjlab {

namespace {

constexpr int kMaxOrder = 60000;

void check_order(long long n) {
  if (n <= 0 || n > kMaxOrder)
    throw Error(Err::BadInput, "table order out of supported range: " + std::to_string(n));
}

}  // namespace

void CayleyTable::detect_special() {
  identity_ = -1;
  zero_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool id = true;
    for (int a = 0; a < order_ && id; ++a)
      id = product(e, a) == a && product(a, e) == a;
    if (id) {
      identity_ = e;
      break;
    }
  }
  for (int z = 0; z < order_; ++z) {
    bool zz = true;
    for (int a = 0; a < order_ && zz; ++a)
      zz = product(z, a) == z && product(a, z) == z;
    if (zz) {
      zero_ = z;
      break;
    }
  }
}

CayleyTable CayleyTable::build(const std::vector<std::vector<int>>& raw,
                               std::vector<std::string> labels) {
  const int n = int(raw.size());
  check_order(n);
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    if (int(raw[a].size()) != n)
      throw Error(Err::BadInput, "table is not square at row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int v = raw[a][b];
      if (v < 0 || v >= n)
        throw Error(Err::IndexOutOfRange,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) +
                        ") = " + std::to_string(v) + " out of range");
      flat[size_t(a) * n + b] = uint16_t(v);
    }
  }
  // Exhaustive associativity check.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = flat[size_t(a) * n + b];
      for (int c = 0; c < n; ++c) {
        const int bc = flat[size_t(b) * n + c];
        if (flat[size_t(ab) * n + c] != flat[size_t(a) * n + bc])
          throw Error(Err::NonAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " != " + std::to_string(a) + "*(" +
                          std::to_string(b) + "*" + std::to_string(c) + ")");
      }
    }
  CayleyTable t;
  t.order_ = n;
  t.table_ = std::move(flat);
  t.labels_ = std::move(labels);
  if (!t.labels_.empty() && int(t.labels_.size()) != n)
    throw Error(Err::BadInput, "label count does not match order");
  t.detect_special();
  return t;
}

CayleyTable CayleyTable::trusted(int order, std::vector<uint16_t> flat,
                                 std::vector<std::string> labels) {
  check_order(order);
  if (flat.size() != size_t(order) * order)
    throw Error(Err::BadInput, "flat table has wrong size");
  CayleyTable t;
  t.order_ = order;
  t.table_ = std::move(flat);
  t.labels_ = std::move(labels);
  t.detect_special();
  return t;
}

std::string CayleyTable::label(int a) const {
  if (a < 0 || a >= order_) throw Error(Err::IndexOutOfRange, "label index");
  if (!labels_.empty() && !labels_[a].empty()) return labels_[a];
  return std::to_string(a);
}

void CayleyTable::set_label(int a, std::string s) {
  if (a < 0 || a >= order_) throw Error(Err::IndexOutOfRange, "label index");
  if (labels_.empty()) labels_.resize(order_);
  labels_[a] = std::move(s);
}

int CayleyTable::power(int a, long long k) const {
  if (k < 1) throw Error(Err::BadInput, "power exponent must be >= 1");
  int acc = a;
  for (long long i = 1; i < k; ++i) acc = product(acc, a);
  return acc;
}

std::vector<int> CayleyTable::idempotents() const {
  std::vector<int> out;
  for (int a = 0; a < order_; ++a)
    if (is_idempotent(a)) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Green's relations via strongly connected components of one-sided Cayley
// graphs: b is reachable from a in the right graph iff b in aS^1, so the
// SCCs are exactly the R-classes; dually for L.  J uses both edge sets at
// once, D is the join of R and L.

namespace {

// Iterative Tarjan on a graph given by an edge callback.
// next(v) must enumerate out-neighbours of v via repeated calls.
template <typename OutEdges>
std::pair<std::vector<int>, int> scc_partition(int n, OutEdges&& out) {
  std::vector<int> comp(n, -1), low(n), num(n, -1), stk, frame_v, frame_e;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comps = 0;
  for (int s = 0; s < n; ++s) {
    if (num[s] >= 0) continue;
    frame_v.assign(1, s);
    frame_e.assign(1, 0);
    num[s] = low[s] = counter++;
    stk.push_back(s);
    on_stack[s] = 1;
    while (!frame_v.empty()) {
      int v = frame_v.back();
      int deg = out.degree(v);
      if (frame_e.back() < deg) {
        int w = out.neighbour(v, frame_e.back()++);
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on_stack[w] = 1;
          frame_v.push_back(w);
          frame_e.push_back(0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        frame_v.pop_back();
        frame_e.pop_back();
        if (!frame_v.empty()) {
          int p = frame_v.back();
          low[p] = std::min(low[p], low[v]);
        }
      }
    }
  }
  return {std::move(comp), comps};
}

std::vector<int> normalize_partition(std::vector<int> part, int* count) {
  std::vector<int> remap(part.size(), -1);
  int next = 0;
  for (int& c : part) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
  if (count) *count = next;
  return part;
}

struct RightEdges {
  const CayleyTable& s;
  int degree(int) const { return s.order(); }
  int neighbour(int v, int i) const { return s.product(v, i); }
};
struct LeftEdges {
  const CayleyTable& s;
  int degree(int) const { return s.order(); }
  int neighbour(int v, int i) const { return s.product(i, v); }
};
struct TwoSidedEdges {
  const CayleyTable& s;
  int degree(int) const { return 2 * s.order(); }
  int neighbour(int v, int i) const {
    int n = s.order();
    return i < n ? s.product(v, i) : s.product(i - n, v);
  }
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<int> partition(int* count) {
    std::vector<int> part(parent.size());
    for (size_t i = 0; i < parent.size(); ++i) part[i] = find(int(i));
    return normalize_partition(std::move(part), count);
  }
};

}  // namespace

GreenData green_relations(const CayleyTable& s) {
  const int n = s.order();
  GreenData g;
  auto [rp, rn] = scc_partition(n, RightEdges{s});
  auto [lp, ln] = scc_partition(n, LeftEdges{s});
  auto [jp, jn] = scc_partition(n, TwoSidedEdges{s});
  g.r = normalize_partition(std::move(rp), &g.num_r);
  g.l = normalize_partition(std::move(lp), &g.num_l);
  g.j = normalize_partition(std::move(jp), &g.num_j);
  // H = R meet L.
  {
    std::map<std::pair<int, int>, int> ids;
    g.h.resize(n);
    for (int a = 0; a < n; ++a) {
      auto key = std::make_pair(g.r[a], g.l[a]);
      auto [it, fresh] = ids.emplace(key, int(ids.size()));
      (void)fresh;
      g.h[a] = it->second;
    }
    g.h = normalize_partition(std::move(g.h), &g.num_h);
  }
  // D = join of R and L.
  {
    Dsu dsu(n);
    std::vector<int> r_rep(g.num_r, -1), l_rep(g.num_l, -1);
    for (int a = 0; a < n; ++a) {
      if (r_rep[g.r[a]] < 0) r_rep[g.r[a]] = a; else dsu.unite(r_rep[g.r[a]], a);
      if (l_rep[g.l[a]] < 0) l_rep[g.l[a]] = a; else dsu.unite(l_rep[g.l[a]], a);
    }
    g.d = dsu.partition(&g.num_d);
  }
  return g;
}

std::vector<char> natural_partial_order(const CayleyTable& s) {
  const int n = s.order();
  std::vector<char> leq(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) {
        leq[size_t(a) * n + b] = 1;  // s = t = 1 in S^1
        continue;
      }
      bool left = false;
      for (int x = 0; x < n && !left; ++x)
        left = s.product(x, a) == a && s.product(x, b) == a;
      if (!left) continue;
      bool right = false;
      for (int t = 0; t < n && !right; ++t)
        right = s.product(a, t) == a && s.product(b, t) == a;
      if (right) leq[size_t(a) * n + b] = 1;
    }
  }
  return leq;
}

EpigroupData epigroup_data(const CayleyTable& s) {
  const int n = s.order();
  EpigroupData out;
  out.at.resize(n);
  std::vector<int> pos(n);
  for (int a = 0; a < n; ++a) {
    // Walk the power sequence a, a^2, ... until it repeats.  The repeating
    // part (the cycle) is a cyclic group; the least exponent whose power
    // lies on the cycle is the index of a.
    std::fill(pos.begin(), pos.end(), -1);
    std::vector<int> seq;
    int x = a;
    while (pos[x] < 0) {
      pos[x] = int(seq.size());
      seq.push_back(x);
      x = s.product(x, a);
    }
    const int cycle_start = pos[x];             // 0-based position of a^(index)
    const int index = cycle_start + 1;          // exponent of first cycle power
    const int period = int(seq.size()) - cycle_start;
    int omega = -1;
    for (int i = cycle_start; i < int(seq.size()); ++i)
      if (s.is_idempotent(seq[i])) {
        omega = seq[i];
        break;
      }
    if (omega < 0) throw Error(Err::BadInput, "power cycle without idempotent");
    const int omega_plus_one = s.product(omega, a);
    // Pseudo-inverse: the inverse of a^(omega+1) inside the cycle group.
    int pinv = -1;
    for (int i = cycle_start; i < int(seq.size()); ++i)
      if (s.product(seq[i], omega_plus_one) == omega) {
        pinv = seq[i];
        break;
      }
    if (pinv < 0) throw Error(Err::BadInput, "pseudo-inverse not found");
    out.at[a] = {index, omega, pinv, omega_plus_one};
    (void)period;
  }
  return out;
}

// ---------------------------------------------------------------------------

CayleyTable adjoin_identity(const CayleyTable& s) {
  if (s.is_monoid()) return s;
  const int n = s.order();
  const int m = n + 1;
  std::vector<uint16_t> flat(size_t(m) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[size_t(a) * m + b] = uint16_t(s.product(a, b));
  for (int a = 0; a < m; ++a) {
    flat[size_t(a) * m + n] = uint16_t(a);
    flat[size_t(n) * m + a] = uint16_t(a);
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels.resize(m);
    for (int a = 0; a < n; ++a) labels[a] = s.label(a);
    labels[n] = "1";
  }
  return CayleyTable::trusted(m, std::move(flat), std::move(labels));
}

Subsemigroup subsemigroup(const CayleyTable& s, const std::vector<int>& seed) {
  std::vector<int> members;
  std::vector<char> in(s.order(), 0);
  for (int x : seed) {
    if (x < 0 || x >= s.order()) throw Error(Err::IndexOutOfRange, "seed element");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (int p : {s.product(members[i], members[j]), s.product(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
  std::sort(members.begin(), members.end());
  std::vector<int> local(s.order(), -1);
  for (size_t i = 0; i < members.size(); ++i) local[members[i]] = int(i);
  const int m = int(members.size());
  std::vector<uint16_t> flat(size_t(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = s.label(members[i]);
    for (int j = 0; j < m; ++j)
      flat[size_t(i) * m + j] = uint16_t(local[s.product(members[i], members[j])]);
  }
  return {CayleyTable::trusted(m, std::move(flat), std::move(labels)), std::move(members)};
}

Subsemigroup centralizer(const CayleyTable& s, int a) {
  if (a < 0 || a >= s.order()) throw Error(Err::IndexOutOfRange, "centralizer element");
  std::vector<int> members;
  for (int x = 0; x < s.order(); ++x)
    if (s.product(a, x) == s.product(x, a)) members.push_back(x);
  return subsemigroup(s, members);
}

Subsemigroup units_group(const CayleyTable& s) {
  CayleyTable s1 = adjoin_identity(s);
  const int one = *s1.identity();
  std::vector<int> units;
  for (int g = 0; g < s1.order(); ++g)
    for (int h = 0; h < s1.order(); ++h)
      if (s1.product(g, h) == one && s1.product(h, g) == one) {
        units.push_back(g);
        break;
      }
  return subsemigroup(s1, units);
}

bool is_inverse_semigroup(const CayleyTable& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b)
        ++count;
    if (count != 1) return false;
  }
  return true;
}

std::vector<int> inverse_map(const CayleyTable& s) {
  const int n = s.order();
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.product(s.product(a, b), a) == a && s.product(s.product(b, a), b) == b) {
        if (inv[a] >= 0)
          throw Error(Err::RelationUnsupported, "element has multiple inverses");
        inv[a] = b;
      }
  for (int a = 0; a < n; ++a)
    if (inv[a] < 0) throw Error(Err::RelationUnsupported, "element has no inverse");
  return inv;
}

bool is_regular(const CayleyTable& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    bool ok = false;
    for (int b = 0; b < n && !ok; ++b)
      ok = s.product(s.product(a, b), a) == a;
    if (!ok) return false;
  }
  return true;
}

bool is_completely_regular(const CayleyTable& s) {
  EpigroupData e = epigroup_data(s);
  for (auto& x : e.at)
    if (x.index != 1) return false;
  return true;
}

bool is_band(const CayleyTable& s) {
  for (int a = 0; a < s.order(); ++a)
    if (!s.is_idempotent(a)) return false;
  return true;
}

bool is_commutative(const CayleyTable& s) {
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < a; ++b)
      if (s.product(a, b) != s.product(b, a)) return false;
  return true;
}

bool is_group(const CayleyTable& s) {
  if (!s.is_monoid()) return false;
  const int one = *s.identity();
  for (int a = 0; a < s.order(); ++a) {
    bool inv = false;
    for (int b = 0; b < s.order() && !inv; ++b)
      inv = s.product(a, b) == one && s.product(b, a) == one;
    if (!inv) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

CayleyTable rees_matrix_semigroup(const ReesMatrixSpec& spec, bool with_zero) {
  const CayleyTable& g = spec.group;
  if (!is_group(g)) throw Error(Err::BadInput, "Rees matrix spec requires a group");
  const int gi = spec.i_size, gl = spec.lambda_size, go = g.order();
  if (gi <= 0 || gl <= 0) throw Error(Err::BadInput, "Rees matrix sizes must be positive");
  if (int(spec.sandwich.size()) != gi * gl)
    throw Error(Err::BadInput, "sandwich matrix has wrong shape");
  for (int v : spec.sandwich) {
    if (v < -1 || v >= go) throw Error(Err::IndexOutOfRange, "sandwich entry");
    if (!with_zero && v < 0)
      throw Error(Err::BadInput, "zero sandwich entry without zero element");
  }
  if (with_zero) {
    for (int lam = 0; lam < gl; ++lam) {
      bool nonzero = false;
      for (int i = 0; i < gi; ++i) nonzero |= spec.entry(lam, i) >= 0;
      if (!nonzero) throw Error(Err::AllZeroRowOrColumn, "all-zero sandwich row");
    }
    for (int i = 0; i < gi; ++i) {
      bool nonzero = false;
      for (int lam = 0; lam < gl; ++lam) nonzero |= spec.entry(lam, i) >= 0;
      if (!nonzero) throw Error(Err::AllZeroRowOrColumn, "all-zero sandwich column");
    }
  }
  const int base = with_zero ? 1 : 0;
  const long long total = base + (long long)gi * go * gl;
  check_order(total);
  const int n = int(total);
  auto idx = [&](int i, int a, int lam) { return base + (i * go + a) * gl + lam; };
  std::vector<uint16_t> flat(size_t(n) * n, 0);
  std::vector<std::string> labels(n);
  if (with_zero) labels[0] = "0";
  for (int i = 0; i < gi; ++i)
    for (int a = 0; a < go; ++a)
      for (int lam = 0; lam < gl; ++lam)
        labels[idx(i, a, lam)] =
            "(" + std::to_string(i + 1) + "," + g.label(a) + "," + std::to_string(lam + 1) + ")";
  for (int i = 0; i < gi; ++i)
    for (int a = 0; a < go; ++a)
      for (int lam = 0; lam < gl; ++lam) {
        const int left = idx(i, a, lam);
        for (int j = 0; j < gi; ++j)
          for (int b = 0; b < go; ++b)
            for (int mu = 0; mu < gl; ++mu) {
              const int right = idx(j, b, mu);
              const int p = spec.entry(lam, j);
              uint16_t prod = 0;
              if (p >= 0)
                prod = uint16_t(idx(i, g.product(g.product(a, p), b), mu));
              else if (!with_zero)
                throw Error(Err::BadInput, "zero product without zero element");
              flat[size_t(left) * n + right] = prod;
            }
      }
  return CayleyTable::trusted(n, std::move(flat), std::move(labels));
}

int rees_index(const ReesMatrixSpec& spec, bool with_zero, int i, int g, int lam) {
  const int base = with_zero ? 1 : 0;
  return base + (i * spec.group.order() + g) * spec.lambda_size + lam;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const long long total = (long long)a.order() * b.order();
  check_order(total);
  const int n = int(total);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          flat[size_t(idx(x1, y1)) * n + idx(x2, y2)] =
              uint16_t(idx(a.product(x1, x2), b.product(y1, y2)));
  return CayleyTable::trusted(n, std::move(flat));
}

CayleyTable cyclic_group(int n) { return abelian_group_table({n}); }

CayleyTable abelian_group_table(const std::vector<int>& moduli) {
  long long total = 1;
  for (int m : moduli) {
    if (m <= 0) throw Error(Err::BadInput, "modulus must be positive");
    total *= m;
  }
  check_order(total);
  const int n = int(total);
  auto add = [&](int a, int b) {
    int out = 0, mult = 1;
    for (int k = int(moduli.size()) - 1; k >= 0; --k) {
      int m = moduli[k];
      out += ((a + b) % m) * mult;
      a /= m;
      b /= m;
      mult *= m;
    }
    return out;
  };
  std::vector<uint16_t> flat(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[size_t(a) * n + b] = uint16_t(add(a, b));
  return CayleyTable::trusted(n, std::move(flat));
}

CayleyTable symmetric_group_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = int(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<uint16_t> flat(size_t(m) * m);
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[j][perms[i][x]];  // x(pq) = (xp)q
      flat[size_t(i) * m + j] = uint16_t(index[comp]);
    }
  return CayleyTable::trusted(m, std::move(flat));
}

CayleyTable truncated_addition(int n) {
  const int m = n + 1;
  std::vector<uint16_t> flat(size_t(m) * m, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      flat[size_t(a) * m + b] = uint16_t(a + b <= n ? a + b : 0);
  return CayleyTable::trusted(m, std::move(flat));
}

// ---------------------------------------------------------------------------

CayleyTable parse_cayley(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      size_t pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (out[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(Err::ParseError, "empty input");
  int n = 0;
  try {
    n = std::stoi(line);
  } catch (...) {
    throw Error(Err::ParseError, "expected order on first line");
  }
  check_order(n);
  std::vector<std::vector<int>> raw(n);
  for (int a = 0; a < n; ++a) {
    if (!next_line(line))
      throw Error(Err::ParseError, "missing table row " + std::to_string(a));
    std::istringstream row(line);
    int v;
    while (row >> v) raw[a].push_back(v);
    if (int(raw[a].size()) != n)
      throw Error(Err::ParseError, "row " + std::to_string(a) + " has wrong length");
  }
  int identity = -1, zero = -1;
  std::vector<std::string> labels(n);
  bool any_label = false;
  while (next_line(line)) {
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head.rfind("identity=", 0) == 0) {
      identity = std::stoi(head.substr(9));
    } else if (head.rfind("zero=", 0) == 0) {
      zero = std::stoi(head.substr(5));
    } else if (head == "label") {
      int i;
      if (!(ls >> i)) throw Error(Err::ParseError, "bad label line: " + line);
      if (i < 0 || i >= n) throw Error(Err::ParseError, "label index out of range");
      std::string text;
      std::getline(ls, text);
      size_t pos = text.find_first_not_of(" \t");
      if (pos == std::string::npos) throw Error(Err::ParseError, "empty label: " + line);
      labels[i] = text.substr(pos);
      any_label = true;
    } else {
      throw Error(Err::ParseError, "unrecognized line: " + line);
    }
  }
  CayleyTable t = CayleyTable::build(raw, any_label ? labels : std::vector<std::string>{});
  if (identity >= 0 && (!t.identity() || *t.identity() != identity))
    throw Error(Err::ParseError, "declared identity does not match table");
  if (zero >= 0 && (!t.zero() || *t.zero() != zero))
    throw Error(Err::ParseError, "declared zero does not match table");
  return t;
}

CayleyTable parse_cayley_string(const std::string& text) {
  std::istringstream in(text);
  return parse_cayley(in);
}

std::string format_cayley(const CayleyTable& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) out << (b ? " " : "") << s.product(a, b);
    out << "\n";
  }
  if (s.identity()) out << "identity=" << *s.identity() << "\n";
  if (s.zero()) out << "zero=" << *s.zero() << "\n";
  if (s.has_labels())
    for (int a = 0; a < s.order(); ++a) out << "label " << a << " " << s.label(a) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small semigroups up to isomorphism.

namespace {

// Backtracking over the n x n table in row-major order, rejecting partial
// tables that already violate associativity.
struct SemigroupSearch {
  int n;
  std::vector<int> t;  // n*n entries, -1 = unset
  std::vector<std::vector<int>> out;

  explicit SemigroupSearch(int order) : n(order), t(size_t(order) * order, -1) {}

  int get(int a, int b) const { return t[size_t(a) * n + b]; }

  bool consistent(int cell) const {
    const int a = cell / n, b = cell % n;
    // Check all associativity triples whose evaluation is now determined
    // or partially determined by (a,b).
    for (int c = 0; c < n; ++c) {
      // (a*b)*c vs a*(b*c)
      {
        int ab = get(a, b);
        int bc = get(b, c);
        if (ab >= 0 && bc >= 0) {
          int left = get(ab, c), right = get(a, bc);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
      // (c*a)*b vs c*(a*b)
      {
        int ca = get(c, a);
        int ab = get(a, b);
        if (ca >= 0 && ab >= 0) {
          int left = get(ca, b), right = get(c, ab);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
      // (a*c)*? pattern where the new cell is the outer product:
      // handled by the two cases above when cells fill in later.
      // (b from the right): (c*d)=? not involving (a,b) skipped.
    }
    // Full re-check of triples that are completely determined and involve
    // the value t[a][b] as an intermediate product.
    const int ab = get(a, b);
    for (int c = 0; c < n; ++c) {
      int cab = ab >= 0 ? get(c, a) : -1;
      (void)cab;
      // (a*b)*c
      if (ab >= 0) {
        int left = get(ab, c);
        int bc = get(b, c);
        if (left >= 0 && bc >= 0) {
          int right = get(a, bc);
          if (right >= 0 && left != right) return false;
        }
      }
    }
    return true;
  }

  void run(int cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent(cell)) run(cell + 1);
    }
    t[cell] = -1;
  }
};

std::vector<int> canonical_table(const std::vector<int>& t, int n) {
  std::vector<int> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> relab(size_t(n) * n);
  do {
    // relabel: element x becomes perm[x]; entry (perm[a],perm[b]) = perm[t[a][b]]
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relab[size_t(perm[a]) * n + perm[b]] = perm[t[size_t(a) * n + b]];
    if (best.empty() || relab < best) best = relab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<CayleyTable> all_semigroups_up_to_iso(int order) {
  if (order < 1 || order > 4)
    throw Error(Err::BoundExceeded, "semigroup enumeration supported for order <= 4");
  SemigroupSearch search(order);
  search.run(0);
  std::set<std::vector<int>> canon;
  for (auto& t : search.out) {
    // The partial pruning above is not guaranteed complete; re-verify.
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      for (int b = 0; b < order && ok; ++b)
        for (int c = 0; c < order && ok; ++c)
          ok = t[size_t(t[size_t(a) * order + b]) * order + c] ==
               t[size_t(a) * order + t[size_t(b) * order + c]];
    if (!ok) continue;
    canon.insert(canonical_table(t, order));
  }
  std::vector<CayleyTable> out;
  for (auto& t : canon) {
    std::vector<uint16_t> flat(t.begin(), t.end());
    out.push_back(CayleyTable::trusted(order, std::move(flat)));
  }
  return out;
}

}  // namespace conjlab
