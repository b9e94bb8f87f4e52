#include "conjlab/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace conjlab {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::G: return "g";
    case Relation::N: return "n";
    case Relation::P: return "p";
    case Relation::PSTAR: return "pstar";
    case Relation::O: return "o";
    case Relation::C: return "c";
    case Relation::W: return "w";
    case Relation::TR: return "tr";
    case Relation::LIN: return "lin";
    case Relation::I: return "i";
    case Relation::ISTAR: return "istar";
  }
  return "?";
}

std::optional<Relation> relation_from_name(const std::string& s) {
  static const std::map<std::string, Relation> kMap = {
      {"g", Relation::G},     {"n", Relation::N},       {"p", Relation::P},
      {"pstar", Relation::PSTAR}, {"p*", Relation::PSTAR}, {"o", Relation::O},
      {"c", Relation::C},     {"w", Relation::W},       {"tr", Relation::TR},
      {"lin", Relation::LIN}, {"i", Relation::I},       {"istar", Relation::ISTAR},
      {"i*", Relation::ISTAR}};
  auto it = kMap.find(s);
  if (it == kMap.end()) return std::nullopt;
  return it->second;
}

const char* compare_name(CompareResult r) {
  switch (r) {
    case CompareResult::Equal: return "=";
    case CompareResult::Subset: return "subset";
    case CompareResult::Superset: return "superset";
    case CompareResult::Incomparable: return "incomparable";
  }
  return "?";
}

std::vector<std::vector<int>> ClassPartition::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int a = 0; a < int(class_of.size()); ++a) out[class_of[a]].push_back(a);
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("CONJLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  int hw = int(std::thread::hardware_concurrency());
  return hw < 1 ? 1 : hw;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

ClassPartition partition_from_dsu(Relation rel, Dsu& dsu, int n) {
  ClassPartition out;
  out.relation = rel;
  out.class_of.resize(n);
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    int root = dsu.find(a);
    if (remap[root] < 0) {
      remap[root] = next++;
      out.representatives.push_back(a);
    }
    out.class_of[a] = remap[root];
  }
  out.num_classes = next;
  return out;
}

}  // namespace

ConjugacyEngine::ConjugacyEngine(const CayleyTable& s)
    : s_(s), s1_(adjoin_identity(s)) {
  n_ = s_.order();
  n1_ = s1_.order();
  one_ = *s1_.identity();
  epi1_ = epigroup_data(s1_);
  const Subsemigroup units = units_group(s_);
  units_ = units.to_parent;  // indices into S^1
}

const GreenData& ConjugacyEngine::green() const {
  if (!green_) green_ = std::make_unique<GreenData>(green_relations(s_));
  return *green_;
}

bool ConjugacyEngine::supports(Relation r) const {
  if (r != Relation::I && r != Relation::ISTAR) return true;
  try {
    ensure_inverses();
    return true;
  } catch (const Error&) {
    return false;
  }
}

void ConjugacyEngine::ensure_inverses() const {
  if (inverse_state_ == 1 || inverse_state_ == 2) return;
  if (inverse_state_ == 3)
    throw Error(Err::RelationUnsupported,
                "i-conjugacy needs an inverse or completely regular semigroup");
  if (is_inverse_semigroup(s_)) {
    inverse_ = inverse_map(s_);
    inverse_.resize(n1_);
    if (n1_ > n_) inverse_[one_] = one_;
    inverse_state_ = 1;
    return;
  }
  if (is_completely_regular(s_)) {
    inverse_.assign(n1_, -1);
    for (int a = 0; a < n1_; ++a) inverse_[a] = epi1_.at[a].pseudo_inverse;
    inverse_state_ = 2;
    return;
  }
  inverse_state_ = 3;
  throw Error(Err::RelationUnsupported,
              "i-conjugacy needs an inverse or completely regular semigroup");
}

void ConjugacyEngine::ensure_istar_pairs() const {
  if (!istar_pairs_.empty()) return;
  ensure_inverses();
  std::set<std::pair<int, int>> seen;
  for (int g = 0; g < n1_; ++g) {
    auto key = std::make_pair(g, inverse_[g]);
    if (seen.insert(key).second) istar_pairs_.push_back({g, inverse_[g], -1, g});
  }
  // close under appending one conjugator on the right
  for (size_t i = 0; i < istar_pairs_.size(); ++i)
    for (int g = 0; g < n1_; ++g) {
      const int w = prod(istar_pairs_[i][0], g);
      const int wt = prod(inverse_[g], istar_pairs_[i][1]);
      if (seen.insert({w, wt}).second) istar_pairs_.push_back({w, wt, int(i), g});
    }
}

std::vector<char> ConjugacyEngine::p_set(int a) const {
  std::vector<char> ok(n1_, 1);
  auto z = s_.zero();
  if (!z) return ok;
  if (a == *z) {
    std::fill(ok.begin(), ok.end(), 0);
    ok[one_] = 1;
    return ok;
  }
  std::vector<char> in_ma(n1_, 0);
  for (int m = 0; m < n1_; ++m) {
    int x = prod(m, a);
    if (x != *z) in_ma[x] = 1;
  }
  for (int g = 0; g < n1_; ++g)
    for (int x = 0; x < n1_; ++x)
      if (in_ma[x] && prod(x, g) == *z) {
        ok[g] = 0;
        break;
      }
  return ok;
}

// --- per-relation deciders ---------------------------------------------------

std::optional<Witness> ConjugacyEngine::decide_n(int a, int b) const {
  // Minimal equation set: ag = gb, hag = b, gbh = a.
  for (int g = 0; g < n1_; ++g) {
    const int ag = prod(a, g);
    if (ag != prod(g, b)) continue;
    const int gb = prod(g, b);
    for (int h = 0; h < n1_; ++h)
      if (prod(prod(h, a), g) == b && prod(gb, h) == a) {
        Witness w;
        w.kind = Witness::Kind::PairGH;
        w.g = g;
        w.h = h;
        return w;
      }
  }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide_p(int a, int b) const {
  for (int u = 0; u < n1_; ++u)
    for (int v = 0; v < n1_; ++v)
      if (prod(u, v) == a && prod(v, u) == b) {
        Witness w;
        w.kind = Witness::Kind::Chain;
        w.chain = {{u, v}};
        return w;
      }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide_o(int a, int b) const {
  int gg = -1, hh = -1;
  for (int g = 0; g < n1_ && gg < 0; ++g)
    if (prod(a, g) == prod(g, b)) gg = g;
  if (gg < 0) return std::nullopt;
  for (int h = 0; h < n1_ && hh < 0; ++h)
    if (prod(b, h) == prod(h, a)) hh = h;
  if (hh < 0) return std::nullopt;
  Witness w;
  w.kind = Witness::Kind::PairGH;
  w.g = gg;
  w.h = hh;
  return w;
}

std::optional<Witness> ConjugacyEngine::decide_c(int a, int b) const {
  const std::vector<char> pa = p_set(a), pb = p_set(b);
  int gg = -1, hh = -1;
  for (int g = 0; g < n1_ && gg < 0; ++g)
    if (pa[g] && prod(a, g) == prod(g, b)) gg = g;
  if (gg < 0) return std::nullopt;
  for (int h = 0; h < n1_ && hh < 0; ++h)
    if (pb[h] && prod(b, h) == prod(h, a)) hh = h;
  if (hh < 0) return std::nullopt;
  Witness w;
  w.kind = Witness::Kind::PairGH;
  w.g = gg;
  w.h = hh;
  return w;
}

std::optional<Witness> ConjugacyEngine::decide_w(int a, int b) const {
  // (a^m, b^m) pairs repeat eventually; collect each with its least m.
  std::map<std::pair<int, int>, long long> powers;
  {
    int x = a, y = b;
    long long m = 1;
    while (!powers.count({x, y})) {
      powers[{x, y}] = m;
      x = prod(x, a);
      y = prod(y, b);
      ++m;
    }
  }
  for (int g = 0; g < n1_; ++g) {
    if (prod(a, g) != prod(g, b)) continue;
    for (int h = 0; h < n1_; ++h) {
      if (prod(b, h) != prod(h, a)) continue;
      auto it = powers.find({prod(g, h), prod(h, g)});
      if (it != powers.end()) {
        Witness w;
        w.kind = Witness::Kind::SinglePower;
        w.g = g;
        w.h = h;
        w.m = it->second;
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide_tr(int a, int b) const {
  const int aw = epi1_.at[a].omega, bw = epi1_.at[b].omega;
  for (int g = 0; g < n1_; ++g) {
    if (prod(a, g) != prod(g, b)) continue;
    for (int h = 0; h < n1_; ++h)
      if (prod(b, h) == prod(h, a) && prod(g, h) == aw && prod(h, g) == bw) {
        Witness w;
        w.kind = Witness::Kind::PairGH;
        w.g = g;
        w.h = h;
        return w;
      }
  }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide_g(int a, int b) const {
  for (int g : units_)
    if (prod(a, g) == prod(g, b)) {
      Witness w;
      w.kind = Witness::Kind::Unit;
      w.g = g;
      return w;
    }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide_i(int a, int b) const {
  ensure_inverses();
  for (int g = 0; g < n1_; ++g) {
    const int gi = inverse_[g];
    if (prod(prod(gi, a), g) == b && prod(prod(g, b), gi) == a) {
      Witness w;
      w.kind = Witness::Kind::Unit;
      w.g = g;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> ConjugacyEngine::decide(Relation r, int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw Error(Err::IndexOutOfRange, "decide: element out of range");
  switch (r) {
    case Relation::G: return decide_g(a, b);
    case Relation::N: return decide_n(a, b);
    case Relation::P: return decide_p(a, b);
    case Relation::O: return decide_o(a, b);
    case Relation::C: return decide_c(a, b);
    case Relation::W: return decide_w(a, b);
    case Relation::TR: return decide_tr(a, b);
    case Relation::I: return decide_i(a, b);
    case Relation::LIN: {
      // D-relatedness of all powers.  The D-class sequence of powers is
      // eventually periodic with preperiod + period <= order, so k up to
      // 2*order covers every exponent.
      const GreenData& gd = green();
      int x = a, y = b;
      for (int k = 1; k <= 2 * n_; ++k) {
        if (!gd.d_related(x, y)) return std::nullopt;
        x = s_.product(x, a);
        y = s_.product(y, b);
      }
      return decide_tr(a, b);
    }
    case Relation::PSTAR: {
      if (auto direct = decide_p(a, b)) return direct;
      // Breadth-first search through primary-conjugacy moves, recording the
      // (u, v) pairs along the path.
      std::vector<int> prev(n_, -2);
      std::vector<std::pair<int, int>> via(n_);
      std::deque<int> queue;
      prev[a] = -1;
      queue.push_back(a);
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int u = 0; u < n1_; ++u)
          for (int v = 0; v < n1_; ++v)
            if (prod(u, v) == x) {
              int y = prod(v, u);
              if (y < n_ && prev[y] == -2) {
                prev[y] = x;
                via[y] = {u, v};
                if (y == b) {
                  Witness w;
                  w.kind = Witness::Kind::Chain;
                  std::vector<std::pair<int, int>> chain;
                  for (int t = b; prev[t] >= 0; t = prev[t]) chain.push_back(via[t]);
                  std::reverse(chain.begin(), chain.end());
                  w.chain = std::move(chain);
                  return w;
                }
                queue.push_back(y);
              }
            }
      }
      return std::nullopt;
    }
    case Relation::ISTAR: {
      // a ~i* b when some conjugator sequence g1..gk satisfies
      // (gk^-1..g1^-1) a (g1..gk) = b and (g1..gk) b (gk^-1..g1^-1) = a.
      // (In a non-inverse completely regular semigroup this is coarser than
      // chaining single i-conjugacy steps, because pseudo-inverses are not
      // anti-multiplicative.)
      ensure_istar_pairs();
      for (size_t i = 0; i < istar_pairs_.size(); ++i) {
        const int w = istar_pairs_[i][0], wt = istar_pairs_[i][1];
        if (prod(prod(wt, a), w) == b && prod(prod(w, b), wt) == a) {
          Witness out;
          out.kind = Witness::Kind::Chain;
          for (int t = int(i); t >= 0; t = istar_pairs_[t][2])
            out.chain.push_back({istar_pairs_[t][3], inverse_[istar_pairs_[t][3]]});
          std::reverse(out.chain.begin(), out.chain.end());
          return out;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool ConjugacyEngine::verify(Relation r, int a, int b, const Witness& w) const {
  switch (r) {
    case Relation::N:
      return w.kind == Witness::Kind::PairGH && prod(a, w.g) == prod(w.g, b) &&
             prod(prod(w.h, a), w.g) == b && prod(prod(w.g, b), w.h) == a;
    case Relation::O:
      return w.kind == Witness::Kind::PairGH && prod(a, w.g) == prod(w.g, b) &&
             prod(b, w.h) == prod(w.h, a);
    case Relation::C: {
      if (w.kind != Witness::Kind::PairGH) return false;
      auto pa = p_set(a), pb = p_set(b);
      return pa[w.g] && pb[w.h] && prod(a, w.g) == prod(w.g, b) &&
             prod(b, w.h) == prod(w.h, a);
    }
    case Relation::W: {
      if (w.kind != Witness::Kind::SinglePower || w.m < 1) return false;
      int am = a, bm = b;
      for (long long i = 1; i < w.m; ++i) {
        am = prod(am, a);
        bm = prod(bm, b);
      }
      return prod(a, w.g) == prod(w.g, b) && prod(b, w.h) == prod(w.h, a) &&
             prod(w.g, w.h) == am && prod(w.h, w.g) == bm;
    }
    case Relation::TR:
    case Relation::LIN:
      return w.kind == Witness::Kind::PairGH && prod(a, w.g) == prod(w.g, b) &&
             prod(b, w.h) == prod(w.h, a) && prod(w.g, w.h) == epi1_.at[a].omega &&
             prod(w.h, w.g) == epi1_.at[b].omega;
    case Relation::G: {
      if (w.kind != Witness::Kind::Unit) return false;
      bool unit = std::find(units_.begin(), units_.end(), w.g) != units_.end();
      return unit && prod(a, w.g) == prod(w.g, b);
    }
    case Relation::I: {
      if (w.kind != Witness::Kind::Unit) return false;
      ensure_inverses();
      const int gi = inverse_[w.g];
      return prod(prod(gi, a), w.g) == b && prod(prod(w.g, b), gi) == a;
    }
    case Relation::P:
    case Relation::PSTAR: {
      if (w.kind != Witness::Kind::Chain || w.chain.empty()) return false;
      int x = a;
      for (auto [u, v] : w.chain) {
        if (prod(u, v) != x) return false;
        x = prod(v, u);
      }
      return x == b;
    }
    case Relation::ISTAR: {
      if (w.kind != Witness::Kind::Chain || w.chain.empty()) return false;
      ensure_inverses();
      int fwd = one_, rev = one_;
      for (auto [g, gi] : w.chain) {
        if (inverse_[g] != gi) return false;
        fwd = prod(fwd, g);
        rev = prod(gi, rev);
      }
      return prod(prod(rev, a), fwd) == b && prod(prod(fwd, b), rev) == a;
    }
  }
  return false;
}

// --- class enumeration -------------------------------------------------------

ClassPartition ConjugacyEngine::classes_n() const {
  // a ~n b iff a lies in D_{g,h} = {x : gh*x = x = x*gh} and b = hag for
  // some conjugators g,h.  Sweep all (g,h), walking only the fixed set of
  // the product gh.
  const int n = n_, m = n1_;
  // Fixed sets per product value.
  std::vector<std::vector<uint16_t>> fixed(m);
  for (int p = 0; p < m; ++p) {
    auto& f = fixed[p];
    const uint16_t* rowp = s1_.row(p);
    for (int a = 0; a < n; ++a)
      if (rowp[a] == a && s1_.product(a, p) == a) f.push_back(uint16_t(a));
  }
  // Transposed table for cache-friendly right products.
  std::vector<uint16_t> tp(size_t(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) tp[size_t(y) * m + x] = uint16_t(s1_.product(x, y));

  const int workers = std::min(worker_count(), m);
  std::vector<Dsu> dsus(workers, Dsu(n));
  auto sweep = [&](int w) {
    Dsu& dsu = dsus[w];
    for (int g = w; g < m; g += workers) {
      const uint16_t* rowg = s1_.row(g);
      const uint16_t* colg = tp.data() + size_t(g) * m;
      for (int h = 0; h < m; ++h) {
        const auto& f = fixed[rowg[h]];
        if (f.empty()) continue;
        const uint16_t* rowh = s1_.row(h);
        for (uint16_t a : f) {
          const int b = colg[rowh[a]];  // h*a*g
          dsu.unite(a, b);
        }
      }
    }
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(sweep, w);
    for (auto& t : threads) t.join();
  }
  Dsu& main = dsus[0];
  for (int w = 1; w < workers; ++w)
    for (int a = 0; a < n; ++a) main.unite(a, dsus[w].find(a));
  return partition_from_dsu(Relation::N, main, n);
}

ClassPartition ConjugacyEngine::classes_from_edges(
    Relation rel, const std::vector<std::pair<int, int>>& edges) const {
  Dsu dsu(n_);
  for (auto [a, b] : edges) dsu.unite(a, b);
  return partition_from_dsu(rel, dsu, n_);
}

ClassPartition ConjugacyEngine::classes(Relation r) const {
  switch (r) {
    case Relation::N:
      return classes_n();
    case Relation::P:
    case Relation::PSTAR: {
      // Union-find over primary moves; for P itself this yields the
      // transitive closure, which callers should treat as PSTAR.
      Dsu dsu(n_);
      for (int u = 0; u < n1_; ++u)
        for (int v = 0; v < n1_; ++v) {
          int a = prod(u, v), b = prod(v, u);
          if (a < n_ && b < n_) dsu.unite(a, b);
        }
      return partition_from_dsu(Relation::PSTAR, dsu, n_);
    }
    case Relation::I:
    case Relation::ISTAR: {
      ensure_istar_pairs();
      Dsu dsu(n_);
      for (const auto& [w, wt, parent, gen] : istar_pairs_) {
        (void)parent;
        (void)gen;
        for (int a = 0; a < n_; ++a) {
          int b = prod(prod(wt, a), w);
          if (b < n_ && prod(prod(w, b), wt) == a) dsu.unite(a, b);
        }
      }
      return partition_from_dsu(Relation::ISTAR, dsu, n_);
    }
    case Relation::G: {
      Dsu dsu(n_);
      for (int g : units_) {
        // For a unit, ag = gb determines b uniquely.
        int gi = -1;
        for (int h : units_)
          if (prod(g, h) == one_ && prod(h, g) == one_) {
            gi = h;
            break;
          }
        for (int a = 0; a < n_; ++a) {
          int b = prod(gi, prod(a, g));
          if (b < n_ && prod(a, g) == prod(g, b)) dsu.unite(a, b);
        }
      }
      return partition_from_dsu(Relation::G, dsu, n_);
    }
    default: {
      // O, C, W, TR, LIN are equivalences; build them pairwise.
      std::vector<char> mat = relation_matrix(r);
      Dsu dsu(n_);
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          if (mat[size_t(a) * n_ + b]) dsu.unite(a, b);
      return partition_from_dsu(r, dsu, n_);
    }
  }
}

std::vector<char> ConjugacyEngine::relation_matrix(Relation r) const {
  std::vector<char> mat(size_t(n_) * n_, 0);
  switch (r) {
    case Relation::N:
    case Relation::PSTAR:
    case Relation::G:
    case Relation::ISTAR: {
      ClassPartition part = classes(r);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          mat[size_t(a) * n_ + b] = part.related(a, b);
      return mat;
    }
    case Relation::O: {
      // a ~o b iff a -> b and b -> a under one-sided intertwining.
      std::vector<char> arrow(size_t(n_) * n_, 0);
      for (int g = 0; g < n1_; ++g)
        for (int a = 0; a < n_; ++a) {
          // mark all b with ag = gb
          const int ag = prod(a, g);
          for (int b = 0; b < n_; ++b)
            if (prod(g, b) == ag) arrow[size_t(a) * n_ + b] = 1;
        }
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          mat[size_t(a) * n_ + b] = arrow[size_t(a) * n_ + b] && arrow[size_t(b) * n_ + a];
      return mat;
    }
    case Relation::C: {
      std::vector<char> arrow(size_t(n_) * n_, 0);
      for (int a = 0; a < n_; ++a) {
        const std::vector<char> pa = p_set(a);
        for (int g = 0; g < n1_; ++g) {
          if (!pa[g]) continue;
          const int ag = prod(a, g);
          for (int b = 0; b < n_; ++b)
            if (prod(g, b) == ag) arrow[size_t(a) * n_ + b] = 1;
        }
      }
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          mat[size_t(a) * n_ + b] = arrow[size_t(a) * n_ + b] && arrow[size_t(b) * n_ + a];
      return mat;
    }
    default: {
      for (int a = 0; a < n_; ++a) {
        mat[size_t(a) * n_ + a] = 1;
        for (int b = a + 1; b < n_; ++b) {
          bool rel = decide(r, a, b).has_value();
          mat[size_t(a) * n_ + b] = rel;
          mat[size_t(b) * n_ + a] = rel;
        }
      }
      return mat;
    }
  }
}

std::vector<std::vector<CompareResult>> ConjugacyEngine::compare(
    const std::vector<Relation>& rels) const {
  std::vector<std::vector<char>> mats;
  mats.reserve(rels.size());
  for (Relation r : rels) mats.push_back(relation_matrix(r));
  std::vector<std::vector<CompareResult>> out(rels.size(),
                                              std::vector<CompareResult>(rels.size()));
  for (size_t i = 0; i < rels.size(); ++i)
    for (size_t j = 0; j < rels.size(); ++j) {
      bool sub = true, sup = true;
      for (size_t k = 0; k < mats[i].size(); ++k) {
        sub &= !mats[i][k] || mats[j][k];
        sup &= !mats[j][k] || mats[i][k];
      }
      out[i][j] = sub && sup ? CompareResult::Equal
                : sub        ? CompareResult::Subset
                : sup        ? CompareResult::Superset
                             : CompareResult::Incomparable;
    }
  return out;
}

std::pair<int, int> ConjugacyEngine::mutually_inverse_pair(int g, int h) const {
  const int gh = prod(g, h);
  return {prod(epi1_.at[gh].omega, g), prod(h, epi1_.at[gh].pseudo_inverse)};
}

Witness ConjugacyEngine::normalize_witness(int a, int b, const Witness& w) const {
  if (!verify(Relation::N, a, b, w))
    throw Error(Err::InvalidWitness, "witness fails the conjugacy equations");
  auto [gbar, hbar] = mutually_inverse_pair(w.g, w.h);
  Witness out;
  out.kind = Witness::Kind::PairGH;
  out.g = gbar;
  out.h = hbar;
  if (!verify(Relation::N, a, b, out))
    throw Error(Err::InvalidWitness, "normalized witness fails re-verification");
  return out;
}

}  // namespace conjlab
