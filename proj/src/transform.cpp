#include "conjlab/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace conjlab {

PartialMap::PartialMap(int n, std::vector<int> img) : n_(n), img_(std::move(img)) {
  if (n < 0 || int(img_.size()) != n)
    throw Error(Err::BadInput, "image vector does not match ground set size");
  for (int v : img_)
    if (v < -1 || v >= n) throw Error(Err::IndexOutOfRange, "image point out of range");
}

PartialMap PartialMap::parse(const std::string& literal) {
  std::string s = literal;
  auto strip = [](std::string& t) {
    while (!t.empty() && isspace(uint8_t(t.front()))) t.erase(t.begin());
    while (!t.empty() && isspace(uint8_t(t.back()))) t.pop_back();
  };
  strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(Err::ParseError, "transformation literal must be [..]");
  s = s.substr(1, s.size() - 2);
  std::vector<int> img;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    strip(tok);
    if (tok == "-") {
      img.push_back(-1);
    } else {
      try {
        img.push_back(std::stoi(tok) - 1);  // literals are 1-based
      } catch (...) {
        throw Error(Err::ParseError, "bad image entry: " + tok);
      }
    }
  }
  const int n = int(img.size());
  return PartialMap(n, std::move(img));
}

PartialMap PartialMap::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return PartialMap(n, std::move(img));
}

PartialMap PartialMap::empty(int n) { return PartialMap(n, std::vector<int>(n, -1)); }

bool PartialMap::full() const {
  return std::all_of(img_.begin(), img_.end(), [](int v) { return v >= 0; });
}

bool PartialMap::injective() const {
  std::vector<char> seen(n_, 0);
  for (int v : img_)
    if (v >= 0) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
  return true;
}

bool PartialMap::surjective() const {
  std::vector<char> seen(n_, 0);
  for (int v : img_)
    if (v >= 0) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool PartialMap::order_preserving() const {
  int last = -1;
  for (int x = 0; x < n_; ++x)
    if (img_[x] >= 0) {
      if (last >= 0 && img_[x] < last) return false;
      last = img_[x];
    }
  return true;
}

std::vector<int> PartialMap::dom() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (img_[x] >= 0) out.push_back(x);
  return out;
}

std::vector<int> PartialMap::ima() const {
  std::vector<char> seen(n_, 0);
  for (int v : img_)
    if (v >= 0) seen[v] = 1;
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

std::vector<int> PartialMap::span() const {
  std::vector<char> seen(n_, 0);
  for (int x = 0; x < n_; ++x)
    if (img_[x] >= 0) {
      seen[x] = 1;
      seen[img_[x]] = 1;
    }
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

int PartialMap::rank() const { return int(ima().size()); }

PartialMap PartialMap::compose(const PartialMap& rhs) const {
  if (n_ != rhs.n_) throw Error(Err::SizeMismatch, "compose: ground sets differ");
  std::vector<int> img(n_, -1);
  for (int x = 0; x < n_; ++x)
    if (img_[x] >= 0) img[x] = rhs.img_[img_[x]];
  return PartialMap(n_, std::move(img));
}

PartialMap PartialMap::power(int k) const {
  if (k < 1) throw Error(Err::BadInput, "power exponent must be >= 1");
  PartialMap acc = *this;
  for (int i = 1; i < k; ++i) acc = acc.compose(*this);
  return acc;
}

std::string PartialMap::str() const {
  std::string out = "[";
  for (int x = 0; x < n_; ++x) {
    if (x) out += ",";
    out += img_[x] < 0 ? std::string("-") : std::to_string(img_[x] + 1);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

int FunctionalDigraph::vertex_count() const {
  return int(std::count(present.begin(), present.end(), 1));
}

std::vector<int> FunctionalDigraph::vertices() const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (present[x]) out.push_back(x);
  return out;
}

std::vector<char> FunctionalDigraph::initial() const {
  std::vector<char> has_in(n, 0);
  for (int x = 0; x < n; ++x)
    if (present[x] && out[x] >= 0) has_in[out[x]] = 1;
  std::vector<char> res(n, 0);
  for (int x = 0; x < n; ++x) res[x] = present[x] && !has_in[x];
  return res;
}

std::vector<char> FunctionalDigraph::terminal() const {
  std::vector<char> res(n, 0);
  for (int x = 0; x < n; ++x) res[x] = present[x] && out[x] < 0;
  return res;
}

std::vector<char> FunctionalDigraph::bottom_initial() const {
  std::vector<char> init = initial();
  // x is bottom initial iff x is initial and every co-preimage of out[x]
  // is initial.
  std::vector<char> target_clean(n, 1);
  for (int x = 0; x < n; ++x)
    if (present[x] && out[x] >= 0 && !init[x]) target_clean[out[x]] = 0;
  std::vector<char> res(n, 0);
  for (int x = 0; x < n; ++x)
    res[x] = init[x] && out[x] >= 0 && target_clean[out[x]];
  return res;
}

FunctionalDigraph digraph(const PartialMap& alpha) {
  FunctionalDigraph g;
  g.n = alpha.n();
  g.present.assign(g.n, 0);
  g.out.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x)
    if (alpha.defined(x)) {
      g.present[x] = 1;
      g.present[alpha.apply(x)] = 1;
      g.out[x] = alpha.apply(x);
    }
  return g;
}

FunctionalDigraph extended_digraph(const PartialMap& alpha) {
  FunctionalDigraph g = digraph(alpha);
  std::fill(g.present.begin(), g.present.end(), 1);
  return g;
}

FunctionalDigraph prune(const FunctionalDigraph& g) {
  std::vector<char> init = g.initial();
  FunctionalDigraph out;
  out.n = g.n;
  out.present.assign(g.n, 0);
  out.out.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    if (!g.present[x] || init[x]) continue;
    out.present[x] = 1;
    if (g.out[x] >= 0 && !init[g.out[x]]) out.out[x] = g.out[x];
  }
  return out;
}

FunctionalDigraph trim(const FunctionalDigraph& g) {
  std::vector<char> init = g.initial();
  std::vector<char> bottom = g.bottom_initial();
  // One representative per initial bundle: the least bottom-initial
  // co-preimage of each bundle target.
  std::vector<int> keep_rep(g.n, -1);
  for (int x = 0; x < g.n; ++x)
    if (bottom[x]) {
      int y = g.out[x];
      if (keep_rep[y] < 0) keep_rep[y] = x;
    }
  FunctionalDigraph out;
  out.n = g.n;
  out.present.assign(g.n, 0);
  out.out.assign(g.n, -1);
  std::vector<char> kept(g.n, 0);
  for (int x = 0; x < g.n; ++x) {
    if (!g.present[x]) continue;
    if (init[x] && !(bottom[x] && g.out[x] >= 0 && keep_rep[g.out[x]] == x)) continue;
    kept[x] = 1;
    out.present[x] = 1;
  }
  for (int x = 0; x < g.n; ++x)
    if (kept[x] && g.out[x] >= 0 && kept[g.out[x]]) out.out[x] = g.out[x];
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form.

namespace {

// Code of the in-tree hanging from v, following edges u -> v with u not
// excluded.  children[v] lists in-neighbours.
std::string tree_code(int v, const std::vector<std::vector<int>>& children,
                      const std::vector<char>& exclude) {
  std::vector<std::string> subs;
  for (int u : children[v])
    if (!exclude[u]) subs.push_back(tree_code(u, children, exclude));
  std::sort(subs.begin(), subs.end());
  std::string out = "(";
  for (auto& s : subs) out += s;
  out += ")";
  return out;
}

}  // namespace

std::string canonical_form(const FunctionalDigraph& g) {
  const int n = g.n;
  std::vector<std::vector<int>> children(n);
  for (int x = 0; x < n; ++x)
    if (g.present[x] && g.out[x] >= 0) children[g.out[x]].push_back(x);

  // Component ids via union over edges.
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int x = 0; x < n; ++x) {
    if (!g.present[x] || comp[x] >= 0) continue;
    // flood fill over the undirected version
    std::vector<int> stack = {x};
    comp[x] = comps;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (g.out[v] >= 0 && comp[g.out[v]] < 0) {
        comp[g.out[v]] = comps;
        stack.push_back(g.out[v]);
      }
      for (int u : children[v])
        if (comp[u] < 0) {
          comp[u] = comps;
          stack.push_back(u);
        }
    }
    ++comps;
  }

  // Cycle detection: a vertex is on a cycle iff following out-edges from it
  // returns to it.
  std::vector<char> on_cycle(n, 0);
  {
    std::vector<int> state(n, 0);  // 0 unvisited, 1 in progress stackpos+2, 2 done
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
      if (!g.present[s] || state[s] != 0) continue;
      path.clear();
      int v = s;
      while (v >= 0 && state[v] == 0) {
        state[v] = 2 + int(path.size());
        path.push_back(v);
        v = g.out[v];
      }
      if (v >= 0 && state[v] >= 2) {
        // found a new cycle starting at position state[v]-2 of path
        for (size_t i = state[v] - 2; i < path.size(); ++i) on_cycle[path[i]] = 1;
      }
      for (int u : path) state[u] = 1;
    }
  }

  std::vector<std::string> comp_codes(comps);
  std::vector<char> seen_comp(comps, 0);
  for (int x = 0; x < n; ++x) {
    if (!g.present[x] || seen_comp[comp[x]]) continue;
    if (!(on_cycle[x] || g.out[x] < 0)) continue;  // handle at a cycle vertex or root
    seen_comp[comp[x]] = 1;
    if (g.out[x] < 0) {
      // in-tree rooted at a terminal vertex
      comp_codes[comp[x]] = "T" + tree_code(x, children, on_cycle);
    } else {
      // rho component: collect the cycle through x
      std::vector<int> cyc;
      int v = x;
      do {
        cyc.push_back(v);
        v = g.out[v];
      } while (v != x);
      const int k = int(cyc.size());
      std::vector<std::string> codes(k);
      for (int i = 0; i < k; ++i) codes[i] = tree_code(cyc[i], children, on_cycle);
      // lexicographically minimal rotation of the code sequence
      std::string best;
      for (int r = 0; r < k; ++r) {
        std::string cand = "C" + std::to_string(k) + ":";
        for (int i = 0; i < k; ++i) cand += codes[(r + i) % k];
        if (best.empty() || cand < best) best = cand;
      }
      comp_codes[comp[x]] = best;
    }
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::string out;
  for (auto& c : comp_codes) {
    out += c;
    out += ';';
  }
  return out;
}

bool iso_digraph(const FunctionalDigraph& a, const FunctionalDigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Deciders.

bool conj_n_full(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  return iso_digraph(prune(digraph(a)), prune(digraph(b)));
}

bool conj_n_injective(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  if (!a.injective() || !b.injective())
    throw Error(Err::NotInjective, "expected injective maps");
  return iso_digraph(digraph(a), digraph(b));
}

bool conj_n_surjective(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  if (!a.full() || !b.full() || !a.surjective() || !b.surjective())
    throw Error(Err::NotSurjective, "expected surjective full maps");
  return iso_digraph(digraph(a), digraph(b));
}

bool conj_n_txy(const PartialMap& a, const PartialMap& b, const std::vector<int>& y) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  std::vector<char> in_y(a.n(), 0);
  for (int v : y) {
    if (v < 0 || v >= a.n()) throw Error(Err::IndexOutOfRange, "Y point out of range");
    in_y[v] = 1;
  }
  for (const PartialMap* m : {&a, &b}) {
    if (!m->full()) throw Error(Err::BadInput, "T(X,Y) expects full maps");
    for (int v : m->ima())
      if (!in_y[v]) throw Error(Err::ImageNotInY, "image not inside Y");
  }
  if (a == b) return true;
  if (!iso_digraph(prune(digraph(a)), prune(digraph(b)))) return false;
  // Every initial bundle of either digraph must meet Y.
  for (const PartialMap* m : {&a, &b}) {
    FunctionalDigraph g = digraph(*m);
    std::vector<char> bottom = g.bottom_initial();
    for (int x = 0; x < g.n; ++x) {
      if (!bottom[x]) continue;
      bool meets = false;
      const int target = g.out[x];
      for (int z = 0; z < g.n; ++z)
        if (g.present[z] && g.out[z] == target && in_y[z]) {
          meets = true;
          break;
        }
      if (!meets) return false;
    }
  }
  return true;
}

namespace {

// Relabel the digraph g via the order isomorphism old_verts[i] -> new_verts[i].
FunctionalDigraph relabel(const FunctionalDigraph& g, const std::vector<int>& old_verts,
                          const std::vector<int>& new_verts) {
  std::vector<int> to_new(g.n, -1);
  for (size_t i = 0; i < old_verts.size(); ++i) to_new[old_verts[i]] = new_verts[i];
  FunctionalDigraph out;
  out.n = g.n;
  out.present.assign(g.n, 0);
  out.out.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x)
    if (g.present[x]) {
      out.present[to_new[x]] = 1;
      if (g.out[x] >= 0) out.out[to_new[x]] = to_new[g.out[x]];
    }
  return out;
}

}  // namespace

bool prune_relabel_equal(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  FunctionalDigraph pa = prune(digraph(a)), pb = prune(digraph(b));
  std::vector<int> va = pa.vertices(), vb = pb.vertices();
  if (va.size() != vb.size()) return false;
  return relabel(pa, va, vb) == pb;
}

bool conj_n_on(const PartialMap& a, const PartialMap& b) {
  if (!a.full() || !b.full() || !a.order_preserving() || !b.order_preserving())
    throw Error(Err::NotOrderPreserving, "expected order-preserving full maps");
  return prune_relabel_equal(a, b);
}

bool span_relabel_equal(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  FunctionalDigraph ga = digraph(a), gb = digraph(b);
  std::vector<int> va = ga.vertices(), vb = gb.vertices();
  if (va.size() != vb.size()) return false;
  return relabel(ga, va, vb) == gb;
}

bool conj_n_oin(const PartialMap& a, const PartialMap& b) {
  if (!a.injective() || !b.injective() || !a.order_preserving() || !b.order_preserving())
    throw Error(Err::NotOrderPreserving, "expected order-preserving injective maps");
  return span_relabel_equal(a, b);
}

std::vector<PartialMap> class_oin(const PartialMap& a) {
  if (!a.injective() || !a.order_preserving())
    throw Error(Err::NotOrderPreserving, "expected an order-preserving injective map");
  const int n = a.n();
  std::vector<int> va = a.span();
  const int k = int(va.size());
  std::vector<PartialMap> out;
  // every k-subset of the chain {0..n-1}, in lexicographic order
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k == 0) return {a};
  while (true) {
    std::vector<int> to_new(n, -1);
    for (int i = 0; i < k; ++i) to_new[va[i]] = pick[i];
    std::vector<int> img(n, -1);
    for (int x = 0; x < n; ++x)
      if (a.defined(x)) img[to_new[x]] = to_new[a.apply(x)];
    out.push_back(PartialMap(n, std::move(img)));
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool conj_by_permutation(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  return iso_digraph(extended_digraph(a), extended_digraph(b));
}

namespace {

bool rank_sequences_equal(const PartialMap& a, const PartialMap& b) {
  PartialMap x = a, y = b;
  for (int k = 1; k <= 2 * a.n(); ++k) {
    if (x.rank() != y.rank()) return false;
    x = x.compose(a);
    y = y.compose(b);
  }
  return true;
}

std::vector<int> cycle_lengths(const PartialMap& a) {
  FunctionalDigraph g = digraph(a);
  std::vector<int> lens;
  std::vector<char> visited(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (!g.present[s] || visited[s]) continue;
    // find the cycle reachable from s, if any
    std::vector<int> path;
    std::vector<int> mark(g.n, -1);
    int v = s;
    while (v >= 0 && mark[v] < 0 && !visited[v]) {
      mark[v] = int(path.size());
      path.push_back(v);
      v = g.out[v];
    }
    if (v >= 0 && mark[v] >= 0) {
      int len = int(path.size()) - mark[v];
      lens.push_back(len);
    }
    for (int u : path) visited[u] = 1;
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace

bool conj_lin_tn(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  if (!a.full() || !b.full()) throw Error(Err::BadInput, "expected full maps");
  return rank_sequences_equal(a, b) && cycle_lengths(a) == cycle_lengths(b);
}

bool conj_lin_pn(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "ground sets differ");
  return rank_sequences_equal(a, b) && cycle_lengths(a) == cycle_lengths(b);
}

bool conj_lin_in(const PartialMap& a, const PartialMap& b) {
  if (!a.injective() || !b.injective())
    throw Error(Err::NotInjective, "expected injective maps");
  return conj_by_permutation(a, b);
}

// ---------------------------------------------------------------------------
// Enumeration.

std::vector<PartialMap> enumerate_tn(int n) {
  std::vector<PartialMap> out;
  std::vector<int> img(n, 0);
  while (true) {
    out.push_back(PartialMap(n, img));
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::vector<PartialMap> enumerate_pn(int n) {
  std::vector<PartialMap> out;
  std::vector<int> img(n, -1);
  while (true) {
    out.push_back(PartialMap(n, img));
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = -1;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

std::vector<PartialMap> enumerate_in(int n) {
  std::vector<PartialMap> all = enumerate_pn(n), out;
  for (auto& m : all)
    if (m.injective()) out.push_back(m);
  return out;
}

std::vector<PartialMap> enumerate_on(int n) {
  std::vector<PartialMap> all = enumerate_tn(n), out;
  for (auto& m : all)
    if (m.order_preserving()) out.push_back(m);
  return out;
}

std::vector<PartialMap> enumerate_oin(int n) {
  std::vector<PartialMap> all = enumerate_pn(n), out;
  for (auto& m : all)
    if (m.injective() && m.order_preserving()) out.push_back(m);
  return out;
}

std::vector<PartialMap> enumerate_txy(int n, const std::vector<int>& y) {
  if (y.empty()) throw Error(Err::BadInput, "Y must be nonempty");
  std::vector<PartialMap> out;
  std::vector<int> pos(n, 0);
  while (true) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = y[pos[i]];
    out.push_back(PartialMap(n, std::move(img)));
    int i = n - 1;
    while (i >= 0 && pos[i] == int(y.size()) - 1) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return out;
}

int TransformationRealization::index_of(const PartialMap& m) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), m);
  if (it == elems.end() || !(*it == m))
    throw Error(Err::BadInput, "map not in realization");
  return int(it - elems.begin());
}

TransformationRealization realize(std::vector<PartialMap> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int m = int(elems.size());
  if (m == 0) throw Error(Err::BadInput, "empty element list");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[elems[i].img()] = i;
  std::vector<uint16_t> flat(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(elems[i].compose(elems[j]).img());
      if (it == index.end())
        throw Error(Err::BadInput, "element list not closed under composition");
      flat[size_t(i) * m + j] = uint16_t(it->second);
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = elems[i].str();
  TransformationRealization out{CayleyTable::trusted(m, std::move(flat), std::move(labels)),
                                std::move(elems)};
  return out;
}

}  // namespace conjlab
