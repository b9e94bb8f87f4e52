#include "conjlab/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "conjlab/conjugacy.hpp"

namespace conjlab {

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

}  // namespace

void PartitionDiagram::normalize() {
  std::vector<int> remap(block_of_.size(), -1);
  int next = 0;
  for (int& b : block_of_) {
    if (remap[b] < 0) remap[b] = next++;
    b = remap[b];
  }
  num_blocks_ = next;
}

PartitionDiagram PartitionDiagram::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n <= 0) throw Error(Err::BadInput, "diagram size must be positive");
  PartitionDiagram d;
  d.n_ = n;
  d.block_of_.assign(2 * n, -1);
  int id = 0;
  for (auto& blk : blocks) {
    if (blk.empty()) throw Error(Err::BadInput, "empty block");
    for (int p : blk) {
      if (p < 0 || p >= 2 * n) throw Error(Err::IndexOutOfRange, "diagram point");
      if (d.block_of_[p] >= 0) throw Error(Err::BadInput, "point in two blocks");
      d.block_of_[p] = id;
    }
    ++id;
  }
  for (int p = 0; p < 2 * n; ++p)
    if (d.block_of_[p] < 0) throw Error(Err::BadInput, "point not covered by blocks");
  d.normalize();
  return d;
}

PartitionDiagram PartitionDiagram::parse(const std::string& literal) {
  auto semi = literal.find(';');
  if (semi == std::string::npos)
    throw Error(Err::ParseError, "diagram literal must be `n; {..}{..}`");
  int n = 0;
  try {
    n = std::stoi(literal.substr(0, semi));
  } catch (...) {
    throw Error(Err::ParseError, "bad diagram size");
  }
  std::vector<std::vector<int>> blocks;
  size_t i = semi + 1;
  while (i < literal.size()) {
    if (isspace(uint8_t(literal[i]))) {
      ++i;
      continue;
    }
    if (literal[i] != '{') throw Error(Err::ParseError, "expected `{`");
    size_t close = literal.find('}', i);
    if (close == std::string::npos) throw Error(Err::ParseError, "unclosed block");
    std::string body = literal.substr(i + 1, close - i - 1);
    std::vector<int> blk;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      while (!tok.empty() && isspace(uint8_t(tok.front()))) tok.erase(tok.begin());
      while (!tok.empty() && isspace(uint8_t(tok.back()))) tok.pop_back();
      bool primed = !tok.empty() && tok.back() == '\'';
      if (primed) tok.pop_back();
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (...) {
        throw Error(Err::ParseError, "bad diagram point: " + tok);
      }
      if (v < 1 || v > n) throw Error(Err::IndexOutOfRange, "diagram point out of range");
      blk.push_back(primed ? n + v - 1 : v - 1);
    }
    blocks.push_back(std::move(blk));
    i = close + 1;
  }
  return from_blocks(n, std::move(blocks));
}

PartitionDiagram PartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {i, n + i};
  return from_blocks(n, std::move(blocks));
}

std::vector<std::vector<int>> PartitionDiagram::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int p = 0; p < 2 * n_; ++p) out[block_of_[p]].push_back(p);
  return out;
}

PartitionDiagram PartitionDiagram::multiply(const PartitionDiagram& rhs) const {
  if (n_ != rhs.n_) throw Error(Err::SizeMismatch, "diagram sizes differ");
  const int n = n_;
  Dsu dsu(3 * n);
  // this: top 0..n-1, bottom i' -> middle n+i
  for (int p = 0; p < 2 * n; ++p)
    for (int q = p + 1; q < 2 * n; ++q)
      if (block_of_[p] == block_of_[q]) dsu.unite(p, q);
  // rhs: top i -> middle n+i, bottom i' -> 2n+i
  for (int p = 0; p < 2 * n; ++p)
    for (int q = p + 1; q < 2 * n; ++q)
      if (rhs.block_of_[p] == rhs.block_of_[q]) dsu.unite(p + n, q + n);
  PartitionDiagram out;
  out.n_ = n;
  out.block_of_.assign(2 * n, -1);
  std::map<int, int> root_to_id;
  int next = 0;
  auto assign = [&](int point, int glued) {
    int r = dsu.find(glued);
    auto [it, fresh] = root_to_id.emplace(r, next);
    if (fresh) ++next;
    out.block_of_[point] = it->second;
  };
  for (int i = 0; i < n; ++i) assign(i, i);
  for (int i = 0; i < n; ++i) assign(n + i, 2 * n + i);
  out.normalize();
  return out;
}

PartitionDiagram PartitionDiagram::power(int k) const {
  if (k < 1) throw Error(Err::BadInput, "power exponent must be >= 1");
  PartitionDiagram acc = *this;
  for (int i = 1; i < k; ++i) acc = acc.multiply(*this);
  return acc;
}

PartitionDiagram PartitionDiagram::flip() const {
  PartitionDiagram out;
  out.n_ = n_;
  out.block_of_.resize(2 * n_);
  for (int i = 0; i < n_; ++i) {
    out.block_of_[i] = block_of_[n_ + i];
    out.block_of_[n_ + i] = block_of_[i];
  }
  out.normalize();
  return out;
}

PartitionDiagram PartitionDiagram::apply_permutation(const std::vector<int>& perm) const {
  if (int(perm.size()) != n_) throw Error(Err::BadInput, "permutation size mismatch");
  PartitionDiagram out;
  out.n_ = n_;
  out.block_of_.assign(2 * n_, -1);
  for (int i = 0; i < n_; ++i) {
    out.block_of_[perm[i]] = block_of_[i];
    out.block_of_[n_ + perm[i]] = block_of_[n_ + i];
  }
  out.normalize();
  return out;
}

bool PartitionDiagram::is_brauer() const {
  std::vector<int> size(num_blocks_, 0);
  for (int b : block_of_) ++size[b];
  return std::all_of(size.begin(), size.end(), [](int s) { return s == 2; });
}

bool PartitionDiagram::is_partial_brauer() const {
  std::vector<int> size(num_blocks_, 0);
  for (int b : block_of_) ++size[b];
  return std::all_of(size.begin(), size.end(), [](int s) { return s <= 2; });
}

bool PartitionDiagram::is_kind(DiagramKind k) const {
  switch (k) {
    case DiagramKind::Partition: return true;
    case DiagramKind::PartialBrauer: return is_partial_brauer();
    case DiagramKind::Brauer: return is_brauer();
  }
  return false;
}

std::string PartitionDiagram::str() const {
  std::ostringstream out;
  out << n_ << ";";
  for (auto& blk : blocks()) {
    out << " {";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) out << ",";
      if (blk[i] < n_)
        out << blk[i] + 1;
      else
        out << blk[i] - n_ + 1 << "'";
    }
    out << "}";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

DiagramStats diagram_stats(const PartitionDiagram& d) {
  const int n = d.n();
  DiagramStats st;
  std::vector<std::vector<int>> top(d.num_blocks()), bot(d.num_blocks());
  std::vector<char> transversal(d.num_blocks(), 0);
  for (int i = 0; i < n; ++i) top[d.block_id(i)].push_back(i);
  for (int i = 0; i < n; ++i) bot[d.block_id(n + i)].push_back(i);
  for (int b = 0; b < d.num_blocks(); ++b)
    transversal[b] = !top[b].empty() && !bot[b].empty();
  for (int b = 0; b < d.num_blocks(); ++b) {
    if (!top[b].empty()) st.kernel.push_back(top[b]);
    if (!bot[b].empty()) st.cokernel.push_back(bot[b]);
    if (transversal[b]) {
      st.ker_t.push_back(top[b]);
      st.coker_t.push_back(bot[b]);
      st.domain.insert(st.domain.end(), top[b].begin(), top[b].end());
      st.codomain_hat.insert(st.codomain_hat.end(), bot[b].begin(), bot[b].end());
      ++st.rank;
    }
  }
  // canonical order: partitions listed by least member
  std::sort(st.kernel.begin(), st.kernel.end());
  std::sort(st.cokernel.begin(), st.cokernel.end());
  std::sort(st.ker_t.begin(), st.ker_t.end());
  std::sort(st.coker_t.begin(), st.coker_t.end());
  std::sort(st.domain.begin(), st.domain.end());
  std::sort(st.codomain_hat.begin(), st.codomain_hat.end());
  return st;
}

namespace {

// Join of kernel and unprimed cokernel, as a DSU over the n columns.
Dsu kernel_cokernel_join(const PartitionDiagram& d) {
  const int n = d.n();
  Dsu dsu(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d.same_block(i, j)) dsu.unite(i, j);
      if (d.same_block(n + i, n + j)) dsu.unite(i, j);
    }
  return dsu;
}

}  // namespace

bool is_group_element(const PartitionDiagram& d) {
  const int n = d.n();
  Dsu join = kernel_cokernel_join(d);
  // transversal counts per join block, on each side
  std::map<int, std::pair<int, int>> counts;
  std::vector<int> top_rep(d.num_blocks(), -1), bot_rep(d.num_blocks(), -1);
  for (int i = 0; i < n; ++i) {
    if (top_rep[d.block_id(i)] < 0) top_rep[d.block_id(i)] = i;
    if (bot_rep[d.block_id(n + i)] < 0) bot_rep[d.block_id(n + i)] = i;
  }
  for (int b = 0; b < d.num_blocks(); ++b) {
    if (top_rep[b] < 0 || bot_rep[b] < 0) continue;  // not transversal
    counts[join.find(top_rep[b])].first += 1;
    counts[join.find(bot_rep[b])].second += 1;
  }
  for (int i = 0; i < n; ++i) {
    auto it = counts.find(join.find(i));
    int t = it == counts.end() ? 0 : it->second.first;
    int c = it == counts.end() ? 0 : it->second.second;
    if (!((t == 0 && c == 0) || (t == 1 && c == 1))) return false;
  }
  return true;
}

bool is_idempotent_diagram(const PartitionDiagram& d) { return d.multiply(d) == d; }

namespace {

// d^omega: the idempotent power, found by walking the power sequence.
PartitionDiagram omega_power(const PartitionDiagram& d) {
  std::map<PartitionDiagram, int> pos;
  std::vector<PartitionDiagram> seq;
  PartitionDiagram x = d;
  while (!pos.count(x)) {
    pos[x] = int(seq.size());
    seq.push_back(x);
    x = x.multiply(d);
  }
  for (int i = pos[x]; i < int(seq.size()); ++i)
    if (is_idempotent_diagram(seq[i])) return seq[i];
  throw Error(Err::BadInput, "power cycle without idempotent");
}

}  // namespace

std::vector<int> cycle_type_omega_plus_one(const PartitionDiagram& d) {
  const int n = d.n();
  PartitionDiagram u = omega_power(d).multiply(d);
  Dsu join = kernel_cokernel_join(u);
  // Enumerate join blocks that meet transversal blocks of u; tau maps the
  // join block of a transversal's top part to that of its bottom part.
  std::vector<int> top_rep(u.num_blocks(), -1), bot_rep(u.num_blocks(), -1);
  for (int i = 0; i < n; ++i) {
    if (top_rep[u.block_id(i)] < 0) top_rep[u.block_id(i)] = i;
    if (bot_rep[u.block_id(n + i)] < 0) bot_rep[u.block_id(n + i)] = i;
  }
  std::map<int, int> pindex;  // join root -> index in [m]
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < u.num_blocks(); ++b) {
    if (top_rep[b] < 0 || bot_rep[b] < 0) continue;
    int i = join.find(top_rep[b]);
    int j = join.find(bot_rep[b]);
    pindex.emplace(i, int(pindex.size()));
    edges.push_back({i, j});
  }
  const int m = int(pindex.size());
  std::vector<int> tau(m, -1);
  std::vector<char> hit(m, 0);
  for (auto [i, j] : edges) {
    auto it = pindex.find(j);
    if (it == pindex.end() || tau[pindex[i]] >= 0 || hit[it->second])
      throw Error(Err::BadInput, "omega+1 power is not a group element");
    tau[pindex[i]] = it->second;
    hit[it->second] = 1;
  }
  // cycle type of tau
  std::vector<int> counts(m, 0);
  std::vector<char> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0, x = i;
    while (!seen[x]) {
      seen[x] = 1;
      x = tau[x];
      ++len;
    }
    ++counts[len - 1];
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Normal forms.

namespace {

struct Piece {
  int block = -1;          // block id in the diagram
  std::vector<int> top;    // columns in A
  std::vector<int> bot;    // columns in A (unprimed bottom points)
  bool sticks_out = false; // piece != full block
};

// Restriction pieces of d to the column set A (given as a 0/1 mask).
std::vector<Piece> restriction_pieces(const PartitionDiagram& d, const std::vector<char>& in_a) {
  const int n = d.n();
  std::map<int, Piece> by_block;
  for (int i = 0; i < n; ++i) {
    if (!in_a[i]) continue;
    Piece& pt = by_block[d.block_id(i)];
    pt.block = d.block_id(i);
    pt.top.push_back(i);
    Piece& pb = by_block[d.block_id(n + i)];
    pb.block = d.block_id(n + i);
    pb.bot.push_back(i);
  }
  std::vector<int> block_size(d.num_blocks(), 0);
  for (int p = 0; p < 2 * n; ++p) ++block_size[d.block_id(p)];
  std::vector<Piece> out;
  for (auto& [id, piece] : by_block) {
    piece.sticks_out = int(piece.top.size() + piece.bot.size()) != block_size[id];
    out.push_back(piece);
  }
  return out;
}

bool restriction_connected(const std::vector<Piece>& pieces, const std::vector<int>& a) {
  if (a.empty()) return false;
  std::map<int, int> local;
  for (size_t i = 0; i < a.size(); ++i) local[a[i]] = int(i);
  Dsu dsu(int(a.size()));
  for (const Piece& p : pieces) {
    for (size_t i = 1; i < p.top.size(); ++i) dsu.unite(local[p.top[0]], local[p.top[i]]);
    for (size_t i = 1; i < p.bot.size(); ++i) dsu.unite(local[p.bot[0]], local[p.bot[i]]);
  }
  int root = dsu.find(0);
  for (size_t i = 1; i < a.size(); ++i)
    if (dsu.find(int(i)) != root) return false;
  return true;
}

// Does the restriction to A violate the partition normal-form conditions?
// Returns 0 = no constraint violated, 1 = transversal-free violation,
// 2 = one-transversal violation.
int violation_kind(const std::vector<Piece>& pieces) {
  int transversals = 0;
  for (const Piece& p : pieces)
    if (!p.top.empty() && !p.bot.empty()) ++transversals;
  if (transversals == 0) {
    int stick_top = 0, stick_bot = 0;
    for (const Piece& p : pieces)
      if (p.sticks_out) {
        if (!p.top.empty()) ++stick_top;
        if (!p.bot.empty()) ++stick_bot;
      }
    return (stick_top >= 2 || stick_bot >= 2) ? 0 : 1;
  }
  if (transversals == 1) {
    for (const Piece& p : pieces)
      if (p.sticks_out && (p.top.empty() || p.bot.empty())) return 0;
    return 2;
  }
  return 0;
}

// Enumerate subsets of {0..n-1} of size >= 2 in (size descending, lexicographic)
// order, invoking f(mask_vector, members); stop when f returns true.
bool scan_subsets(int n, const std::function<bool(const std::vector<char>&, const std::vector<int>&)>& f) {
  for (int size = n; size >= 2; --size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<char> mask(n, 0);
      for (int v : pick) mask[v] = 1;
      if (f(mask, pick)) return true;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

int singleton_count(const PartitionDiagram& d) {
  std::vector<int> size(d.num_blocks(), 0);
  for (int p = 0; p < 2 * d.n(); ++p) ++size[d.block_id(p)];
  return int(std::count(size.begin(), size.end(), 1));
}

int join_component_count(const PartitionDiagram& d) {
  Dsu join = kernel_cokernel_join(d);
  std::vector<char> seen(d.n(), 0);
  int c = 0;
  for (int i = 0; i < d.n(); ++i)
    if (!seen[join.find(i)]) {
      seen[join.find(i)] = 1;
      ++c;
    }
  return c;
}

// Build the 2-bridge / 1-bridge conjugators for the partition monoid.
// `kind` 1 = transversal-free (blocks s on top, t on bottom),
// `kind` 2 = one transversal block s.
std::pair<PartitionDiagram, PartitionDiagram> bridge_conjugators(
    const PartitionDiagram& d, const std::vector<char>& in_a, int y, int s_block,
    int t_block, int kind) {
  const int n = d.n();
  auto blocks = d.blocks();
  std::vector<std::vector<int>> gblocks, hblocks;
  // identity strands outside A
  for (int i = 0; i < n; ++i)
    if (!in_a[i]) {
      gblocks.push_back({i, n + i});
      hblocks.push_back({i, n + i});
    }
  // g: keeps the top-side blocks of A except s, sends s's top piece to y'.
  {
    std::vector<char> used(d.num_blocks(), 0);
    std::vector<int> s_top;
    for (int i = 0; i < n; ++i) {
      if (!in_a[i]) continue;
      int b = d.block_id(i);
      if (b == s_block) {
        s_top.push_back(i);
        continue;
      }
      if (!used[b]) {
        used[b] = 1;
        gblocks.push_back(blocks[b]);
      }
    }
    s_top.push_back(n + y);
    gblocks.push_back(s_top);
    for (int i = 0; i < n; ++i)
      if (in_a[i] && i != y) gblocks.push_back({n + i});
  }
  // h: dual, keeps the bottom-side blocks of A except t (or s for 1-bridge),
  // sends that block's bottom piece to y.
  {
    const int drop = kind == 1 ? t_block : s_block;
    std::vector<char> used(d.num_blocks(), 0);
    std::vector<int> t_bot;
    for (int i = 0; i < n; ++i) {
      if (!in_a[i]) continue;
      int b = d.block_id(n + i);
      if (b == drop) {
        t_bot.push_back(n + i);
        continue;
      }
      if (!used[b]) {
        used[b] = 1;
        hblocks.push_back(blocks[b]);
      }
    }
    t_bot.push_back(y);
    hblocks.push_back(t_bot);
    for (int i = 0; i < n; ++i)
      if (in_a[i] && i != y) hblocks.push_back({i});
  }
  return {PartitionDiagram::from_blocks(n, std::move(gblocks)),
          PartitionDiagram::from_blocks(n, std::move(hblocks))};
}

}  // namespace

bool is_normal_form(const PartitionDiagram& d, DiagramKind kind) {
  const int n = d.n();
  if (kind == DiagramKind::Brauer || kind == DiagramKind::PartialBrauer) {
    if (!d.is_kind(kind)) throw Error(Err::BadInput, "diagram not of the stated kind");
    // Pair blocks must be anchored: {x,y} needs {x',y'} (Brauer only) or both
    // x',y' transversal; dually for bottom pairs.
    auto blocks = d.blocks();
    std::vector<char> transversal(d.num_blocks(), 0);
    for (int b = 0; b < d.num_blocks(); ++b) {
      bool top = false, bot = false;
      for (int p : blocks[b]) (p < n ? top : bot) = true;
      transversal[b] = top && bot;
    }
    for (auto& blk : blocks) {
      if (blk.size() != 2) continue;
      if (blk[0] < n && blk[1] < n) {
        int x = blk[0], y = blk[1];
        if (kind == DiagramKind::Brauer && d.same_block(n + x, n + y)) continue;
        if (!transversal[d.block_id(n + x)] || !transversal[d.block_id(n + y)]) return false;
      } else if (blk[0] >= n && blk[1] >= n) {
        int x = blk[0] - n, y = blk[1] - n;
        if (kind == DiagramKind::Brauer && d.same_block(x, y)) continue;
        if (!transversal[d.block_id(x)] || !transversal[d.block_id(y)]) return false;
      }
    }
    return true;
  }
  // Partition monoid: no connected restriction may violate the conditions.
  bool violated = scan_subsets(n, [&](const std::vector<char>& mask, const std::vector<int>& a) {
    auto pieces = restriction_pieces(d, mask);
    if (!restriction_connected(pieces, a)) return false;
    return violation_kind(pieces) != 0;
  });
  return !violated;
}

NormalizeResult normalize_n(const PartitionDiagram& d, DiagramKind kind) {
  if (!d.is_kind(kind)) throw Error(Err::BadInput, "diagram not of the stated kind");
  NormalizeResult out;
  out.normal = d;

  if (kind == DiagramKind::Brauer) {
    // Repeatedly swap x' and z' where {x,y} is a top pair and {y',z'} a
    // bottom pair, z != x; the lex-least such triple {x,y,z} first.
    while (true) {
      const PartitionDiagram& b = out.normal;
      const int n = b.n();
      int bx = -1, by = -1, bz = -1;
      std::array<int, 6> best{};
      bool found = false;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (u == v || !b.same_block(u, v)) continue;  // top pair {u,v}
          // role (x,y) = (u,v): bottom pair containing v'
          for (int z = 0; z < n; ++z) {
            if (z == u || z == v) continue;
            if (!b.same_block(n + v, n + z)) continue;
            std::array<int, 3> sorted{u, v, z};
            std::sort(sorted.begin(), sorted.end());
            std::array<int, 6> key{sorted[0], sorted[1], sorted[2], u, v, z};
            if (!found || key < best) {
              found = true;
              best = key;
              bx = u;
              by = v;
              bz = z;
            }
          }
        }
      if (!found) break;
      const int n2 = b.n();
      RewriteStep step;
      step.before = b;
      std::vector<std::vector<int>> gb, hb;
      for (int w = 0; w < n2; ++w)
        if (w != bx && w != by && w != bz) {
          gb.push_back({w, n2 + w});
          hb.push_back({w, n2 + w});
        }
      gb.push_back({bx, by});
      gb.push_back({bz, n2 + bz});
      gb.push_back({n2 + bx, n2 + by});
      hb.push_back({bx, by});
      hb.push_back({bz, n2 + bx});
      hb.push_back({n2 + by, n2 + bz});
      step.g = PartitionDiagram::from_blocks(n2, std::move(gb));
      step.h = PartitionDiagram::from_blocks(n2, std::move(hb));
      step.after = step.h.multiply(b).multiply(step.g);
      const int before_comps = join_component_count(step.before);
      const int after_comps = join_component_count(step.after);
      if (after_comps <= before_comps)
        throw Error(Err::BadInput, "Brauer rewriting made no progress");
      out.normal = step.after;
      out.steps.push_back(std::move(step));
    }
    return out;
  }

  // Partition / partial Brauer: apply the bridge rewritings until no
  // connected restriction violates the normal-form conditions.
  while (true) {
    const PartitionDiagram b = out.normal;
    const int n = b.n();
    bool applied = scan_subsets(n, [&](const std::vector<char>& mask, const std::vector<int>& a) {
      auto pieces = restriction_pieces(b, mask);
      if (!restriction_connected(pieces, a)) return false;
      int kindv = violation_kind(pieces);
      if (kindv == 0) return false;
      const int y = a.front();  // least element of A
      int s_block = -1, t_block = -1;
      if (kindv == 1) {
        // choose the sticking-out piece on each side when present,
        // otherwise the piece with the least column of that side
        int s_min = -1, t_min = -1;
        for (const Piece& p : pieces) {
          if (!p.top.empty() && p.sticks_out) s_block = p.block;
          if (!p.bot.empty() && p.sticks_out) t_block = p.block;
        }
        for (const Piece& p : pieces) {
          if (s_block < 0 && !p.top.empty() && (s_min < 0 || p.top.front() < s_min)) s_min = p.top.front();
          if (t_block < 0 && !p.bot.empty() && (t_min < 0 || p.bot.front() < t_min)) t_min = p.bot.front();
        }
        for (const Piece& p : pieces) {
          if (s_block < 0 && !p.top.empty() && p.top.front() == s_min) s_block = p.block;
          if (t_block < 0 && !p.bot.empty() && p.bot.front() == t_min) t_block = p.block;
        }
      } else {
        for (const Piece& p : pieces)
          if (!p.top.empty() && !p.bot.empty()) s_block = p.block;
      }
      RewriteStep step;
      step.before = b;
      auto [g, h] = bridge_conjugators(b, mask, y, s_block, t_block, kindv);
      step.g = g;
      step.h = h;
      step.after = h.multiply(b).multiply(g);
      if (singleton_count(step.after) <= singleton_count(b))
        throw Error(Err::BadInput, "partition rewriting made no progress");
      out.normal = step.after;
      out.steps.push_back(std::move(step));
      return true;
    });
    if (!applied) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// S_n-orbit canonical form via colour classes + backtracking.

PartitionDiagram canonical_column_form(const PartitionDiagram& d) {
  const int n = d.n();
  if (n > 8) throw Error(Err::BoundExceeded, "canonical column form supported for n <= 8");
  // colour: (top size, bottom size) of the block of i, same for i',
  // and whether i and i' share a block.
  std::vector<int> top_sz(d.num_blocks(), 0), bot_sz(d.num_blocks(), 0);
  for (int i = 0; i < n; ++i) {
    ++top_sz[d.block_id(i)];
    ++bot_sz[d.block_id(n + i)];
  }
  auto colour = [&](int i) {
    int b1 = d.block_id(i), b2 = d.block_id(n + i);
    return std::array<int, 5>{top_sz[b1], bot_sz[b1], top_sz[b2], bot_sz[b2],
                              b1 == b2 ? 1 : 0};
  };
  std::map<std::array<int, 5>, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[colour(i)].push_back(i);
  // columns of equal colour may permute among the corresponding positions
  std::vector<std::vector<int>> cols;
  std::vector<int> positions;  // start position per group
  {
    int pos = 0;
    for (auto& [c, members] : groups) {
      cols.push_back(members);
      positions.push_back(pos);
      pos += int(members.size());
    }
  }
  std::vector<int> perm(n, -1);
  std::vector<int> best;
  PartitionDiagram best_diagram;
  // DFS over per-group arrangements.
  std::vector<std::vector<int>> arrangement = cols;
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == cols.size()) {
      for (size_t g = 0; g < cols.size(); ++g)
        for (size_t k = 0; k < arrangement[g].size(); ++k)
          perm[arrangement[g][k]] = positions[g] + int(k);
      PartitionDiagram cand = d.apply_permutation(perm);
      std::vector<int> enc(cand.n() * 2);
      for (int p = 0; p < 2 * cand.n(); ++p) enc[p] = cand.block_id(p);
      if (best.empty() || enc < best) {
        best = enc;
        best_diagram = cand;
      }
      return;
    }
    std::sort(arrangement[gi].begin(), arrangement[gi].end());
    do {
      rec(gi + 1);
    } while (std::next_permutation(arrangement[gi].begin(), arrangement[gi].end()));
  };
  rec(0);
  return best_diagram;
}

bool conj_n_diagram(const PartitionDiagram& a, const PartitionDiagram& b, DiagramKind kind) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "diagram sizes differ");
  PartitionDiagram na = normalize_n(a, kind).normal;
  PartitionDiagram nb = normalize_n(b, kind).normal;
  return canonical_column_form(na) == canonical_column_form(nb);
}

bool conj_tr_diagram(const PartitionDiagram& a, const PartitionDiagram& b) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "diagram sizes differ");
  return cycle_type_omega_plus_one(a) == cycle_type_omega_plus_one(b);
}

bool conj_o_diagram(const PartitionDiagram& a, const PartitionDiagram& b, DiagramKind kind) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "diagram sizes differ");
  if (kind != DiagramKind::Brauer) return true;
  std::vector<int> ka = cycle_type_omega_plus_one(a), kb = cycle_type_omega_plus_one(b);
  ka.resize(std::max(ka.size(), kb.size()), 0);
  kb.resize(ka.size(), 0);
  for (size_t i = 0; i < ka.size(); i += 2)  // odd cycle lengths i+1
    if ((ka[i] - kb[i]) % 2 != 0) return false;
  return true;
}

bool conj_c_diagram(const PartitionDiagram& a, const PartitionDiagram& b, DiagramKind kind) {
  if (a.n() != b.n()) throw Error(Err::SizeMismatch, "diagram sizes differ");
  const int n = a.n();
  const bool exceptional = (kind == DiagramKind::Partition && n == 1) ||
                           (kind == DiagramKind::PartialBrauer && n == 1) ||
                           (kind == DiagramKind::Brauer && n == 2);
  if (!exceptional) return conj_o_diagram(a, b, kind);
  // The exceptional monoids have a zero; answer by the generic decider on
  // their Cayley realization.
  DiagramRealization real = realize_diagrams(enumerate_diagrams(kind, n));
  ConjugacyEngine engine(real.table);
  return engine.decide(Relation::C, real.index_of(a), real.index_of(b)).has_value();
}

// ---------------------------------------------------------------------------

std::vector<PartitionDiagram> enumerate_diagrams(DiagramKind kind, int n) {
  if (n < 1 || n > 5) throw Error(Err::BoundExceeded, "diagram enumeration supports n <= 5");
  const int m = 2 * n;
  std::vector<PartitionDiagram> out;
  // restricted growth strings
  std::vector<int> rgs(m, 0);
  while (true) {
    PartitionDiagram d;
    {
      std::vector<std::vector<int>> blocks;
      int maxid = -1;
      for (int p = 0; p < m; ++p) {
        if (rgs[p] > maxid) {
          blocks.push_back({});
          ++maxid;
        }
        blocks[rgs[p]].push_back(p);
      }
      d = PartitionDiagram::from_blocks(n, std::move(blocks));
    }
    if (d.is_kind(kind)) out.push_back(d);
    // next RGS
    int i = m - 1;
    while (i > 0) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < m; ++j) rgs[j] = 0;
  }
  return out;
}

int DiagramRealization::index_of(const PartitionDiagram& d) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), d);
  if (it == elems.end() || !(*it == d))
    throw Error(Err::BadInput, "diagram not in realization");
  return int(it - elems.begin());
}

DiagramRealization realize_diagrams(std::vector<PartitionDiagram> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int m = int(elems.size());
  if (m == 0) throw Error(Err::BadInput, "empty diagram list");
  std::map<PartitionDiagram, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<uint16_t> flat(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(elems[i].multiply(elems[j]));
      if (it == index.end())
        throw Error(Err::BadInput, "diagram list not closed under multiplication");
      flat[size_t(i) * m + j] = uint16_t(it->second);
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = elems[i].str();
  DiagramRealization out{CayleyTable::trusted(m, std::move(flat), std::move(labels)),
                         std::move(elems)};
  return out;
}

}  // namespace conjlab
