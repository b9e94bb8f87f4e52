#include "conjlab/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace conjlab {

int AbelianGroup::order() const {
  int n = 1;
  for (int m : moduli) {
    if (m <= 0) throw Error(Err::BadInput, "modulus must be positive");
    n *= m;
  }
  return n;
}

int AbelianGroup::add(int a, int b) const {
  int out = 0, mult = 1;
  for (int k = int(moduli.size()) - 1; k >= 0; --k) {
    const int m = moduli[k];
    out += ((a % m + b % m) % m) * mult;
    a /= m;
    b /= m;
    mult *= m;
  }
  return out;
}

int AbelianGroup::neg(int a) const {
  int out = 0, mult = 1;
  for (int k = int(moduli.size()) - 1; k >= 0; --k) {
    const int m = moduli[k];
    out += ((m - a % m) % m) * mult;
    a /= m;
    mult *= m;
  }
  return out;
}

std::vector<int> AbelianGroup::tuple(int a) const {
  std::vector<int> t(moduli.size());
  for (int k = int(moduli.size()) - 1; k >= 0; --k) {
    t[k] = a % moduli[k];
    a /= moduli[k];
  }
  return t;
}

int AbelianGroup::from_tuple(const std::vector<int>& t) const {
  if (t.size() != moduli.size()) throw Error(Err::BadInput, "tuple arity mismatch");
  int a = 0;
  for (size_t k = 0; k < moduli.size(); ++k) {
    if (t[k] < 0 || t[k] >= moduli[k]) throw Error(Err::IndexOutOfRange, "tuple entry");
    a = a * moduli[k] + t[k];
  }
  return a;
}

std::string AbelianGroup::tuple_str(int a) const {
  std::vector<int> t = tuple(a);
  std::string out = "(";
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

std::vector<int> subgroup_closure(const AbelianGroup& g, std::vector<int> gens) {
  std::set<int> h = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(h.begin(), h.end());
    for (int x : cur)
      for (int s : gens)
        if (h.insert(g.add(x, s)).second) grew = true;
  }
  return std::vector<int>(h.begin(), h.end());
}

int GSetSpec::orbit_size(int o) const {
  return group.order() / int(orbit_stabs[o].size());
}

int GSetSpec::total_points() const {
  int t = 0;
  for (int o = 0; o < num_orbits(); ++o) t += orbit_size(o);
  return t;
}

int GSetSpec::coset_rep(int o, int a) const {
  int best = -1;
  for (int h : orbit_stabs[o]) {
    int e = group.add(a, h);
    if (best < 0 || e < best) best = e;
  }
  return best;
}

// format: line 1 `G=m1xm2x...`; then one line per orbit: `orbit stab={(t1),(t2),...}`
GSetSpec parse_gset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GSetSpec spec;
  bool have_g = false;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    line = line.substr(pos);
    if (line.rfind("G=", 0) == 0) {
      std::string mods = line.substr(2);
      std::replace(mods.begin(), mods.end(), 'x', ' ');
      std::istringstream ms(mods);
      int m;
      while (ms >> m) spec.group.moduli.push_back(m);
      if (spec.group.moduli.empty()) throw Error(Err::ParseError, "no moduli in G=");
      have_g = true;
    } else if (line.rfind("orbit", 0) == 0) {
      if (!have_g) throw Error(Err::ParseError, "orbit before G=");
      size_t brace = line.find('{');
      size_t close = line.rfind('}');
      if (brace == std::string::npos || close == std::string::npos || close < brace)
        throw Error(Err::ParseError, "orbit line needs stab={...}");
      std::string body = line.substr(brace + 1, close - brace - 1);
      std::vector<int> gens;
      size_t i = 0;
      while (i < body.size()) {
        if (body[i] != '(') {
          ++i;
          continue;
        }
        size_t j = body.find(')', i);
        if (j == std::string::npos) throw Error(Err::ParseError, "unclosed tuple");
        std::string tup = body.substr(i + 1, j - i - 1);
        std::replace(tup.begin(), tup.end(), ',', ' ');
        std::istringstream ts(tup);
        std::vector<int> t;
        int v;
        while (ts >> v) t.push_back(v);
        gens.push_back(spec.group.from_tuple(t));
        i = j + 1;
      }
      spec.orbit_stabs.push_back(subgroup_closure(spec.group, gens));
    } else {
      throw Error(Err::ParseError, "unrecognized line: " + line);
    }
  }
  if (!have_g || spec.orbit_stabs.empty())
    throw Error(Err::ParseError, "G-set spec needs G= and at least one orbit");
  return spec;
}

std::string format_gset(const GSetSpec& spec) {
  std::ostringstream out;
  out << "G=";
  for (size_t k = 0; k < spec.group.moduli.size(); ++k) {
    if (k) out << "x";
    out << spec.group.moduli[k];
  }
  out << "\n";
  for (auto& stab : spec.orbit_stabs) {
    out << "orbit stab={";
    for (size_t i = 0; i < stab.size(); ++i) {
      if (i) out << ",";
      out << spec.group.tuple_str(stab[i]);
    }
    out << "}\n";
  }
  return out.str();
}

namespace {

bool subgroup_leq(const std::vector<int>& a, const std::vector<int>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<GEndomorphism> enumerate_end(const GSetSpec& spec, size_t bound) {
  const int k = spec.num_orbits();
  // options per source orbit
  std::vector<std::vector<std::pair<int, int>>> options(k);
  for (int o = 0; o < k; ++o) {
    for (int t = 0; t < k; ++t) {
      if (!subgroup_leq(spec.orbit_stabs[o], spec.orbit_stabs[t])) continue;
      std::set<int> reps;
      for (int a = 0; a < spec.group.order(); ++a) reps.insert(spec.coset_rep(t, a));
      for (int r : reps) options[o].push_back({t, r});
    }
    if (options[o].empty())
      throw Error(Err::BadInput, "orbit admits no equivariant image");
  }
  size_t total = 1;
  for (int o = 0; o < k; ++o) {
    total *= options[o].size();
    if (total > bound) throw Error(Err::BoundExceeded, "End_G(X) exceeds bound");
  }
  std::vector<GEndomorphism> out;
  std::vector<size_t> pick(k, 0);
  while (true) {
    GEndomorphism f;
    f.image.resize(k);
    for (int o = 0; o < k; ++o) f.image[o] = options[o][pick[o]];
    out.push_back(std::move(f));
    int i = k - 1;
    while (i >= 0 && pick[i] + 1 == options[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

GEndomorphism compose_end(const GSetSpec& spec, const GEndomorphism& f, const GEndomorphism& g) {
  const int k = spec.num_orbits();
  GEndomorphism out;
  out.image.resize(k);
  for (int o = 0; o < k; ++o) {
    auto [j, c] = g.image[o];       // g(base_o) = c . base_j
    auto [t, d] = f.image[j];       // f(base_j) = d . base_t
    // f(c . base_j) = c . f(base_j) = (c+d) . base_t
    out.image[o] = {t, spec.coset_rep(t, spec.group.add(c, d))};
  }
  return out;
}

std::string end_str(const GSetSpec& spec, const GEndomorphism& f) {
  std::string out;
  for (size_t o = 0; o < f.image.size(); ++o) {
    if (o) out += " ";
    out += "(" + std::to_string(f.image[o].first + 1) + "," +
           spec.group.tuple_str(f.image[o].second) + ")";
  }
  return out;
}

LabeledOrbitGraph g_trim(const GSetSpec& spec, const GEndomorphism& f) {
  const int k = spec.num_orbits();
  std::vector<int> target(k);
  for (int o = 0; o < k; ++o) target[o] = f.image[o].first;
  std::vector<char> initial(k, 1);
  for (int o = 0; o < k; ++o) initial[target[o]] = 0;

  auto stab_less = [&](int a, int b) {  // strict inclusion
    return spec.orbit_stabs[a].size() < spec.orbit_stabs[b].size() &&
           subgroup_leq(spec.orbit_stabs[a], spec.orbit_stabs[b]);
  };
  auto stab_eq = [&](int a, int b) { return spec.orbit_stabs[a] == spec.orbit_stabs[b]; };

  std::vector<char> removed(k, 0);
  // step 1: initial orbits dominated inside S_f(O) by a strictly larger stabilizer
  for (int o = 0; o < k; ++o) {
    if (!initial[o]) continue;
    for (int o2 = 0; o2 < k; ++o2)
      if (o2 != o && target[o2] == target[o] && stab_less(o, o2)) {
        removed[o] = 1;
        break;
      }
  }
  // step 2: initial orbits matched by an equal-stabilizer non-initial sibling
  for (int o = 0; o < k; ++o) {
    if (!initial[o] || removed[o]) continue;
    for (int o2 = 0; o2 < k; ++o2)
      if (o2 != o && target[o2] == target[o] && !initial[o2] && stab_eq(o, o2)) {
        removed[o] = 1;
        break;
      }
  }
  // step 3: among remaining equal-stabilizer initial siblings keep the least
  for (int o = 0; o < k; ++o) {
    if (!initial[o] || removed[o]) continue;
    for (int o2 = 0; o2 < o; ++o2)
      if (target[o2] == target[o] && initial[o2] && !removed[o2] && stab_eq(o, o2)) {
        removed[o] = 1;
        break;
      }
  }

  LabeledOrbitGraph out;
  for (int o = 0; o < k; ++o)
    if (!removed[o]) out.orbits.push_back(o);
  for (int o : out.orbits) {
    out.out.push_back(target[o]);
    out.stab.push_back(spec.orbit_stabs[o]);
  }
  // cycle labels: walk (orbit, coset) pairs from each kept orbit on a cycle
  out.label.assign(out.orbits.size(), -1);
  for (size_t i = 0; i < out.orbits.size(); ++i) {
    int o = out.orbits[i];
    // detect whether o lies on a cycle of the full orbit graph
    bool on_cycle = false;
    int x = target[o];
    for (int steps = 0; steps <= k; ++steps) {
      if (x == o) {
        on_cycle = true;
        break;
      }
      x = target[x];
    }
    if (!on_cycle) continue;
    // follow f around the cycle, accumulating the acting group element
    int cur = o, acc = 0, len = 0;
    do {
      acc = spec.group.add(acc, f.image[cur].second);
      cur = f.image[cur].first;
      ++len;
    } while (cur != o);
    out.label[i] = spec.coset_rep(o, acc);
  }
  return out;
}

bool conj_n_gset(const GSetSpec& spec, const GEndomorphism& f1, const GEndomorphism& f2) {
  LabeledOrbitGraph t1 = g_trim(spec, f1), t2 = g_trim(spec, f2);
  if (t1.orbits.size() != t2.orbits.size()) return false;
  const int m = int(t1.orbits.size());
  std::vector<int> pos1(spec.num_orbits(), -1), pos2(spec.num_orbits(), -1);
  for (int i = 0; i < m; ++i) {
    pos1[t1.orbits[i]] = i;
    pos2[t2.orbits[i]] = i;
  }
  // brute-force matching over bijections (trims are tiny)
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      ok = t1.stab[i] == t2.stab[perm[i]] && t1.label[i] == t2.label[perm[i]];
      if (!ok) break;
      // edge i -> out: both endpoints of a kept orbit's edge are kept
      int ti = pos1[t1.out[i]];
      int tj = pos2[t2.out[perm[i]]];
      ok = ti >= 0 && tj >= 0 && perm[ti] == tj;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int GSetRealization::index_of(const GEndomorphism& f) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), f);
  if (it == elems.end() || !(*it == f))
    throw Error(Err::BadInput, "endomorphism not in realization");
  return int(it - elems.begin());
}

GSetRealization realize_end(const GSetSpec& spec, size_t bound) {
  std::vector<GEndomorphism> elems = enumerate_end(spec, bound);
  std::sort(elems.begin(), elems.end());
  const int m = int(elems.size());
  std::map<GEndomorphism, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<uint16_t> flat(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(compose_end(spec, elems[i], elems[j]));
      if (it == index.end()) throw Error(Err::BadInput, "End_G(X) not closed");
      flat[size_t(i) * m + j] = uint16_t(it->second);
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = end_str(spec, elems[i]);
  GSetRealization out{CayleyTable::trusted(m, std::move(flat), std::move(labels)),
                      std::move(elems)};
  return out;
}

}  // namespace conjlab
