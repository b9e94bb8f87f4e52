#include "conjlab/inner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "conjlab/transform.hpp"

namespace conjlab {

int PartialAut::domain_size() const {
  return int(std::count_if(map.begin(), map.end(), [](int v) { return v >= 0; }));
}

std::vector<int> PartialAut::domain() const {
  std::vector<int> out;
  for (int a = 0; a < int(map.size()); ++a)
    if (map[a] >= 0) out.push_back(a);
  return out;
}

bool PartialAut::is_identity() const {
  for (int a = 0; a < int(map.size()); ++a)
    if (map[a] != a) return false;
  return true;
}

PartialAut PartialAut::compose(const PartialAut& o) const {
  if (map.size() != o.map.size()) throw Error(Err::SizeMismatch, "partial map sizes differ");
  PartialAut out;
  out.map.assign(map.size(), -1);
  for (size_t a = 0; a < map.size(); ++a)
    if (map[a] >= 0 && o.map[map[a]] >= 0) out.map[a] = o.map[map[a]];
  return out;
}

PartialAut PartialAut::inverse() const {
  PartialAut out;
  out.map.assign(map.size(), -1);
  for (size_t a = 0; a < map.size(); ++a)
    if (map[a] >= 0) {
      if (out.map[map[a]] >= 0) throw Error(Err::NotInjective, "partial map not injective");
      out.map[map[a]] = int(a);
    }
  return out;
}

std::vector<int> domain_gh(const CayleyTable& s, int g, int h) {
  CayleyTable s1 = adjoin_identity(s);
  const int p = s1.product(g, h);
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a)
    if (s1.product(p, a) == a && s1.product(a, p) == a) out.push_back(a);
  return out;
}

PartialAut phi_gh(const CayleyTable& s, int g, int h) {
  CayleyTable s1 = adjoin_identity(s);
  const int p = s1.product(g, h);
  PartialAut out;
  out.map.assign(s.order(), -1);
  out.source_g = g;
  out.source_h = h;
  for (int a = 0; a < s.order(); ++a)
    if (s1.product(p, a) == a && s1.product(a, p) == a) {
      int b = s1.product(s1.product(h, a), g);
      if (b >= s.order()) throw Error(Err::BadInput, "phi image escapes S");
      out.map[a] = b;
    }
  return out;
}

int InnMonoid::index_of(const PartialAut& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || !(*it == f))
    throw Error(Err::BadInput, "map not in Inn(S)");
  return int(it - elements.begin());
}

InnMonoid generate_inn(const CayleyTable& s, size_t bound) {
  CayleyTable s1 = adjoin_identity(s);
  const int m1 = s1.order();
  std::set<std::vector<int>> seen;
  std::vector<PartialAut> gens;
  for (int g = 0; g < m1; ++g)
    for (int h = 0; h < m1; ++h) {
      PartialAut f = phi_gh(s, g, h);
      if (seen.insert(f.map).second) gens.push_back(f);
    }
  const int generator_count = int(gens.size());
  // closure under composition (the generator set is inverse-closed, so the
  // closure is as well)
  std::vector<PartialAut> elems = gens;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (int dir = 0; dir < 2; ++dir) {
        PartialAut c = dir == 0 ? elems[i].compose(elems[j]) : elems[j].compose(elems[i]);
        if (seen.insert(c.map).second) {
          elems.push_back(std::move(c));
          if (elems.size() > bound) throw Error(Err::BoundExceeded, "Inn(S) exceeds bound");
        }
      }
  std::sort(elems.begin(), elems.end());
  const int m = int(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[elems[i].map] = i;
  std::vector<uint16_t> flat(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto it = index.find(elems[i].compose(elems[j]).map);
      if (it == index.end()) throw Error(Err::BadInput, "Inn closure not closed");
      flat[size_t(i) * m + j] = uint16_t(it->second);
    }
  InnMonoid out;
  out.elements = std::move(elems);
  out.generator_count = generator_count;
  out.realization = CayleyTable::trusted(m, std::move(flat));
  return out;
}

bool rees_conj_n(const ReesMatrixSpec& spec, int i, int a, int lam, int j, int b, int mu) {
  const CayleyTable& grp = spec.group;
  if (i < 0 || i >= spec.i_size || j < 0 || j >= spec.i_size)
    throw Error(Err::IndexOutOfRange, "row index");
  if (lam < 0 || lam >= spec.lambda_size || mu < 0 || mu >= spec.lambda_size)
    throw Error(Err::IndexOutOfRange, "column index");
  // equal triples are conjugate through the adjoined identity even when
  // their sandwich entry is zero
  if (i == j && a == b && lam == mu) return true;
  const int p_mu_j = spec.entry(mu, j);
  const int p_lam_i = spec.entry(lam, i);
  if (p_mu_j < 0 || p_lam_i < 0) return false;
  const int lhs = grp.product(p_mu_j, b);
  const int api = grp.product(a, p_lam_i);
  const int one = *grp.identity();
  for (int g = 0; g < grp.order(); ++g) {
    int ginv = -1;
    for (int x = 0; x < grp.order(); ++x)
      if (grp.product(g, x) == one && grp.product(x, g) == one) {
        ginv = x;
        break;
      }
    if (grp.product(grp.product(ginv, api), g) == lhs) return true;
  }
  return false;
}

GeneratorCensus tn_generator_census(int n) {
  if (n < 1 || n > 4) throw Error(Err::BoundExceeded, "census supported for n <= 4");
  GeneratorCensus out;

  // brute force over conjugator pairs in T_n
  TransformationRealization tn = realize(enumerate_tn(n));
  std::set<std::vector<int>> maps;
  for (int g = 0; g < tn.table.order(); ++g)
    for (int h = 0; h < tn.table.order(); ++h)
      maps.insert(phi_gh(tn.table, g, h).map);
  out.brute = long(maps.size());

  // parametric count: tuples (P,P',I,I',alpha,beta) with |I| >= 2, plus the
  // constant-to-constant maps, plus the empty map for n >= 2.
  // N[p][i] = number of pairs (partition with p parts, partial section of
  // size i covering all singleton parts).
  std::map<std::pair<int, int>, long long> count;
  {
    std::vector<int> rgs(n, 0);
    while (true) {
      int parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
      std::vector<int> size(parts, 0);
      for (int x : rgs) ++size[x];
      // choose a set of parts to section; singleton parts are mandatory
      for (int mask = 0; mask < (1 << parts); ++mask) {
        bool ok = true;
        long long ways = 1;
        int isize = 0;
        for (int p = 0; p < parts; ++p) {
          if (mask >> p & 1) {
            ways *= size[p];
            ++isize;
          } else if (size[p] == 1) {
            ok = false;
            break;
          }
        }
        if (ok && isize >= 2) count[{parts, isize}] += ways;
      }
      // next restricted growth string
      int i = n - 1;
      while (i > 0) {
        int cap = 0;
        for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
        if (rgs[i] <= cap) break;
        --i;
      }
      if (i == 0) break;
      ++rgs[i];
      for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
  }
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  long long total = 0;
  for (auto& [key, cnt] : count) {
    auto [p, i] = key;
    total += cnt * cnt * factorial(i) * factorial(p - i);
  }
  total += (long long)n * n;  // one constant transformation to another
  if (n >= 2) total += 1;     // the empty map
  out.parametric = total;
  return out;
}

}  // namespace conjlab
