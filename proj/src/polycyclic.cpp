#include "conjlab/polycyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace conjlab {

namespace {

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool prefix_comparable(const std::string& a, const std::string& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

bool is_suffix(const std::string& s, const std::string& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

}  // namespace

PolyElement parse_poly(const std::string& literal, int n) {
  std::string s = literal;
  auto strip = [](std::string& t) {
    while (!t.empty() && isspace(uint8_t(t.front()))) t.erase(t.begin());
    while (!t.empty() && isspace(uint8_t(t.back()))) t.pop_back();
  };
  strip(s);
  if (s == "0") return PolyElement::make_zero();
  if (s == "1" || s.empty()) return PolyElement::one();
  auto slash = s.find('/');
  std::string left = s.substr(0, slash == std::string::npos ? s.size() : slash);
  std::string right = slash == std::string::npos ? "" : s.substr(slash + 1);
  auto parse_word = [&](const std::string& part) {
    std::string word;
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      if (tok == "1") continue;
      if (tok.size() < 2 || tok[0] != 'p')
        throw Error(Err::ParseError, "bad generator token: " + tok);
      int v = 0;
      try {
        v = std::stoi(tok.substr(1));
      } catch (...) {
        throw Error(Err::ParseError, "bad generator token: " + tok);
      }
      if (v < 1 || v > n) throw Error(Err::IndexOutOfRange, "generator index out of range");
      word.push_back(char(v - 1));
    }
    return word;
  };
  return PolyElement::word(parse_word(left), parse_word(right));
}

std::string poly_str(const PolyElement& a) {
  if (a.zero) return "0";
  if (a.is_one()) return "1";
  std::string out;
  for (char c : a.y) out += "p" + std::to_string(int(c) + 1) + " ";
  if (!out.empty()) out.pop_back();
  if (!a.x.empty()) {
    out += " /";
    for (char c : a.x) out += " p" + std::to_string(int(c) + 1);
  }
  return out;
}

PolyElement poly_mul(const PolyElement& a, const PolyElement& b) {
  if (a.zero || b.zero) return PolyElement::make_zero();
  // (y_a x_a^{-1}) (y_b x_b^{-1}): the middle words must be prefix comparable.
  if (is_prefix(a.x, b.y)) {
    std::string z = b.y.substr(a.x.size());
    return PolyElement::word(a.y + z, b.x);
  }
  if (is_prefix(b.y, a.x)) {
    std::string z = a.x.substr(b.y.size());
    return PolyElement::word(a.y, b.x + z);
  }
  return PolyElement::make_zero();
}

PolyElement poly_inverse(const PolyElement& a) {
  if (a.zero) return a;
  return PolyElement::word(a.x, a.y);
}

PolyElement cyclic_reduce(const PolyElement& a) {
  if (a.zero) return a;
  size_t k = 0;
  while (k < a.y.size() && k < a.x.size() && a.y[k] == a.x[k]) ++k;
  return PolyElement::word(a.y.substr(k), a.x.substr(k));
}

PolyElement rho(const PolyElement& a) {
  if (a.zero) return a;
  if (is_prefix(a.x, a.y)) return PolyElement::word(a.y.substr(a.x.size()), "");
  if (is_prefix(a.y, a.x)) return PolyElement::word("", a.x.substr(a.y.size()));
  return PolyElement::make_zero();
}

bool free_monoid_primary_conj(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  return (u + u).find(v) != std::string::npos;
}

bool poly_conj(PolyRelation rel, const PolyElement& a, const PolyElement& b) {
  const PolyElement ra = cyclic_reduce(a), rb = cyclic_reduce(b);
  switch (rel) {
    case PolyRelation::N:
      if (a.zero || b.zero) return a.zero && b.zero;
      return ra == rb;
    case PolyRelation::C: {
      if (a.zero || b.zero) return a.zero && b.zero;
      if (ra == rb) return true;
      // both cyclically reduced words in (A^{-1})*, related by rotation
      return ra.y.empty() && rb.y.empty() && free_monoid_primary_conj(ra.x, rb.x);
    }
    case PolyRelation::P: {
      const PolyElement pa = rho(a), pb = rho(b);
      if ((a.zero && pb.zero) || (pa.zero && b.zero)) return true;
      if (a.zero || b.zero) return false;
      if (pa.zero && pb.zero && ra == rb) return true;
      if (ra.x.empty() && rb.x.empty()) return free_monoid_primary_conj(ra.y, rb.y);
      if (ra.y.empty() && rb.y.empty()) return free_monoid_primary_conj(ra.x, rb.x);
      return false;
    }
    case PolyRelation::PSTAR: {
      const PolyElement pa = rho(a), pb = rho(b);
      if (pa.zero && pb.zero) return true;
      if (pa.zero || pb.zero) return false;
      if (ra.x.empty() && rb.x.empty()) return free_monoid_primary_conj(ra.y, rb.y);
      if (ra.y.empty() && rb.y.empty()) return free_monoid_primary_conj(ra.x, rb.x);
      return false;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Growth functions and series.

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> totients(int m) {
  std::vector<int> phi(m + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int p = 2; p <= m; ++p)
    if (phi[p] == p)  // prime
      for (int k = p; k <= m; k += p) phi[k] -= phi[k] / p;
  return phi;
}

std::vector<int> moebius(int m) {
  std::vector<int> mu(m + 1, 1);
  std::vector<char> composite(m + 1, 0);
  std::vector<int> primes;
  for (int i = 2; i <= m; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      if ((long long)i * p > m) break;
      composite[i * p] = 1;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

}  // namespace

long long necklace_count(int n, int m) {
  if (m == 0) return 1;
  std::vector<int> phi = totients(m);
  long long sum = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) sum += (long long)phi[d] * ipow(n, m / d);
  if (sum % m != 0) throw Error(Err::BadInput, "necklace sum not divisible");
  return sum / m;
}

long long necklace_count_moebius(int n, int m) {
  if (m == 0) return 1;
  std::vector<int> mu = moebius(m);
  long long total = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    long long f = 0;  // primitive words of length d
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) f += (long long)mu[d / e] * ipow(n, e);
    if (f % d != 0) throw Error(Err::BadInput, "primitive count not divisible");
    total += f / d;
  }
  return total;
}

GrowthTable growth_function(int n, int max_m, const std::string& relation) {
  if (n < 2) throw Error(Err::BadInput, "polycyclic monoid needs n >= 2");
  if (relation != "sigma" && relation != "n" && relation != "c" && relation != "pstar")
    throw Error(Err::BadInput, "unknown growth relation: " + relation);
  GrowthTable t;
  t.relation = relation;
  t.values.resize(max_m + 1);
  for (int m = 0; m <= max_m; ++m) {
    long long v = 0;
    if (m == 0)
      v = 1;
    else if (m == 1)
      v = 2LL * n + 1;
    else if (relation == "sigma")
      v = (m + 1) * ipow(n, m);
    else if (relation == "n")
      v = 2 * ipow(n, m) + (long long)(m - 1) * ipow(n, m - 1) * (n - 1);
    else if (relation == "c")
      v = ipow(n, m) + (long long)(m - 1) * ipow(n, m - 1) * (n - 1) + necklace_count(n, m);
    else if (relation == "pstar")
      v = 2 * necklace_count(n, m);
    else
      throw Error(Err::BadInput, "unknown growth relation: " + relation);
    t.values[m] = v;
  }
  return t;
}

GrowthTable series_coefficients(int n, int max_m, const std::string& relation) {
  if (n < 2) throw Error(Err::BadInput, "polycyclic monoid needs n >= 2");
  GrowthTable t;
  t.relation = relation;
  t.values.assign(max_m + 1, 0);
  // 1/(1-nz)^2 has coefficients (m+1) n^m.
  auto inv_sq = [&](int m) { return (long long)(m + 1) * ipow(n, m); };
  for (int m = 0; m <= max_m; ++m) {
    long long v = 0;
    if (relation == "sigma") {
      v = inv_sq(m) + (m == 1 ? 1 : 0);
    } else if (relation == "n") {
      // z + (1 - n z^2) / (1 - n z)^2
      v = inv_sq(m);
      if (m >= 2) v -= n * inv_sq(m - 2);
      if (m == 1) v += 1;
    } else if (relation == "c") {
      // 1/(1-nz) + z + (n^2 - n) z^2 / (1-nz)^2 + necklace series
      v = ipow(n, m);
      if (m == 1) v += 1;
      if (m >= 2) v += (long long)(n * n - n) * inv_sq(m - 2);
      if (m >= 1) v += necklace_count(n, m);
    } else if (relation == "pstar") {
      // 1 + z + 2 * necklace series
      if (m == 0) v = 1;
      if (m == 1) v = 1 + 2LL * necklace_count(n, 1);
      if (m >= 2) v = 2 * necklace_count(n, m);
    } else {
      throw Error(Err::BadInput, "unknown series relation: " + relation);
    }
    t.values[m] = v;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Ball oracle.

namespace {

std::vector<std::string> words_up_to(int n, int len) {
  std::vector<std::string> out = {""};
  size_t start = 0;
  for (int l = 1; l <= len; ++l) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (int c = 0; c < n; ++c) out.push_back(out[i] + char(c));
    start = end;
  }
  return out;
}

std::vector<PolyElement> ball_elements(int n, int max_m) {
  std::vector<PolyElement> out;
  out.push_back(PolyElement::make_zero());  // length 1
  std::vector<std::string> words = words_up_to(n, max_m);
  for (const auto& y : words)
    for (const auto& x : words)
      if (int(y.size() + x.size()) <= max_m) out.push_back(PolyElement::word(y, x));
  std::sort(out.begin(), out.end());
  return out;
}

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

GrowthTable counts_from_partition(const std::vector<PolyElement>& ball,
                                  const std::vector<int>& root, int max_m,
                                  const std::string& relation) {
  std::map<int, int> min_len;
  for (size_t i = 0; i < ball.size(); ++i) {
    auto [it, fresh] = min_len.emplace(root[i], ball[i].length());
    if (!fresh) it->second = std::min(it->second, ball[i].length());
  }
  GrowthTable t;
  t.relation = relation;
  t.values.assign(max_m + 1, 0);
  for (auto& [cls, len] : min_len)
    if (len <= max_m) ++t.values[len];
  return t;
}

}  // namespace

GrowthTable ball_oracle(int n, int max_m, const std::string& relation) {
  if (n < 2 || n > 3 || max_m > 8)
    throw Error(Err::BoundExceeded, "ball oracle supports n in {2,3}, max_m <= 8");
  std::vector<PolyElement> ball = ball_elements(n, max_m);
  const int nb = int(ball.size());
  std::map<PolyElement, int> index;
  for (int i = 0; i < nb; ++i) index[ball[i]] = i;
  auto find_index = [&](const PolyElement& e) {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  };

  if (relation == "sigma") {
    GrowthTable t;
    t.relation = relation;
    t.values.assign(max_m + 1, 0);
    for (auto& e : ball) ++t.values[e.length()];
    return t;
  }

  if (relation == "n") {
    // i-conjugacy with conjugators from the ball: g^{-1} a g = b, g b g^{-1} = a.
    Dsu dsu(nb);
    for (int ia = 0; ia < nb; ++ia) {
      const PolyElement& a = ball[ia];
      for (const PolyElement& g : ball) {
        const PolyElement gi = poly_inverse(g);
        PolyElement b = poly_mul(poly_mul(gi, a), g);
        int ib = find_index(b);
        if (ib < 0) continue;
        if (poly_mul(poly_mul(g, b), gi) == a) dsu.unite(ia, ib);
      }
    }
    std::vector<int> root(nb);
    for (int i = 0; i < nb; ++i) root[i] = dsu.find(i);
    return counts_from_partition(ball, root, max_m, relation);
  }

  if (relation == "pstar") {
    Dsu dsu(nb);
    for (const PolyElement& u : ball)
      for (const PolyElement& v : ball) {
        int ia = find_index(poly_mul(u, v));
        int ib = find_index(poly_mul(v, u));
        if (ia >= 0 && ib >= 0) dsu.unite(ia, ib);
      }
    std::vector<int> root(nb);
    for (int i = 0; i < nb; ++i) root[i] = dsu.find(i);
    return counts_from_partition(ball, root, max_m, relation);
  }

  if (relation == "c") {
    // Directed arrows a -> b when some g with a g = g b survives the
    // restricted membership test for p(a); the relation is the mutual part.
    std::vector<std::string> m_words = words_up_to(n, max_m + 1);
    std::vector<std::string> g_words = words_up_to(n, max_m);
    std::vector<char> arrow(size_t(nb) * nb, 0);
    for (int ia = 0; ia < nb; ++ia) {
      const PolyElement& a = ball[ia];
      if (a.zero) {
        arrow[size_t(ia) * nb + ia] = 1;  // p(0) = {1}, 0*1 = 1*0
        continue;
      }
      // Membership in p(a) depends only on the positive part y_g: collect
      // the x-parts of all nonzero m*a with m = z^{-1}, |z| <= max_m+1.
      std::set<std::string> xparts;
      for (const auto& z : m_words) {
        PolyElement ma = poly_mul(PolyElement::word("", z), a);
        if (!ma.zero) xparts.insert(ma.x);
      }
      std::vector<std::string> t_a(xparts.begin(), xparts.end());
      auto valid = [&](const std::string& yg) {
        for (const auto& s : t_a)
          if (!prefix_comparable(yg, s)) return false;
        return true;
      };
      // candidate positive parts: prefixes of x_a and their extensions
      std::vector<std::string> ygs;
      for (size_t k = 0; k <= a.x.size(); ++k) {
        std::string p = a.x.substr(0, k);
        if (int(p.size()) <= max_m && valid(p)) ygs.push_back(p);
      }
      for (const auto& u : g_words) {
        if (u.empty()) continue;
        std::string cand = a.x + u;
        if (int(cand.size()) <= max_m && valid(cand)) ygs.push_back(cand);
      }
      for (const auto& yg : ygs)
        for (const auto& xg : g_words) {
          if (int(yg.size() + xg.size()) > max_m) continue;
          PolyElement g = PolyElement::word(yg, xg);
          PolyElement c = poly_mul(a, g);
          if (c.zero) continue;
          // solve g b = c
          auto try_b = [&](const PolyElement& b) {
            if (poly_mul(g, b) == c) {
              int ib = find_index(b);
              if (ib >= 0) arrow[size_t(ia) * nb + ib] = 1;
            }
          };
          if (is_prefix(yg, c.y))
            try_b(PolyElement::word(xg + c.y.substr(yg.size()), c.x));
          for (size_t k = 0; k <= xg.size(); ++k) {
            std::string yb = xg.substr(0, k);
            std::string z = xg.substr(k);
            if (is_suffix(z, c.x))
              try_b(PolyElement::word(yb, c.x.substr(0, c.x.size() - z.size())));
          }
        }
    }
    Dsu dsu(nb);
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j)
        if (arrow[size_t(i) * nb + j] && arrow[size_t(j) * nb + i]) dsu.unite(i, j);
    std::vector<int> root(nb);
    for (int i = 0; i < nb; ++i) root[i] = dsu.find(i);
    return counts_from_partition(ball, root, max_m, relation);
  }

  throw Error(Err::BadInput, "unknown oracle relation: " + relation);
}

}  // namespace conjlab
