#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

Set sorted(Set s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_power_of(long long n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(a[i][j]));
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("oracle: singular matrix");
    std::swap(m[piv], m[c]);
    const Rational d = m[c][c];
    for (auto& v : m[c]) v /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

bool all_integral(const std::vector<Rational>& v, int p) {
  return std::all_of(v.begin(), v.end(), [p](const Rational& q) { return integral_at(q, p); });
}

}  // namespace

Set closure(const FiniteGroup& g, const Set& generators) {
  std::set<Elem> seen{g.identity()};
  std::vector<Elem> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : generators) {
        const Elem y = g.mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Set(seen.begin(), seen.end());
}

Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set conjugate(const FiniteGroup& g, Elem x, const Set& s) {
  Set out;
  for (Elem y : s) out.push_back(g.conj(x, y));
  return sorted(out);
}

bool is_subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool is_normal(const FiniteGroup& g, const Set& n, const Set& h) {
  if (!is_subset(n, h)) return false;
  for (Elem x : h)
    if (conjugate(g, x, n) != n) return false;
  return true;
}

Set commutator(const FiniteGroup& g, const Set& a, const Set& b) {
  Set gens;
  for (Elem x : a)
    for (Elem y : b) gens.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return oracle::closure(g, sorted(gens));
}

std::vector<Set> subgroups_by_subsets(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 16) throw std::runtime_error("oracle: group too large for subset enumeration");
  std::vector<Set> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (!((mask >> g.identity()) & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = 0; b < n && closed; ++b)
        if (((mask >> b) & 1) && !((mask >> g.mul(a, b)) & 1)) closed = false;
    }
    if (!closed) continue;
    Set s;
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1) s.push_back(a);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Set p_residual(const FiniteGroup& g, const std::vector<Set>& subgroups, const Set& k, int p) {
  if (p == 0) {
    Set cur = k;
    while (true) {
      Set next = commutator(g, cur, cur);
      if (next == cur) return cur;
      cur = next;
    }
  }
  Set out = k;
  for (const Set& n : subgroups)
    if (is_normal(g, n, k) && is_power_of(static_cast<long long>(k.size() / n.size()), p))
      out = intersect(out, n);
  return out;
}

long long mobius(int n, const std::function<bool(int, int)>& leq, int a, int b) {
  std::map<int, long long> memo;
  std::function<long long(int)> mu = [&](int c) -> long long {
    if (c == a) return 1;
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    long long s = 0;
    for (int d = 0; d < n; ++d)
      if (d != c && leq(a, d) && leq(d, c)) s -= mu(d);
    return memo[c] = s;
  };
  return leq(a, b) ? mu(b) : 0;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<Integer> determinantal_invariants(const std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    combinations(rows, k, rs);
    combinations(cols, k, cs);
    Integer d = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Rational>> sub(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = Rational(static_cast<long>(m[r[i]][c[j]]));
        const Integer minor = determinant(sub).get_num();
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), minor.get_mpz_t());
      }
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

std::optional<std::vector<Rational>> solve_left(const std::vector<std::vector<long long>>& a,
                                                const std::vector<Rational>& b) {
  std::vector<std::vector<Rational>> inv;
  try {
    inv = inverse(a);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  const std::size_t n = a.size();
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j] += b[i] * inv[i][j];
  return x;
}

bool integral_at(const Rational& q, int p) {
  if (p == 0) return q.get_den() == 1;
  return mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

long long count_cocycles(const FiniteGroup& g, const Set& h, const FiniteGroup& a,
                         const std::vector<std::vector<int>>& action) {
  const int n = static_cast<int>(h.size());
  std::vector<int> f(n, 0);
  std::map<Elem, int> pos;
  for (int i = 0; i < n; ++i) pos[h[i]] = i;
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const int lhs = f[pos[g.mul(h[i], h[j])]];
        const int rhs = a.mul(f[i], action[h[i]][f[j]]);
        ok = lhs == rhs;
      }
    count += ok;
    int i = 0;
    while (i < n && ++f[i] == a.order()) f[i++] = 0;
    if (i == n) return count;
  }
}

Set restrict_label(Kind kind, const Set& label, const Set& to) {
  switch (kind) {
    case Kind::Trivial: return {};
    case Kind::Slice: return label;
    case Kind::Conormal: return intersect(label, to);
  }
  return {};
}

LabeledSet transitive(const FiniteGroup& g, const Set& host, const Set& k, const Set& label) {
  std::set<Set> seen;
  LabeledSet out;
  for (Elem x : host) {
    Set coset;
    for (Elem y : k) coset.push_back(g.mul(x, y));
    if (!seen.insert(sorted(coset)).second) continue;
    out.push_back({conjugate(g, x, k), conjugate(g, x, label)});
  }
  return out;
}

LabeledSet product(Kind kind, const FiniteGroup&, const LabeledSet& x, const LabeledSet& y) {
  LabeledSet out;
  for (const Point& a : x)
    for (const Point& b : y) {
      Set j = intersect(a.stab, b.stab);
      Set l = intersect(restrict_label(kind, a.label, j), restrict_label(kind, b.label, j));
      out.push_back({std::move(j), std::move(l)});
    }
  return out;
}

LabeledSet restrict_to(Kind kind, const FiniteGroup&, const LabeledSet& x, const Set& h) {
  LabeledSet out;
  for (const Point& a : x) {
    Set j = intersect(a.stab, h);
    out.push_back({j, restrict_label(kind, a.label, j)});
  }
  return out;
}

LabeledSet induce(const FiniteGroup& g, const Set& from, const Set& to, const LabeledSet& y) {
  std::set<Set> seen;
  LabeledSet out;
  for (Elem x : to) {
    Set coset;
    for (Elem z : from) coset.push_back(g.mul(x, z));
    if (!seen.insert(sorted(coset)).second) continue;
    for (const Point& p : y) out.push_back({conjugate(g, x, p.stab), conjugate(g, x, p.label)});
  }
  return out;
}

Set basis_subgroup(const burnside::BasisSystem& b, int i) { return b.subgroups().members(b.pair(i).k); }

Set basis_label(const burnside::BasisSystem& b, int i) {
  if (b.functor().name() == "trivial") return {};
  const auto [k, s] = b.pair(i);
  return b.subgroups().members(b.functor().lattice().to_lattice[k][s]);
}

LabeledSet of_basis(const burnside::BasisSystem& b, int i) {
  return transitive(b.group(), b.subgroups().members(b.host()), basis_subgroup(b, i),
                    basis_label(b, i));
}

std::map<int, long long> decompose(const burnside::BasisSystem& b, const LabeledSet& x) {
  const FiniteGroup& g = b.group();
  const Set& host = b.subgroups().members(b.host());
  std::map<std::pair<Set, Set>, int> type;
  std::map<int, long long> points;
  for (const Point& p : x) {
    auto key = std::make_pair(p.stab, p.label);
    auto it = type.find(key);
    if (it == type.end()) {
      int found = -1;
      for (int i = 0; i < b.rank() && found < 0; ++i) {
        const Set k = basis_subgroup(b, i), l = basis_label(b, i);
        if (k.size() != p.stab.size()) continue;
        for (Elem h : host)
          if (conjugate(g, h, p.stab) == k && conjugate(g, h, p.label) == l) {
            found = i;
            break;
          }
      }
      if (found < 0) throw std::runtime_error("oracle: point type missing from the basis");
      it = type.emplace(key, found).first;
    }
    ++points[it->second];
  }
  std::map<int, long long> out;
  for (const auto& [i, n] : points) {
    const long long index = static_cast<long long>(host.size() / basis_subgroup(b, i).size());
    if (n % index != 0) throw std::runtime_error("oracle: orbit sizes do not divide");
    out[i] = n / index;
  }
  return out;
}

long long mark(Kind kind, const burnside::BasisSystem& b, const LabeledSet& x, int j, bool lattice) {
  const Set u = basis_subgroup(b, j), t = basis_label(b, j);
  long long n = 0;
  for (const Point& p : x) {
    if (!is_subset(u, p.stab)) continue;
    if (lattice ? is_subset(t, p.label) : restrict_label(kind, p.label, u) == t) ++n;
  }
  return n;
}

int orbit_count(Kind kind, const FiniteGroup& g, const std::vector<Set>& subgroups, const Set& host) {
  std::set<std::pair<Set, Set>> canon;
  for (const Set& k : subgroups) {
    if (!is_subset(k, host)) continue;
    std::vector<Set> labels;
    if (kind == Kind::Trivial) labels.push_back({});
    for (const Set& l : subgroups) {
      if (kind == Kind::Slice && is_subset(k, l)) labels.push_back(l);
      if (kind == Kind::Conormal && is_normal(g, l, k)) labels.push_back(l);
    }
    for (const Set& l : labels) {
      std::pair<Set, Set> best{k, l};
      for (Elem h : host) best = std::min(best, std::make_pair(conjugate(g, h, k), conjugate(g, h, l)));
      canon.insert(best);
    }
  }
  return static_cast<int>(canon.size());
}

std::vector<std::vector<int>> integral_atoms(const std::vector<std::vector<long long>>& marks,
                                             int p) {
  const int r = static_cast<int>(marks.size());
  const auto inv = inverse(marks);
  std::vector<unsigned long long> good;
  std::vector<Rational> x(r);
  // Gray code walk over indicator vectors.
  unsigned long long mask = 0;
  for (unsigned long long step = 1; step < (1ULL << r); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= 1ULL << bit;
    const bool on = (mask >> bit) & 1;
    for (int j = 0; j < r; ++j) x[j] += on ? inv[bit][j] : -inv[bit][j];
    if (all_integral(x, p)) good.push_back(mask);
  }
  std::set<unsigned long long> atoms;
  for (int i = 0; i < r; ++i) {
    unsigned long long a = ~0ULL;
    for (auto m : good)
      if ((m >> i) & 1) a &= m;
    atoms.insert(a);
  }
  std::vector<std::vector<int>> out;
  for (auto a : atoms) {
    std::vector<int> members;
    for (int i = 0; i < r; ++i)
      if ((a >> i) & 1) members.push_back(i);
    out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned long long> integral_units(const std::vector<std::vector<long long>>& marks) {
  const int r = static_cast<int>(marks.size());
  const auto inv = inverse(marks);
  std::vector<Rational> x(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x[j] += inv[i][j];
  std::vector<unsigned long long> out;
  if (all_integral(x, 0)) out.push_back(0);
  unsigned long long mask = 0;
  for (unsigned long long step = 1; step < (1ULL << r); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= 1ULL << bit;
    const bool minus = (mask >> bit) & 1;
    for (int j = 0; j < r; ++j) x[j] += minus ? -2 * inv[bit][j] : 2 * inv[bit][j];
    if (all_integral(x, 0)) out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

}  // namespace oracle
