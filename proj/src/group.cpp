#include "burnside/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <regex>
#include <unordered_map>

#include "burnside/error.hpp"

namespace burnside {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

int ElementSet::size() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<Elem>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// --------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::string name, std::vector<int> flat, int order)
    : name_(std::move(name)), order_(order), table_(std::move(flat)) {}

namespace {

void check_group_table(const std::vector<int>& t, int n, Elem& identity,
                       std::vector<Elem>& inverse) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");
  inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (at(x, y) == identity && at(y, x) == identity) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0)
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse");
  }
  // Light's test: associativity against a generating set suffices.
  std::vector<char> reached(n, 0);
  std::vector<int> list, gens;
  for (int x = 0; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    reached[x] = 1;
    list.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (int z : {at(list[i], list[j]), at(list[j], list[i])})
          if (!reached[z]) {
            reached[z] = 1;
            list.push_back(z);
          }
  }
  for (int g : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (at(at(x, g), y) != at(x, at(g, y)))
          throw Error(ErrorCode::NotAssociative,
                      "(" + std::to_string(x) + "*" + std::to_string(g) + ")*" +
                          std::to_string(y) + " != " + std::to_string(x) + "*(" +
                          std::to_string(g) + "*" + std::to_string(y) + ")");
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table,
                                    int cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  if (n > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::InvalidInput, "multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw Error(ErrorCode::InvalidInput, "table entry out of range: " + std::to_string(v));
      flat.push_back(v);
    }
  }
  FiniteGroup g(std::move(name), std::move(flat), n);
  check_group_table(g.table_, n, g.identity_, g.inverse_);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, int degree,
                                           const std::vector<std::vector<int>>& generators,
                                           int cap) {
  using Perm = std::vector<int>;
  for (const auto& p : generators) {
    std::vector<char> seen(degree, 0);
    bool ok = static_cast<int>(p.size()) == degree;
    for (int i = 0; ok && i < degree; ++i) {
      ok = p[i] >= 0 && p[i] < degree && !seen[p[i]];
      if (ok) seen[p[i]] = 1;
    }
    if (!ok) throw Error(ErrorCode::InvalidPermutation, "generator is not a permutation of " +
                                                            std::to_string(degree) + " points");
  }
  auto compose = [degree](const Perm& a, const Perm& b) {  // a after b
    Perm c(degree);
    for (int i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : generators) {
      Perm c = compose(elems[i], s);
      if (index.emplace(c, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(c));
        if (static_cast<int>(elems.size()) > cap)
          throw Error(ErrorCode::OrderCapExceeded,
                      "generated group exceeds cap " + std::to_string(cap));
      }
    }
  std::sort(elems.begin(), elems.end());
  int k = 0;
  for (const auto& e : elems) index[e] = k++;
  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g(std::move(name), std::move(flat), n);
  g.identity_ = 0;
  g.inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inverse_[a] = b;
  return g;
}

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// r^i s^j stored at i + n j.
std::vector<std::vector<int>> dihedral_table(int n) {
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y) {
      int a = x % n, b = x / n, c = y % n, d = y / n;
      int i = ((b == 0 ? a + c : a - c) % n + n) % n;
      t[x][y] = i + n * ((b + d) % 2);
    }
  return t;
}

// +-1, +-i, +-j, +-k stored at 2 * unit + negative.
std::vector<std::vector<int>> quaternion_table() {
  // unit products: sign and unit of u * v for u, v in {1, i, j, k}
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x / 2, v = y / 2;
      int sign = (x % 2) ^ (y % 2) ^ neg[u][v];
      t[x][y] = 2 * unit[u][v] + sign;
    }
  return t;
}

}  // namespace

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  static const std::regex family(R"(([CDS])(\d+))");
  std::smatch m;
  if (name == "Q8") return from_table(name, quaternion_table());
  if (name == "C2xC2") {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table(name, t);
  }
  if (name == "A4") return from_permutations(name, 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  if (std::regex_match(name, m, family)) {
    const int n = std::stoi(m[2]);
    if (n >= 1 && n <= kDefaultOrderCap / 2) {
      if (m[1] == "C") return from_table(name, cyclic_table(n));
      if (m[1] == "D") return from_table(name, dihedral_table(n));
      if (m[1] == "S" && n <= 4) {
        std::vector<std::vector<int>> gens;
        if (n >= 2) {
          std::vector<int> cycle(n), swap(n);
          std::iota(swap.begin(), swap.end(), 0);
          std::swap(swap[0], swap[1]);
          for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
          gens = {cycle, swap};
        }
        return from_permutations(name, n, gens);
      }
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown built-in group '" + name + "'");
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

ElementSet closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
  ElementSet s(g.order());
  std::vector<Elem> list{g.identity()};
  s.insert(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem x : generators) {
      Elem y = g.mul(list[i], x);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  return s;
}

// ---------------------------------------------------------- SubgroupLattice

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> group)
    : group_(std::move(group)) {
  const FiniteGroup& g = *group_;
  const int n = g.order();

  // Cyclic extension: every subgroup arises from a smaller one by adjoining
  // one element.
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  std::vector<ElementSet> found;
  std::vector<std::vector<Elem>> gens;
  found.push_back(closure(g, {}));
  gens.emplace_back();
  seen.emplace(found[0], 0);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Elem x = 0; x < n; ++x) {
      if (found[i].contains(x)) continue;
      std::vector<Elem> gx = gens[i];
      gx.push_back(x);
      ElementSet s = closure(g, gx);
      if (seen.emplace(s, static_cast<int>(found.size())).second) {
        found.push_back(std::move(s));
        gens.push_back(std::move(gx));
      }
    }

  std::vector<std::vector<Elem>> mem;
  mem.reserve(found.size());
  for (const auto& s : found) mem.push_back(s.members());
  std::vector<int> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (mem[a].size() != mem[b].size()) return mem[a].size() < mem[b].size();
    return mem[a] < mem[b];
  });
  for (int p : perm) {
    members_.push_back(std::move(mem[p]));
    masks_.push_back(std::move(found[p]));
  }

  const int m = size();
  leq_.assign(static_cast<std::size_t>(m) * m, 0);
  below_.assign(m, {});
  above_.assign(m, {});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (order(b) % order(a) == 0 && masks_[a].subset_of(masks_[b])) {
        leq_[static_cast<std::size_t>(a) * m + b] = 1;
        below_[b].push_back(a);
        above_[a].push_back(b);
      }

  conj_.assign(static_cast<std::size_t>(n) * m, -1);
  for (Elem x = 0; x < n; ++x)
    for (int k = 0; k < m; ++k) {
      auto& slot = conj_[static_cast<std::size_t>(x) * m + k];
      ElementSet s(n);
      for (Elem y : members_[k]) s.insert(g.conj(x, y));
      slot = find(s);
    }

  class_rep_.assign(m, -1);
  for (int k = 0; k < m; ++k) {
    if (class_rep_[k] >= 0) continue;
    class_reps_.push_back(k);
    for (Elem x = 0; x < n; ++x) class_rep_[conjugate(x, k)] = k;
  }
}

int SubgroupLattice::find(const ElementSet& s) const {
  const int k = s.size();
  auto lo = std::lower_bound(members_.begin(), members_.end(), k,
                             [](const std::vector<Elem>& v, int sz) {
                               return static_cast<int>(v.size()) < sz;
                             });
  for (auto it = lo; it != members_.end() && static_cast<int>(it->size()) == k; ++it) {
    const int id = static_cast<int>(it - members_.begin());
    if (masks_[id] == s) return id;
  }
  return -1;
}

int SubgroupLattice::id_of(const std::vector<Elem>& members) const {
  ElementSet s(group_->order());
  for (Elem x : members) {
    if (x < 0 || x >= group_->order())
      throw Error(ErrorCode::NotSubgroup, "element out of range: " + std::to_string(x));
    s.insert(x);
  }
  int id = find(s);
  if (id < 0) throw Error(ErrorCode::NotSubgroup, "set is not closed under multiplication");
  return id;
}

int SubgroupLattice::generated(const std::vector<Elem>& generators) const {
  return find(closure(*group_, generators));
}

int SubgroupLattice::extend(int k, Elem x) const {
  for (int c : above_[k])
    if (masks_[c].contains(x)) return c;  // above_ is ascending, so the first hit is least
  return -1;
}

int SubgroupLattice::meet(int a, int b) const { return find(masks_[a] & masks_[b]); }

int SubgroupLattice::join(int a, int b) const {
  // The least common upper bound has strictly smallest order.
  for (int c : above_[a])
    if (leq(b, c)) return c;
  return whole();
}

std::vector<int> SubgroupLattice::reps_under(int h) const {
  std::vector<int> out;
  for (int k : below_[h])
    if (rep_under(h, k) == k) out.push_back(k);
  return out;
}

int SubgroupLattice::rep_under(int h, int k) const {
  int best = k;
  for (Elem x : members_[h]) best = std::min(best, conjugate(x, k));
  return best;
}

bool SubgroupLattice::is_normal(int k, int h) const {
  if (!leq(k, h)) return false;
  for (Elem x : members_[h])
    if (conjugate(x, k) != k) return false;
  return true;
}

int SubgroupLattice::normalizer(int k, int h) const {
  std::vector<Elem> n;
  for (Elem x : members_[h])
    if (conjugate(x, k) == k) n.push_back(x);
  return id_of(n);
}

// ------------------------------------------------------------ free helpers

std::vector<Elem> double_coset_reps(const SubgroupLattice& lat, int h, int k, int u) {
  const FiniteGroup& g = lat.group();
  std::vector<char> covered(g.order(), 0);
  std::vector<Elem> reps;
  for (Elem x : lat.members(h)) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem a : lat.members(k)) {
      Elem ax = g.mul(a, x);
      for (Elem b : lat.members(u)) covered[g.mul(ax, b)] = 1;
    }
  }
  return reps;
}

std::vector<Elem> left_coset_reps(const SubgroupLattice& lat, int h, int k) {
  const FiniteGroup& g = lat.group();
  std::vector<char> covered(g.order(), 0);
  std::vector<Elem> reps;
  for (Elem x : lat.members(h)) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem b : lat.members(k)) covered[g.mul(x, b)] = 1;
  }
  return reps;
}

std::vector<Elem> stabilizer(const SubgroupLattice& lat, int h,
                             const std::function<bool(Elem)>& fixes) {
  std::vector<Elem> out;
  for (Elem x : lat.members(h))
    if (fixes(x)) out.push_back(x);
  return out;
}

bool is_p_group(int order, Prime p) {
  return p.is_infinite() ? false : p.part_of(static_cast<long long>(order)) == order;
}

namespace {

int commutator_subgroup(const SubgroupLattice& lat, int k) {
  const FiniteGroup& g = lat.group();
  std::vector<Elem> comm;
  for (Elem a : lat.members(k))
    for (Elem b : lat.members(k)) comm.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  std::sort(comm.begin(), comm.end());
  comm.erase(std::unique(comm.begin(), comm.end()), comm.end());
  return lat.generated(comm);
}

}  // namespace

int p_residual(const SubgroupLattice& lat, int k, Prime p) {
  if (p.is_infinite()) {
    int d = k;
    for (int next = commutator_subgroup(lat, d); next != d; next = commutator_subgroup(lat, d))
      d = next;
    return d;
  }
  // Generated by the elements of order prime to p.
  std::vector<Elem> gens;
  for (Elem x : lat.members(k))
    if (lat.group().element_order(x) % p.value() != 0) gens.push_back(x);
  return lat.generated(gens);
}

bool is_solvable(const SubgroupLattice& lat) {
  return p_residual(lat, lat.whole(), Prime::infinity()) == lat.trivial();
}

// ------------------------------------------------------------ QuotientGroup

QuotientGroup::QuotientGroup(const FiniteGroup& parent, const std::vector<Elem>& numerator,
                             const std::vector<Elem>& kernel)
    : coset_(parent.order(), -1) {
  std::vector<Elem> num = numerator;
  std::sort(num.begin(), num.end());
  for (Elem x : num) {
    if (coset_[x] >= 0) continue;
    const int idx = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (Elem k : kernel) coset_[parent.mul(x, k)] = idx;
  }
  const int n = order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = coset_[parent.mul(reps_[a], reps_[b])];
      if (c < 0) throw Error(ErrorCode::NotSubgroup, "numerator is not closed");
      table[a][b] = c;
    }
  quotient_ = std::make_shared<const FiniteGroup>(FiniteGroup::from_table("W", table));
}

std::vector<std::vector<int>> QuotientGroup::all_sylows(Prime p) const {
  if (p.is_infinite()) {
    std::vector<int> all(order());
    std::iota(all.begin(), all.end(), 0);
    return {all};
  }
  const int target = static_cast<int>(p.part_of(static_cast<long long>(order())));
  SubgroupLattice lat(quotient_);
  std::vector<std::vector<int>> out;
  for (int id = 0; id < lat.size(); ++id)
    if (lat.order(id) == target) out.push_back(lat.members(id));
  return out;
}

std::vector<int> QuotientGroup::sylow(Prime p) const { return all_sylows(p).front(); }

}  // namespace burnside
