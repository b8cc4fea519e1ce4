#include "burnside/functor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

bool FiniteMonoid::is_commutative() const {
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool LatticeView::leq(int h, int a, int b) const {
  return family.lattice->leq(to_lattice[h][a], to_lattice[h][b]);
}

int LatticeView::sup(int h) const { return from_lattice[h][family.sup(h)]; }

int LatticeView::inf_above(int h, int x) const {
  const GLattice& lat = *family.lattice;
  int best = -1;
  for (int y : family.member[h])
    if (lat.leq(x, y)) best = best < 0 ? y : lat.meet(best, y);
  if (best < 0)
    throw Error(ErrorCode::InvalidFamily,
                "no member of Lambda_H" + std::to_string(h) + " lies above " + lat.label(x));
  return from_lattice[h][best];
}

std::string FunctorReport::str() const {
  if (ok()) return "functor satisfies M.1-M.3";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.axiom << " fails";
    if (v.l >= 0) os << " L=H" << v.l;
    if (v.k >= 0) os << " K=H" << v.k;
    if (v.h >= 0) os << " H=H" << v.h;
    if (v.g >= 0) os << " g=" << v.g;
    if (v.r >= 0) os << " r=" << v.r;
    if (v.s >= 0) os << " s=" << v.s;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------ MonoidFunctor

MonoidFunctor::MonoidFunctor(Definition def)
    : name_(std::move(def.name)),
      subgroups_(std::move(def.subgroups)),
      monoids_(std::move(def.monoids)),
      lattice_(std::move(def.lattice)) {
  const SubgroupLattice& sub = *subgroups_;
  const int n = sub.size();
  const int order = sub.group().order();
  if (static_cast<int>(monoids_.size()) != n)
    throw Error(ErrorCode::InvalidInput, "functor must give one monoid per subgroup");
  auto check_range = [&](int h, int v, const char* what) {
    if (v < 0 || v >= monoids_[h].size)
      throw Error(ErrorCode::InvalidInput,
                  std::string(what) + " lands outside M(" + sub.label(h) + ")");
  };

  con_.assign(n, {});
  for (int h = 0; h < n; ++h) {
    con_[h].assign(order, std::vector<int>(monoids_[h].size));
    for (Elem g = 0; g < order; ++g) {
      const int gh = sub.conjugate(g, h);
      for (int s = 0; s < monoids_[h].size; ++s) {
        con_[h][g][s] = def.con(h, g, s);
        check_range(gh, con_[h][g][s], "conjugation");
      }
    }
  }

  std::vector<std::vector<int>> covers(n);
  for (int k = 0; k < n; ++k)
    for (int c = k + 1; c < n; ++c) {
      if (!sub.leq(k, c)) continue;
      bool cover = true;
      for (int d = k + 1; d < c && cover; ++d) cover = !(sub.leq(k, d) && sub.leq(d, c));
      if (cover) covers[k].push_back(c);
    }

  res_.assign(static_cast<std::size_t>(n) * n, {});
  chain_.assign(static_cast<std::size_t>(n) * n, {});
  std::map<std::pair<int, int>, std::vector<int>> cover_res;
  for (int k = n - 1; k >= 0; --k)
    for (int h = k; h < n; ++h) {
      if (!sub.leq(k, h)) continue;
      auto& chain = chain_[pair_index(k, h)];
      auto& map = res_[pair_index(k, h)];
      if (k == h) {
        chain = {k};
        map.resize(monoids_[k].size);
        for (int s = 0; s < monoids_[k].size; ++s) map[s] = s;
        continue;
      }
      int next = -1;
      for (int c : covers[k])
        if (sub.leq(c, h)) {
          next = c;
          break;
        }
      auto [it, fresh] = cover_res.try_emplace({k, next});
      if (fresh) {
        it->second.resize(monoids_[next].size);
        for (int s = 0; s < monoids_[next].size; ++s) {
          it->second[s] = def.res(k, next, s);
          check_range(k, it->second[s], "restriction");
        }
      }
      chain = {k};
      const auto& upper = chain_[pair_index(next, h)];
      chain.insert(chain.end(), upper.begin(), upper.end());
      const auto& upper_map = res_[pair_index(next, h)];
      map.resize(monoids_[h].size);
      for (int s = 0; s < monoids_[h].size; ++s) map[s] = it->second[upper_map[s]];
    }
}

int MonoidFunctor::con(int h, Elem g, int s) const { return con_[h][g][s]; }

int MonoidFunctor::res(int k, int h, int s) const {
  const auto& map = res_[pair_index(k, h)];
  if (map.empty())
    throw Error(ErrorCode::NotSubgroup, subgroups_->label(k) + " is not below " + subgroups_->label(h));
  return map[s];
}

const std::vector<int>& MonoidFunctor::cover_chain(int k, int h) const {
  return chain_[pair_index(k, h)];
}

bool MonoidFunctor::all_commutative() const {
  return std::all_of(monoids_.begin(), monoids_.end(),
                     [](const FiniteMonoid& m) { return m.is_commutative(); });
}

const LatticeView& MonoidFunctor::lattice() const {
  if (!lattice_)
    throw Error(ErrorCode::NotLatticeFunctor, "functor '" + name_ + "' has no lattice structure");
  return *lattice_;
}

FunctorReport check_functor(const MonoidFunctor& m) {
  FunctorReport report;
  const SubgroupLattice& sub = m.subgroups();
  const FiniteGroup& g = m.group();
  const int n = sub.size();
  constexpr std::size_t kMaxWitnesses = 32;
  auto add = [&](FunctorViolation v) {
    if (report.violations.size() < kMaxWitnesses) report.violations.push_back(std::move(v));
  };

  for (int h = 0; h < n; ++h) {
    const FiniteMonoid& mh = m.monoid(h);
    for (int a = 0; a < mh.size; ++a) {
      if (mh.mul(mh.identity, a) != a || mh.mul(a, mh.identity) != a)
        add({"hom", h, -1, -1, -1, -1, a, "identity of M(H) is not neutral"});
      for (int b = 0; b < mh.size; ++b)
        for (int c = 0; c < mh.size; ++c)
          if (mh.mul(mh.mul(a, b), c) != mh.mul(a, mh.mul(b, c)))
            add({"hom", h, -1, -1, -1, -1, a, "M(H) is not associative"});
    }
  }

  for (int h = 0; h < n; ++h) {
    const FiniteMonoid& mh = m.monoid(h);
    for (Elem x = 0; x < g.order(); ++x) {
      const FiniteMonoid& target = m.monoid(sub.conjugate(x, h));
      if (m.con(h, x, mh.identity) != target.identity)
        add({"hom", h, -1, -1, x, -1, mh.identity, "conjugation moves the identity"});
      for (int a = 0; a < mh.size; ++a)
        for (int b = 0; b < mh.size; ++b)
          if (m.con(h, x, mh.mul(a, b)) != target.mul(m.con(h, x, a), m.con(h, x, b)))
            add({"hom", h, -1, -1, x, -1, a, "conjugation is not multiplicative"});
    }
    for (int k : sub.subgroups_of(h)) {
      const FiniteMonoid& mk = m.monoid(k);
      if (m.res(k, h, mh.identity) != mk.identity)
        add({"hom", h, k, -1, -1, -1, mh.identity, "restriction moves the identity"});
      for (int a = 0; a < mh.size; ++a)
        for (int b = 0; b < mh.size; ++b)
          if (m.res(k, h, mh.mul(a, b)) != mk.mul(m.res(k, h, a), m.res(k, h, b)))
            add({"hom", h, k, -1, -1, -1, a, "restriction is not multiplicative"});
    }
  }

  // M.1
  for (int h = 0; h < n; ++h)
    for (int s = 0; s < m.monoid(h).size; ++s) {
      for (Elem x : sub.members(h))
        if (m.con(h, x, s) != s) add({"M.1", h, -1, -1, x, -1, s, "c_{h,H} is not the identity"});
      for (Elem r = 0; r < g.order(); ++r) {
        const int rh = sub.conjugate(r, h);
        const int t = m.con(h, r, s);
        for (Elem x = 0; x < g.order(); ++x)
          if (m.con(rh, x, t) != m.con(h, g.mul(x, r), s))
            add({"M.1", h, -1, -1, x, r, s, "c_g c_r differs from c_{gr}"});
      }
    }

  // M.2
  for (int h = 0; h < n; ++h)
    for (int k : sub.subgroups_of(h))
      for (int l : sub.subgroups_of(k))
        for (int s = 0; s < m.monoid(h).size; ++s)
          if (m.res(l, k, m.res(k, h, s)) != m.res(l, h, s))
            add({"M.2", h, k, l, -1, -1, s,
                 "restriction through K gives " + m.label(l, m.res(l, k, m.res(k, h, s))) +
                     ", directly " + m.label(l, m.res(l, h, s))});

  // M.3
  for (int h = 0; h < n; ++h)
    for (int k : sub.subgroups_of(h))
      for (Elem x = 0; x < g.order(); ++x)
        for (int s = 0; s < m.monoid(h).size; ++s)
          if (m.con(k, x, m.res(k, h, s)) !=
              m.res(sub.conjugate(x, k), sub.conjugate(x, h), m.con(h, x, s)))
            add({"M.3", h, k, -1, x, -1, s, "conjugation does not commute with restriction"});
  return report;
}

// ----------------------------------------------------------------- builders

std::shared_ptr<const MonoidFunctor> lattice_functor(const SublatticeFamily& family,
                                                     std::string name, bool validate) {
  if (validate) {
    FamilyReport report = validate_family(family);
    if (!report.ok()) throw Error(ErrorCode::InvalidFamily, report.str());
  }
  const SubgroupLattice& sub = *family.subgroups;
  const GLattice& lat = *family.lattice;
  const int n = sub.size();
  if (static_cast<int>(family.member.size()) != n)
    throw Error(ErrorCode::InvalidFamily, "family must list one member set per subgroup");

  LatticeView view{family, {}, {}, {}};
  std::vector<FiniteMonoid> monoids(n);
  view.to_lattice.resize(n);
  view.from_lattice.assign(n, std::vector<int>(lat.size(), -1));
  for (int h = 0; h < n; ++h) {
    const auto& mem = family.member[h];
    if (mem.empty()) throw Error(ErrorCode::InvalidFamily, "Lambda_" + sub.label(h) + " is empty");
    std::vector<int> below(mem.size(), 0);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (int y : mem) below[i] += lat.leq(y, mem[i]);
    std::vector<std::size_t> idx(mem.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    for (std::size_t i : idx) {
      view.from_lattice[h][mem[i]] = static_cast<int>(view.to_lattice[h].size());
      view.to_lattice[h].push_back(mem[i]);
    }
    const int size = static_cast<int>(mem.size());
    FiniteMonoid& mon = monoids[h];
    mon.size = size;
    mon.table.resize(static_cast<std::size_t>(size) * size);
    for (int a = 0; a < size; ++a) {
      mon.labels.push_back(lat.label(view.to_lattice[h][a]));
      for (int b = 0; b < size; ++b) {
        const int v = view.from_lattice[h][lat.meet(view.to_lattice[h][a], view.to_lattice[h][b])];
        if (v < 0)
          throw Error(ErrorCode::InvalidFamily, "Lambda_" + sub.label(h) + " is not closed under meet");
        mon.table[static_cast<std::size_t>(a) * size + b] = v;
      }
    }
    const int top = view.from_lattice[h][family.sup(h)];
    if (top < 0)
      throw Error(ErrorCode::InvalidFamily, "Lambda_" + sub.label(h) + " is not closed under join");
    mon.identity = top;
  }
  view.mobius.resize(n);
  for (int h = 0; h < n; ++h)
    view.mobius[h] = mobius(monoids[h].size, [&view, h](int a, int b) { return view.leq(h, a, b); });

  std::vector<int> sups(n);
  for (int h = 0; h < n; ++h) sups[h] = family.sup(h);
  auto shared_view = std::make_shared<LatticeView>(view);

  MonoidFunctor::Definition def;
  def.name = std::move(name);
  def.subgroups = family.subgroups;
  def.monoids = std::move(monoids);
  def.con = [shared_view, &sub, &lat](int h, Elem g, int s) {
    const int gh = sub.conjugate(g, h);
    const int v = shared_view->from_lattice[gh][lat.act(g, shared_view->to_lattice[h][s])];
    if (v < 0)
      throw Error(ErrorCode::InvalidFamily,
                  "g Lambda_" + sub.label(h) + " is not Lambda_" + sub.label(gh) + " for g=" +
                      std::to_string(g));
    return v;
  };
  def.res = [shared_view, sups, &sub, &lat](int k, int h, int s) {
    const int v = shared_view->from_lattice[k][lat.meet(shared_view->to_lattice[h][s], sups[k])];
    if (v < 0)
      throw Error(ErrorCode::InvalidFamily,
                  "s ^ sup Lambda_" + sub.label(k) + " leaves Lambda_" + sub.label(k));
    return v;
  };
  def.lattice = std::move(view);
  return std::make_shared<const MonoidFunctor>(std::move(def));
}

std::shared_ptr<const MonoidFunctor> trivial_functor(std::shared_ptr<const SubgroupLattice> s) {
  SublatticeFamily f{point_glattice(s->group()), s, std::vector<std::vector<int>>(s->size(), {0})};
  return lattice_functor(f, "trivial");
}

std::shared_ptr<const MonoidFunctor> slice_functor(std::shared_ptr<const SubgroupLattice> s) {
  return lattice_functor(slice_family(std::move(s)), "slice");
}

std::shared_ptr<const MonoidFunctor> conormal_functor(std::shared_ptr<const SubgroupLattice> s) {
  return lattice_functor(conormal_family(std::move(s)), "conormal");
}

std::shared_ptr<const MonoidFunctor> crossed_functor(std::shared_ptr<const SubgroupLattice> s,
                                                     std::shared_ptr<const GLattice> lattice) {
  return lattice_functor(invariant_family(std::move(s), std::move(lattice)), "crossed");
}

std::shared_ptr<const MonoidFunctor> crossed_functor(std::shared_ptr<const SubgroupLattice> s,
                                                     const FiniteMonoid& monoid,
                                                     const std::vector<std::vector<int>>& action) {
  const FiniteGroup& g = s->group();
  const int m = monoid.size;
  if (static_cast<int>(action.size()) != g.order())
    throw Error(ErrorCode::ActionNotByHomomorphisms, "need one map per group element");
  for (Elem x = 0; x < g.order(); ++x) {
    if (static_cast<int>(action[x].size()) != m)
      throw Error(ErrorCode::ActionNotByHomomorphisms, "map of wrong size for " + std::to_string(x));
    if (action[x][monoid.identity] != monoid.identity)
      throw Error(ErrorCode::ActionNotByHomomorphisms,
                  "element " + std::to_string(x) + " moves the identity");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (action[x][monoid.mul(a, b)] != monoid.mul(action[x][a], action[x][b]))
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "element " + std::to_string(x) + " is not multiplicative at " +
                          std::to_string(a) + ", " + std::to_string(b));
    for (Elem y = 0; y < g.order(); ++y)
      for (int a = 0; a < m; ++a)
        if (action[g.mul(x, y)][a] != action[x][action[y][a]])
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "action of " + std::to_string(x) + "*" + std::to_string(y) +
                          " is not the composite");
  }
  for (int a = 0; a < m; ++a)
    if (action[g.identity()][a] != a)
      throw Error(ErrorCode::ActionNotByHomomorphisms, "identity acts non-trivially");

  const int n = s->size();
  auto fixed = std::make_shared<std::vector<std::vector<int>>>(n);
  auto index = std::make_shared<std::vector<std::vector<int>>>(n, std::vector<int>(m, -1));
  std::vector<FiniteMonoid> monoids(n);
  for (int h = 0; h < n; ++h) {
    for (int a = 0; a < m; ++a) {
      bool ok = true;
      for (Elem x : s->members(h)) ok = ok && action[x][a] == a;
      if (ok) {
        (*index)[h][a] = static_cast<int>((*fixed)[h].size());
        (*fixed)[h].push_back(a);
      }
    }
    FiniteMonoid& mon = monoids[h];
    mon.size = static_cast<int>((*fixed)[h].size());
    mon.table.resize(static_cast<std::size_t>(mon.size) * mon.size);
    for (int a = 0; a < mon.size; ++a) {
      const int sa = (*fixed)[h][a];
      mon.labels.push_back(monoid.labels.empty() ? std::to_string(sa) : monoid.labels[sa]);
      for (int b = 0; b < mon.size; ++b)
        mon.table[static_cast<std::size_t>(a) * mon.size + b] =
            (*index)[h][monoid.mul(sa, (*fixed)[h][b])];
    }
    mon.identity = (*index)[h][monoid.identity];
  }
  MonoidFunctor::Definition def;
  def.name = "crossed";
  def.subgroups = s;
  def.monoids = std::move(monoids);
  def.con = [fixed, index, action, s](int h, Elem x, int a) {
    return (*index)[s->conjugate(x, h)][action[x][(*fixed)[h][a]]];
  };
  def.res = [fixed, index](int k, int h, int a) { return (*index)[k][(*fixed)[h][a]]; };
  return std::make_shared<const MonoidFunctor>(std::move(def));
}

// ------------------------------------------------------------------ H^1

namespace {

void check_coefficients(const FiniteGroup& g, const FiniteGroup& a,
                        const std::vector<std::vector<int>>& action) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "coefficient group is not abelian");
  if (static_cast<int>(action.size()) != g.order())
    throw Error(ErrorCode::ActionNotByHomomorphisms, "need one automorphism per group element");
  for (Elem x = 0; x < g.order(); ++x) {
    if (static_cast<int>(action[x].size()) != a.order())
      throw Error(ErrorCode::ActionNotByHomomorphisms, "map of wrong size for " + std::to_string(x));
    std::vector<char> seen(a.order(), 0);
    for (int u = 0; u < a.order(); ++u) {
      const int v = action[x][u];
      if (v < 0 || v >= a.order() || seen[v])
        throw Error(ErrorCode::ActionNotByHomomorphisms,
                    "element " + std::to_string(x) + " does not act bijectively");
      seen[v] = 1;
      for (int w = 0; w < a.order(); ++w)
        if (action[x][a.mul(u, w)] != a.mul(v, action[x][w]))
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "element " + std::to_string(x) + " is not an endomorphism");
    }
    for (Elem y = 0; y < g.order(); ++y)
      for (int u = 0; u < a.order(); ++u)
        if (action[g.mul(x, y)][u] != action[x][action[y][u]])
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "action of " + std::to_string(x) + "*" + std::to_string(y) +
                          " is not the composite");
  }
}

}  // namespace

std::vector<std::vector<int>> cocycles(const SubgroupLattice& s, int h, const FiniteGroup& a,
                                       const std::vector<std::vector<int>>& action,
                                       long long cap) {
  const FiniteGroup& g = s.group();
  const auto& mem = s.members(h);
  const int m = static_cast<int>(mem.size());
  long long count = 1;
  for (int i = 0; i < m; ++i) {
    count *= a.order();
    if (count > cap)
      throw Error(ErrorCode::CapExceeded, "|A|^|H| exceeds the cocycle cap " + std::to_string(cap) +
                                              " for " + s.label(h));
  }
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[mem[i]] = i;
  // Constraints sigma(x y) = sigma(x) * x.sigma(y), checked once all three
  // positions are assigned.
  std::vector<std::vector<std::pair<int, int>>> due(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int k = pos[g.mul(mem[i], mem[j])];
      due[std::max({i, j, k})].emplace_back(i, j);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(m, 0);
  auto holds = [&](int i, int j) {
    const int k = pos[g.mul(mem[i], mem[j])];
    return sigma[k] == a.mul(sigma[i], action[mem[i]][sigma[j]]);
  };
  std::function<void(int)> extend = [&](int i) {
    if (i == m) {
      out.push_back(sigma);
      return;
    }
    for (int v = 0; v < a.order(); ++v) {
      sigma[i] = v;
      bool ok = true;
      for (auto [x, y] : due[i])
        if (!(ok = holds(x, y))) break;
      if (ok) extend(i + 1);
    }
  };
  extend(0);
  return out;
}

std::shared_ptr<const MonoidFunctor> monomial_functor(std::shared_ptr<const SubgroupLattice> s,
                                                      const FiniteGroup& coefficients,
                                                      const std::vector<std::vector<int>>& action,
                                                      long long cap) {
  const FiniteGroup& g = s->group();
  const FiniteGroup& a = coefficients;
  check_coefficients(g, a, action);
  const int n = s->size();

  struct Classes {
    std::vector<std::vector<int>> reps;
    std::map<std::vector<int>, int> class_of;
  };
  auto data = std::make_shared<std::vector<Classes>>(n);
  std::vector<FiniteMonoid> monoids(n);
  for (int h = 0; h < n; ++h) {
    const auto& mem = s->members(h);
    auto z1 = cocycles(*s, h, a, action, cap);
    std::map<std::vector<int>, std::vector<int>> rep_of;
    for (const auto& sigma : z1) {
      std::vector<int> best = sigma;
      for (int u = 0; u < a.order(); ++u) {
        std::vector<int> moved(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i)
          moved[i] = a.mul(a.mul(a.inv(u), sigma[i]), action[mem[i]][u]);
        best = std::min(best, moved);
      }
      rep_of[sigma] = best;
    }
    Classes& c = (*data)[h];
    for (const auto& [sigma, rep] : rep_of)
      if (sigma == rep) c.reps.push_back(rep);  // map order keeps reps sorted
    std::map<std::vector<int>, int> rep_index;
    for (std::size_t i = 0; i < c.reps.size(); ++i) rep_index[c.reps[i]] = static_cast<int>(i);
    for (const auto& [sigma, rep] : rep_of) c.class_of[sigma] = rep_index.at(rep);

    FiniteMonoid& mon = monoids[h];
    mon.size = static_cast<int>(c.reps.size());
    mon.table.resize(static_cast<std::size_t>(mon.size) * mon.size);
    for (int x = 0; x < mon.size; ++x) {
      std::string label = "[";
      for (std::size_t i = 0; i < c.reps[x].size(); ++i)
        label += (i ? "," : "") + std::to_string(c.reps[x][i]);
      mon.labels.push_back(label + "]");
      for (int y = 0; y < mon.size; ++y) {
        std::vector<int> prod(mem.size());
        for (std::size_t i = 0; i < mem.size(); ++i) prod[i] = a.mul(c.reps[x][i], c.reps[y][i]);
        mon.table[static_cast<std::size_t>(x) * mon.size + y] = c.class_of.at(prod);
      }
    }
    mon.identity = c.class_of.at(std::vector<int>(mem.size(), a.identity()));
  }

  MonoidFunctor::Definition def;
  def.name = "monomial";
  def.subgroups = s;
  def.monoids = std::move(monoids);
  def.con = [data, s, action](int h, Elem x, int c) {
    const FiniteGroup& g = s->group();
    const int xh = s->conjugate(x, h);
    const auto& src = s->members(h);
    const auto& sigma = (*data)[h].reps[c];
    std::vector<int> tau(src.size());
    const auto& dst = s->members(xh);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      const Elem y = g.conj(g.inv(x), dst[i]);
      const auto j = std::lower_bound(src.begin(), src.end(), y) - src.begin();
      tau[i] = action[x][sigma[j]];
    }
    return (*data)[xh].class_of.at(tau);
  };
  def.res = [data, s](int k, int h, int c) {
    const auto& src = s->members(h);
    const auto& sigma = (*data)[h].reps[c];
    std::vector<int> tau;
    for (Elem y : s->members(k))
      tau.push_back(sigma[std::lower_bound(src.begin(), src.end(), y) - src.begin()]);
    return (*data)[k].class_of.at(tau);
  };
  (void)g;
  return std::make_shared<const MonoidFunctor>(std::move(def));
}

}  // namespace burnside
