#include "burnside/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels)
    : leq_(std::move(leq)), labels_(std::move(labels)) {
  const int n = size();
  for (const auto& row : leq_)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::InvalidLattice, "order matrix is not square");
  if (labels_.empty())
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (static_cast<int>(labels_.size()) != n)
    throw Error(ErrorCode::InvalidLattice, "label count does not match the order matrix");
  for (int a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw Error(ErrorCode::InvalidLattice, "not reflexive at " + labels_[a]);
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw Error(ErrorCode::InvalidLattice,
                    "not antisymmetric at " + labels_[a] + ", " + labels_[b]);
      if (!leq_[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c])
          throw Error(ErrorCode::InvalidLattice,
                      "not transitive at " + labels_[a] + " <= " + labels_[b] + " <= " + labels_[c]);
    }
  }
}

std::vector<int> linear_extension(int n, const std::function<bool(int, int)>& leq) {
  // a < b forces strictly more elements below b than below a.
  std::vector<int> down(n, 0), order(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(b, a)) ++down[a];
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return down[a] < down[b]; });
  return order;
}

IntMatrix mobius(int n, const std::function<bool(int, int)>& leq) {
  const std::vector<int> order = linear_extension(n, leq);
  IntMatrix mu(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    const int x = order[i];
    mu[x][x] = 1;
    for (int j = i + 1; j < n; ++j) {
      const int y = order[j];
      if (!leq(x, y)) continue;
      long long sum = 0;
      for (int k = i; k < j; ++k) {
        const int z = order[k];
        if (leq(x, z) && leq(z, y)) sum += mu[x][z];
      }
      mu[x][y] = -sum;
    }
  }
  return mu;
}

IntMatrix mobius(const FinitePoset& poset) {
  return mobius(poset.size(), [&](int a, int b) { return poset.leq(a, b); });
}

// ------------------------------------------------------------------ GLattice

std::shared_ptr<const GLattice> GLattice::from_poset(const FinitePoset& poset,
                                                     const std::vector<std::vector<int>>& action,
                                                     const FiniteGroup& group) {
  auto lat = std::shared_ptr<GLattice>(new GLattice());
  const int n = poset.size();
  if (n == 0) throw Error(ErrorCode::InvalidLattice, "empty lattice");
  lat->kind_ = Kind::Explicit;
  lat->size_ = n;
  lat->group_order_ = group.order();
  lat->leq_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    lat->labels_.push_back(poset.label(a));
    for (int b = 0; b < n; ++b) lat->leq_[static_cast<std::size_t>(a) * n + b] = poset.leq(a, b);
  }
  lat->meet_.assign(static_cast<std::size_t>(n) * n, -1);
  lat->join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lo = -1, hi = -1;
      for (int c = 0; c < n; ++c) {
        if (poset.leq(c, a) && poset.leq(c, b) && (lo < 0 || poset.leq(lo, c))) lo = c;
        if (poset.leq(a, c) && poset.leq(b, c) && (hi < 0 || poset.leq(c, hi))) hi = c;
      }
      for (int c = 0; c < n && lo >= 0; ++c)
        if (poset.leq(c, a) && poset.leq(c, b) && !poset.leq(c, lo)) lo = -1;
      for (int c = 0; c < n && hi >= 0; ++c)
        if (poset.leq(a, c) && poset.leq(b, c) && !poset.leq(hi, c)) hi = -1;
      if (lo < 0 || hi < 0)
        throw Error(ErrorCode::InvalidLattice,
                    "no " + std::string(lo < 0 ? "meet" : "join") + " for " + poset.label(a) +
                        ", " + poset.label(b));
      lat->meet_[static_cast<std::size_t>(a) * n + b] = lo;
      lat->join_[static_cast<std::size_t>(a) * n + b] = hi;
    }
  lat->bottom_ = lat->meet_[0];
  lat->top_ = lat->join_[0];
  for (int a = 0; a < n; ++a) {
    lat->bottom_ = lat->meet(lat->bottom_, a);
    lat->top_ = lat->join(lat->top_, a);
  }

  if (static_cast<int>(action.size()) != group.order())
    throw Error(ErrorCode::ActionNotByHomomorphisms,
                "action must list one permutation per group element");
  for (int g = 0; g < group.order(); ++g) {
    const auto& p = action[g];
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(p.size()) != n || p[x] < 0 || p[x] >= n || seen[p[x]])
        throw Error(ErrorCode::ActionNotByHomomorphisms,
                    "element " + std::to_string(g) + " does not act by a permutation");
      seen[p[x]] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (poset.leq(a, b) != poset.leq(p[a], p[b]))
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "element " + std::to_string(g) + " does not preserve the order at " +
                          poset.label(a) + ", " + poset.label(b));
  }
  for (int x = 0; x < n; ++x)
    if (action[group.identity()][x] != x)
      throw Error(ErrorCode::ActionNotByHomomorphisms, "identity does not act trivially");
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < n; ++x)
        if (action[group.mul(g, h)][x] != action[g][action[h][x]])
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "action of " + std::to_string(g) + "*" + std::to_string(h) +
                          " differs from the composite at " + poset.label(x));
  lat->action_ = action;
  return lat;
}

bool GLattice::leq(int a, int b) const {
  switch (kind_) {
    case Kind::Bitmask: return (a & ~b) == 0;
    case Kind::Subgroups: return subgroups_->leq(a, b);
    case Kind::Explicit: break;
  }
  return leq_[static_cast<std::size_t>(a) * size_ + b] != 0;
}

int GLattice::meet(int a, int b) const {
  switch (kind_) {
    case Kind::Bitmask: return a & b;
    case Kind::Subgroups: return subgroups_->meet(a, b);
    case Kind::Explicit: break;
  }
  return meet_[static_cast<std::size_t>(a) * size_ + b];
}

int GLattice::join(int a, int b) const {
  switch (kind_) {
    case Kind::Bitmask: return a | b;
    case Kind::Subgroups: return subgroups_->join(a, b);
    case Kind::Explicit: break;
  }
  return join_[static_cast<std::size_t>(a) * size_ + b];
}

int GLattice::act(Elem g, int x) const {
  switch (kind_) {
    case Kind::Bitmask: {
      int y = 0;
      for (std::size_t i = 0; i < action_[g].size(); ++i)
        if ((x >> i) & 1) y |= 1 << action_[g][i];
      return y;
    }
    case Kind::Subgroups: return subgroups_->conjugate(g, x);
    case Kind::Explicit: break;
  }
  return action_[g][x];
}

std::string GLattice::label(int x) const {
  switch (kind_) {
    case Kind::Bitmask: {
      std::string s = "{";
      bool first = true;
      for (std::size_t i = 0; i < action_[0].size(); ++i)
        if ((x >> i) & 1) {
          s += (first ? "" : ",") + std::to_string(i);
          first = false;
        }
      return s + "}";
    }
    case Kind::Subgroups: return subgroups_->label(x);
    case Kind::Explicit: break;
  }
  return labels_[x];
}

std::shared_ptr<const GLattice> subgroup_glattice(std::shared_ptr<const SubgroupLattice> subgroups) {
  auto lat = std::shared_ptr<GLattice>(new GLattice());
  lat->kind_ = GLattice::Kind::Subgroups;
  lat->size_ = subgroups->size();
  lat->bottom_ = subgroups->trivial();
  lat->top_ = subgroups->whole();
  lat->group_order_ = subgroups->group().order();
  lat->subgroups_ = std::move(subgroups);
  return lat;
}

std::shared_ptr<const GLattice> powerset_glattice(const FiniteGroup& group,
                                                  const std::vector<std::vector<int>>& point_action,
                                                  int cap) {
  if (static_cast<int>(point_action.size()) != group.order())
    throw Error(ErrorCode::ActionNotByHomomorphisms,
                "action must list one permutation per group element");
  const int m = point_action.empty() ? 0 : static_cast<int>(point_action[0].size());
  if (m > cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(m) + " points exceed the power-set cap " + std::to_string(cap));
  for (int g = 0; g < group.order(); ++g) {
    std::vector<char> seen(m, 0);
    for (int i = 0; i < m; ++i) {
      const auto& p = point_action[g];
      if (static_cast<int>(p.size()) != m || p[i] < 0 || p[i] >= m || seen[p[i]])
        throw Error(ErrorCode::ActionNotByHomomorphisms,
                    "element " + std::to_string(g) + " does not act by a permutation");
      seen[p[i]] = 1;
    }
    for (int h = 0; h < group.order(); ++h)
      for (int i = 0; i < m; ++i)
        if (point_action[group.mul(g, h)][i] != point_action[g][point_action[h][i]])
          throw Error(ErrorCode::ActionNotByHomomorphisms,
                      "point action is not a homomorphism at " + std::to_string(g) + ", " +
                          std::to_string(h));
  }
  auto lat = std::shared_ptr<GLattice>(new GLattice());
  lat->kind_ = GLattice::Kind::Bitmask;
  lat->size_ = 1 << m;
  lat->bottom_ = 0;
  lat->top_ = (1 << m) - 1;
  lat->group_order_ = group.order();
  lat->action_ = point_action;
  return lat;
}

std::shared_ptr<const GLattice> point_glattice(const FiniteGroup& group) {
  auto lat = std::shared_ptr<GLattice>(new GLattice());
  lat->kind_ = GLattice::Kind::Explicit;
  lat->size_ = 1;
  lat->group_order_ = group.order();
  lat->leq_ = {1};
  lat->meet_ = {0};
  lat->join_ = {0};
  lat->action_.assign(group.order(), std::vector<int>{0});
  lat->labels_ = {"e"};
  return lat;
}

// ------------------------------------------------------------ families

int SublatticeFamily::sup(int h) const {
  int s = member[h].front();
  for (int x : member[h]) s = lattice->join(s, x);
  return s;
}

int SublatticeFamily::inf(int h) const {
  int s = member[h].front();
  for (int x : member[h]) s = lattice->meet(s, x);
  return s;
}

bool SublatticeFamily::contains(int h, int x) const {
  return std::binary_search(member[h].begin(), member[h].end(), x);
}

std::string FamilyReport::str() const {
  std::ostringstream os;
  if (ok()) return "family satisfies all conditions";
  for (const auto& v : violations) {
    os << "condition " << v.condition << " fails";
    if (v.h >= 0) os << " H=H" << v.h;
    if (v.k >= 0) os << " K=H" << v.k;
    if (v.s >= 0) os << " s=" << v.s;
    if (v.g >= 0) os << " g=" << v.g;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

FamilyReport validate_family(const SublatticeFamily& f) {
  FamilyReport report;
  const SubgroupLattice& sub = *f.subgroups;
  const GLattice& lat = *f.lattice;
  const FiniteGroup& g = sub.group();
  constexpr std::size_t kMaxWitnesses = 32;
  auto add = [&](FamilyViolation v) {
    if (report.violations.size() < kMaxWitnesses) report.violations.push_back(std::move(v));
  };
  if (static_cast<int>(f.member.size()) != sub.size()) {
    add({0, -1, -1, -1, -1, "family must list one member set per subgroup"});
    return report;
  }
  for (int h = 0; h < sub.size(); ++h) {
    if (f.member[h].empty()) {
      add({0, h, -1, -1, -1, "empty member set"});
      continue;
    }
    for (int x : f.member[h]) {
      if (x < 0 || x >= lat.size()) {
        add({0, h, -1, x, -1, "lattice index out of range"});
        return report;
      }
    }
    for (int a : f.member[h])
      for (int b : f.member[h])
        if (!f.contains(h, lat.meet(a, b)) || !f.contains(h, lat.join(a, b)))
          add({0, h, -1, a, -1, "not closed under meet and join with " + lat.label(b)});
  }
  if (!report.ok()) return report;

  for (int h = 0; h < sub.size(); ++h)
    for (Elem x = 0; x < g.order(); ++x) {
      std::vector<int> moved;
      for (int s : f.member[h]) moved.push_back(lat.act(x, s));
      std::sort(moved.begin(), moved.end());
      if (moved != f.member[sub.conjugate(x, h)])
        add({1, h, -1, -1, x, "conjugate family differs from the translated one"});
    }
  for (int h = 0; h < sub.size(); ++h)
    for (Elem x : sub.members(h))
      for (int s : f.member[h])
        if (lat.act(x, s) != s) add({2, h, -1, s, x, "element of H moves a member"});
  for (int h = 0; h < sub.size(); ++h)
    for (int k : sub.subgroups_of(h)) {
      const int top_k = f.sup(k);
      for (int s : f.member[h])
        if (!f.contains(k, lat.meet(s, top_k)))
          add({3, h, k, s, -1, "s ^ sup Lambda_K is not in Lambda_K"});
      if (!lat.leq(top_k, f.sup(h)))
        add({4, h, k, -1, -1, "sup Lambda_K is not below sup Lambda_H"});
    }
  return report;
}

SublatticeFamily slice_family(std::shared_ptr<const SubgroupLattice> subgroups) {
  SublatticeFamily f{subgroup_glattice(subgroups), subgroups, {}};
  const int n = subgroups->size();
  f.member.resize(n);
  for (int h = 0; h < n; ++h)
    for (int e = 0; e < n; ++e)
      if (subgroups->leq(h, e)) f.member[h].push_back(e);
  return f;
}

SublatticeFamily conormal_family(std::shared_ptr<const SubgroupLattice> subgroups) {
  SublatticeFamily f{subgroup_glattice(subgroups), subgroups, {}};
  const int n = subgroups->size();
  f.member.resize(n);
  for (int h = 0; h < n; ++h)
    for (int u : subgroups->subgroups_of(h))
      if (subgroups->is_normal(u, h)) f.member[h].push_back(u);
  return f;
}

SublatticeFamily invariant_family(std::shared_ptr<const SubgroupLattice> subgroups,
                                  std::shared_ptr<const GLattice> lattice) {
  SublatticeFamily f{std::move(lattice), subgroups, {}};
  const int n = subgroups->size();
  f.member.resize(n);
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < f.lattice->size(); ++x) {
      bool fixed = true;
      for (Elem y : subgroups->members(h)) fixed = fixed && f.lattice->act(y, x) == x;
      if (fixed) f.member[h].push_back(x);
    }
  return f;
}

}  // namespace burnside
