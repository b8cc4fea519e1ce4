#include "burnside/partial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "burnside/error.hpp"

namespace burnside {

namespace {

std::string pair_label(const BasisSystem& b, const BasisPair& q) {
  return "(" + b.subgroups().label(q.k) + "," + b.functor().label(q.k, q.s) + ")";
}

std::vector<Rational> to_rationals(const std::vector<long long>& row) {
  std::vector<Rational> out;
  for (long long v : row) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace

PartialSystem::PartialSystem(std::shared_ptr<const BasisSystem> ambient, const Predicate& in_x,
                             bool subring, std::string name)
    : ambient_(std::move(ambient)), name_(std::move(name)), subring_(subring) {
  const BasisSystem& b = *ambient_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  const LatticeView& lv = m.lattice();
  const GLattice& lat = *lv.family.lattice;
  const FiniteGroup& g = sub.group();
  if (b.host() != sub.whole())
    throw Error(ErrorCode::InvalidInput, "partial systems live over the whole group");

  member_.resize(sub.size());
  for (int k = 0; k < sub.size(); ++k) {
    member_[k].assign(m.monoid(k).size, 0);
    for (int s = 0; s < m.monoid(k).size; ++s)
      if (in_x(k, lv.to_lattice[k][s])) {
        member_[k][s] = 1;
        pairs_.push_back({k, s});
      }
  }

  for (const auto& [k, s] : pairs_)
    for (Elem x = 0; x < g.order(); ++x)
      if (!contains(sub.conjugate(x, k), m.con(k, x, s)))
        throw Error(ErrorCode::NotGClosed,
                    pair_label(b, {k, s}) + " is in X but its conjugate by g=" + std::to_string(x) +
                        " is not");

  // Condition (A), over every pair of X and every element of its stabiliser.
  std::vector<std::string> violations;
  std::map<std::pair<BasisPair, Elem>, BasisPair> lifts;
  for (const auto& [u, t] : pairs_)
    for (Elem x = 0; x < g.order(); ++x) {
      if (sub.conjugate(x, u) != u || m.con(u, x, t) != t) continue;
      const int v = sub.extend(u, x);
      const int raw = lv.to_lattice[v][lv.inf_above(v, lv.to_lattice[u][t])];
      std::vector<BasisPair> above;
      for (const auto& q : pairs_)
        if (sub.leq(v, q.k) && lat.leq(raw, lv.to_lattice[q.k][q.s])) above.push_back(q);
      std::vector<BasisPair> minimal;
      for (const auto& q : above) {
        bool is_min = true;
        for (const auto& r : above) is_min = is_min && (r == q || !leq(r, q));
        if (is_min) minimal.push_back(q);
      }
      if (minimal.size() != 1) {
        violations.push_back("U=" + sub.label(u) + " t=" + lat.label(lv.to_lattice[u][t]) +
                             " g=" + std::to_string(x) + ": " + std::to_string(minimal.size()) +
                             " minimal overlifts");
        continue;
      }
      lifts[{{u, t}, x}] = minimal.front();
    }
  if (!violations.empty()) {
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (std::size_t i = 0; i < violations.size() && i < 8; ++i) os << "; " << violations[i];
    throw Error(ErrorCode::ConditionAViolated, os.str());
  }

  if (subring_) {
    const BasisPair top{sub.whole(), lv.sup(sub.whole())};
    if (!contains(top.k, top.s))
      throw Error(ErrorCode::ClosureViolated, pair_label(b, top) + " is not in X");
    for (const auto& a : pairs_)
      for (const auto& c : pairs_) {
        const int k = sub.meet(a.k, c.k);
        const int x = lat.meet(lv.to_lattice[a.k][a.s], lv.to_lattice[c.k][c.s]);
        const int s = lv.from_lattice[k][x];
        if (s < 0 || !contains(k, s))
          throw Error(ErrorCode::ClosureViolated,
                      "meet of " + pair_label(b, a) + " and " + pair_label(b, c) + " is not in X");
      }
  }

  position_.assign(b.rank(), -1);
  for (int i = 0; i < b.rank(); ++i)
    if (contains(b.pair(i).k, b.pair(i).s)) {
      position_[i] = static_cast<int>(reps_.size());
      reps_.push_back(i);
    }
  for (int i : reps_) {
    auto& row = overlift_.emplace_back();
    for (Elem x : b.weyl(i).weyl->coset_reps()) row.push_back(lifts.at({b.pair(i), x}));
  }
}

bool PartialSystem::contains(int k, int s) const {
  return s >= 0 && s < static_cast<int>(member_[k].size()) && member_[k][s];
}

bool PartialSystem::leq(const BasisPair& a, const BasisPair& b) const {
  const LatticeView& lv = ambient_->functor().lattice();
  return ambient_->subgroups().leq(a.k, b.k) &&
         lv.family.lattice->leq(lv.to_lattice[a.k][a.s], lv.to_lattice[b.k][b.s]);
}

BasisPair PartialSystem::overlift_pair(int i, Elem g) const {
  const WeylData& w = ambient_->weyl(reps_[i]);
  if (std::find(w.normalizer.begin(), w.normalizer.end(), g) == w.normalizer.end())
    throw Error(ErrorCode::NotInWeylGroup,
                "g=" + std::to_string(g) + " does not normalise " + label(i));
  return overlift_[i][w.weyl->coset_of(g)];
}

int PartialSystem::overlift(int i, Elem g) const {
  const BasisPair q = overlift_pair(i, g);
  return position_[ambient_->index_of(q.k, q.s)];
}

PartialSystem section_system(std::shared_ptr<const BasisSystem> slice_basis) {
  if (slice_basis->functor().name() != "slice")
    throw Error(ErrorCode::InvalidInput, "the section system needs the slice functor");
  const SubgroupLattice& sub = slice_basis->subgroups();
  return PartialSystem(
      slice_basis, [&sub](int k, int e) { return sub.is_normal(k, e); }, true, "section");
}

IntMatrix partial_marks(const PartialSystem& ps, const GhostMaps& ambient) {
  const IntMatrix& am = ambient.lattice_marks();
  IntMatrix out;
  for (int i : ps.reps()) {
    auto& row = out.emplace_back();
    for (int j : ps.reps()) row.push_back(am[i][j]);
  }
  return out;
}

GhostVector partial_phi(const PartialSystem& ps, const GhostMaps& ambient, const RingElement& x) {
  const IntMatrix& am = ambient.lattice_marks();
  GhostVector y{ps.ambient_ptr(), std::vector<Rational>(ps.rank()), x.domain()};
  for (const auto& [i, c] : x.coeffs()) {
    if (ps.position(i) < 0)
      throw Error(ErrorCode::ClosureViolated, ps.ambient().label(i) + " is not in X-bar");
    for (int b = 0; b < ps.rank(); ++b) y.entries[b] += c * static_cast<long>(am[i][ps.reps()[b]]);
  }
  return y;
}

ObsVector partial_psi(const PartialSystem& ps, const GhostMaps& ambient,
                      const std::vector<Rational>& y, Prime p) {
  const auto all_moduli = ambient.obstruction_moduli(p);
  ObsVector out;
  for (int i = 0; i < ps.rank(); ++i) {
    Rational sum = 0;
    for (Elem g : ambient.sylow_cosets(ps.reps()[i], p)) sum += y[ps.overlift(i, g)];
    const Integer& m = all_moduli[ps.reps()[i]];
    if (p.is_infinite() && sum.get_den() != 1)
      throw Error(ErrorCode::DenominatorNotPLocal, to_string(sum) + " is not an integer");
    out.moduli.push_back(m);
    out.residues.push_back(residue(sum, m));
  }
  return out;
}

FundamentalReport verify_partial(const PartialSystem& ps, const GhostMaps& ambient, Prime p) {
  FundamentalReport rep;
  rep.prime = p;
  const BasisSystem& b = ps.ambient();
  const SubgroupLattice& sub = b.subgroups();
  const IntMatrix phi = partial_marks(ps, ambient);
  const int r = ps.rank();

  rep.triangular = true;
  rep.psi_kills_phi = true;
  for (int i = 0; i < r; ++i) {
    if (phi[i][i] != b.weyl(ps.reps()[i]).order()) rep.triangular = false;
    for (int j = 0; j < r; ++j)
      if (phi[i][j] != 0 && sub.order(b.pair(ps.reps()[j]).k) > sub.order(b.pair(ps.reps()[i]).k))
        rep.triangular = false;
    if (!partial_psi(ps, ambient, to_rationals(phi[i]), p).is_zero()) {
      rep.psi_kills_phi = false;
      rep.failures.push_back("psi_X(phi_X(" + ps.label(i) + ")) != 0");
    }
  }
  if (!rep.triangular) rep.failures.push_back("phi_X has the wrong diagonal or shape");

  std::vector<ObsVector> rows;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> d(r);
    d[i] = 1;
    rows.push_back(partial_psi(ps, ambient, d, p));
  }
  rep.psi_surjective = unitriangular_onto(rows);
  if (!rep.psi_surjective) rep.failures.push_back("psi_X is not unitriangular on the deltas");

  const auto all_moduli = ambient.obstruction_moduli(p);
  std::vector<Integer> moduli;
  for (int i : ps.reps()) moduli.push_back(all_moduli[i]);
  certify_cokernel(rep, phi, moduli, p, b.host_order());
  return rep;
}

RingElement partial_multiply(const PartialSystem& ps, const RingElement& x, const RingElement& y) {
  if (!ps.subring())
    throw Error(ErrorCode::ClosureViolated, ps.name() + " is not flagged as a subring");
  for (const RingElement* z : {&x, &y})
    for (const auto& [i, c] : z->coeffs())
      if (ps.position(i) < 0)
        throw Error(ErrorCode::ClosureViolated, "factor leaves X-bar at " + ps.ambient().label(i));
  RingElement xy = x * y;
  for (const auto& [i, c] : xy.coeffs())
    if (ps.position(i) < 0)
      throw Error(ErrorCode::ClosureViolated, "product leaves X-bar at " + ps.ambient().label(i));
  return xy;
}

std::vector<RingElement> partial_idempotents(const PartialSystem& ps) {
  const BasisSystem& b = ps.ambient();
  const SubgroupLattice& sub = b.subgroups();
  const auto& pairs = ps.pairs();
  const int n = static_cast<int>(pairs.size());
  const IntMatrix mu = mobius(n, [&](int a, int c) { return ps.leq(pairs[a], pairs[c]); });
  std::vector<int> at(b.rank(), -1);
  for (int a = 0; a < n; ++a)
    for (int i : ps.reps())
      if (pairs[a] == b.pair(i)) at[i] = a;

  std::vector<RingElement> out;
  for (int i : ps.reps()) {
    const int top = at[i];
    RingElement e(ps.ambient_ptr(), ScalarDomain::rationals());
    const Rational scale = ratio(1, static_cast<long>(b.weyl(i).normalizer.size()));
    for (int a = 0; a < n; ++a) {
      if (mu[a][top] == 0) continue;
      const auto& [u, t] = pairs[a];
      e.add(b.index_of(u, t), scale * static_cast<long>(sub.order(u) * mu[a][top]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

UnitCriterion partial_unit_criterion(const PartialSystem& ps) {
  std::vector<std::shared_ptr<const QuotientGroup>> weyl;
  std::vector<std::vector<int>> target;
  for (int i = 0; i < ps.rank(); ++i) {
    weyl.push_back(ps.ambient().weyl(ps.reps()[i]).weyl);
    auto& row = target.emplace_back();
    for (Elem g : weyl.back()->coset_reps()) row.push_back(ps.overlift(i, g));
  }
  return UnitCriterion(std::move(weyl), std::move(target));
}

std::optional<RingElement> lift_partial_unit(const PartialSystem& ps, const GhostMaps& ambient,
                                             const GhostUnit& x) {
  if (!partial_unit_criterion(ps).accepts(x)) return std::nullopt;
  const IntMatrix phi = partial_marks(ps, ambient);
  QMatrix a;
  for (const auto& row : phi) a.push_back(to_rationals(row));
  std::vector<Rational> rhs;
  for (int s : x.signs) rhs.emplace_back(s);
  const auto sol = solve_left(a, rhs);
  if (!sol) throw std::logic_error("phi_X is singular");
  RingElement u(ps.ambient_ptr(), ScalarDomain::rationals());
  for (int i = 0; i < ps.rank(); ++i) u.add(ps.reps()[i], (*sol)[i]);
  return u.with_domain(ScalarDomain::integers());
}

}  // namespace burnside
