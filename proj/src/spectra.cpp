#include "burnside/spectra.hpp"

#include <boost/pending/disjoint_sets.hpp>
#include <map>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

Coequalizer coequalizer(const BasisSystem& basis, int i, Elem g) {
  const SubgroupLattice& sub = basis.subgroups();
  const MonoidFunctor& m = basis.functor();
  const LatticeView& lv = m.lattice();
  const auto [u, t] = basis.pair(i);
  if (!sub.contains(basis.host(), g) || sub.conjugate(g, u) != u || m.con(u, g, t) != t)
    throw Error(ErrorCode::NotInWeylGroup,
                "g=" + std::to_string(g) + " does not normalise " + basis.label(i));
  const int v = sub.extend(u, g);
  const int s = lv.inf_above(v, lv.to_lattice[u][t]);
  return {{u, t}, g, {v, s}, basis.index_of(v, s)};
}

EquivalenceClasses equivalence_classes(const GhostMaps& maps, Prime p, int sylow_choice) {
  const BasisSystem& b = maps.basis();
  const int r = b.rank();
  std::vector<int> rank(r), parent(r);
  boost::disjoint_sets<int*, int*> sets(rank.data(), parent.data());
  for (int i = 0; i < r; ++i) sets.make_set(i);

  EquivalenceClasses out;
  out.prime = p;
  for (int i = 0; i < r; ++i) {
    std::vector<Elem> cosets;
    if (sylow_choice == 0) {
      cosets = maps.sylow_cosets(i, p);
    } else {
      const QuotientGroup& w = *b.weyl(i).weyl;
      const auto all = w.all_sylows(p);
      for (int c : all[static_cast<std::size_t>(sylow_choice) % all.size()])
        cosets.push_back(w.coset_reps()[c]);
    }
    for (Elem g : cosets) {
      const int j = coequalizer(b, i, g).target_index;
      if (j == i) continue;
      out.edges.emplace_back(i, j);
      sets.union_set(i, j);
    }
  }
  std::map<int, int> root_class;
  out.class_of.resize(r);
  for (int i = 0; i < r; ++i) {
    auto [it, fresh] = root_class.try_emplace(sets.find_set(i), static_cast<int>(out.classes.size()));
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }
  return out;
}

std::vector<RingElement> idempotents_rational(const GhostMaps& maps) {
  const BasisSystem& b = maps.basis();
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  const LatticeView& lv = m.lattice();
  std::vector<RingElement> out;
  for (int i = 0; i < b.rank(); ++i) {
    const auto [k, s] = b.pair(i);
    RingElement e(maps.basis_ptr(), ScalarDomain::rationals());
    const Rational scale = ratio(1, static_cast<long>(b.weyl(i).normalizer.size()));
    for (int t = 0; t < m.monoid(k).size; ++t) {
      const long long mu_t = lv.mobius[k][t][s];
      if (mu_t == 0) continue;
      for (int u : sub.subgroups_of(k)) {
        const long long mu_u = maps.subgroup_mobius(u, k);
        if (mu_u == 0) continue;
        e.add(b.index_of(u, m.res(u, k, t)), scale * static_cast<long>(mu_t * sub.order(u) * mu_u));
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LocalIdempotent> idempotents_local(const GhostMaps& maps, Prime p) {
  const auto classes = equivalence_classes(maps, p);
  const auto rational = idempotents_rational(maps);
  std::vector<LocalIdempotent> out;
  for (const auto& members : classes.classes) {
    RingElement e(maps.basis_ptr(), ScalarDomain::rationals());
    for (int i : members) e = e + rational[i];
    out.push_back({members, e.with_domain(ScalarDomain::local(p))});
  }
  return out;
}

std::string ConnectivityReport::str() const {
  std::ostringstream os;
  os << "p=" << prime.str() << " classes=" << classes << " |C(H)|=" << conjugacy_classes
     << " p-group=" << p_group << " solvable=" << solvable
     << " residuals_conjugate=" << residuals_conjugate;
  for (const auto& f : failures) os << "\n  " << f;
  return os.str();
}

ConnectivityReport connectivity(const GhostMaps& maps, Prime p) {
  const BasisSystem& b = maps.basis();
  const SubgroupLattice& sub = b.subgroups();
  const auto classes = equivalence_classes(maps, p);
  ConnectivityReport rep;
  rep.prime = p;
  rep.classes = classes.count();
  rep.conjugacy_classes = static_cast<int>(sub.reps_under(b.host()).size());
  rep.p_group = is_p_group(b.host_order(), p);
  rep.solvable = p_residual(sub, b.host(), Prime::infinity()) == sub.trivial();
  for (const auto& members : classes.classes) {
    const int first = sub.rep_under(b.host(), p_residual(sub, b.pair(members.front()).k, p));
    for (int i : members)
      if (sub.rep_under(b.host(), p_residual(sub, b.pair(i).k, p)) != first) {
        rep.residuals_conjugate = false;
        rep.failures.push_back("O^p differs up to conjugacy between " + b.label(members.front()) +
                               " and " + b.label(i));
      }
  }
  return rep;
}

}  // namespace burnside
