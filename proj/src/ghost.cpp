#include "burnside/ghost.hpp"

#include <set>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

GhostVector GhostVector::operator*(const GhostVector& o) const {
  GhostVector r{basis, entries, ScalarDomain::join(domain, o.domain)};
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] *= o.entries[i];
  return r;
}

GhostVector GhostVector::operator+(const GhostVector& o) const {
  GhostVector r{basis, entries, ScalarDomain::join(domain, o.domain)};
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
  return r;
}

GhostVector GhostVector::delta(std::shared_ptr<const BasisSystem> basis, int i) {
  GhostVector v{basis, std::vector<Rational>(basis->rank()), ScalarDomain::integers()};
  v.entries[i] = 1;
  return v;
}

bool ObsVector::is_zero() const {
  for (const auto& r : residues)
    if (r != 0) return false;
  return true;
}

MonoidGhost MonoidGhost::operator*(const MonoidGhost& o) const {
  MonoidGhost r{basis, {}};
  const auto& reps = basis->rep_subgroups();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const FiniteMonoid& m = basis->functor().monoid(reps[c]);
    std::vector<Rational> v(m.size);
    for (int a = 0; a < m.size; ++a)
      for (int b = 0; b < m.size; ++b) v[m.mul(a, b)] += components[c][a] * o.components[c][b];
    r.components.push_back(std::move(v));
  }
  return r;
}

// ---------------------------------------------------------------- GhostMaps

GhostMaps::GhostMaps(std::shared_ptr<const BasisSystem> basis) : basis_(std::move(basis)) {
  const SubgroupLattice& sub = basis_->subgroups();
  rep_pos_.assign(sub.size(), -1);
  const auto& reps = basis_->rep_subgroups();
  for (std::size_t i = 0; i < reps.size(); ++i) rep_pos_[reps[i]] = static_cast<int>(i);
  below_host_ = sub.subgroups_of(basis_->host());
  below_pos_.assign(sub.size(), -1);
  for (std::size_t i = 0; i < below_host_.size(); ++i) below_pos_[below_host_[i]] = static_cast<int>(i);
  subgroup_mobius_ = mobius(static_cast<int>(below_host_.size()), [this, &sub](int a, int b) {
    return sub.leq(below_host_[a], below_host_[b]);
  });
  marks_ = compute_marks(false);
  if (basis_->functor().is_lattice()) lattice_marks_ = compute_marks(true);
}

IntMatrix GhostMaps::compute_marks(bool lattice) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  const int r = b.rank();
  IntMatrix out(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) {
    const auto [k, s] = b.pair(i);
    for (Elem x : left_coset_reps(sub, b.host(), k)) {
      const int l = sub.conjugate(x, k);
      const int v = m.con(k, x, s);
      for (int j = 0; j < r; ++j) {
        const auto [u, t] = b.pair(j);
        if (!sub.leq(u, l)) continue;
        if (lattice) {
          const LatticeView& lv = m.lattice();
          if (lv.family.lattice->leq(lv.to_lattice[u][t], lv.to_lattice[l][v])) ++out[i][j];
        } else if (m.res(u, l, v) == t) {
          ++out[i][j];
        }
      }
    }
  }
  return out;
}

const IntMatrix& GhostMaps::lattice_marks() const {
  if (!basis_->functor().is_lattice())
    throw Error(ErrorCode::NotLatticeFunctor, "lattice marks need a lattice functor");
  return lattice_marks_;
}

namespace {

GhostVector apply_rows(const std::shared_ptr<const BasisSystem>& basis, const IntMatrix& rows,
                       const RingElement& x) {
  if (x.basis().signature() != basis->signature())
    throw Error(ErrorCode::BasisMismatch, "element does not belong to this ring");
  GhostVector v{basis, std::vector<Rational>(basis->rank()), x.domain()};
  for (const auto& [i, c] : x.coeffs())
    for (int j = 0; j < basis->rank(); ++j)
      if (rows[i][j] != 0) v.entries[j] += c * static_cast<long>(rows[i][j]);
  return v;
}

}  // namespace

GhostVector GhostMaps::phi(const RingElement& x) const { return apply_rows(basis_, marks_, x); }

GhostVector GhostMaps::lattice_phi(const RingElement& x) const {
  return apply_rows(basis_, lattice_marks(), x);
}

RingElement GhostMaps::sigma(const GhostVector& y) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  const long h = b.host_order();
  RingElement out(basis_, ScalarDomain::rationals());
  for (int j = 0; j < b.rank(); ++j) {
    if (y.entries[j] == 0) continue;
    const auto [u, t] = b.pair(j);
    // Sum over the whole H-orbit of (U,t): each member contributes the same.
    const Rational weight = y.entries[j] * ratio(h, static_cast<long>(b.weyl(j).normalizer.size()));
    for (int l : sub.subgroups_of(u)) {
      const long long mu = subgroup_mobius_[below_pos_[l]][below_pos_[u]];
      if (mu == 0) continue;
      out.add(b.index_of(l, m.res(l, u, t)), weight * static_cast<long>(sub.order(l) * mu));
    }
  }
  return out;
}

MonoidGhost GhostMaps::rho(const RingElement& x) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  MonoidGhost out{basis_, {}};
  for (int u : b.rep_subgroups()) out.components.emplace_back(m.monoid(u).size);
  for (const auto& [i, c] : x.coeffs()) {
    const auto [k, s] = b.pair(i);
    for (Elem h : left_coset_reps(sub, b.host(), k)) {
      const int l = sub.conjugate(h, k);
      const int v = m.con(k, h, s);
      for (int u : b.rep_subgroups())
        if (sub.leq(u, l)) out.components[rep_pos_[u]][m.res(u, l, v)] += c;
    }
  }
  return out;
}

MonoidGhost GhostMaps::kappa(const GhostVector& y) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  MonoidGhost out{basis_, {}};
  for (int u : b.rep_subgroups()) out.components.emplace_back(m.monoid(u).size);
  for (int j = 0; j < b.rank(); ++j) {
    if (y.entries[j] == 0) continue;
    const auto [k, s] = b.pair(j);
    std::set<int> orbit;
    for (Elem h : sub.members(b.host()))
      if (sub.conjugate(h, k) == k) orbit.insert(m.con(k, h, s));
    for (int v : orbit) out.components[rep_pos_[k]][v] += y.entries[j];
  }
  return out;
}

GhostVector GhostMaps::zeta(const MonoidGhost& l) const {
  const BasisSystem& b = *basis_;
  const LatticeView& lv = b.functor().lattice();
  GhostVector out{basis_, std::vector<Rational>(b.rank()), ScalarDomain::integers()};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    const auto& comp = l.components[rep_pos_[u]];
    for (int s = 0; s < static_cast<int>(comp.size()); ++s)
      if (lv.leq(u, t, s)) out.entries[j] += comp[s];
  }
  return out;
}

std::vector<Integer> GhostMaps::weyl_orders() const {
  std::vector<Integer> out;
  for (int j = 0; j < basis_->rank(); ++j) out.emplace_back(basis_->weyl(j).order());
  return out;
}

std::vector<Integer> GhostMaps::obstruction_moduli(Prime p) const {
  std::vector<Integer> out;
  for (int j = 0; j < basis_->rank(); ++j)
    out.emplace_back(static_cast<long>(p.part_of(static_cast<long long>(basis_->weyl(j).order()))));
  return out;
}

std::vector<Elem> GhostMaps::sylow_cosets(int i, Prime p) const {
  std::lock_guard lock(sylow_mutex_);
  auto [it, fresh] = sylow_cache_.try_emplace({i, p.value()});
  if (fresh) {
    const QuotientGroup& w = *basis_->weyl(i).weyl;
    for (int c : w.sylow(p)) it->second.push_back(w.coset_reps()[c]);
  }
  return it->second;
}

namespace {

Integer entry_residue(const Rational& q, const Integer& m, Prime p) {
  if (p.is_infinite() && q.get_den() != 1)
    throw Error(ErrorCode::DenominatorNotPLocal, to_string(q) + " is not an integer");
  return residue(q, m);
}

}  // namespace

ObsVector GhostMaps::psi(const GhostVector& y, Prime p) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const MonoidFunctor& m = b.functor();
  ObsVector out{{}, obstruction_moduli(p)};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    Rational sum = 0;
    for (Elem r : sylow_cosets(j, p)) {
      const int v = sub.extend(u, r);
      for (int s = 0; s < m.monoid(v).size; ++s)
        if (m.res(u, v, s) == t) sum += y.entries[b.index_of(v, s)];
    }
    out.residues.push_back(entry_residue(sum, out.moduli[j], p));
  }
  return out;
}

GhostVector GhostMaps::alpha(const GhostVector& y) const {
  const BasisSystem& b = *basis_;
  const LatticeView& lv = b.functor().lattice();
  GhostVector out{basis_, std::vector<Rational>(b.rank()), y.domain};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    for (int s = 0; s < b.functor().monoid(u).size; ++s)
      if (lv.leq(u, t, s)) out.entries[j] += y.entries[b.index_of(u, s)];
  }
  return out;
}

GhostVector GhostMaps::beta(const GhostVector& y) const {
  const BasisSystem& b = *basis_;
  const LatticeView& lv = b.functor().lattice();
  GhostVector out{basis_, std::vector<Rational>(b.rank()), y.domain};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    for (int s = 0; s < b.functor().monoid(u).size; ++s) {
      const long long mu = lv.mobius[u][t][s];
      if (mu != 0) out.entries[j] += y.entries[b.index_of(u, s)] * static_cast<long>(mu);
    }
  }
  return out;
}

ObsVector GhostMaps::psi_tilde(const GhostVector& y, Prime p) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const LatticeView& lv = b.functor().lattice();
  const GLattice& lat = *lv.family.lattice;
  ObsVector out{{}, obstruction_moduli(p)};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    Rational sum = 0;
    for (Elem r : sylow_cosets(j, p)) {
      const int v = sub.extend(u, r);
      for (int s = 0; s < b.functor().monoid(v).size; ++s)
        if (lat.leq(lv.to_lattice[u][t], lv.to_lattice[v][s])) sum += y.entries[b.index_of(v, s)];
    }
    out.residues.push_back(entry_residue(sum, out.moduli[j], p));
  }
  return out;
}

ObsVector GhostMaps::beta_tilde(const GhostVector& y, Prime p) const {
  const BasisSystem& b = *basis_;
  const SubgroupLattice& sub = b.subgroups();
  const LatticeView& lv = b.functor().lattice();
  ObsVector out{{}, obstruction_moduli(p)};
  for (int j = 0; j < b.rank(); ++j) {
    const auto [u, t] = b.pair(j);
    Rational sum = 0;
    for (Elem r : sylow_cosets(j, p)) {
      const int v = sub.extend(u, r);
      sum += y.entries[b.index_of(v, lv.inf_above(v, lv.to_lattice[u][t]))];
    }
    out.residues.push_back(entry_residue(sum, out.moduli[j], p));
  }
  return out;
}

// ------------------------------------------------------------ verification

std::string FundamentalReport::str() const {
  std::ostringstream os;
  os << "p=" << prime.str() << " det=" << det.get_str() << " prod|W_p|=" << obstruction_order.get_str()
     << " injective=" << injective << " psi.phi=0:" << psi_kills_phi
     << " triangular=" << triangular << " det_p=" << det_matches << " snf=" << snf_matches
     << " psi_onto=" << psi_surjective;
  for (const auto& f : failures) os << "\n  " << f;
  return os.str();
}

namespace {

bool same_cokernel_part(const std::vector<Integer>& invariants, const std::vector<Integer>& moduli,
                        Prime p, long long host_order) {
  std::vector<unsigned long> primes;
  if (p.is_infinite()) {
    for (long long q = 2; q <= host_order; ++q)
      if (host_order % q == 0 && is_prime(q)) primes.push_back(static_cast<unsigned long>(q));
  } else {
    primes.push_back(static_cast<unsigned long>(p.value()));
  }
  for (unsigned long q : primes)
    if (p_exponents(invariants, q) != p_exponents(moduli, q)) return false;
  return true;
}

}  // namespace

bool unitriangular_onto(const std::vector<ObsVector>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& m = rows[i].moduli;
    if (m[i] != 1 && rows[i].residues[i] != 1 % m[i]) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].residues[j] != 0) return false;
  }
  return true;
}

void certify_cokernel(FundamentalReport& rep, const IntMatrix& matrix,
                      const std::vector<Integer>& moduli, Prime p, long long host_order) {
  rep.det = determinant(to_zmatrix(matrix));
  rep.injective = rep.det != 0;
  rep.obstruction_order = 1;
  for (const auto& m : moduli) rep.obstruction_order *= m;
  rep.det_matches = p.part_of(rep.det) == rep.obstruction_order;
  rep.invariants = smith_invariants(to_zmatrix(matrix));
  rep.snf_matches = rep.injective && rep.invariants.size() == matrix.size() &&
                    same_cokernel_part(rep.invariants, moduli, p, host_order);
  if (!rep.injective) rep.failures.push_back("mark matrix is singular");
  if (!rep.det_matches) rep.failures.push_back("p-part of det differs from prod |W_p|");
  if (!rep.snf_matches) rep.failures.push_back("Smith invariants differ from the obstruction group");
}

FundamentalReport verify_fundamental(const GhostMaps& maps, Prime p) {
  FundamentalReport rep;
  rep.prime = p;
  const BasisSystem& b = maps.basis();
  const int r = b.rank();
  const IntMatrix& phi = maps.marks();

  rep.triangular = true;
  for (int i = 0; i < r; ++i) {
    if (phi[i][i] != b.weyl(i).order()) rep.triangular = false;
    for (int j = i + 1; j < r; ++j)
      if (phi[i][j] != 0) rep.triangular = false;
  }
  if (!rep.triangular) rep.failures.push_back("mark matrix is not triangular with diagonal |W|");

  rep.psi_kills_phi = true;
  for (int i = 0; i < r; ++i) {
    const RingElement x = RingElement::basis_element(maps.basis_ptr(), i);
    if (!maps.psi(maps.phi(x), p).is_zero()) {
      rep.psi_kills_phi = false;
      rep.failures.push_back("psi(phi(" + b.label(i) + ")) != 0");
    }
  }
  std::vector<ObsVector> rows;
  for (int i = 0; i < r; ++i) rows.push_back(maps.psi(GhostVector::delta(maps.basis_ptr(), i), p));
  rep.psi_surjective = unitriangular_onto(rows);
  if (!rep.psi_surjective) rep.failures.push_back("psi is not unitriangular on the deltas");
  certify_cokernel(rep, phi, maps.obstruction_moduli(p), p, b.host_order());
  return rep;
}

FundamentalReport verify_lattice_fundamental(const GhostMaps& maps, Prime p) {
  FundamentalReport rep;
  rep.prime = p;
  const BasisSystem& b = maps.basis();
  const int r = b.rank();
  const IntMatrix& am = maps.lattice_marks();

  bool agrees = true;
  rep.triangular = true;
  rep.psi_kills_phi = true;
  for (int i = 0; i < r; ++i) {
    const RingElement x = RingElement::basis_element(maps.basis_ptr(), i);
    const GhostVector ax = maps.lattice_phi(x);
    if (!(maps.alpha(maps.phi(x)) == ax)) agrees = false;
    if (am[i][i] != b.weyl(i).order()) rep.triangular = false;
    for (int j = 0; j < r; ++j)
      if (am[i][j] != 0 && b.subgroups().order(b.pair(j).k) > b.subgroups().order(b.pair(i).k))
        rep.triangular = false;
    if (!maps.beta_tilde(ax, p).is_zero()) {
      rep.psi_kills_phi = false;
      rep.failures.push_back("beta~(alpha(phi(" + b.label(i) + "))) != 0");
    }
  }
  if (!agrees) rep.failures.push_back("alpha o phi differs from the t <= s marks");
  if (!rep.triangular) rep.failures.push_back("lattice marks have the wrong diagonal or shape");

  std::vector<ObsVector> rows;
  bool inverse = true, composite = true;
  for (int i = 0; i < r; ++i) {
    const GhostVector d = GhostVector::delta(maps.basis_ptr(), i);
    if (!(maps.beta(maps.alpha(d)) == d) || !(maps.alpha(maps.beta(d)) == d)) inverse = false;
    const ObsVector bt = maps.beta_tilde(d, p);
    if (maps.psi_tilde(maps.beta(d), p).residues != bt.residues) composite = false;
    rows.push_back(bt);
  }
  if (!inverse) rep.failures.push_back("beta does not invert alpha");
  if (!composite) rep.failures.push_back("psi~ o beta differs from beta~");
  rep.psi_surjective = unitriangular_onto(rows);
  if (!rep.psi_surjective) rep.failures.push_back("beta~ is not unitriangular on the deltas");
  certify_cokernel(rep, am, maps.obstruction_moduli(p), p, b.host_order());
  return rep;
}

RingElement unmark(const GhostMaps& maps, const GhostVector& y) {
  return maps.sigma(y) * ratio(1, maps.basis().host_order());
}

}  // namespace burnside
