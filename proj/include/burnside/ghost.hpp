#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/linalg.hpp"
#include "burnside/ring.hpp"

namespace burnside {

// A function on the representatives of S(H, M), i.e. an element of the
// ghost ring prod Z over R(H, M).
struct GhostVector {
  std::shared_ptr<const BasisSystem> basis;
  std::vector<Rational> entries;
  ScalarDomain domain = ScalarDomain::integers();

  bool operator==(const GhostVector& o) const { return entries == o.entries; }
  GhostVector operator*(const GhostVector& o) const;
  GhostVector operator+(const GhostVector& o) const;
  static GhostVector delta(std::shared_ptr<const BasisSystem> basis, int i);
};

// prod over R(H, M) of Z / |W_H(U,t)_p|.
struct ObsVector {
  std::vector<Integer> residues;
  std::vector<Integer> moduli;
  bool is_zero() const;
};

// For each U in C(H), an element of the monoid ring Z M(U).
struct MonoidGhost {
  std::shared_ptr<const BasisSystem> basis;
  std::vector<std::vector<Rational>> components;  // aligned with basis->rep_subgroups()

  MonoidGhost operator*(const MonoidGhost& o) const;
  bool operator==(const MonoidGhost& o) const { return components == o.components; }
};

// Mark morphisms attached to one basis system. Matrices are computed once.
class GhostMaps {
 public:
  explicit GhostMaps(std::shared_ptr<const BasisSystem> basis);

  const BasisSystem& basis() const { return *basis_; }
  const std::shared_ptr<const BasisSystem>& basis_ptr() const { return basis_; }

  // Row i: phi of the i-th basis element.
  const IntMatrix& marks() const { return marks_; }
  // Row i: alpha(phi) of the i-th basis element, counting t <= s.
  // Lattice functors only.
  const IntMatrix& lattice_marks() const;

  GhostVector phi(const RingElement& x) const;
  GhostVector lattice_phi(const RingElement& x) const;
  // sigma_H; sigma(phi(x)) = |H| x.
  RingElement sigma(const GhostVector& y) const;
  MonoidGhost rho(const RingElement& x) const;
  MonoidGhost kappa(const GhostVector& y) const;
  GhostVector zeta(const MonoidGhost& l) const;

  // |W_H(U,t)| and the moduli |W_H(U,t)_p|.
  std::vector<Integer> weyl_orders() const;
  std::vector<Integer> obstruction_moduli(Prime p) const;

  ObsVector psi(const GhostVector& y, Prime p) const;
  GhostVector alpha(const GhostVector& y) const;
  GhostVector beta(const GhostVector& y) const;
  ObsVector psi_tilde(const GhostVector& y, Prime p) const;
  ObsVector beta_tilde(const GhostVector& y, Prime p) const;

  // For each representative (U,t), each g U in the Sylow p-subgroup of
  // W_H(U,t), as a coset representative g.
  std::vector<Elem> sylow_cosets(int i, Prime p) const;
  // Mobius function of the subgroup poset, for subgroups of the host.
  long long subgroup_mobius(int a, int b) const {
    return subgroup_mobius_[below_pos_[a]][below_pos_[b]];
  }

 private:
  IntMatrix compute_marks(bool lattice) const;
  std::shared_ptr<const BasisSystem> basis_;
  IntMatrix marks_;
  IntMatrix lattice_marks_;
  std::vector<int> rep_pos_;  // subgroup id -> position in rep_subgroups, or -1
  IntMatrix subgroup_mobius_;
  std::vector<int> below_host_;  // subgroups of the host, index space of subgroup_mobius_
  std::vector<int> below_pos_;
  mutable std::mutex sylow_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<Elem>> sylow_cache_;
};

struct FundamentalReport {
  Prime prime = Prime::infinity();
  bool injective = false;
  bool psi_kills_phi = false;
  bool triangular = false;
  bool det_matches = false;
  bool snf_matches = false;
  bool psi_surjective = false;
  Integer det;
  Integer obstruction_order;  // prod |W_p|
  std::vector<Integer> invariants;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// phi is injective, psi o phi = 0, phi is triangular with diagonal |W|,
// |det phi|_p = prod |W_p| (also via Smith form) and psi is onto.
FundamentalReport verify_fundamental(const GhostMaps& maps, Prime p);

// The lattice form: alpha o phi agrees with the t <= s marks, beta inverts
// alpha, psi~ o beta = beta~, beta~ kills alpha(phi) and is onto, and the
// cokernel of alpha o phi has the right p-part.
FundamentalReport verify_lattice_fundamental(const GhostMaps& maps, Prime p);

// Rows are the images of the deltas under an obstruction map. Lower
// unitriangular modulo the moduli means the map is onto.
bool unitriangular_onto(const std::vector<ObsVector>& rows);

// Fills det, Smith invariants and their comparison with the moduli.
void certify_cokernel(FundamentalReport& rep, const IntMatrix& marks,
                      const std::vector<Integer>& moduli, Prime p, long long host_order);

// The x over Q with phi(x) = y.
RingElement unmark(const GhostMaps& maps, const GhostVector& y);

}  // namespace burnside
