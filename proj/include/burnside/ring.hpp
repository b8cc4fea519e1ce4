#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/functor.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

struct BasisPair {
  int k;  // subgroup id
  int s;  // element of M(k)
  auto operator<=>(const BasisPair&) const = default;
};

// N_H(K,s) and the Weyl group N_H(K,s)/K of a basis pair.
struct WeylData {
  std::vector<Elem> normalizer;
  std::shared_ptr<const QuotientGroup> weyl;
  int order() const { return weyl->order(); }
};

using SparseVec = std::vector<std::pair<int, long long>>;

// The basis of Omega(H, M): H-orbit representatives of pairs (K, s) with
// K <= H and s in M(K), ordered by (subgroup id, element index).
class BasisSystem {
 public:
  BasisSystem(std::shared_ptr<const MonoidFunctor> functor, int host);

  int host() const { return host_; }
  const MonoidFunctor& functor() const { return *functor_; }
  const std::shared_ptr<const MonoidFunctor>& functor_ptr() const { return functor_; }
  const SubgroupLattice& subgroups() const { return functor_->subgroups(); }
  const FiniteGroup& group() const { return functor_->group(); }
  int host_order() const { return subgroups().order(host_); }

  int rank() const { return static_cast<int>(pairs_.size()); }
  const BasisPair& pair(int i) const { return pairs_[i]; }
  const std::vector<BasisPair>& pairs() const { return pairs_; }
  // Index of the representative of the H-orbit of (k, s), k <= host.
  int index_of(int k, int s) const;
  // An h in H carrying (k, s) to its representative.
  Elem conjugator(int k, int s) const;
  const WeylData& weyl(int i) const { return weyl_[i]; }
  // C(H), the subgroups occurring in representatives.
  const std::vector<int>& rep_subgroups() const { return rep_subgroups_; }
  std::string label(int i) const;
  std::string signature() const { return signature_; }

  // Structure constants [i][j] = sum_c n_c [c].
  const SparseVec& product(int i, int j) const;

 private:
  std::size_t flat(int k, int s) const;
  std::shared_ptr<const MonoidFunctor> functor_;
  int host_;
  std::vector<BasisPair> pairs_;
  std::vector<int> offset_;
  std::vector<int> rep_index_;
  std::vector<Elem> conjugator_;
  std::vector<WeylData> weyl_;
  std::vector<int> rep_subgroups_;
  std::string signature_;
  mutable std::once_flag products_once_;
  mutable std::vector<SparseVec> products_;
};

// A sparse element of Omega(H, M) tensored with a scalar domain.
class RingElement {
 public:
  explicit RingElement(std::shared_ptr<const BasisSystem> basis,
                       ScalarDomain domain = ScalarDomain::integers());
  static RingElement basis_element(std::shared_ptr<const BasisSystem> basis, int i);
  static RingElement one(std::shared_ptr<const BasisSystem> basis);

  const BasisSystem& basis() const { return *basis_; }
  const std::shared_ptr<const BasisSystem>& basis_ptr() const { return basis_; }
  const ScalarDomain& domain() const { return domain_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  void set(int i, const Rational& c);
  void add(int i, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }
  // Throws DenominatorNotPLocal when a coefficient is not in the domain.
  RingElement with_domain(ScalarDomain d) const;
  std::vector<Rational> dense() const;
  std::string str() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Rational& c) const;
  bool operator==(const RingElement& o) const;

 private:
  void check_same_basis(const RingElement& o) const;
  std::shared_ptr<const BasisSystem> basis_;
  ScalarDomain domain_;
  std::map<int, Rational> coeffs_;
};

// Omega^M: the rings Omega(H, M) for all H <= G with conjugation,
// restriction and induction.
class GreenFunctor {
 public:
  explicit GreenFunctor(std::shared_ptr<const MonoidFunctor> functor);

  const MonoidFunctor& functor() const { return *functor_; }
  const std::shared_ptr<const MonoidFunctor>& functor_ptr() const { return functor_; }
  const SubgroupLattice& subgroups() const { return functor_->subgroups(); }
  const FiniteGroup& group() const { return functor_->group(); }
  std::shared_ptr<const BasisSystem> basis(int h) const;
  std::shared_ptr<const BasisSystem> basis() const { return basis(subgroups().whole()); }
  // Mobius function of the subgroup poset of G.
  long long subgroup_mobius(int a, int b) const { return mobius_[a][b]; }

  RingElement conjugate(const RingElement& x, Elem g) const;
  RingElement restrict(const RingElement& x, int k) const;
  RingElement induce(const RingElement& y, int h) const;

 private:
  std::shared_ptr<const MonoidFunctor> functor_;
  IntMatrix mobius_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const BasisSystem>> bases_;
};

struct AxiomReport {
  std::map<std::string, long long> checked;
  std::vector<std::string> counterexamples;
  bool exhaustive = true;
  bool ok() const { return counterexamples.empty(); }
  std::string str() const;
};

// Checks G.1-G.7 and that conjugation and restriction are ring maps, over
// all subgroups of h. Tuple families larger than `budget` are sampled with
// a fixed seed.
AxiomReport axiom_report(const GreenFunctor& f, int h, long long budget = 2000000);

}  // namespace burnside
