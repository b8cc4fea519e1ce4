#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnside/ghost.hpp"
#include "burnside/units.hpp"

namespace burnside {

// A G-closed subset X of S(G, M_Lambda) satisfying condition (A), over the
// ring of the whole group. Elements of Omega(G, X) are ring elements of the
// ambient basis supported on X-bar.
class PartialSystem {
 public:
  // (k, x) with x a lattice index in Lambda_k.
  using Predicate = std::function<bool(int k, int x)>;

  // Throws NotGClosed, ConditionAViolated, or ClosureViolated when `subring`
  // is set but X is not closed under meets.
  PartialSystem(std::shared_ptr<const BasisSystem> ambient, const Predicate& in_x,
                bool subring = false, std::string name = "X");

  const std::string& name() const { return name_; }
  const BasisSystem& ambient() const { return *ambient_; }
  const std::shared_ptr<const BasisSystem>& ambient_ptr() const { return ambient_; }
  bool subring() const { return subring_; }

  const std::vector<BasisPair>& pairs() const { return pairs_; }
  bool contains(int k, int s) const;
  // X-bar as ambient indices, increasing.
  const std::vector<int>& reps() const { return reps_; }
  int rank() const { return static_cast<int>(reps_.size()); }
  // Position in reps(), or -1.
  int position(int ambient_index) const { return position_[ambient_index]; }
  std::string label(int i) const { return ambient_->label(reps_[i]); }

  // The unique minimal element of X above the coequalizer of reps()[i] by g.
  BasisPair overlift_pair(int i, Elem g) const;
  int overlift(int i, Elem g) const;  // as a position

  // Order on pairs: U <= K and t <= s.
  bool leq(const BasisPair& a, const BasisPair& b) const;

 private:
  std::shared_ptr<const BasisSystem> ambient_;
  std::string name_;
  bool subring_;
  std::vector<BasisPair> pairs_;
  std::vector<std::vector<char>> member_;  // [k][s]
  std::vector<int> reps_;
  std::vector<int> position_;
  std::vector<std::vector<BasisPair>> overlift_;  // [position][coset of W]
};

// K normal in E, over the slice functor.
PartialSystem section_system(std::shared_ptr<const BasisSystem> slice_basis);

// phi_X: rows and columns indexed by X-bar.
IntMatrix partial_marks(const PartialSystem& ps, const GhostMaps& ambient);

GhostVector partial_phi(const PartialSystem& ps, const GhostMaps& ambient, const RingElement& x);

// psi_X on a vector indexed by X-bar.
ObsVector partial_psi(const PartialSystem& ps, const GhostMaps& ambient,
                      const std::vector<Rational>& y, Prime p);

FundamentalReport verify_partial(const PartialSystem& ps, const GhostMaps& ambient, Prime p);

// Product in the ambient ring; throws ClosureViolated when the result
// leaves X-bar. Needs the subring flag.
RingElement partial_multiply(const PartialSystem& ps, const RingElement& x, const RingElement& y);

// epsilon_(K,s) for (K,s) in X-bar, via the Mobius function of X.
std::vector<RingElement> partial_idempotents(const PartialSystem& ps);

UnitCriterion partial_unit_criterion(const PartialSystem& ps);

// x in Omega(G, X) with phi_X(x) = x~, or nullopt when the gamma test fails.
std::optional<RingElement> lift_partial_unit(const PartialSystem& ps, const GhostMaps& ambient,
                                             const GhostUnit& x);

}  // namespace burnside
