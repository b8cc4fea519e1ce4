#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/order.hpp"

namespace burnside {

struct FiniteMonoid {
  int size = 0;
  std::vector<int> table;  // row-major size x size
  int identity = 0;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }
  bool is_commutative() const;
};

// Extra structure carried by functors built from a family of sublattices.
// Elements of M(H) are Lambda_H listed along a linear extension of its order.
struct LatticeView {
  SublatticeFamily family;
  std::vector<std::vector<int>> to_lattice;    // [h][s] -> lattice index
  std::vector<std::vector<int>> from_lattice;  // [h][x] -> element of M(h) or -1
  std::vector<IntMatrix> mobius;               // [h] over M(h)

  bool leq(int h, int a, int b) const;
  int sup(int h) const;
  // inf { s in Lambda_h : s >= x } for a lattice index x.
  int inf_above(int h, int x) const;
};

struct FunctorViolation {
  std::string axiom;  // "M.1", "M.2", "M.3" or "hom"
  int h = -1, k = -1, l = -1;
  Elem g = -1, r = -1;
  int s = -1;
  std::string detail;
};

struct FunctorReport {
  std::vector<FunctorViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

// A monoid-valued restriction functor with conjugations. The restriction is
// supplied on covering pairs only and composed along a fixed chain.
class MonoidFunctor {
 public:
  struct Definition {
    std::string name;
    std::shared_ptr<const SubgroupLattice> subgroups;
    std::vector<FiniteMonoid> monoids;
    std::function<int(int h, Elem g, int s)> con;  // M(h) -> M(g h g^-1)
    std::function<int(int k, int h, int s)> res;   // for k covered by h
    std::optional<LatticeView> lattice;
  };

  explicit MonoidFunctor(Definition def);

  const std::string& name() const { return name_; }
  const SubgroupLattice& subgroups() const { return *subgroups_; }
  const std::shared_ptr<const SubgroupLattice>& subgroups_ptr() const { return subgroups_; }
  const FiniteGroup& group() const { return subgroups_->group(); }
  const FiniteMonoid& monoid(int h) const { return monoids_[h]; }
  int con(int h, Elem g, int s) const;
  int res(int k, int h, int s) const;
  const std::vector<int>& cover_chain(int k, int h) const;
  std::string label(int h, int s) const { return monoids_[h].labels[s]; }
  bool all_commutative() const;

  bool is_lattice() const { return lattice_.has_value(); }
  // Throws NotLatticeFunctor for plain monoid functors.
  const LatticeView& lattice() const;

 private:
  std::size_t pair_index(int k, int h) const {
    return static_cast<std::size_t>(k) * subgroups_->size() + h;
  }
  std::string name_;
  std::shared_ptr<const SubgroupLattice> subgroups_;
  std::vector<FiniteMonoid> monoids_;
  std::vector<std::vector<std::vector<int>>> con_;  // [h][g][s]
  std::vector<std::vector<int>> res_;               // [pair_index(k, h)][s]
  std::vector<std::vector<int>> chain_;             // [pair_index(k, h)]
  std::optional<LatticeView> lattice_;
};

FunctorReport check_functor(const MonoidFunctor& m);

// Throws InvalidFamily unless the family passes validate_family; with
// validate = false the functor is built as given so that axiom checks can
// report what goes wrong.
std::shared_ptr<const MonoidFunctor> lattice_functor(const SublatticeFamily& family,
                                                     std::string name = "lattice",
                                                     bool validate = true);
std::shared_ptr<const MonoidFunctor> trivial_functor(std::shared_ptr<const SubgroupLattice> s);
std::shared_ptr<const MonoidFunctor> slice_functor(std::shared_ptr<const SubgroupLattice> s);
std::shared_ptr<const MonoidFunctor> conormal_functor(std::shared_ptr<const SubgroupLattice> s);
// M(H) = H-fixed points of a G-lattice under meet.
std::shared_ptr<const MonoidFunctor> crossed_functor(std::shared_ptr<const SubgroupLattice> s,
                                                     std::shared_ptr<const GLattice> lattice);
// M(H) = H-fixed points of a finite G-monoid; action[g][x].
std::shared_ptr<const MonoidFunctor> crossed_functor(std::shared_ptr<const SubgroupLattice> s,
                                                     const FiniteMonoid& monoid,
                                                     const std::vector<std::vector<int>>& action);

inline constexpr long long kCocycleCap = 1000000;

// M(H) = H^1(H, A) for a finite abelian G-group A; action[g][a].
std::shared_ptr<const MonoidFunctor> monomial_functor(std::shared_ptr<const SubgroupLattice> s,
                                                      const FiniteGroup& coefficients,
                                                      const std::vector<std::vector<int>>& action,
                                                      long long cap = kCocycleCap);

// Crossed homomorphisms H -> A as value vectors over the sorted members of H.
std::vector<std::vector<int>> cocycles(const SubgroupLattice& s, int h, const FiniteGroup& a,
                                       const std::vector<std::vector<int>>& action,
                                       long long cap = kCocycleCap);

}  // namespace burnside
