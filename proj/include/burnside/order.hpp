#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

using IntMatrix = std::vector<std::vector<long long>>;

class FinitePoset {
 public:
  // Throws InvalidLattice unless leq is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  const std::string& label(int a) const { return labels_[a]; }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> labels_;
};

// Order of the elements compatible with leq (smaller first).
std::vector<int> linear_extension(int n, const std::function<bool(int, int)>& leq);
// mu(a, b), zero unless a <= b.
IntMatrix mobius(int n, const std::function<bool(int, int)>& leq);
IntMatrix mobius(const FinitePoset& poset);

// A finite lattice with an order-preserving action of a group by
// automorphisms.
class GLattice {
 public:
  // Validates the lattice axioms and the action.
  static std::shared_ptr<const GLattice> from_poset(const FinitePoset& poset,
                                                    const std::vector<std::vector<int>>& action,
                                                    const FiniteGroup& group);

  int size() const { return size_; }
  bool leq(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int act(Elem g, int x) const;
  std::string label(int x) const;
  int group_order() const { return group_order_; }
  bool is_subgroup_lattice() const { return kind_ == Kind::Subgroups; }

  friend std::shared_ptr<const GLattice> subgroup_glattice(
      std::shared_ptr<const SubgroupLattice> subgroups);
  friend std::shared_ptr<const GLattice> powerset_glattice(
      const FiniteGroup& group, const std::vector<std::vector<int>>& point_action, int cap);
  friend std::shared_ptr<const GLattice> point_glattice(const FiniteGroup& group);

 private:
  enum class Kind { Explicit, Bitmask, Subgroups };
  GLattice() = default;

  Kind kind_ = Kind::Explicit;
  int size_ = 0;
  int top_ = 0;
  int bottom_ = 0;
  int group_order_ = 0;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  std::vector<std::vector<int>> action_;  // action_[g][x]; points for Bitmask
  std::vector<std::string> labels_;
  std::shared_ptr<const SubgroupLattice> subgroups_;
};

std::shared_ptr<const GLattice> subgroup_glattice(std::shared_ptr<const SubgroupLattice> subgroups);
// Subsets of a G-set of at most `cap` points, ordered by inclusion.
std::shared_ptr<const GLattice> powerset_glattice(const FiniteGroup& group,
                                                  const std::vector<std::vector<int>>& point_action,
                                                  int cap = 12);
std::shared_ptr<const GLattice> point_glattice(const FiniteGroup& group);

// Lambda_H for every subgroup id H, as sorted lattice indices.
struct SublatticeFamily {
  std::shared_ptr<const GLattice> lattice;
  std::shared_ptr<const SubgroupLattice> subgroups;
  std::vector<std::vector<int>> member;

  int sup(int h) const;
  int inf(int h) const;
  bool contains(int h, int x) const;
};

struct FamilyViolation {
  int condition;  // 0: not a sublattice; 1..4: the four compatibility conditions
  int h = -1, k = -1, s = -1;
  Elem g = -1;
  std::string detail;
};

struct FamilyReport {
  std::vector<FamilyViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

FamilyReport validate_family(const SublatticeFamily& family);

SublatticeFamily slice_family(std::shared_ptr<const SubgroupLattice> subgroups);
SublatticeFamily conormal_family(std::shared_ptr<const SubgroupLattice> subgroups);
// Lambda_H = the H-fixed points of a G-lattice.
SublatticeFamily invariant_family(std::shared_ptr<const SubgroupLattice> subgroups,
                                  std::shared_ptr<const GLattice> lattice);

}  // namespace burnside
