#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "burnside/scalar.hpp"

namespace burnside {

using Elem = int;

inline constexpr int kDefaultOrderCap = 5040;

// Fixed-universe bitset over group elements.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);

  int universe() const { return universe_; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  int size() const;
  std::vector<Elem> members() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  bool operator==(const ElementSet& other) const = default;
  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table,
                                int cap = kDefaultOrderCap);
  static FiniteGroup from_permutations(std::string name, int degree,
                                       const std::vector<std::vector<int>>& generators,
                                       int cap = kDefaultOrderCap);
  // C<n>, D<n> (order 2n), S<n> for n <= 4, A4, Q8, C2xC2.
  static FiniteGroup builtin(const std::string& name);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  int element_order(Elem a) const;
  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup(std::string name, std::vector<int> flat, int order);
  std::string name_;
  int order_ = 0;
  Elem identity_ = 0;
  std::vector<int> table_;
  std::vector<Elem> inverse_;
};

ElementSet closure(const FiniteGroup& g, const std::vector<Elem>& generators);

// All subgroups, sorted by (order, member list); ids index this order.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(members_.size()); }
  int trivial() const { return 0; }
  int whole() const { return size() - 1; }

  const std::vector<Elem>& members(int id) const { return members_[id]; }
  const ElementSet& mask(int id) const { return masks_[id]; }
  int order(int id) const { return static_cast<int>(members_[id].size()); }
  bool contains(int id, Elem x) const { return masks_[id].contains(x); }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size() + b] != 0; }
  int meet(int a, int b) const;
  int join(int a, int b) const;
  // id of g K g^-1
  int conjugate(Elem g, int id) const { return conj_[static_cast<std::size_t>(g) * size() + id]; }
  int class_rep(int id) const { return class_rep_[id]; }
  const std::vector<int>& class_reps() const { return class_reps_; }
  const std::vector<int>& subgroups_of(int h) const { return below_[h]; }
  // C(H): subgroups of h that are minimal in their h-conjugacy class.
  std::vector<int> reps_under(int h) const;
  int rep_under(int h, int k) const;
  bool is_normal(int k, int h) const;
  int normalizer(int k, int h) const;
  // Returns -1 when the set is not a subgroup.
  int find(const ElementSet& s) const;
  int id_of(const std::vector<Elem>& members) const;
  int generated(const std::vector<Elem>& generators) const;
  // <g> K for g normalising K, and more generally <K, g>.
  int extend(int k, Elem g) const;
  std::string label(int id) const { return "H" + std::to_string(id); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::vector<Elem>> members_;
  std::vector<ElementSet> masks_;
  std::vector<char> leq_;
  std::vector<int> conj_;
  std::vector<int> class_rep_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> above_;
};

// Representatives (least element) of the double cosets k \ h / u.
std::vector<Elem> double_coset_reps(const SubgroupLattice& lat, int h, int k, int u);
// Representatives (least element) of the left cosets x k in h.
std::vector<Elem> left_coset_reps(const SubgroupLattice& lat, int h, int k);
std::vector<Elem> stabilizer(const SubgroupLattice& lat, int h,
                             const std::function<bool(Elem)>& fixes);

// O^p(K); at infinity, the last term of the derived series.
int p_residual(const SubgroupLattice& lat, int k, Prime p);
bool is_p_group(int order, Prime p);
bool is_solvable(const SubgroupLattice& lat);

// N / K for K normal in N, elements indexed by ascending least coset member.
class QuotientGroup {
 public:
  QuotientGroup(const FiniteGroup& parent, const std::vector<Elem>& numerator,
                const std::vector<Elem>& kernel);

  int order() const { return static_cast<int>(reps_.size()); }
  const std::vector<Elem>& coset_reps() const { return reps_; }
  int coset_of(Elem g) const { return coset_[g]; }
  const FiniteGroup& group() const { return *quotient_; }
  // Lexicographically least Sylow p-subgroup, as coset indices. At infinity,
  // every coset.
  std::vector<int> sylow(Prime p) const;
  std::vector<std::vector<int>> all_sylows(Prime p) const;

 private:
  std::vector<Elem> reps_;
  std::vector<int> coset_;
  std::shared_ptr<const FiniteGroup> quotient_;
};

}  // namespace burnside
