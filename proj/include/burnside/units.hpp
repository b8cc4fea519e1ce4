#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "burnside/ghost.hpp"

namespace burnside {

// A unit of the ghost ring: one sign per representative.
struct GhostUnit {
  std::vector<int> signs;

  static GhostUnit from_mask(int rank, std::uint64_t minus);
  std::uint64_t mask() const;  // bit i set iff signs[i] == -1
  GhostVector ghost(std::shared_ptr<const BasisSystem> basis) const;
};

// The gamma test. For each representative i, target[i][c] is the
// representative of the coequalizer of i by the c-th element of its Weyl
// group; gamma_i(c) = x_i x_target[i][c] must be a homomorphism.
class UnitCriterion {
 public:
  UnitCriterion(std::vector<std::shared_ptr<const QuotientGroup>> weyl,
                std::vector<std::vector<int>> target);
  static UnitCriterion from_basis(const BasisSystem& basis);

  int rank() const { return static_cast<int>(weyl_.size()); }
  bool accepts(const GhostUnit& x) const;
  // The same test on sign masks, for rank < 64.
  bool accepts_mask(std::uint64_t minus) const;

 private:
  std::vector<std::shared_ptr<const QuotientGroup>> weyl_;
  std::vector<std::vector<int>> target_;
  std::vector<std::uint64_t> masks_;  // each must meet the sign mask evenly
};

// x with alpha(phi(x)) = x~, or nullopt when the gamma test fails.
std::optional<RingElement> lift_unit(const GhostMaps& maps, const GhostUnit& x);

inline constexpr int kUnitRankCap = 20;

struct UnitGroup {
  std::vector<GhostUnit> ghosts;  // increasing sign mask
  std::vector<RingElement> units;
  std::vector<RingElement> generators;
  long long order = 0;
  int rank = 0;  // as an F_2 vector space
  bool squares_trivial = true;
  bool closed = true;
};

// Exhaustive over the 2^rank sign vectors; throws RankCapExceeded above cap.
UnitGroup unit_group(const GhostMaps& maps, int cap_rank = kUnitRankCap);

// -1 and [(G/H)_U] - 1 for |G:H| = 2 and U <= H, over a conormal basis of
// an abelian group.
std::vector<RingElement> abelian_conormal_generators(std::shared_ptr<const BasisSystem> basis);

// The F_2 rank of the subgroup generated by the given units, read off
// their ghost signs.
int generated_rank(const GhostMaps& maps, const std::vector<RingElement>& units);

}  // namespace burnside
