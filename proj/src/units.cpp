#include "burnside/units.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

#include "burnside/error.hpp"
#include "burnside/spectra.hpp"

namespace burnside {

GhostUnit GhostUnit::from_mask(int rank, std::uint64_t minus) {
  GhostUnit x;
  for (int i = 0; i < rank; ++i) x.signs.push_back((minus >> i) & 1U ? -1 : 1);
  return x;
}

std::uint64_t GhostUnit::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] < 0) m |= std::uint64_t{1} << i;
  return m;
}

GhostVector GhostUnit::ghost(std::shared_ptr<const BasisSystem> basis) const {
  GhostVector y{std::move(basis), {}, ScalarDomain::integers()};
  for (int s : signs) y.entries.emplace_back(s);
  return y;
}

UnitCriterion::UnitCriterion(std::vector<std::shared_ptr<const QuotientGroup>> weyl,
                             std::vector<std::vector<int>> target)
    : weyl_(std::move(weyl)), target_(std::move(target)) {
  if (rank() >= 64) return;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < rank(); ++i) {
    const FiniteGroup& w = weyl_[i]->group();
    const auto& t = target_[i];
    for (Elem a = 0; a < w.order(); ++a)
      for (Elem b = 0; b < w.order(); ++b) {
        // x_i x_T(ab) = x_i x_T(a) x_i x_T(b)
        std::uint64_t m = std::uint64_t{1} << i;
        for (int j : {t[w.mul(a, b)], t[a], t[b]}) m ^= std::uint64_t{1} << j;
        if (m != 0 && seen.insert(m).second) masks_.push_back(m);
      }
  }
}

UnitCriterion UnitCriterion::from_basis(const BasisSystem& basis) {
  std::vector<std::shared_ptr<const QuotientGroup>> weyl;
  std::vector<std::vector<int>> target;
  for (int i = 0; i < basis.rank(); ++i) {
    weyl.push_back(basis.weyl(i).weyl);
    auto& row = target.emplace_back();
    for (Elem g : weyl.back()->coset_reps()) row.push_back(coequalizer(basis, i, g).target_index);
  }
  return UnitCriterion(std::move(weyl), std::move(target));
}

bool UnitCriterion::accepts(const GhostUnit& x) const {
  if (static_cast<int>(x.signs.size()) != rank())
    throw Error(ErrorCode::BasisMismatch, "ghost unit has the wrong length");
  for (int s : x.signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidInput, "ghost unit entries must be +1 or -1");
  for (int i = 0; i < rank(); ++i) {
    const FiniteGroup& w = weyl_[i]->group();
    const auto& t = target_[i];
    auto gamma = [&](Elem a) { return x.signs[i] * x.signs[t[a]]; };
    for (Elem a = 0; a < w.order(); ++a)
      for (Elem b = 0; b < w.order(); ++b)
        if (gamma(w.mul(a, b)) != gamma(a) * gamma(b)) return false;
  }
  return true;
}

bool UnitCriterion::accepts_mask(std::uint64_t minus) const {
  for (std::uint64_t m : masks_)
    if (std::popcount(m & minus) & 1) return false;
  return true;
}

std::optional<RingElement> lift_unit(const GhostMaps& maps, const GhostUnit& x) {
  if (!UnitCriterion::from_basis(maps.basis()).accepts(x)) return std::nullopt;
  const GhostVector y = x.ghost(maps.basis_ptr());
  RingElement u = unmark(maps, maps.beta(y));
  if (!(maps.lattice_phi(u) == y))
    throw std::logic_error("unit witness does not reproduce its ghost");
  return u.with_domain(ScalarDomain::integers());
}

namespace {

// Greedy F_2 basis; returns the positions of the chosen masks.
std::vector<std::size_t> xor_basis(const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> reduced;
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    std::uint64_t v = masks[k];
    for (std::uint64_t r : reduced) v = std::min(v, v ^ r);
    if (v == 0) continue;
    reduced.push_back(v);
    std::sort(reduced.rbegin(), reduced.rend());
    chosen.push_back(k);
  }
  return chosen;
}

}  // namespace

UnitGroup unit_group(const GhostMaps& maps, int cap_rank) {
  const BasisSystem& b = maps.basis();
  const int r = b.rank();
  if (r > cap_rank || r >= 63)
    throw Error(ErrorCode::RankCapExceeded,
                "rank " + std::to_string(r) + " exceeds the unit search cap " + std::to_string(cap_rank));
  const UnitCriterion crit = UnitCriterion::from_basis(b);
  const std::uint64_t total = std::uint64_t{1} << r;

  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
  std::vector<std::vector<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t m = w; m < total; m += workers)
          if (crit.accepts_mask(m)) found[w].push_back(m);
      });
  }
  std::vector<std::uint64_t> masks;
  for (auto& f : found) masks.insert(masks.end(), f.begin(), f.end());
  std::sort(masks.begin(), masks.end());

  UnitGroup out;
  const RingElement one = RingElement::one(maps.basis_ptr());
  std::set<std::uint64_t> present(masks.begin(), masks.end());
  for (std::uint64_t m : masks) {
    GhostUnit x = GhostUnit::from_mask(r, m);
    auto u = lift_unit(maps, x);
    if (!u) throw std::logic_error("mask filter and gamma test disagree");
    out.squares_trivial = out.squares_trivial && (*u) * (*u) == one;
    out.ghosts.push_back(std::move(x));
    out.units.push_back(std::move(*u));
  }
  const auto basis_pos = xor_basis(masks);
  for (std::size_t k : basis_pos) out.generators.push_back(out.units[k]);
  for (std::uint64_t m : masks)
    for (std::size_t k : basis_pos) out.closed = out.closed && present.count(m ^ masks[k]);
  out.order = static_cast<long long>(masks.size());
  out.rank = static_cast<int>(basis_pos.size());
  return out;
}

std::vector<RingElement> abelian_conormal_generators(std::shared_ptr<const BasisSystem> basis) {
  const SubgroupLattice& sub = basis->subgroups();
  if (!basis->group().is_abelian())
    throw Error(ErrorCode::NotAbelian, basis->group().name() + " is not abelian");
  if (basis->functor().name() != "conormal" || basis->host() != sub.whole())
    throw Error(ErrorCode::InvalidInput, "expected the conormal ring of the whole group");
  const LatticeView& lv = basis->functor().lattice();
  const RingElement one = RingElement::one(basis);
  std::vector<RingElement> out{-one};
  const int g = sub.whole();
  for (int h : sub.subgroups_of(g)) {
    if (sub.order(g) != 2 * sub.order(h)) continue;
    for (int u : sub.subgroups_of(h))
      out.push_back(RingElement::basis_element(basis, basis->index_of(h, lv.from_lattice[h][u])) - one);
  }
  return out;
}

int generated_rank(const GhostMaps& maps, const std::vector<RingElement>& units) {
  std::vector<std::uint64_t> masks;
  for (const auto& u : units) {
    const GhostVector y = maps.lattice_phi(u);
    GhostUnit x;
    for (const auto& v : y.entries) {
      if (v != 1 && v != -1) throw Error(ErrorCode::InvalidInput, "not a unit: " + u.str());
      x.signs.push_back(v == 1 ? 1 : -1);
    }
    masks.push_back(x.mask());
  }
  return static_cast<int>(xor_basis(masks).size());
}

}  // namespace burnside
