#pragma once

#include <memory>
#include <string>

#include "burnside/ghost.hpp"
#include "oracle.hpp"

namespace fixture {

inline const std::string kData = BURNSIDE_TEST_DATA;

struct Ring {
  std::shared_ptr<const burnside::SubgroupLattice> subgroups;
  std::shared_ptr<const burnside::MonoidFunctor> functor;
  std::shared_ptr<burnside::GreenFunctor> green;
  std::shared_ptr<const burnside::BasisSystem> basis;
  std::shared_ptr<burnside::GhostMaps> maps;
};

inline std::shared_ptr<const burnside::MonoidFunctor> make_functor(
    const std::string& name, std::shared_ptr<const burnside::SubgroupLattice> s) {
  if (name == "slice") return burnside::slice_functor(s);
  if (name == "conormal") return burnside::conormal_functor(s);
  return burnside::trivial_functor(s);
}

inline Ring make(const std::string& group, const std::string& functor, int host = -1) {
  Ring r;
  auto g = std::make_shared<const burnside::FiniteGroup>(burnside::FiniteGroup::builtin(group));
  r.subgroups = std::make_shared<const burnside::SubgroupLattice>(g);
  r.functor = make_functor(functor, r.subgroups);
  r.green = std::make_shared<burnside::GreenFunctor>(r.functor);
  r.basis = host < 0 ? r.green->basis() : r.green->basis(host);
  r.maps = std::make_shared<burnside::GhostMaps>(r.basis);
  return r;
}

inline oracle::Kind kind(const std::string& functor) {
  if (functor == "slice") return oracle::Kind::Slice;
  if (functor == "conormal") return oracle::Kind::Conormal;
  return oracle::Kind::Trivial;
}

inline const char* const kGroups[] = {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C6", "A4"};
inline const char* const kFunctors[] = {"trivial", "slice", "conormal"};

}  // namespace fixture
