#pragma once

#include <string>
#include <vector>

#include "burnside/ghost.hpp"

namespace burnside {

struct Coequalizer {
  BasisPair source;
  Elem g;
  BasisPair target;  // (<g>U, inf of Lambda_<g>U above t), before normalising
  int target_index;  // its representative
};

// g must lie in N_H(U,t), otherwise NotInWeylGroup.
Coequalizer coequalizer(const BasisSystem& basis, int i, Elem g);

// The partition of R(H, M_Lambda) generated by (U,t) ~ coequalizer(U,t,g)
// for g U in a Sylow p-subgroup of W_H(U,t).
struct EquivalenceClasses {
  Prime prime = Prime::infinity();
  std::vector<int> class_of;               // representative -> class
  std::vector<std::vector<int>> classes;   // ordered by least member
  std::vector<std::pair<int, int>> edges;  // merged (source, target) representatives
  int count() const { return static_cast<int>(classes.size()); }
};

// sylow_choice selects among the Sylow subgroups of each Weyl group
// (index modulo their number); 0 is the canonical choice.
EquivalenceClasses equivalence_classes(const GhostMaps& maps, Prime p, int sylow_choice = 0);

// Primitive idempotents of Q (x) Omega(H, M_Lambda), one per representative.
std::vector<RingElement> idempotents_rational(const GhostMaps& maps);

struct LocalIdempotent {
  std::vector<int> members;
  RingElement element;
};

// Class sums of the rational idempotents; each is checked to lie in Z_(p).
std::vector<LocalIdempotent> idempotents_local(const GhostMaps& maps, Prime p);

struct ConnectivityReport {
  Prime prime = Prime::infinity();
  int classes = 0;
  int conjugacy_classes = 0;  // |C(H)|
  bool p_group = false;
  bool solvable = false;
  bool residuals_conjugate = true;  // O^p constant on each class up to conjugacy
  std::vector<std::string> failures;
  std::string str() const;
};

ConnectivityReport connectivity(const GhostMaps& maps, Prime p);

}  // namespace burnside
