#pragma once

#include <memory>
#include <string>

#include "burnside/partial.hpp"
#include "json.hpp"

namespace burnside {

using Json = nlohmann::ordered_json;

// Throws InvalidInput on unreadable or malformed files.
Json read_json_file(const std::string& path);

// {"name", "order", "table"} or {"name", "degree", "generators"}.
FiniteGroup group_from_json(const Json& j, int cap = kDefaultOrderCap);
Json group_to_json(const FiniteGroup& g);
// A built-in name, or a path to a group file.
FiniteGroup load_group(const std::string& name_or_path, int cap = kDefaultOrderCap);

// {"elems": [str], "leq": [[bool]], "action": [[int]]}; the action has one
// row per group element.
std::shared_ptr<const GLattice> glattice_from_json(const Json& j, const FiniteGroup& group);
Json glattice_to_json(const GLattice& lattice);

// {"member": {"<subgroup id>": [elem ids]}, "lattice": {...}}. Without
// "lattice" the elements are subgroup ids.
SublatticeFamily family_from_json(const Json& j, std::shared_ptr<const SubgroupLattice> subgroups);
Json family_to_json(const SublatticeFamily& family);

// {"elems": [str], "table": [[int]], "action": [[int]]}.
FiniteMonoid monoid_from_json(const Json& j);

// "trivial", "slice", "conormal", "crossed:<file>", "lattice:<file>",
// "monomial:<file>". A lattice file whose family fails validation raises
// InvalidFamily carrying both the family and the functor-axiom witnesses.
std::shared_ptr<const MonoidFunctor> load_functor(const std::string& spec,
                                                  std::shared_ptr<const SubgroupLattice> subgroups);

// {"basis": signature, "coeffs": {"<index>": "num/den"}}.
Json ring_element_to_json(const RingElement& x);
// Throws BasisMismatch when the signature differs.
RingElement ring_element_from_json(const Json& j, std::shared_ptr<const BasisSystem> basis);

// {"pairs": [[subgroup id, lattice index]], "subring": bool}.
PartialSystem partial_from_json(const Json& j, std::shared_ptr<const BasisSystem> basis);

}  // namespace burnside
