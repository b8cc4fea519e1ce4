#pragma once

// Brute-force references for the tests. Nothing here calls into the library
// except to read group tables and to look up basis labels at the very end.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "burnside/ghost.hpp"

namespace oracle {

using burnside::Elem;
using burnside::FiniteGroup;
using burnside::Integer;
using burnside::Rational;
using Set = std::vector<Elem>;  // sorted

Set closure(const FiniteGroup& g, const Set& generators);
Set intersect(const Set& a, const Set& b);
Set conjugate(const FiniteGroup& g, Elem x, const Set& s);
bool is_subset(const Set& a, const Set& b);
bool is_normal(const FiniteGroup& g, const Set& n, const Set& h);
Set commutator(const FiniteGroup& g, const Set& a, const Set& b);

// Every subset containing the identity and closed under products; |G| <= 16.
std::vector<Set> subgroups_by_subsets(const FiniteGroup& g);

// O^p(K) as the intersection of the normal N with K/N a p-group; p = 0 for
// infinity, the stable term of the derived series.
Set p_residual(const FiniteGroup& g, const std::vector<Set>& subgroups, const Set& k, int p);

// mu(a, b) by the defining recursion.
long long mobius(int n, const std::function<bool(int, int)>& leq, int a, int b);

// Invariant factors from gcds of k x k minors.
std::vector<Integer> determinantal_invariants(const std::vector<std::vector<long long>>& m);
Rational determinant(std::vector<std::vector<Rational>> m);
// x A = b by Gauss-Jordan over Q.
std::optional<std::vector<Rational>> solve_left(const std::vector<std::vector<long long>>& a,
                                                const std::vector<Rational>& b);
bool integral_at(const Rational& q, int p);  // p = 0: integer

// Maps H -> A satisfying f(xy) = f(x) + x.f(y), by enumeration.
long long count_cocycles(const FiniteGroup& g, const Set& h, const FiniteGroup& a,
                         const std::vector<std::vector<int>>& action);

// Finite G-sets whose points carry a subgroup label, for the trivial, slice
// and conormal families. Points are (stabiliser, label) pairs.
enum class Kind { Trivial, Slice, Conormal };

struct Point {
  Set stab;
  Set label;
};
using LabeledSet = std::vector<Point>;

Set restrict_label(Kind kind, const Set& label, const Set& to);
LabeledSet transitive(const FiniteGroup& g, const Set& host, const Set& k, const Set& label);
LabeledSet product(Kind kind, const FiniteGroup& g, const LabeledSet& x, const LabeledSet& y);
LabeledSet restrict_to(Kind kind, const FiniteGroup& g, const LabeledSet& x, const Set& h);
LabeledSet induce(const FiniteGroup& g, const Set& from, const Set& to, const LabeledSet& y);

// The labelled set of a basis element, and the decomposition of a labelled
// set over a basis, both read from explicit subgroups.
Set basis_subgroup(const burnside::BasisSystem& b, int i);
Set basis_label(const burnside::BasisSystem& b, int i);
LabeledSet of_basis(const burnside::BasisSystem& b, int i);
std::map<int, long long> decompose(const burnside::BasisSystem& b, const LabeledSet& x);

// Marks of a labelled set at basis pair j: points fixed by U_j whose label
// restricts to t_j, or (lattice form) lies above t_j.
long long mark(Kind kind, const burnside::BasisSystem& b, const LabeledSet& x, int j, bool lattice);

// Number of orbits of the host on pairs (K, L), L in Lambda_K.
int orbit_count(Kind kind, const FiniteGroup& g, const std::vector<Set>& subgroups,
                const Set& host);

// Atoms of the Boolean algebra of 0/1 ghost vectors whose preimage under
// the lattice marks is p-integral. Exponential in the rank.
std::vector<std::vector<int>> integral_atoms(const std::vector<std::vector<long long>>& marks,
                                             int p);
// Sign vectors with integral preimage, as minus masks. Exponential in the rank.
std::vector<unsigned long long> integral_units(const std::vector<std::vector<long long>>& marks);

// Connected components of a graph on n vertices, ordered by least member.
std::vector<std::vector<int>> components(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace oracle
