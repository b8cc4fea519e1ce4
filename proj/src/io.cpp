#include "burnside/io.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "burnside/error.hpp"

namespace burnside {

namespace {

template <typename T>
T field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::InvalidInput, what + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, what + ": bad \"" + key + "\": " + e.what());
  }
}

std::vector<std::vector<int>> action_rows(const Json& j, int group_order, int points,
                                          const std::string& what) {
  auto action = field<std::vector<std::vector<int>>>(j, "action", what);
  if (static_cast<int>(action.size()) != group_order)
    throw Error(ErrorCode::ActionNotByHomomorphisms,
                what + ": action needs one row per group element");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != points)
      throw Error(ErrorCode::ActionNotByHomomorphisms, what + ": action row has the wrong length");
    for (int x : row)
      if (x < 0 || x >= points)
        throw Error(ErrorCode::ActionNotByHomomorphisms, what + ": action entry out of range");
  }
  return action;
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, int cap) {
  const auto name = j.is_object() && j.contains("name") ? field<std::string>(j, "name", "group")
                                                        : std::string("G");
  if (j.is_object() && j.contains("table")) {
    auto table = field<std::vector<std::vector<int>>>(j, "table", "group");
    if (j.contains("order") && field<int>(j, "order", "group") != static_cast<int>(table.size()))
      throw Error(ErrorCode::InvalidInput, "group: order does not match the table");
    return FiniteGroup::from_table(name, table, cap);
  }
  const int degree = field<int>(j, "degree", "group");
  return FiniteGroup::from_permutations(
      name, degree, field<std::vector<std::vector<int>>>(j, "generators", "group"), cap);
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
}

FiniteGroup load_group(const std::string& name_or_path, int cap) {
  if (std::filesystem::exists(name_or_path))
    return group_from_json(read_json_file(name_or_path), cap);
  FiniteGroup g = FiniteGroup::builtin(name_or_path);
  if (g.order() > cap)
    throw Error(ErrorCode::OrderCapExceeded,
                name_or_path + " has order " + std::to_string(g.order()) + " > " + std::to_string(cap));
  return g;
}

std::shared_ptr<const GLattice> glattice_from_json(const Json& j, const FiniteGroup& group) {
  auto labels = field<std::vector<std::string>>(j, "elems", "lattice");
  auto rows = field<std::vector<std::vector<bool>>>(j, "leq", "lattice");
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::InvalidLattice, "lattice: leq must be square over the elements");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw Error(ErrorCode::InvalidLattice, "lattice: leq must be square over the elements");
  return GLattice::from_poset(FinitePoset(std::move(rows), std::move(labels)),
                              action_rows(j, group.order(), n, "lattice"), group);
}

Json glattice_to_json(const GLattice& lattice) {
  const int n = lattice.size();
  Json elems = Json::array(), leq = Json::array(), action = Json::array();
  for (int x = 0; x < n; ++x) {
    elems.push_back(lattice.label(x));
    Json row = Json::array();
    for (int y = 0; y < n; ++y) row.push_back(lattice.leq(x, y));
    leq.push_back(row);
  }
  for (Elem g = 0; g < lattice.group_order(); ++g) {
    Json row = Json::array();
    for (int x = 0; x < n; ++x) row.push_back(lattice.act(g, x));
    action.push_back(row);
  }
  return Json{{"elems", elems}, {"leq", leq}, {"action", action}};
}

SublatticeFamily family_from_json(const Json& j, std::shared_ptr<const SubgroupLattice> subgroups) {
  SublatticeFamily f;
  f.lattice = j.is_object() && j.contains("lattice")
                  ? glattice_from_json(j.at("lattice"), subgroups->group())
                  : subgroup_glattice(subgroups);
  f.subgroups = subgroups;
  f.member.resize(subgroups->size());
  const auto member = field<std::map<std::string, std::vector<int>>>(j, "member", "family");
  for (const auto& [key, elems] : member) {
    int h = -1;
    try {
      std::size_t used = 0;
      h = std::stoi(key, &used);
      if (used != key.size()) h = -1;
    } catch (const std::exception&) {
    }
    if (h < 0 || h >= subgroups->size())
      throw Error(ErrorCode::InvalidFamily, "family: '" + key + "' is not a subgroup id");
    std::set<int> sorted(elems.begin(), elems.end());
    for (int x : sorted)
      if (x < 0 || x >= f.lattice->size())
        throw Error(ErrorCode::InvalidFamily, "family: element " + std::to_string(x) + " out of range");
    f.member[h].assign(sorted.begin(), sorted.end());
  }
  for (int h = 0; h < subgroups->size(); ++h)
    if (f.member[h].empty())
      throw Error(ErrorCode::InvalidFamily, "family: no members for subgroup " + std::to_string(h));
  return f;
}

Json family_to_json(const SublatticeFamily& family) {
  Json member = Json::object();
  for (std::size_t h = 0; h < family.member.size(); ++h)
    member[std::to_string(h)] = family.member[h];
  Json j{{"member", member}};
  if (!family.lattice->is_subgroup_lattice()) j["lattice"] = glattice_to_json(*family.lattice);
  return j;
}

FiniteMonoid monoid_from_json(const Json& j) {
  FiniteMonoid m;
  m.labels = field<std::vector<std::string>>(j, "elems", "monoid");
  m.size = static_cast<int>(m.labels.size());
  auto table = field<std::vector<std::vector<int>>>(j, "table", "monoid");
  if (static_cast<int>(table.size()) != m.size)
    throw Error(ErrorCode::InvalidInput, "monoid: table must be square over the elements");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m.size)
      throw Error(ErrorCode::InvalidInput, "monoid: table must be square over the elements");
    for (int v : row) {
      if (v < 0 || v >= m.size) throw Error(ErrorCode::InvalidInput, "monoid: entry out of range");
      m.table.push_back(v);
    }
  }
  m.identity = -1;
  for (int e = 0; e < m.size && m.identity < 0; ++e) {
    bool unit = true;
    for (int x = 0; x < m.size; ++x) unit = unit && m.mul(e, x) == x && m.mul(x, e) == x;
    if (unit) m.identity = e;
  }
  if (m.identity < 0) throw Error(ErrorCode::NoIdentity, "monoid has no identity");
  return m;
}

std::shared_ptr<const MonoidFunctor> load_functor(const std::string& spec,
                                                  std::shared_ptr<const SubgroupLattice> subgroups) {
  const auto [kind, path] = split_spec(spec);
  if (path.empty()) {
    if (kind == "trivial") return trivial_functor(subgroups);
    if (kind == "slice") return slice_functor(subgroups);
    if (kind == "conormal") return conormal_functor(subgroups);
    throw Error(ErrorCode::InvalidInput, "unknown functor '" + spec + "'");
  }
  const Json j = read_json_file(path);
  const FiniteGroup& g = subgroups->group();
  if (kind == "crossed") {
    if (j.contains("leq")) return crossed_functor(subgroups, glattice_from_json(j, g));
    const FiniteMonoid m = monoid_from_json(j);
    return crossed_functor(subgroups, m, action_rows(j, g.order(), m.size, "monoid"));
  }
  if (kind == "lattice") {
    const SublatticeFamily family = family_from_json(j, subgroups);
    const FamilyReport report = validate_family(family);
    if (report.ok()) return lattice_functor(family, "lattice");
    const auto raw = lattice_functor(family, "lattice", false);
    throw Error(ErrorCode::InvalidFamily, report.str() + "\n" + check_functor(*raw).str());
  }
  if (kind == "monomial") {
    const FiniteGroup a = group_from_json(j);
    return monomial_functor(subgroups, a, action_rows(j, g.order(), a.order(), "coefficients"));
  }
  throw Error(ErrorCode::InvalidInput, "unknown functor kind '" + kind + "'");
}

Json ring_element_to_json(const RingElement& x) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : x.coeffs()) coeffs[std::to_string(i)] = to_string(c);
  return Json{{"basis", x.basis().signature()}, {"coeffs", coeffs}};
}

RingElement ring_element_from_json(const Json& j, std::shared_ptr<const BasisSystem> basis) {
  const auto sig = field<std::string>(j, "basis", "ring element");
  if (sig != basis->signature())
    throw Error(ErrorCode::BasisMismatch,
                "element over basis " + sig + ", expected " + basis->signature());
  RingElement x(basis, ScalarDomain::rationals());
  const auto coeffs = field<std::map<std::string, std::string>>(j, "coeffs", "ring element");
  for (const auto& [key, value] : coeffs) {
    int i = -1;
    try {
      i = std::stoi(key);
    } catch (const std::exception&) {
    }
    if (i < 0 || i >= basis->rank() || std::to_string(i) != key)
      throw Error(ErrorCode::InvalidInput, "ring element: bad index '" + key + "'");
    x.add(i, parse_rational(value));
  }
  for (const auto& [i, c] : x.coeffs())
    if (c.get_den() != 1) return x;
  return x.with_domain(ScalarDomain::integers());
}

PartialSystem partial_from_json(const Json& j, std::shared_ptr<const BasisSystem> basis) {
  const auto pairs = field<std::vector<std::array<int, 2>>>(j, "pairs", "partial system");
  const bool subring = j.contains("subring") && field<bool>(j, "subring", "partial system");
  const LatticeView& lv = basis->functor().lattice();
  std::set<std::pair<int, int>> chosen;
  for (const auto& [k, x] : pairs) {
    if (k < 0 || k >= basis->subgroups().size() || x < 0 ||
        x >= static_cast<int>(lv.from_lattice[k].size()) || lv.from_lattice[k][x] < 0)
      throw Error(ErrorCode::InvalidInput, "partial system: (" + std::to_string(k) + ", " +
                                               std::to_string(x) + ") is not in S(G, M)");
    chosen.insert({k, x});
  }
  return PartialSystem(
      basis, [chosen](int k, int x) { return chosen.count({k, x}) > 0; }, subring, "file");
}

}  // namespace burnside
