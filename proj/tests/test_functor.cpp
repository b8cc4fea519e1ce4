#include "burnside/error.hpp"
#include "burnside/io.hpp"
#include "doctest.h"
#include "fixture.hpp"

using namespace burnside;

namespace {

std::shared_ptr<const SubgroupLattice> lattice_of(const std::string& name) {
  return std::make_shared<const SubgroupLattice>(
      std::make_shared<const FiniteGroup>(FiniteGroup::builtin(name)));
}

}  // namespace

TEST_CASE("built-in functors satisfy the monoid functor axioms") {
  for (const char* g : fixture::kGroups)
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto m = fixture::make_functor(f, lattice_of(g));
      const auto report = check_functor(*m);
      CHECK_MESSAGE(report.ok(), report.str());
    }
}

TEST_CASE("monoids of the built-in functors") {
  const auto s3 = lattice_of("S3");
  const auto triv = trivial_functor(s3);
  for (int h = 0; h < s3->size(); ++h) CHECK(triv->monoid(h).size == 1);

  const auto slice = slice_functor(s3);
  const auto& lv = slice->lattice();
  for (int h = 0; h < s3->size(); ++h) {
    std::vector<int> above;
    for (int e = 0; e < s3->size(); ++e)
      if (s3->leq(h, e)) above.push_back(e);
    std::vector<int> got(lv.to_lattice[h]);
    std::sort(got.begin(), got.end());
    CHECK(got == above);
    // Restriction to a subgroup keeps E.
    for (int k : s3->subgroups_of(h))
      for (int s = 0; s < slice->monoid(h).size; ++s)
        CHECK(lv.to_lattice[k][slice->res(k, h, s)] == lv.to_lattice[h][s]);
  }

  const auto c4 = lattice_of("C4");
  const auto con = conormal_functor(c4);
  const auto& cv = con->lattice();
  for (int h = 0; h < c4->size(); ++h)
    for (int k : c4->subgroups_of(h))
      for (int s = 0; s < con->monoid(h).size; ++s)
        CHECK(c4->members(cv.to_lattice[k][con->res(k, h, s)]) ==
              oracle::intersect(c4->members(cv.to_lattice[h][s]), c4->members(k)));
  const auto cs3 = conormal_functor(s3);
  int pairs = 0;
  for (int h : s3->class_reps()) pairs += cs3->monoid(h).size;
  CHECK(pairs == 8);
}

TEST_CASE("cocycles agree with enumeration") {
  const auto c2 = lattice_of("C2");
  const auto a2 = FiniteGroup::builtin("C2");
  const std::vector<std::vector<int>> trivial2{{0, 1}, {0, 1}};
  CHECK(cocycles(*c2, c2->whole(), a2, trivial2).size() == 2);
  CHECK(oracle::count_cocycles(c2->group(), c2->members(c2->whole()), a2, trivial2) == 2);

  const auto a3 = FiniteGroup::builtin("C3");
  const std::vector<std::vector<int>> inversion{{0, 1, 2}, {0, 2, 1}};
  CHECK(cocycles(*c2, c2->whole(), a3, inversion).size() == 3);
  const auto m = monomial_functor(c2, a3, inversion);
  CHECK(m->monoid(c2->whole()).size == 1);
  const auto m2 = monomial_functor(c2, a2, trivial2);
  CHECK(m2->monoid(c2->whole()).size == 2);

  // S3 acting on C3 through the sign, and trivially on C2.
  const auto s3 = lattice_of("S3");
  const auto& g = s3->group();
  std::vector<std::vector<int>> sign(g.order());
  const int c3 = [&] {
    for (int h = 0; h < s3->size(); ++h)
      if (s3->order(h) == 3) return h;
    return -1;
  }();
  for (Elem x = 0; x < g.order(); ++x)
    sign[x] = s3->contains(c3, x) ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 2, 1};
  std::vector<std::vector<int>> flat2(g.order(), std::vector<int>{0, 1});
  for (int h = 0; h < s3->size(); ++h) {
    CAPTURE(h);
    CHECK(static_cast<long long>(cocycles(*s3, h, a3, sign).size()) ==
          oracle::count_cocycles(g, s3->members(h), a3, sign));
    CHECK(static_cast<long long>(cocycles(*s3, h, a2, flat2).size()) ==
          oracle::count_cocycles(g, s3->members(h), a2, flat2));
  }
  CHECK(check_functor(*monomial_functor(s3, a3, sign)).ok());
  CHECK(check_functor(*monomial_functor(s3, a2, flat2)).ok());
}

TEST_CASE("action errors") {
  const auto c2 = lattice_of("C2");
  const auto a3 = FiniteGroup::builtin("C3");
  // Not an automorphism.
  CHECK_THROWS_AS(monomial_functor(c2, a3, {{0, 1, 2}, {0, 1, 1}}), Error);
  // Wrong number of rows.
  CHECK_THROWS_AS(monomial_functor(c2, a3, {{0, 1, 2}}), Error);
  try {
    load_functor("monomial:" + fixture::kData + "/c3_inversion_module.json", lattice_of("S3"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ActionNotByHomomorphisms);
  }
}

TEST_CASE("crossed functors from files") {
  const auto c2 = lattice_of("C2");
  const auto diamond = load_functor("crossed:" + fixture::kData + "/diamond_lattice.json", c2);
  CHECK(check_functor(*diamond).ok());
  CHECK(diamond->monoid(0).size == 4);
  CHECK(diamond->monoid(c2->whole()).size == 2);  // the swapped atoms drop out

  const auto monoid = load_functor("crossed:" + fixture::kData + "/noncommutative_monoid.json", c2);
  CHECK(check_functor(*monoid).ok());
  CHECK_FALSE(monoid->all_commutative());
  CHECK_FALSE(monoid->is_lattice());
  CHECK_THROWS_AS(monoid->lattice(), Error);
}

TEST_CASE("a corrupted family reports the broken axiom") {
  const auto c22 = lattice_of("C2xC2");
  try {
    load_functor("lattice:" + fixture::kData + "/corrupted_family.json", c22);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFamily);
    const std::string what = e.what();
    CHECK(what.find("condition 4") != std::string::npos);
    CHECK(what.find("M.2") != std::string::npos);
  }
  const auto ok = load_functor("lattice:" + fixture::kData + "/slice_family.json", lattice_of("S3"));
  CHECK(check_functor(*ok).ok());
}
