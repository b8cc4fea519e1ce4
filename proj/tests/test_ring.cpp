#include "burnside/error.hpp"
#include "doctest.h"
#include "fixture.hpp"

using namespace burnside;

namespace {

std::map<int, long long> as_map(const RingElement& x) {
  std::map<int, long long> out;
  for (const auto& [i, c] : x.coeffs()) {
    REQUIRE(c.get_den() == 1);
    out[i] = c.get_num().get_si();
  }
  return out;
}

}  // namespace

TEST_CASE("basis ranks agree with orbit enumeration") {
  for (const char* g : fixture::kGroups)
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto r = fixture::make(g, f);
      const auto& grp = r.subgroups->group();
      const auto subs = oracle::subgroups_by_subsets(grp);
      for (int h = 0; h < r.subgroups->size(); ++h)
        CHECK(r.green->basis(h)->rank() ==
              oracle::orbit_count(fixture::kind(f), grp, subs, r.subgroups->members(h)));
    }
  // Frozen from the orbit oracle.
  CHECK(fixture::make("S3", "trivial").basis->rank() == 4);
  CHECK(fixture::make("C2", "slice").basis->rank() == 3);
  CHECK(fixture::make("S3", "slice").basis->rank() == 9);
  CHECK(fixture::make("C2", "conormal").basis->rank() == 3);
  CHECK(fixture::make("S3", "conormal").basis->rank() == 8);
  CHECK(fixture::make("C1", "slice").basis->rank() == 1);
  // M(1) is every subgroup of G, and the trivial host fuses nothing.
  CHECK(fixture::make("S3", "slice", 0).basis->rank() == 6);
}

TEST_CASE("Weyl groups agree with stabiliser scans") {
  for (const char* g : {"S3", "D4", "A4"})
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto r = fixture::make(g, f);
      const auto& grp = r.subgroups->group();
      for (int i = 0; i < r.basis->rank(); ++i) {
        const auto k = oracle::basis_subgroup(*r.basis, i);
        const auto l = oracle::basis_label(*r.basis, i);
        int n = 0;
        for (Elem x = 0; x < grp.order(); ++x)
          n += oracle::conjugate(grp, x, k) == k && oracle::conjugate(grp, x, l) == l;
        CHECK(r.basis->weyl(i).order() * static_cast<int>(k.size()) == n);
      }
    }
  // K = C2 in S3 with the trivial functor: N = C2, W trivial.
  const auto s3 = fixture::make("S3", "trivial");
  CHECK(s3.basis->weyl(1).order() == 1);
  const auto c2 = fixture::make("C2", "trivial");
  CHECK(c2.basis->weyl(0).order() == 2);
}

TEST_CASE("products agree with labelled G-set products") {
  for (const char* g : fixture::kGroups)
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto r = fixture::make(g, f);
      const auto kind = fixture::kind(f);
      const auto& grp = r.subgroups->group();
      const int n = r.basis->rank();
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const auto prod = RingElement::basis_element(r.basis, i) * RingElement::basis_element(r.basis, j);
          const auto ref = oracle::decompose(
              *r.basis, oracle::product(kind, grp, oracle::of_basis(*r.basis, i), oracle::of_basis(*r.basis, j)));
          CHECK(as_map(prod) == ref);
        }
    }
}

TEST_CASE("restriction, induction and conjugation agree with G-set operations") {
  for (const char* g : {"S3", "D4", "A4", "C2xC2"})
    for (const char* f : fixture::kFunctors) {
      CAPTURE(std::string(g));
      CAPTURE(std::string(f));
      const auto r = fixture::make(g, f);
      const auto kind = fixture::kind(f);
      const auto& grp = r.subgroups->group();
      const auto& sub = *r.subgroups;
      for (int h = 0; h < sub.size(); ++h) {
        const auto bh = r.green->basis(h);
        for (int k : sub.subgroups_of(h)) {
          const auto bk = r.green->basis(k);
          for (int i = 0; i < bh->rank(); ++i) {
            const auto x = RingElement::basis_element(bh, i);
            const auto ref = oracle::decompose(
                *bk, oracle::restrict_to(kind, grp, oracle::of_basis(*bh, i), sub.members(k)));
            CHECK(as_map(r.green->restrict(x, k)) == ref);
          }
          for (int i = 0; i < bk->rank(); ++i) {
            const auto y = RingElement::basis_element(bk, i);
            const auto ref = oracle::decompose(
                *bh, oracle::induce(grp, sub.members(k), sub.members(h), oracle::of_basis(*bk, i)));
            CHECK(as_map(r.green->induce(y, h)) == ref);
          }
        }
        for (Elem x = 0; x < grp.order(); ++x) {
          const auto bgh = r.green->basis(sub.conjugate(x, h));
          for (int i = 0; i < bh->rank(); ++i) {
            oracle::LabeledSet moved;
            for (const auto& p : oracle::of_basis(*bh, i))
              moved.push_back({oracle::conjugate(grp, x, p.stab), oracle::conjugate(grp, x, p.label)});
            CHECK(as_map(r.green->conjugate(RingElement::basis_element(bh, i), x)) ==
                  oracle::decompose(*bgh, moved));
          }
        }
      }
    }
}

TEST_CASE("restricting to the host is the identity") {
  const auto r = fixture::make("D4", "slice");
  for (int i = 0; i < r.basis->rank(); ++i) {
    const auto x = RingElement::basis_element(r.basis, i);
    CHECK(r.green->restrict(x, r.subgroups->whole()) == x);
  }
}

TEST_CASE("Green functor axioms") {
  for (const auto& [g, f] : std::vector<std::pair<const char*, const char*>>{
           {"C1", "trivial"}, {"S3", "trivial"}, {"D4", "slice"}, {"S3", "conormal"}}) {
    CAPTURE(std::string(g));
    CAPTURE(std::string(f));
    const auto r = fixture::make(g, f);
    const auto report = axiom_report(*r.green, r.subgroups->whole());
    CHECK_MESSAGE(report.ok(), report.str());
    CHECK(report.exhaustive);
  }
}

TEST_CASE("ring element arithmetic and domains") {
  const auto r = fixture::make("S3", "trivial");
  const auto one = RingElement::one(r.basis);
  const auto x = RingElement::basis_element(r.basis, 0);
  CHECK(one * x == x);
  CHECK(x - x == RingElement(r.basis));
  CHECK((x + one) * (x + one) == x * x + x * Rational(2) + one);
  CHECK(-(-x) == x);

  const auto half = x * Rational(1, 2);
  CHECK(half.domain() == ScalarDomain::rationals());
  CHECK_THROWS_AS(half.with_domain(ScalarDomain::local(Prime(2))), Error);
  CHECK(half.with_domain(ScalarDomain::local(Prime(3))).domain() == ScalarDomain::local(Prime(3)));
  try {
    (void)half.with_domain(ScalarDomain::integers());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorNotPLocal);
  }

  const auto other = fixture::make("C3", "trivial");
  try {
    (void)(x + RingElement::one(other.basis));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}
