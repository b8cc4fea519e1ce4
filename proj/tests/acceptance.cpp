// One PASS/FAIL line per acceptance criterion over the desk-scale matrix.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/error.hpp"
#include "burnside/partial.hpp"
#include "burnside/spectra.hpp"
#include "burnside/units.hpp"

using namespace burnside;

namespace {

const std::vector<std::string> kGroups{"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C6", "A4"};
const std::vector<std::string> kFunctors{"trivial", "slice", "conormal"};
const std::vector<Prime> kPrimes{Prime(2), Prime(3), Prime::infinity()};

struct Cell {
  std::shared_ptr<const SubgroupLattice> subgroups;
  std::shared_ptr<const MonoidFunctor> functor;
  std::shared_ptr<GreenFunctor> green;
  std::shared_ptr<const BasisSystem> basis;
  std::shared_ptr<GhostMaps> maps;
};

Cell make(const std::string& group, const std::string& functor) {
  Cell c;
  c.subgroups = std::make_shared<const SubgroupLattice>(
      std::make_shared<const FiniteGroup>(FiniteGroup::builtin(group)));
  if (functor == "slice") c.functor = slice_functor(c.subgroups);
  else if (functor == "conormal") c.functor = conormal_functor(c.subgroups);
  else c.functor = trivial_functor(c.subgroups);
  c.green = std::make_shared<GreenFunctor>(c.functor);
  c.basis = c.green->basis();
  c.maps = std::make_shared<GhostMaps>(c.basis);
  return c;
}

const Cell& cell(const std::string& group, const std::string& functor) {
  static std::map<std::pair<std::string, std::string>, Cell> cache;
  auto it = cache.find({group, functor});
  if (it == cache.end()) it = cache.emplace(std::pair{group, functor}, make(group, functor)).first;
  return it->second;
}

// Collects the first few failures of one criterion.
struct Outcome {
  long long checks = 0;
  std::vector<std::string> failures;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string where(const std::string& g, const std::string& f) { return g + "/" + f; }
std::string where(const std::string& g, const std::string& f, Prime p) { return g + "/" + f + "/p=" + p.str(); }

void axioms(Outcome& o) {
  for (const auto& g : kGroups)
    for (const auto& f : kFunctors) {
      const Cell& c = cell(g, f);
      const auto fr = check_functor(*c.functor);
      o.expect(fr.ok(), where(g, f) + " functor: " + fr.str());
      const auto ar = axiom_report(*c.green, c.subgroups->whole());
      o.expect(ar.ok(), where(g, f) + ": " + ar.str());
      o.expect(ar.exhaustive, where(g, f) + ": sampled");
      for (const auto& [name, n] : ar.checked) o.checks += n;
    }
}

void sigma_phi(Outcome& o) {
  for (const auto& g : kGroups)
    for (const auto& f : kFunctors) {
      const Cell& c = cell(g, f);
      for (int h = 0; h < c.subgroups->size(); ++h) {
        const auto b = c.green->basis(h);
        const GhostMaps maps(b);
        const Rational order(b->host_order());
        for (int i = 0; i < b->rank(); ++i) {
          const auto x = RingElement::basis_element(b, i);
          o.expect(maps.sigma(maps.phi(x)) == x * order, where(g, f) + " sigma.phi at " + b->label(i));
          auto y = GhostVector::delta(b, i);
          const auto back = maps.phi(maps.sigma(y));
          for (auto& e : y.entries) e *= order;
          o.expect(back == y, where(g, f) + " phi.sigma at " + b->label(i));
        }
      }
    }
}

void fundamental(Outcome& o) {
  for (const auto& g : kGroups)
    for (const auto& f : kFunctors)
      for (Prime p : kPrimes) {
        const Cell& c = cell(g, f);
        const auto rep = verify_fundamental(*c.maps, p);
        o.expect(rep.ok() && rep.psi_kills_phi && rep.triangular && rep.det_matches,
                 where(g, f, p) + ": " + rep.str());
        const auto lrep = verify_lattice_fundamental(*c.maps, p);
        o.expect(lrep.ok(), where(g, f, p) + " lattice: " + lrep.str());
      }
}

void alpha_beta(Outcome& o) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (const auto& g : kGroups)
    for (const auto& f : kFunctors)
      for (Prime p : kPrimes) {
        (void)p;
        const Cell& c = cell(g, f);
        for (int trial = 0; trial < 100; ++trial) {
          GhostVector y{c.basis, std::vector<Rational>(c.basis->rank()), ScalarDomain::integers()};
          for (auto& e : y.entries) e = d(rng);
          o.expect(c.maps->beta(c.maps->alpha(y)) == y, where(g, f) + " beta.alpha");
          o.expect(c.maps->alpha(c.maps->beta(y)) == y, where(g, f) + " alpha.beta");
        }
      }
}

void idempotents(Outcome& o) {
  for (const auto& g : kGroups)
    for (const auto& f : kFunctors) {
      const Cell& c = cell(g, f);
      const auto es = idempotents_rational(*c.maps);
      const int n = c.basis->rank();
      RingElement sum(c.basis, ScalarDomain::rationals());
      for (int i = 0; i < n; ++i) {
        o.expect(es[i] * es[i] == es[i], where(g, f) + " e^2 at " + c.basis->label(i));
        for (int j = i + 1; j < n; ++j)
          o.expect((es[i] * es[j]).is_zero(), where(g, f) + " e e' at " + c.basis->label(i));
        o.expect(c.maps->lattice_phi(es[i]) == GhostVector::delta(c.basis, i),
                 where(g, f) + " alpha.phi(e) at " + c.basis->label(i));
        sum = sum + es[i];
      }
      o.expect(sum == RingElement::one(c.basis), where(g, f) + " sum");
      const PartialSystem all(c.basis, [](int, int) { return true; }, true, "all");
      o.expect(partial_idempotents(all) == es, where(g, f) + " epsilon != e");
    }
}

void conormal_counts(Outcome& o) {
  const std::vector<std::pair<std::string, Prime>> positive{{"C4", Prime(2)}, {"Q8", Prime(2)}, {"C3", Prime(3)}};
  const std::vector<std::pair<std::string, Prime>> negative{{"S3", Prime(2)}, {"S3", Prime(3)}, {"A4", Prime(2)}};
  for (const auto& [g, p] : positive) {
    const Cell& c = cell(g, "conormal");
    const int classes = equivalence_classes(*c.maps, p).count();
    const int conj = static_cast<int>(c.subgroups->class_reps().size());
    o.expect(is_p_group(c.subgroups->group().order(), p), g + " is not a p-group");
    o.expect(classes == conj, g + " p=" + p.str() + ": " + std::to_string(classes) + " != " + std::to_string(conj));
    o.note << " " << g << "@" << p.str() << "=" << classes << "/" << conj;
  }
  for (const auto& [g, p] : negative) {
    const Cell& c = cell(g, "conormal");
    const int classes = equivalence_classes(*c.maps, p).count();
    const int conj = static_cast<int>(c.subgroups->class_reps().size());
    o.expect(classes != conj, g + " p=" + p.str() + ": unexpectedly " + std::to_string(classes));
    o.note << " " << g << "@" << p.str() << "=" << classes << "/" << conj;
  }
}

void slice_connected(Outcome& o) {
  for (const auto& [g, p] : std::vector<std::pair<std::string, Prime>>{
           {"D4", Prime(2)}, {"Q8", Prime(2)}, {"S3", Prime::infinity()}}) {
    const Cell& c = cell(g, "slice");
    const auto local = idempotents_local(*c.maps, p);
    o.expect(local.size() == 1, g + " p=" + p.str() + ": " + std::to_string(local.size()) + " classes");
    o.expect(!local.empty() && local.front().element == RingElement::one(c.basis), g + ": idempotent is not 1");
  }
}

// Pairs (H, U) with |G:H| = 2 and U <= H.
int theta(const SubgroupLattice& s) {
  int n = 0;
  for (int h = 0; h < s.size(); ++h)
    if (2 * s.order(h) == s.order(s.whole())) n += static_cast<int>(s.subgroups_of(h).size());
  return n;
}

void units(Outcome& o) {
  for (const auto& [g, hom] : std::vector<std::pair<std::string, int>>{{"C2", 2}, {"C4", 2}, {"C2xC2", 4}, {"S3", 2}}) {
    const long long order = unit_group(*cell(g, "trivial").maps).order;
    o.expect(order == (1LL << hom), "ordinary " + g + ": " + std::to_string(order) + " != " + std::to_string(1LL << hom));
    o.note << " " << g << ":" << order;
  }
  o.note << ";";
  for (const auto& g : {"C2", "C3", "C4", "C2xC2", "C6"}) {
    const Cell& c = cell(g, "conormal");
    const auto u = unit_group(*c.maps);
    const int t = theta(*c.subgroups);
    const int gen = generated_rank(*c.maps, abelian_conormal_generators(c.basis));
    o.expect(u.order == (1LL << (t + 1)), std::string("conormal ") + g + ": " + std::to_string(u.order) +
                                              " != 2^" + std::to_string(t + 1));
    o.expect(gen == u.rank, std::string("conormal ") + g + ": generators span rank " + std::to_string(gen) +
                                " of " + std::to_string(u.rank));
    o.note << " " << g << ":" << u.order << "(gen 2^" << gen << ")";
  }
}

void sections(Outcome& o) {
  for (const auto& g : {"S3", "D4"}) {
    const Cell& c = cell(g, "slice");
    std::optional<PartialSystem> ps;
    try {
      ps.emplace(section_system(c.basis));
    } catch (const Error& e) {
      o.expect(false, std::string(g) + ": " + e.what());
      continue;
    }
    for (int a = 0; a < ps->rank(); ++a)
      for (int b = 0; b < ps->rank(); ++b) {
        bool closed = true;
        try {
          (void)partial_multiply(*ps, RingElement::basis_element(c.basis, ps->reps()[a]),
                                 RingElement::basis_element(c.basis, ps->reps()[b]));
        } catch (const Error&) {
          closed = false;
        }
        o.expect(closed, std::string(g) + ": product leaves the section ring");
      }
    for (Prime p : {Prime(2), Prime::infinity()}) {
      const auto rep = verify_partial(*ps, *c.maps, p);
      o.expect(rep.ok(), std::string(g) + " p=" + p.str() + ": " + rep.str());
    }
    const auto es = partial_idempotents(*ps);
    RingElement sum(c.basis, ScalarDomain::rationals());
    for (std::size_t i = 0; i < es.size(); ++i) {
      o.expect(es[i] * es[i] == es[i], std::string(g) + ": epsilon^2");
      for (std::size_t j = i + 1; j < es.size(); ++j)
        o.expect((es[i] * es[j]).is_zero(), std::string(g) + ": epsilon products");
      sum = sum + es[i];
    }
    o.expect(sum == RingElement::one(c.basis), std::string(g) + ": epsilon sum");
    o.note << " " << g << ":rank " << ps->rank();
  }
}

void determinism(Outcome& o) {
  cli::VerifyAllOptions opts;
  opts.groups = kGroups;
  std::ostringstream a, b;
  const int ra = cli::verify_all(opts, a);
  const int rb = cli::verify_all(opts, b);
  o.expect(ra == cli::kOk && rb == cli::kOk, "verify_all reported failures");
  o.expect(a.str() == b.str(), "reports differ");
  o.note << " " << a.str().size() << " bytes";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Green functor axioms", axioms},
      {"sigma and phi", sigma_phi},
      {"fundamental theorem", fundamental},
      {"alpha and beta", alpha_beta},
      {"idempotents", idempotents},
      {"conormal idempotents", conormal_counts},
      {"slice connectivity", slice_connected},
      {"unit groups", units},
      {"section systems", sections},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[n].second(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty();
    failed += !ok;
    std::cout << "criterion " << n + 1 << ": " << (ok ? "PASS" : "FAIL") << " " << criteria[n].first << " ("
              << o.checks << " checks, " << std::fixed << std::setprecision(1) << secs << "s)" << o.note.str()
              << "\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 8; ++i) std::cout << "  " << o.failures[i] << "\n";
    if (o.failures.size() > 8) std::cout << "  ... " << o.failures.size() - 8 << " more\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
