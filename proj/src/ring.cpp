#include "burnside/ring.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "burnside/error.hpp"

namespace burnside {

// -------------------------------------------------------------- BasisSystem

BasisSystem::BasisSystem(std::shared_ptr<const MonoidFunctor> functor, int host)
    : functor_(std::move(functor)), host_(host) {
  const SubgroupLattice& sub = functor_->subgroups();
  const FiniteGroup& g = sub.group();
  const MonoidFunctor& m = *functor_;
  offset_.assign(sub.size(), -1);
  int total = 0;
  for (int k : sub.subgroups_of(host_)) {
    offset_[k] = total;
    total += m.monoid(k).size;
  }
  rep_index_.assign(total, -1);
  conjugator_.assign(total, g.identity());

  for (int k : sub.subgroups_of(host_))
    for (int s = 0; s < m.monoid(k).size; ++s) {
      if (rep_index_[flat(k, s)] >= 0) continue;
      // Scanning in (k, s) order makes the first unseen pair the least of its orbit.
      const int idx = static_cast<int>(pairs_.size());
      pairs_.push_back({k, s});
      WeylData w;
      for (Elem x : sub.members(host_)) {
        const int xk = sub.conjugate(x, k);
        const int xs = m.con(k, x, s);
        auto& slot = rep_index_[flat(xk, xs)];
        if (slot < 0) {
          slot = idx;
          conjugator_[flat(xk, xs)] = g.inv(x);
        }
        if (xk == k && xs == s) w.normalizer.push_back(x);
      }
      w.weyl = std::make_shared<const QuotientGroup>(g, w.normalizer, sub.members(k));
      weyl_.push_back(std::move(w));
      if (rep_subgroups_.empty() || rep_subgroups_.back() != k) rep_subgroups_.push_back(k);
    }

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](long long v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  for (char c : g.name() + "/" + m.name()) mix(c);
  mix(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) mix(g.mul(a, b));
  mix(host_);
  for (const auto& p : pairs_) {
    mix(p.k);
    mix(p.s);
    mix(m.monoid(p.k).size);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  signature_ = buf;
}

std::size_t BasisSystem::flat(int k, int s) const {
  if (k < 0 || k >= static_cast<int>(offset_.size()) || offset_[k] < 0)
    throw Error(ErrorCode::NotSubgroup,
                subgroups().label(k) + " is not below " + subgroups().label(host_));
  return static_cast<std::size_t>(offset_[k]) + s;
}

int BasisSystem::index_of(int k, int s) const { return rep_index_[flat(k, s)]; }

Elem BasisSystem::conjugator(int k, int s) const { return conjugator_[flat(k, s)]; }

std::string BasisSystem::label(int i) const {
  const auto& p = pairs_[i];
  return "(" + subgroups().label(p.k) + "," + functor_->label(p.k, p.s) + ")";
}

const SparseVec& BasisSystem::product(int i, int j) const {
  std::call_once(products_once_, [this] {
    const SubgroupLattice& sub = subgroups();
    const MonoidFunctor& m = *functor_;
    const int r = rank();
    products_.assign(static_cast<std::size_t>(r) * r, {});
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        const auto [k, s] = pairs_[a];
        const auto [u, t] = pairs_[b];
        std::map<int, long long> acc;
        for (Elem x : double_coset_reps(sub, host_, k, u)) {
          const int xu = sub.conjugate(x, u);
          const int l = sub.meet(k, xu);
          const int left = m.res(l, k, s);
          const int right = m.res(l, xu, m.con(u, x, t));
          ++acc[index_of(l, m.monoid(l).mul(left, right))];
        }
        products_[static_cast<std::size_t>(a) * r + b].assign(acc.begin(), acc.end());
      }
  });
  return products_[static_cast<std::size_t>(i) * rank() + j];
}

// -------------------------------------------------------------- RingElement

RingElement::RingElement(std::shared_ptr<const BasisSystem> basis, ScalarDomain domain)
    : basis_(std::move(basis)), domain_(domain) {}

RingElement RingElement::basis_element(std::shared_ptr<const BasisSystem> basis, int i) {
  RingElement x(std::move(basis));
  x.set(i, 1);
  return x;
}

RingElement RingElement::one(std::shared_ptr<const BasisSystem> basis) {
  const int h = basis->host();
  const int s = basis->functor().monoid(h).identity;
  const int i = basis->index_of(h, s);
  return basis_element(std::move(basis), i);
}

Rational RingElement::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RingElement::set(int i, const Rational& c) {
  if (i < 0 || i >= basis_->rank())
    throw Error(ErrorCode::BasisMismatch, "index " + std::to_string(i) + " out of range");
  if (!domain_.admits(c))
    throw Error(ErrorCode::DenominatorNotPLocal,
                "coefficient " + to_string(c) + " is not in " + domain_.str());
  if (c == 0)
    coeffs_.erase(i);
  else
    coeffs_[i] = c;
}

void RingElement::add(int i, const Rational& c) { set(i, coeff(i) + c); }

RingElement RingElement::with_domain(ScalarDomain d) const {
  RingElement r(basis_, d);
  for (const auto& [i, c] : coeffs_) r.set(i, c);
  return r;
}

std::vector<Rational> RingElement::dense() const {
  std::vector<Rational> v(basis_->rank());
  for (const auto& [i, c] : coeffs_) v[i] = c;
  return v;
}

std::string RingElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "[" << basis_->label(i) << "]";
  }
  return os.str();
}

void RingElement::check_same_basis(const RingElement& o) const {
  if (basis_ != o.basis_ && basis_->signature() != o.basis_->signature())
    throw Error(ErrorCode::BasisMismatch, "elements live in different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_basis(o);
  RingElement r(basis_, ScalarDomain::join(domain_, o.domain_));
  r.coeffs_ = coeffs_;
  for (const auto& [i, c] : o.coeffs_) r.add(i, c);
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r(basis_, domain_);
  for (const auto& [i, c] : coeffs_) r.coeffs_[i] = -c;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const Rational& c) const {
  RingElement r(basis_, ScalarDomain::rationals());
  for (const auto& [i, v] : coeffs_) r.set(i, v * c);
  return r.with_domain(r.coeffs_.empty() || c.get_den() == 1 ? domain_ : ScalarDomain::rationals());
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_basis(o);
  std::map<int, Rational> acc;
  for (const auto& [i, a] : coeffs_)
    for (const auto& [j, b] : o.coeffs_) {
      const Rational ab = a * b;
      for (const auto& [k, n] : basis_->product(i, j)) acc[k] += ab * static_cast<long>(n);
    }
  RingElement r(basis_, ScalarDomain::join(domain_, o.domain_));
  for (const auto& [k, c] : acc) r.set(k, c);
  return r;
}

bool RingElement::operator==(const RingElement& o) const {
  return basis_->signature() == o.basis_->signature() && coeffs_ == o.coeffs_;
}

// ------------------------------------------------------------- GreenFunctor

GreenFunctor::GreenFunctor(std::shared_ptr<const MonoidFunctor> functor)
    : functor_(std::move(functor)) {
  const SubgroupLattice& sub = functor_->subgroups();
  mobius_ = mobius(sub.size(), [&sub](int a, int b) { return sub.leq(a, b); });
  bases_.resize(sub.size());
}

std::shared_ptr<const BasisSystem> GreenFunctor::basis(int h) const {
  std::lock_guard lock(mutex_);
  auto& b = bases_.at(h);
  if (!b) b = std::make_shared<const BasisSystem>(functor_, h);
  return b;
}

RingElement GreenFunctor::conjugate(const RingElement& x, Elem g) const {
  const BasisSystem& src = x.basis();
  const MonoidFunctor& m = *functor_;
  auto dst = basis(subgroups().conjugate(g, src.host()));
  RingElement r(dst, x.domain());
  for (const auto& [i, c] : x.coeffs()) {
    const auto [u, t] = src.pair(i);
    r.add(dst->index_of(subgroups().conjugate(g, u), m.con(u, g, t)), c);
  }
  return r;
}

RingElement GreenFunctor::restrict(const RingElement& x, int k) const {
  const BasisSystem& src = x.basis();
  const SubgroupLattice& sub = subgroups();
  const MonoidFunctor& m = *functor_;
  if (!sub.leq(k, src.host()))
    throw Error(ErrorCode::NotSubgroup, sub.label(k) + " is not below " + sub.label(src.host()));
  auto dst = basis(k);
  RingElement r(dst, x.domain());
  for (const auto& [i, c] : x.coeffs()) {
    const auto [u, t] = src.pair(i);
    for (Elem h : double_coset_reps(sub, src.host(), k, u)) {
      const int hu = sub.conjugate(h, u);
      const int l = sub.meet(k, hu);
      r.add(dst->index_of(l, m.res(l, hu, m.con(u, h, t))), c);
    }
  }
  return r;
}

RingElement GreenFunctor::induce(const RingElement& y, int h) const {
  const BasisSystem& src = y.basis();
  if (!subgroups().leq(src.host(), h))
    throw Error(ErrorCode::NotSubgroup,
                subgroups().label(src.host()) + " is not below " + subgroups().label(h));
  auto dst = basis(h);
  RingElement r(dst, y.domain());
  for (const auto& [i, c] : y.coeffs()) {
    const auto [l, s] = src.pair(i);
    r.add(dst->index_of(l, s), c);
  }
  return r;
}

// ------------------------------------------------------------- axiom report

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (const auto& [axiom, n] : checked) os << axiom << ": " << n << " checks\n";
  os << (exhaustive ? "exhaustive" : "sampled") << ", " << counterexamples.size()
     << " counterexamples\n";
  for (const auto& c : counterexamples) os << "  " << c << '\n';
  return os.str();
}

namespace {

class Sampler {
 public:
  Sampler(long long budget, AxiomReport& report) : budget_(budget), report_(report) {}
  void begin(long long total) {
    rate_ = total <= budget_ ? 1.0 : static_cast<double>(budget_) / static_cast<double>(total);
    if (rate_ < 1.0) report_.exhaustive = false;
  }
  bool take() { return rate_ >= 1.0 || dist_(rng_) < rate_; }

 private:
  long long budget_;
  AxiomReport& report_;
  double rate_ = 1.0;
  std::mt19937_64 rng_{0x5eedULL};
  std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

}  // namespace

AxiomReport axiom_report(const GreenFunctor& f, int h, long long budget) {
  AxiomReport rep;
  const SubgroupLattice& sub = f.subgroups();
  const FiniteGroup& g = sub.group();
  const int order = g.order();
  Sampler sample(budget, rep);
  constexpr std::size_t kMaxWitnesses = 16;
  auto expect = [&](const char* axiom, bool ok, const std::string& where) {
    ++rep.checked[axiom];
    if (!ok && rep.counterexamples.size() < kMaxWitnesses)
      rep.counterexamples.push_back(std::string(axiom) + " " + where);
  };
  auto rk = [&](int k) { return static_cast<long long>(f.basis(k)->rank()); };
  auto elem = [&](int k, int i) { return RingElement::basis_element(f.basis(k), i); };
  const auto& hs = sub.subgroups_of(h);
  auto name = [&](int k) { return sub.label(k); };

  long long total = 0;
  for (int a : hs) total += rk(a) * order * order;
  sample.begin(total);
  for (int a : hs)
    for (int i = 0; i < rk(a); ++i) {
      const RingElement x = elem(a, i);
      for (Elem y : sub.members(a))
        if (sample.take())
          expect("G.1", f.conjugate(x, y) == x, "c_h != id on " + name(a) + " h=" + std::to_string(y));
      for (Elem r = 0; r < order; ++r) {
        const RingElement rx = f.conjugate(x, r);
        for (Elem s = 0; s < order; ++s)
          if (sample.take())
            expect("G.1", f.conjugate(rx, s) == f.conjugate(x, g.mul(s, r)),
                   name(a) + " g=" + std::to_string(s) + " r=" + std::to_string(r));
      }
    }

  total = 0;
  for (int a : hs)
    for (int k : sub.subgroups_of(a)) total += static_cast<long long>(sub.subgroups_of(k).size()) * rk(a);
  sample.begin(total);
  for (int a : hs)
    for (int i = 0; i < rk(a); ++i) {
      const RingElement x = elem(a, i);
      expect("G.2", f.restrict(x, a) == x, "res_H^H != id on " + name(a));
      for (int k : sub.subgroups_of(a)) {
        const RingElement xk = f.restrict(x, k);
        for (int l : sub.subgroups_of(k))
          if (sample.take())
            expect("G.2", f.restrict(xk, l) == f.restrict(x, l),
                   name(l) + "<=" + name(k) + "<=" + name(a) + " basis " + std::to_string(i));
      }
    }

  total = 0;
  for (int a : hs) total += static_cast<long long>(sub.subgroups_of(a).size()) * order * rk(a);
  sample.begin(total);
  for (int a : hs)
    for (int k : sub.subgroups_of(a))
      for (int i = 0; i < rk(a); ++i) {
        const RingElement x = elem(a, i);
        for (Elem y = 0; y < order; ++y)
          if (sample.take())
            expect("G.3",
                   f.conjugate(f.restrict(x, k), y) ==
                       f.restrict(f.conjugate(x, y), sub.conjugate(y, k)),
                   name(k) + "<=" + name(a) + " g=" + std::to_string(y));
      }

  total = 0;
  for (int a : hs)
    for (int k : sub.subgroups_of(a))
      for (int l : sub.subgroups_of(k)) total += rk(l);
  sample.begin(total);
  for (int a : hs)
    for (int k : sub.subgroups_of(a))
      for (int l : sub.subgroups_of(k))
        for (int i = 0; i < rk(l); ++i)
          if (sample.take()) {
            const RingElement y = elem(l, i);
            expect("G.4", f.induce(f.induce(y, k), a) == f.induce(y, a),
                   name(l) + "<=" + name(k) + "<=" + name(a));
            if (l == a) expect("G.4", f.induce(y, a) == y, "ind_H^H != id on " + name(a));
          }

  total = 0;
  for (int a : hs)
    for (int k : sub.subgroups_of(a)) total += rk(k) * order;
  sample.begin(total);
  for (int a : hs)
    for (int k : sub.subgroups_of(a))
      for (int i = 0; i < rk(k); ++i) {
        const RingElement y = elem(k, i);
        for (Elem x = 0; x < order; ++x)
          if (sample.take())
            expect("G.5", f.conjugate(f.induce(y, a), x) == f.induce(f.conjugate(y, x), sub.conjugate(x, a)),
                   name(k) + "<=" + name(a) + " g=" + std::to_string(x));
      }

  total = 0;
  for (int a : hs)
    for (int u : sub.subgroups_of(a)) total += rk(u) * static_cast<long long>(sub.subgroups_of(a).size());
  sample.begin(total);
  for (int a : hs)
    for (int u : sub.subgroups_of(a))
      for (int i = 0; i < rk(u); ++i) {
        const RingElement y = elem(u, i);
        const RingElement up = f.induce(y, a);
        for (int k : sub.subgroups_of(a)) {
          if (!sample.take()) continue;
          RingElement rhs(f.basis(k));
          for (Elem x : double_coset_reps(sub, a, k, u)) {
            const int xu = sub.conjugate(x, u);
            const int l = sub.meet(k, xu);
            rhs = rhs + f.induce(f.restrict(f.conjugate(y, x), l), k);
          }
          expect("G.6", f.restrict(up, k) == rhs,
                 "K=" + name(k) + " U=" + name(u) + " H=" + name(a) + " basis " + std::to_string(i));
        }
      }

  total = 0;
  for (int a : hs)
    for (int k : sub.subgroups_of(a)) total += rk(a) * rk(k);
  sample.begin(total);
  for (int a : hs)
    for (int k : sub.subgroups_of(a))
      for (int i = 0; i < rk(a); ++i) {
        const RingElement x = elem(a, i);
        const RingElement xk = f.restrict(x, k);
        for (int j = 0; j < rk(k); ++j) {
          if (!sample.take()) continue;
          const RingElement y = elem(k, j);
          const RingElement iy = f.induce(y, a);
          const std::string where = "K=" + name(k) + " H=" + name(a) + " x=" + std::to_string(i) +
                                    " y=" + std::to_string(j);
          expect("G.7", x * iy == f.induce(xk * y, a), where);
          expect("G.7", iy * x == f.induce(y * xk, a), where);
        }
      }

  total = 0;
  for (int a : hs) total += rk(a) * rk(a) * (static_cast<long long>(sub.subgroups_of(a).size()) + order);
  sample.begin(total);
  for (int a : hs) {
    const RingElement one = RingElement::one(f.basis(a));
    for (int k : sub.subgroups_of(a))
      expect("alg", f.restrict(one, k) == RingElement::one(f.basis(k)), "res(1) != 1 at " + name(k));
    for (Elem x = 0; x < order; ++x)
      expect("alg", f.conjugate(one, x) == RingElement::one(f.basis(sub.conjugate(x, a))),
             "c_g(1) != 1 at " + name(a));
    for (int i = 0; i < rk(a); ++i)
      for (int j = 0; j < rk(a); ++j) {
        const RingElement x = elem(a, i), y = elem(a, j), xy = x * y;
        for (int k : sub.subgroups_of(a))
          if (sample.take())
            expect("alg", f.restrict(xy, k) == f.restrict(x, k) * f.restrict(y, k),
                   "res not multiplicative " + name(k) + "<=" + name(a));
        for (Elem z = 0; z < order; ++z)
          if (sample.take())
            expect("alg", f.conjugate(xy, z) == f.conjugate(x, z) * f.conjugate(y, z),
                   "c_g not multiplicative on " + name(a));
      }
  }
  return rep;
}

}  // namespace burnside
