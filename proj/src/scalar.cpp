#include "burnside/scalar.hpp"

#include "burnside/error.hpp"

namespace burnside {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(int p) : value_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "not a prime: " + std::to_string(p));
}

std::string Prime::str() const { return is_infinite() ? "inf" : std::to_string(value_); }

Prime Prime::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  try {
    size_t used = 0;
    int p = std::stoi(text, &used);
    if (used == text.size()) return Prime(p);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::InvalidInput, "expected a prime or 'inf', got '" + text + "'");
}

long long Prime::part_of(long long n) const {
  if (is_infinite()) return n;
  long long r = 1;
  while (n != 0 && n % value_ == 0) {
    n /= value_;
    r *= value_;
  }
  return r;
}

Integer Prime::part_of(const Integer& n) const {
  if (is_infinite()) return abs(n);
  Integer m = abs(n), r = 1;
  while (m != 0 && mpz_divisible_ui_p(m.get_mpz_t(), value_)) {
    m /= value_;
    r *= value_;
  }
  return r;
}

ScalarDomain ScalarDomain::local(Prime p) {
  if (p.is_infinite()) return integers();
  return ScalarDomain(ScalarKind::Local, p);
}

bool ScalarDomain::admits(const Rational& q) const {
  switch (kind_) {
    case ScalarKind::Rational: return true;
    case ScalarKind::Integer: return q.get_den() == 1;
    case ScalarKind::Local: return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), prime_.value());
  }
  return false;
}

std::string ScalarDomain::str() const {
  switch (kind_) {
    case ScalarKind::Rational: return "Q";
    case ScalarKind::Integer: return "Z";
    case ScalarKind::Local: return "Z_(" + prime_.str() + ")";
  }
  return "?";
}

ScalarDomain ScalarDomain::join(const ScalarDomain& a, const ScalarDomain& b) {
  if (a == b) return a;
  if (a.kind_ == ScalarKind::Integer) return b;
  if (b.kind_ == ScalarKind::Integer) return a;
  return rationals();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer residue(const Rational& q, const Integer& m) {
  if (m == 1) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::DenominatorNotPLocal,
                "denominator of " + to_string(q) + " is not a unit modulo " + m.get_str());
  Integer r = (q.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace burnside
