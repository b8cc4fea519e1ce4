#pragma once

#include <gmpxx.h>

#include <string>

namespace burnside {

using Integer = mpz_class;
using Rational = mpq_class;

// A prime or the symbol infinity. Localising at infinity means staying in Z,
// and the "Sylow subgroup at infinity" of a group is the whole group.
class Prime {
 public:
  static Prime infinity() { return Prime(); }
  explicit Prime(int p);

  bool is_infinite() const { return value_ == 0; }
  int value() const { return value_; }
  std::string str() const;
  static Prime parse(const std::string& text);

  // |n|_p for finite p, n itself at infinity.
  long long part_of(long long n) const;
  Integer part_of(const Integer& n) const;
  bool operator==(const Prime&) const = default;

 private:
  Prime() = default;
  int value_ = 0;
};

enum class ScalarKind { Integer, Rational, Local };

// Z, Q or Z_(p). Z_(infinity) is identified with Z.
class ScalarDomain {
 public:
  static ScalarDomain integers() { return ScalarDomain(ScalarKind::Integer, Prime::infinity()); }
  static ScalarDomain rationals() { return ScalarDomain(ScalarKind::Rational, Prime::infinity()); }
  static ScalarDomain local(Prime p);

  ScalarKind kind() const { return kind_; }
  const Prime& prime() const { return prime_; }
  bool admits(const Rational& q) const;
  std::string str() const;
  bool operator==(const ScalarDomain&) const = default;

  // Smallest domain containing both.
  static ScalarDomain join(const ScalarDomain& a, const ScalarDomain& b);

 private:
  ScalarDomain(ScalarKind kind, Prime p) : kind_(kind), prime_(p) {}
  ScalarKind kind_;
  Prime prime_;
};

bool is_prime(long long n);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& text);
// num/den in lowest terms.
Rational ratio(long num, long den);

// Residue of q modulo m; the denominator of q must be a unit mod m.
Integer residue(const Rational& q, const Integer& m);

}  // namespace burnside
