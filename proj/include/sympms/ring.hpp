#pragma once

// Euclidean rings of integers with multiplicative norm: Z, Z[i], Z[w]
// (w = e^{2 pi i / 3}).  Elements are coefficient pairs a + b*theta with
// theta = 0, i, w respectively.  All arithmetic is exact (GMP integers).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympms {

using Zint = mpz_class;

// Domain error carrying a stable machine-readable code; the CLI maps these
// to exit status 2 with {"error": code, "detail": ...}.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::domain_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

enum class Ring { Z, Zi, Zw };

const char* ring_tag(Ring r);
Ring ring_from_tag(const std::string& tag);

class RingElement {
 public:
  RingElement() : ring_(Ring::Z), a_(0), b_(0) {}
  RingElement(Ring ring, Zint a) : ring_(ring), a_(std::move(a)), b_(0) {}
  RingElement(Ring ring, Zint a, Zint b);

  static RingElement zero(Ring ring) { return RingElement(ring, 0); }
  static RingElement one(Ring ring) { return RingElement(ring, 1); }

  Ring ring() const { return ring_; }
  const Zint& a() const { return a_; }
  const Zint& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  bool operator==(const RingElement& o) const {
    return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  RingElement operator-() const { return RingElement(ring_, -a_, -b_); }
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

  RingElement conj() const;

  std::string str() const;

 private:
  Ring ring_;
  Zint a_, b_;
};

using RVec = std::vector<RingElement>;

// Multiplicative norm into the non-negative integers.
Zint norm(const RingElement& x);

bool is_unit(const RingElement& x);

// Inverse of a unit (conjugate, since u * conj(u) = norm(u) = 1).
RingElement unit_inverse(const RingElement& u);

// All units of the ring (2, 4 or 6 of them).
std::vector<RingElement> ring_units(Ring ring);

struct DivRem {
  RingElement quotient;
  RingElement remainder;
};

// Euclidean division: a = q*b + r with norm(r) < norm(b).  Among remainders
// of minimal norm the one with lexicographically smallest (|a|, sign, |b|,
// sign) coefficient key is returned, so results are deterministic.
DivRem div_rem(const RingElement& a, const RingElement& b);

// Greatest common divisor in canonical associate form.
RingElement gcd(const RingElement& a, const RingElement& b);

// Exact quotient a / b; empty when b does not divide a.
std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b);

// Exact quotient; throws DomainError("inexact-division") if b does not divide a.
RingElement exact_div(const RingElement& a, const RingElement& b);

// The canonical associate of x and the unit u with canonical = u * x.
// Cones: Z -> non-negative; Z[i] -> {a > 0, b >= 0}; Z[w] -> {b >= 0, a > b}.
std::pair<RingElement, RingElement> canonical_associate(const RingElement& x);

bool is_canonical_associate(const RingElement& x);

// Deterministic tie-break order on coefficient pairs: compare by
// (|a|, sign a, |b|, sign b) with positive before negative.
bool key_less(const RingElement& x, const RingElement& y);

// Fraction-field element, kept in lowest terms with canonical denominator.
class FieldElement {
 public:
  explicit FieldElement(Ring ring)
      : num_(RingElement::zero(ring)), den_(RingElement::one(ring)) {}
  FieldElement(RingElement num, RingElement den);

  static FieldElement integral(RingElement x) {
    return FieldElement(std::move(x), RingElement::one(x.ring()));
  }

  Ring ring() const { return num_.ring(); }
  const RingElement& num() const { return num_; }
  const RingElement& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_.is_one(); }

  bool operator==(const FieldElement& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;

  Zint norm_num() const { return norm(num_); }
  Zint norm_den() const { return norm(den_); }

  // norm extends multiplicatively to K; compares ||x|| against 1 exactly.
  bool norm_lt_one() const { return norm_num() < norm_den(); }

  std::string str() const;

 private:
  void normalize();
  RingElement num_, den_;
};

}  // namespace sympms
