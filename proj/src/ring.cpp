#include "sympms/ring.hpp"

#include <array>
#include <cstdlib>

namespace sympms {

const char* ring_tag(Ring r) {
  switch (r) {
    case Ring::Z:
      return "Z";
    case Ring::Zi:
      return "Z[i]";
    case Ring::Zw:
      return "Z[w]";
  }
  return "Z";
}

Ring ring_from_tag(const std::string& tag) {
  if (tag == "Z") return Ring::Z;
  if (tag == "Z[i]") return Ring::Zi;
  if (tag == "Z[w]") return Ring::Zw;
  throw DomainError("unknown-ring", "ring tag must be Z, Z[i] or Z[w], got " + tag);
}

RingElement::RingElement(Ring ring, Zint a, Zint b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  if (ring_ == Ring::Z && b_ != 0)
    throw DomainError("malformed-element", "rational integers have no theta coefficient");
}

namespace {

void check_same_ring(Ring a, Ring b) {
  if (a != b) throw DomainError("ring-mismatch", "mixed-ring arithmetic");
}

}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, a_ + o.a_, b_ + o.b_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, a_ - o.a_, b_ - o.b_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  switch (ring_) {
    case Ring::Z:
      return RingElement(ring_, a_ * o.a_);
    case Ring::Zi:
      // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
      return RingElement(ring_, a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    case Ring::Zw:
      // w^2 = -1 - w
      return RingElement(ring_, a_ * o.a_ - b_ * o.b_,
                         a_ * o.b_ + b_ * o.a_ - b_ * o.b_);
  }
  return *this;
}

RingElement RingElement::conj() const {
  switch (ring_) {
    case Ring::Z:
      return *this;
    case Ring::Zi:
      return RingElement(ring_, a_, -b_);
    case Ring::Zw:
      // conj(a + bw) = a + b*w^2 = (a - b) - b*w
      return RingElement(ring_, a_ - b_, -b_);
  }
  return *this;
}

std::string RingElement::str() const {
  if (ring_ == Ring::Z) return a_.get_str();
  const char* theta = ring_ == Ring::Zi ? "i" : "w";
  return a_.get_str() + (b_ >= 0 ? "+" : "") + b_.get_str() + theta;
}

Zint norm(const RingElement& x) {
  switch (x.ring()) {
    case Ring::Z:
      return abs(x.a());
    case Ring::Zi:
      return x.a() * x.a() + x.b() * x.b();
    case Ring::Zw:
      return x.a() * x.a() - x.a() * x.b() + x.b() * x.b();
  }
  return 0;
}

bool is_unit(const RingElement& x) { return norm(x) == 1; }

RingElement unit_inverse(const RingElement& u) {
  if (!is_unit(u)) throw DomainError("not-a-unit", "inverse requested of " + u.str());
  return u.conj();
}

std::vector<RingElement> ring_units(Ring ring) {
  switch (ring) {
    case Ring::Z:
      return {RingElement(ring, 1), RingElement(ring, -1)};
    case Ring::Zi:
      return {RingElement(ring, 1, 0), RingElement(ring, -1, 0),
              RingElement(ring, 0, 1), RingElement(ring, 0, -1)};
    case Ring::Zw:
      return {RingElement(ring, 1, 0),  RingElement(ring, -1, 0),
              RingElement(ring, 0, 1),  RingElement(ring, 0, -1),
              RingElement(ring, 1, 1),  RingElement(ring, -1, -1)};
  }
  return {};
}

bool key_less(const RingElement& x, const RingElement& y) {
  auto key_cmp = [](const Zint& p, const Zint& q) -> int {
    Zint ap = abs(p), aq = abs(q);
    if (ap != aq) return ap < aq ? -1 : 1;
    bool np = p < 0, nq = q < 0;
    if (np != nq) return np ? 1 : -1;  // positive first
    return 0;
  };
  int c = key_cmp(x.a(), y.a());
  if (c != 0) return c < 0;
  return key_cmp(x.b(), y.b()) < 0;
}

namespace {

// floor(p / n) for n > 0.
Zint floor_div(const Zint& p, const Zint& n) {
  Zint q;
  mpz_fdiv_q(q.get_mpz_t(), p.get_mpz_t(), n.get_mpz_t());
  return q;
}

}  // namespace

DivRem div_rem(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw DomainError("ring-mismatch", "div_rem across different rings");
  if (b.is_zero()) throw DomainError("division-by-zero", "div_rem by zero");

  const Ring ring = a.ring();
  const Zint nb = norm(b);

  // Exact quotient in K is (p + q*theta) / N.
  Zint p, q, N;
  if (ring == Ring::Z) {
    p = a.a();
    N = b.a() < 0 ? Zint(-b.a()) : b.a();
    q = 0;
    if (b.a() < 0) p = -p;
  } else {
    RingElement t = a * b.conj();
    p = t.a();
    q = t.b();
    N = nb;
  }

  const Zint qa0 = floor_div(p, N);
  const Zint qb0 = floor_div(q, N);

  bool have = false;
  RingElement best_q(ring, 0), best_r(ring, 0);
  Zint best_norm;
  for (int da = -1; da <= 2; ++da) {
    for (int db = -1; db <= 2; ++db) {
      if (ring == Ring::Z && db != 0) continue;
      RingElement cand =
          ring == Ring::Z ? RingElement(ring, qa0 + da)
                          : RingElement(ring, qa0 + da, qb0 + db);
      RingElement r = a - cand * b;
      Zint nr = norm(r);
      if (nr >= nb) continue;
      if (!have || nr < best_norm || (nr == best_norm && key_less(r, best_r))) {
        have = true;
        best_q = cand;
        best_r = r;
        best_norm = nr;
      }
    }
  }
  if (!have)
    throw std::logic_error("div_rem: no remainder below divisor norm found");
  return {best_q, best_r};
}

std::pair<RingElement, RingElement> canonical_associate(const RingElement& x) {
  const Ring ring = x.ring();
  if (x.is_zero())
    return {x, RingElement::one(ring)};
  auto in_cone = [ring](const RingElement& y) {
    switch (ring) {
      case Ring::Z:
        return y.a() > 0;
      case Ring::Zi:
        return y.a() > 0 && y.b() >= 0;
      case Ring::Zw:
        return y.b() >= 0 && y.a() > y.b();
    }
    return false;
  };
  for (const RingElement& u : ring_units(ring)) {
    RingElement y = u * x;
    if (in_cone(y)) return {y, u};
  }
  throw std::logic_error("canonical_associate: no associate in the fundamental cone");
}

bool is_canonical_associate(const RingElement& x) {
  return canonical_associate(x).first == x;
}

RingElement gcd(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw DomainError("ring-mismatch", "gcd across different rings");
  if (a.is_zero() && b.is_zero())
    throw DomainError("gcd-both-zero", "gcd(0, 0) is undefined");
  RingElement x = a, y = b;
  while (!y.is_zero()) {
    RingElement r = div_rem(x, y).remainder;
    x = y;
    y = r;
  }
  return canonical_associate(x).first;
}

std::optional<RingElement> try_exact_div(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) throw DomainError("division-by-zero", "exact division by zero");
  DivRem d = div_rem(a, b);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotient;
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  auto q = try_exact_div(a, b);
  if (!q)
    throw DomainError("inexact-division", b.str() + " does not divide " + a.str());
  return *q;
}

FieldElement::FieldElement(RingElement num, RingElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.ring() != den_.ring())
    throw DomainError("ring-mismatch", "fraction across different rings");
  if (den_.is_zero()) throw DomainError("division-by-zero", "fraction with zero denominator");
  normalize();
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = RingElement::one(num_.ring());
    return;
  }
  RingElement g = gcd(num_, den_);
  num_ = exact_div(num_, g);
  den_ = exact_div(den_, g);
  auto [canon, u] = canonical_associate(den_);
  den_ = canon;
  num_ = u * num_;
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  if (o.is_zero()) throw DomainError("division-by-zero", "field division by zero");
  return FieldElement(num_ * o.den_, den_ * o.num_);
}

std::string FieldElement::str() const {
  if (is_integral()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace sympms
