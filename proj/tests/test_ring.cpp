#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympms/prng.hpp"
#include "sympms/ring.hpp"

using namespace sympms;

namespace {

RingElement re(Ring r, long a, long b = 0) { return RingElement(r, a, b); }

RingElement random_element(Ring ring, SplitMix64& rng, long bound) {
  if (ring == Ring::Z) return RingElement(ring, rng.range(-bound, bound));
  return RingElement(ring, rng.range(-bound, bound), rng.range(-bound, bound));
}

const Ring all_rings[] = {Ring::Z, Ring::Zi, Ring::Zw};

}  // namespace

TEST_CASE("norm on fixed values") {
  CHECK(norm(re(Ring::Z, -7)) == 7);
  CHECK(norm(re(Ring::Zi, 1, 1)) == 2);
  for (Ring r : all_rings) CHECK(norm(RingElement::zero(r)) == 0);
  CHECK(norm(re(Ring::Zw, 1, 1)) == 1);  // 1 + w is a unit
  CHECK(norm(re(Ring::Zw, 2, 1)) == 3);
}

TEST_CASE("div_rem fixed values over Z") {
  auto d = div_rem(re(Ring::Z, 7), re(Ring::Z, 3));
  CHECK(d.quotient == re(Ring::Z, 2));
  CHECK(d.remainder == re(Ring::Z, 1));

  d = div_rem(re(Ring::Z, 7), re(Ring::Z, -3));
  CHECK(d.quotient == re(Ring::Z, -2));
  CHECK(d.remainder == re(Ring::Z, 1));

  // tie between remainders 1 and -1: positive wins
  d = div_rem(re(Ring::Z, 3), re(Ring::Z, 2));
  CHECK(d.remainder == re(Ring::Z, 1));
  d = div_rem(re(Ring::Z, -3), re(Ring::Z, 2));
  CHECK(d.remainder == re(Ring::Z, 1));
}

TEST_CASE("div_rem over Z[i] beats exhaustive search") {
  // (3+2i) / (1+i): remainder norm must be < 2, and minimal among all
  // quotients in a wide window.
  RingElement a = re(Ring::Zi, 3, 2), b = re(Ring::Zi, 1, 1);
  auto d = div_rem(a, b);
  CHECK(a == d.quotient * b + d.remainder);
  CHECK(norm(d.remainder) < norm(b));

  Zint best = norm(b);
  for (long qa = -8; qa <= 8; ++qa)
    for (long qb = -8; qb <= 8; ++qb) {
      RingElement r = a - re(Ring::Zi, qa, qb) * b;
      if (norm(r) < best) best = norm(r);
    }
  CHECK(norm(d.remainder) == best);
}

TEST_CASE("div_rem by zero signals") {
  CHECK_THROWS_AS(div_rem(re(Ring::Z, 1), re(Ring::Z, 0)), DomainError);
}

TEST_CASE("gcd fixed values") {
  CHECK(gcd(re(Ring::Z, 6), re(Ring::Z, 15)) == re(Ring::Z, 3));
  CHECK(gcd(re(Ring::Z, 5), re(Ring::Z, 0)) == re(Ring::Z, 5));
  CHECK(gcd(re(Ring::Z, -5), re(Ring::Z, 0)) == re(Ring::Z, 5));
  // 2 = -i (1+i)^2
  RingElement g = gcd(re(Ring::Zi, 2, 0), re(Ring::Zi, 1, 1));
  CHECK(g == canonical_associate(re(Ring::Zi, 1, 1)).first);
  CHECK(g == re(Ring::Zi, 1, 1));
  CHECK_THROWS_AS(gcd(re(Ring::Z, 0), re(Ring::Z, 0)), DomainError);
}

TEST_CASE("is_unit") {
  CHECK(is_unit(re(Ring::Z, 1)));
  CHECK(is_unit(re(Ring::Z, -1)));
  CHECK(!is_unit(re(Ring::Z, 2)));
  CHECK(is_unit(re(Ring::Zi, 0, 1)));
  CHECK(is_unit(re(Ring::Zw, 1, 1)));
  for (Ring r : all_rings)
    for (const RingElement& u : ring_units(r)) {
      CHECK(is_unit(u));
      CHECK(u * unit_inverse(u) == RingElement::one(r));
    }
}

TEST_CASE("canonical associates are unique and idempotent") {
  SplitMix64 rng(11);
  for (Ring r : all_rings) {
    for (int it = 0; it < 2000; ++it) {
      RingElement x = random_element(r, rng, 30);
      if (x.is_zero()) continue;
      auto [c, u] = canonical_associate(x);
      CHECK(c == u * x);
      CHECK(is_canonical_associate(c));
      int hits = 0;
      for (const RingElement& v : ring_units(r))
        if (is_canonical_associate(v * x)) ++hits;
      CHECK(hits == 1);
    }
  }
  CHECK(canonical_associate(re(Ring::Zi, 0, 2)).first == re(Ring::Zi, 2, 0));
  CHECK(canonical_associate(re(Ring::Zw, 1, -1)).first == re(Ring::Zw, 2, 1));
}

TEST_CASE("norm multiplicativity, 1e4 random pairs per ring") {
  SplitMix64 rng(12);
  for (Ring r : all_rings) {
    for (int it = 0; it < 10000; ++it) {
      RingElement x = random_element(r, rng, 50);
      RingElement y = random_element(r, rng, 50);
      CHECK(norm(x * y) == norm(x) * norm(y));
    }
  }
}

TEST_CASE("euclidean contract, 1e4 random pairs per ring") {
  SplitMix64 rng(13);
  for (Ring r : all_rings) {
    int done = 0;
    while (done < 10000) {
      RingElement a = random_element(r, rng, 200);
      RingElement b = random_element(r, rng, 40);
      if (b.is_zero()) continue;
      auto d = div_rem(a, b);
      CHECK(a == d.quotient * b + d.remainder);
      CHECK(norm(d.remainder) < norm(b));
      ++done;
    }
  }
}

TEST_CASE("gcd contract on random pairs") {
  SplitMix64 rng(14);
  for (Ring r : all_rings) {
    int done = 0;
    while (done < 2000) {
      RingElement a = random_element(r, rng, 60);
      RingElement b = random_element(r, rng, 60);
      if (a.is_zero() && b.is_zero()) continue;
      RingElement g = gcd(a, b);
      CHECK(is_canonical_associate(g));
      RingElement qa = exact_div(a, g), qb = exact_div(b, g);
      CHECK(a == qa * g);
      CHECK(b == qb * g);
      // cofactors are coprime
      if (!qa.is_zero() || !qb.is_zero()) CHECK(is_unit(gcd(qa, qb)));
      ++done;
    }
  }
}

TEST_CASE("field elements normalize once and stay fixed") {
  SplitMix64 rng(15);
  for (Ring r : all_rings) {
    int done = 0;
    while (done < 2000) {
      RingElement n = random_element(r, rng, 40);
      RingElement d = random_element(r, rng, 40);
      if (d.is_zero()) continue;
      FieldElement f(n, d);
      FieldElement again(f.num(), f.den());
      CHECK(f == again);
      CHECK(is_canonical_associate(f.den()));
      ++done;
    }
  }
  FieldElement half(re(Ring::Z, 2), re(Ring::Z, -4));
  CHECK(half.num() == re(Ring::Z, -1));
  CHECK(half.den() == re(Ring::Z, 2));
  CHECK(half.norm_lt_one());
  FieldElement intg(re(Ring::Zi, 2, 2), re(Ring::Zi, 1, 1));
  CHECK(intg.is_integral());
}

TEST_CASE("field arithmetic") {
  FieldElement a(re(Ring::Z, 1), re(Ring::Z, 2));
  FieldElement b(re(Ring::Z, 1), re(Ring::Z, 3));
  CHECK((a + b) == FieldElement(re(Ring::Z, 5), re(Ring::Z, 6)));
  CHECK((a * b) == FieldElement(re(Ring::Z, 1), re(Ring::Z, 6)));
  CHECK((a - a).is_zero());
  CHECK((a / b) == FieldElement(re(Ring::Z, 3), re(Ring::Z, 2)));
  CHECK_THROWS_AS(a / (b - b), DomainError);
}
