#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sympms/building.hpp"
#include "sympms/prng.hpp"
#include "sympms/subdivision.hpp"

using namespace sympms;

namespace {

RingElement re(Ring r, long a, long b = 0) { return RingElement(r, a, b); }

RVec zvec(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(Ring::Z, x);
  return v;
}

const SymplecticSpace kS2{2, Ring::Z};
const SymplecticSpace kS3{3, Ring::Z};

SymplecticSymbol identity_symbol(const SymplecticSpace& s, int sign = 1) {
  return SymplecticSymbol(s, rmatrix_identity(s.ring, s.dim()), sign);
}

SymplecticSymbol example_symbol() {
  return SymplecticSymbol(
      kS2,
      rmatrix_from_cols(Ring::Z, {zvec({1, 0, 0, 0}), zvec({0, 1, 0, 0}),
                                  zvec({0, 0, 1, 0}), zvec({1, 0, 0, 3})}),
      1);
}

RingElement random_element(Ring ring, SplitMix64& rng, long bound) {
  if (ring == Ring::Z) return RingElement(ring, rng.range(-bound, bound));
  return RingElement(ring, rng.range(-bound, bound), rng.range(-bound, bound));
}

RMatrix random_sp(const SymplecticSpace& s, SplitMix64& rng, int words) {
  RMatrix g = rmatrix_identity(s.ring, s.dim());
  for (int w = 0; w < words; ++w) {
    switch (rng.below(s.n >= 2 ? 4 : 2)) {
      case 0: {
        int idx = static_cast<int>(rng.range(1, s.n)) * (rng.coin() ? 1 : -1);
        g = gen_t1(s, idx, random_element(s.ring, rng, 1)) * g;
        break;
      }
      case 1:
        g = gen_p1(s, static_cast<int>(rng.range(1, s.n))) * g;
        break;
      case 2: {
        int i = static_cast<int>(rng.range(1, s.n)), k = i;
        while (k == i) k = static_cast<int>(rng.range(1, s.n));
        g = gen_t2(s, i, k, random_element(s.ring, rng, 1)) * g;
        break;
      }
      case 3: {
        int i = static_cast<int>(rng.range(1, s.n)), k = i;
        while (k == i) k = static_cast<int>(rng.range(1, s.n));
        g = gen_t3(s, i, k, random_element(s.ring, rng, 1)) * g;
        break;
      }
    }
  }
  return g;
}

SymplecticSymbol random_symbol(const SymplecticSpace& s, SplitMix64& rng,
                               bool deepen = true) {
  RMatrix g = random_sp(s, rng, 6);
  if (deepen)
    for (int i = 1; i <= s.n; ++i) {
      if (!rng.coin()) continue;
      RingElement c = random_element(s.ring, rng, 2);
      RingElement d = re(s.ring, rng.range(2, 5));
      if (!is_unit(gcd(c.is_zero() ? d : c, d))) c = RingElement::one(s.ring);
      int p = index_to_pos(s, i), q = s.dim() - 1 - p;
      g.set_col(q, vec_add(vec_scale(c, g.col(p)), vec_scale(d, g.col(q))));
    }
  return normalize(SymplecticSymbol(s, g, rng.coin() ? 1 : -1));
}

// x with D_x exactly the prescribed index set: coefficients of the column
// combination vanish exactly on bar(D)
RVec x_with_dx(const SymplecticSymbol& s, const std::vector<int>& target,
               SplitMix64& rng) {
  const SymplecticSpace& sp = s.space();
  for (;;) {
    RVec x(sp.dim(), RingElement::zero(sp.ring));
    bool nonzero = false;
    for (int idx : all_indices(sp)) {
      bool vanish = false;
      for (int t : target)
        if (idx == bar(t)) vanish = true;
      if (vanish) continue;
      RingElement c = random_element(sp.ring, rng, 3);
      if (c.is_zero()) c = RingElement::one(sp.ring);
      x = vec_add(x, vec_scale(c, s.column(idx)));
      nonzero = true;
    }
    if (!nonzero || vec_is_zero(x)) continue;
    x = make_primitive(x).vector;
    // composition can produce accidental extra vanishing; retry if so
    SubdivisionData data = subdivision(s, x);
    std::vector<int> want = target;
    std::sort(want.begin(), want.end());
    std::vector<int> got = data.d_x;
    std::sort(got.begin(), got.end());
    if (want == got) return x;
  }
}

}  // namespace

TEST_CASE("find_candidate on the depth-3 example") {
  SymplecticSymbol s = example_symbol();
  Candidate c = find_candidate(s);
  CHECK(c.x == zvec({0, 0, 0, 1}));  // e_1bar
  REQUIRE(c.witness_indices.size() == 4);
  CHECK(c.witness_indices[0] == 1);
  CHECK(c.witness_indices[1] == 0);
  CHECK(c.witness_indices[2] == 0);
  CHECK(c.witness_indices[3] == 1);
  for (const auto& w : c.witness_indices) CHECK(w < 3);
  for (const auto& q : c.coefficients) CHECK(q.norm_lt_one());
}

TEST_CASE("find_candidate requires index > 1") {
  CHECK_THROWS_AS(find_candidate(identity_symbol(kS2)), DomainError);
}

TEST_CASE("find_candidate in rank 2") {
  SymplecticSpace s1{1, Ring::Z};
  SymplecticSymbol s(
      s1, rmatrix_from_cols(Ring::Z, {zvec({1, 0}), zvec({2, 5})}), 1);
  Candidate c = find_candidate(s);
  CHECK(is_primitive(c.x));
  CHECK(c.witness_indices[0] < 5);
  CHECK(c.witness_indices[1] < 5);
}

TEST_CASE("subdivision fixed values") {
  SymplecticSymbol id = identity_symbol(kS2);
  RVec x = zvec({1, 1, 1, 1});
  SubdivisionData data = subdivision(id, x);
  CHECK(data.d_x.empty());
  CHECK(data.point(1, 2) == zvec({1, -1, 0, 0}));  // e1 - e2

  SubdivisionData d2 = subdivision(id, zvec({1, 0, 0, 0}));
  CHECK(d2.d_x == std::vector<int>{1, 2, -2});

  CHECK_THROWS_AS(subdivision(id, zvec({0, 0, 0, 0})), DomainError);
}

TEST_CASE("point antisymmetry and orthogonality invariants") {
  SplitMix64 rng(61);
  for (const SymplecticSpace& sp : {kS2, kS3}) {
    for (int it = 0; it < 40; ++it) {
      SymplecticSymbol s = random_symbol(sp, rng);
      RVec x(sp.dim(), RingElement::zero(sp.ring));
      for (auto& e : x) e = random_element(sp.ring, rng, 4);
      if (vec_is_zero(x)) continue;
      SubdivisionData data = subdivision(s, x);
      for (int i : all_indices(sp))
        for (int j : all_indices(sp)) {
          if (!data.defined(i, j)) continue;
          CHECK(data.point(i, j) == vec_scale(re(Ring::Z, -1), data.point(j, i)));
          CHECK(sym_pair(sp, x, data.point(i, j)).is_zero());
          CHECK(sym_pair(sp, s.column(i), data.point(i, j)).is_zero());
          for (int k : all_indices(sp)) {
            if (k == i || k == bar(i) || k == j || k == bar(j)) continue;
            if (!data.defined(i, k)) continue;
            CHECK(sym_pair(sp, data.point(i, j), data.point(i, k)).is_zero());
          }
        }
    }
  }
}

TEST_CASE("make_m_i fixed values") {
  SymplecticSymbol id = identity_symbol(kS2);
  SubdivisionData data = subdivision(id, zvec({1, 1, 1, 1}));
  SymplecticSymbol m1 = make_m_i(data, 1);
  CHECK(m1.column(1) == zvec({1, 0, 0, 0}));
  CHECK(m1.column(2) == zvec({1, -1, 0, 0}));
  CHECK(m1.column(-2) == zvec({1, 0, 1, 0}));  // (-1,0,-1,0) normalized
  CHECK(m1.column(-1) == zvec({1, 1, 1, 1}));
  CHECK(m1.sign() == 1);
  CHECK(!m1.is_zero());

  CHECK_THROWS_AS(make_m_i(subdivision(id, zvec({1, 0, 0, 0})), 1), DomainError);
}

TEST_CASE("make_m_i in rank 2 replaces one column") {
  SymplecticSpace s1{1, Ring::Z};
  SymplecticSymbol s(
      s1, rmatrix_from_cols(Ring::Z, {zvec({1, 0}), zvec({2, 5})}), 1);
  SubdivisionData data = subdivision(s, zvec({1, 2}));
  REQUIRE(!data.in_d_x(1));
  SymplecticSymbol m1 = make_m_i(data, 1);
  CHECK(m1.column(1) == zvec({1, 0}));
  CHECK(m1.column(-1) == zvec({1, 2}));
}

TEST_CASE("star decomposition: each base chamber appears in exactly one term") {
  SplitMix64 rng(68);
  for (const SymplecticSpace& sp : {kS2, kS3}) {
    for (int it = 0; it < 10; ++it) {
      SymplecticSymbol s = random_symbol(sp, rng);
      RVec x = x_with_dx(s, {}, rng);  // generic
      auto rel = theorem1_relation_full(s, x);
      std::vector<ChamberChain> term_chains;
      for (const auto& t : rel.relation.terms) term_chains.push_back(expand(t));
      ChamberChain base_chain = expand(s);
      for (const auto& [key, entry] : base_chain.entries()) {
        int hits = 0;
        long long coeff = 0;
        for (const auto& tc : term_chains) {
          auto it2 = tc.entries().find(key);
          if (it2 == tc.entries().end()) continue;
          ++hits;
          coeff = it2->second.second;
        }
        CHECK(hits == 1);
        CHECK(coeff == entry.second);
      }
    }
  }
}

TEST_CASE("make_m_i satisfies the isotropy condition on random inputs") {
  // each input exercises make_m_i for every index outside D_x, so this
  // gives roughly a thousand constructions
  SplitMix64 rng(62);
  int done = 0;
  while (done < 250) {
    const SymplecticSpace& sp = done % 2 == 0 ? kS2 : kS3;
    SymplecticSymbol s = random_symbol(sp, rng);
    RVec x(sp.dim(), RingElement::zero(sp.ring));
    for (auto& e : x) e = random_element(sp.ring, rng, 4);
    if (vec_is_zero(x)) continue;
    SubdivisionData data = subdivision(s, x);
    for (int idx : all_indices(sp)) {
      if (data.in_d_x(idx)) continue;
      SymplecticSymbol term = make_m_i(data, idx);  // constructor checks isotropy
      CHECK(isotropy_condition(sp, term.matrix()));
    }
    ++done;
  }
}

TEST_CASE("theorem1 term counts") {
  SplitMix64 rng(63);
  // generic x: 2n terms
  SymplecticSymbol s2 = random_symbol(kS2, rng);
  RVec x2 = x_with_dx(s2, {}, rng);
  auto r2 = theorem1_relation_full(s2, x2);
  CHECK(r2.relation.terms.size() == 4);

  SymplecticSymbol s3 = random_symbol(kS3, rng);
  RVec x3 = x_with_dx(s3, {}, rng);
  auto r3 = theorem1_relation_full(s3, x3);
  CHECK(r3.relation.terms.size() == 6);

  // twelve distinct constructed points among the n = 3 terms
  SubdivisionData data = subdivision(s3, x3);
  std::set<std::string> lines;
  for (int i : all_indices(kS3))
    for (int j : all_indices(kS3)) {
      if (i >= j || !data.defined(i, j)) continue;
      RVec p = make_primitive(data.point(i, j)).vector;
      for (const auto& e : p) {
        if (e.is_zero()) continue;
        p = vec_scale(canonical_associate(e).second, p);
        break;
      }
      std::string key;
      for (const auto& e : p) key += e.a().get_str() + "," + e.b().get_str() + ";";
      lines.insert(key);
    }
  CHECK(lines.size() == 12);
}

TEST_CASE("theorem1 with x equal to a column gives a single term") {
  SymplecticSymbol id = identity_symbol(kS2);
  RVec x = id.column(1);
  auto r = theorem1_relation_full(id, x);
  REQUIRE(r.term_indices.size() == 1);
  CHECK(r.term_indices[0] == -1);  // only 1bar survives
  CHECK(chains_equal(expand_relation(r.relation), expand(id)));
}

TEST_CASE("theorem1 chain equality across D_x strata") {
  SplitMix64 rng(64);
  for (const SymplecticSpace& sp : {kS2, kS3}) {
    // strata: #D_x = 0..n isotropic, plus one bar-closed case
    std::vector<std::vector<int>> strata = {{}};
    for (int k = 1; k <= sp.n; ++k) {
      std::vector<int> d;
      for (int i = 1; i <= k; ++i) d.push_back(i);
      strata.push_back(d);
    }
    strata.push_back({1, -1});  // bar-closed part
    if (sp.n == 3) strata.push_back({1, -1, 2});
    for (const auto& target : strata) {
      for (int it = 0; it < 12; ++it) {
        SymplecticSymbol s = random_symbol(sp, rng);
        RVec x = x_with_dx(s, target, rng);
        SignedRelation rel = theorem1_relation(s, x);
        CHECK(chains_equal(expand_relation(rel), expand(s)));
      }
    }
  }
}

TEST_CASE("theorem1 chain equality with raw random x") {
  SplitMix64 rng(65);
  int done = 0;
  while (done < 60) {
    const SymplecticSpace& sp = done % 2 == 0 ? kS2 : kS3;
    SymplecticSymbol s = random_symbol(sp, rng);
    RVec x(sp.dim(), RingElement::zero(sp.ring));
    for (auto& e : x) e = random_element(sp.ring, rng, 5);
    if (vec_is_zero(x)) continue;
    x = make_primitive(x).vector;
    SignedRelation rel = theorem1_relation(s, x);
    CHECK(chains_equal(expand_relation(rel), expand(s)));
    ++done;
  }
}

TEST_CASE("collinearity identity") {
  SplitMix64 rng(66);
  // n = 3, identity base, x = e1bar: D_x covers five of the six indices, so
  // the admissible-triple set is empty and the claim holds vacuously
  SymplecticSymbol id3 = identity_symbol(kS3);
  RVec e1b = zvec({0, 0, 0, 0, 0, 1});
  SubdivisionData data = subdivision(id3, e1b);
  CHECK(data.d_x.size() == 5);
  int checked = 0;
  for (int i : all_indices(kS3))
    for (int j : all_indices(kS3))
      for (int k : all_indices(kS3)) {
        if (i >= j || j >= k) continue;
        if (i == bar(j) || j == bar(k) || i == bar(k)) continue;
        int inside = (data.in_d_x(i) ? 1 : 0) + (data.in_d_x(j) ? 1 : 0) +
                     (data.in_d_x(k) ? 1 : 0);
        if (inside > 1) continue;
        CHECK(check_collinearity(data, i, j, k));
        ++checked;
      }
  CHECK(checked == 0);

  // a non-vacuous hand case: x = e1 + e2 has D_x = {1, 2, 3, 3bar}, leaving
  // the non-antipodal pair {2bar, 1bar} outside
  SubdivisionData data2 = subdivision(id3, zvec({1, 1, 0, 0, 0, 0}));
  int checked2 = 0;
  for (int i : all_indices(kS3))
    for (int j : all_indices(kS3))
      for (int k : all_indices(kS3)) {
        if (i >= j || j >= k) continue;
        if (i == bar(j) || j == bar(k) || i == bar(k)) continue;
        int inside = (data2.in_d_x(i) ? 1 : 0) + (data2.in_d_x(j) ? 1 : 0) +
                     (data2.in_d_x(k) ? 1 : 0);
        if (inside > 1) continue;
        CHECK(check_collinearity(data2, i, j, k));
        ++checked2;
      }
  CHECK(checked2 > 0);

  // random triples on random data
  int done = 0;
  while (done < 500) {
    SymplecticSymbol s = random_symbol(kS3, rng);
    RVec x(6, RingElement::zero(Ring::Z));
    for (auto& e : x) e = random_element(Ring::Z, rng, 4);
    if (vec_is_zero(x)) continue;
    SubdivisionData d = subdivision(s, x);
    std::vector<int> idx = all_indices(kS3);
    int i = idx[rng.below(6)], j = idx[rng.below(6)], k = idx[rng.below(6)];
    if (i == j || j == k || i == k) continue;
    if (i == bar(j) || j == bar(k) || i == bar(k)) continue;
    int inside = (d.in_d_x(i) ? 1 : 0) + (d.in_d_x(j) ? 1 : 0) + (d.in_d_x(k) ? 1 : 0);
    if (inside > 1) continue;
    CHECK(check_collinearity(d, i, j, k));
    ++done;
  }
}

TEST_CASE("content stripping scales witness indices by the content norm") {
  // i(x, v_1, ..., v^_i, ...) is multilinear in the replaced column, so
  // dividing x by its content divides every witness index by norm(content)
  SplitMix64 rng(69);
  int done = 0;
  while (done < 200) {
    SymplecticSymbol s = random_symbol(kS2, rng);
    RVec x(4, RingElement::zero(Ring::Z));
    for (auto& e : x) e = random_element(Ring::Z, rng, 4);
    if (vec_is_zero(x)) continue;
    RVec xp = make_primitive(x).vector;
    RingElement c = re(Ring::Z, rng.range(2, 5));
    RVec scaled = vec_scale(c, xp);
    for (int i = 0; i < 4; ++i) {
      RMatrix a = s.matrix(), b = s.matrix();
      a.set_col(i, xp);
      b.set_col(i, scaled);
      CHECK(norm(det(b)) == norm(c) * norm(det(a)));
    }
    ++done;
  }
}

TEST_CASE("candidate pairings stay below the depth") {
  SplitMix64 rng(67);
  int done = 0;
  while (done < 100) {
    const SymplecticSpace& sp = done % 2 == 0 ? kS2 : kS3;
    SymplecticSymbol s = random_symbol(sp, rng);
    Zint dep = depth(sp, s.matrix());
    if (dep <= 1) continue;
    Candidate c = find_candidate(s);
    SubdivisionData data = subdivision(s, c.x);
    for (int i : all_indices(sp)) {
      if (data.in_d_x(i)) continue;
      CHECK(norm(sym_pair(sp, c.x, s.column(i))) < dep);
    }
    ++done;
  }
}
