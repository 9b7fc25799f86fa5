#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympms/io.hpp"

using namespace sympms;

namespace {

RingElement re(Ring r, long a, long b = 0) { return RingElement(r, a, b); }

}  // namespace

TEST_CASE("ring element round trip, including huge values") {
  for (Ring ring : {Ring::Z, Ring::Zi, Ring::Zw}) {
    SplitMix64 rng(81);
    for (int it = 0; it < 500; ++it) {
      RingElement x = random_ring_element(ring, rng, 1000);
      CHECK(ring_element_from_json(ring, ring_element_to_json(x)) == x);
    }
  }
  Zint big("123456789012345678901234567890");
  RingElement huge(Ring::Z, big);
  json j = ring_element_to_json(huge);
  CHECK(j[0].is_string());
  CHECK(ring_element_from_json(Ring::Z, j) == huge);
  // b omitted-as-zero accepted
  CHECK(ring_element_from_json(Ring::Z, json::parse("[7]")) == re(Ring::Z, 7));
}

TEST_CASE("matrix and symbol round trips") {
  SplitMix64 rng(82);
  for (Ring ring : {Ring::Z, Ring::Zi}) {
    SymplecticSpace sp{2, ring};
    RMatrix g = random_sp_member(sp, 50, rng);
    CHECK(matrix_from_json(matrix_to_json(g)) == g);

    SymplecticSymbol s = random_deep_symbol(sp, 400, 8, rng);
    CHECK(symbol_from_json(symbol_to_json(s)) == s);

    SignedRelation rel{sp, {s, normalize(s)}};
    SignedRelation back = relation_from_json(relation_to_json(rel));
    CHECK(back.terms.size() == 2);
    CHECK(back.terms[0] == rel.terms[0]);
    CHECK(back.terms[1] == rel.terms[1]);
  }
  CHECK_THROWS_AS(matrix_from_json(json::parse("{\"rows\": 1}")),
                  std::invalid_argument);
}

TEST_CASE("field element and space round trips") {
  FieldElement q(re(Ring::Zi, 3, 1), re(Ring::Zi, 1, 2));
  CHECK(field_element_from_json(Ring::Zi, field_element_to_json(q)) == q);
  SymplecticSpace sp{3, Ring::Zw};
  SymplecticSpace back = space_from_json(space_to_json(sp));
  CHECK(back == sp);
}

TEST_CASE("serialization is deterministic") {
  SplitMix64 rng(83);
  SymplecticSpace sp{2, Ring::Z};
  SymplecticSymbol s = random_deep_symbol(sp, 200, 6, rng);
  ReduceResult r1 = reduce(s);
  ReduceResult r2 = reduce(s);
  json o1 = relation_to_json(r1.relation);
  json o2 = relation_to_json(r2.relation);
  CHECK(o1.dump() == o2.dump());
  CHECK(trace_to_json(r1.trace, TraceLevel::Steps).dump() ==
        trace_to_json(r2.trace, TraceLevel::Steps).dump());
}

TEST_CASE("chain serialization is canonical") {
  SymplecticSpace sp{2, Ring::Z};
  SymplecticSymbol id(sp, rmatrix_identity(Ring::Z, 4), 1);
  json c1 = chain_to_json(expand(id));
  json c2 = chain_to_json(expand(id));
  CHECK(c1.dump() == c2.dump());
  CHECK(c1.size() == 8);
  for (const auto& item : c1) {
    CHECK(item.contains("chamber"));
    CHECK(item.contains("coeff"));
  }

  // golden bytes: the rank-2 fundamental chain [line e1] - [line e2]
  SymplecticSpace s1{1, Ring::Z};
  SymplecticSymbol one(s1, rmatrix_identity(Ring::Z, 2), 1);
  CHECK(chain_to_json(expand(one)).dump() ==
        R"([{"chamber":[{"ring":"Z","rows":1,"cols":2,"entries":[[[0,0],[1,0]]]}],"coeff":-1},)"
        R"({"chamber":[{"ring":"Z","rows":1,"cols":2,"entries":[[[1,0],[0,0]]]}],"coeff":1}])");
}

TEST_CASE("random instances are seed deterministic") {
  for (auto mode : {RandomSpec::Mode::SpMember, RandomSpec::Mode::IsotropyMatrix,
                    RandomSpec::Mode::DeepSymbol}) {
    RandomSpec spec;
    spec.ring = Ring::Z;
    spec.n = 2;
    spec.entry_bound = 300;
    spec.seed = 123;
    spec.mode = mode;
    auto a = random_instance(spec);
    auto b = random_instance(spec);
    if (std::holds_alternative<RMatrix>(a))
      CHECK(std::get<RMatrix>(a) == std::get<RMatrix>(b));
    else
      CHECK(std::get<SymplecticSymbol>(a) == std::get<SymplecticSymbol>(b));
  }
}

TEST_CASE("random sp members are symplectic, isotropy matrices isotropic") {
  SplitMix64 rng(84);
  for (Ring ring : {Ring::Z, Ring::Zi, Ring::Zw}) {
    for (int n : {1, 2, 3}) {
      SymplecticSpace sp{n, ring};
      for (int it = 0; it < 20; ++it) {
        RMatrix g = random_sp_member(sp, 60, rng);
        CHECK(is_sp_member(sp, g));
        RMatrix m = random_isotropy_matrix(sp, 60, rng);
        CHECK(isotropy_condition(sp, m));
        CHECK(!det(m).is_zero());
      }
    }
  }
}

TEST_CASE("random deep symbols have depth strictly above one") {
  SplitMix64 rng(85);
  for (Ring ring : {Ring::Z, Ring::Zi}) {
    SymplecticSpace sp{2, ring};
    for (int it = 0; it < 30; ++it) {
      SymplecticSymbol s = random_deep_symbol(sp, 500, 10, rng);
      Zint d = depth(sp, s.matrix());
      CHECK(d > 1);
      CHECK(d <= 10);
      CHECK(isotropy_condition(sp, s.matrix()));
    }
  }
}

TEST_CASE("bound-too-small signals") {
  RandomSpec spec;
  spec.ring = Ring::Z;
  spec.n = 2;
  spec.entry_bound = 0;
  spec.seed = 1;
  spec.mode = RandomSpec::Mode::SpMember;
  CHECK_THROWS_AS(random_instance(spec), DomainError);
}

TEST_CASE("trace levels") {
  SymplecticSpace sp{2, Ring::Z};
  SplitMix64 rng(86);
  SymplecticSymbol s = random_deep_symbol(sp, 200, 6, rng);
  ReduceResult r = reduce(s);
  CHECK(trace_to_json(r.trace, TraceLevel::Off).empty());
  json steps = trace_to_json(r.trace, TraceLevel::Steps);
  CHECK(!steps.empty());
  std::string full = trace_to_json(r.trace, TraceLevel::Full).dump();
  CHECK(full.find("gamma") != std::string::npos);
  CHECK(steps.dump().find("gamma") == std::string::npos);
}
