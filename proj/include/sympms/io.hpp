#pragma once

// JSON serialization for every core type (canonical field order, integers
// only) and seeded random instance generation.

#include <json.hpp>

#include <string>
#include <variant>

#include "sympms/building.hpp"
#include "sympms/prng.hpp"
#include "sympms/reduction.hpp"

namespace sympms {

using json = nlohmann::ordered_json;

json zint_to_json(const Zint& z);
Zint zint_from_json(const json& j);

json ring_element_to_json(const RingElement& x);
RingElement ring_element_from_json(Ring ring, const json& j);

json field_element_to_json(const FieldElement& q);
FieldElement field_element_from_json(Ring ring, const json& j);

json vector_to_json(const RVec& v);
RVec vector_from_json(Ring ring, const json& j);

json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const json& j);

json space_to_json(const SymplecticSpace& s);
SymplecticSpace space_from_json(const json& j);

json symbol_to_json(const SymplecticSymbol& s);
SymplecticSymbol symbol_from_json(const json& j);

json relation_to_json(const SignedRelation& r);
SignedRelation relation_from_json(const json& j);

json candidate_to_json(const Candidate& c);

json chain_to_json(const ChamberChain& c);

enum class TraceLevel { Off, Steps, Full };

TraceLevel trace_level_from_string(const std::string& s);

json trace_node_to_json(const TraceNode& n, TraceLevel level);
json trace_to_json(const ReductionTrace& t, TraceLevel level);

// ---- random instances ----------------------------------------------------

struct RandomSpec {
  Ring ring = Ring::Z;
  int n = 2;
  long entry_bound = 10;  // max norm of any matrix entry
  uint64_t seed = 0;
  enum class Mode { SpMember, IsotropyMatrix, DeepSymbol } mode = Mode::SpMember;
};

RandomSpec::Mode random_mode_from_string(const std::string& s);

RingElement random_ring_element(Ring ring, SplitMix64& rng, long max_norm);

// Word in the elementary symplectic generators with every entry norm kept
// within the bound by rejection; signals "bound-too-small" after 1e4
// rejected operations.
RMatrix random_sp_member(const SymplecticSpace& s, long bound, SplitMix64& rng);

// sp member with isotropy-preserving pair deepenings and unit rescalings.
RMatrix random_isotropy_matrix(const SymplecticSpace& s, long bound, SplitMix64& rng);

// Deep symbol: depth strictly greater than one, at most `depth_bound`.
SymplecticSymbol random_deep_symbol(const SymplecticSpace& s, long bound,
                                    long depth_bound, SplitMix64& rng);

std::variant<RMatrix, SymplecticSymbol> random_instance(const RandomSpec& spec);

}  // namespace sympms
