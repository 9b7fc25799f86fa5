#pragma once

// Reduction of a symplectic modular symbol to a signed sum of unimodular
// symbols.  One outer pass: pick a candidate, emit the subdivision relation,
// then per term triangularize, recurse on the rank-(2n-2) link, lift the
// unimodular link terms back and saturate the middle column pairs.  Every
// pass strictly lowers the depth; the base case is the rank-2 algorithm.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympms/subdivision.hpp"

namespace sympms {

struct TraceNode {
  std::string kind;  // candidate | relation | hnf | link-recursion |
                     // pair-saturation | base-case | pass | note
  std::map<std::string, std::string> info;
  std::optional<Candidate> candidate;
  std::optional<SubdivisionData> subdivision;  // x, D_x and the raw x_ij
  std::optional<RMatrix> gamma;
  std::optional<RMatrix> transform;
  std::vector<TraceNode> children;
};

struct ReductionTrace {
  std::vector<TraceNode> steps;
};

struct LinkData {
  SymplecticSymbol base;  // upper triangular, first column e1
  RVec x;
  RMatrix X;        // middle columns of m_1 (raw constructed points)
  RMatrix W;        // columns <e_j, x> e1 - <e1, x> e_j
  RMatrix m_prime;  // central (2n-2) x (2n-2) block of the base
};

// Builds the link data and verifies X = W * m_prime exactly.  The base must
// be upper triangular with first column e1 and <x, v_1> != 0.
LinkData build_link(const SymplecticSymbol& upper, const RVec& x);

// [e1 | W * m_alpha_prime | x] with the given sign; m_alpha_prime is a
// (2n-2) x (2n-2) matrix over the ring (a member of the smaller Sp when
// lifting reduction output).
SymplecticSymbol lift_link_term(const LinkData& link, const RMatrix& m_alpha_prime,
                                int sign);

// Runs the rank-2 algorithm inside each middle column pair (positions
// 2..n paired with their bars), content-stripping first.  Chain-equal to
// the input; every output pair spans the saturation of its plane.
std::vector<SymplecticSymbol> saturate_link_pairs(const SymplecticSymbol& lifted,
                                                  TraceNode* trace);

struct ReduceResult {
  SignedRelation relation;
  ReductionTrace trace;
};

// Every output term is unimodular and the signed chamber chains agree
// exactly with the input.  Zero (degenerate) symbols reduce to the empty
// relation.
ReduceResult reduce(const SymplecticSymbol& s);

}  // namespace sympms
