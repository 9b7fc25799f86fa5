#pragma once

// Candidate construction and the subdivision relation: the vanishing set
// D_x, the constructed points x_ij, the altered matrices m_i, and the
// relation [m] = sum over i outside D_x of [m_i].

#include <map>
#include <optional>
#include <vector>

#include "sympms/symbol.hpp"

namespace sympms {

struct Candidate {
  RVec x;                                // primitive
  std::vector<FieldElement> coefficients;  // position order 1..n, nbar..1bar
  std::vector<Zint> witness_indices;       // i(x, v_1, ..., v^_i, ..., v_2n)
};

// Candidate for the columns of s (full-rank case).  The primitive w scan
// starts at standard basis vector `w_skip` (retry hook).  Requires the
// column index to exceed 1.
Candidate find_candidate(const SymplecticSymbol& s, int w_skip = 0);

struct SubdivisionData {
  SymplecticSymbol base;
  RVec x;
  std::vector<int> d_x;  // signed indices with <x, v_i> = 0, in <n>± order

  bool in_d_x(int index) const;
  bool defined(int i, int j) const;
  // raw x_ij = <x, v_i> v_j - <x, v_j> v_i (not content-stripped)
  const RVec& point(int i, int j) const;

  std::map<std::pair<int, int>, RVec> points;  // keyed by position pair
  SymplecticSpace space() const { return base.space(); }
};

SubdivisionData subdivision(const SymplecticSymbol& s, const RVec& x);

// The matrix m_i of the relation: column ibar becomes x, column j becomes
// x_ij, column i stays.  Normalized; may come out flagged zero.
SymplecticSymbol make_m_i(const SubdivisionData& data, int index);

struct RelationResult {
  SignedRelation relation;
  std::vector<int> term_indices;       // i with nonzero m_i, in <n>± order
  std::vector<int> dropped_degenerate;  // i whose m_i collapsed to zero
};

RelationResult theorem1_relation_full(const SymplecticSymbol& s, const RVec& x);
SignedRelation theorem1_relation(const SymplecticSymbol& s, const RVec& x);

// The three-point identity <x,v_k> x_ij = <x,v_j> x_ik - <x,v_i> x_jk on
// raw points; {i,j,k} isotropic with at most one member in D_x.
bool check_collinearity(const SubdivisionData& data, int i, int j, int k);

}  // namespace sympms
