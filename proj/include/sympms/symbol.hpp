#pragma once

// Symplectic modular symbols: 2n ring-vector columns indexed by <n>± and a
// sign.  Columns of a valid symbol are nonzero and satisfy the isotropy
// condition; dependent columns are representable but flag the symbol as the
// zero class.

#include <string>
#include <vector>

#include "sympms/symplectic.hpp"

namespace sympms {

class SymplecticSymbol {
 public:
  // Checks nonzero columns and the isotropy condition; computes the
  // degeneracy flag.  Columns are stored as given (see normalize()).
  SymplecticSymbol(SymplecticSpace space, RMatrix columns, int sign);

  const SymplecticSpace& space() const { return space_; }
  const RMatrix& matrix() const { return cols_; }
  int sign() const { return sign_; }
  bool is_zero() const { return zero_; }

  RVec column(int index) const {  // signed index
    return cols_.col(index_to_pos(space_, index));
  }

  bool operator==(const SymplecticSymbol& o) const {
    return space_ == o.space_ && sign_ == o.sign_ && cols_ == o.cols_;
  }
  bool operator!=(const SymplecticSymbol& o) const { return !(*this == o); }

 private:
  SymplecticSpace space_;
  RMatrix cols_;
  int sign_;
  bool zero_;
};

// Content-strips every column and rescales it by the unit that makes its
// first nonzero entry a canonical associate.  The class is unchanged; the
// representative becomes unique.
SymplecticSymbol normalize(const SymplecticSymbol& s);

bool is_normalized(const SymplecticSymbol& s);

// tau permutes 1..n; columns move in (k, kbar) pairs, sign unchanged.
SymplecticSymbol permute(const SymplecticSymbol& s, const std::vector<int>& tau);

// Exchanges columns k and kbar and negates the sign.
SymplecticSymbol swap_bar(const SymplecticSymbol& s, int k);

// Left action of g (columns become g * v); the class maps accordingly.
SymplecticSymbol left_mul(const RMatrix& g, const SymplecticSymbol& s);

struct UnimodularCheck {
  bool unimodular;
  RMatrix sp_member;  // unit-rescaled columns, in Sp_2n(O); valid iff unimodular
};

// depth 1 test; on success also returns the unit-rescaled Sp member.
UnimodularCheck is_unimodular(const SymplecticSymbol& s);

struct SignedRelation {
  SymplecticSpace space;
  std::vector<SymplecticSymbol> terms;
};

// Deterministic comparison key (used to canonically order relation terms).
std::string symbol_sort_key(const SymplecticSymbol& s);

void sort_terms(SignedRelation& rel);

// Rank-2 modular symbol [v; w] with a sign.
struct Sl2Symbol {
  Ring ring;
  RVec v, w;
  int sign;
};

RingElement sl2_det(const Sl2Symbol& s);

// Rewrites [v; w] as unimodular symbols whose vertex chains telescope from
// the line of v to the line of w.  Over Z this is the continued-fraction
// path; over Z[i] and Z[w] it iterates the candidate construction.
std::vector<Sl2Symbol> reduce_sl2(const Sl2Symbol& s);

// Candidate-based variant, available over every ring (used as a cross-check
// against the continued-fraction path over Z).
std::vector<Sl2Symbol> reduce_sl2_by_candidates(const Sl2Symbol& s);

// A primitive x with i(x, w) and i(v, x) both strictly below i(v, w).
RVec sl2_candidate(Ring ring, const RVec& v, const RVec& w);

}  // namespace sympms
