#pragma once

// The standard symplectic structure on K^{2n}.  Columns and rows are indexed
// by <n>± = {1,...,n, nbar,...,1bar}; an index is stored as a signed integer
// (+k for k, -k for kbar) and maps to matrix position 1..2n in the order
// 1 < ... < n < nbar < ... < 1bar.

#include <vector>

#include "sympms/matrix.hpp"
#include "sympms/ring.hpp"

namespace sympms {

struct SymplecticSpace {
  int n;
  Ring ring;

  int dim() const { return 2 * n; }

  bool operator==(const SymplecticSpace& o) const {
    return n == o.n && ring == o.ring;
  }
  bool operator!=(const SymplecticSpace& o) const { return !(*this == o); }
};

// signed index <-> 0-based matrix position
int index_to_pos(const SymplecticSpace& s, int idx);
int pos_to_index(const SymplecticSpace& s, int pos);
inline int bar(int idx) { return -idx; }

// every signed index in the order 1, ..., n, nbar, ..., 1bar
std::vector<int> all_indices(const SymplecticSpace& s);

// Gram matrix J of the pairing: <e_i, e_j> = 1 if j = ibar and i < j,
// -1 if j = ibar and i > j, 0 otherwise.
RMatrix gram_matrix(const SymplecticSpace& s);

RingElement sym_pair(const SymplecticSpace& s, const RVec& v, const RVec& w);

// g^t J g = J
bool is_sp_member(const SymplecticSpace& s, const RMatrix& g);

// Pairwise form: every pair of columns at non-antipodal positions pairs to
// zero.  Columns must be nonzero.
bool isotropy_condition(const SymplecticSpace& s, const RMatrix& m);

// max_i norm(<v_i, v_ibar>) over i = 1..n.  Requires primitive independent
// columns satisfying the isotropy condition.
Zint depth(const SymplecticSpace& s, const RMatrix& m);

// Elementary symplectic row operations (as left-multiplication matrices).
// Coefficients are arbitrary ring elements; every generator lies in Sp_2n(O).
RMatrix gen_t1(const SymplecticSpace& s, int idx, const RingElement& c);
RMatrix gen_t2(const SymplecticSpace& s, int i, int k, const RingElement& c);
RMatrix gen_t3(const SymplecticSpace& s, int i, int k, const RingElement& c);
RMatrix gen_p1(const SymplecticSpace& s, int i);
RMatrix gen_p2(const SymplecticSpace& s, const std::vector<int>& tau);

struct HnfResult {
  RMatrix gamma;  // in Sp_2n(O)
  RMatrix t;      // gamma * m, upper triangular, isotropy condition holds
};

// Symplectic Hermite form: gamma in Sp_2n(O) with gamma*m upper triangular.
// Signals "hnf-degenerate" when a recursion block has a zero leading column
// (only possible for degenerate inputs).
HnfResult symplectic_hnf(const SymplecticSpace& s, const RMatrix& m);

// gamma^{-1} = -J gamma^t J for gamma in Sp.
RMatrix sp_inverse(const SymplecticSpace& s, const RMatrix& gamma);

}  // namespace sympms
