#pragma once

// Ground-truth oracle: expands a symplectic modular symbol into a signed
// chain of oriented chambers (full flags of isotropic subspaces) of the
// symplectic Tits building, and decides chain equalities exactly.

#include <map>
#include <string>
#include <vector>

#include "sympms/symbol.hpp"

namespace sympms {

// A subspace in canonical form: the rows are the unique primitive integer
// representatives of the reduced-echelon basis of the row space, leading
// entries canonical associates.  Two subspaces are equal iff the forms are.
struct Subspace {
  int dim;
  RMatrix rows;  // dim x 2n

  bool operator==(const Subspace& o) const { return dim == o.dim && rows == o.rows; }
};

// Canonical form of the span of the given vectors; verifies isotropy.
Subspace span_canonical(const SymplecticSpace& s, const std::vector<RVec>& vectors);

// A chamber: full isotropic flag, dimensions 1, 2, ..., n.
struct Chamber {
  std::vector<Subspace> flag;
};

std::string chamber_key(const Chamber& c);

class ChamberChain {
 public:
  explicit ChamberChain(SymplecticSpace space) : space_(space) {}

  const SymplecticSpace& space() const { return space_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  void add(const Chamber& c, long long coeff);

  ChamberChain operator+(const ChamberChain& o) const;
  ChamberChain operator-() const;
  bool operator==(const ChamberChain& o) const;
  bool operator!=(const ChamberChain& o) const { return !(*this == o); }

  const std::map<std::string, std::pair<Chamber, long long>>& entries() const {
    return entries_;
  }

 private:
  SymplecticSpace space_;
  std::map<std::string, std::pair<Chamber, long long>> entries_;
};

// Signed chamber chain of a symbol: one oriented chamber per ordered
// isotropic tuple, with coefficient sign(s) * sgn(sigma) * (-1)^#barred;
// degenerate flags contribute nothing.
ChamberChain expand(const SymplecticSymbol& s);

// Simplicial boundary vanishes exactly (for n = 1, the augmentation).
bool boundary_is_zero(const ChamberChain& c);

bool chains_equal(const ChamberChain& a, const ChamberChain& b);

ChamberChain chain_sum(const std::vector<ChamberChain>& chains);

ChamberChain expand_relation(const SignedRelation& rel);

}  // namespace sympms
