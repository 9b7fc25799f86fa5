#include "sympms/symplectic.hpp"

#include <algorithm>

namespace sympms {

int index_to_pos(const SymplecticSpace& s, int idx) {
  int k = idx > 0 ? idx : -idx;
  if (k < 1 || k > s.n) throw DomainError("bad-index", "index out of range");
  return idx > 0 ? k - 1 : 2 * s.n - k;
}

int pos_to_index(const SymplecticSpace& s, int pos) {
  if (pos < 0 || pos >= 2 * s.n) throw DomainError("bad-index", "position out of range");
  return pos < s.n ? pos + 1 : -(2 * s.n - pos);
}

std::vector<int> all_indices(const SymplecticSpace& s) {
  std::vector<int> out;
  out.reserve(2 * s.n);
  for (int p = 0; p < 2 * s.n; ++p) out.push_back(pos_to_index(s, p));
  return out;
}

RMatrix gram_matrix(const SymplecticSpace& s) {
  const int d = s.dim();
  RMatrix j = rmatrix_zero(s.ring, d, d);
  for (int p = 0; p < s.n; ++p) {
    j.at(p, d - 1 - p) = RingElement::one(s.ring);
    j.at(d - 1 - p, p) = -RingElement::one(s.ring);
  }
  return j;
}

RingElement sym_pair(const SymplecticSpace& s, const RVec& v, const RVec& w) {
  const int d = s.dim();
  if (static_cast<int>(v.size()) != d || static_cast<int>(w.size()) != d)
    throw DomainError("dimension-mismatch", "pairing needs vectors of length 2n");
  RingElement out = RingElement::zero(s.ring);
  for (int p = 0; p < s.n; ++p)
    out += v[p] * w[d - 1 - p] - v[d - 1 - p] * w[p];
  return out;
}

bool is_sp_member(const SymplecticSpace& s, const RMatrix& g) {
  const int d = s.dim();
  if (g.rows() != d || g.cols() != d)
    throw DomainError("dimension-mismatch", "Sp membership needs a 2n x 2n matrix");
  RMatrix j = gram_matrix(s);
  return transpose(g) * j * g == j;
}

bool isotropy_condition(const SymplecticSpace& s, const RMatrix& m) {
  const int d = s.dim();
  if (m.rows() != d || m.cols() != d)
    throw DomainError("dimension-mismatch", "isotropy condition needs a 2n x 2n matrix");
  std::vector<RVec> cols(d);
  for (int c = 0; c < d; ++c) {
    cols[c] = m.col(c);
    if (vec_is_zero(cols[c]))
      throw DomainError("zero-column", "isotropy condition needs nonzero columns");
  }
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      if (q == d - 1 - p) continue;  // antipodal pair, unconstrained
      if (!sym_pair(s, cols[p], cols[q]).is_zero()) return false;
    }
  return true;
}

Zint depth(const SymplecticSpace& s, const RMatrix& m) {
  const int d = s.dim();
  for (int c = 0; c < d; ++c)
    if (!is_primitive(m.col(c)))
      throw DomainError("imprimitive-column", "depth needs primitive columns");
  if (!isotropy_condition(s, m))
    throw DomainError("isotropy-violation", "depth needs the isotropy condition");
  if (rank(m) < d) throw DomainError("dependence", "depth needs independent columns");
  Zint out = 0;
  for (int p = 0; p < s.n; ++p) {
    Zint v = norm(sym_pair(s, m.col(p), m.col(d - 1 - p)));
    if (v > out) out = v;
  }
  return out;
}

namespace {

// In-place row operations applied simultaneously to the working matrix and
// the accumulated gamma.  Each corresponds to left multiplication by a
// generator from gen_t1/gen_t2/gen_p1/gen_p2.
struct RowOps {
  RMatrix& a;
  RMatrix& g;

  void addmul(int r, int src, const RingElement& c) {
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) += c * a.at(src, j);
    for (int j = 0; j < g.cols(); ++j) g.at(r, j) += c * g.at(src, j);
  }

  // t1 with coefficient: row(p) += c * row(pbar)
  void t1(int d, int p, const RingElement& c) { addmul(p, d - 1 - p, c); }

  // t2 pair: row(i) += c row(k), row(kbar) -= c row(ibar); i, k in top block
  void t2(int d, int i, int k, const RingElement& c) {
    addmul(i, k, c);
    addmul(d - 1 - k, d - 1 - i, -c);
  }

  // p1: row(p) <- row(pbar), row(pbar) <- -row(p)
  void p1(int d, int p) {
    int q = d - 1 - p;
    for (int j = 0; j < a.cols(); ++j) {
      RingElement tmp = a.at(p, j);
      a.at(p, j) = a.at(q, j);
      a.at(q, j) = -tmp;
    }
    for (int j = 0; j < g.cols(); ++j) {
      RingElement tmp = g.at(p, j);
      g.at(p, j) = g.at(q, j);
      g.at(q, j) = -tmp;
    }
  }

  // p2 transposition of top rows i, k with the paired barred swap
  void p2_swap(int d, int i, int k) {
    auto swap_rows = [&](RMatrix& m, int r1, int r2) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r1, j), m.at(r2, j));
    };
    swap_rows(a, i, k);
    swap_rows(a, d - 1 - i, d - 1 - k);
    swap_rows(g, i, k);
    swap_rows(g, d - 1 - i, d - 1 - k);
  }
};

}  // namespace

RMatrix gen_t1(const SymplecticSpace& s, int idx, const RingElement& c) {
  RMatrix g = rmatrix_identity(s.ring, s.dim());
  int p = index_to_pos(s, idx);
  g.at(p, s.dim() - 1 - p) += c;
  return g;
}

RMatrix gen_t2(const SymplecticSpace& s, int i, int k, const RingElement& c) {
  if (i < 1 || k < 1 || i > s.n || k > s.n || i == k)
    throw DomainError("bad-index", "t2 needs distinct top-block indices");
  const int d = s.dim();
  RMatrix g = rmatrix_identity(s.ring, d);
  g.at(i - 1, k - 1) += c;
  g.at(d - k, d - i) -= c;
  return g;
}

RMatrix gen_t3(const SymplecticSpace& s, int i, int k, const RingElement& c) {
  if (i < 1 || k < 1 || i > s.n || k > s.n || i == k)
    throw DomainError("bad-index", "t3 needs distinct top-block indices");
  const int d = s.dim();
  RMatrix g = rmatrix_identity(s.ring, d);
  g.at(i - 1, d - k) += c;
  g.at(k - 1, d - i) += c;
  return g;
}

RMatrix gen_p1(const SymplecticSpace& s, int i) {
  if (i < 1 || i > s.n) throw DomainError("bad-index", "p1 needs a top-block index");
  const int d = s.dim();
  RMatrix g = rmatrix_identity(s.ring, d);
  int p = i - 1, q = d - i;
  g.at(p, p) = RingElement::zero(s.ring);
  g.at(q, q) = RingElement::zero(s.ring);
  g.at(p, q) = RingElement::one(s.ring);
  g.at(q, p) = -RingElement::one(s.ring);
  return g;
}

RMatrix gen_p2(const SymplecticSpace& s, const std::vector<int>& tau) {
  if (static_cast<int>(tau.size()) != s.n)
    throw DomainError("bad-index", "p2 needs a permutation of 1..n");
  const int d = s.dim();
  RMatrix g = rmatrix_zero(s.ring, d, d);
  for (int i = 1; i <= s.n; ++i) {
    int ti = tau[i - 1];
    if (ti < 1 || ti > s.n) throw DomainError("bad-index", "p2 image out of range");
    g.at(i - 1, ti - 1) = RingElement::one(s.ring);
    g.at(d - i, d - ti) = RingElement::one(s.ring);
  }
  return g;
}

HnfResult symplectic_hnf(const SymplecticSpace& s, const RMatrix& m) {
  const int d = s.dim();
  if (m.rows() != d || m.cols() != d)
    throw DomainError("dimension-mismatch", "symplectic_hnf needs a 2n x 2n matrix");
  for (int c = 0; c < d; ++c) {
    RVec col = m.col(c);
    if (vec_is_zero(col))
      throw DomainError("zero-column", "symplectic_hnf needs nonzero columns");
    if (!is_primitive(col))
      throw DomainError("imprimitive-column", "symplectic_hnf needs primitive columns");
  }
  if (!isotropy_condition(s, m))
    throw DomainError("isotropy-violation", "symplectic_hnf needs the isotropy condition");

  RMatrix a = m;
  RMatrix gamma = rmatrix_identity(s.ring, d);
  RowOps ops{a, gamma};

  for (int level = 0; level < s.n; ++level) {
    const int c = level;  // column to clear, 0-based

    // merge each row pair (i, ibar) of the block: Euclid with t1 and p1
    for (int i = level; i < s.n; ++i) {
      int ib = d - 1 - i;
      while (!a.at(ib, c).is_zero()) {
        if (!a.at(i, c).is_zero()) {
          DivRem dr = div_rem(a.at(i, c), a.at(ib, c));
          if (!dr.quotient.is_zero()) ops.t1(d, i, -dr.quotient);
        }
        ops.p1(d, i);
        // now |old remainder| sits at ib; repeat until it vanishes
      }
    }

    // gcd the top-block entries of column c into row `level`
    for (int k = level + 1; k < s.n; ++k) {
      while (!a.at(k, c).is_zero()) {
        if (!a.at(level, c).is_zero()) {
          DivRem dr = div_rem(a.at(level, c), a.at(k, c));
          if (!dr.quotient.is_zero()) ops.t2(d, level, k, -dr.quotient);
        }
        ops.p2_swap(d, level, k);
      }
    }

    if (a.at(level, c).is_zero())
      throw DomainError("hnf-degenerate",
                        "zero leading column in the recursion block at level " +
                            std::to_string(level + 1));

    // isotropy against the cleared column forces row (level)bar to vanish on
    // the block's interior columns; anything else is a logic error
    int rb = d - 1 - level;
    for (int j = c + 1; j < d - 1 - level; ++j)
      if (!a.at(rb, j).is_zero())
        throw std::logic_error("symplectic_hnf: barred row did not clear");
  }

  return {gamma, a};
}

RMatrix sp_inverse(const SymplecticSpace& s, const RMatrix& gamma) {
  RMatrix j = gram_matrix(s);
  return -(j * transpose(gamma) * j);
}

}  // namespace sympms
