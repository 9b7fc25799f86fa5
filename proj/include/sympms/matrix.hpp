#pragma once

// Exact dense matrices over a euclidean ring and its fraction field.
// Determinants are fraction-free (Bareiss); Hermite/Smith normal forms and
// lattice indices run entirely over the ring.

#include <utility>
#include <vector>

#include "sympms/ring.hpp"

namespace sympms {

template <class T>
class Mat {
 public:
  Mat(Ring ring, int rows, int cols, const T& fill)
      : ring_(ring), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw DomainError("bad-shape", "negative dimension");
  }

  Ring ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const Mat& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::vector<T> col(int c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }

  void set_col(int c, const std::vector<T>& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
  }

 private:
  Ring ring_;
  int rows_, cols_;
  std::vector<T> e_;
};

using RMatrix = Mat<RingElement>;
using QMatrix = Mat<FieldElement>;

RMatrix rmatrix_zero(Ring ring, int rows, int cols);
RMatrix rmatrix_identity(Ring ring, int n);
RMatrix rmatrix_from_cols(Ring ring, const std::vector<RVec>& cols);

RMatrix operator*(const RMatrix& a, const RMatrix& b);
RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix operator-(const RMatrix& a);
RMatrix transpose(const RMatrix& m);
RVec mat_vec(const RMatrix& m, const RVec& v);

RVec vec_add(const RVec& a, const RVec& b);
RVec vec_sub(const RVec& a, const RVec& b);
RVec vec_scale(const RingElement& c, const RVec& v);
bool vec_is_zero(const RVec& v);

// Exact determinant by fraction-free elimination.
RingElement det(const RMatrix& m);

int rank(const RMatrix& m);

struct SmithResult {
  std::vector<RingElement> divisors;  // canonical associates, d_i | d_{i+1}
  RMatrix U, V;                       // U m V = diag(divisors)
  RMatrix U_inv;
};

SmithResult smith_normal_form(const RMatrix& m);

struct Lattice {
  int ambient_rank;
  RMatrix generators;  // columns generate the module
};

// Product of the norms of the Smith divisors when the generator columns are
// independent; zero when they are dependent.  Equals norm(det) for square
// nonsingular generators, and 1 exactly when the lattice is saturated.
Zint lattice_index(const Lattice& l);
Zint index_of_columns(const RMatrix& generators);

struct SaturatePairResult {
  RVec basis_a, basis_b;  // O-basis of span_K(w, w') intersected with O^m
  RMatrix coords;         // 2x2, [w | w'] = [basis_a | basis_b] * coords
};

SaturatePairResult saturate_pair(const RVec& w, const RVec& w_prime);

bool is_primitive(const RVec& v);

struct PrimitivePart {
  RVec vector;
  RingElement content;  // canonical associate
};

// Divides out the gcd of the entries.
PrimitivePart make_primitive(const RVec& v);

RingElement vector_content(const RVec& v);

// Fraction-field elimination: reduced row echelon form, pivots scaled to 1.
QMatrix qmatrix_from_ring(const RMatrix& m);
QMatrix rref(const QMatrix& m);
int rank(const QMatrix& m);

}  // namespace sympms
