#pragma once

#include <vector>

#include "shimura/numeric.hpp"

namespace shimura {

using Vec4q = std::array<Rat, 4>;
using Mat4q = std::array<Vec4q, 4>;
using Vec4z = std::array<Int, 4>;
using Mat4z = std::array<Vec4z, 4>;

Vec4q operator+(const Vec4q& u, const Vec4q& v);
Vec4q operator-(const Vec4q& u, const Vec4q& v);

// row vector times matrix
Vec4q vec_mat(const Vec4q& v, const Mat4q& M);
Mat4q mat_mul(const Mat4q& A, const Mat4q& B);
Mat4q mat_transpose(const Mat4q& A);
Rat mat_det(const Mat4q& A);
Mat4q mat_inverse(const Mat4q& A);  // throws internal_error when singular
Rat dot(const Vec4q& u, const Vec4q& v);

inline Vec4q to_rat(const Vec4z& v) { return {Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])}; }

int compare(const Vec4q& u, const Vec4q& v);  // lexicographic
int compare(const Vec4z& u, const Vec4z& v);

/// Full-rank sublattice of Z^4 held in row-style Hermite normal form:
/// upper triangular rows, positive diagonal, entries above each pivot
/// reduced into [0, pivot).
class Lattice4 {
  public:
    static Lattice4 from_rows(const std::vector<Vec4z>& rows);  // throws if rank < 4

    const Mat4z& rows() const { return rows_; }
    bool contains(const Vec4z& v) const;
    // canonical coset representative of v + L
    Vec4z reduce(const Vec4z& v) const;
    // [Z^4 : L] = product of the diagonal
    Int index() const;

    bool operator==(const Lattice4& other) const { return rows_ == other.rows_; }

  private:
    Mat4z rows_{};
};

}  // namespace shimura
