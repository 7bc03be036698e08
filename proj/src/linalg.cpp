#include "shimura/linalg.hpp"

#include <algorithm>

namespace shimura {

Vec4q operator+(const Vec4q& u, const Vec4q& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

Vec4q operator-(const Vec4q& u, const Vec4q& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

Vec4q vec_mat(const Vec4q& v, const Mat4q& M) {
    Vec4q out{};
    for (int j = 0; j < 4; ++j) {
        Rat s = 0;
        for (int k = 0; k < 4; ++k) s += v[k] * M[k][j];
        out[j] = s;
    }
    return out;
}

Mat4q mat_mul(const Mat4q& A, const Mat4q& B) {
    Mat4q C{};
    for (int i = 0; i < 4; ++i) C[i] = vec_mat(A[i], B);
    return C;
}

Mat4q mat_transpose(const Mat4q& A) {
    Mat4q T{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) T[i][j] = A[j][i];
    return T;
}

Rat dot(const Vec4q& u, const Vec4q& v) {
    Rat s = 0;
    for (int k = 0; k < 4; ++k) s += u[k] * v[k];
    return s;
}

Rat mat_det(const Mat4q& A) {
    Mat4q M = A;
    Rat det = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (int r = c + 1; r < 4; ++r) {
            if (M[r][c] == 0) continue;
            Rat f = M[r][c] / M[c][c];
            for (int j = c; j < 4; ++j) M[r][j] -= f * M[c][j];
        }
    }
    return det;
}

Mat4q mat_inverse(const Mat4q& A) {
    // Gauss-Jordan on [A | I]
    std::array<std::array<Rat, 8>, 4> M{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) M[i][j] = A[i][j];
        M[i][4 + i] = 1;
    }
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        SHIMURA_CHECK(piv >= 0, "singular matrix");
        std::swap(M[piv], M[c]);
        Rat d = M[c][c];
        for (int j = 0; j < 8; ++j) M[c][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (int j = 0; j < 8; ++j) M[r][j] -= f * M[c][j];
        }
    }
    Mat4q inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = M[i][4 + j];
    return inv;
}

int compare(const Vec4q& u, const Vec4q& v) {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(u[k], v[k]);
        if (c != 0) return c;
    }
    return 0;
}

int compare(const Vec4z& u, const Vec4z& v) {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(u[k], v[k]);
        if (c != 0) return c;
    }
    return 0;
}

Lattice4 Lattice4::from_rows(const std::vector<Vec4z>& input) {
    std::vector<Vec4z> M = input;
    int rix = 0;
    for (int col = 0; col < 4 && rix < static_cast<int>(M.size()); ++col) {
        int piv = -1;
        for (int r = rix; r < static_cast<int>(M.size()); ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rix], M[piv]);
        // Euclidean elimination below the pivot
        bool changed = true;
        while (changed) {
            changed = false;
            for (int r = rix + 1; r < static_cast<int>(M.size()); ++r) {
                if (M[r][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), M[r][col].get_mpz_t(), M[rix][col].get_mpz_t());
                for (int j = 0; j < 4; ++j) M[r][j] -= q * M[rix][j];
                if (M[r][col] != 0) {
                    std::swap(M[rix], M[r]);
                    changed = true;
                }
            }
        }
        if (M[rix][col] < 0)
            for (int j = 0; j < 4; ++j) M[rix][j] = -M[rix][j];
        ++rix;
    }
    SHIMURA_CHECK(rix == 4, "lattice generators do not span a rank-4 lattice");
    Lattice4 L;
    for (int i = 0; i < 4; ++i) L.rows_[i] = M[i];
    // reduce entries above each pivot into [0, pivot); columns left to right so
    // later subtractions cannot disturb already-reduced entries
    for (int j = 0; j < 4; ++j) {
        for (int i = j + 1; i < 4; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), L.rows_[j][i].get_mpz_t(), L.rows_[i][i].get_mpz_t());
            if (q != 0)
                for (int k = i; k < 4; ++k) L.rows_[j][k] -= q * L.rows_[i][k];
        }
    }
    return L;
}

bool Lattice4::contains(const Vec4z& v) const {
    Vec4z t = v;
    for (int c = 0; c < 4; ++c) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t[c].get_mpz_t(), rows_[c][c].get_mpz_t());
        if (r != 0) return false;
        for (int j = c; j < 4; ++j) t[j] -= q * rows_[c][j];
    }
    return t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0;
}

Vec4z Lattice4::reduce(const Vec4z& v) const {
    Vec4z t = v;
    for (int c = 0; c < 4; ++c) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), t[c].get_mpz_t(), rows_[c][c].get_mpz_t());
        if (q != 0)
            for (int j = c; j < 4; ++j) t[j] -= q * rows_[c][j];
    }
    return t;
}

Int Lattice4::index() const {
    return rows_[0][0] * rows_[1][1] * rows_[2][2] * rows_[3][3];
}

}  // namespace shimura
