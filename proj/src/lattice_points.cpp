#include "shimura/lattice_points.hpp"

#include <algorithm>

namespace shimura {

namespace {

// Decompose Q(y) = sum_i d[i] * (y_i + sum_{j>i} u[i][j] y_j)^2 by rational
// completion of squares; requires G symmetric positive definite.
struct SquareDecomposition {
    Vec4q d;
    Mat4q u;  // only entries u[i][j] with j > i are used
};

SquareDecomposition decompose(Mat4q G) {
    SquareDecomposition sd{};
    for (int i = 0; i < 4; ++i) {
        SHIMURA_CHECK(G[i][i] > 0, "quadratic form is not positive definite");
        sd.d[i] = G[i][i];
        for (int j = i + 1; j < 4; ++j) sd.u[i][j] = G[i][j] / sd.d[i];
        for (int k = i + 1; k < 4; ++k)
            for (int l = k; l < 4; ++l) {
                G[k][l] -= sd.d[i] * sd.u[i][k] * sd.u[i][l];
                G[l][k] = G[k][l];
            }
    }
    return sd;
}

}  // namespace

std::vector<Vec4z> enumerate_quadric(const Mat4q& G, const Vec4q& shift, const Rat& value) {
    std::vector<Vec4z> out;
    if (value < 0) return out;
    SquareDecomposition sd = decompose(G);

    Vec4z x{};
    Vec4q rem{};   // remaining budget at each level
    Vec4q cofs{};  // the affine offset c_i at each level

    // level i consumes d[i]*(x_i + c_i)^2 with
    // c_i = shift_i + sum_{j>i} u[i][j]*(x_j + shift_j)
    auto descend = [&](auto&& self, int level, const Rat& remaining) -> void {
        Rat c = shift[level];
        for (int j = level + 1; j < 4; ++j)
            if (sd.u[level][j] != 0) c += sd.u[level][j] * (Rat(x[j]) + shift[j]);
        Rat bound = remaining / sd.d[level];  // (x + c)^2 <= bound
        Int span = isqrt_floor(floor_rat(bound)) + 1;
        Int lo = ceil_rat(-c) - span;
        Int hi = floor_rat(-c) + span;
        for (Int v = lo; v <= hi; ++v) {
            Rat t = Rat(v) + c;
            Rat term = sd.d[level] * t * t;
            if (term > remaining) continue;
            x[level] = v;
            if (level == 0) {
                if (term == remaining) out.push_back(x);
            } else {
                self(self, level - 1, remaining - term);
            }
        }
    };
    descend(descend, 3, value);
    std::sort(out.begin(), out.end(),
              [](const Vec4z& a, const Vec4z& b) { return compare(a, b) < 0; });
    return out;
}

std::vector<Vec4z> enumerate_norm(const Mat4q& G, const Rat& value) {
    return enumerate_quadric(G, Vec4q{}, value);
}

}  // namespace shimura
