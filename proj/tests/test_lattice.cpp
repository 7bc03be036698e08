#include "doctest.h"
#include "shimura/lattice_points.hpp"
#include "shimura/order_arithmetic.hpp"

using namespace shimura;

TEST_CASE("Hermite normal form basics") {
    // lattice spanned by (2,0,0,1),(0,2,0,1),(0,0,2,1),(0,0,0,2) plus noise rows
    std::vector<Vec4z> rows = {{Int(2), Int(0), Int(0), Int(1)},
                               {Int(0), Int(2), Int(0), Int(1)},
                               {Int(0), Int(0), Int(2), Int(1)},
                               {Int(0), Int(0), Int(0), Int(2)},
                               {Int(2), Int(2), Int(0), Int(2)}};
    Lattice4 L = Lattice4::from_rows(rows);
    CHECK(L.index() == 16);
    CHECK(L.contains({Int(2), Int(0), Int(0), Int(1)}));
    CHECK(L.contains({Int(2), Int(2), Int(2), Int(-1)}));
    CHECK_FALSE(L.contains({Int(1), Int(0), Int(0), Int(0)}));
    // (7,1,2,9) = (5,1,0,7) + row0 + row2
    CHECK(L.reduce({Int(5), Int(1), Int(0), Int(7)}) == L.reduce({Int(7), Int(1), Int(2), Int(9)}));
    CHECK_FALSE(L.reduce({Int(5), Int(1), Int(0), Int(7)}) ==
                L.reduce({Int(3), Int(3), Int(2), Int(9)}));

    // generator order must not matter
    std::vector<Vec4z> shuffled(rows.rbegin(), rows.rend());
    CHECK(Lattice4::from_rows(shuffled) == L);

    CHECK_THROWS_AS(Lattice4::from_rows({{Int(1), Int(0), Int(0), Int(0)}}), internal_error);
}

TEST_CASE("lattice equality for differently presented ideals") {
    const EichlerOrderData& O = order_lookup(2, 1);
    // 2O = (2u)O for any unit u
    Lattice4 twoO = right_ideal_lattice(O, {quat(2)});
    Quaternion omega = quat(ratq(1, 2), ratq(1, 2), ratq(1, 2), ratq(1, 2));
    CHECK(right_ideal_lattice(O, {scale(Rat(2), omega)}) == twoO);
    CHECK(right_ideal_lattice(O, {quat(0, 2, 0, 0)}) == twoO);
    CHECK(twoO.index() == 16);  // [O : 2O] = 2^4
}

namespace {

// independent box-scan count of integer vectors with v^T G v == value
long brute_force_count(const Mat4q& G, long value, long box) {
    long count = 0;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b)
            for (long c = -box; c <= box; ++c)
                for (long d = -box; d <= box; ++d) {
                    Vec4q v{Rat(a), Rat(b), Rat(c), Rat(d)};
                    if (dot(vec_mat(v, G), v) == value) ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("enumerate_norm agrees with an independent box scan") {
    const EichlerOrderData& O21 = order_lookup(2, 1);
    // Hurwitz order: 24 units, 24 vectors of norm 2
    CHECK(enumerate_norm(O21.gram, Rat(1)).size() == 24);
    CHECK(enumerate_norm(O21.gram, Rat(2)).size() == 24);
    for (long v = 1; v <= 6; ++v)
        CHECK(static_cast<long>(enumerate_norm(O21.gram, Rat(v)).size()) ==
              brute_force_count(O21.gram, v, 4));

    const EichlerOrderData& O32 = order_lookup(3, 2);
    for (long v = 1; v <= 6; ++v)
        CHECK(static_cast<long>(enumerate_norm(O32.gram, Rat(v)).size()) ==
              brute_force_count(O32.gram, v, 5));
}

TEST_CASE("shifted enumeration agrees with a box scan") {
    const EichlerOrderData& O = order_lookup(3, 2);
    Vec4q shift{ratq(1, 2), ratq(-1, 3), Rat(0), ratq(2, 5)};
    // pick a value that is certainly attained
    Vec4q probe{Rat(1) + shift[0], Rat(2) + shift[1], Rat(-1) + shift[2], Rat(0) + shift[3]};
    Rat value = dot(vec_mat(probe, O.gram), probe);
    auto sols = enumerate_quadric(O.gram, shift, value);
    CHECK(!sols.empty());
    long brute = 0;
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b)
            for (long c = -8; c <= 8; ++c)
                for (long d = -8; d <= 8; ++d) {
                    Vec4q v{Rat(a) + shift[0], Rat(b) + shift[1], Rat(c) + shift[2],
                            Rat(d) + shift[3]};
                    if (dot(vec_mat(v, O.gram), v) == value) ++brute;
                }
    CHECK(static_cast<long>(sols.size()) == brute);
    for (const Vec4z& w : sols) {
        Vec4q v = to_rat(w) + shift;
        CHECK(dot(vec_mat(v, O.gram), v) == value);
    }
    // empty result for unrepresentable values
    CHECK(enumerate_quadric(O.gram, shift, ratq(1, 7)).empty());
}
