#include "shimura/orders.hpp"

#include <mutex>
#include <sstream>

namespace shimura {

namespace {

struct TableRow {
    long D, N;
    long a, b;
    // basis rows and xi as {1,i,j,k} coordinates, entries num/den
    long basis[4][4][2];
    long xi[4][2];
    long unit_group_order;
};

// Definite Eichler orders with h(D,N)=1 and a distinguished xi satisfying the
// right-unit property with 2 in xi*O. The (2,3) xi and one coefficient of the
// (2,11) basis repair evident misprints in the source data; both corrected
// entries are validated below (closure, reduced discriminant, unit count).
constexpr TableRow kTable[] = {
    {2, 1, -1, -1,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {1, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {0, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {1, 2}, {1, 2}, {1, 2}}},
     {{2, 1}, {0, 1}, {0, 1}, {0, 1}},
     12},
    {2, 3, -1, -1,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {3, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-2, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {-1, 2}, {1, 2}, {1, 2}}},
     {{0, 1}, {1, 1}, {0, 1}, {1, 1}},
     3},
    {2, 9, -1, -1,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {9, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-4, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {-3, 2}, {1, 2}, {1, 2}}},
     {{1, 1}, {0, 1}, {0, 1}, {0, 1}},
     1},
    {2, 11, -1, -1,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {11, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-7, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {-3, 2}, {1, 2}, {1, 2}}},
     {{1, 1}, {0, 1}, {0, 1}, {0, 1}},
     1},
    {3, 1, -1, -3,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {1, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {1, 2}, {1, 2}, {0, 1}},
      {{1, 2}, {0, 1}, {0, 1}, {1, 2}}},
     {{2, 1}, {0, 1}, {0, 1}, {0, 1}},
     6},
    {3, 2, -1, -3,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {2, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-1, 2}, {1, 2}, {0, 1}},
      {{1, 2}, {-1, 1}, {0, 1}, {1, 2}}},
     {{-1, 2}, {-1, 2}, {-1, 2}, {1, 2}},
     2},
    {3, 4, -1, -3,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {4, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-5, 2}, {1, 2}, {0, 1}},
      {{1, 2}, {-3, 1}, {0, 1}, {1, 2}}},
     {{1, 1}, {0, 1}, {0, 1}, {0, 1}},
     1},
    {5, 1, -2, -5,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{1, 2}, {1, 2}, {1, 2}, {0, 1}},
      {{0, 1}, {0, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {1, 4}, {0, 1}, {1, 4}}},
     {{-1, 2}, {1, 2}, {-1, 2}, {0, 1}},
     3},
    {5, 2, -2, -5,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{1, 1}, {1, 1}, {1, 1}, {0, 1}},
      {{-1, 2}, {-1, 2}, {1, 2}, {0, 1}},
      {{0, 1}, {-1, 4}, {-1, 2}, {1, 4}}},
     {{1, 1}, {0, 1}, {0, 1}, {0, 1}},
     1},
    {13, 1, -2, -13,
     {{{1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{1, 2}, {1, 2}, {1, 2}, {0, 1}},
      {{0, 1}, {0, 1}, {1, 1}, {0, 1}},
      {{1, 2}, {1, 4}, {0, 1}, {1, 4}}},
     {{1, 1}, {0, 1}, {0, 1}, {0, 1}},
     1},
};

EichlerOrderData build_row(const TableRow& row) {
    EichlerOrderData O;
    O.algebra = make_algebra(row.a, row.b);
    SHIMURA_CHECK(O.algebra.discriminant == row.D, "table presentation has wrong discriminant");
    O.level = row.N;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) O.basis[i][j] = ratq(row.basis[i][j][0], row.basis[i][j][1]);
    O.basis_inv = mat_inverse(O.basis);
    O.xi = quat(ratq(row.xi[0][0], row.xi[0][1]), ratq(row.xi[1][0], row.xi[1][1]),
                ratq(row.xi[2][0], row.xi[2][1]), ratq(row.xi[3][0], row.xi[3][1]));
    O.unit_group_order = row.unit_group_order;
    for (int i = 0; i < 4; ++i) {
        Quaternion ei{O.basis[i]};
        for (int j = 0; j < 4; ++j) {
            Quaternion ej{O.basis[j]};
            // polarisation of the norm form: B(x,y) = Tr(x * conj(y)) / 2
            O.gram[i][j] = reduced_trace(multiply(ei, conjugate(ej), O.algebra)) / 2;
        }
    }
    return O;
}

void validate_row(const EichlerOrderData& O) {
    SHIMURA_CHECK((O.basis[0] == Vec4q{Rat(1), Rat(0), Rat(0), Rat(0)}),
                  "basis must start with 1");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Quaternion prod = multiply(Quaternion{O.basis[i]}, Quaternion{O.basis[j]}, O.algebra);
            SHIMURA_CHECK(in_order(prod, O), "order basis not closed under multiplication");
        }
    SHIMURA_CHECK(reduced_discriminant(O) == Int(O.D()) * Int(O.N()),
                  "reduced discriminant != D*N");
    SHIMURA_CHECK(in_order(O.xi, O), "xi does not lie in the order");
    Lattice4 xiO = right_ideal_lattice(O, {O.xi});
    SHIMURA_CHECK(xiO.contains(integer_coords(quat(2), O)), "2 not in xi*O");
}

struct Table {
    std::vector<EichlerOrderData> rows;
    Table() {
        for (const TableRow& r : kTable) {
            EichlerOrderData O = build_row(r);
            validate_row(O);
            rows.push_back(std::move(O));
        }
    }
};

const Table& table() {
    static const Table t;
    return t;
}

}  // namespace

const EichlerOrderData& order_lookup(long D, long N) {
    for (const EichlerOrderData& O : table().rows)
        if (O.D() == D && O.N() == N) return O;
    std::ostringstream os;
    if ((D == 2 && N == 5) || (D == 7 && N == 1)) {
        os << "(D,N)=(" << D << "," << N << "): no xi with the right-unit property exists";
        throw unsupported_family(os.str());
    }
    os << "(D,N)=(" << D << "," << N << ") is not an h(D,N)=1 family";
    throw unsupported_family(os.str());
}

const std::vector<std::pair<long, long>>& supported_families() {
    static const std::vector<std::pair<long, long>> fams = [] {
        std::vector<std::pair<long, long>> v;
        for (const TableRow& r : kTable) v.emplace_back(r.D, r.N);
        return v;
    }();
    return fams;
}

Vec4q coords_in_order(const Quaternion& q, const EichlerOrderData& O) {
    return vec_mat(q.c, O.basis_inv);
}

bool in_order(const Quaternion& q, const EichlerOrderData& O) {
    Vec4q c = coords_in_order(q, O);
    for (int k = 0; k < 4; ++k)
        if (!is_integer(c[k])) return false;
    return true;
}

bool is_primitive(const Quaternion& q, const EichlerOrderData& O) {
    Vec4q c = coords_in_order(q, O);
    Int g = 0;
    for (int k = 0; k < 4; ++k) {
        if (!is_integer(c[k])) return false;
        Int gk;
        mpz_gcd(gk.get_mpz_t(), g.get_mpz_t(), c[k].get_num_mpz_t());
        g = gk;
    }
    return g == 1;
}

Quaternion from_order_coords(const EichlerOrderData& O, const Vec4z& coords) {
    return Quaternion{vec_mat(to_rat(coords), O.basis)};
}

Vec4z integer_coords(const Quaternion& q, const EichlerOrderData& O) {
    Vec4q c = coords_in_order(q, O);
    Vec4z out;
    for (int k = 0; k < 4; ++k) {
        SHIMURA_CHECK(is_integer(c[k]), "quaternion is not in the order");
        out[k] = c[k].get_num();
    }
    return out;
}

const Mat4q& normic_form(const EichlerOrderData& O) { return O.gram; }

Int reduced_discriminant(const EichlerOrderData& O) {
    Mat4q T;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) T[i][j] = 2 * O.gram[i][j];  // Tr(e_i conj(e_j))
    Rat det = mat_det(T);
    Rat ad = abs(det);
    SHIMURA_CHECK(is_integer(ad), "trace form determinant is not an integer");
    Int n = ad.get_num();
    SHIMURA_CHECK(is_perfect_square(n), "trace form determinant is not a perfect square");
    return isqrt_floor(n);
}

namespace {
Lattice4 ideal_lattice(const EichlerOrderData& O, const std::vector<Quaternion>& gens,
                       bool right) {
    std::vector<Vec4z> rows;
    rows.reserve(gens.size() * 4);
    for (const Quaternion& g : gens) {
        for (int j = 0; j < 4; ++j) {
            Quaternion ej{O.basis[j]};
            Quaternion prod = right ? multiply(g, ej, O.algebra) : multiply(ej, g, O.algebra);
            rows.push_back(integer_coords(prod, O));
        }
    }
    return Lattice4::from_rows(rows);
}
}  // namespace

Lattice4 right_ideal_lattice(const EichlerOrderData& O, const std::vector<Quaternion>& gens) {
    return ideal_lattice(O, gens, true);
}

Lattice4 left_ideal_lattice(const EichlerOrderData& O, const std::vector<Quaternion>& gens) {
    return ideal_lattice(O, gens, false);
}

bool congruent_mod(const Quaternion& q1, const Quaternion& q2, const EichlerOrderData& O,
                   const Lattice4& L) {
    return L.contains(integer_coords(subtract(q1, q2), O));
}

}  // namespace shimura
