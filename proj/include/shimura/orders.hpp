#pragma once

#include <vector>

#include "shimura/quaternion.hpp"

namespace shimura {

/// A definite Eichler order O of level N inside H = (a,b/Q) of discriminant D,
/// given by an explicit Z-basis (rows, in {1,i,j,k} coordinates). All ten
/// supported (D,N) pairs have one-sided ideal class number h(D,N) = 1 and carry
/// a distinguished element xi with the right-unit property and 2 in xi*O.
struct EichlerOrderData {
    AlgebraData algebra;
    long level = 0;  // N
    Mat4q basis;     // rows = basis elements; basis[0] is always 1
    Mat4q basis_inv;
    Quaternion xi;
    long unit_group_order = 0;  // #(O^x / Z^x)
    long class_number = 1;
    Mat4q gram;  // Gram matrix of the reduced norm on the order basis

    long D() const { return algebra.discriminant; }
    long N() const { return level; }
};

// The built-in data table. Throws unsupported_family for (2,5) and (7,1)
// ("no xi exists") and for every other (D,N) ("not an h(D,N)=1 family").
// Every returned order has been validated at load time: 1 in O, closure under
// multiplication, reduced discriminant D*N, xi in O with 2 in xi*O.
const EichlerOrderData& order_lookup(long D, long N);

// All ten supported (D,N) pairs, in table order.
const std::vector<std::pair<long, long>>& supported_families();

// Coordinates of q in the order basis (always defined; q lies in O iff all
// four are integers).
Vec4q coords_in_order(const Quaternion& q, const EichlerOrderData& O);
bool in_order(const Quaternion& q, const EichlerOrderData& O);
// gcd of the (integer) order coordinates equals 1
bool is_primitive(const Quaternion& q, const EichlerOrderData& O);
Quaternion from_order_coords(const EichlerOrderData& O, const Vec4z& coords);
Vec4z integer_coords(const Quaternion& q, const EichlerOrderData& O);  // throws if not in O

// Gram matrix G with Nm(sum x_i e_i) = x^T G x; symmetric positive definite.
const Mat4q& normic_form(const EichlerOrderData& O);

// sqrt(|det Tr(e_i * conj(e_j))|), an exact integer for an order.
Int reduced_discriminant(const EichlerOrderData& O);

// Lattice of the right ideal sum_i g_i * O (coordinates in the order basis).
Lattice4 right_ideal_lattice(const EichlerOrderData& O, const std::vector<Quaternion>& gens);
// Lattice of the left ideal sum_i O * g_i.
Lattice4 left_ideal_lattice(const EichlerOrderData& O, const std::vector<Quaternion>& gens);

// q1 == q2 mod the sublattice L (all in order coordinates; q's must be in O)
bool congruent_mod(const Quaternion& q1, const Quaternion& q2, const EichlerOrderData& O,
                   const Lattice4& L);

}  // namespace shimura
