#pragma once

// Right action of the Steenrod squares on the free algebra.
//
// On generators (g_m)Sq^k = C(m-k, k) g_{m-k}, the transpose of
// Sq^k x^n = C(n, k) x^{n+k} on F_2[x]. Products follow the Cartan formula
// (xy)Sq^k = sum_{i+j=k} (x)Sq^i (y)Sq^j, so on a monomial the square
// distributes k over the positions.

#include "annihil/algebra.hpp"
#include "annihil/gf2_matrix.hpp"

namespace annihil {

/// (g_m)Sq^k. Throws std::invalid_argument if m < 1 or k < 0.
Element sq_generator(int m, int k);

Element sq(const Monomial& m, int k);
Element sq(const Element& a, int k);

/// Matrix of Sq^k from the basis of (s, d) to the basis of (s, d - k).
/// Rows index the target basis and columns the source basis, so the kernel
/// of the matrix is the kernel of the operation; there are no rows when the
/// target piece is zero.
MatrixGF2 sq_matrix(int s, int d, int k);

}  // namespace annihil
