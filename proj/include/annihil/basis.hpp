#pragma once

// Monomial bases of the graded pieces: the basis of bidegree (s,d) is the set
// of compositions of d into s positive parts, listed in lex order. Vectors
// in that piece are encoded as bit rows indexed by this order.

#include "annihil/algebra.hpp"
#include "annihil/gf2_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace annihil {

/// Exact binomial coefficient C(n, r); 0 outside 0 <= r <= n.
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(long long n, long long r);

/// Parity of C(n, r) by the submask rule: odd iff r AND (n - r) == 0.
constexpr bool binomial_odd(long long n, long long r)
{
    return r >= 0 && n >= r && (r & (n - r)) == 0;
}

/// Number of compositions of d into s positive parts: C(d-1, s-1), with
/// exactly one composition of 0 into 0 parts.
std::size_t basis_dimension(int s, int d);

struct BasisEnumeration
{
    Bidegree bidegree;
    std::vector<Monomial> monomials;

    std::size_t size() const { return monomials.size(); }
};

BasisEnumeration enumerate_basis(int s, int d);

/// Position of `m` in the lex-ordered basis of its own bidegree, computed
/// combinatorially.
std::size_t basis_index(const Monomial& m);

/// The monomial at position `index` in the basis of (s, d).
Monomial basis_monomial(Bidegree ambient, std::size_t index);

/// Coordinates of a homogeneous element (or zero) in the basis of `ambient`.
/// Throws std::invalid_argument if some term lies in another bidegree.
std::vector<MatrixGF2::Word> coordinates(const Element& a, Bidegree ambient);

/// Inverse of coordinates().
Element from_coordinates(std::span<const MatrixGF2::Word> row, Bidegree ambient);

/// Coordinate rows of `elements`, one per element.
MatrixGF2 coordinate_matrix(std::span<const Element> elements, Bidegree ambient);

}  // namespace annihil
