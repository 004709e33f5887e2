#pragma once

#include "annihil/algebra.hpp"
#include "annihil/gf2_matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace annihil {

/// A subspace of one graded piece, held as the reduced row-echelon basis of
/// its coordinate rows. Leading monomials strictly increase, so two
/// SubspaceBasis values are equal exactly when the subspaces are.
class SubspaceBasis
{
public:
    SubspaceBasis() : SubspaceBasis(Bidegree{}) {}
    explicit SubspaceBasis(Bidegree ambient);  // the zero subspace

    /// Span of the given coordinate rows.
    static SubspaceBasis from_rows(Bidegree ambient, MatrixGF2 rows);
    /// Span of homogeneous elements; throws std::invalid_argument otherwise.
    static SubspaceBasis span_of(Bidegree ambient, std::span<const Element> vectors);
    static SubspaceBasis whole(Bidegree ambient);

    Bidegree ambient() const { return ambient_; }
    std::size_t dimension() const { return rows_.rows(); }
    std::size_t ambient_dimension() const { return rows_.cols(); }
    const MatrixGF2& rows() const { return rows_; }
    std::vector<Element> vectors() const;

    bool contains(const Element& v) const;
    bool contains(const SubspaceBasis& other) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    Bidegree ambient_;
    MatrixGF2 rows_;
};

std::size_t span_dimension(std::span<const Element> vectors, Bidegree ambient);

/// Throws std::invalid_argument if `v` does not live in the ambient piece of `basis`.
bool member(const Element& v, const SubspaceBasis& basis);

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Canonical complement of `sub` inside `whole`: the vectors of `whole`
/// reduced to vanish on every pivot column of `sub`, in echelon form. Its
/// dimension is dim(whole + sub) - dim(sub).
SubspaceBasis complement_in(const SubspaceBasis& whole, const SubspaceBasis& sub);

}  // namespace annihil
