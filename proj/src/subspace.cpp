#include "annihil/subspace.hpp"

#include "annihil/basis.hpp"

#include <stdexcept>
#include <string>

namespace annihil {

namespace {

MatrixGF2 nonzero_rref(MatrixGF2 m)
{
    RrefResult r = rref(std::move(m));
    r.reduced.truncate_rows(r.rank);
    return std::move(r.reduced);
}

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b, const char* what)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument(std::string(what) + ": subspaces live in different bidegrees");
}

}  // namespace

SubspaceBasis::SubspaceBasis(Bidegree ambient)
    : ambient_(ambient), rows_(0, basis_dimension(ambient.s, ambient.d))
{
}

SubspaceBasis SubspaceBasis::from_rows(Bidegree ambient, MatrixGF2 rows)
{
    if (rows.cols() != basis_dimension(ambient.s, ambient.d))
        throw std::invalid_argument("SubspaceBasis: row width does not match the ambient dimension");
    SubspaceBasis b(ambient);
    b.rows_ = nonzero_rref(std::move(rows));
    return b;
}

SubspaceBasis SubspaceBasis::span_of(Bidegree ambient, std::span<const Element> vectors)
{
    return from_rows(ambient, coordinate_matrix(vectors, ambient));
}

SubspaceBasis SubspaceBasis::whole(Bidegree ambient)
{
    SubspaceBasis b(ambient);
    b.rows_ = MatrixGF2::identity(b.rows_.cols());
    return b;
}

std::vector<Element> SubspaceBasis::vectors() const
{
    std::vector<Element> out;
    out.reserve(dimension());
    for (std::size_t r = 0; r < rows_.rows(); ++r)
        out.push_back(from_coordinates(rows_.row(r), ambient_));
    return out;
}

bool SubspaceBasis::contains(const Element& v) const
{
    auto row = coordinates(v, ambient_);
    // Fully reduced rows: clearing each pivot never disturbs another pivot column.
    for (std::size_t r = 0; r < rows_.rows(); ++r) {
        std::size_t p = rows_.leading_column(r);
        if ((row[p / MatrixGF2::kWordBits] >> (p % MatrixGF2::kWordBits)) & 1u) {
            auto src = rows_.row(r);
            for (std::size_t w = 0; w < row.size(); ++w)
                row[w] ^= src[w];
        }
    }
    for (auto w : row)
        if (w)
            return false;
    return true;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const
{
    require_same_ambient(*this, other, "contains");
    return sum(*this, other).dimension() == dimension();
}

std::size_t span_dimension(std::span<const Element> vectors, Bidegree ambient)
{
    return rank(coordinate_matrix(vectors, ambient));
}

bool member(const Element& v, const SubspaceBasis& basis)
{
    return basis.contains(v);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b)
{
    require_same_ambient(a, b, "sum");
    const MatrixGF2 blocks[] = {a.rows(), b.rows()};
    return SubspaceBasis::from_rows(a.ambient(), stack(blocks));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b)
{
    require_same_ambient(a, b, "intersect");
    // Zassenhaus: rows (u | u) for u in a and (v | 0) for v in b. After
    // elimination the rows whose left half vanishes carry a basis of the intersection.
    const std::size_t n = a.ambient_dimension();
    MatrixGF2 joint(a.dimension() + b.dimension(), 2 * n);
    for (std::size_t r = 0; r < a.dimension(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.rows().get(r, c)) {
                joint.set(r, c);
                joint.set(r, n + c);
            }
    for (std::size_t r = 0; r < b.dimension(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (b.rows().get(r, c))
                joint.set(a.dimension() + r, c);

    RrefResult reduced = rref(std::move(joint));
    MatrixGF2 meet(0, n);
    for (std::size_t r = 0; r < reduced.rank; ++r) {
        if (reduced.pivots[r] < n)
            continue;
        MatrixGF2 row(1, n);
        for (std::size_t c = 0; c < n; ++c)
            if (reduced.reduced.get(r, n + c))
                row.set(0, c);
        meet.append_row(row.row(0));
    }
    return SubspaceBasis::from_rows(a.ambient(), std::move(meet));
}

SubspaceBasis complement_in(const SubspaceBasis& whole, const SubspaceBasis& sub)
{
    require_same_ambient(whole, sub, "complement_in");
    MatrixGF2 reduced = whole.rows();
    const MatrixGF2& pivots = sub.rows();
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        auto row = reduced.row(r);
        for (std::size_t i = 0; i < pivots.rows(); ++i) {
            std::size_t p = pivots.leading_column(i);
            if ((row[p / MatrixGF2::kWordBits] >> (p % MatrixGF2::kWordBits)) & 1u) {
                auto src = pivots.row(i);
                for (std::size_t w = 0; w < row.size(); ++w)
                    row[w] ^= src[w];
            }
        }
    }
    return SubspaceBasis::from_rows(whole.ambient(), std::move(reduced));
}

}  // namespace annihil
