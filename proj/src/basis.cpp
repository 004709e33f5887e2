#include "annihil/basis.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace annihil {

std::uint64_t binomial(long long n, long long r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1), exact at every step.
    unsigned __int128 value = 1;
    for (long long i = 0; i < r; ++i) {
        value = value * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
        if (value > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") overflows");
    }
    return static_cast<std::uint64_t>(value);
}

namespace {

// Compositions of n into p positive parts.
std::uint64_t compositions(long long n, long long p)
{
    if (p == 0)
        return n == 0 ? 1 : 0;
    return binomial(n - 1, p - 1);
}

void enumerate_into(int parts, int total, std::vector<int>& prefix, std::vector<Monomial>& out)
{
    if (parts == 0) {
        if (total == 0)
            out.emplace_back(prefix);
        return;
    }
    // Each remaining part needs at least 1.
    for (int first = 1; first <= total - (parts - 1); ++first) {
        prefix.push_back(first);
        enumerate_into(parts - 1, total - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::size_t basis_dimension(int s, int d)
{
    if (s < 0 || d < 0)
        return 0;
    return static_cast<std::size_t>(compositions(d, s));
}

BasisEnumeration enumerate_basis(int s, int d)
{
    BasisEnumeration result{{s, d}, {}};
    if (s < 0 || d < 0)
        return result;
    result.monomials.reserve(basis_dimension(s, d));
    std::vector<int> prefix;
    enumerate_into(s, d, prefix, result.monomials);
    return result;
}

std::size_t basis_index(const Monomial& m)
{
    std::uint64_t index = 0;
    long long remaining = m.degree();
    long long parts = m.length();
    for (int i : m.indices()) {
        // Compositions whose entry at this position is smaller than i.
        for (int v = 1; v < i; ++v)
            index += compositions(remaining - v, parts - 1);
        remaining -= i;
        --parts;
    }
    return static_cast<std::size_t>(index);
}

Monomial basis_monomial(Bidegree ambient, std::size_t index)
{
    if (index >= basis_dimension(ambient.s, ambient.d))
        throw std::out_of_range("basis_monomial: index out of range");
    std::vector<int> word;
    long long remaining = ambient.d;
    std::uint64_t left = index;
    for (long long parts = ambient.s; parts > 0; --parts) {
        int v = 1;
        while (true) {
            std::uint64_t block = compositions(remaining - v, parts - 1);
            if (left < block)
                break;
            left -= block;
            ++v;
        }
        word.push_back(v);
        remaining -= v;
    }
    return Monomial(std::move(word));
}

std::vector<MatrixGF2::Word> coordinates(const Element& a, Bidegree ambient)
{
    const std::size_t dim = basis_dimension(ambient.s, ambient.d);
    std::vector<MatrixGF2::Word> row((dim + MatrixGF2::kWordBits - 1) / MatrixGF2::kWordBits, 0);
    for (const auto& m : a.terms()) {
        if (m.bidegree() != ambient)
            throw std::invalid_argument("element is not homogeneous of bidegree (" + std::to_string(ambient.s) + "," +
                                        std::to_string(ambient.d) + ")");
        std::size_t i = basis_index(m);
        row[i / MatrixGF2::kWordBits] ^= MatrixGF2::Word(1) << (i % MatrixGF2::kWordBits);
    }
    return row;
}

Element from_coordinates(std::span<const MatrixGF2::Word> row, Bidegree ambient)
{
    std::vector<Monomial> terms;
    for (std::size_t w = 0; w < row.size(); ++w) {
        MatrixGF2::Word bits = row[w];
        while (bits) {
            std::size_t i = w * MatrixGF2::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            terms.push_back(basis_monomial(ambient, i));
            bits &= bits - 1;
        }
    }
    return Element::sum_of(std::move(terms));
}

MatrixGF2 coordinate_matrix(std::span<const Element> elements, Bidegree ambient)
{
    MatrixGF2 m(0, basis_dimension(ambient.s, ambient.d));
    for (const auto& e : elements)
        m.append_row(coordinates(e, ambient));
    return m;
}

}  // namespace annihil
