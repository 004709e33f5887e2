#include "annihil/basis.hpp"
#include "annihil/random.hpp"
#include "annihil/steenrod.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace annihil;

namespace {

// Cohomology side: Sq^k x^n = C(n,k) x^{n+k} in F_2[x], with C from Pascal's
// triangle. The homology action is its transpose:
// (g_m)Sq^k = sum_n <Sq^k x^n, g_m> g_n, and only n = m - k can contribute.
std::vector<std::vector<int>> pascal_mod2(int n_max)
{
    std::vector<std::vector<int>> c(n_max + 1, std::vector<int>(n_max + 1, 0));
    for (int n = 0; n <= n_max; ++n) {
        c[n][0] = 1;
        for (int r = 1; r <= n; ++r)
            c[n][r] = (c[n - 1][r - 1] + c[n - 1][r]) % 2;
    }
    return c;
}

Element transposed_action(int m, int k, const std::vector<std::vector<int>>& c)
{
    Element out;
    for (int n = 1; n <= m; ++n)
        if (n + k == m && c[n][k])
            out += Monomial::generator(n);
    return out;
}

// Cartan recursion peeling the first index, with no pruning.
Element naive_sq(const Monomial& m, int k)
{
    if (m.is_unit())
        return k == 0 ? Element::unit() : Element{};
    const Monomial head = m.prefix(1);
    const std::vector<int> rest_idx(m.indices().begin() + 1, m.indices().end());
    const Monomial rest(rest_idx);
    Element out;
    for (int j = 0; j <= k; ++j)
        out += sq_generator(head[0], j) * naive_sq(rest, k - j);
    return out;
}

Element random_mixed(Rng& rng)
{
    Element a;
    for (int i = 0; i < 2; ++i)
        a += random_element(rng, random_bidegree(rng, 0, 3, 5), 4);
    return a;
}

}  // namespace

TEST_CASE("sq_generator examples")
{
    CHECK(sq_generator(2, 1) == Element(Monomial{1}));
    CHECK(sq_generator(3, 1).is_zero());
    for (int m = 0; m < 10; ++m)
        CHECK(sq_generator(2 * m + 2, 1) == Element(Monomial{2 * m + 1}));
    CHECK(sq_generator(7, 0) == Element(Monomial{7}));
    CHECK(sq_generator(4, 4).is_zero());
    CHECK_THROWS_AS(sq_generator(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sq_generator(3, -1), std::invalid_argument);
}

TEST_CASE("sq_generator is the transpose of the cohomology action")
{
    const auto c = pascal_mod2(64);
    for (int m = 1; m <= 32; ++m)
        for (int k = 0; k <= 16; ++k)
            CHECK(sq_generator(m, k) == transposed_action(m, k, c));
}

TEST_CASE("sq examples")
{
    CHECK(sq(Monomial{2, 2}, 1) == Element{Monomial{1, 2}, Monomial{2, 1}});
    const Element a{Monomial{3, 1}, Monomial{5}};
    CHECK(sq(a, 0) == a);
    CHECK(sq(Monomial{}, 1).is_zero());
    CHECK(sq(Monomial{}, 0) == Element::unit());
    const std::vector<int> ms{0, 3, 1, 2};
    std::vector<int> word;
    for (int m : ms)
        word.push_back(2 * m + 2);
    Element expected;
    for (std::size_t j = 0; j < word.size(); ++j) {
        std::vector<int> w = word;
        --w[j];
        expected += Monomial(w);
    }
    CHECK(sq(Monomial(word), 1) == expected);
}

TEST_CASE("sq agrees with the unpruned Cartan recursion")
{
    for (int d = 0; d <= 9; ++d)
        for (int s = 0; s <= d; ++s)
            for (const auto& m : enumerate_basis(s, d).monomials)
                for (int k = 0; k <= d; ++k)
                    CHECK(sq(m, k) == naive_sq(m, k));
}

TEST_CASE("Cartan bilinearity")
{
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Element a = random_mixed(rng), b = random_mixed(rng);
        const int k = static_cast<int>(rng() % 9);
        Element rhs;
        for (int i = 0; i <= k; ++i)
            rhs += sq(a, i) * sq(b, k - i);
        CHECK(sq(a * b, k) == rhs);
        CHECK(sq(a + b, k) == sq(a, k) + sq(b, k));
    }
}

TEST_CASE("instability and Sq^1 Sq^1 = 0 on full bases")
{
    for (int d = 0; d <= 12; ++d)
        for (int s = 0; s <= d; ++s)
            for (const auto& m : enumerate_basis(s, d).monomials) {
                for (int k = d / 2 + 1; k <= d + 1; ++k)
                    CHECK(sq(m, k).is_zero());
                CHECK(sq(sq(m, 1), 1).is_zero());
            }
}

TEST_CASE("sq_matrix examples")
{
    CHECK(sq_matrix(1, 2, 1) == MatrixGF2{{1}});
    CHECK(sq_matrix(1, 3, 1) == MatrixGF2{{0}});
    const MatrixGF2 empty = sq_matrix(2, 2, 1);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 1);
    // (2,3) -> (2,2): [1,2] -> [1,1], [2,1] -> [1,1].
    CHECK(sq_matrix(2, 3, 1) == MatrixGF2{{1, 1}});
}

TEST_CASE("sq_matrix columns are images, and Sq^1 Sq^1 = 0 as matrices")
{
    for (int s = 1; s <= 4; ++s)
        for (int d = s; d <= 12; ++d) {
            const MatrixGF2 m = sq_matrix(s, d, 1);
            const auto basis = enumerate_basis(s, d).monomials;
            for (std::size_t c = 0; c < basis.size(); ++c) {
                Element col;
                for (std::size_t r = 0; r < m.rows(); ++r)
                    if (m.get(r, c))
                        col += basis_monomial({s, d - 1}, r);
                CHECK(col == sq(basis[c], 1));
            }
            const MatrixGF2 twice = m * sq_matrix(s, d + 1, 1);
            CHECK(twice == MatrixGF2(twice.rows(), twice.cols()));
        }
}

TEST_CASE("Adem spot checks on full bases")
{
    // Sq^1 Sq^2 = Sq^3 and Sq^2 Sq^2 = Sq^3 Sq^1, acting on the right:
    // (x)(uv) = ((x)u)v.
    for (int d = 0; d <= 10; ++d)
        for (int s = 0; s <= d; ++s)
            for (const auto& m : enumerate_basis(s, d).monomials) {
                CHECK(sq(sq(m, 1), 2) == naive_sq(m, 3));
                CHECK(sq(sq(m, 2), 2) == sq(naive_sq(m, 3), 1));
            }
}
