#include "annihil/annihilated.hpp"
#include "annihil/basis.hpp"
#include "annihil/delta0.hpp"
#include "annihil/steenrod.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace annihil;

namespace {

// Pascal's triangle, independent of binomial().
std::uint64_t choose(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < next.size(); ++j)
            next[j] = (j < row.size() ? row[j] : 0) + (j ? row[j - 1] : 0);
        row = next;
    }
    return row[r];
}

std::uint64_t stated_closed_form(int s, int d)
{
    const bool even = d % 2 == 0;
    switch (s) {
    case 1: return even ? 0 : 1;
    case 2: return even ? d / 2 : (d - 1) / 2;
    default: return even ? std::uint64_t(d) * (d - 2) / 4 : std::uint64_t(d - 1) * (d - 1) / 4;
    }
}

}  // namespace

TEST_CASE("sigma examples")
{
    CHECK(sigma(std::vector<int>{0}) == Element(Monomial{1}));
    CHECK(sigma(std::vector<int>{0, 0}) == Element{Monomial{1, 2}, Monomial{2, 1}});
    CHECK(sigma(std::vector<int>{1, 0}) == Element{Monomial{3, 2}, Monomial{4, 1}});
    CHECK_THROWS_AS(sigma(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(sigma(std::vector<int>{1, -1}), std::invalid_argument);

    const SigmaDescriptor desc{{2, 0, 1}};
    CHECK(desc.bidegree() == Bidegree{3, 11});
    CHECK(desc.marker() == Monomial{5, 2, 4});
    CHECK(sigma(desc).contains(desc.marker()));
}

TEST_CASE("enumerate_sigma examples")
{
    const auto one = enumerate_sigma(1, 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].ms == std::vector<int>{2});
    const auto two = enumerate_sigma(2, 5);
    REQUIRE(two.size() == 2);
    CHECK(two[0].ms == std::vector<int>{0, 1});
    CHECK(two[1].ms == std::vector<int>{1, 0});
    CHECK(enumerate_sigma(2, 4).empty());
    CHECK(enumerate_sigma(3, 3).empty());
    CHECK(enumerate_sigma(3, 5).size() == 1);
    CHECK(enumerate_sigma(4, 5).empty());
    CHECK_THROWS_AS(enumerate_sigma(0, 3), std::invalid_argument);
}

TEST_CASE("eta examples")
{
    CHECK(eta(1, 7) == 1);
    CHECK(eta(3, 7) == 3);
    CHECK(eta(2, 6) == 0);
    CHECK(eta(4, 5) == 0);
}

TEST_CASE("c_table and closed_c examples")
{
    const HilbertTable c = c_table(3, 10);
    for (int d = 0; d <= 10; ++d)
        CHECK(c.at(1, d) == (d % 2 ? 1u : 0u));
    CHECK(c.at(2, 4) == 2);
    CHECK(c.at(3, 7) == 9);
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(0, 3) == 0);
    CHECK(c.at(2, 0) == 0);

    CHECK(closed_c(2, 7) == 3);
    CHECK(closed_c(3, 6) == 6);
    CHECK(closed_c(1, 0) == 0);
    CHECK_THROWS_AS(closed_c(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(closed_c(0, 8), std::invalid_argument);
}

TEST_CASE("generators lie in ker Sq^1 and in weight one, and their count is eta")
{
    for (int s = 1; s <= 6; ++s)
        for (int d = 0; d <= 25; ++d) {
            const auto descs = enumerate_sigma(s, d);
            CHECK(descs.size() == eta(s, d));
            CHECK(eta(s, d) == (d % 2 ? choose((d - 1) / 2, s - 1) : 0));
            CHECK(std::is_sorted(descs.begin(), descs.end()));
            if (d > 13)
                continue;
            for (const auto& desc : descs) {
                const Element x = sigma(desc);
                CHECK(x.is_homogeneous());
                CHECK(x.bidegree() == desc.bidegree());
                CHECK(sq(x, 1).is_zero());
                CHECK(weight_component(x, 1) == x);
                CHECK(x.contains(desc.marker()));
            }
        }
}

TEST_CASE("recurrence, closed forms and the reduction formula")
{
    const HilbertTable c = c_table(6, 41);
    for (int s = 1; s <= 3; ++s)
        for (int d = 0; d <= 40; ++d) {
            CHECK(closed_c(s, d) == c.at(s, d));
            CHECK(closed_c(s, d) == stated_closed_form(s, d));
        }
    for (int s = 1; s <= 6; ++s)
        for (int d = 0; d <= 30; ++d)
            CHECK(c.at(s, d) + c.at(s, d + 1) == choose(d, s - 1));
}

TEST_CASE("recurrence matches linear algebra")
{
    const HilbertTable c = c_table(4, 20);
    for (int s = 0; s <= 4; ++s)
        for (int d = 0; d <= 20; ++d)
            CHECK(delta_basis(0, s, d).dimension() == c.at(s, d));
}

TEST_CASE("overflow is detected")
{
    CHECK_THROWS_AS(c_table(40, 200), std::overflow_error);
    CHECK_THROWS_AS(checked_add(~std::uint64_t(0), 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(std::uint64_t(1) << 40, std::uint64_t(1) << 40), std::overflow_error);
}

TEST_CASE("sigma words")
{
    const auto words = sigma_words(3, 7);
    CHECK(words[0][0] == std::vector<Element>{Element::unit()});
    // (2,3): only sigma(0,0); sigma(0)sigma(1) has degree 4.
    CHECK(words[2][3] == std::vector<Element>{sigma(std::vector<int>{0, 0})});
    CHECK(words[2][2] == std::vector<Element>{Element(Monomial{1, 1})});
    CHECK(words[1][2].empty());
}

TEST_CASE("verify_S0 examples")
{
    BasisCache cache;
    const S0Report small = verify_S0(2, 5, cache);
    CHECK(small.passed());
    const HilbertTable c = c_table(2, 5);
    for (const auto& cell : small.cells) {
        CHECK(cell.word_span_dim == c.at(cell.s, cell.d));
        CHECK(cell.kernel_dim == cell.c);
        if (cell.s == 2 && cell.d == 3)
            CHECK(cell.word_span_dim == 1);
        if (cell.s == 1 && cell.d == 2) {
            CHECK(cell.sigma_count == 0);
            CHECK(cell.kernel_dim == 0);
            CHECK(cell.pass);
        }
    }
    const S0Report full = verify_S0(4, 17, cache);
    CHECK(full.passed());
    CHECK(full.cells.size() == 5 * 18);
    for (const auto& cell : full.cells) {
        CHECK(cell.sigma_count == cell.eta);
        CHECK(cell.sigmas_annihilated);
        CHECK(cell.sigmas_independent);
        CHECK(cell.words_span_kernel);
    }
}
