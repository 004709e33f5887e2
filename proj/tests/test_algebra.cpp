#include "annihil/algebra.hpp"
#include "annihil/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace annihil;

namespace {

// Independent model: an element is a std::set of index vectors.
using Model = std::set<std::vector<int>>;

Model model_of(const Element& a)
{
    Model out;
    for (const auto& m : a.terms())
        out.insert({m.indices().begin(), m.indices().end()});
    return out;
}

Model model_product(const Model& a, const Model& b)
{
    Model out;
    for (const auto& x : a)
        for (const auto& y : b) {
            std::vector<int> w = x;
            w.insert(w.end(), y.begin(), y.end());
            if (!out.insert(w).second)
                out.erase(w);
        }
    return out;
}

Element random_small(Rng& rng)
{
    Element a;
    for (const auto& [s, d] : {Bidegree{0, 0}, random_bidegree(rng, 1, 3, 3), random_bidegree(rng, 1, 3, 3)})
        a += random_element(rng, {s, d}, 4);
    return a;
}

}  // namespace

TEST_CASE("monomial basics")
{
    const Monomial m{1, 2, 3};
    CHECK(m.length() == 3);
    CHECK(m.degree() == 6);
    CHECK(m.bidegree() == Bidegree{3, 6});
    CHECK(Monomial{}.is_unit());
    CHECK(Monomial{}.bidegree() == Bidegree{0, 0});
    CHECK_THROWS_AS(Monomial({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Monomial(std::vector<int>{-2}), std::invalid_argument);
    CHECK(m.ends_with(Monomial{2, 3}));
    CHECK(m.ends_with(Monomial{}));
    CHECK_FALSE(m.ends_with(Monomial{1, 2}));
    CHECK(m.prefix(1) == Monomial{1});
}

TEST_CASE("canonical order: length, degree, lex")
{
    CHECK(Monomial{} < Monomial{1});
    CHECK(Monomial{5} < Monomial{1, 1});
    CHECK(Monomial{1, 2} < Monomial{2, 1});
    CHECK(Monomial{2, 1} < Monomial{1, 3});
}

TEST_CASE("multiply examples")
{
    CHECK(multiply(Monomial{1}, Monomial{2}) == Element(Monomial{1, 2}));
    CHECK(multiply(Element::unit(), Monomial{3, 1}) == Element(Monomial{3, 1}));
    const Element x{Monomial{1}, Monomial{2}};
    CHECK(x * x == Element{Monomial{1, 1}, Monomial{1, 2}, Monomial{2, 1}, Monomial{2, 2}});
    CHECK(x * Element{} == Element{});
}

TEST_CASE("element sums cancel in pairs")
{
    CHECK(Element::sum_of({Monomial{1}, Monomial{1}, Monomial{2}}) == Element(Monomial{2}));
    CHECK(Element{Monomial{3}, Monomial{3}}.is_zero());
    Element a{Monomial{1, 2}, Monomial{4}};
    CHECK(a.contains(Monomial{4}));
    CHECK_FALSE(a.contains(Monomial{2, 1}));
    CHECK_FALSE(a.is_homogeneous());
}

TEST_CASE("bidegree_components examples")
{
    const Element a{Monomial{1, 2}, Monomial{2, 1}, Monomial{3}};
    const auto parts = bidegree_components(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({2, 3}) == Element{Monomial{1, 2}, Monomial{2, 1}});
    CHECK(parts.at({1, 3}) == Element(Monomial{3}));
    CHECK(bidegree_components(Element{}).empty());
    const auto single = bidegree_components(Monomial{5});
    REQUIRE(single.size() == 1);
    CHECK(single.at({1, 5}) == Element(Monomial{5}));
}

TEST_CASE("weight examples")
{
    CHECK(weight(Monomial{1, 2, 3}) == 2);
    CHECK(weight(Monomial{2, 4, 6}) == 0);
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2)
            CHECK(weight(Monomial{2 * m1 + 1, 2 * m2 + 2, 2}) == 1);
}

TEST_CASE("weight_component examples")
{
    const Element a{Monomial{1, 2}, Monomial{2, 2}};
    CHECK(weight_component(a, 1) == Element(Monomial{1, 2}));
    CHECK(weight_component(a, 0) == Element(Monomial{2, 2}));
    CHECK(weight_component(a, 2).is_zero());
}

TEST_CASE("transduce examples")
{
    const Monomial mu{1, 2};
    CHECK(transduce(Monomial{1, 2, 1, 2}, mu) == Element(Monomial{1, 2}));
    CHECK(transduce(Monomial{2, 1}, mu).is_zero());
    CHECK(transduce(Element{Monomial{1, 2}, Monomial{3, 1, 2}, Monomial{2, 1}}, mu) ==
          Element{Monomial{}, Monomial{3}});
    CHECK_THROWS_AS(transduce(Monomial{1}, Monomial{}), std::invalid_argument);
}

TEST_CASE("resolve_relation examples")
{
    SUBCASE("least bidegree is resolved")
    {
        const std::vector<std::pair<Element, Element>> pairs{{Monomial{1}, Monomial{1, 1, 2}},
                                                             {Monomial{1, 1}, Monomial{1, 2}}};
        const Resolution r = resolve_relation(pairs);
        CHECK(r.index == 1);
        REQUIRE(r.cofactors.size() == 1);
        CHECK(r.cofactors.at(0) == Element(Monomial{1}));
        CHECK(pairs[0].first * r.cofactors.at(0) == pairs[1].first);
    }
    SUBCASE("a repeated pair: ties go to the largest index")
    {
        const Element a{Monomial{2}, Monomial{1, 1}};
        const Element b{Monomial{3, 1}};
        const std::vector<std::pair<Element, Element>> pairs{{a, b}, {a, b}};
        const Resolution r = resolve_relation(pairs);
        CHECK(r.index == 1);
        CHECK(r.cofactors.at(0) == Element::unit());
    }
    SUBCASE("errors")
    {
        const std::vector<std::pair<Element, Element>> nonzero{{Monomial{1}, Monomial{2}}, {Monomial{2}, Monomial{1}}};
        CHECK_THROWS_AS(resolve_relation(nonzero), std::invalid_argument);
        const std::vector<std::pair<Element, Element>> zero_b{{Monomial{1}, Element{}}};
        CHECK_THROWS_AS(resolve_relation(zero_b), std::invalid_argument);
        CHECK_THROWS_AS(resolve_relation({}), std::invalid_argument);
    }
}

TEST_CASE("ring axioms on random elements")
{
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Element a = random_small(rng), b = random_small(rng), c = random_small(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(Element::unit() * a == a);
        CHECK(a * Element::unit() == a);
        CHECK((a + a).is_zero());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(model_of(a * b) == model_product(model_of(a), model_of(b)));
    }
}

TEST_CASE("bidegrees and weights add under products")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Bidegree p = random_bidegree(rng, 0, 4, 5), q = random_bidegree(rng, 0, 4, 5);
        const Element a = random_nonzero_element(rng, p), b = random_nonzero_element(rng, q);
        const Element ab = a * b;
        REQUIRE(ab.is_homogeneous());
        CHECK(ab.bidegree() == p + q);
        const Monomial m = random_monomial(rng, p), n = random_monomial(rng, q);
        CHECK(weight(m * n) == weight(m) + weight(n));
    }
}

TEST_CASE("weight components partition and multiply")
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Element a = random_small(rng);
        Element total;
        for (int k = 0; k <= 6; ++k)
            total += weight_component(a, k);
        CHECK(total == a);

        const Bidegree p = random_bidegree(rng, 1, 3, 4), q = random_bidegree(rng, 1, 3, 4);
        const int k = static_cast<int>(rng() % 3), l = static_cast<int>(rng() % 3);
        const Element x = weight_component(random_element(rng, p, 12), k);
        const Element y = weight_component(random_element(rng, q, 12), l);
        CHECK(weight_component(x * y, k + l) == x * y);
    }
}

TEST_CASE("transduction reconstruction and multiplicativity")
{
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const Element a = random_small(rng);
        const Monomial mu = random_monomial(rng, random_bidegree(rng, 1, 2, 2));
        const Element star = transduce(a, mu);
        const Element a0 = a + star * Element(mu);
        for (const auto& t : a0.terms())
            CHECK_FALSE(t.ends_with(mu));

        const Bidegree q = random_bidegree(rng, mu.length(), mu.length() + 1, 3);
        const Element x = random_element(rng, random_bidegree(rng, 0, 2, 2));
        const Element y = random_element(rng, q);
        CHECK(transduce(x * y, mu) == x * transduce(y, mu));
    }
}

TEST_CASE("resolve_relation on constructed relations")
{
    // sum_i a_i (c_i b) + (sum_i a_i c_i) b = 0.
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const Element b = random_nonzero_element(rng, random_bidegree(rng, 1, 2, 2));
        std::vector<std::pair<Element, Element>> pairs;
        Element tail;
        const int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            const Element a = random_nonzero_element(rng, random_bidegree(rng, 1, 2, 2));
            const Element c = random_nonzero_element(rng, random_bidegree(rng, 0, 2, 2));
            pairs.emplace_back(a, c * b);
            tail += a * c;
        }
        if (tail.is_zero())
            continue;
        pairs.emplace_back(tail, b);
        std::shuffle(pairs.begin(), pairs.end(), rng);

        const Resolution r = resolve_relation(pairs);
        Element rhs;
        for (const auto& [i, d] : r.cofactors)
            rhs += pairs[i].first * d;
        CHECK(rhs == pairs[r.index].first);
        CHECK(r.cofactors.size() == pairs.size() - 1);
    }
}
