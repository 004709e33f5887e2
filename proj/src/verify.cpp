#include "annihil/verify.hpp"

#include "annihil/basis.hpp"
#include "annihil/delta0.hpp"
#include "annihil/element_io.hpp"
#include "annihil/random.hpp"
#include "annihil/steenrod.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace annihil {

namespace {

constexpr std::array<std::string_view, 9> kSuites = {
    "action-oracle", "instability", "sq1-differential", "ker-eq-im", "S0",
    "recurrence",    "reduction-formula", "transduction", "adem-spot",
};

std::string cell(int s, int d)
{
    return "(" + std::to_string(s) + "," + std::to_string(d) + ")";
}

class Tally
{
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    /// Records one check; keeps the first failure message.
    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = describe();
        }
    }

    SuiteResult finish(std::string summary)
    {
        if (result_.passed)
            result_.detail = std::move(summary);
        return std::move(result_);
    }

private:
    SuiteResult result_;
};

/* The Cartan recursion taken literally, peeling the first generator and
 * trying every split of k, with no instability pruning. */
Element naive_sq(const Monomial& m, int k)
{
    if (m.is_unit())
        return k == 0 ? Element::unit() : Element{};
    auto idx = m.indices();
    const Monomial rest(std::vector<int>(idx.begin() + 1, idx.end()));
    Element total;
    for (int j = 0; j <= k; ++j) {
        Element head = sq_generator(idx[0], j);
        if (!head.is_zero())
            total += head * naive_sq(rest, k - j);
    }
    return total;
}

/* Calls fn(x, d) for every basis monomial x of degree 1..d_max and length
 * 1..min(d, s_max). */
template <class Fn>
void for_full_bases(int s_max, int d_max, Fn&& fn)
{
    for (int d = 1; d <= d_max; ++d)
        for (int s = 1; s <= std::min(d, s_max); ++s)
            for (const auto& x : enumerate_basis(s, d).monomials)
                fn(x, d);
}

SuiteResult action_oracle(const SuiteBounds& b)
{
    const int m_max = b.d_max.value_or(32);
    const int k_max = std::max(m_max / 2, 16);
    Tally t("action-oracle");

    // Pascal's triangle mod 2 gives C(n,k) for the cohomology action
    // Sq^k x^n = C(n,k) x^{n+k}; its transpose is the homology action.
    std::vector<std::vector<int>> pascal(static_cast<std::size_t>(m_max + 1));
    for (int n = 0; n <= m_max; ++n) {
        pascal[n].assign(static_cast<std::size_t>(n + 1), 1);
        for (int r = 1; r < n; ++r)
            pascal[n][r] = (pascal[n - 1][r - 1] + pascal[n - 1][r]) % 2;
    }
    auto parity = [&](int n, int r) { return r >= 0 && r <= n ? pascal[n][r] : 0; };

    for (int m = 1; m <= m_max; ++m)
        for (int k = 0; k <= k_max; ++k) {
            std::vector<Monomial> expected;
            for (int n = 1; n + k <= m; ++n)
                if (n + k == m && parity(n, k))
                    expected.push_back(Monomial::generator(n));
            const Element want = Element::sum_of(std::move(expected));
            const Element got = sq_generator(m, k);
            t.check(got == want, [&] {
                return "(g_" + std::to_string(m) + ")Sq^" + std::to_string(k) + " = " + to_string(got) +
                       ", transpose of the cohomology action gives " + to_string(want);
            });
        }
    return t.finish("generators up to " + std::to_string(m_max) + ", squares up to " + std::to_string(k_max));
}

SuiteResult instability(const SuiteBounds& b)
{
    const int d_max = b.d_max.value_or(16);
    Tally t("instability");
    for_full_bases(b.s_max.value_or(d_max), d_max, [&](const Monomial& x, int d) {
        for (int k = d / 2 + 1; k <= d; ++k) {
            const bool ok = sq(x, k).is_zero() && naive_sq(x, k).is_zero();
            t.check(ok, [&] { return "(" + to_string(x) + ")Sq^" + std::to_string(k) + " != 0"; });
        }
    });
    return t.finish("full bases up to degree " + std::to_string(d_max));
}

SuiteResult sq1_differential(const SuiteBounds& b)
{
    const int d_max = b.d_max.value_or(16);
    Tally t("sq1-differential");
    for_full_bases(b.s_max.value_or(d_max), d_max, [&](const Monomial& x, int) {
        t.check(sq(sq(x, 1), 1).is_zero(), [&] { return "(" + to_string(x) + ")Sq^1Sq^1 != 0"; });
    });
    for (int d = 2; d <= d_max; ++d)
        for (int s = 1; s <= std::min(d - 1, b.s_max.value_or(d_max)); ++s) {
            const MatrixGF2 composite = sq_matrix(s, d, 1) * sq_matrix(s, d + 1, 1);
            t.check(composite == MatrixGF2(composite.rows(), composite.cols()),
                    [&] { return "matrix composite of Sq^1 nonzero at " + cell(s, d + 1); });
        }
    return t.finish("full bases up to degree " + std::to_string(d_max));
}

SuiteResult adem_spot(const SuiteBounds& b)
{
    const int d_max = b.d_max.value_or(12);
    Tally t("adem-spot");
    for_full_bases(b.s_max.value_or(d_max), d_max, [&](const Monomial& x, int) {
        const Element once = sq(x, 1);
        t.check(sq(once, 2) == naive_sq(x, 3) && sq(x, 3) == naive_sq(x, 3),
                [&] { return "(" + to_string(x) + ")Sq^1Sq^2 != (" + to_string(x) + ")Sq^3"; });
        t.check(sq(once, 1).is_zero(), [&] { return "(" + to_string(x) + ")Sq^1Sq^1 != 0"; });
    });
    return t.finish("full bases up to degree " + std::to_string(d_max));
}

SuiteResult ker_eq_im(const SuiteBounds& b, BasisCache& cache)
{
    const int s_max = b.s_max.value_or(4);
    const int d_max = b.d_max.value_or(20);
    Tally t("ker-eq-im");
    for (int s = 1; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d)
            t.check(cache.delta(0, s, d) == image_sq1_basis(s, d),
                    [&] { return "ker Sq^1 != im Sq^1 at " + cell(s, d); });
    return t.finish("1 <= s <= " + std::to_string(s_max) + ", d <= " + std::to_string(d_max));
}

SuiteResult s0(const SuiteBounds& b, BasisCache& cache)
{
    const int s_max = b.s_max.value_or(4);
    const int d_max = b.d_max.value_or(17);
    Tally t("S0");
    const S0Report report = verify_S0(s_max, d_max, cache);
    for (const auto& c : report.cells)
        t.check(c.pass, [&] {
            return "S0 check fails at " + cell(c.s, c.d) + ": sigmas " + std::to_string(c.sigma_count) + " (eta " +
                   std::to_string(c.eta) + "), kernel " + std::to_string(c.kernel_dim) + ", word span " +
                   std::to_string(c.word_span_dim) + ", c " + std::to_string(c.c);
        });
    return t.finish("s <= " + std::to_string(s_max) + ", d <= " + std::to_string(d_max));
}

SuiteResult recurrence(const SuiteBounds& b, BasisCache& cache)
{
    const int s_max = b.s_max.value_or(4);
    const int d_max = b.d_max.value_or(20);
    Tally t("recurrence");
    const HilbertTable c = c_table(s_max, d_max);
    for (int s = 0; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d) {
            const auto dim = cache.delta(0, s, d).dimension();
            t.check(dim == c.at(s, d), [&] {
                return "dim ker Sq^1 = " + std::to_string(dim) + " but c = " + std::to_string(c.at(s, d)) + " at " +
                       cell(s, d);
            });
        }
    for (int s = 1; s <= std::min(3, s_max); ++s)
        for (int d = 0; d <= d_max; ++d)
            t.check(closed_c(s, d) == c.at(s, d), [&] { return "closed form differs from recurrence at " + cell(s, d); });
    return t.finish("s <= " + std::to_string(s_max) + ", d <= " + std::to_string(d_max));
}

SuiteResult reduction_formula(const SuiteBounds& b)
{
    const int s_max = b.s_max.value_or(6);
    const int d_max = b.d_max.value_or(30);
    Tally t("reduction-formula");
    const HilbertTable c = c_table(s_max, d_max + 1);
    for (int s = 1; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d)
            t.check(c.at(s, d) + c.at(s, d + 1) == binomial(d, s - 1),
                    [&] { return "c_{s,d} + c_{s,d+1} != C(d, s-1) at " + cell(s, d); });
    return t.finish("1 <= s <= " + std::to_string(s_max) + ", d <= " + std::to_string(d_max));
}

SuiteResult transduction(const SuiteBounds& b)
{
    Tally t("transduction");
    Rng rng(b.seed);
    std::bernoulli_distribution coin(0.5);

    for (int trial = 0; trial < 1000; ++trial) {
        const Element a = random_element(rng, random_bidegree(rng, 0, 5, 4));
        Monomial mu;
        if (!a.is_zero() && coin(rng)) {
            // A suffix of one of the terms, so the cofactor is nonzero.
            std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
            const Monomial& term = a.terms()[pick(rng)];
            if (term.length() == 0)
                mu = Monomial{1};
            else {
                std::uniform_int_distribution<int> cut(0, term.length() - 1);
                auto idx = term.indices();
                mu = Monomial(std::vector<int>(idx.begin() + cut(rng), idx.end()));
            }
        }
        else
            mu = random_monomial(rng, random_bidegree(rng, 1, 3, 3));

        const Element star = transduce(a, mu);
        const Element rest = a + star * Element(mu);
        bool rest_ok = true;
        for (const auto& m : rest.terms())
            rest_ok = rest_ok && !m.ends_with(mu);
        t.check(rest_ok, [&] { return "a = a0 + a* mu fails for a = " + to_string(a) + ", mu = " + to_string(mu); });

        // b of bidegree >= mu in (length, degree) order.
        const Element left = random_element(rng, random_bidegree(rng, 0, 3, 3));
        const Element c = random_element(rng, random_bidegree(rng, 0, 2, 2));
        const Element cmu = c * Element(mu);
        const Element b_elem = cmu + random_element(rng, cmu.is_zero() ? mu.bidegree() : cmu.bidegree());
        t.check(transduce(left * b_elem, mu) == left * transduce(b_elem, mu), [&] {
            return "(ab)* != a b* for a = " + to_string(left) + ", b = " + to_string(b_elem) + ", mu = " + to_string(mu);
        });
    }

    std::uniform_int_distribution<int> terms(2, 4);
    for (int trial = 0; trial < 100; ++trial) {
        // sum_{i<n} a_i (c_i b) + (sum_{i<n} a_i c_i) b = 0
        const int n = terms(rng);
        const Element base = random_nonzero_element(rng, random_bidegree(rng, 1, 3, 3));
        std::vector<std::pair<Element, Element>> pairs;
        Element last;
        for (int i = 0; i + 1 < n; ++i) {
            const Element a = random_element(rng, random_bidegree(rng, 0, 3, 3));
            const Element c = random_nonzero_element(rng, random_bidegree(rng, 0, 2, 3));
            pairs.emplace_back(a, c * base);
            last += a * c;
        }
        pairs.emplace_back(last, base);
        std::shuffle(pairs.begin(), pairs.end(), rng);

        const Resolution res = resolve_relation(pairs);
        Element rebuilt;
        for (const auto& [i, d] : res.cofactors)
            rebuilt += pairs[i].first * d;
        t.check(rebuilt == pairs[res.index].first && res.cofactors.size() + 1 == pairs.size(),
                [&] { return "resolve_relation output does not re-multiply on trial " + std::to_string(trial); });
    }
    return t.finish("1000 random (a, mu) pairs, 100 constructed relations");
}

}  // namespace

std::span<const std::string_view> suite_names()
{
    return kSuites;
}

SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds, BasisCache& cache)
{
    if (name == "action-oracle")
        return action_oracle(bounds);
    if (name == "instability")
        return instability(bounds);
    if (name == "sq1-differential")
        return sq1_differential(bounds);
    if (name == "ker-eq-im")
        return ker_eq_im(bounds, cache);
    if (name == "S0")
        return s0(bounds, cache);
    if (name == "recurrence")
        return recurrence(bounds, cache);
    if (name == "reduction-formula")
        return reduction_formula(bounds);
    if (name == "transduction")
        return transduction(bounds);
    if (name == "adem-spot")
        return adem_spot(bounds);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace annihil
