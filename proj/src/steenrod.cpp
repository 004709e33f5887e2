#include "annihil/steenrod.hpp"

#include "annihil/basis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace annihil {

namespace {

/* Walks positions left to right, giving Sq^j to the current index and the
 * remaining k - j to the suffix. `slack[t]` bounds what positions t.. can
 * absorb (each index i takes at most floor(i/2) by instability). */
void cartan(std::span<const int> word, std::size_t t, int k, const std::vector<int>& slack, std::vector<int>& out,
            std::vector<Monomial>& terms)
{
    if (t == word.size()) {
        if (k == 0)
            terms.emplace_back(out);
        return;
    }
    if (slack[t] < k)
        return;
    const int i = word[t];
    for (int j = 0; j <= k && 2 * j <= i; ++j) {
        if (!binomial_odd(i - j, j))
            continue;
        out.push_back(i - j);
        cartan(word, t + 1, k - j, slack, out, terms);
        out.pop_back();
    }
}

}  // namespace

Element sq_generator(int m, int k)
{
    if (m < 1)
        throw std::invalid_argument("sq_generator: generator index must be positive, got " + std::to_string(m));
    if (k < 0)
        throw std::invalid_argument("sq_generator: negative square");
    if (k == 0)
        return Monomial::generator(m);
    if (m - k >= 1 && binomial_odd(m - k, k))
        return Monomial::generator(m - k);
    return {};
}

Element sq(const Monomial& m, int k)
{
    if (k < 0)
        throw std::invalid_argument("sq: negative square");
    if (k == 0)
        return m;
    auto word = m.indices();
    std::vector<int> slack(word.size() + 1, 0);
    for (std::size_t t = word.size(); t-- > 0;)
        slack[t] = slack[t + 1] + word[t] / 2;
    std::vector<int> out;
    out.reserve(word.size());
    std::vector<Monomial> terms;
    cartan(word, 0, k, slack, out, terms);
    return Element::sum_of(std::move(terms));
}

Element sq(const Element& a, int k)
{
    if (k == 0)
        return a;
    std::vector<Monomial> terms;
    for (const auto& m : a.terms()) {
        Element image = sq(m, k);
        terms.insert(terms.end(), image.terms().begin(), image.terms().end());
    }
    return Element::sum_of(std::move(terms));
}

MatrixGF2 sq_matrix(int s, int d, int k)
{
    const Bidegree target{s, d - k};
    const BasisEnumeration source = enumerate_basis(s, d);
    MatrixGF2 m(basis_dimension(target.s, target.d), source.size());
    if (m.rows() == 0)
        return m;
    for (std::size_t c = 0; c < source.size(); ++c) {
        const Element image = sq(source.monomials[c], k);
        for (const auto& term : image.terms())
            m.flip(basis_index(term), c);
    }
    return m;
}

}  // namespace annihil
