#include "annihil/random.hpp"

#include "annihil/basis.hpp"

#include <vector>

namespace annihil {

Monomial random_monomial(Rng& rng, Bidegree at)
{
    const std::size_t dim = basis_dimension(at.s, at.d);
    if (dim == 0)
        return {};
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    return basis_monomial(at, pick(rng));
}

Element random_element(Rng& rng, Bidegree at, int max_terms)
{
    const std::size_t dim = basis_dimension(at.s, at.d);
    if (dim == 0)
        return {};
    std::vector<Monomial> terms;
    if (dim <= static_cast<std::size_t>(2 * max_terms)) {
        std::bernoulli_distribution keep(0.5);
        for (std::size_t i = 0; i < dim; ++i)
            if (keep(rng))
                terms.push_back(basis_monomial(at, i));
    }
    else {
        std::uniform_int_distribution<int> count(0, max_terms);
        for (int n = count(rng); n > 0; --n)
            terms.push_back(random_monomial(rng, at));
    }
    return Element::sum_of(std::move(terms));
}

Element random_nonzero_element(Rng& rng, Bidegree at, int max_terms)
{
    if (basis_dimension(at.s, at.d) == 0)
        return {};
    while (true) {
        Element e = random_element(rng, at, max_terms);
        if (!e.is_zero())
            return e;
    }
}

Bidegree random_bidegree(Rng& rng, int s_min, int s_max, int extra)
{
    std::uniform_int_distribution<int> length(s_min, s_max);
    std::uniform_int_distribution<int> surplus(0, extra);
    const int s = length(rng);
    if (s == 0)
        return {0, 0};
    return {s, s + surplus(rng)};
}

}  // namespace annihil
