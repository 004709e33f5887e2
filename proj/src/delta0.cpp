#include "annihil/delta0.hpp"

#include "annihil/basis.hpp"
#include "annihil/parallel.hpp"
#include "annihil/steenrod.hpp"
#include "annihil/subspace.hpp"

#include <stdexcept>
#include <string>

namespace annihil {

/******** Generators ********/

Bidegree SigmaDescriptor::bidegree() const
{
    int total = 0;
    for (int m : ms)
        total += m;
    const int s = static_cast<int>(ms.size());
    return {s, 2 * total + 2 * s - 1};
}

Monomial SigmaDescriptor::marker() const
{
    std::vector<int> word;
    for (int m : ms)
        word.push_back(2 * m + 2);
    if (!word.empty())
        word.front() -= 1;
    return Monomial(std::move(word));
}

Element sigma(std::span<const int> ms)
{
    if (ms.empty())
        throw std::invalid_argument("sigma: needs at least one entry");
    std::vector<int> word;
    word.reserve(ms.size());
    for (int m : ms) {
        if (m < 0)
            throw std::invalid_argument("sigma: entries must be nonnegative");
        word.push_back(2 * m + 2);
    }
    return sq(Monomial(std::move(word)), 1);
}

Element sigma(const SigmaDescriptor& desc)
{
    return sigma(desc.ms);
}

namespace {

// Weak compositions of `total` into `parts` nonnegative parts, lex order.
void weak_compositions(int parts, int total, std::vector<int>& prefix, std::vector<SigmaDescriptor>& out)
{
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back({prefix});
        prefix.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        prefix.push_back(first);
        weak_compositions(parts - 1, total - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SigmaDescriptor> enumerate_sigma(int s, int d)
{
    if (s < 1)
        throw std::invalid_argument("enumerate_sigma: length must be at least 1");
    std::vector<SigmaDescriptor> out;
    if (d < 0 || d % 2 == 0)
        return out;
    const int total = (d + 1) / 2 - s;
    if (total < 0)
        return out;
    std::vector<int> prefix;
    weak_compositions(s, total, prefix, out);
    return out;
}

/******** Counting ********/

std::uint64_t eta(int s, int d)
{
    if (s < 1 || d < 0 || d % 2 == 0)
        return 0;
    return binomial((d - 1) / 2, s - 1);
}

HilbertTable eta_table(int s_max, int d_max)
{
    HilbertTable t(s_max, d_max);
    for (int s = 1; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d)
            t.set(s, d, eta(s, d));
    return t;
}

HilbertTable c_table(int s_max, int d_max)
{
    HilbertTable c(s_max, d_max);
    c.set(0, 0, 1);
    for (int s = 1; s <= s_max; ++s)
        for (int d = 1; d <= d_max; ++d) {
            std::uint64_t total = 0;
            for (int r = 1; r <= s; ++r)
                for (int a = 1; a <= d; ++a)
                    total = checked_add(total, checked_mul(eta(r, a), c.at(s - r, d - a)));
            c.set(s, d, total);
        }
    return c;
}

std::uint64_t closed_c(int s, int d)
{
    if (d < 0)
        throw std::invalid_argument("closed_c: negative degree");
    const auto n = static_cast<std::uint64_t>(d);
    const bool even = d % 2 == 0;
    switch (s) {
    case 1:
        return even ? 0 : 1;
    case 2:
        return even ? n / 2 : (n - 1) / 2;
    case 3:
        if (d == 0)
            return 0;
        return even ? n * (n - 2) / 4 : (n - 1) * (n - 1) / 4;
    default:
        throw std::invalid_argument("closed_c: closed forms exist only for s in {1,2,3}, got " + std::to_string(s));
    }
}

/******** Checking against linear algebra ********/

std::vector<std::vector<std::vector<Element>>> sigma_words(int s_max, int d_max)
{
    std::vector<std::vector<std::vector<Element>>> words(
        static_cast<std::size_t>(s_max + 1), std::vector<std::vector<Element>>(static_cast<std::size_t>(d_max + 1)));
    if (s_max < 0 || d_max < 0)
        return words;

    // Generators by bidegree, realized once.
    std::vector<std::vector<std::vector<Element>>> gens = words;
    for (int r = 1; r <= s_max; ++r)
        for (int a = 1; a <= d_max; ++a)
            for (const auto& desc : enumerate_sigma(r, a))
                gens[r][a].push_back(sigma(desc));

    words[0][0].push_back(Element::unit());
    // Split off the first factor: word = sigma * tail with tail strictly smaller.
    for (int s = 1; s <= s_max; ++s)
        for (int d = 1; d <= d_max; ++d)
            for (int r = 1; r <= s; ++r)
                for (int a = 1; a <= d; ++a)
                    for (const auto& g : gens[r][a])
                        for (const auto& tail : words[s - r][d - a])
                            words[s][d].push_back(g * tail);
    return words;
}

bool S0Report::passed() const
{
    for (const auto& c : cells)
        if (!c.pass)
            return false;
    return true;
}

S0Report verify_S0(int s_max, int d_max, BasisCache& cache)
{
    S0Report report{s_max, d_max, {}};
    if (s_max < 0 || d_max < 0)
        return report;
    const auto words = sigma_words(s_max, d_max);
    const HilbertTable c = c_table(s_max, d_max);

    for (int s = 0; s <= s_max; ++s)
        for (int d = 0; d <= d_max; ++d)
            report.cells.push_back(S0Cell{.s = s, .d = d});

    parallel_for(report.cells.size(), [&](std::size_t i) {
        S0Cell& cell = report.cells[i];
        const Bidegree at{cell.s, cell.d};
        const SubspaceBasis kernel = cache.delta(0, cell.s, cell.d);

        std::vector<Element> sigmas;
        if (cell.s >= 1) {
            cell.eta = eta(cell.s, cell.d);
            for (const auto& desc : enumerate_sigma(cell.s, cell.d))
                sigmas.push_back(sigma(desc));
        }
        cell.sigma_count = sigmas.size();
        for (const auto& x : sigmas)
            if (!sq(x, 1).is_zero() || !kernel.contains(x))
                cell.sigmas_annihilated = false;
        cell.sigmas_independent = span_dimension(sigmas, at) == sigmas.size();

        const auto& here = words[cell.s][cell.d];
        const SubspaceBasis span = SubspaceBasis::span_of(at, here);
        cell.kernel_dim = kernel.dimension();
        cell.word_count = here.size();
        cell.word_span_dim = span.dimension();
        cell.words_span_kernel = span == kernel;
        cell.c = c.at(cell.s, cell.d);

        cell.pass = cell.sigmas_annihilated && cell.sigmas_independent && cell.sigma_count == cell.eta &&
                    cell.words_span_kernel && cell.kernel_dim == cell.c;
    });
    return report;
}

}  // namespace annihil
