#include "annihil/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace annihil {

namespace {

int checked_degree(const std::vector<int>& indices)
{
    int degree = 0;
    for (int i : indices) {
        if (i < 1)
            throw std::invalid_argument("monomial index must be positive, got " + std::to_string(i));
        degree += i;
    }
    return degree;
}

/* Sorts `terms` and drops every monomial that occurs an even number of times. */
void canonicalize(std::vector<Monomial>& terms)
{
    std::sort(terms.begin(), terms.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1) {
            if (out != i)
                terms[out] = std::move(terms[i]);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

}  // namespace

/******** Monomial ********/

Monomial::Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}

Monomial::Monomial(std::vector<int> indices) : idx_(std::move(indices)), degree_(checked_degree(idx_)) {}

bool Monomial::ends_with(const Monomial& suffix) const
{
    if (suffix.idx_.size() > idx_.size())
        return false;
    return std::equal(suffix.idx_.rbegin(), suffix.idx_.rend(), idx_.rbegin());
}

Monomial Monomial::prefix(std::size_t n) const
{
    std::vector<int> head(idx_.begin(), idx_.begin() + static_cast<std::ptrdiff_t>(std::min(n, idx_.size())));
    int degree = std::accumulate(head.begin(), head.end(), 0);
    return Monomial(std::move(head), degree, Unchecked{});
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs)
{
    std::vector<int> word;
    word.reserve(lhs.idx_.size() + rhs.idx_.size());
    word.insert(word.end(), lhs.idx_.begin(), lhs.idx_.end());
    word.insert(word.end(), rhs.idx_.begin(), rhs.idx_.end());
    return Monomial(std::move(word), lhs.degree_ + rhs.degree_, Monomial::Unchecked{});
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs)
{
    if (auto c = lhs.idx_.size() <=> rhs.idx_.size(); c != 0)
        return c;
    if (auto c = lhs.degree_ <=> rhs.degree_; c != 0)
        return c;
    return lhs.idx_ <=> rhs.idx_;
}

/******** Element ********/

Element::Element(Monomial m)
{
    terms_.push_back(std::move(m));
}

Element::Element(std::initializer_list<Monomial> terms) : terms_(terms)
{
    canonicalize(terms_);
}

Element Element::sum_of(std::vector<Monomial> terms)
{
    Element result;
    result.terms_ = std::move(terms);
    canonicalize(result.terms_);
    return result;
}

bool Element::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool Element::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    // Sorted by bidegree first, so the ends decide.
    return terms_.front().bidegree() == terms_.back().bidegree();
}

Element& Element::operator+=(const Element& rhs)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Element operator*(const Element& lhs, const Element& rhs)
{
    std::vector<Monomial> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& x : lhs.terms_)
        for (const auto& y : rhs.terms_)
            products.push_back(x * y);
    return Element::sum_of(std::move(products));
}

Element multiply(const Element& a, const Element& b)
{
    return a * b;
}

std::map<Bidegree, Element> bidegree_components(const Element& a)
{
    std::map<Bidegree, std::vector<Monomial>> groups;
    for (const auto& m : a.terms())
        groups[m.bidegree()].push_back(m);
    std::map<Bidegree, Element> result;
    for (auto& [deg, terms] : groups)
        result.emplace(deg, Element::sum_of(std::move(terms)));
    return result;
}

int weight(const Monomial& m)
{
    auto idx = m.indices();
    return static_cast<int>(std::count_if(idx.begin(), idx.end(), [](int i) { return i % 2 == 1; }));
}

Element weight_component(const Element& a, int k)
{
    std::vector<Monomial> kept;
    for (const auto& m : a.terms())
        if (weight(m) == k)
            kept.push_back(m);
    return Element::sum_of(std::move(kept));
}

Element transduce(const Element& a, const Monomial& mu)
{
    if (mu.is_unit())
        throw std::invalid_argument("transduce: the monomial must be nonempty");
    std::vector<Monomial> cofactors;
    for (const auto& m : a.terms())
        if (m.ends_with(mu))
            cofactors.push_back(m.prefix(m.indices().size() - mu.indices().size()));
    return Element::sum_of(std::move(cofactors));
}

Resolution resolve_relation(std::span<const std::pair<Element, Element>> pairs)
{
    if (pairs.empty())
        throw std::invalid_argument("resolve_relation: empty relation");
    Element total;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& b = pairs[i].second;
        if (b.is_zero())
            throw std::invalid_argument("resolve_relation: b_" + std::to_string(i) + " is zero");
        if (!b.is_homogeneous())
            throw std::invalid_argument("resolve_relation: b_" + std::to_string(i) + " is not homogeneous");
        total += pairs[i].first * b;
    }
    if (!total.is_zero())
        throw std::invalid_argument("resolve_relation: the sum of products is nonzero");

    std::size_t last = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].second.bidegree() <= pairs[last].second.bidegree())
            last = i;

    // Within one bidegree the canonical order is lex, so the first term is the least.
    const Monomial& mu = pairs[last].second.terms().front();

    Resolution result;
    result.index = last;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (i != last)
            result.cofactors.emplace(i, transduce(pairs[i].second, mu));
    return result;
}

}  // namespace annihil
