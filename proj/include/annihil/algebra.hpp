#pragma once

// The free associative algebra F_2<g_1, g_2, ...> on one generator per
// positive degree, i.e. the reduced homology of smash powers of BZ/2.
//
// A monomial [i_1,...,i_s] has length s and degree i_1+...+i_s. Elements are
// finite sets of monomials (coefficients in GF(2)), stored sorted in the
// canonical order: by length, then degree, then lexicographically on the
// index sequence. Within one bidegree the canonical order is plain lex.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace annihil {

struct Bidegree
{
    int s = 0;  // length
    int d = 0;  // degree

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    Bidegree operator+(Bidegree rhs) const { return {s + rhs.s, d + rhs.d}; }
};

class Monomial
{
public:
    Monomial() = default;  // the unit []
    Monomial(std::initializer_list<int> indices);
    explicit Monomial(std::vector<int> indices);

    static Monomial generator(int i) { return Monomial{i}; }

    std::span<const int> indices() const { return idx_; }
    int operator[](std::size_t i) const { return idx_[i]; }
    int length() const { return static_cast<int>(idx_.size()); }
    int degree() const { return degree_; }
    Bidegree bidegree() const { return {length(), degree_}; }
    bool is_unit() const { return idx_.empty(); }

    /// True iff this == prefix * suffix for some monomial prefix.
    bool ends_with(const Monomial& suffix) const;
    /// The first n indices.
    Monomial prefix(std::size_t n) const;

    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

private:
    struct Unchecked {};
    Monomial(std::vector<int> indices, int degree, Unchecked) : idx_(std::move(indices)), degree_(degree) {}

    std::vector<int> idx_;
    int degree_ = 0;
};

class Element
{
public:
    Element() = default;  // zero
    Element(Monomial m);  // NOLINT: a monomial is an element
    Element(std::initializer_list<Monomial> terms);

    /// Builds the GF(2) sum of `terms`; repeated monomials cancel in pairs.
    static Element sum_of(std::vector<Monomial> terms);
    static Element unit() { return Element(Monomial{}); }

    std::span<const Monomial> terms() const& { return terms_; }
    std::span<const Monomial> terms() const&& = delete;  // would dangle
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const Monomial& m) const;

    /// The common bidegree of all terms; meaningless for zero or
    /// inhomogeneous elements.
    bool is_homogeneous() const;
    Bidegree bidegree() const { return terms_.front().bidegree(); }

    Element& operator+=(const Element& rhs);
    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator*(const Element& lhs, const Element& rhs);
    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<Monomial> terms_;  // sorted, no duplicates
};

Element multiply(const Element& a, const Element& b);

/// Splits `a` into homogeneous pieces; the pieces sum to `a`.
std::map<Bidegree, Element> bidegree_components(const Element& a);

/// Number of odd indices.
int weight(const Monomial& m);
/// The part of `a` spanned by monomials of weight exactly `k`.
Element weight_component(const Element& a, int k);

/// Left transduction for `mu`: the unique a* with a = a0 + a* mu, where no
/// term of a0 has `mu` as a suffix. `mu` must be nonempty.
Element transduce(const Element& a, const Monomial& mu);

struct Resolution
{
    std::size_t index = 0;                    // j, zero-based
    std::map<std::size_t, Element> cofactors;  // i -> d_i for every i != j
};

/// Given a vanishing sum a_1 b_1 + ... + a_n b_n = 0 with every b_i nonzero
/// and homogeneous, finds j and d_i with a_j = sum_{i != j} a_i d_i.
///
/// The b with least bidegree (length first, then degree; ties go to the
/// largest index) plays the role of b_j. Its least monomial mu is
/// transduced out of the relation, leaving b_j^* = 1 and d_i = b_i^*.
/// Throws std::invalid_argument if the sum is nonzero or some b_i is zero
/// or inhomogeneous.
Resolution resolve_relation(std::span<const std::pair<Element, Element>> pairs);

}  // namespace annihil
