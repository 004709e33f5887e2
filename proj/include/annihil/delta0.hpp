#pragma once

// Delta(0) = ker Sq^1 is the free algebra on the elements
//   sigma(m_1, ..., m_s) = [2m_1+2, ..., 2m_s+2] Sq^1,
// one for each s >= 1 and m_i >= 0. This header builds those generators,
// counts them (eta), and produces the dimension table c_{s,d} by the
// free-algebra recurrence, along with a check of all of it against the
// kernel computed by linear algebra.

#include "annihil/algebra.hpp"
#include "annihil/annihilated.hpp"
#include "annihil/hilbert.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace annihil {

struct SigmaDescriptor
{
    std::vector<int> ms;

    /// (s, 2(m_1+...+m_s) + 2s - 1).
    Bidegree bidegree() const;
    /// The monomial [2m_1+1, 2m_2+2, ..., 2m_s+2], which occurs in sigma and
    /// in no other generator of the same length.
    Monomial marker() const;
    friend auto operator<=>(const SigmaDescriptor&, const SigmaDescriptor&) = default;
};

/// Throws std::invalid_argument for an empty or negative sequence.
Element sigma(std::span<const int> ms);
Element sigma(const SigmaDescriptor& desc);

/// All descriptors of bidegree (s, d) in lex order on (m_1,...,m_s).
/// Throws std::invalid_argument for s < 1.
std::vector<SigmaDescriptor> enumerate_sigma(int s, int d);

/// Number of generators in bidegree (s, d): 0 for even d, else C((d-1)/2, s-1).
std::uint64_t eta(int s, int d);
HilbertTable eta_table(int s_max, int d_max);

/// c_{s,d} = sum_{r>=1, a>=1} eta_{r,a} c_{s-r,d-a} with c_{0,0} = 1.
HilbertTable c_table(int s_max, int d_max);

/// Closed forms for s = 1, 2, 3; throws std::invalid_argument otherwise.
std::uint64_t closed_c(int s, int d);

struct S0Cell
{
    int s = 0;
    int d = 0;
    std::uint64_t eta = 0;
    std::size_t sigma_count = 0;
    bool sigmas_annihilated = true;   // every sigma here is killed by Sq^1
    bool sigmas_independent = true;
    std::size_t kernel_dim = 0;       // dim Delta(0)_{s,d} by linear algebra
    std::size_t word_count = 0;       // products of sigmas landing here
    std::size_t word_span_dim = 0;
    bool words_span_kernel = false;
    std::uint64_t c = 0;              // recurrence value
    bool pass = false;
};

struct S0Report
{
    int s_max = 0;
    int d_max = 0;
    std::vector<S0Cell> cells;  // ordered by s, then d

    bool passed() const;
};

/// Checks, for every (s,d) in range, that the sigmas lie in Delta(0), are
/// independent with count eta, and that their products span Delta(0)
/// exactly, with dimension c_{s,d}. Cells are checked concurrently.
S0Report verify_S0(int s_max, int d_max, BasisCache& cache);

/// Products sigma_1 * ... * sigma_r of total bidegree (s, d), indexed by
/// sequences of generators; (0,0) holds the empty product. Index is
/// [s][d].
std::vector<std::vector<std::vector<Element>>> sigma_words(int s_max, int d_max);

}  // namespace annihil
