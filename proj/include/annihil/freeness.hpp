#pragma once

// Bounded freeness certificates for Delta(k).
//
// Bidegree by bidegree, the decomposables of Delta(k) are the span of
// products of two positive-bidegree pieces; a complement of them is a
// minimal generating set. If g_{s,d} counts those generators, the free
// algebra on them has dimensions f given by f_{0,0} = 1 and
// f_{s,d} = sum g_{r,a} f_{s-r,d-a}. The generators span Delta(k) in range,
// so dim <= f always, and dim == f throughout a range means there are no
// relations in that range.

#include "annihil/annihilated.hpp"
#include "annihil/hilbert.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace annihil {

/// Products x*y with x, y basis vectors of Delta(k) in positive bidegrees
/// (r,a) and (s-r,d-a), in a fixed enumeration order.
std::vector<Element> decomposable_products(int k, int s, int d, BasisCache& cache);

/// Span of decomposable_products; zero when s < 2 or d < 2.
SubspaceBasis decomposables(int k, int s, int d, BasisCache& cache);

class GeneratorTable
{
public:
    GeneratorTable() = default;
    GeneratorTable(int k, int s_max, int d_max) : k_(k), s_max_(s_max), d_max_(d_max) {}

    int k() const { return k_; }
    int s_max() const { return s_max_; }
    int d_max() const { return d_max_; }

    /// Representatives in bidegree (s,d); empty outside the table.
    const std::vector<Element>& at(int s, int d) const;
    void set(int s, int d, std::vector<Element> representatives);
    std::uint64_t count(int s, int d) const { return at(s, d).size(); }
    HilbertTable counts() const;

private:
    int k_ = 0;
    int s_max_ = 0;
    int d_max_ = 0;
    std::map<Bidegree, std::vector<Element>> entries_;
};

/// Minimal generators of Delta(k) for every bidegree in range: the canonical
/// complement of the decomposables inside Delta(k)_{s,d}.
GeneratorTable minimal_generators(int k, int s_max, int d_max, BasisCache& cache);

/// Word counts of the free algebra with g_{r,a} generators in bidegree
/// (r,a). Requires g_{0,0} == 0; throws std::overflow_error on overflow.
HilbertTable hilbert_inversion(const HilbertTable& g);

struct FreenessCell
{
    int s = 0;
    int d = 0;
    std::uint64_t dim = 0;  // dim Delta(k)_{s,d}
    std::uint64_t dec = 0;  // dim of the decomposables
    std::uint64_t g = 0;    // generator count
    std::uint64_t f = 0;    // free-algebra prediction
    bool pass = false;      // f == dim
};

struct FreenessReport
{
    int k = 0;
    int s_max = 0;
    int d_max = 0;
    std::vector<FreenessCell> cells;  // ordered by s, then d

    bool passed() const;
    std::optional<FreenessCell> first_failure() const;
};

/// Assembles a report from precomputed tables (all of the same bounds).
FreenessReport compare_with_free(int k, const HilbertTable& dims, const HilbertTable& dec, const HilbertTable& g);

FreenessReport certify_free(int k, int s_max, int d_max, BasisCache& cache);

/// {k, bounds: {s_max, d_max}, cells: [{s, d, dim, dec, g, f, pass}]}
nlohmann::json to_json(const FreenessReport& report);

}  // namespace annihil
