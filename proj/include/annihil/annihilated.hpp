#pragma once

// Partially annihilated subspaces Delta(k)_{s,d}: the elements of bidegree
// (s,d) killed by Sq^1, Sq^2, Sq^4, ..., Sq^{2^k}.

#include "annihil/subspace.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <tuple>

namespace annihil {

/// Delta(k)_{s,d}, computed as the kernel of the stacked Sq^{2^i} matrices.
/// Squares with 2^i > d/2 vanish on this piece and are skipped.
SubspaceBasis delta_basis(int k, int s, int d);

/// Image of Sq^1 : (s, d+1) -> (s, d). Throws std::invalid_argument for s < 1.
SubspaceBasis image_sq1_basis(int s, int d);

/// Common kernel of Sq^j for all 1 <= j <= floor(d/2).
SubspaceBasis annihilated_by_all_squares(int s, int d);
/// Common kernel of Sq^{2^i} for all 2^i <= floor(d/2).
SubspaceBasis annihilated_by_power_squares(int s, int d);

/// The A-annihilated elements of bidegree (s,d). Both constructions above
/// are computed; a disagreement throws std::logic_error.
SubspaceBasis full_annihilated_basis(int s, int d);

/// Smallest level k with Delta(k)_{s,d} equal to the full annihilateds for
/// every s, namely the least k with d < 2^{k+2}.
int stable_level(int d);

/// Memo of delta_basis keyed by (k, s, d), optionally persisted as one JSON
/// file per key. Lookups take a shared lock; insertion takes the unique lock,
/// and a racing second computation of the same key yields the same value.
class BasisCache
{
public:
    static constexpr int kFormatVersion = 1;

    BasisCache() = default;
    explicit BasisCache(std::optional<std::filesystem::path> directory);

    BasisCache(const BasisCache&) = delete;
    BasisCache& operator=(const BasisCache&) = delete;

    SubspaceBasis delta(int k, int s, int d);

    const std::optional<std::filesystem::path>& directory() const { return dir_; }
    static std::filesystem::path file_name(int k, int s, int d);

    /// Writes a cache document for (k,s,d) holding `basis`, whatever it is.
    /// Also used by tests to plant deliberately wrong entries.
    static void write_file(const std::filesystem::path& directory, int k, const SubspaceBasis& basis);
    /// Reads a cache document; std::nullopt if absent, unreadable, of another
    /// format version, or for another key.
    static std::optional<SubspaceBasis> read_file(const std::filesystem::path& directory, int k, int s, int d);

private:
    using Key = std::tuple<int, int, int>;

    std::optional<std::filesystem::path> dir_;
    mutable std::shared_mutex mutex_;
    std::map<Key, SubspaceBasis> memo_;
};

}  // namespace annihil
