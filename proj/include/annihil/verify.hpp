#pragma once

#include "annihil/annihilated.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace annihil {

struct SuiteBounds
{
    std::optional<int> s_max;  // unset: the suite's own default
    std::optional<int> d_max;
    std::uint64_t seed = 20260101;
};

struct SuiteResult
{
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string detail;  // first failure, or a one-line summary on success
};

/// action-oracle, instability, sq1-differential, ker-eq-im, S0, recurrence,
/// reduction-formula, transduction, adem-spot.
std::span<const std::string_view> suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds, BasisCache& cache);

}  // namespace annihil
