#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace annihil {

/// Nonnegative integers indexed by bidegrees 0 <= s <= s_max, 0 <= d <= d_max.
class HilbertTable
{
public:
    HilbertTable() = default;
    HilbertTable(int s_max, int d_max);

    int s_max() const { return s_max_; }
    int d_max() const { return d_max_; }
    bool in_range(int s, int d) const { return s >= 0 && d >= 0 && s <= s_max_ && d <= d_max_; }

    /// Zero outside the table.
    std::uint64_t at(int s, int d) const { return in_range(s, d) ? values_[index(s, d)] : 0; }
    void set(int s, int d, std::uint64_t value);

    /// Rows are s, columns are d; a header row "s,0,1,...,d_max" comes first.
    std::string to_csv() const;

    friend bool operator==(const HilbertTable&, const HilbertTable&) = default;

private:
    std::size_t index(int s, int d) const
    {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(d_max_ + 1) + static_cast<std::size_t>(d);
    }

    int s_max_ = -1;
    int d_max_ = -1;
    std::vector<std::uint64_t> values_;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in table arithmetic");
    return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in table arithmetic");
    return out;
}

}  // namespace annihil
