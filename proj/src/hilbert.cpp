#include "annihil/hilbert.hpp"

namespace annihil {

HilbertTable::HilbertTable(int s_max, int d_max)
    : s_max_(s_max), d_max_(d_max),
      values_(s_max >= 0 && d_max >= 0 ? static_cast<std::size_t>(s_max + 1) * static_cast<std::size_t>(d_max + 1) : 0,
              0)
{
    if (s_max < 0 || d_max < 0)
        throw std::invalid_argument("HilbertTable: bounds must be nonnegative");
}

void HilbertTable::set(int s, int d, std::uint64_t value)
{
    if (!in_range(s, d))
        throw std::out_of_range("HilbertTable: (" + std::to_string(s) + "," + std::to_string(d) + ") out of range");
    values_[index(s, d)] = value;
}

std::string HilbertTable::to_csv() const
{
    std::string out = "s";
    for (int d = 0; d <= d_max_; ++d)
        out += "," + std::to_string(d);
    out += '\n';
    for (int s = 0; s <= s_max_; ++s) {
        out += std::to_string(s);
        for (int d = 0; d <= d_max_; ++d)
            out += "," + std::to_string(at(s, d));
        out += '\n';
    }
    return out;
}

}  // namespace annihil
