#pragma once

// Text form of elements: a '+'-separated sum of bracketed index lists such as
// "[1,2]+[2,1]". The unit is "[]" and zero is "0". Whitespace is ignored on
// input; output has no whitespace and lists terms in canonical order.

#include "annihil/algebra.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace annihil {

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t position, const std::string& what);
    /// Zero-based character offset of the offending character.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Element parse_element(std::string_view text);

std::string to_string(const Monomial& m);
std::string to_string(const Element& a);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace annihil
