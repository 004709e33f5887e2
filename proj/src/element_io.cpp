#include "annihil/element_io.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <vector>

namespace annihil {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what), position_(position)
{
}

namespace {

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Element parse()
    {
        std::vector<Monomial> terms;
        skip_space();
        if (at_end())
            throw ParseError(pos_, "empty input");
        while (true) {
            parse_term(terms);
            skip_space();
            if (at_end())
                break;
            expect('+');
        }
        return Element::sum_of(std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    void expect(char c)
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, std::string("expected '") + c + "' but input ended");
        if (peek() != c)
            throw ParseError(pos_, std::string("expected '") + c + "', found '" + peek() + "'");
        ++pos_;
    }

    void parse_term(std::vector<Monomial>& terms)
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "expected a term but input ended");
        if (peek() == '0') {
            ++pos_;  // the zero element contributes nothing
            return;
        }
        expect('[');
        std::vector<int> indices;
        skip_space();
        if (!at_end() && peek() == ']') {
            ++pos_;
            terms.emplace_back();
            return;
        }
        while (true) {
            indices.push_back(parse_index());
            skip_space();
            if (!at_end() && peek() == ']') {
                ++pos_;
                break;
            }
            expect(',');
        }
        terms.emplace_back(std::move(indices));
    }

    int parse_index()
    {
        skip_space();
        std::size_t start = pos_;
        if (at_end())
            throw ParseError(pos_, "expected an index but input ended");
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, std::string("expected a positive integer, found '") + peek() + "'");
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > std::numeric_limits<int>::max())
                throw ParseError(start, "index out of range");
            ++pos_;
        }
        if (value < 1)
            throw ParseError(start, "indices must be positive");
        return static_cast<int>(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const Monomial& m)
{
    std::string out = "[";
    bool first = true;
    for (int i : m.indices()) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += ']';
    return out;
}

std::string to_string(const Element& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& m : a.terms()) {
        if (!out.empty())
            out += '+';
        out += to_string(m);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m)
{
    return os << to_string(m);
}

std::ostream& operator<<(std::ostream& os, const Element& a)
{
    return os << to_string(a);
}

}  // namespace annihil
