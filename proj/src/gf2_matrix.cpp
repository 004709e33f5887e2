#include "annihil/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace annihil {

namespace {

std::size_t words_for(std::size_t cols)
{
    return (cols + MatrixGF2::kWordBits - 1) / MatrixGF2::kWordBits;
}

}  // namespace

MatrixGF2::MatrixGF2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
{
}

MatrixGF2::MatrixGF2(std::initializer_list<std::initializer_list<int>> entries)
    : MatrixGF2(entries.size(), entries.size() ? entries.begin()->size() : 0)
{
    std::size_t r = 0;
    for (const auto& line : entries) {
        if (line.size() != cols_)
            throw std::invalid_argument("MatrixGF2: ragged row");
        std::size_t c = 0;
        for (int v : line)
            set(r, c++, v & 1);
        ++r;
    }
}

MatrixGF2 MatrixGF2::identity(std::size_t n)
{
    MatrixGF2 m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void MatrixGF2::set(std::size_t r, std::size_t c, bool value)
{
    Word& w = data_[r * stride_ + c / kWordBits];
    Word bit = Word(1) << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

bool MatrixGF2::row_is_zero(std::size_t r) const
{
    auto words = row(r);
    return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

std::size_t MatrixGF2::leading_column(std::size_t r) const
{
    auto words = row(r);
    for (std::size_t w = 0; w < stride_; ++w)
        if (words[w])
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words[w]));
    return cols_;
}

void MatrixGF2::xor_row(std::size_t dst, std::size_t src, std::size_t from_word)
{
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t w = from_word; w < stride_; ++w)
        d[w] ^= s[w];
}

void MatrixGF2::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

void MatrixGF2::append_row(std::span<const Word> words)
{
    if (words.size() != stride_)
        throw std::invalid_argument("MatrixGF2::append_row: wrong row width");
    data_.insert(data_.end(), words.begin(), words.end());
    ++rows_;
}

void MatrixGF2::truncate_rows(std::size_t n)
{
    if (n < rows_) {
        rows_ = n;
        data_.resize(rows_ * stride_);
    }
}

MatrixGF2 MatrixGF2::transpose() const
{
    MatrixGF2 t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto words = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = words[w];
            while (bits) {
                std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

MatrixGF2 operator*(const MatrixGF2& lhs, const MatrixGF2& rhs)
{
    if (lhs.cols_ != rhs.rows_)
        throw std::invalid_argument("MatrixGF2: dimension mismatch in product");
    MatrixGF2 out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
        MatrixGF2::Word* dst = out.data_.data() + r * out.stride_;
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            if (!lhs.get(r, k))
                continue;
            const MatrixGF2::Word* src = rhs.data_.data() + k * rhs.stride_;
            for (std::size_t w = 0; w < out.stride_; ++w)
                dst[w] ^= src[w];
        }
    }
    return out;
}

std::string MatrixGF2::to_csv() const
{
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ',';
            out += get(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

RrefResult rref(MatrixGF2 m)
{
    RrefResult result;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < m.rows() && !m.get(found, c))
            ++found;
        if (found == m.rows())
            continue;
        m.swap_rows(pivot_row, found);
        // Everything left of c in the pivot row is already zero.
        const std::size_t from_word = c / MatrixGF2::kWordBits;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pivot_row && m.get(r, c))
                m.xor_row(r, pivot_row, from_word);
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.rank = pivot_row;
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const MatrixGF2& m)
{
    return rref(m).rank;
}

MatrixGF2 kernel(const MatrixGF2& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;

    MatrixGF2 basis(m.cols() - r.rank, m.cols());
    std::size_t next = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        basis.set(next, free);
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.reduced.get(i, free))
                basis.set(next, r.pivots[i]);
        ++next;
    }
    return rref(std::move(basis)).reduced;
}

MatrixGF2 stack(std::span<const MatrixGF2> blocks)
{
    if (blocks.empty())
        return {};
    const std::size_t cols = blocks.front().cols();
    for (const auto& b : blocks)
        if (b.cols() != cols)
            throw std::invalid_argument("stack: mismatched column counts");
    MatrixGF2 out(0, cols);
    for (const auto& b : blocks)
        for (std::size_t r = 0; r < b.rows(); ++r)
            out.append_row(b.row(r));
    return out;
}

/******** EchelonBuilder ********/

EchelonBuilder::EchelonBuilder(std::size_t cols) : rows_(0, cols) {}

std::vector<MatrixGF2::Word> EchelonBuilder::reduce(std::span<const MatrixGF2::Word> row) const
{
    if (row.size() != rows_.words_per_row())
        throw std::invalid_argument("EchelonBuilder: wrong row width");
    std::vector<MatrixGF2::Word> v(row.begin(), row.end());
    // Ascending leads: reducing by row i never sets a bit left of leads_[i].
    for (std::size_t i = 0; i < leads_.size(); ++i) {
        const std::size_t c = leads_[i];
        if ((v[c / MatrixGF2::kWordBits] >> (c % MatrixGF2::kWordBits)) & 1u) {
            auto src = rows_.row(i);
            for (std::size_t w = c / MatrixGF2::kWordBits; w < v.size(); ++w)
                v[w] ^= src[w];
        }
    }
    return v;
}

bool EchelonBuilder::insert(std::span<const MatrixGF2::Word> row)
{
    auto v = reduce(row);
    std::size_t lead = cols();
    for (std::size_t w = 0; w < v.size(); ++w)
        if (v[w]) {
            lead = w * MatrixGF2::kWordBits + static_cast<std::size_t>(std::countr_zero(v[w]));
            break;
        }
    if (lead == cols())
        return false;

    // Insert keeping leads_ sorted; rows_ mirrors the same order.
    auto pos = static_cast<std::size_t>(std::lower_bound(leads_.begin(), leads_.end(), lead) - leads_.begin());
    rows_.append_row(v);
    for (std::size_t i = rows_.rows() - 1; i > pos; --i)
        rows_.swap_rows(i, i - 1);
    leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
}

bool EchelonBuilder::spans(std::span<const MatrixGF2::Word> row) const
{
    auto v = reduce(row);
    return std::all_of(v.begin(), v.end(), [](MatrixGF2::Word w) { return w == 0; });
}

MatrixGF2 EchelonBuilder::reduced() const
{
    return rref(rows_).reduced;
}

}  // namespace annihil
