#pragma once

// Dense bit-packed matrices over GF(2). Rows are stored as runs of 64-bit
// words; bits past the last column are kept zero so whole-word comparisons
// and popcounts are exact.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace annihil {

class MatrixGF2
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    MatrixGF2() = default;
    MatrixGF2(std::size_t rows, std::size_t cols);
    MatrixGF2(std::initializer_list<std::initializer_list<int>> entries);

    static MatrixGF2 identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u; }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word(1) << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    bool row_is_zero(std::size_t r) const;
    /// Index of the first set bit of row r, or cols() if the row is zero.
    std::size_t leading_column(std::size_t r) const;
    /// row(dst) ^= row(src), starting at word `from_word`.
    void xor_row(std::size_t dst, std::size_t src, std::size_t from_word = 0);
    void swap_rows(std::size_t a, std::size_t b);

    /// Appends a row given as packed words (length words_per_row()).
    void append_row(std::span<const Word> words);
    /// Keeps only the first n rows.
    void truncate_rows(std::size_t n);

    MatrixGF2 transpose() const;
    friend MatrixGF2 operator*(const MatrixGF2& lhs, const MatrixGF2& rhs);
    friend bool operator==(const MatrixGF2&, const MatrixGF2&) = default;

    /// Row-major 0/1 CSV, one line per row.
    std::string to_csv() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct RrefResult
{
    MatrixGF2 reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

/// Reduced row-echelon form: pivots equal 1, zeros above and below each
/// pivot, zero rows last. The reduced form of a row space is unique.
RrefResult rref(MatrixGF2 m);

std::size_t rank(const MatrixGF2& m);

/// Basis of {v : M v = 0} as the rows of a matrix with cols(M) columns, in
/// reduced row-echelon form. Its row count is cols(M) - rank(M).
MatrixGF2 kernel(const MatrixGF2& m);

/// Vertical concatenation; throws std::invalid_argument on mismatched
/// column counts. An empty list gives the 0x0 matrix.
MatrixGF2 stack(std::span<const MatrixGF2> blocks);

/// Incremental row-echelon builder: rows are kept with distinct leading
/// columns so each insertion is a single forward reduction.
class EchelonBuilder
{
public:
    explicit EchelonBuilder(std::size_t cols);

    /// Reduces `row` against the current basis; inserts it if independent.
    bool insert(std::span<const MatrixGF2::Word> row);
    /// True iff `row` is in the span of the inserted rows.
    bool spans(std::span<const MatrixGF2::Word> row) const;

    std::size_t rank() const { return leads_.size(); }
    std::size_t cols() const { return rows_.cols(); }
    bool full() const { return rank() == cols(); }

    /// The span of the inserted rows in reduced row-echelon form.
    MatrixGF2 reduced() const;

private:
    std::vector<MatrixGF2::Word> reduce(std::span<const MatrixGF2::Word> row) const;

    MatrixGF2 rows_;
    std::vector<std::size_t> leads_;  // leading column of rows_.row(i); kept sorted
};

}  // namespace annihil
