#pragma once

// Dense matrices over F_p with Gaussian elimination.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace symmod {

class PrimeFieldMatrix {
public:
    using value_type = std::uint32_t;

    PrimeFieldMatrix() = default;
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    static PrimeFieldMatrix identity(std::size_t n, std::uint32_t p) {
        PrimeFieldMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1 % p;
        return m;
    }

    /// Reduces arbitrary integers into [0, p).
    static PrimeFieldMatrix from_integers(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
        PrimeFieldMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), p);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = m.reduce(rows[i][j]);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    value_type operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    value_type reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    value_type inverse(value_type a) const {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a % p_;
        for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1)
                result = result * base % p_;
            base = base * base % p_;
        }
        return static_cast<value_type>(result);
    }

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
        if (a.cols_ != b.rows_ || a.p_ != b.p_)
            throw std::invalid_argument("matrix shape or modulus mismatch");
        PrimeFieldMatrix c(a.rows_, b.cols_, a.p_);
        std::vector<std::uint64_t> acc(b.cols_);
        // Flush before (p-1)^2 terms could overflow 64 bits.
        const std::uint64_t square = std::uint64_t(a.p_ - 1) * (a.p_ - 1);
        const std::size_t flush_every = square == 0 ? a.cols_ + 1 : std::max<std::uint64_t>(1, (~0ULL >> 1) / square);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            std::size_t pending = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type x = a(i, k);
                if (x == 0)
                    continue;
                const value_type* brow = b.data_.data() + k * b.cols_;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    acc[j] += std::uint64_t(x) * std::uint64_t(brow[j]);
                if (++pending == flush_every) {
                    for (auto& v : acc)
                        v %= a.p_;
                    pending = 0;
                }
            }
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) = static_cast<value_type>(acc[j] % a.p_);
        }
        return c;
    }

    friend PrimeFieldMatrix operator+(PrimeFieldMatrix a, const PrimeFieldMatrix& b) {
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] = (a.data_[k] + b.data_[k]) % a.p_;
        return a;
    }

    friend PrimeFieldMatrix operator-(PrimeFieldMatrix a, const PrimeFieldMatrix& b) {
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] = (a.data_[k] + a.p_ - b.data_[k]) % a.p_;
        return a;
    }

    PrimeFieldMatrix transpose() const {
        PrimeFieldMatrix t(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    value_type trace() const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            s += (*this)(i, i);
        return static_cast<value_type>(s % p_);
    }

    PrimeFieldMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
        PrimeFieldMatrix s(row_ids.size(), col_ids.size(), p_);
        for (std::size_t i = 0; i < row_ids.size(); ++i)
            for (std::size_t j = 0; j < col_ids.size(); ++j)
                s(i, j) = (*this)(row_ids[i], col_ids[j]);
        return s;
    }

    /// Reduced row echelon form in place; returns pivot columns. Pivots are
    /// the first nonzero entry at or below the current row.
    std::vector<std::size_t> row_reduce() {
        // Entries live in 64-bit cells and are reduced lazily: each elimination
        // step adds at most (p-1)^2, and a full reduction runs before that could
        // overflow.
        std::vector<std::uint64_t> w(data_.begin(), data_.end());
        std::vector<value_type> pivot_row(cols_);
        const std::uint64_t p = p_;
        const std::uint64_t square = (p - 1) * (p - 1);
        const std::size_t steps_per_flush =
            square == 0 ? cols_ + 1 : static_cast<std::size_t>(std::max<std::uint64_t>(1, (~0ULL >> 2) / square));
        std::size_t since_flush = 0;
        auto cell = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return w[i * cols_ + j]; };

        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            for (; pivot < rows_; ++pivot)
                if ((cell(pivot, c) %= p) != 0)
                    break;
            if (pivot == rows_)
                continue;
            if (pivot != r)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(cell(pivot, j), cell(r, j));
            const std::uint64_t inv = inverse(static_cast<value_type>(cell(r, c)));
            for (std::size_t j = c; j < cols_; ++j) {
                cell(r, j) = (cell(r, j) % p) * inv % p;
                pivot_row[j] = static_cast<value_type>(cell(r, j));
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r)
                    continue;
                const std::uint64_t f = cell(i, c) % p;
                cell(i, c) = f;
                if (f == 0)
                    continue;
                const auto factor = static_cast<value_type>(p - f);
                std::uint64_t* target = w.data() + i * cols_;
                for (std::size_t j = c; j < cols_; ++j)
                    target[j] += std::uint64_t(factor * std::uint64_t(pivot_row[j]));
            }
            if (++since_flush == steps_per_flush) {
                for (auto& v : w)
                    v %= p;
                since_flush = 0;
            }
            pivots.push_back(c);
            ++r;
        }
        for (std::size_t k = 0; k < w.size(); ++k)
            data_[k] = static_cast<value_type>(w[k] % p);
        return pivots;
    }

    std::size_t rank() const {
        PrimeFieldMatrix copy = *this;
        return copy.row_reduce().size();
    }

    /// Columns form a basis of {x : A x = 0}.
    PrimeFieldMatrix nullspace() const {
        PrimeFieldMatrix reduced = *this;
        auto pivots = reduced.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        PrimeFieldMatrix basis(cols_, cols_ - pivots.size(), p_);
        std::size_t out = 0;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free])
                continue;
            basis(free, out) = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                basis(pivots[r], out) = reduced(r, free) == 0 ? 0 : p_ - reduced(r, free);
            ++out;
        }
        return basis;
    }

    /// Inverse of a square matrix, or nullopt when singular.
    std::optional<PrimeFieldMatrix> inverted() const {
        if (rows_ != cols_)
            throw std::invalid_argument("inverse of a non-square matrix");
        PrimeFieldMatrix aug(rows_, 2 * cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j)
                aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1 % p_;
        }
        auto pivots = aug.row_reduce();
        if (pivots.size() < rows_ || (rows_ > 0 && pivots.back() >= cols_))
            return std::nullopt;
        PrimeFieldMatrix inv(rows_, cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// Scales by an integer.
    PrimeFieldMatrix scaled(long long factor) const {
        PrimeFieldMatrix out = *this;
        const std::uint64_t f = reduce(factor);
        for (auto& v : out.data_)
            v = static_cast<value_type>(v * f % p_);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<value_type> data_;
};

} // namespace symmod
