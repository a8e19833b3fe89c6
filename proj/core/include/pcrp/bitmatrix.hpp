#ifndef PCRP_BITMATRIX_HPP
#define PCRP_BITMATRIX_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace pcrp {

/// Dense square bit matrix, row-major over 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_(static_cast<std::size_t>(n + 63) / 64) {
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }

    int size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(int r, int c) const {
        return (row(r)[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c) { row(r)[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64); }
    void clear(int r, int c) { row(r)[static_cast<std::size_t>(c) / 64] &= ~(std::uint64_t{1} << (c % 64)); }

    std::uint64_t* row(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }

    void or_row_into(int src, int dst) {
        const std::uint64_t* s = row(src);
        std::uint64_t* d = row(dst);
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    int row_popcount(int r) const {
        const std::uint64_t* p = row(r);
        int total = 0;
        for (std::size_t w = 0; w < words_; ++w) total += std::popcount(p[w]);
        return total;
    }

    /// Calls fn(column) for every set bit in row r.
    template <typename Fn>
    void for_each_in_row(int r, Fn&& fn) const {
        const std::uint64_t* p = row(r);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = p[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace pcrp

#endif
