#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trendpaa {

/// Fixed-size bit sequence packed into 64-bit words, with a word-level
/// XOR population count. Unused bits of the last word stay zero.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    /// Number of set bits.
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t word : words_) c += static_cast<std::size_t>(std::popcount(word));
        return c;
    }

    /// Number of set bits in [begin, end).
    std::size_t count_range(std::size_t begin, std::size_t end) const {
        std::size_t c = 0;
        for (std::size_t i = begin; i < end; ++i) c += test(i) ? 1 : 0;
        return c;
    }

    /// "0110000" style rendering, index 0 leftmost.
    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitString&) const = default;

    friend std::size_t xor_count(const BitString& a, const BitString& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("BitString: length mismatch in xor_count");
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
        return c;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace trendpaa
