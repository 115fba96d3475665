#ifndef ADVLAB_WORD_HPP
#define ADVLAB_WORD_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace advlab {

// A fixed-length binary word. Bit i is the i-th transmitted symbol; bit 0
// corresponds to the first character of the textual form.
class BitWord {
   public:
    BitWord() = default;
    explicit BitWord(int n) : n_(n), blocks_((n + 63) / 64, 0) {}

    static BitWord from_string(std::string_view bits);

    int length() const { return n_; }

    bool get(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool value) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            blocks_[i >> 6] |= mask;
        else
            blocks_[i >> 6] &= ~mask;
    }

    int weight() const {
        int w = 0;
        for (std::uint64_t b : blocks_) w += std::popcount(b);
        return w;
    }

    friend int hamming_distance(const BitWord& a, const BitWord& b) {
        int d = 0;
        for (std::size_t k = 0; k < a.blocks_.size(); ++k) d += std::popcount(a.blocks_[k] ^ b.blocks_[k]);
        return d;
    }

    BitWord operator^(const BitWord& other) const {
        BitWord r(*this);
        for (std::size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] ^= other.blocks_[k];
        return r;
    }

    bool operator==(const BitWord& other) const = default;

    // Orders by the first differing position: the word with a 0 there comes
    // first. Matches lexicographic order of the textual form.
    bool operator<(const BitWord& other) const {
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const std::uint64_t diff = blocks_[k] ^ other.blocks_[k];
            if (diff != 0) {
                const int bit = std::countr_zero(diff);
                return ((blocks_[k] >> bit) & 1u) == 0;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Packs the word into the low bits of a u32. Requires length <= 32.
    std::uint32_t packed() const { return static_cast<std::uint32_t>(blocks_.empty() ? 0 : blocks_[0]); }

    static BitWord from_packed(std::uint32_t bits, int n) {
        BitWord w(n);
        if (!w.blocks_.empty()) w.blocks_[0] = bits;
        return w;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(n_);
        for (std::uint64_t b : blocks_) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }

    std::vector<std::uint64_t>& blocks() { return blocks_; }
    const std::vector<std::uint64_t>& blocks() const { return blocks_; }

   private:
    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

inline BitWord BitWord::from_string(std::string_view bits) {
    BitWord w(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(static_cast<int>(i), true);
        else if (bits[i] != '0')
            throw std::invalid_argument("codeword may contain only '0'/'1' characters");
    }
    return w;
}

struct BitWordHash {
    std::size_t operator()(const BitWord& w) const { return w.hash(); }
};

}  // namespace advlab

#endif
