#include "advlab/code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "advlab/errors.hpp"
#include "advlab/rng.hpp"

namespace advlab {

Code::Code(int n, std::vector<BitWord> words) : n_(n), words_(std::move(words)) {
    if (n_ < 1) throw std::invalid_argument("code length must be positive");
    if (words_.empty()) throw std::invalid_argument("code must contain at least one word");
    std::unordered_set<BitWord, BitWordHash> seen;
    seen.reserve(words_.size());
    for (const BitWord& w : words_) {
        if (w.length() != n_) throw std::invalid_argument("all codewords must have length n");
        if (!seen.insert(w).second) {
            throw std::invalid_argument("duplicate codeword: " + w.to_string());
        }
    }
}

std::optional<std::size_t> Code::index_of(const BitWord& w) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] == w) return i;
    return std::nullopt;
}

namespace {
constexpr int kEnumerationCap = 20;  // full_space/parity materialize up to 2^n words
}

Code Code::full_space(int n) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("full_space supports 1 <= n <= " + std::to_string(kEnumerationCap));
    std::vector<BitWord> words;
    words.reserve(std::size_t(1) << n);
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v) words.push_back(BitWord::from_packed(v, n));
    return Code(n, std::move(words));
}

Code Code::repetition(int n) {
    if (n < 1) throw std::invalid_argument("repetition code needs n >= 1");
    BitWord zeros(n), ones(n);
    for (int i = 0; i < n; ++i) ones.set(i, true);
    return Code(n, {zeros, ones});
}

Code Code::parity(int n) {
    if (n < 2 || n > kEnumerationCap)
        throw std::invalid_argument("parity code supports 2 <= n <= " + std::to_string(kEnumerationCap));
    std::vector<BitWord> words;
    words.reserve(std::size_t(1) << (n - 1));
    for (std::uint32_t v = 0; v < (std::uint32_t(1) << n); ++v) {
        if (std::popcount(v) % 2 == 0) words.push_back(BitWord::from_packed(v, n));
    }
    return Code(n, std::move(words));
}

Code Code::hamming74() {
    // Systematic [7,4] Hamming code; G = [I_4 | P] with parity rules
    // p1 = d1+d2+d4, p2 = d1+d3+d4, p3 = d2+d3+d4 (see README).
    static const std::uint32_t rows[4] = {
        0b0110001,  // 1000 110 (bit 0 = leftmost character)
        0b1010010,
        0b1100100,
        0b1111000,
    };
    std::vector<BitWord> words;
    words.reserve(16);
    for (std::uint32_t u = 0; u < 16; ++u) {
        std::uint32_t cw = 0;
        for (int i = 0; i < 4; ++i)
            if ((u >> i) & 1u) cw ^= rows[i];
        words.push_back(BitWord::from_packed(cw, 7));
    }
    return Code(7, std::move(words));
}

Code Code::random_code(int n, std::size_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random code needs n >= 1");
    if (m < 1) throw std::invalid_argument("random code needs M >= 1");
    if (n < 63 && m > (std::uint64_t(1) << n))
        throw std::invalid_argument("cannot draw " + std::to_string(m) + " distinct words of length " +
                                    std::to_string(n));
    SplitMix64 rng(seed);
    std::unordered_set<BitWord, BitWordHash> seen;
    std::vector<BitWord> words;
    words.reserve(m);
    while (words.size() < m) {
        BitWord w(n);
        for (auto& block : w.blocks()) block = rng.next();
        const int tail = n & 63;
        if (tail != 0) w.blocks().back() &= (std::uint64_t(1) << tail) - 1;
        if (seen.insert(w).second) words.push_back(std::move(w));
    }
    return Code(n, std::move(words));
}

Code load_code(std::istream& in) {
    std::vector<BitWord> words;
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        BitWord w;
        try {
            w = BitWord::from_string(line);
        } catch (const std::invalid_argument& e) {
            throw InputDataError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (n < 0)
            n = w.length();
        else if (w.length() != n)
            throw InputDataError("line " + std::to_string(lineno) + ": codeword length " +
                                 std::to_string(w.length()) + " differs from " + std::to_string(n));
        words.push_back(std::move(w));
    }
    if (words.empty()) throw InputDataError("no codewords in input");
    try {
        return Code(n, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw InputDataError(e.what());
    }
}

Code load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputDataError("cannot open code file: " + path);
    return load_code(in);
}

void save_code(const Code& code, std::ostream& out) {
    for (const BitWord& w : code.words()) out << w.to_string() << '\n';
}

void save_code_file(const Code& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputDataError("cannot write code file: " + path);
    save_code(code, out);
    out.flush();
    if (!out) throw InputDataError("write failed: " + path);
}

}  // namespace advlab
