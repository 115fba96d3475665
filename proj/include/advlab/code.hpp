#ifndef ADVLAB_CODE_HPP
#define ADVLAB_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "advlab/word.hpp"

namespace advlab {

// A binary code: an ordered list of M >= 1 pairwise distinct words of common
// length n. Distinctness is required, not repaired: a duplicate in the input
// is a user error (it would silently break A_0 = 1).
class Code {
   public:
    Code(int n, std::vector<BitWord> words);

    int length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<BitWord>& words() const { return words_; }
    const BitWord& word(std::size_t index) const { return words_[index]; }

    std::optional<std::size_t> index_of(const BitWord& w) const;
    bool contains(const BitWord& w) const { return index_of(w).has_value(); }

    // Generators with known spectra. full_space/parity enumerate 2^n resp.
    // 2^(n-1) words and are capped at n <= 20.
    static Code full_space(int n);
    static Code repetition(int n);
    static Code parity(int n);
    static Code hamming74();
    static Code random_code(int n, std::size_t m, std::uint64_t seed);

   private:
    int n_;
    std::vector<BitWord> words_;
};

// Text format: one codeword per line of '0'/'1', '#' comment lines and blank
// lines ignored, all codeword lines of equal length. Throws InputDataError.
Code load_code(std::istream& in);
Code load_code_file(const std::string& path);
void save_code(const Code& code, std::ostream& out);
void save_code_file(const Code& code, const std::string& path);

}  // namespace advlab

#endif
