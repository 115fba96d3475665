#ifndef ADVLAB_TESTS_SUPPORT_HPP
#define ADVLAB_TESTS_SUPPORT_HPP

// Shared test fixtures: seeded random codes, random linear codes with dual
// distance >= 3 by construction, and an exhaustive A(n,d) oracle that is
// independent of the LP machinery (max clique over the distance >= d graph).

#include <bit>
#include <bitset>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <unordered_set>
#include <utility>
#include <vector>

#include "advlab/code.hpp"
#include "advlab/rng.hpp"
#include "advlab/word.hpp"

namespace testsupport {

// Row span of a random k x n generator matrix whose columns are distinct and
// nonzero (as vectors in F_2^k). Distinct nonzero columns mean no dual word
// of weight 1 or 2, i.e. dual distance >= 3; tests still verify that
// computationally rather than trusting the construction.
inline advlab::Code random_linear_code(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > 16) throw std::invalid_argument("random_linear_code: k out of range");
    const std::uint64_t ncols = (1ull << k) - 1;
    if (static_cast<std::uint64_t>(n) > ncols)
        throw std::invalid_argument("random_linear_code: need n <= 2^k - 1 distinct columns");

    advlab::SplitMix64 rng(seed);
    std::vector<std::uint32_t> cols;
    std::unordered_set<std::uint32_t> used;
    while (cols.size() < static_cast<std::size_t>(n)) {
        const auto v = static_cast<std::uint32_t>(1 + rng.next_below(ncols));
        if (used.insert(v).second) cols.push_back(v);
    }

    std::vector<advlab::BitWord> rows(k, advlab::BitWord(n));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < k; ++r)
            if ((cols[i] >> r) & 1u) rows[r].set(i, true);

    std::vector<advlab::BitWord> words{advlab::BitWord(n)};
    std::unordered_set<advlab::BitWord, advlab::BitWordHash> seen{advlab::BitWord(n)};
    for (const auto& row : rows) {
        const std::size_t snapshot = words.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            advlab::BitWord cand = words[i] ^ row;
            if (seen.insert(cand).second) words.push_back(std::move(cand));
        }
    }
    return advlab::Code(n, std::move(words));
}

// Exact A(n, d) for n <= 7 by branch-and-bound max clique (greedy-coloring
// bound) on the graph whose vertices are all words and whose edges join
// words at Hamming distance >= d.
inline int max_code_size(int n, int d) {
    if (n < 1 || n > 7 || d < 1 || d > n) throw std::invalid_argument("max_code_size: bad n/d");
    const int N = 1 << n;
    std::vector<std::bitset<128>> adj(N);
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < u; ++v)
            if (std::popcount(static_cast<unsigned>(u ^ v)) >= d) {
                adj[u][v] = true;
                adj[v][u] = true;
            }

    int best = 0;
    std::function<void(std::bitset<128>, int)> expand = [&](std::bitset<128> cand, int rsize) {
        if (cand.none()) {
            if (rsize > best) best = rsize;
            return;
        }
        // greedy coloring: color[i] bounds the clique extension from verts[i]
        std::vector<int> verts, color;
        std::bitset<128> left = cand;
        int ncolors = 0;
        while (left.any()) {
            ++ncolors;
            std::bitset<128> avail = left;
            while (avail.any()) {
                const int v = static_cast<int>(avail._Find_first());
                verts.push_back(v);
                color.push_back(ncolors);
                avail.reset(v);
                left.reset(v);
                avail &= ~adj[v];
            }
        }
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (rsize + color[i] <= best) return;
            const int v = verts[i];
            expand(cand & adj[v], rsize + 1);
            cand.reset(v);
        }
    };
    std::bitset<128> all;
    for (int v = 0; v < N; ++v) all.set(v);
    expand(all, 0);
    return best;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& suffix) {
        static int counter = 0;
        path = "advlab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
               suffix;
        path = std::string(P_tmpdir) + "/" + path;
    }
    ~TempFile() { std::remove(path.c_str()); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
};

#ifdef ADVLAB_CLI_PATH
// Runs a shell command, capturing stdout; returns {exit code, captured text}.
inline std::pair<int, std::string> run_shell(const std::string& cmd) {
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = ::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int rc = ::pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

inline std::pair<int, std::string> run_cli(const std::string& args) {
    return run_shell(std::string(ADVLAB_CLI_PATH) + " " + args + " 2>/dev/null");
}

// Same, with an environment prefix such as "ADVLAB_THREADS=2".
inline std::pair<int, std::string> run_cli_env(const std::string& env, const std::string& args) {
    return run_shell("env " + env + " " + std::string(ADVLAB_CLI_PATH) + " " + args +
                     " 2>/dev/null");
}
#endif

}  // namespace testsupport

#endif
