#pragma once

#include "insdel/errors.hpp"
#include "insdel/rational.hpp"
#include "insdel/registers.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace insdel {

using Symbol = std::uint32_t;

/// A string over a finite alphabet. Symbols are validated on construction.
struct SymbolString {
    std::vector<Symbol> symbols;
    std::uint32_t alphabet_size;

    SymbolString(std::vector<Symbol> syms, std::uint32_t alphabet)
        : symbols(std::move(syms)), alphabet_size(alphabet) {
        for (Symbol s : symbols) {
            if (s >= alphabet_size) {
                throw std::invalid_argument("symbol " + std::to_string(s) +
                                            " outside alphabet of size " +
                                            std::to_string(alphabet_size));
            }
        }
    }

    /// Convenience for tests: each character becomes a symbol 'a'->0, 'b'->1, ...
    static SymbolString from_chars(const std::string& text, std::uint32_t alphabet) {
        std::vector<Symbol> syms;
        syms.reserve(text.size());
        for (char ch : text) syms.push_back(static_cast<Symbol>(ch - 'a'));
        return SymbolString(std::move(syms), alphabet);
    }

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

/// Length of the longest common subsequence, O(|a|*|b|) time, linear space.
inline std::uint32_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::uint32_t> row(b.size() + 1, 0);
    for (std::size_t u = 1; u <= a.size(); ++u) {
        std::uint32_t diag = 0;  // row[v-1] from the previous row
        for (std::size_t v = 1; v <= b.size(); ++v) {
            std::uint32_t above = row[v];
            row[v] = a[u - 1] == b[v - 1] ? diag + 1 : std::max(row[v], row[v - 1]);
            diag = above;
        }
    }
    return row[b.size()];
}

/// Insertion-deletion edit distance (no substitutions): |a| + |b| - 2 LCS.
inline std::uint32_t insdel_distance_raw(std::span<const Symbol> a, std::span<const Symbol> b) {
    return static_cast<std::uint32_t>(a.size() + b.size()) - 2 * lcs_length(a, b);
}

inline std::uint32_t insdel_distance(const SymbolString& a, const SymbolString& b) {
    if (a.alphabet_size != b.alphabet_size) {
        throw AlphabetMismatch("insdel_distance: alphabets differ");
    }
    return insdel_distance_raw(a.symbols, b.symbols);
}

/// Table of suffix edit distances: entry (u, v) = distance between the last u
/// symbols of a and the last v symbols of b. Row-major, (|a|+1) x (|b|+1).
struct SuffixDistanceTable {
    std::size_t rows, cols;  // |a|+1, |b|+1
    std::vector<std::uint32_t> d;

    std::uint32_t at(std::size_t u, std::size_t v) const { return d[u * cols + v]; }
};

inline SuffixDistanceTable suffix_distance_table(std::span<const Symbol> a,
                                                 std::span<const Symbol> b) {
    SuffixDistanceTable t;
    t.rows = a.size() + 1;
    t.cols = b.size() + 1;
    t.d.resize(t.rows * t.cols);
    for (std::size_t v = 0; v < t.cols; ++v) t.d[v] = static_cast<std::uint32_t>(v);
    for (std::size_t u = 1; u < t.rows; ++u) {
        std::uint32_t* cur = t.d.data() + u * t.cols;
        const std::uint32_t* prev = cur - t.cols;
        cur[0] = static_cast<std::uint32_t>(u);
        Symbol au = a[a.size() - u];
        for (std::size_t v = 1; v < t.cols; ++v) {
            cur[v] = au == b[b.size() - v] ? prev[v - 1] : 1 + std::min(prev[v], cur[v - 1]);
        }
    }
    return t;
}

/// Relative suffix distance: max over k in 1..max(|a|,|b|) of
/// ED(suffix_k(a), suffix_k(b)) / 2k, where suffix_k takes the last
/// min(k, len) symbols. Always in [0, 1].
inline Rational relative_suffix_distance(const SymbolString& a, const SymbolString& b) {
    if (a.alphabet_size != b.alphabet_size) {
        throw AlphabetMismatch("relative_suffix_distance: alphabets differ");
    }
    if (a.empty() && b.empty()) throw BothEmpty();
    SuffixDistanceTable t = suffix_distance_table(a.symbols, b.symbols);
    std::size_t kmax = std::max(a.size(), b.size());
    Rational best(0);
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::uint32_t ed = t.at(std::min(k, a.size()), std::min(k, b.size()));
        Rational cand(ed, 2 * static_cast<std::int64_t>(k));
        if (cand > best) best = cand;
    }
    return best;
}

}  // namespace insdel
