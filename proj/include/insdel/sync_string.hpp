#pragma once

#include "insdel/edit_distance.hpp"
#include "insdel/errors.hpp"
#include "insdel/parallel.hpp"
#include "insdel/prng.hpp"
#include "insdel/rational.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace insdel {

/// Indices are 1-based; intervals are half-open: the triple (i, j, k) names
/// the adjacent substrings s[i..j) and s[j..k), 1 <= i < j < k <= n+1.
struct SyncViolation {
    std::size_t i, j, k;
};

struct VerifyResult {
    bool ok;
    std::optional<SyncViolation> violation;
};

namespace detail {

/// Scans triples with i in [i_lo, i_hi] and span k-i <= max_span, in
/// lexicographic (i, j, k) order; returns the first violation found.
/// For each (i, j) one prefix-DP against s[j..) yields ED(s[i..j), s[j..k))
/// for every k at once.
inline std::optional<SyncViolation> scan_triples(const std::vector<Symbol>& s,
                                                 std::int64_t eps_num, std::int64_t eps_den,
                                                 std::size_t i_lo, std::size_t i_hi,
                                                 std::size_t max_span) {
    std::size_t n = s.size();
    std::vector<std::uint32_t> row, prev;
    for (std::size_t i = i_lo; i <= i_hi && i <= n; ++i) {
        std::size_t span_cap = std::min(n + 1, i + max_span);
        for (std::size_t j = i + 1; j <= n && j < span_cap; ++j) {
            // A = s[i..j), B = s[j..min(n+1, i+max_span))
            std::size_t alen = j - i;
            std::size_t blen = span_cap - j;
            row.assign(blen + 1, 0);
            prev.assign(blen + 1, 0);
            for (std::size_t v = 0; v <= blen; ++v) row[v] = static_cast<std::uint32_t>(v);
            for (std::size_t u = 1; u <= alen; ++u) {
                std::swap(prev, row);
                row[0] = static_cast<std::uint32_t>(u);
                Symbol au = s[i - 1 + u - 1];
                for (std::size_t v = 1; v <= blen; ++v) {
                    row[v] = au == s[j - 1 + v - 1] ? prev[v - 1]
                                                    : 1 + std::min(prev[v], row[v - 1]);
                }
            }
            for (std::size_t v = 1; v <= blen; ++v) {
                std::size_t k = j + v;
                // violation: ED <= (1 - eps) * (k - i)
                std::int64_t lhs = static_cast<std::int64_t>(row[v]) * eps_den;
                std::int64_t rhs = (eps_den - eps_num) * static_cast<std::int64_t>(k - i);
                if (lhs <= rhs) return SyncViolation{i, j, k};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Exhaustively checks the epsilon-synchronization property: for all
/// 1 <= i < j < k <= n+1, insdel_distance(s[i..j), s[j..k)) > (1-eps)(k-i).
/// Returns the lexicographically first violating triple if any.
inline VerifyResult verify_sync_property(const SymbolString& s, const Rational& epsilon) {
    if (s.empty()) throw std::invalid_argument("verify_sync_property: empty string");
    if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
        throw std::invalid_argument("verify_sync_property: epsilon must be in (0,1)");
    }
    std::size_t n = s.size();
    std::int64_t num = epsilon.numerator(), den = epsilon.denominator();

    unsigned workers = max_parallel();
    if (n < 192 || workers <= 1) {
        auto v = detail::scan_triples(s.symbols, num, den, 1, n, n + 1);
        return {!v.has_value(), v};
    }

    // Parallel over blocks of i. Workers skip blocks that cannot beat the
    // best (smallest-i) violation found so far; the final reduce keeps the
    // lexicographic minimum, so the result matches the serial scan.
    std::size_t blocks = workers * 4;
    std::size_t block_len = (n + blocks - 1) / blocks;
    std::atomic<std::size_t> best_i{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<SyncViolation>> found(blocks);
    parallel_for(0, static_cast<std::int64_t>(blocks), [&](std::int64_t b) {
        std::size_t lo = 1 + block_len * static_cast<std::size_t>(b);
        std::size_t hi = std::min(n, lo + block_len - 1);
        if (lo > n || lo > best_i.load(std::memory_order_relaxed)) return;
        auto v = detail::scan_triples(s.symbols, num, den, lo, hi, n + 1);
        if (v) {
            found[static_cast<std::size_t>(b)] = v;
            std::size_t cur = best_i.load(std::memory_order_relaxed);
            while (v->i < cur && !best_i.compare_exchange_weak(cur, v->i)) {
            }
        }
    });
    std::optional<SyncViolation> best;
    for (const auto& v : found) {
        if (!v) continue;
        if (!best || v->i < best->i || (v->i == best->i && (v->j < best->j || (v->j == best->j && v->k < best->k)))) {
            best = v;
        }
    }
    return {!best.has_value(), best};
}

/// A verified epsilon-synchronization string.
struct SyncString {
    SymbolString content;
    Rational epsilon;

    std::size_t size() const { return content.size(); }
};

/// Default alphabet size heuristic: 4 * ceil(1/eps^2). The known existence
/// bound is Theta(1/eps^4) with an unspecified constant; at desk scale much
/// smaller alphabets verify, and the verifier is the ground truth either way.
inline std::uint32_t recommended_alphabet_size(const Rational& epsilon) {
    Rational inv = Rational(1) / (epsilon * epsilon);
    std::int64_t c = ceil_scaled(1, inv);
    std::int64_t size = 4 * c;
    if (size < 2) size = 2;
    if (size > (1 << 20)) size = 1 << 20;
    return static_cast<std::uint32_t>(size);
}

/// Builds a verified epsilon-synchronization string of length n.
///
/// For n <= alphabet size the all-distinct prefix string is returned
/// directly (it satisfies the property for every epsilon). Otherwise each
/// attempt draws a uniform sample and then locally resamples violating
/// windows until the exhaustive verifier accepts; plain rejection sampling
/// has vanishing acceptance probability beyond a few dozen symbols (two
/// equal adjacent symbols already violate the property for any epsilon).
/// Deterministic given the seed.
inline SyncString construct_sync_string(std::uint32_t n, const Rational& epsilon,
                                        const Alphabet& alphabet, std::uint64_t seed,
                                        int max_attempts = 8) {
    if (n < 1) throw std::invalid_argument("construct_sync_string: n must be >= 1");
    if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
        throw std::invalid_argument("construct_sync_string: epsilon must be in (0,1)");
    }
    if (n <= alphabet.size) {
        std::vector<Symbol> syms(n);
        for (std::uint32_t t = 0; t < n; ++t) syms[t] = t;
        return SyncString{SymbolString(std::move(syms), alphabet.size), epsilon};
    }

    constexpr std::size_t kWindow = 64;
    const std::int64_t repair_budget = 64 + 12LL * n;
    std::int64_t num = epsilon.numerator(), den = epsilon.denominator();
    Prng rng(seed);

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Symbol> syms(n);
        for (auto& s : syms) s = static_cast<Symbol>(rng.below(alphabet.size));
        std::int64_t repairs = 0;
        while (repairs <= repair_budget) {
            auto v = detail::scan_triples(syms, num, den, 1, n, kWindow);
            if (!v) {
                SymbolString candidate(syms, alphabet.size);
                VerifyResult full = verify_sync_property(candidate, epsilon);
                if (full.ok) return SyncString{std::move(candidate), epsilon};
                v = full.violation;
            }
            for (std::size_t t = v->i; t < v->k; ++t) {
                syms[t - 1] = static_cast<Symbol>(rng.below(alphabet.size));
            }
            ++repairs;
        }
    }
    throw ConstructionFailed(max_attempts);
}

/// construct_sync_string with the default alphabet, doubling the alphabet on
/// ConstructionFailed up to alphabet_cap.
inline SyncString construct_sync_string_auto(std::uint32_t n, const Rational& epsilon,
                                             std::uint64_t seed,
                                             std::uint32_t alphabet_cap = 1 << 16) {
    std::uint32_t size = recommended_alphabet_size(epsilon);
    if (size > alphabet_cap) size = alphabet_cap;
    int raise = 0;
    for (;;) {
        try {
            return construct_sync_string(n, epsilon, Alphabet(size), seed + raise, 4);
        } catch (const ConstructionFailed&) {
            if (size >= alphabet_cap) throw;
            size = std::min<std::uint64_t>(2ull * size, alphabet_cap);
            ++raise;
        }
    }
}

/// Text format: line 1 = n, line 2 = epsilon "p/q", line 3 = symbols.
inline std::string sync_string_to_text(const SyncString& s) {
    std::ostringstream out;
    out << s.size() << "\n" << to_string(s.epsilon) << "\n";
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (t) out << ' ';
        out << s.content.symbols[t];
    }
    out << "\n";
    return out.str();
}

/// Parses the text format. The alphabet size is not part of the format; it
/// is taken as alphabet_hint if given, else max symbol + 1 (at least 2).
/// The result is re-verified unless skip_verify.
inline SyncString sync_string_from_text(const std::string& text,
                                        std::uint32_t alphabet_hint = 0,
                                        bool skip_verify = false) {
    std::istringstream in(text);
    std::size_t n = 0;
    std::string eps_text;
    if (!(in >> n >> eps_text)) throw std::invalid_argument("malformed sync string file");
    Rational eps = parse_rational(eps_text);
    std::vector<Symbol> syms(n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!(in >> syms[t])) throw std::invalid_argument("sync string file: too few symbols");
    }
    std::uint32_t alphabet = alphabet_hint;
    if (alphabet == 0) {
        for (Symbol s : syms) alphabet = std::max(alphabet, s + 1);
        alphabet = std::max<std::uint32_t>(alphabet, 2);
    }
    SyncString s{SymbolString(std::move(syms), alphabet), eps};
    if (!skip_verify) {
        VerifyResult r = verify_sync_property(s.content, s.epsilon);
        if (!r.ok) {
            throw std::invalid_argument("sync string file fails verification at (" +
                                        std::to_string(r.violation->i) + "," +
                                        std::to_string(r.violation->j) + "," +
                                        std::to_string(r.violation->k) + ")");
        }
    }
    return s;
}

inline void save_sync_string(const SyncString& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << sync_string_to_text(s);
}

inline SyncString load_sync_string(const std::string& path, std::uint32_t alphabet_hint = 0,
                                   bool skip_verify = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sync_string_from_text(buf.str(), alphabet_hint, skip_verify);
}

}  // namespace insdel
