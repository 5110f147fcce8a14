#pragma once

#include "insdel/channel.hpp"
#include "insdel/edit_distance.hpp"
#include "insdel/errors.hpp"
#include "insdel/sync_string.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace insdel {

/// Per-received-position index decisions; entries are 1..n, or 0 for bottom.
/// decode_indices itself never emits 0 (the argmin always exists); 0 enters
/// when a later stage invalidates a claim.
struct IndexDecoding {
    std::vector<std::uint32_t> indices;

    std::size_t size() const { return indices.size(); }
};

namespace detail {

/// Evaluates RSD(prefix_j(s), prefix_i(rx)) as an exact fraction, walking the
/// suffix-distance staircase k = 1, 2, ... and keeping the running maximum.
/// The running maximum only grows, so evaluation aborts as soon as the
/// candidate provably cannot beat (beat = smaller, or equal with j < best_j)
/// the incumbent best_num/best_den; aborted candidates are exactly those the
/// full computation would reject.
struct RsdArgmin {
    std::vector<std::uint32_t> row, prev;

    /// Returns true and sets out_num/out_den if the candidate completed
    /// (i.e. was not pruned). With has_incumbent = false no pruning occurs.
    bool eval(const std::vector<Symbol>& s, std::size_t j, const std::vector<Symbol>& rx,
              std::size_t i, bool has_incumbent, std::int64_t best_num, std::int64_t best_den,
              bool tie_wins, std::int64_t& out_num, std::int64_t& out_den) {
        // D[u][v] = ED(last u symbols of s[0..j), last v symbols of rx[0..i)).
        row.assign(i + 1, 0);
        for (std::size_t v = 0; v <= i; ++v) row[v] = static_cast<std::uint32_t>(v);
        std::int64_t max_num = 0, max_den = 1;

        auto update = [&](std::uint32_t ed, std::size_t k) {
            std::int64_t num = ed, den = 2 * static_cast<std::int64_t>(k);
            if (num * max_den > max_num * den) {
                max_num = num;
                max_den = den;
            }
        };
        auto beaten = [&]() {
            if (!has_incumbent) return false;
            std::int64_t lhs = max_num * best_den, rhs = best_num * max_den;
            return tie_wins ? lhs > rhs : lhs >= rhs;
        };

        for (std::size_t u = 1; u <= j; ++u) {
            prev.swap(row);
            row[0] = static_cast<std::uint32_t>(u);
            Symbol su = s[j - u];
            for (std::size_t v = 1; v <= i; ++v) {
                row[v] = su == rx[i - v] ? prev[v - 1] : 1 + std::min(prev[v], row[v - 1]);
            }
            update(row[std::min(u, i)], u);  // k = u: (min(u,j), min(u,i)) = (u, min(u,i))
            if (beaten()) return false;
        }
        for (std::size_t k = j + 1; k <= i; ++k) {  // j < i tail: (j, k)
            update(row[k], k);
            if (beaten()) return false;
        }
        out_num = max_num;
        out_den = max_den;
        return true;
    }
};

}  // namespace detail

/// Streaming minimum relative-suffix-distance decoding: for each received
/// prefix length i, outputs argmin over j in 1..n of
/// RSD(prefix_j(S), prefix_i(received)), ties broken toward the smallest j.
/// The decision for position i depends only on received[1..i]. Exact rational
/// comparisons throughout, so results are identical across platforms.
inline IndexDecoding decode_indices(const SyncString& s, const SymbolString& received) {
    if (s.content.alphabet_size != received.alphabet_size) {
        throw AlphabetMismatch("decode_indices: received alphabet differs from sync string");
    }
    std::size_t n = s.size(), m = received.size();
    IndexDecoding out;
    out.indices.reserve(m);
    detail::RsdArgmin scratch;
    std::uint32_t prev_choice = 0;

    for (std::size_t i = 1; i <= m; ++i) {
        // Evaluate the successor of the previous decision first: on a lightly
        // corrupted stream it is usually the argmin, which makes the pruning
        // threshold tight for every other candidate.
        std::size_t first = std::min<std::size_t>(n, prev_choice + 1);
        std::int64_t best_num = 0, best_den = 0;  // 0/0 sentinel = +infinity
        std::size_t best_j = 0;
        auto consider = [&](std::size_t j) {
            bool has_incumbent = best_j != 0;
            bool tie_wins = j < best_j;  // smaller index wins ties
            std::int64_t num, den;
            if (!scratch.eval(s.content.symbols, j, received.symbols, i, has_incumbent, best_num,
                              best_den, tie_wins, num, den)) {
                return;
            }
            bool better = !has_incumbent || num * best_den < best_num * den ||
                          (num * best_den == best_num * den && j < best_j);
            if (better) {
                best_num = num;
                best_den = den;
                best_j = j;
            }
        };
        consider(first);
        for (std::size_t j = 1; j <= n; ++j) {
            if (j != first) consider(j);
        }
        out.indices.push_back(static_cast<std::uint32_t>(best_j));
        prev_choice = static_cast<std::uint32_t>(best_j);
    }
    return out;
}

/// A successfully transmitted symbol whose decoded index differs from its
/// true index (a bottom on a transmitted symbol also counts).
struct Misdecoding {
    std::uint32_t received_pos;  // landing position f(i), 1-based
    std::uint32_t true_index;
    std::uint32_t decoded_index;  // 0 = bottom
};

struct MisdecodingReport {
    std::uint32_t count = 0;
    std::vector<Misdecoding> details;
};

inline MisdecodingReport count_misdecodings(const NoisePattern& pattern,
                                            const IndexDecoding& decoding) {
    if (decoding.size() != pattern.core_len()) {
        throw LengthMismatch("count_misdecodings: decoding length != pattern output length");
    }
    MisdecodingReport report;
    for (std::size_t t = 0; t < pattern.survivors.size(); ++t) {
        std::uint32_t true_index = pattern.survivors[t];
        std::uint32_t pos = pattern.landing[t];
        std::uint32_t decoded = decoding.indices[pos - 1];
        if (decoded != true_index) {
            report.count += 1;
            report.details.push_back({pos, true_index, decoded});
        }
    }
    return report;
}

}  // namespace insdel
