#pragma once

#include "insdel/errors.hpp"
#include "insdel/rational.hpp"
#include "insdel/registers.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace insdel {

/// The adversary's choice instantiating the channel decomposition PAD . F . T:
/// survivors S (the correctly transmitted indices), the strictly monotone
/// landing map f : S -> 1..n-p+q, and the insertion count q. All indices are
/// 1-based. p = n - |S| deletions; p + q <= floor(n * delta).
struct NoisePattern {
    std::uint32_t n = 0;
    Rational delta{0};
    std::vector<std::uint32_t> survivors;
    std::vector<std::uint32_t> landing;
    std::uint32_t q = 0;

    std::uint32_t p() const { return n - static_cast<std::uint32_t>(survivors.size()); }
    std::int64_t budget() const { return floor_scaled(n, delta); }
    std::uint32_t core_len() const { return n - p() + q; }
    std::uint32_t output_len() const { return static_cast<std::uint32_t>(n + budget()); }

    void validate() const {
        if (survivors.size() != landing.size()) {
            throw PatternMismatch("survivors and landing lengths differ");
        }
        if (survivors.size() > n) throw PatternMismatch("more survivors than inputs");
        if (p() + q > budget()) throw PatternMismatch("p + q exceeds floor(n*delta)");
        std::uint32_t prev = 0;
        for (std::uint32_t s : survivors) {
            if (s < 1 || s > n || s <= prev) throw PatternMismatch("survivors not ascending in 1..n");
            prev = s;
        }
        prev = 0;
        for (std::uint32_t t : landing) {
            if (t < 1 || t > core_len() || t <= prev) {
                throw PatternMismatch("landing not strictly monotone into 1..n-p+q");
            }
            prev = t;
        }
    }

    static NoisePattern identity(std::uint32_t n, Rational delta) {
        NoisePattern pat;
        pat.n = n;
        pat.delta = delta;
        pat.survivors.resize(n);
        pat.landing.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) pat.survivors[i] = pat.landing[i] = i + 1;
        pat.q = 0;
        return pat;
    }
};

/// Entry-level channel application shared by the register channel and the
/// binary wire channel of the qubit protocol. Survivor entries land at f(i)
/// untouched; the remaining core slots take adversarial fill in order;
/// the tail is padded with TopMark up to n + floor(n*delta).
template <typename Entry>
inline std::vector<std::variant<Entry, TopMark>> apply_channel_entries(
    std::span<const Entry> input, const NoisePattern& pattern, std::span<const Entry> fill) {
    pattern.validate();
    if (input.size() != pattern.n) {
        throw PatternMismatch("input length does not match pattern.n");
    }
    if (fill.size() != pattern.q) {
        throw PatternMismatch("fill must supply exactly q entries");
    }
    std::uint32_t core = pattern.core_len();
    std::vector<std::variant<Entry, TopMark>> out;
    out.reserve(pattern.output_len());
    std::vector<char> taken(core + 1, 0);
    for (std::size_t t = 0; t < pattern.survivors.size(); ++t) taken[pattern.landing[t]] = 1;

    std::size_t surv_at = 0, fill_at = 0;
    for (std::uint32_t pos = 1; pos <= core; ++pos) {
        if (taken[pos]) {
            out.emplace_back(input[pattern.survivors[surv_at] - 1]);
            ++surv_at;
        } else {
            out.emplace_back(fill[fill_at++]);
        }
    }
    for (std::uint32_t pos = core; pos < pattern.output_len(); ++pos) out.emplace_back(TopMark{});
    return out;
}

/// Register-channel application. Adversarial fill may contain TopMark entries
/// only when allow_top_forgery is set (stress testing); forged quantum
/// payloads must be fresh tokens: a token id appearing twice in the output
/// would be cloning.
inline TransmittedSeq apply_channel(std::span<const Register> input, const NoisePattern& pattern,
                                    std::span<const SeqEntry> fill,
                                    bool allow_top_forgery = false) {
    pattern.validate();
    if (input.size() != pattern.n) throw PatternMismatch("input length does not match pattern.n");
    if (fill.size() != pattern.q) throw PatternMismatch("fill must supply exactly q entries");
    for (const SeqEntry& e : fill) {
        if (is_bottom(e)) throw PatternMismatch("adversary cannot insert erasure marks");
        if (is_top(e) && !allow_top_forgery) {
            throw PatternMismatch("top-mark forgery disabled (enable allow_top_forgery)");
        }
    }

    std::uint32_t core = pattern.core_len();
    TransmittedSeq out;
    out.entries.reserve(pattern.output_len());
    std::vector<char> taken(core + 1, 0);
    for (std::size_t t = 0; t < pattern.survivors.size(); ++t) taken[pattern.landing[t]] = 1;

    std::size_t surv_at = 0, fill_at = 0;
    for (std::uint32_t pos = 1; pos <= core; ++pos) {
        if (taken[pos]) {
            out.entries.emplace_back(input[pattern.survivors[surv_at] - 1]);
            ++surv_at;
        } else {
            out.entries.emplace_back(fill[fill_at++]);
        }
    }
    for (std::uint32_t pos = core; pos < pattern.output_len(); ++pos) {
        out.entries.emplace_back(TopMark{});
    }

    std::unordered_set<std::uint64_t> seen;
    for (const SeqEntry& e : out.entries) {
        if (!is_register(e)) continue;
        const Register& r = std::get<Register>(e);
        if (r.has_quantum_payload() && !seen.insert(r.token().id()).second) {
            throw PatternMismatch("token id appears twice in channel output (cloning)");
        }
    }
    return out;
}

/// Exhaustive, duplicate-free enumeration of all (S, f) choices with
/// p + q <= budget. Guarded to tiny sizes; this is a testing oracle.
inline std::vector<NoisePattern> enumerate_patterns(std::uint32_t n, std::uint32_t budget) {
    if (n > 12 || budget > 3) throw TooLarge("enumerate_patterns: n <= 12, budget <= 3");
    std::vector<NoisePattern> out;

    // All k-subsets of 1..m, lexicographic.
    auto subsets = [](std::uint32_t m, std::uint32_t k) {
        std::vector<std::vector<std::uint32_t>> result;
        std::vector<std::uint32_t> cur(k);
        for (std::uint32_t t = 0; t < k; ++t) cur[t] = t + 1;
        if (k > m) return result;
        for (;;) {
            result.push_back(cur);
            if (k == 0) break;
            std::int64_t t = k - 1;
            while (t >= 0 && cur[t] == m - (k - 1 - t)) --t;
            if (t < 0) break;
            ++cur[t];
            for (std::size_t u = t + 1; u < k; ++u) cur[u] = cur[u - 1] + 1;
        }
        return result;
    };

    for (std::uint32_t p = 0; p <= budget && p <= n; ++p) {
        std::uint32_t keep = n - p;
        auto survivor_sets = subsets(n, keep);
        for (std::uint32_t q = 0; p + q <= budget; ++q) {
            auto landings = subsets(keep + q, keep);
            for (const auto& surv : survivor_sets) {
                for (const auto& land : landings) {
                    NoisePattern pat;
                    pat.n = n;
                    pat.delta = Rational(budget == 0 ? 1 : budget, n);
                    if (budget == 0) pat.delta = Rational(0);
                    pat.survivors = surv;
                    pat.landing = land;
                    pat.q = q;
                    pat.validate();
                    out.push_back(std::move(pat));
                }
            }
        }
    }
    return out;
}

inline nlohmann::ordered_json pattern_to_json(const NoisePattern& pat) {
    nlohmann::ordered_json j;
    j["n"] = pat.n;
    j["delta"] = to_string(pat.delta);
    j["survivors"] = pat.survivors;
    auto landing = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < pat.survivors.size(); ++t) {
        landing.push_back({pat.survivors[t], pat.landing[t]});
    }
    j["landing"] = landing;
    j["q"] = pat.q;
    return j;
}

inline NoisePattern pattern_from_json(const nlohmann::json& j) {
    NoisePattern pat;
    pat.n = j.at("n").get<std::uint32_t>();
    pat.delta = parse_rational(j.at("delta").get<std::string>());
    pat.q = j.at("q").get<std::uint32_t>();
    for (const auto& pair : j.at("landing")) {
        pat.survivors.push_back(pair.at(0).get<std::uint32_t>());
        pat.landing.push_back(pair.at(1).get<std::uint32_t>());
    }
    pat.validate();
    return pat;
}

}  // namespace insdel
