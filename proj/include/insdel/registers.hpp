#pragma once

#include "insdel/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace insdel {

/// A finite classical alphabet; symbols are 0 .. size-1.
struct Alphabet {
    std::uint32_t size;

    explicit Alphabet(std::uint32_t size_) : size(size_) {
        if (size < 2) throw std::invalid_argument("alphabet size must be >= 2");
    }
};

struct SourceOrigin {
    std::uint32_t position;  // 1-based position in the sender's input
};

struct AdversarialOrigin {
    std::string tag;  // free-form; lets a strategy coordinate its insertions
};

using TokenOrigin = std::variant<SourceOrigin, AdversarialOrigin>;

namespace detail {
struct TokenState {
    std::uint64_t id;
    TokenOrigin origin;
    bool consumed = false;
    std::uint32_t reads = 0;
};
}  // namespace detail

/// Opaque stand-in for a quantum register's content: movable, unclonable at
/// the channel level, destroyed by measurement. Copies of this handle refer
/// to the same physical token; identity is the id.
class QuantumToken {
public:
    QuantumToken() = default;

    std::uint64_t id() const { return state_->id; }
    const TokenOrigin& origin() const { return state_->origin; }
    bool consumed() const { return state_->consumed; }
    std::uint32_t reads() const { return state_->reads; }

    bool is_source() const { return std::holds_alternative<SourceOrigin>(state_->origin); }
    std::uint32_t source_position() const { return std::get<SourceOrigin>(state_->origin).position; }

    /// Marks the token destroyed. Returns true if this was a repeat read.
    bool consume() {
        state_->reads += 1;
        bool repeat = state_->consumed;
        state_->consumed = true;
        return repeat;
    }

    bool same_token(const QuantumToken& other) const { return state_ == other.state_; }

private:
    friend class TokenMint;
    explicit QuantumToken(std::shared_ptr<detail::TokenState> s) : state_(std::move(s)) {}
    std::shared_ptr<detail::TokenState> state_;
};

/// Run-scoped token factory. Ids are unique within one mint's lifetime, which
/// is the uniqueness scope of a simulation run.
class TokenMint {
public:
    std::vector<QuantumToken> mint_source_tokens(std::uint32_t n) {
        if (n < 1) throw std::invalid_argument("mint_source_tokens: n must be >= 1");
        std::vector<QuantumToken> out;
        out.reserve(n);
        for (std::uint32_t i = 1; i <= n; ++i) {
            out.push_back(make(SourceOrigin{i}));
        }
        return out;
    }

    QuantumToken mint_adversarial(std::string tag) {
        return make(AdversarialOrigin{std::move(tag)});
    }

    std::uint64_t minted() const { return next_id_; }

private:
    QuantumToken make(TokenOrigin origin) {
        auto s = std::make_shared<detail::TokenState>();
        s->id = next_id_++;
        s->origin = std::move(origin);
        return QuantumToken(std::move(s));
    }
    std::uint64_t next_id_ = 0;
};

/// A classical payload is copyable and survives any number of reads.
using ClassicalData = std::uint32_t;

/// One channel register: a payload plus an optional classical header prepared
/// in a fixed basis by the sender, readable without disturbing the payload.
struct Register {
    std::variant<QuantumToken, ClassicalData> payload;
    std::optional<std::string> header;

    bool has_quantum_payload() const { return std::holds_alternative<QuantumToken>(payload); }
    const QuantumToken& token() const { return std::get<QuantumToken>(payload); }
    QuantumToken& token() { return std::get<QuantumToken>(payload); }
};

/// Nondisturbing header measurement (projective on the index subsystem only).
inline const std::string& read_header(const Register& r) {
    if (!r.header) throw MissingHeader();
    return *r.header;
}

/// Destructive payload measurement. A quantum token is consumed and the
/// reported bit comes from the caller-supplied outcome source (the active
/// measurement policy); classical data is returned as-is and is repeatable.
template <typename BitSource>
inline int destructive_read(Register& r, BitSource&& outcome_bit) {
    if (r.has_quantum_payload()) {
        r.token().consume();
        return outcome_bit();
    }
    return static_cast<int>(std::get<ClassicalData>(r.payload) & 1u);
}

template <typename BitSource>
inline int destructive_read(QuantumToken& t, BitSource&& outcome_bit) {
    t.consume();
    return outcome_bit();
}

struct TopMark {};     // end-of-transmission
struct BottomMark {};  // erasure; only ever appears in post-decoding output

using SeqEntry = std::variant<Register, TopMark, BottomMark>;

inline bool is_top(const SeqEntry& e) { return std::holds_alternative<TopMark>(e); }
inline bool is_bottom(const SeqEntry& e) { return std::holds_alternative<BottomMark>(e); }
inline bool is_register(const SeqEntry& e) { return std::holds_alternative<Register>(e); }

/// Channel-level register sequence over the enlarged alphabet.
struct TransmittedSeq {
    std::vector<SeqEntry> entries;

    std::size_t size() const { return entries.size(); }
};

}  // namespace insdel
