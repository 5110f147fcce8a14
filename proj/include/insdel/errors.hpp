#pragma once

#include <stdexcept>
#include <string>

namespace insdel {

struct AlphabetMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BothEmpty : std::invalid_argument {
    BothEmpty() : std::invalid_argument("relative suffix distance of two empty strings") {}
};

struct MissingHeader : std::logic_error {
    MissingHeader() : std::logic_error("register has no classical header") {}
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PatternMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstructionFailed : std::runtime_error {
    int attempts;
    explicit ConstructionFailed(int attempts_)
        : std::runtime_error("no sample verified after " + std::to_string(attempts_) +
                             " attempts; alphabet too small for (n, epsilon)"),
          attempts(attempts_) {}
};

struct InfeasibleParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace insdel
