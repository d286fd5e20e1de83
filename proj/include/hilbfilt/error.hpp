#pragma once

#include <stdexcept>
#include <string>

namespace hilbfilt {

/// Engine error with a machine-readable code. Operational failures
/// (bad input, capped instances) throw these; logic bugs use assertions.
class Error : public std::runtime_error {
public:
    enum class Code {
        DimensionMismatch,   // operands live in different ambient rings
        InfiniteColength,    // colength of a non-m-primary ideal
        BoxCapExceeded,      // pure-power box larger than the configured cap
        UndefinedDimension,  // Krull dimension of the zero module
        ZeroDimensionalModule, // module with dim 0 (theorems need d >= 1)
        UnitAnnihilator,     // M = R/R is the zero module
        NotPrimary,          // base ideal of a filtration must be m-primary
        InvalidFiltration,   // construction data violates a chain invariant
        NotQFiltration,      // E-filtration precondition Q <= F1 fails
        NonStabilized,       // Hilbert function did not stabilize below the horizon cap
        InvalidMultiplicity, // fitted e_0 <= 0
        MismatchedPair,      // pair checks need a common module and base ideal
        NotCompleteIntersection, // parameter ideal must be (x_1^a1, ..., x_D^aD)
        ParseError,          // malformed monomial / input file
        InvalidSpec,         // campaign spec violates its invariants
        IoError,
        CacheCorrupt,        // cached value disagrees with recomputation
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

} // namespace hilbfilt
