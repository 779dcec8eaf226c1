#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mf/frame.hpp"
#include "mf/z2.hpp"

namespace mf {

// The Morse chain complex: the critical simplexes with the differential
// d(s) = reference(boundary(s)). When built from the co-reference the same
// structure holds the codifferential d*(s) = coreference(coboundary(s)),
// which maps dimension p to p+1.
struct MorseComplex {
    std::vector<std::vector<Simplex>> critical;  // [p], lex order
    std::vector<std::vector<Chain>> diff;        // [p][ordinal], chain in dim p-1 (p+1 if dual)
    bool dual = false;

    int dimension() const { return static_cast<int>(critical.size()) - 1; }
    const Chain& d(int p, std::size_t ordinal) const { return diff[p][ordinal]; }
};

// Builds the Morse complex of W; F must be the reference of W.
MorseComplex build_morse_complex(const MorseSequence& W, const Frame& F);
// Builds the dual complex from the co-reference.
MorseComplex build_dual_morse_complex(const MorseSequence& W, const Frame& F);

// linear extension of the differential to chains of critical simplexes
Chain apply_differential(const MorseComplex& M, const Chain& c);

// the differential in matrix form, one matrix per dimension (primal only)
std::vector<Z2Matrix> differential_matrices(const MorseComplex& M);

// Betti numbers of the Morse complex, via Z2 elimination on the d matrices
std::vector<int> morse_betti(const MorseComplex& M);

// Verifies d(F(c)) = F(boundary(c)) on every basis simplex and on `trials`
// random chains per dimension; returns the first violating chain.
std::optional<Chain> check_chain_map(const MorseSequence& W, const Frame& F,
                                     int trials, std::uint64_t seed);
// Dual statement: d*(F(c)) = F(coboundary(c)) for the co-reference.
std::optional<Chain> check_dual_chain_map(const MorseSequence& W, const Frame& F,
                                          int trials, std::uint64_t seed);

}  // namespace mf
