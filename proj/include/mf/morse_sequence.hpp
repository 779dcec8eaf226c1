#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mf/complex.hpp"

namespace mf {

// One step of a simplex-wise Morse sequence: either a single critical simplex
// (an elementary filling) or a free pair (sigma, tau) with tau the unique
// coface of sigma (an elementary expansion).
struct MorseStep {
    Simplex sigma;
    std::optional<Simplex> tau;

    bool is_regular() const { return tau.has_value(); }
    static MorseStep critical(Simplex s) { return {std::move(s), std::nullopt}; }
    static MorseStep regular(Simplex s, Simplex t);

    bool operator==(const MorseStep&) const = default;
};

class MorseSequence {
public:
    MorseSequence(std::shared_ptr<const Complex> complex, std::vector<MorseStep> steps);

    const Complex& complex() const { return *complex_; }
    const std::shared_ptr<const Complex>& complex_ptr() const { return complex_; }
    const std::vector<MorseStep>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }

private:
    std::shared_ptr<const Complex> complex_;
    std::vector<MorseStep> steps_;
};

enum class TieBreak { lex, random };

struct OrderPolicy {
    TieBreak kind = TieBreak::lex;
    std::uint64_t seed = 0;
};

// Maximal increasing scheme: grow from the empty complex by expansions,
// filling only when no expansion exists. Candidate choice per policy.
MorseSequence increasing_scheme(std::shared_ptr<const Complex> K, OrderPolicy order = {});

// Maximal decreasing scheme: shrink the complex by collapses, perforating a
// maximal-dimension facet only when stuck; the reversed removal order is the
// sequence.
MorseSequence decreasing_scheme(std::shared_ptr<const Complex> K, OrderPolicy order = {});

struct SequenceViolation {
    std::size_t step;
    std::string reason;
};

// Replays the steps from the empty complex and reports the first violation
// (non-free pair, premature filling, duplicate simplex, final mismatch).
std::optional<SequenceViolation> validate(const MorseSequence& W);

std::vector<std::vector<Simplex>> critical_by_dimension(const MorseSequence& W);
std::vector<std::size_t> critical_counts(const MorseSequence& W);

// the gradient vector field: all regular pairs, sorted; two sequences are
// equivalent iff these sets are equal
std::vector<std::pair<Simplex, Simplex>> gradient_field(const MorseSequence& W);

}  // namespace mf
