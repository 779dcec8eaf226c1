#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "mf/morse_sequence.hpp"

namespace mf {

// A Morse frame: a total map sending each p-simplex of K to a chain of
// critical p-simplexes, stored densely per dimension/ordinal and extended
// linearly to chains.
class Frame {
public:
    explicit Frame(std::shared_ptr<const Complex> K);

    const Complex& complex() const { return *complex_; }
    const std::shared_ptr<const Complex>& complex_ptr() const { return complex_; }

    const Chain& at(const Simplex& s) const;
    void set(const Simplex& s, Chain value);

    // linear extension: sum of at(s) over the members of c
    Chain eval(const Chain& c) const;

    // total number of stored chain members; the O(cn) memory contract
    std::size_t storage_cells() const;

    bool operator==(const Frame& other) const { return chains_ == other.chains_; }

private:
    std::shared_ptr<const Complex> complex_;
    std::vector<std::vector<Chain>> chains_;  // [p][ordinal]
};

// The Morse reference: left-to-right scan of the sequence. Critical simplex:
// its own label. Regular pair (s,t): label(t) = 0, label(s) = label of the
// rest of t's boundary.
Frame reference(const MorseSequence& W);

// The Morse co-reference: right-to-left scan; regular pair (s,t) gets
// label(s) = 0 and label(t) = label of the other cofaces of s in the full
// complex.
Frame coreference(const MorseSequence& W);

// true iff F is exactly the reference (resp. co-reference) of W
bool is_reference(const MorseSequence& W, const Frame& F);
bool is_coreference(const MorseSequence& W, const Frame& F);

enum class PathDirection { gradient, cogradient };

struct PathBudgetExceeded : std::runtime_error {
    explicit PathBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("gradient path enumeration exceeded budget of " +
                             std::to_string(budget) + " expansions") {}
};

// Exact count of gradient paths from `from` to `to` (or co-gradient paths,
// which run from a simplex through cofaces) by exhaustive depth-first
// enumeration. Throws PathBudgetExceeded instead of truncating.
std::uint64_t count_gradient_paths(const MorseSequence& W, const Simplex& from,
                                   const Simplex& to, PathDirection dir,
                                   std::uint64_t budget = 1'000'000);

// Checks, over all pairs of critical simplexes s (dim p) and t (dim p+1),
// that s is in reference(boundary(t)) iff t is in coreference(coboundary(s)).
// Returns the first failing pair, if any.
std::optional<std::pair<Simplex, Simplex>> check_duality(const MorseSequence& W);
std::optional<std::pair<Simplex, Simplex>> check_duality(const MorseSequence& W,
                                                         const Frame& ref,
                                                         const Frame& coref);

}  // namespace mf
