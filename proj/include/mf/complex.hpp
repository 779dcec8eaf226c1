#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "mf/chain.hpp"
#include "mf/simplex.hpp"

namespace mf {

// A finite simplicial complex: a downward-closed family of simplexes with a
// stable per-dimension ordering (lexicographic on sorted vertex lists).
// Immutable after construction; all queries are safe for concurrent reads.
class Complex {
public:
    Complex() = default;

    // downward closure of the given facets (each must be nonempty)
    static Complex closure(const std::vector<Simplex>& facets);
    // adopts an explicit simplex set; throws if it is not downward closed
    static Complex from_simplexes(std::vector<Simplex> simplexes);

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t size() const { return total_; }
    std::size_t count(int p) const;
    // lex-ordered p-simplexes; empty for p outside [0, dimension()]
    const std::vector<Simplex>& simplexes(int p) const;
    bool contains(const Simplex& s) const;
    // position of s within its dimension's lex order; throws if absent
    std::size_t ordinal(const Simplex& s) const;

    // all (p+1)-simplexes of the complex containing s; throws if s absent
    Chain coboundary(const Simplex& s) const;
    // linear extension of the coboundary operator
    Chain coboundary(const Chain& c) const;

    const std::vector<std::size_t>& coface_ordinals(int p, std::size_t ord) const;
    std::vector<Simplex> facets() const;

private:
    void build_index();

    std::vector<std::vector<Simplex>> by_dim_;
    // [p][ordinal] -> ordinals of codim-1 cofaces in dimension p+1
    std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> ordinals_;
    std::size_t total_ = 0;
};

}  // namespace mf
