#pragma once

#include <cstdint>
#include <memory>

#include "mf/complex.hpp"

namespace mf {

// Seeded random complex: facets sampled over at most 10 vertices, closure
// capped at max_simplexes. Deterministic for a given seed.
std::shared_ptr<const Complex> random_complex(std::uint64_t seed,
                                              std::size_t max_simplexes = 40);

// Triangulated n x n grid disk (collapsible 2-complex); about 6*n^2 simplexes.
std::shared_ptr<const Complex> grid_disk(std::size_t n);

}  // namespace mf
