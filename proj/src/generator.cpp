#include "mf/generator.hpp"

#include <random>

namespace mf {

std::shared_ptr<const Complex> random_complex(std::uint64_t seed,
                                              std::size_t max_simplexes) {
    std::mt19937_64 rng(seed);
    // engine output used directly (modulo) so the stream is reproducible
    // across standard libraries
    auto roll = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };

    for (;;) {
        int n_vertices = 4 + roll(7);           // 4..10
        int n_facets = 1 + roll(6);             // 1..6
        std::vector<Simplex> facets;
        for (int i = 0; i < n_facets; ++i) {
            int size = 1 + roll(4);             // up to a tetrahedron
            std::vector<int> verts;
            while (static_cast<int>(verts.size()) < size) {
                int v = roll(n_vertices);
                bool fresh = true;
                for (int u : verts) fresh &= (u != v);
                if (fresh) verts.push_back(v);
            }
            facets.emplace_back(std::move(verts));
        }
        Complex K = Complex::closure(facets);
        if (K.size() > 0 && K.size() <= max_simplexes)
            return std::make_shared<const Complex>(std::move(K));
        // too large: retry with the follow-up engine state
    }
}

std::shared_ptr<const Complex> grid_disk(std::size_t n) {
    std::vector<Simplex> facets;
    facets.reserve(2 * (n - 1) * (n - 1));
    auto id = [n](std::size_t i, std::size_t j) { return static_cast<int>(i * n + j); };
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) {
            facets.push_back(Simplex{id(i, j), id(i + 1, j), id(i, j + 1)});
            facets.push_back(Simplex{id(i + 1, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    return std::make_shared<const Complex>(Complex::closure(facets));
}

}  // namespace mf
