#pragma once

#include <cstdlib>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mf/complex.hpp"
#include "mf/io.hpp"
#include "mf/morse_sequence.hpp"

namespace mftest {

inline std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("MF_FIXTURES");
    return std::string(dir ? dir : "fixtures") + "/" + name;
}

inline std::shared_ptr<const mf::Complex> fixture(const std::string& name) {
    return mf::load_complex(fixture_path(name));
}

inline std::vector<std::string> fixture_names() {
    return {"full_triangle.txt",        "hollow_triangle.txt", "tetrahedron_boundary.txt",
            "annulus.txt",              "torus.txt",           "dunce_hat.txt"};
}

// random subset of the p-simplexes of K
inline mf::Chain random_chain(const mf::Complex& K, int p, std::mt19937_64& rng) {
    mf::Chain c;
    for (const mf::Simplex& s : K.simplexes(p))
        if (rng() & 1) c += s;
    return c;
}

// A sequence of fillings only (every simplex critical), in a random
// topological order of the face poset; seed 0 gives dimension-then-lex order.
inline mf::MorseSequence all_filling_sequence(std::shared_ptr<const mf::Complex> K,
                                              std::uint64_t shuffle_seed = 0) {
    std::vector<mf::MorseStep> steps;
    if (shuffle_seed == 0) {
        for (int p = 0; p <= K->dimension(); ++p)
            for (const mf::Simplex& s : K->simplexes(p))
                steps.push_back(mf::MorseStep::critical(s));
    } else {
        std::mt19937_64 rng(shuffle_seed);
        std::vector<mf::Simplex> pool;
        for (int p = 0; p <= K->dimension(); ++p)
            for (const mf::Simplex& s : K->simplexes(p)) pool.push_back(s);
        std::set<mf::Simplex> done;
        while (!pool.empty()) {
            std::size_t i = rng() % pool.size();
            const mf::Simplex s = pool[i];
            bool ready = true;
            for (const mf::Simplex& f : s.faces()) ready &= done.count(f) > 0;
            if (!ready) continue;
            steps.push_back(mf::MorseStep::critical(s));
            done.insert(s);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    return mf::MorseSequence(std::move(K), std::move(steps));
}

}  // namespace mftest
