#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mf/annotation.hpp"
#include "mf/betti_perfect.hpp"
#include "mf/generator.hpp"
#include "mf/z2.hpp"

using namespace mf;
using mftest::fixture;

namespace {

// the full triangle added by fillings only, in lex order per dimension
MorseSequence all_filling_triangle() {
    auto K = std::make_shared<const Complex>(Complex::closure({Simplex{0, 1, 2}}));
    std::vector<MorseStep> steps;
    for (int p = 0; p <= K->dimension(); ++p)
        for (const Simplex& s : K->simplexes(p)) steps.push_back(MorseStep::critical(s));
    return MorseSequence(K, std::move(steps));
}

MorseSequence hollow_sequence() {
    auto K = std::make_shared<const Complex>(
        Complex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}}));
    return increasing_scheme(K);
}

}  // namespace

TEST_CASE("all-filling triangle under min-lex: traced labels and live sets") {
    MorseSequence W = all_filling_triangle();
    CHECK_FALSE(validate(W));
    AnnotationState st = annotate(W, PickPolicy::min_lex);
    // hand replay: {0,1} cancels 0, {0,2} cancels 1, {1,2} opens a class,
    // {0,1,2} closes it again
    CHECK(st.frame().at(Simplex{0}) == Chain({Simplex{2}}));
    CHECK(st.frame().at(Simplex{1}) == Chain({Simplex{2}}));
    CHECK(st.frame().at(Simplex{2}) == Chain({Simplex{2}}));
    CHECK(st.frame().at(Simplex{0, 1}).is_zero());
    CHECK(st.frame().at(Simplex{0, 2}).is_zero());
    CHECK(st.frame().at(Simplex{1, 2}).is_zero());
    CHECK(st.frame().at(Simplex{0, 1, 2}).is_zero());
    CHECK(st.live(0) == std::vector<Simplex>{Simplex{2}});
    CHECK(st.live(1).empty());
    CHECK(st.live(2).empty());
}

TEST_CASE("all-filling triangle under latest: traced labels and live sets") {
    MorseSequence W = all_filling_triangle();
    AnnotationState st = annotate(W, PickPolicy::latest);
    // hand replay: {0,1} cancels 1, {0,2} cancels 2, {1,2} opens, {0,1,2} closes
    CHECK(st.frame().at(Simplex{0}) == Chain({Simplex{0}}));
    CHECK(st.frame().at(Simplex{1}) == Chain({Simplex{0}}));
    CHECK(st.frame().at(Simplex{2}) == Chain({Simplex{0}}));
    CHECK(st.live(0) == std::vector<Simplex>{Simplex{0}});
    CHECK(st.live(1).empty());
    CHECK(st.live(2).empty());
}

TEST_CASE("a single vertex is its own class") {
    auto K = std::make_shared<const Complex>(Complex::closure({Simplex{0}}));
    AnnotationState st = annotate(increasing_scheme(K));
    CHECK(st.frame().at(Simplex{0}) == Chain({Simplex{0}}));
    CHECK(st.live_counts() == std::vector<std::size_t>{1});
}

TEST_CASE("cycle classes on the hollow and full triangle") {
    Chain edge_cycle({Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}});

    AnnotationState hollow = annotate(hollow_sequence());
    REQUIRE(hollow.live(1).size() == 1);
    CHECK(hollow.cycle_class(edge_cycle) == Chain({hollow.live(1)[0]}));
    // the fiber of the live edge is a one-edge cocycle cutting the circle
    CHECK(hollow.cocycle_fiber(hollow.live(1)[0]) == Chain({hollow.live(1)[0]}));

    AnnotationState full = annotate(all_filling_triangle());
    CHECK(full.cycle_class(edge_cycle).is_zero());  // it bounds now
    CHECK(full.cycle_class(Chain()).is_zero());
    CHECK_THROWS_AS(full.cycle_class(Chain({Simplex{0, 1}})), std::invalid_argument);
}

TEST_CASE("conditions C1 and C2 hold after every step") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        for (auto scheme : {increasing_scheme, decreasing_scheme}) {
            MorseSequence W = scheme(K, {});
            std::vector<Simplex> added;
            std::size_t checked = 0;
            auto observer = [&](const AnnotationState& st, std::size_t i) {
                const MorseStep& step = W.steps()[i];
                added.push_back(step.sigma);
                if (step.is_regular()) added.push_back(*step.tau);
                auto live = st.live_by_dimension();
                // C1: every label lives inside the live set of its dimension
                for (const Simplex& s : added) {
                    for (const Simplex& m : st.frame().at(s).members()) {
                        int p = m.dimension();
                        bool ok = std::binary_search(live[p].begin(), live[p].end(), m);
                        if (!ok)
                            FAIL("C1 violated at step " << i << " for " << s.str());
                    }
                }
                // C2: live counts equal the Betti numbers of the prefix
                Complex prefix = Complex::from_simplexes(added);
                auto betti = betti_oracle(prefix);
                for (int p = 0; p <= prefix.dimension(); ++p)
                    if (static_cast<int>(live[p].size()) != betti[p])
                        FAIL("C2 violated at step " << i << " in dimension " << p);
                for (int p = prefix.dimension() + 1; p < static_cast<int>(live.size()); ++p)
                    if (!live[p].empty()) FAIL("live set above prefix dimension");
                ++checked;
            };
            annotate(W, PickPolicy::min_lex, observer);
            CHECK(checked == W.size());
        }
    }
}

TEST_CASE("C3: labels separate homology classes") {
    std::mt19937_64 rng(23);
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        MorseSequence W = increasing_scheme(K);
        AnnotationState st = annotate(W);
        int pairs = 0;
        for (int p = 0; p <= K->dimension(); ++p) {
            auto kernel = boundary_matrix(*K, p).kernel_basis();
            if (kernel.empty()) continue;
            auto random_cycle = [&] {
                std::vector<std::uint8_t> v(K->count(p), 0);
                for (const auto& k : kernel)
                    if (rng() & 1)
                        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= k[i];
                Chain z = vector_to_chain(*K, v, p);
                for (const Simplex& up : K->simplexes(p + 1))
                    if ((rng() & 3) == 0) z += boundary(up);
                return z;
            };
            for (int t = 0; t < 60; ++t) {
                Chain z = random_cycle(), z2 = random_cycle();
                CAPTURE(name);
                CHECK((st.cycle_class(z) == st.cycle_class(z2)) ==
                      homologous(*K, z, z2));
                ++pairs;
            }
        }
        CHECK(pairs >= 100);
    }
}

TEST_CASE("C4: fibers are cocycles and their classes form a cohomology basis") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        for (PickPolicy pick : {PickPolicy::min_lex, PickPolicy::latest}) {
            AnnotationState st = annotate(increasing_scheme(K), pick);
            auto betti = betti_oracle(*K);
            for (int p = 0; p <= K->dimension(); ++p) {
                auto live = st.live(p);
                REQUIRE(static_cast<int>(live.size()) == betti[p]);
                std::vector<std::vector<std::uint8_t>> fibers;
                for (const Simplex& tau : live) {
                    Chain fiber = st.cocycle_fiber(tau);
                    CHECK(K->coboundary(fiber).is_zero());
                    fibers.push_back(chain_to_vector(*K, fiber, p));
                }
                if (fibers.empty()) continue;
                // classes are independent modulo coboundaries and span H^p
                Z2Matrix cob = p > 0 ? coboundary_matrix(*K, p - 1)
                                     : Z2Matrix(K->count(0), 0);
                std::size_t base = cob.rank();
                CHECK(cob.augmented(fibers).rank() == base + fibers.size());
                CHECK(static_cast<int>(fibers.size()) == betti[p]);
            }
        }
    }
}

TEST_CASE("fibers of dead labels are rejected") {
    AnnotationState st = annotate(all_filling_triangle());
    CHECK_THROWS_AS(st.cocycle_fiber(Simplex{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("annotation equals the reference when no class ever closes") {
    // on the torus the increasing sequence is perfect, so case 2 never fires
    MorseSequence W = increasing_scheme(fixture("torus.txt"));
    Frame ref = reference(W);
    REQUIRE(is_perfect(W, ref));
    AnnotationState st = annotate(W);
    CHECK(st.frame() == ref);

    int perfect_seen = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto K = random_complex(seed);
        for (auto scheme : {increasing_scheme, decreasing_scheme}) {
            MorseSequence V = scheme(K, {});
            Frame F = reference(V);
            if (!is_perfect(V, F)) continue;
            ++perfect_seen;
            CHECK(annotate(V).frame() == F);
        }
    }
    CHECK(perfect_seen > 0);
}

TEST_CASE("annotation live counts equal Betti numbers on the fixtures") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        auto betti = betti_oracle(*K);
        for (PickPolicy pick : {PickPolicy::min_lex, PickPolicy::latest}) {
            AnnotationState st = annotate(increasing_scheme(K), pick);
            auto counts = st.live_counts();
            for (int p = 0; p <= K->dimension(); ++p)
                CHECK(static_cast<int>(counts[p]) == betti[p]);
        }
    }
}

TEST_CASE("annotation handles all-critical orders of random complexes") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto K = random_complex(seed);
        auto betti = betti_oracle(*K);
        MorseSequence W = mftest::all_filling_sequence(K, seed + 3);
        for (PickPolicy pick : {PickPolicy::min_lex, PickPolicy::latest}) {
            AnnotationState st = annotate(W, pick);
            auto counts = st.live_counts();
            CAPTURE(seed);
            for (int p = 0; p <= K->dimension(); ++p)
                CHECK(static_cast<int>(counts[p]) == betti[p]);
        }
    }
}
