#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mf/complex.hpp"

using namespace mf;
using mftest::fixture;

TEST_CASE("simplex normalization and invariants") {
    Simplex s{2, 0, 1};
    CHECK(s.vertices() == std::vector<int>{0, 1, 2});
    CHECK(s.dimension() == 2);
    CHECK_THROWS_AS(Simplex(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({-1, 2}), std::invalid_argument);
    CHECK(Simplex{0, 1} < Simplex{0, 2});
    CHECK(s.has_face(Simplex{0, 2}));
    CHECK_FALSE(s.has_face(Simplex{0, 3}));
}

TEST_CASE("closure of a full triangle has all seven faces") {
    Complex K = Complex::closure({Simplex{0, 1, 2}});
    CHECK(K.size() == 7);
    CHECK(K.count(0) == 3);
    CHECK(K.count(1) == 3);
    CHECK(K.count(2) == 1);
    CHECK(K.contains(Simplex{0, 2}));
}

TEST_CASE("closure of the hollow triangle has no 2-simplex") {
    Complex K = Complex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
    CHECK(K.size() == 6);
    CHECK(K.dimension() == 1);
    CHECK(K.count(0) == 3);
    CHECK(K.count(1) == 3);
}

TEST_CASE("torus fixture has the 7-21-14 face vector") {
    auto K = fixture("torus.txt");
    CHECK(K->count(0) == 7);
    CHECK(K->count(1) == 21);
    CHECK(K->count(2) == 14);
}

TEST_CASE("dunce hat fixture has the 8-24-17 face vector") {
    auto K = fixture("dunce_hat.txt");
    CHECK(K->count(0) == 8);
    CHECK(K->count(1) == 24);
    CHECK(K->count(2) == 17);
}

TEST_CASE("closure is idempotent") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        Complex again = Complex::closure(K->facets());
        REQUIRE(again.size() == K->size());
        for (int p = 0; p <= K->dimension(); ++p)
            CHECK(again.simplexes(p) == K->simplexes(p));
    }
}

TEST_CASE("boundary of basis simplexes") {
    CHECK(boundary(Simplex{0}).is_zero());
    CHECK(boundary(Simplex{0, 1}) == Chain({Simplex{0}, Simplex{1}}));
    CHECK(boundary(Simplex{0, 1, 2}) ==
          Chain({Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}}));
}

TEST_CASE("coboundary queries") {
    Complex full = Complex::closure({Simplex{0, 1, 2}});
    CHECK(full.coboundary(Simplex{0, 1, 2}).is_zero());
    CHECK(full.coboundary(Simplex{0}) == Chain({Simplex{0, 1}, Simplex{0, 2}}));
    CHECK(full.coboundary(Simplex{0, 1}) == Chain({Simplex{0, 1, 2}}));
    CHECK_THROWS_AS(full.coboundary(Simplex{3}), std::invalid_argument);
}

TEST_CASE("boundary and coboundary maps extend linearly") {
    Complex hollow = Complex::closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
    // shared endpoint cancels mod 2
    CHECK(boundary(Chain({Simplex{0, 1}, Simplex{1, 2}})) ==
          Chain({Simplex{0}, Simplex{2}}));
    // a 1-cycle
    CHECK(boundary(Chain({Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}})).is_zero());
    CHECK(hollow.coboundary(Chain({Simplex{1}})) ==
          Chain({Simplex{0, 1}, Simplex{1, 2}}));
    CHECK(boundary(Chain()).is_zero());
    CHECK(hollow.coboundary(Chain()).is_zero());
}

TEST_CASE("mixed-dimension chains are rejected") {
    CHECK_THROWS_AS(Chain({Simplex{0}, Simplex{0, 1}}), std::invalid_argument);
    Chain c({Simplex{0}});
    CHECK_THROWS_AS(c += Chain({Simplex{1, 2}}), std::invalid_argument);
}

TEST_CASE("boundary of boundary vanishes on every fixture basis simplex") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        for (int p = 0; p <= K->dimension(); ++p)
            for (const Simplex& s : K->simplexes(p)) {
                CHECK(boundary(boundary(s)).is_zero());
                CHECK(K->coboundary(K->coboundary(s)).is_zero());
            }
    }
}

TEST_CASE("boundary of boundary vanishes on random chains") {
    std::mt19937_64 rng(7);
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        for (int p = 0; p <= K->dimension(); ++p)
            for (int t = 0; t < 25; ++t) {
                Chain c = mftest::random_chain(*K, p, rng);
                CHECK(boundary(boundary(c)).is_zero());
                CHECK(K->coboundary(K->coboundary(c)).is_zero());
            }
    }
}

TEST_CASE("boundary and coboundary are adjoint") {
    for (const auto& name : mftest::fixture_names()) {
        auto K = fixture(name);
        for (int p = 0; p + 1 <= K->dimension(); ++p)
            for (const Simplex& s : K->simplexes(p))
                for (const Simplex& t : K->simplexes(p + 1))
                    CHECK(boundary(t).contains(s) == K->coboundary(s).contains(t));
    }
}

TEST_CASE("chain addition is a Z2 vector space") {
    std::mt19937_64 rng(11);
    auto K = fixture("torus.txt");
    for (int t = 0; t < 50; ++t) {
        int p = static_cast<int>(rng() % 3);
        Chain a = mftest::random_chain(*K, p, rng);
        Chain b = mftest::random_chain(*K, p, rng);
        Chain c = mftest::random_chain(*K, p, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a + a).is_zero());
        CHECK(a + Chain() == a);
    }
}

TEST_CASE("from_simplexes rejects families that are not closed") {
    CHECK_THROWS_AS(Complex::from_simplexes({Simplex{0, 1}, Simplex{0}}),
                    std::invalid_argument);
    Complex K = Complex::from_simplexes({Simplex{0, 1}, Simplex{0}, Simplex{1}});
    CHECK(K.size() == 3);
}
