#include "mf/morse_complex.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

namespace mf {

namespace {

MorseComplex build(const MorseSequence& W, const Frame& F, bool dual) {
    if (dual ? !is_coreference(W, F) : !is_reference(W, F))
        throw std::invalid_argument(dual ? "frame is not the co-reference of the sequence"
                                         : "frame is not the reference of the sequence");
    const Complex& K = W.complex();
    MorseComplex M;
    M.dual = dual;
    M.critical = critical_by_dimension(W);
    M.diff.resize(M.critical.size());
    for (std::size_t p = 0; p < M.critical.size(); ++p) {
        M.diff[p].reserve(M.critical[p].size());
        for (const Simplex& s : M.critical[p])
            M.diff[p].push_back(dual ? F.eval(K.coboundary(s)) : F.eval(boundary(s)));
    }
    return M;
}

}  // namespace

MorseComplex build_morse_complex(const MorseSequence& W, const Frame& F) {
    return build(W, F, false);
}

MorseComplex build_dual_morse_complex(const MorseSequence& W, const Frame& F) {
    return build(W, F, true);
}

Chain apply_differential(const MorseComplex& M, const Chain& c) {
    Chain out;
    if (c.is_zero()) return out;
    int p = c.dimension();
    if (p < 0 || p > M.dimension()) throw std::invalid_argument("dimension out of range");
    const auto& level = M.critical[p];
    for (const Simplex& s : c.members()) {
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s)
            throw std::invalid_argument("not a critical simplex: " + s.str());
        out += M.diff[p][static_cast<std::size_t>(it - level.begin())];
    }
    return out;
}

std::vector<Z2Matrix> differential_matrices(const MorseComplex& M) {
    if (M.dual) throw std::invalid_argument("matrices are built from the primal complex");
    std::vector<Z2Matrix> out;
    for (int p = 0; p <= M.dimension(); ++p) {
        const auto& rows = p > 0 ? M.critical[p - 1] : std::vector<Simplex>{};
        Z2Matrix D(rows.size(), M.critical[p].size());
        for (std::size_t j = 0; j < M.critical[p].size(); ++j)
            for (const Simplex& s : M.diff[p][j].members()) {
                auto it = std::lower_bound(rows.begin(), rows.end(), s);
                D.set(static_cast<std::size_t>(it - rows.begin()), j, true);
            }
        out.push_back(std::move(D));
    }
    return out;
}

std::vector<int> morse_betti(const MorseComplex& M) {
    auto mats = differential_matrices(M);
    std::vector<int> betti;
    for (int p = 0; p <= M.dimension(); ++p) {
        std::size_t n = M.critical[p].size();
        std::size_t rank_dp = mats[p].rank();
        std::size_t rank_dp1 = p + 1 <= M.dimension() ? mats[p + 1].rank() : 0;
        betti.push_back(static_cast<int>(n - rank_dp - rank_dp1));
    }
    return betti;
}

namespace {

std::optional<Chain> check_map(const MorseSequence& W, const Frame& F, int trials,
                               std::uint64_t seed, bool dual) {
    const Complex& K = W.complex();
    MorseComplex M = build(W, F, dual);
    auto both_sides_match = [&](const Chain& c) {
        Chain rhs = F.eval(dual ? K.coboundary(c) : boundary(c));
        Chain lhs = apply_differential(M, F.eval(c));
        return lhs == rhs;
    };
    for (int p = 0; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p))
            if (!both_sides_match(Chain({s}))) return Chain({s});
    std::mt19937_64 rng(seed);
    for (int p = 0; p <= K.dimension(); ++p) {
        const auto& basis = K.simplexes(p);
        for (int t = 0; t < trials; ++t) {
            Chain c;
            for (const Simplex& s : basis)
                if (rng() & 1) c += s;
            if (!both_sides_match(c)) return c;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Chain> check_chain_map(const MorseSequence& W, const Frame& F, int trials,
                                     std::uint64_t seed) {
    return check_map(W, F, trials, seed, false);
}

std::optional<Chain> check_dual_chain_map(const MorseSequence& W, const Frame& F,
                                          int trials, std::uint64_t seed) {
    return check_map(W, F, trials, seed, true);
}

}  // namespace mf
