#include "mf/morse_sequence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mf {

MorseStep MorseStep::regular(Simplex s, Simplex t) {
    if (t.dimension() != s.dimension() + 1 || !t.has_face(s))
        throw std::invalid_argument("regular pair must be (face, coface) of adjacent dimensions");
    return {std::move(s), std::move(t)};
}

MorseSequence::MorseSequence(std::shared_ptr<const Complex> complex,
                             std::vector<MorseStep> steps)
    : complex_(std::move(complex)), steps_(std::move(steps)) {
    if (!complex_) throw std::invalid_argument("null complex");
}

namespace {

// uniform pick from an ordered set, by engine output (portable: no
// distribution objects, whose sequences vary across standard libraries)
template <typename Set>
typename Set::const_iterator pick(const Set& s, TieBreak kind, std::mt19937_64& rng) {
    auto it = s.begin();
    if (kind == TieBreak::random && s.size() > 1)
        std::advance(it, static_cast<std::size_t>(rng() % s.size()));
    return it;
}

}  // namespace

MorseSequence increasing_scheme(std::shared_ptr<const Complex> Kp, OrderPolicy order) {
    const Complex& K = *Kp;
    std::mt19937_64 rng(order.seed);

    std::unordered_set<Simplex, SimplexHash> added;
    added.reserve(K.size());
    // number of absent codim-1 faces, per simplex of dimension >= 1
    std::unordered_map<Simplex, int, SimplexHash> missing;
    for (int p = 1; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p)) missing.emplace(s, p + 1);

    std::set<std::pair<Simplex, Simplex>> expansions;  // (sigma, tau)
    std::unordered_map<Simplex, Simplex, SimplexHash> tau_to_sigma;
    std::vector<std::set<Simplex>> fillings(K.dimension() + 1);
    for (const Simplex& v : K.simplexes(0)) fillings[0].insert(v);

    auto drop_candidate_of = [&](const Simplex& tau) {
        auto it = tau_to_sigma.find(tau);
        if (it != tau_to_sigma.end()) {
            expansions.erase({it->second, tau});
            tau_to_sigma.erase(it);
        }
    };

    auto add = [&](const Simplex& s) {
        added.insert(s);
        int p = s.dimension();
        fillings[p].erase(s);
        drop_candidate_of(s);
        if (p + 1 > K.dimension()) return;
        const auto& next = K.simplexes(p + 1);
        for (std::size_t j : K.coface_ordinals(p, K.ordinal(s))) {
            const Simplex& tau = next[j];
            if (added.count(tau)) continue;
            int m = --missing.at(tau);
            if (m == 1) {
                for (const Simplex& f : tau.faces()) {
                    if (!added.count(f)) {
                        expansions.insert({f, tau});
                        tau_to_sigma.emplace(tau, f);
                        break;
                    }
                }
            } else if (m == 0) {
                drop_candidate_of(tau);
                fillings[tau.dimension()].insert(tau);
            }
        }
    };

    std::vector<MorseStep> steps;
    steps.reserve(K.size());
    while (added.size() < K.size()) {
        if (!expansions.empty()) {
            auto [sigma, tau] = *pick(expansions, order.kind, rng);
            steps.push_back(MorseStep::regular(sigma, tau));
            add(sigma);
            add(tau);
        } else {
            // fill at the smallest available dimension
            for (auto& level : fillings) {
                if (level.empty()) continue;
                Simplex s = *pick(level, order.kind, rng);
                steps.push_back(MorseStep::critical(s));
                add(s);
                break;
            }
        }
    }
    return MorseSequence(std::move(Kp), std::move(steps));
}

namespace {

// strict nonempty subsets of the vertex set of s
std::vector<Simplex> strict_subsets(const Simplex& s) {
    const std::vector<int>& v = s.vertices();
    const std::size_t n = v.size();
    std::vector<Simplex> out;
    if (n < 2) return out;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(v[i]);
        out.emplace_back(std::move(sub));
    }
    return out;
}

}  // namespace

MorseSequence decreasing_scheme(std::shared_ptr<const Complex> Kp, OrderPolicy order) {
    const Complex& K = *Kp;
    std::mt19937_64 rng(order.seed);

    std::unordered_set<Simplex, SimplexHash> present;
    present.reserve(K.size());
    std::unordered_map<Simplex, int, SimplexHash> supersets;  // strict, present
    for (int p = 0; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p)) {
            present.insert(s);
            supersets.emplace(s, 0);
        }
    for (int p = 1; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p))
            for (const Simplex& sub : strict_subsets(s)) ++supersets.at(sub);

    std::set<std::pair<Simplex, Simplex>> collapses;  // free pairs (sigma, tau)
    std::unordered_map<Simplex, Simplex, SimplexHash> sigma_to_tau;
    std::vector<std::set<Simplex>> facets(K.dimension() + 1);

    auto present_coface = [&](const Simplex& s) -> Simplex {
        const auto& next = K.simplexes(s.dimension() + 1);
        for (std::size_t j : K.coface_ordinals(s.dimension(), K.ordinal(s)))
            if (present.count(next[j])) return next[j];
        throw std::logic_error("free simplex without present coface");
    };

    auto drop_candidate_of = [&](const Simplex& sigma) {
        auto it = sigma_to_tau.find(sigma);
        if (it != sigma_to_tau.end()) {
            collapses.erase({sigma, it->second});
            sigma_to_tau.erase(it);
        }
    };

    for (const auto& [s, cnt] : supersets) {
        if (cnt == 0)
            facets[s.dimension()].insert(s);
        else if (cnt == 1) {
            Simplex tau = present_coface(s);
            collapses.insert({s, tau});
            sigma_to_tau.emplace(s, std::move(tau));
        }
    }

    auto remove = [&](const Simplex& s) {
        present.erase(s);
        facets[s.dimension()].erase(s);
        drop_candidate_of(s);
        for (const Simplex& sub : strict_subsets(s)) {
            if (!present.count(sub)) continue;
            int c = --supersets.at(sub);
            if (c == 1) {
                Simplex tau = present_coface(sub);
                collapses.insert({sub, tau});
                sigma_to_tau.emplace(sub, std::move(tau));
            } else if (c == 0) {
                drop_candidate_of(sub);
                facets[sub.dimension()].insert(sub);
            }
        }
    };

    std::vector<MorseStep> removals;
    removals.reserve(K.size());
    while (!present.empty()) {
        if (!collapses.empty()) {
            auto [sigma, tau] = *pick(collapses, order.kind, rng);
            removals.push_back(MorseStep::regular(sigma, tau));
            remove(sigma);
            remove(tau);
        } else {
            // perforate a facet of the highest remaining dimension
            for (int p = K.dimension(); p >= 0; --p) {
                if (facets[p].empty()) continue;
                Simplex s = *pick(facets[p], order.kind, rng);
                removals.push_back(MorseStep::critical(s));
                remove(s);
                break;
            }
        }
    }
    std::reverse(removals.begin(), removals.end());
    return MorseSequence(std::move(Kp), std::move(removals));
}

std::optional<SequenceViolation> validate(const MorseSequence& W) {
    const Complex& K = W.complex();
    std::unordered_set<Simplex, SimplexHash> present;
    present.reserve(K.size());
    for (std::size_t i = 0; i < W.steps().size(); ++i) {
        const MorseStep& step = W.steps()[i];
        const Simplex& sigma = step.sigma;
        if (!K.contains(sigma))
            return SequenceViolation{i, "simplex " + sigma.str() + " not in complex"};
        if (present.count(sigma))
            return SequenceViolation{i, "duplicate simplex " + sigma.str()};
        if (step.is_regular()) {
            const Simplex& tau = *step.tau;
            if (!K.contains(tau))
                return SequenceViolation{i, "simplex " + tau.str() + " not in complex"};
            if (present.count(tau))
                return SequenceViolation{i, "duplicate simplex " + tau.str()};
            for (const Simplex& f : tau.faces())
                if (f != sigma && !present.count(f))
                    return SequenceViolation{
                        i, "pair (" + sigma.str() + "; " + tau.str() +
                               ") is not free: face " + f.str() + " absent"};
            present.insert(sigma);
            present.insert(tau);
        } else {
            for (const Simplex& f : sigma.faces())
                if (!present.count(f))
                    return SequenceViolation{i, "filling " + sigma.str() +
                                                    " before its face " + f.str()};
            present.insert(sigma);
        }
    }
    if (present.size() != K.size())
        return SequenceViolation{W.steps().size(),
                                 "sequence does not cover the whole complex"};
    return std::nullopt;
}

std::vector<std::vector<Simplex>> critical_by_dimension(const MorseSequence& W) {
    std::vector<std::vector<Simplex>> out(W.complex().dimension() + 1);
    for (const MorseStep& step : W.steps())
        if (!step.is_regular()) out[step.sigma.dimension()].push_back(step.sigma);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

std::vector<std::size_t> critical_counts(const MorseSequence& W) {
    std::vector<std::size_t> out;
    for (const auto& level : critical_by_dimension(W)) out.push_back(level.size());
    return out;
}

std::vector<std::pair<Simplex, Simplex>> gradient_field(const MorseSequence& W) {
    std::vector<std::pair<Simplex, Simplex>> out;
    for (const MorseStep& step : W.steps())
        if (step.is_regular()) out.emplace_back(step.sigma, *step.tau);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mf
