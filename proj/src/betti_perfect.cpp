#include "mf/betti_perfect.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mf {

bool is_perfect(const MorseSequence& W, const Frame& F) {
    for (const MorseStep& step : W.steps())
        if (!step.is_regular() && !F.eval(boundary(step.sigma)).is_zero()) return false;
    return true;
}

PerfectFrame perfect_frame(const MorseSequence& W, const Frame& F, PickPolicy pick) {
    if (!is_reference(W, F))
        throw std::invalid_argument("frame is not the reference of the sequence");

    // the working set: critical simplexes and their boundary faces
    std::unordered_set<Simplex, SimplexHash> support;
    std::unordered_map<Simplex, std::size_t, SimplexHash> birth;
    for (std::size_t i = 0; i < W.steps().size(); ++i) {
        const MorseStep& step = W.steps()[i];
        if (step.is_regular()) continue;
        support.insert(step.sigma);
        birth.emplace(step.sigma, i);
        for (const Simplex& f : step.sigma.faces()) support.insert(f);
    }

    PerfectFrame out{F, {}, {}, {}};
    Frame& frame = out.frame;
    out.support.assign(support.begin(), support.end());
    std::sort(out.support.begin(), out.support.end());

    // label -> carriers within the support
    std::unordered_map<Simplex, std::set<Simplex>, SimplexHash> carriers;
    for (const Simplex& s : out.support)
        for (const Simplex& m : frame.at(s).members()) carriers[m].insert(s);

    auto set_label = [&](const Simplex& s, Chain value) {
        for (const Simplex& m : frame.at(s).members()) carriers[m].erase(s);
        for (const Simplex& m : value.members()) carriers[m].insert(s);
        frame.set(s, std::move(value));
    };

    for (const MorseStep& step : W.steps()) {
        if (step.is_regular()) continue;
        const Simplex& sigma = step.sigma;
        Chain bd = frame.eval(boundary(sigma));
        if (bd.is_zero()) continue;
        // cancel: drop sigma's own label and sweep nu out of the support
        Simplex nu = [&] {
            if (pick == PickPolicy::min_lex) return bd.members().front();
            return *std::max_element(bd.members().begin(), bd.members().end(),
                                     [&](const Simplex& a, const Simplex& b) {
                                         return birth.at(a) < birth.at(b);
                                     });
        }();
        out.trace.push_back({nu, sigma});
        set_label(sigma, Chain());
        std::vector<Simplex> touched(carriers[nu].begin(), carriers[nu].end());
        for (const Simplex& t : touched) set_label(t, frame.at(t) + bd);
    }

    out.betti.assign(W.complex().dimension() + 1, 0);
    for (const MorseStep& step : W.steps()) {
        if (step.is_regular()) continue;
        if (frame.at(step.sigma) == Chain({step.sigma}))
            ++out.betti[step.sigma.dimension()];
    }
    return out;
}

}  // namespace mf
