#include "mf/annotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mf {

AnnotationState::AnnotationState(std::shared_ptr<const Complex> K)
    : frame_(std::move(K)), live_(frame_.complex().dimension() + 1) {}

std::vector<Simplex> AnnotationState::live(int p) const {
    if (p < 0 || p >= static_cast<int>(live_.size())) return {};
    return {live_[p].begin(), live_[p].end()};
}

std::vector<std::vector<Simplex>> AnnotationState::live_by_dimension() const {
    std::vector<std::vector<Simplex>> out;
    for (const auto& s : live_) out.emplace_back(s.begin(), s.end());
    return out;
}

std::vector<std::size_t> AnnotationState::live_counts() const {
    std::vector<std::size_t> out;
    for (const auto& s : live_) out.push_back(s.size());
    return out;
}

void AnnotationState::set_label(const Simplex& s, Chain value) {
    for (const Simplex& m : frame_.at(s).members()) carriers_[m].erase(s);
    for (const Simplex& m : value.members()) carriers_[m].insert(s);
    frame_.set(s, std::move(value));
}

const std::set<Simplex>& AnnotationState::carriers(const Simplex& label) const {
    static const std::set<Simplex> empty;
    auto it = carriers_.find(label);
    return it == carriers_.end() ? empty : it->second;
}

Chain AnnotationState::cycle_class(const Chain& z) const {
    for (const Simplex& s : z.members()) {
        auto it = seen_.find(s);
        if (it == seen_.end() || !it->second)
            throw std::invalid_argument("chain member " + s.str() + " not scanned yet");
    }
    if (!boundary(z).is_zero()) throw std::invalid_argument("not a cycle");
    return frame_.eval(z);
}

Chain AnnotationState::cocycle_fiber(const Simplex& tau) const {
    int p = tau.dimension();
    if (p >= static_cast<int>(live_.size()) || !live_[p].count(tau))
        throw std::invalid_argument("simplex " + tau.str() + " is not live");
    const auto& c = carriers(tau);
    return Chain(std::vector<Simplex>(c.begin(), c.end()));
}

namespace {

Simplex pick_label(const Chain& candidates, PickPolicy pick,
                   const std::unordered_map<Simplex, std::size_t, SimplexHash>& birth) {
    if (pick == PickPolicy::min_lex) return candidates.members().front();
    const Simplex* latest = nullptr;
    std::size_t best = 0;
    for (const Simplex& s : candidates.members()) {
        std::size_t b = birth.at(s);
        if (!latest || b > best) {
            latest = &s;
            best = b;
        }
    }
    return *latest;
}

}  // namespace

AnnotationState annotate(const MorseSequence& W, PickPolicy pick,
                         const AnnotationObserver& observer) {
    if (auto v = validate(W))
        throw std::invalid_argument("invalid Morse sequence at step " +
                                    std::to_string(v->step) + ": " + v->reason);
    AnnotationState st(W.complex_ptr());
    for (std::size_t i = 0; i < W.steps().size(); ++i) {
        const MorseStep& step = W.steps()[i];
        if (step.is_regular()) {
            // propagate: the pair is labelled like in the reference scan
            const Simplex& sigma = step.sigma;
            const Simplex& tau = *step.tau;
            st.set_label(tau, Chain());
            Chain label;
            for (const Simplex& f : tau.faces())
                if (f != sigma) label += st.frame_.at(f);
            st.set_label(sigma, std::move(label));
            st.seen_[sigma] = st.seen_[tau] = true;
        } else {
            const Simplex& sigma = step.sigma;
            Chain bd;
            for (const Simplex& f : sigma.faces()) bd += st.frame_.at(f);
            if (bd.is_zero()) {
                // a new class opens
                st.set_label(sigma, Chain({sigma}));
                st.live_[sigma.dimension()].insert(sigma);
                st.birth_[sigma] = i;
            } else {
                // a class closes: sweep the picked label out of every carrier
                Simplex nu = pick_label(bd, pick, st.birth_);
                st.set_label(sigma, Chain());
                std::vector<Simplex> touched(st.carriers(nu).begin(),
                                             st.carriers(nu).end());
                for (const Simplex& t : touched)
                    st.set_label(t, st.frame_.at(t) + bd);
                st.live_[nu.dimension()].erase(nu);
            }
            st.seen_[sigma] = true;
        }
        st.steps_done_ = i + 1;
        if (observer) observer(st, i);
    }
    return st;
}

}  // namespace mf
