#include "mf/frame.hpp"

#include <unordered_map>
#include <vector>

namespace mf {

Frame::Frame(std::shared_ptr<const Complex> K) : complex_(std::move(K)) {
    if (!complex_) throw std::invalid_argument("null complex");
    chains_.resize(complex_->dimension() + 1);
    for (int p = 0; p <= complex_->dimension(); ++p)
        chains_[p].resize(complex_->count(p));
}

const Chain& Frame::at(const Simplex& s) const {
    return chains_[s.dimension()][complex_->ordinal(s)];
}

void Frame::set(const Simplex& s, Chain value) {
    chains_[s.dimension()][complex_->ordinal(s)] = std::move(value);
}

Chain Frame::eval(const Chain& c) const {
    Chain out;
    for (const Simplex& s : c.members()) out += at(s);
    return out;
}

std::size_t Frame::storage_cells() const {
    std::size_t n = 0;
    for (const auto& level : chains_)
        for (const Chain& c : level) n += c.size();
    return n;
}

namespace {

void require_valid(const MorseSequence& W) {
    if (auto v = validate(W))
        throw std::invalid_argument("invalid Morse sequence at step " +
                                    std::to_string(v->step) + ": " + v->reason);
}

}  // namespace

Frame reference(const MorseSequence& W) {
    require_valid(W);
    Frame F(W.complex_ptr());
    for (const MorseStep& step : W.steps()) {
        if (step.is_regular()) {
            const Simplex& sigma = step.sigma;
            const Simplex& tau = *step.tau;
            F.set(tau, Chain());
            Chain label;
            for (const Simplex& f : tau.faces())
                if (f != sigma) label += F.at(f);
            F.set(sigma, std::move(label));
        } else {
            F.set(step.sigma, Chain({step.sigma}));
        }
    }
    return F;
}

Frame coreference(const MorseSequence& W) {
    require_valid(W);
    const Complex& K = W.complex();
    Frame F(W.complex_ptr());
    for (auto it = W.steps().rbegin(); it != W.steps().rend(); ++it) {
        if (it->is_regular()) {
            const Simplex& sigma = it->sigma;
            const Simplex& tau = *it->tau;
            F.set(sigma, Chain());
            // cofaces taken in the full complex; the scan order guarantees
            // they are labelled before this step
            Chain cob = K.coboundary(sigma);
            Chain label;
            for (const Simplex& c : cob.members())
                if (c != tau) label += F.at(c);
            F.set(tau, std::move(label));
        } else {
            F.set(it->sigma, Chain({it->sigma}));
        }
    }
    return F;
}

bool is_reference(const MorseSequence& W, const Frame& F) {
    for (const MorseStep& step : W.steps()) {
        if (step.is_regular()) {
            if (!F.at(*step.tau).is_zero()) return false;
            if (!F.eval(boundary(*step.tau)).is_zero()) return false;
        } else {
            if (F.at(step.sigma) != Chain({step.sigma})) return false;
        }
    }
    return true;
}

bool is_coreference(const MorseSequence& W, const Frame& F) {
    const Complex& K = W.complex();
    for (const MorseStep& step : W.steps()) {
        if (step.is_regular()) {
            if (!F.at(step.sigma).is_zero()) return false;
            if (!F.eval(K.coboundary(step.sigma)).is_zero()) return false;
        } else {
            if (F.at(step.sigma) != Chain({step.sigma})) return false;
        }
    }
    return true;
}

std::uint64_t count_gradient_paths(const MorseSequence& W, const Simplex& from,
                                   const Simplex& to, PathDirection dir,
                                   std::uint64_t budget) {
    if (from.dimension() != to.dimension())
        throw std::invalid_argument("path endpoints must share a dimension");
    const Complex& K = W.complex();
    if (!K.contains(from) || !K.contains(to))
        throw std::invalid_argument("path endpoint not in complex");

    // lower member -> its paired coface
    std::unordered_map<Simplex, Simplex, SimplexHash> pair_of;
    for (const MorseStep& step : W.steps())
        if (step.is_regular()) pair_of.emplace(step.sigma, *step.tau);

    std::uint64_t count = 0;
    std::uint64_t expansions = 0;
    std::vector<Simplex> stack{from};
    while (!stack.empty()) {
        if (++expansions > budget) throw PathBudgetExceeded(budget);
        Simplex cur = std::move(stack.back());
        stack.pop_back();
        if (cur == to) ++count;
        if (dir == PathDirection::gradient) {
            // follow the pair of cur, then step to the other faces of it
            auto it = pair_of.find(cur);
            if (it == pair_of.end()) continue;
            for (const Simplex& f : it->second.faces())
                if (f != cur) stack.push_back(f);
        } else {
            // step down to a paired face, then to its coface
            for (const Simplex& f : cur.faces()) {
                auto it = pair_of.find(f);
                if (it != pair_of.end() && it->second != cur)
                    stack.push_back(it->second);
            }
        }
    }
    return count;
}

std::optional<std::pair<Simplex, Simplex>> check_duality(const MorseSequence& W,
                                                         const Frame& ref,
                                                         const Frame& coref) {
    const Complex& K = W.complex();
    auto critical = critical_by_dimension(W);
    for (int p = 0; p + 1 <= static_cast<int>(critical.size()) - 1; ++p) {
        for (const Simplex& sigma : critical[p]) {
            Chain up = coref.eval(K.coboundary(sigma));
            for (const Simplex& tau : critical[p + 1]) {
                bool lhs = ref.eval(boundary(tau)).contains(sigma);
                bool rhs = up.contains(tau);
                if (lhs != rhs) return std::make_pair(sigma, tau);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Simplex, Simplex>> check_duality(const MorseSequence& W) {
    Frame ref = reference(W);
    Frame coref = coreference(W);
    return check_duality(W, ref, coref);
}

}  // namespace mf
