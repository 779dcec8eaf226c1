#include "mf/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mf {

namespace {

// all nonempty subsets of the vertex set
void push_subsets(const Simplex& s, std::unordered_set<Simplex, SimplexHash>& out) {
    const std::vector<int>& v = s.vertices();
    const std::size_t n = v.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(v[i]);
        out.insert(Simplex(std::move(sub)));
    }
}

}  // namespace

Complex Complex::closure(const std::vector<Simplex>& facets) {
    std::unordered_set<Simplex, SimplexHash> all;
    for (const Simplex& f : facets) {
        if (f.vertices().size() > 24)
            throw std::invalid_argument("facet too large: " + f.str());
        push_subsets(f, all);
    }
    Complex K;
    for (const Simplex& s : all) {
        int p = s.dimension();
        if (p >= static_cast<int>(K.by_dim_.size())) K.by_dim_.resize(p + 1);
        K.by_dim_[p].push_back(s);
    }
    K.build_index();
    return K;
}

Complex Complex::from_simplexes(std::vector<Simplex> simplexes) {
    Complex K;
    for (Simplex& s : simplexes) {
        int p = s.dimension();
        if (p >= static_cast<int>(K.by_dim_.size())) K.by_dim_.resize(p + 1);
        K.by_dim_[p].push_back(std::move(s));
    }
    K.build_index();
    // downward closure: every codim-1 face of a member is a member
    for (int p = 1; p <= K.dimension(); ++p)
        for (const Simplex& s : K.by_dim_[p])
            for (const Simplex& f : s.faces())
                if (!K.contains(f))
                    throw std::invalid_argument("not downward closed: " + s.str() +
                                                " present without face " + f.str());
    return K;
}

void Complex::build_index() {
    total_ = 0;
    ordinals_.clear();
    for (auto& level : by_dim_) {
        std::sort(level.begin(), level.end());
        if (std::adjacent_find(level.begin(), level.end()) != level.end())
            throw std::invalid_argument("duplicate simplex");
        total_ += level.size();
    }
    ordinals_.reserve(total_);
    for (const auto& level : by_dim_)
        for (std::size_t i = 0; i < level.size(); ++i) ordinals_.emplace(level[i], i);

    cofaces_.assign(by_dim_.size(), {});
    for (int p = 0; p <= dimension(); ++p) cofaces_[p].assign(by_dim_[p].size(), {});
    for (int p = 1; p <= dimension(); ++p) {
        for (std::size_t j = 0; j < by_dim_[p].size(); ++j) {
            for (const Simplex& f : by_dim_[p][j].faces()) {
                auto it = ordinals_.find(f);
                if (it == ordinals_.end())
                    throw std::invalid_argument("not downward closed near " + f.str());
                cofaces_[p - 1][it->second].push_back(j);
            }
        }
    }
}

std::size_t Complex::count(int p) const {
    return (p < 0 || p > dimension()) ? 0 : by_dim_[p].size();
}

const std::vector<Simplex>& Complex::simplexes(int p) const {
    static const std::vector<Simplex> empty;
    return (p < 0 || p > dimension()) ? empty : by_dim_[p];
}

bool Complex::contains(const Simplex& s) const { return ordinals_.count(s) != 0; }

std::size_t Complex::ordinal(const Simplex& s) const {
    auto it = ordinals_.find(s);
    if (it == ordinals_.end())
        throw std::invalid_argument("simplex not in complex: " + s.str());
    return it->second;
}

Chain Complex::coboundary(const Simplex& s) const {
    int p = s.dimension();
    std::size_t ord = ordinal(s);
    Chain out;
    if (p + 1 > dimension()) return out;
    for (std::size_t j : cofaces_[p][ord]) out += by_dim_[p + 1][j];
    return out;
}

Chain Complex::coboundary(const Chain& c) const {
    Chain out;
    for (const Simplex& s : c.members()) out += coboundary(s);
    return out;
}

const std::vector<std::size_t>& Complex::coface_ordinals(int p, std::size_t ord) const {
    return cofaces_[p][ord];
}

std::vector<Simplex> Complex::facets() const {
    std::vector<Simplex> out;
    for (int p = 0; p <= dimension(); ++p)
        for (std::size_t i = 0; i < by_dim_[p].size(); ++i)
            if (cofaces_[p][i].empty()) out.push_back(by_dim_[p][i]);
    return out;
}

}  // namespace mf
