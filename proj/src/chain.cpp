#include "mf/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace mf {

Chain::Chain(std::vector<Simplex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("chain has a repeated simplex");
    for (const Simplex& s : members_)
        if (s.dimension() != members_.front().dimension())
            throw std::invalid_argument("chain mixes dimensions");
}

int Chain::dimension() const {
    return members_.empty() ? -1 : members_.front().dimension();
}

bool Chain::contains(const Simplex& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.is_zero()) return *this;
    if (!is_zero() && dimension() != other.dimension())
        throw std::invalid_argument("chain addition mixes dimensions");
    // symmetric difference of two sorted lists
    std::vector<Simplex> out;
    out.reserve(members_.size() + other.members_.size());
    auto a = members_.begin(), ae = members_.end();
    auto b = other.members_.begin(), be = other.members_.end();
    while (a != ae && b != be) {
        if (*a < *b)
            out.push_back(*a++);
        else if (*b < *a)
            out.push_back(*b++);
        else {
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    members_ = std::move(out);
    return *this;
}

Chain& Chain::operator+=(const Simplex& s) {
    if (!is_zero() && dimension() != s.dimension())
        throw std::invalid_argument("chain addition mixes dimensions");
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it != members_.end() && *it == s)
        members_.erase(it);
    else
        members_.insert(it, s);
    return *this;
}

std::string Chain::str() const {
    if (members_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += " ; ";
        s += members_[i].str();
    }
    return s;
}

Chain boundary(const Simplex& s) { return Chain(s.faces()); }

Chain boundary(const Chain& c) {
    Chain out;
    for (const Simplex& s : c.members()) out += boundary(s);
    return out;
}

}  // namespace mf
