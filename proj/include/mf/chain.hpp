#pragma once

#include <string>
#include <vector>

#include "mf/simplex.hpp"

namespace mf {

// A p-chain over Z2: a set of p-simplexes. Addition is symmetric difference,
// so every chain is its own inverse. The empty chain is the zero vector of
// every dimension.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<Simplex> members);

    // -1 for the zero chain
    int dimension() const;
    bool is_zero() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Simplex& s) const;
    const std::vector<Simplex>& members() const { return members_; }

    Chain& operator+=(const Chain& other);
    Chain& operator+=(const Simplex& s);  // toggle membership
    friend Chain operator+(Chain a, const Chain& b) {
        a += b;
        return a;
    }
    auto operator<=>(const Chain&) const = default;
    bool operator==(const Chain&) const = default;

    std::string str() const;  // "0" for the zero chain, else "v.. ; v.. ; .."

private:
    std::vector<Simplex> members_;  // sorted, unique, all of one dimension
};

// boundary of a simplex: the chain of its codimension-1 faces
Chain boundary(const Simplex& s);
// linear extension to chains
Chain boundary(const Chain& c);

}  // namespace mf
