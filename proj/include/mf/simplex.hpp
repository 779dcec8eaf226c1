#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mf {

// A simplex: a nonempty set of vertex ids, stored sorted and duplicate-free.
// dimension() is the vertex count minus one.
class Simplex {
public:
    Simplex(std::initializer_list<int> vertices);
    explicit Simplex(std::vector<int> vertices);

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<int>& vertices() const { return verts_; }

    bool contains(int vertex) const;
    // true iff other is a (not necessarily proper) face of this simplex
    bool has_face(const Simplex& other) const;
    // codimension-1 faces in lexicographic order; empty for a vertex
    std::vector<Simplex> faces() const;

    auto operator<=>(const Simplex&) const = default;

    std::string str() const;

private:
    std::vector<int> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace mf
