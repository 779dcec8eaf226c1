#include "mf/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace mf {

namespace {

std::vector<int> normalized(std::vector<int> verts) {
    if (verts.empty()) throw std::invalid_argument("simplex must be nonempty");
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("simplex has a repeated vertex");
    if (verts.front() < 0) throw std::invalid_argument("negative vertex id");
    return verts;
}

}  // namespace

Simplex::Simplex(std::initializer_list<int> vertices)
    : verts_(normalized(std::vector<int>(vertices))) {}

Simplex::Simplex(std::vector<int> vertices) : verts_(normalized(std::move(vertices))) {}

bool Simplex::contains(int vertex) const {
    return std::binary_search(verts_.begin(), verts_.end(), vertex);
}

bool Simplex::has_face(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(),
                         other.verts_.end());
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    if (verts_.size() < 2) return out;
    out.reserve(verts_.size());
    for (std::size_t skip = 0; skip < verts_.size(); ++skip) {
        std::vector<int> face;
        face.reserve(verts_.size() - 1);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (i != skip) face.push_back(verts_[i]);
        out.emplace_back(std::move(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Simplex::str() const {
    std::string s;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(verts_[i]);
    }
    return s;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex list
    std::size_t h = 14695981039346656037ull;
    for (int v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace mf
