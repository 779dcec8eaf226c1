#include "mf/z2.hpp"

#include <stdexcept>

namespace mf {

Z2Matrix::Z2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool Z2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void Z2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v)
        w |= m;
    else
        w &= ~m;
}

void Z2Matrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < words_; ++k)
        bits_[dst * words_ + k] ^= bits_[src * words_ + k];
}

std::size_t Z2Matrix::rank() const {
    Z2Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows_) continue;
        std::swap_ranges(m.bits_.begin() + r * m.words_,
                         m.bits_.begin() + (r + 1) * m.words_,
                         m.bits_.begin() + pivot * m.words_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        ++r;
    }
    return r;
}

std::vector<std::vector<std::uint8_t>> Z2Matrix::kernel_basis() const {
    Z2Matrix m = *this;
    std::vector<std::size_t> pivot_col;  // pivot column of each pivot row
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows_) continue;
        std::swap_ranges(m.bits_.begin() + r * m.words_,
                         m.bits_.begin() + (r + 1) * m.words_,
                         m.bits_.begin() + pivot * m.words_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::uint8_t> is_pivot(cols_, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (m.get(i, free)) v[pivot_col[i]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Z2Matrix::image_membership(const std::vector<std::uint8_t>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    Z2Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < words_; ++k)
            aug.bits_[r * aug.words_ + k] = bits_[r * words_ + k];
        aug.set(r, cols_, v[r] != 0);
    }
    // consistent iff augmenting does not raise the rank
    return aug.rank() == rank();
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    Z2Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k))
                for (std::size_t w = 0; w < rhs.words_; ++w)
                    out.bits_[i * out.words_ + w] ^= rhs.bits_[k * rhs.words_ + w];
    return out;
}

Z2Matrix Z2Matrix::transposed() const {
    Z2Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

bool Z2Matrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

Z2Matrix Z2Matrix::augmented(const std::vector<std::vector<std::uint8_t>>& extra) const {
    Z2Matrix out(rows_, cols_ + extra.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
    for (std::size_t j = 0; j < extra.size(); ++j) {
        if (extra[j].size() != rows_) throw std::invalid_argument("vector length mismatch");
        for (std::size_t r = 0; r < rows_; ++r)
            if (extra[j][r]) out.set(r, cols_ + j, true);
    }
    return out;
}

Z2Matrix boundary_matrix(const Complex& K, int p) {
    if (p < 0) throw std::invalid_argument("boundary matrix needs p >= 0");
    const auto& cols = K.simplexes(p);
    const auto& rows = K.simplexes(p - 1);
    Z2Matrix M(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const Simplex& f : cols[j].faces()) M.set(K.ordinal(f), j, true);
    return M;
}

Z2Matrix coboundary_matrix(const Complex& K, int p) {
    const auto& cols = K.simplexes(p);
    const auto& rows = K.simplexes(p + 1);
    Z2Matrix M(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i : K.coface_ordinals(p, j)) M.set(i, j, true);
    return M;
}

std::vector<int> betti_oracle(const Complex& K) {
    std::vector<int> betti;
    for (int p = 0; p <= K.dimension(); ++p) {
        std::size_t n = K.count(p);
        std::size_t rank_dp = boundary_matrix(K, p).rank();
        std::size_t rank_dp1 =
            p + 1 <= K.dimension() ? boundary_matrix(K, p + 1).rank() : 0;
        betti.push_back(static_cast<int>(n - rank_dp - rank_dp1));
    }
    return betti;
}

std::vector<int> betti_oracle_via_coboundary(const Complex& K) {
    std::vector<int> betti;
    for (int p = 0; p <= K.dimension(); ++p) {
        std::size_t n = K.count(p);
        std::size_t rank_up = coboundary_matrix(K, p).rank();
        std::size_t rank_down = p > 0 ? coboundary_matrix(K, p - 1).rank() : 0;
        betti.push_back(static_cast<int>(n - rank_up - rank_down));
    }
    return betti;
}

std::vector<std::uint8_t> chain_to_vector(const Complex& K, const Chain& c, int p) {
    if (!c.is_zero() && c.dimension() != p)
        throw std::invalid_argument("chain dimension mismatch");
    std::vector<std::uint8_t> v(K.count(p), 0);
    for (const Simplex& s : c.members()) v[K.ordinal(s)] = 1;
    return v;
}

Chain vector_to_chain(const Complex& K, const std::vector<std::uint8_t>& v, int p) {
    const auto& basis = K.simplexes(p);
    if (v.size() != basis.size()) throw std::invalid_argument("vector length mismatch");
    Chain c;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) c += basis[i];
    return c;
}

bool homologous(const Complex& K, const Chain& z, const Chain& z2) {
    int p = !z.is_zero() ? z.dimension() : z2.dimension();
    if (p < 0) return true;  // both zero
    if (!boundary(z).is_zero() || !boundary(z2).is_zero())
        throw std::invalid_argument("not a cycle");
    Chain diff = z + z2;
    if (diff.is_zero()) return true;
    if (p + 1 > K.dimension()) return false;
    return boundary_matrix(K, p + 1).image_membership(chain_to_vector(K, diff, p));
}

}  // namespace mf
