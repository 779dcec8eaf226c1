#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "mf/complex.hpp"

namespace mf {

// Dense bit matrix over Z2 with plain Gaussian elimination. Deliberately
// naive: this is the independent reference the Morse-theoretic computations
// are checked against, so it shares no code with them beyond the complex.
class Z2Matrix {
public:
    Z2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    // pivots chosen left-to-right by column, topmost available row
    std::size_t rank() const;
    // basis of {x : Mx = 0}, one vector (length cols) per free column
    std::vector<std::vector<std::uint8_t>> kernel_basis() const;
    // is v (length rows) in the column span of M?
    bool image_membership(const std::vector<std::uint8_t>& v) const;

    Z2Matrix operator*(const Z2Matrix& rhs) const;
    Z2Matrix transposed() const;
    bool is_zero() const;
    // columns of extra appended to the right of M
    Z2Matrix augmented(const std::vector<std::vector<std::uint8_t>>& extra) const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;  // row-major, words_ per row

    void xor_row(std::size_t dst, std::size_t src);
};

// matrix of the boundary operator K[p] -> K[p-1] in the lex bases;
// p = 0 gives a matrix with zero rows
Z2Matrix boundary_matrix(const Complex& K, int p);
// matrix of the coboundary operator K[p] -> K[p+1]
Z2Matrix coboundary_matrix(const Complex& K, int p);

// Betti numbers (mod 2) for 0 <= p <= dim(K), from boundary ranks
std::vector<int> betti_oracle(const Complex& K);
// the same numbers computed from coboundary matrices (beta^p)
std::vector<int> betti_oracle_via_coboundary(const Complex& K);

// are the p-cycles z and z2 homologous in K? throws if either is not a cycle
bool homologous(const Complex& K, const Chain& z, const Chain& z2);

std::vector<std::uint8_t> chain_to_vector(const Complex& K, const Chain& c, int p);
Chain vector_to_chain(const Complex& K, const std::vector<std::uint8_t>& v, int p);

}  // namespace mf
