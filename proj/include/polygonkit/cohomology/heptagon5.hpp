#pragma once

#include "polygonkit/cohomology/cochain.hpp"

#include <array>
#include <map>
#include <vector>

namespace polygonkit {

/// The 6 x 6 matrix with rows alpha^2, beta^2, gamma^2, alpha beta, alpha gamma, beta gamma over
/// the given six columns.
template <class F>
MatrixOf<F> eta_matrix(const F& f, const std::vector<std::array<typename F::Elem, 3>>& columns) {
    if (columns.size() != 6) throw std::invalid_argument("eta needs six columns");
    auto m = zeros(f, 6, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        const auto& [a, b, c] = columns[j];
        m(0, j) = f.mul(a, a);
        m(1, j) = f.mul(b, b);
        m(2, j) = f.mul(c, c);
        m(3, j) = f.mul(a, b);
        m(4, j) = f.mul(a, c);
        m(5, j) = f.mul(b, c);
    }
    return m;
}

/// dethad of a 3 x 3 matrix with rows (alpha, beta, gamma), as a six-monomial expansion.
template <class F>
typename F::Elem dethad(const F& f, const MatrixOf<F>& x) {
    if (x.rows() != 3 || x.cols() != 3) throw std::invalid_argument("dethad needs a 3 x 3 matrix");
    auto a = [&](int j) { return x(0, j); };
    auto b = [&](int j) { return x(1, j); };
    auto c = [&](int j) { return x(2, j); };
    auto mono = [&](auto u, auto v, auto w, auto s, auto t, auto r) {
        return f.mul(f.mul(f.mul(u, v), f.mul(w, s)), f.mul(t, r));
    };
    auto sum = mono(a(0), b(0), a(1), c(1), b(2), c(2));
    sum = f.sub(sum, mono(a(0), c(0), a(1), b(1), b(2), c(2)));
    sum = f.sub(sum, mono(a(0), b(0), b(1), c(1), a(2), c(2)));
    sum = f.add(sum, mono(b(0), c(0), a(1), b(1), a(2), c(2)));
    sum = f.add(sum, mono(a(0), c(0), b(1), c(1), a(2), b(2)));
    sum = f.sub(sum, mono(b(0), c(0), a(1), c(1), a(2), b(2)));
    return f.neg(sum);
}

/// Columns multiplied by the inverse of the block of the first three, so that block is the identity.
/// Throws std::domain_error if the first three columns are dependent.
template <class F>
std::vector<std::array<typename F::Elem, 3>> reduce_first_three(const F& f,
                                                                 const std::vector<std::array<typename F::Elem, 3>>& cols) {
    auto head = zeros(f, 3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) head(i, j) = cols.at(j)[i];
    const auto inv = inverse(f, head);
    std::vector<std::array<typename F::Elem, 3>> out;
    for (const auto& col : cols) {
        std::array<typename F::Elem, 3> r{f.zero(), f.zero(), f.zero()};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) r[i] = f.add(r[i], f.mul(inv(i, k), col[k]));
        out.push_back(r);
    }
    return out;
}

struct DethadCheck {
    bool holds = false;
    bool reduced = false;  // first three columns are the identity
};

/// For seven columns with the first three reduced to the identity: det eta_7 == -dethad of columns 4..6.
template <class F>
DethadCheck dethad_check(const F& f, const std::vector<std::array<typename F::Elem, 3>>& cols) {
    if (cols.size() != 7) throw std::invalid_argument("dethad check needs seven columns");
    DethadCheck out;
    out.reduced = true;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i)
            if (cols[j][i] != (i == j ? f.one() : f.zero())) out.reduced = false;
    std::vector<std::array<typename F::Elem, 3>> six(cols.begin(), cols.begin() + 6);
    auto block = zeros(f, 3, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) block(i, j) = cols[3 + j][i];
    out.holds = determinant(f, eta_matrix(f, six)) == f.neg(dethad(f, block));
    return out;
}

/// det eta_q over the columns of the vertices other than q, increasing (n = 3).
Fe det_eta(const PrimalParameters& params, int q);

/// <e_ij, e_kl>_5^(q) = det eta_q (d_ikq d_jlq + d_ilq d_jkq).
Fe heptagon_edge_product(const PrimalParameters& params, const Simplex& ij, const Simplex& kl, int q);

/// Gram matrices of the heptagon scalar product in the permitted basis of each 5-simplex.
struct Heptagon5Cocycle {
    std::map<Simplex, MatrixOf<Field>> gram;
    /// Edge pairs checked against the closed formula while extending.
    std::size_t pairs_checked = 0;
};

/// Extends the edge-vector formula to the permitted space of every 5-simplex of the P-simplex via
/// three independent edge vectors and verifies it on all edge pairs. Throws std::logic_error when
/// the extension is inconsistent, std::invalid_argument unless n = 3.
Heptagon5Cocycle heptagon_5_cocycle(const PrimalParameters& params, const PermittedSpaces& spaces);

/// The cocycle as a cochain vector: symmetric-bilinear flavor (upper triangles) or polynomial
/// degree 2 (the quadratic form x -> <x, x>).
std::vector<Fe> heptagon_cochain_vector(const PermittedSpaces& spaces, const CochainSpace& space,
                                        const Heptagon5Cocycle& cocycle);

}  // namespace polygonkit
