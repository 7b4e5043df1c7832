#include "polygonkit/cohomology/heptagon5.hpp"

#include "polygonkit/exactfield/monomial.hpp"

#include <stdexcept>

namespace polygonkit {

Fe det_eta(const PrimalParameters& params, int q) {
    if (params.n() != 3) throw std::invalid_argument("eta is defined for n = 3");
    std::vector<std::array<Fe, 3>> cols;
    for (int v = 1; v <= 7; ++v)
        if (v != q) cols.push_back(params.column(v));
    return determinant(params.field(), eta_matrix(params.field(), cols));
}

Fe heptagon_edge_product(const PrimalParameters& params, const Simplex& ij, const Simplex& kl, int q) {
    if (ij.size() != 2 || kl.size() != 2) throw std::invalid_argument("edges have two vertices");
    const Field& f = params.field();
    const int i = ij[0], j = ij[1], k = kl[0], l = kl[1];
    const Fe s = f.add(f.mul(params.det3(i, k, q), params.det3(j, l, q)),
                       f.mul(params.det3(i, l, q), params.det3(j, k, q)));
    return f.mul(det_eta(params, q), s);
}

Heptagon5Cocycle heptagon_5_cocycle(const PrimalParameters& params, const PermittedSpaces& spaces) {
    if (params.n() != 3) throw std::invalid_argument("the heptagon 5-cocycle needs n = 3");
    const Field& f = params.field();
    Heptagon5Cocycle out;
    for (const auto& w : spaces.simplices(6)) {
        const int q = complement_in(range_simplex(7), w).front();
        const auto faces = subsets_of_size(w, 5);
        const auto edges = subsets_of_size(w, 2);
        std::vector<std::vector<Fe>> coords;
        for (const auto& e : edges) coords.push_back(spaces.coordinates(w, g_vector(params, e, faces).values));

        const std::size_t dim = spaces.dim(w);
        std::vector<std::size_t> chosen;
        MatrixOf<Field> e_rows = zeros(f, 0, dim);
        for (std::size_t a = 0; a < edges.size() && chosen.size() < dim; ++a) {
            auto row = zeros(f, 1, dim);
            for (std::size_t i = 0; i < dim; ++i) row(0, i) = coords[a][i];
            auto trial = vstack(f, e_rows, row);
            if (matrix_rank(f, trial) > chosen.size()) {
                e_rows = std::move(trial);
                chosen.push_back(a);
            }
        }
        if (chosen.size() != dim) throw DegeneratePoint("edge vectors do not span the permitted space of " + str(w));

        auto g = zeros(f, dim, dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                g(a, b) = heptagon_edge_product(params, edges[chosen[a]], edges[chosen[b]], q);
        const auto e_inv = inverse(f, e_rows);
        const auto gram = multiply(f, multiply(f, e_inv, g), transpose(f, e_inv));

        for (std::size_t a = 0; a < edges.size(); ++a) {
            const auto left = row_times(f, coords[a], gram);
            for (std::size_t b = 0; b < edges.size(); ++b) {
                Fe v = f.zero();
                for (std::size_t i = 0; i < dim; ++i) v = f.add(v, f.mul(left[i], coords[b][i]));
                if (v != heptagon_edge_product(params, edges[a], edges[b], q))
                    throw std::logic_error("edge products on " + str(w) + " are not a bilinear form: " + str(edges[a]) +
                                           ", " + str(edges[b]));
                ++out.pairs_checked;
            }
        }
        out.gram.emplace(w, gram);
    }
    return out;
}

std::vector<Fe> heptagon_cochain_vector(const PermittedSpaces& spaces, const CochainSpace& space,
                                        const Heptagon5Cocycle& cocycle) {
    const Field& f = spaces.field();
    const bool quadratic = space.flavor == CochainFlavor::kPolynomial;
    if (!quadratic && space.flavor != CochainFlavor::kSymmetricBilinear)
        throw std::invalid_argument("heptagon cochains are symmetric bilinear or quadratic");
    if (quadratic && space.degree != 2) throw std::invalid_argument("quadratic flavor needs degree 2");
    std::vector<Fe> z(space.size(), f.zero());
    for (std::size_t si = 0; si < space.simplices.size(); ++si) {
        const auto& q = cocycle.gram.at(space.simplices[si]);
        const std::size_t dim = q.rows();
        const MonomialBasis mons(dim, 2);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j, ++idx) {
                if (quadratic) {
                    const Fe v = i == j ? q(i, i) : f.add(q(i, j), q(j, i));
                    z[space.offsets[si] + mons.index_of({static_cast<unsigned>(i), static_cast<unsigned>(j)})] = v;
                } else {
                    z[space.offsets[si] + idx] = q(i, j);
                }
            }
    }
    return z;
}

}  // namespace polygonkit
