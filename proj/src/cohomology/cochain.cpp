#include "polygonkit/cohomology/cochain.hpp"

#include "polygonkit/exactfield/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygonkit {

std::string to_string(CochainFlavor flavor) {
    switch (flavor) {
        case CochainFlavor::kPolynomial:
            return "polynomial";
        case CochainFlavor::kBipolynomial:
            return "bipolynomial";
        case CochainFlavor::kSymmetricBilinear:
            return "symmetric-bilinear";
    }
    return "?";
}

PermittedSpaces::PermittedSpaces(const GVectorSource& src, const Triangulation& complex)
    : field_(src.field()), n_(src.n()) {
    const Field& f = field_;
    const std::size_t face_size = static_cast<std::size_t>(2 * n_ - 1);
    const std::size_t top = static_cast<std::size_t>(complex.dimension() + 1);
    if (top < face_size) throw std::invalid_argument("complex has no (2n-2)-faces");
    for (std::size_t size = face_size; size <= top; ++size) simplices_[size] = complex.faces_of_size(size);
    for (std::size_t size = face_size; size <= top; ++size)
        for (const auto& s : simplices_[size]) {
            MatrixOf<Field> b;
            if (size == face_size) {
                b = identity(f, 1);
            } else {
                const Triangulation single(static_cast<int>(size) - 1, {s});
                b = row_space(f, permitted_coloring_space(src, single).basis);
            }
            std::vector<std::size_t> piv;
            for (std::size_t r = 0, c = 0; r < b.rows(); ++r) {
                while (f.is_zero(b(r, c))) ++c;
                piv.push_back(c);
            }
            pivots_.emplace(s, std::move(piv));
            basis_.emplace(s, std::move(b));
        }
}

const std::vector<Simplex>& PermittedSpaces::simplices(std::size_t size) const {
    static const std::vector<Simplex> none;
    auto it = simplices_.find(size);
    return it == simplices_.end() ? none : it->second;
}

const MatrixOf<Field>& PermittedSpaces::basis(const Simplex& s) const {
    auto it = basis_.find(s);
    if (it == basis_.end()) throw std::out_of_range("no permitted space for " + str(s));
    return it->second;
}

const MatrixOf<Field>& PermittedSpaces::restriction(const Simplex& s, const Simplex& t) const {
    const auto key = std::make_pair(s, t);
    if (auto it = restriction_.find(key); it != restriction_.end()) return it->second;
    if (!polygonkit::contains(s, t)) throw std::invalid_argument(str(t) + " is not a face of " + str(s));
    const Field& f = field_;
    const std::size_t face_size = static_cast<std::size_t>(2 * n_ - 1);
    const auto s_faces = subsets_of_size(s, face_size);
    const auto t_faces = subsets_of_size(t, face_size);
    const auto restricted = restrict_rows(f, basis(s), s_faces, t_faces);
    const auto& bt = basis(t);
    const auto& piv = pivots_.at(t);
    auto r = zeros(f, restricted.rows(), bt.rows());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < piv.size(); ++j) r(i, j) = restricted(i, piv[j]);
    if (!(multiply(f, r, bt) == restricted))
        throw std::logic_error("restriction of a permitted coloring of " + str(s) + " is not permitted on " + str(t));
    return restriction_.emplace(key, std::move(r)).first->second;
}

std::vector<Fe> PermittedSpaces::coordinates(const Simplex& s, const std::vector<Fe>& values) const {
    const auto& b = basis(s);
    const auto& piv = pivots_.at(s);
    std::vector<Fe> a(b.rows());
    for (std::size_t j = 0; j < piv.size(); ++j) a[j] = values.at(piv[j]);
    const auto back = row_times(field_, a, b);
    if (back != values) throw std::domain_error("coloring of " + str(s) + " is not permitted");
    return a;
}

std::size_t CochainSpace::block_of(const Simplex& s) const {
    auto it = std::lower_bound(simplices.begin(), simplices.end(), s);
    if (it == simplices.end() || *it != s) throw std::out_of_range("simplex " + str(s) + " not in cochain space");
    return static_cast<std::size_t>(it - simplices.begin());
}

std::size_t block_size(CochainFlavor flavor, std::size_t dim, unsigned degree) {
    switch (flavor) {
        case CochainFlavor::kPolynomial:
            return MonomialBasis::count(dim, degree);
        case CochainFlavor::kBipolynomial: {
            const std::size_t c = MonomialBasis::count(dim, degree);
            return c * c;
        }
        case CochainFlavor::kSymmetricBilinear:
            return dim * (dim + 1) / 2;
    }
    return 0;
}

CochainSpace make_cochain_space(const PermittedSpaces& spaces, std::size_t m, CochainFlavor flavor, unsigned degree) {
    CochainSpace c;
    c.m = m;
    c.flavor = flavor;
    c.degree = degree;
    c.simplices = spaces.simplices(m + 1);
    c.offsets.push_back(0);
    for (const auto& s : c.simplices) c.offsets.push_back(c.offsets.back() + block_size(flavor, spaces.dim(s), degree));
    return c;
}

MatrixOf<Field> pullback_block(const Field& f, const MatrixOf<Field>& restriction, CochainFlavor flavor,
                               unsigned degree) {
    // restriction: dim_s x dim_t; face coordinates b = a * restriction.
    const auto rt = transpose(f, restriction);
    switch (flavor) {
        case CochainFlavor::kPolynomial:
            return symmetric_power(f, rt, degree);
        case CochainFlavor::kBipolynomial: {
            const auto s = symmetric_power(f, rt, degree);
            return kronecker(f, s, s);
        }
        case CochainFlavor::kSymmetricBilinear: {
            const std::size_t ds = restriction.rows(), dt = restriction.cols();
            auto out = zeros(f, dt * (dt + 1) / 2, ds * (ds + 1) / 2);
            std::size_t row = 0;
            for (std::size_t i = 0; i < dt; ++i)
                for (std::size_t j = i; j < dt; ++j, ++row) {
                    // Q_s = R (E_ij + E_ji) R^T, or R E_ii R^T.
                    std::size_t col = 0;
                    for (std::size_t k = 0; k < ds; ++k)
                        for (std::size_t l = k; l < ds; ++l, ++col) {
                            Fe v = f.mul(restriction(k, i), restriction(l, j));
                            if (i != j) v = f.add(v, f.mul(restriction(k, j), restriction(l, i)));
                            out(row, col) = v;
                        }
                }
            return out;
        }
    }
    throw std::logic_error("unknown flavor");
}

MatrixOf<Field> build_coboundary(const PermittedSpaces& spaces, const CochainSpace& source, const CochainSpace& target) {
    const Field& f = spaces.field();
    if (target.m != source.m + 1 || source.flavor != target.flavor || source.degree != target.degree)
        throw std::invalid_argument("incompatible cochain spaces");
    auto d = zeros(f, source.size(), target.size());
    for (std::size_t si = 0; si < target.simplices.size(); ++si) {
        const auto& s = target.simplices[si];
        for (std::size_t k = 0; k < s.size(); ++k) {
            const auto t = remove_vertex(s, s[k]);
            const std::size_t ti = source.block_of(t);
            const auto block = pullback_block(f, spaces.restriction(s, t), source.flavor, source.degree);
            const bool negate = k % 2 == 1;
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c) {
                    const Fe v = negate ? f.neg(block(r, c)) : block(r, c);
                    Fe& slot = d(source.offsets[ti] + r, target.offsets[si] + c);
                    slot = f.add(slot, v);
                }
        }
    }
    return d;
}

CohomologyWindow cohomology_window(const PermittedSpaces& spaces, CochainFlavor flavor, unsigned degree) {
    const Field& f = spaces.field();
    const std::size_t m = static_cast<std::size_t>(2 * spaces.n() - 2);
    const auto c0 = make_cochain_space(spaces, m, flavor, degree);
    const auto c1 = make_cochain_space(spaces, m + 1, flavor, degree);
    const auto c2 = make_cochain_space(spaces, m + 2, flavor, degree);
    CohomologyWindow w;
    w.dims[0] = c0.size();
    w.dims[1] = c1.size();
    w.dims[2] = c2.size();
    w.ranks[0] = matrix_rank(f, build_coboundary(spaces, c0, c1));
    w.ranks[1] = matrix_rank(f, build_coboundary(spaces, c1, c2));
    return w;
}

CohomologyWindow p_simplex_window(const GenericPoint& point, int n, CochainFlavor flavor, unsigned degree) {
    const auto params = PrimalParameters::sample(point, n);
    const PermittedSpaces spaces(params, p_simplex(n));
    return cohomology_window(spaces, flavor, degree);
}

CohomologyResult cohomology_dimension(const FieldSpec& spec, int n, unsigned degree,
                                      const std::vector<std::uint64_t>& seeds, CochainFlavor flavor) {
    if (seeds.empty()) throw std::invalid_argument("at least one seed required");
    CohomologyResult result;
    result.spec = spec;
    result.n = n;
    result.degree = degree;
    result.flavor = flavor;
    result.seeds = seeds;
    for (auto seed : seeds) {
        const auto w = with_resampling(
            spec, seed, [&](const GenericPoint& p) { return p_simplex_window(p, n, flavor, degree); },
            &result.resamples);
        result.per_seed.push_back(w);
    }
    result.window = result.per_seed.front();
    for (const auto& w : result.per_seed)
        if (w.ranks[0] != result.window.ranks[0] || w.ranks[1] != result.window.ranks[1]) result.seeds_agree = false;
    return result;
}

}  // namespace polygonkit
