#include "polygonkit/cohomology/cocycles.hpp"

#include "polygonkit/exactfield/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygonkit {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

void check_characteristic(const Field& f, std::uint64_t p) {
    if (f.is_surrogate() || f.modulus() != p)
        throw std::invalid_argument("lifted cocycle needs a field of characteristic " + std::to_string(p));
}

IntPoly elementary(std::size_t nvars, unsigned j) {
    IntPoly e(nvars);
    for (const auto& s : subsets_of_size(range_simplex(static_cast<int>(nvars)), static_cast<int>(j))) {
        Exponents ex(nvars, 0);
        for (int v : s) ex[v - 1] = 1;
        e.add_term(ex, 1);
    }
    return e;
}

std::vector<unsigned> repeat(std::size_t v, unsigned times) { return std::vector<unsigned>(times, static_cast<unsigned>(v)); }

void accumulate(const Field& f, FaceBipolynomial& poly, std::vector<unsigned> alpha, Fe coef) {
    std::sort(alpha.begin(), alpha.end());
    Fe& slot = poly[alpha];
    slot = f.add(slot, coef);
    if (f.is_zero(slot)) poly.erase(alpha);
}

}  // namespace

int epsilon_symbol(int i, int q) { return i < q ? parity_sign(i) : -parity_sign(i); }

int eta_symbol(int i, int q) { return i < q ? parity_sign(i - q) : -parity_sign(i - q); }

Fe field_sign(const Field& f, int sign) { return sign >= 0 ? f.one() : f.neg(f.one()); }

Fe BilinearCocycle::at(const Simplex& face) const {
    auto it = coefficients.find(face);
    if (it == coefficients.end()) throw std::out_of_range("no coefficient for face " + str(face));
    return it->second;
}

Fe cip_coefficient(const PrimalParameters& params, int i, int q) {
    const Field& f = params.field();
    Fe den = f.one();
    for (int j = 1; j <= params.vertex_count(); ++j)
        if (j != i && j != q) den = f.mul(den, params.det3(j, i, q));
    if (f.is_zero(den)) throw DegeneratePoint("vanishing denominator in c_" + std::to_string(i) + std::to_string(q));
    return f.div(field_sign(f, eta_symbol(i, q)), den);
}

BilinearCocycle bilinear_2n2_cocycle(const PrimalParameters& params) {
    BilinearCocycle c;
    c.n = params.n();
    const int top = params.vertex_count();
    for (int i = 1; i <= top; ++i)
        for (int q = i + 1; q <= top; ++q)
            c.coefficients[remove_vertices(range_simplex(top), {i, q})] = cip_coefficient(params, i, q);
    return c;
}

MatrixOf<Field> bilinear_cocycle_kernel(const PermittedSpaces& spaces) {
    const Field& f = spaces.field();
    const std::size_t m = static_cast<std::size_t>(2 * spaces.n() - 2);
    const auto c0 = make_cochain_space(spaces, m, CochainFlavor::kSymmetricBilinear, 0);
    const auto c1 = make_cochain_space(spaces, m + 1, CochainFlavor::kSymmetricBilinear, 0);
    return solve_nullspace(f, transpose(f, build_coboundary(spaces, c0, c1)));
}

BilinearCocycle dual_bilinear_cocycle(const DualParameters& params, const PermittedSpaces& spaces) {
    const Field& f = params.field();
    const auto& faces = spaces.simplices(static_cast<std::size_t>(2 * params.n() - 1));
    std::vector<Fe> denominators;
    for (const auto& v : faces) {
        Fe den = f.one();
        for (int j : v) den = f.mul(den, params.pdet(remove_vertex(v, j)));
        if (f.is_zero(den)) throw DegeneratePoint("vanishing p-determinant on face " + str(v));
        denominators.push_back(den);
    }
    BilinearCocycle c;
    c.n = params.n();
    if (f.modulus() == 2) {
        for (std::size_t i = 0; i < faces.size(); ++i) c.coefficients[faces[i]] = f.inv(denominators[i]);
        return c;
    }
    const auto kernel = bilinear_cocycle_kernel(spaces);
    if (kernel.rows() != 1)
        throw std::runtime_error("bilinear (2n-2)-cocycles form a space of dimension " + std::to_string(kernel.rows()) +
                                 ", expected 1");
    if (f.is_zero(kernel(0, 0))) throw DegeneratePoint("bilinear cocycle vanishes on the first face");
    const Fe scale = f.inv(f.mul(kernel(0, 0), denominators[0]));
    for (std::size_t i = 0; i < faces.size(); ++i) c.coefficients[faces[i]] = f.mul(kernel(0, i), scale);
    return c;
}

Fe scalar_product_2n2(const Field& f, const BilinearCocycle& c, int q, const std::vector<Fe>& x,
                      const std::vector<Fe>& y) {
    const Simplex w = remove_vertex(range_simplex(2 * c.n + 1), q);
    const auto faces = subsets_of_size(w, static_cast<int>(w.size()) - 1);
    if (x.size() != faces.size() || y.size() != faces.size()) throw std::invalid_argument("color count mismatch");
    Fe acc = f.zero();
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const int i = complement_in(w, faces[k]).front();
        const Fe term = f.mul(c.at(faces[k]), f.mul(x[k], y[k]));
        acc = epsilon_symbol(i, q) > 0 ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

LocalCocycleData local_data(const BilinearCocycle& c, const Simplex& w, int orientation) {
    LocalCocycleData d;
    d.w = w;
    d.faces = subsets_of_size(w, static_cast<int>(w.size()) - 1);
    for (const auto& v : d.faces) {
        const int omitted = complement_in(w, v).front();
        d.epsilon.push_back(-orientation * parity_sign(position_of(w, omitted)));
        d.c.push_back(c.at(v));
    }
    return d;
}

Fe evaluate(const Field& f, const FaceBipolynomial& poly, const std::vector<Fe>& x, const std::vector<Fe>& y) {
    Fe acc = f.zero();
    for (const auto& [alpha, coef] : poly) {
        Fe term = coef;
        for (unsigned v : alpha) term = f.mul(term, f.mul(x.at(v), y.at(v)));
        acc = f.add(acc, term);
    }
    return acc;
}

FaceBipolynomial h2_cocycle(const Field& f, const LocalCocycleData& d) {
    check_characteristic(f, 2);
    FaceBipolynomial poly;
    const std::size_t nf = d.faces.size();
    for (std::size_t v = 0; v < nf; ++v) {
        for (std::size_t u = v + 1; u < nf; ++u)
            accumulate(f, poly, {static_cast<unsigned>(v), static_cast<unsigned>(u)}, f.mul(d.c[v], d.c[u]));
        if (d.epsilon[v] > 0) accumulate(f, poly, repeat(v, 2), f.mul(d.c[v], d.c[v]));
    }
    return poly;
}

FaceBipolynomial h3_cocycle(const Field& f, const LocalCocycleData& d) {
    check_characteristic(f, 3);
    FaceBipolynomial poly;
    const std::size_t nf = d.faces.size();
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = a + 1; b < nf; ++b)
            for (std::size_t c = b + 1; c < nf; ++c) {
                const int sign = d.epsilon[a] * d.epsilon[b] * d.epsilon[c];
                const Fe coef = f.mul(field_sign(f, sign), f.mul(d.c[a], f.mul(d.c[b], d.c[c])));
                accumulate(f, poly, {static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(c)},
                           coef);
            }
    return poly;
}

LiftedCocycle::LiftedCocycle(std::uint64_t p, unsigned k, std::size_t faces)
    : p_(p), k_(k), m_(1), faces_(faces), g_(p, faces) {
    if (p < 2 || k < 1) throw std::invalid_argument("lift needs a prime p and k >= 1");
    for (unsigned i = 0; i < k; ++i) m_ *= static_cast<unsigned>(p);
    const unsigned r = std::min<unsigned>(m_, static_cast<unsigned>(faces));
    const auto in_e = reduce_poly_mod_p_after_division(
        power_sum_in_elementary(m_, static_cast<unsigned>(faces)).without_variable(0), p);
    std::vector<IntPoly> e;
    for (unsigned j = 1; j <= r; ++j) e.push_back(elementary(faces, j));
    IntPoly acc(faces);
    for (const auto& [ex, coef] : in_e.terms()) {
        IntPoly term = IntPoly::constant(faces, mpz_class(std::to_string(coef)));
        for (std::size_t j = 0; j < ex.size(); ++j)
            if (ex[j] > 0) term = term * e[j].pow(ex[j]);
        acc = acc + term;
    }
    g_ = reduce_poly_mod_p(acc, p);
}

ModPoly LiftedCocycle::in_t(const std::vector<int>& epsilon) const {
    if (epsilon.size() != faces_) throw std::invalid_argument("one incidence sign per face required");
    ModPoly out = g_;
    if (p_ == 2)
        for (std::size_t v = 0; v < faces_; ++v)
            if (epsilon[v] > 0) {
                Exponents ex(faces_, 0);
                ex[v] = m_;
                out.add_term(ex, 1);
            }
    return out;
}

FaceBipolynomial LiftedCocycle::on(const Field& f, const LocalCocycleData& d) const {
    check_characteristic(f, p_);
    if (d.faces.size() != faces_) throw std::invalid_argument("face count mismatch");
    std::vector<Fe> ec;
    for (std::size_t v = 0; v < faces_; ++v) ec.push_back(f.mul(field_sign(f, d.epsilon[v]), d.c[v]));
    FaceBipolynomial poly;
    const ModPoly t_poly = in_t(d.epsilon);
    for (const auto& [ex, coef] : t_poly.terms()) {
        Fe value = f.from_int(static_cast<std::int64_t>(coef));
        std::vector<unsigned> alpha;
        for (std::size_t v = 0; v < faces_; ++v) {
            if (ex[v] == 0) continue;
            value = f.mul(value, f.pow(ec[v], ex[v]));
            for (unsigned i = 0; i < ex[v]; ++i) alpha.push_back(static_cast<unsigned>(v));
        }
        accumulate(f, poly, alpha, value);
    }
    return poly;
}

std::string LiftedCocycle::name() const {
    if (p_ == 2 && k_ == 1) return "h2";
    if (p_ == 3 && k_ == 1) return "h3";
    return "general:" + std::to_string(p_) + ":" + std::to_string(k_);
}

ModPoly lifted_by_substitution(std::uint64_t p, unsigned k, const std::vector<int>& epsilon) {
    const std::size_t nf = epsilon.size();
    if (nf < 2) throw std::invalid_argument("need at least two faces");
    unsigned m = 1;
    for (unsigned i = 0; i < k; ++i) m *= static_cast<unsigned>(p);
    const std::size_t free = nf - 1;
    IntPoly last(free);
    for (std::size_t v = 0; v < free; ++v) last = last - IntPoly::variable(free, v);
    IntPoly sum(free);
    for (std::size_t v = 0; v < nf; ++v) {
        const IntPoly t = v < free ? IntPoly::variable(free, v) : last;
        const int sign = (m + 1) % 2 == 0 ? 1 : epsilon[v];
        sum = sum + t.pow(m) * mpz_class(sign);
    }
    return reduce_poly_mod_p_after_division(sum, p);
}

std::vector<Fe> cochain_vector(const PermittedSpaces& spaces, const CochainSpace& space,
                               const std::function<FaceBipolynomial(const Simplex&)>& value) {
    const Field& f = spaces.field();
    std::vector<Fe> z(space.size(), f.zero());
    const bool diagonal = space.flavor == CochainFlavor::kPolynomial;
    if (!diagonal && space.flavor != CochainFlavor::kBipolynomial)
        throw std::invalid_argument("lifted cochains live in polynomial or bipolynomial spaces");
    if (diagonal && space.degree % 2 != 0) throw std::invalid_argument("y = x restriction needs even degree");
    const unsigned m = diagonal ? space.degree / 2 : space.degree;
    for (std::size_t si = 0; si < space.simplices.size(); ++si) {
        const auto& w = space.simplices[si];
        const auto r = transpose(f, spaces.basis(w));
        const std::size_t nf = r.rows();
        const auto poly = value(w);
        const std::size_t base = space.offsets[si];
        if (diagonal) {
            const auto s = symmetric_power(f, r, 2 * m);
            const MonomialBasis mons(nf, 2 * m);
            for (const auto& [alpha, coef] : poly) {
                if (alpha.size() != m) throw std::invalid_argument("cochain term of wrong degree");
                std::vector<unsigned> twice(alpha);
                twice.insert(twice.end(), alpha.begin(), alpha.end());
                std::sort(twice.begin(), twice.end());
                const std::size_t row = mons.index_of(twice);
                for (std::size_t i = 0; i < s.cols(); ++i) z[base + i] = f.add(z[base + i], f.mul(coef, s(row, i)));
            }
        } else {
            const auto s = symmetric_power(f, r, m);
            const MonomialBasis mons(nf, m);
            const std::size_t count = s.cols();
            for (const auto& [alpha, coef] : poly) {
                if (alpha.size() != m) throw std::invalid_argument("cochain term of wrong degree");
                const std::size_t row = mons.index_of(alpha);
                for (std::size_t i = 0; i < count; ++i) {
                    if (f.is_zero(s(row, i))) continue;
                    const Fe ci = f.mul(coef, s(row, i));
                    for (std::size_t j = 0; j < count; ++j)
                        z[base + i * count + j] = f.add(z[base + i * count + j], f.mul(ci, s(row, j)));
                }
            }
        }
    }
    return z;
}

std::string to_string(Triviality t) { return t == Triviality::kTrivial ? "trivial" : "nontrivial"; }

bool is_cocycle(const PermittedSpaces& spaces, const CochainSpace& space, const std::vector<Fe>& z) {
    const Field& f = spaces.field();
    const auto next = make_cochain_space(spaces, space.m + 1, space.flavor, space.degree);
    if (next.size() == 0) return true;
    const auto image = row_times(f, z, build_coboundary(spaces, space, next));
    return std::all_of(image.begin(), image.end(), [&](Fe v) { return f.is_zero(v); });
}

Triviality triviality_test(const PermittedSpaces& spaces, const CochainSpace& space, const std::vector<Fe>& z) {
    const Field& f = spaces.field();
    if (z.size() != space.size()) throw std::invalid_argument("cochain vector has the wrong length");
    if (!is_cocycle(spaces, space, z)) throw std::invalid_argument("cochain is not a cocycle");
    const auto prev = make_cochain_space(spaces, space.m - 1, space.flavor, space.degree);
    const auto d_in = build_coboundary(spaces, prev, space);
    auto row = zeros(f, 1, z.size());
    for (std::size_t i = 0; i < z.size(); ++i) row(0, i) = z[i];
    const std::size_t before = matrix_rank(f, d_in);
    const std::size_t after = matrix_rank(f, vstack(f, d_in, row));
    return after == before ? Triviality::kTrivial : Triviality::kNontrivial;
}

}  // namespace polygonkit
