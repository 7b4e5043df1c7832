#include "polygonkit/invariant/invariant.hpp"

#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/exactfield/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace polygonkit {

FactorSpace factor_space(const GVectorSource& src, const Triangulation& t) {
    if (!t.is_closed_pseudomanifold()) throw std::invalid_argument("factor space needs a closed pseudomanifold");
    if (t.dimension() != 2 * src.n() - 1)
        throw std::invalid_argument("dimension " + std::to_string(t.dimension()) + " does not match n = " +
                                    std::to_string(src.n()));
    const Field& f = src.field();
    FactorSpace out{permitted_coloring_space(src, t), g_coloring_space(src, t), {}};
    if (out.vp.faces != out.vg.faces) throw std::logic_error("coloring spaces use different face lists");

    auto rg = out.vg.basis;
    const auto pivots = rref_in_place(f, rg);
    auto reduced = out.vp.basis;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        auto* row = reduced.row(r);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Fe factor = row[pivots[i]];
            if (f.is_zero(factor)) continue;
            const auto* g = rg.row(i);
            for (std::size_t c = 0; c < reduced.cols(); ++c)
                if (!f.is_zero(g[c])) row[c] = f.sub(row[c], f.mul(factor, g[c]));
        }
    }
    out.complement = row_space(f, std::move(reduced));
    if (out.complement.rows() + pivots.size() != out.vp.dim())
        throw std::logic_error("g-colorings are not all permitted");
    return out;
}

CocycleKind CocycleKind::parse(const std::string& name) {
    if (name == "h2") return {2, 1};
    if (name == "h3") return {3, 1};
    const std::string prefix = "general:";
    if (name.rfind(prefix, 0) == 0) {
        const auto rest = name.substr(prefix.size());
        const auto colon = rest.find(':');
        if (colon != std::string::npos) {
            try {
                std::size_t used_p = 0, used_k = 0;
                const auto p = std::stoull(rest.substr(0, colon), &used_p);
                const auto k = std::stoul(rest.substr(colon + 1), &used_k);
                if (used_p == colon && used_k == rest.size() - colon - 1 && is_prime(p) && k >= 1)
                    return {p, static_cast<unsigned>(k)};
            } catch (const std::exception&) {
            }
        }
    }
    throw std::invalid_argument("unknown cocycle '" + name + "' (expected h2, h3 or general:p:k)");
}

std::string CocycleKind::name() const {
    if (p == 2 && k == 1) return "h2";
    if (p == 3 && k == 1) return "h3";
    return "general:" + std::to_string(p) + ":" + std::to_string(k);
}

unsigned CocycleKind::m() const {
    unsigned m = 1;
    for (unsigned i = 0; i < k; ++i) m *= static_cast<unsigned>(p);
    return m;
}

namespace {

using Row = std::vector<Fe>;

Fe bil(const Field& f, const MatrixOf<Field>& b, const Row& u, const Row& v) {
    Fe acc = f.zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (f.is_zero(u[i])) continue;
        Fe inner = f.zero();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!f.is_zero(v[j])) inner = f.add(inner, f.mul(b(i, j), v[j]));
        acc = f.add(acc, f.mul(u[i], inner));
    }
    return acc;
}

Row axpy(const Field& f, Row u, Fe a, const Row& v) {
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = f.add(u[i], f.mul(a, v[i]));
    return u;
}

}  // namespace

CanonicalForm canonicalize_form(const Field& f, const MatrixOf<Field>& b) {
    const std::size_t n = b.rows();
    if (b.cols() != n) throw std::invalid_argument("bilinear form must be square");
    bool symmetric = true, antisymmetric = true, zero_diag = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.is_zero(b(i, i))) zero_diag = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (b(i, j) != b(j, i)) symmetric = false;
            if (b(i, j) != f.neg(b(j, i))) antisymmetric = false;
        }
    }
    CanonicalForm out;
    out.alternating = antisymmetric && zero_diag;
    if (!out.alternating && !symmetric) throw std::invalid_argument("form is neither symmetric nor alternating");

    std::vector<Row> rest;
    for (std::size_t i = 0; i < n; ++i) {
        Row e(n, f.zero());
        e[i] = f.one();
        rest.push_back(std::move(e));
    }
    std::vector<Row> blocks, diagonal;
    while (!rest.empty()) {
        std::size_t pick = rest.size();
        if (!out.alternating)
            for (std::size_t a = 0; a < rest.size() && pick == rest.size(); ++a)
                if (!f.is_zero(bil(f, b, rest[a], rest[a]))) pick = a;
        if (pick == rest.size() && !out.alternating && f.modulus() != 2) {
            for (std::size_t a = 0; a < rest.size() && pick == rest.size(); ++a)
                for (std::size_t c = a + 1; c < rest.size(); ++c)
                    if (!f.is_zero(bil(f, b, rest[a], rest[c]))) {
                        rest[a] = axpy(f, rest[a], f.one(), rest[c]);
                        pick = a;
                        break;
                    }
        }
        if (pick != rest.size()) {
            const Row e = rest[pick];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
            const Fe inv = f.inv(bil(f, b, e, e));
            for (auto& u : rest) u = axpy(f, u, f.neg(f.mul(bil(f, b, u, e), inv)), e);
            diagonal.push_back(e);
            continue;
        }
        std::size_t a0 = rest.size(), c0 = rest.size();
        for (std::size_t a = 0; a < rest.size() && a0 == rest.size(); ++a)
            for (std::size_t c = a + 1; c < rest.size(); ++c)
                if (!f.is_zero(bil(f, b, rest[a], rest[c]))) {
                    a0 = a;
                    c0 = c;
                    break;
                }
        if (a0 == rest.size()) break;
        const Row e = rest[a0];
        Row g = rest[c0];
        const Fe scale = f.inv(bil(f, b, e, g));
        for (auto& x : g) x = f.mul(x, scale);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c0));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a0));
        for (auto& u : rest) {
            const Fe ue = bil(f, b, u, e), ug = bil(f, b, u, g);
            u = axpy(f, axpy(f, u, f.neg(ug), e), ue, g);
        }
        blocks.push_back(e);
        blocks.push_back(g);
    }
    out.hyperbolic_blocks = blocks.size() / 2;
    out.transform = zeros(f, n, n);
    std::size_t r = 0;
    for (const auto* group : {&blocks, &diagonal, &rest})
        for (const auto& u : *group) {
            for (std::size_t j = 0; j < n; ++j) out.transform(r, j) = u[j];
            ++r;
        }
    out.normal_form = multiply(f, multiply(f, out.transform, b), transpose(f, out.transform));
    out.rank = blocks.size() + diagonal.size();
    if (out.rank != matrix_rank(f, b)) throw std::logic_error("form reduction lost rank");
    if (out.alternating && out.rank % 2 != 0) throw std::logic_error("alternating form of odd rank");
    return out;
}

int manifold_n(const Triangulation& t) {
    if (t.dimension() < 3 || t.dimension() % 2 == 0)
        throw std::invalid_argument("invariant needs an odd dimension >= 3, got " + std::to_string(t.dimension()));
    return (t.dimension() + 1) / 2;
}

DualParameters manifold_parameters(const GenericPoint& point, const Triangulation& t) {
    return DualParameters::sample(point, manifold_n(t), t.vertices());
}

BilinearCocycle manifold_bilinear_cocycle(const DualParameters& params, const Triangulation& t) {
    const Field& f = params.field();
    if (f.modulus() == 2) {
        BilinearCocycle c;
        c.n = params.n();
        for (const auto& v : colored_faces(t, params.n())) {
            Fe den = f.one();
            for (int j : v) den = f.mul(den, params.pdet(remove_vertex(v, j)));
            if (f.is_zero(den)) throw DegeneratePoint("vanishing p-determinant on face " + str(v));
            c.coefficients[v] = f.inv(den);
        }
        return c;
    }
    return dual_bilinear_cocycle(params, PermittedSpaces(params, t));
}

std::vector<LocalCocycleData> manifold_local_data(const BilinearCocycle& c, const Triangulation& t,
                                                  const CocycleKind& kind) {
    const bool oriented = kind.p != 2;
    if (oriented && !t.oriented())
        throw std::invalid_argument("cocycle " + kind.name() + " needs an oriented triangulation");
    std::vector<LocalCocycleData> out;
    for (std::size_t i = 0; i < t.facets().size(); ++i)
        out.push_back(local_data(c, t.facets()[i], oriented ? t.orientation_of(i) : 1));
    return out;
}

namespace {

void check_field(const Field& f, const CocycleKind& kind) {
    if (f.modulus() != kind.p || f.is_surrogate())
        throw std::invalid_argument("cocycle " + kind.name() + " needs characteristic " + std::to_string(kind.p));
}

std::string monomial_string(const char* var, const std::vector<unsigned>& mono) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mono.size();) {
        std::size_t j = i;
        while (j < mono.size() && mono[j] == mono[i]) ++j;
        if (i > 0) out << '*';
        out << var << mono[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

}  // namespace

InvariantValue invariant_at(const DualParameters& params, const Triangulation& t, const CocycleKind& kind) {
    const Field& f = params.field();
    check_field(f, kind);
    const auto fs = factor_space(params, t);
    InvariantValue out;
    out.dim_v = fs.dim();
    out.m = kind.m();
    const std::size_t dim = out.dim_v;
    out.form = zeros(f, dim, dim);
    if (dim == 0) {
        out.polynomial = zeros(f, 0, 0);
        return out;
    }

    const auto c = manifold_bilinear_cocycle(params, t);
    const LiftedCocycle lifted(kind.p, kind.k, static_cast<std::size_t>(2 * params.n()));
    const MonomialBasis mons(dim, out.m);
    const std::size_t count = mons.size();
    std::unordered_map<std::uint64_t, Fe> k;

    for (const auto& d : manifold_local_data(c, t, kind)) {
        auto r = zeros(f, d.faces.size(), dim);
        for (std::size_t a = 0; a < d.faces.size(); ++a) {
            const std::size_t idx = fs.vp.face_index(d.faces[a]);
            for (std::size_t i = 0; i < dim; ++i) r(a, i) = fs.complement(i, idx);
        }
        const auto s = symmetric_power(f, r, out.m);
        const MonomialBasis local(d.faces.size(), out.m);
        for (const auto& [alpha, coef] : lifted.on(f, d)) {
            if (f.is_zero(coef)) continue;
            const std::size_t row = local.index_of(alpha);
            std::vector<std::size_t> nz;
            for (std::size_t i = 0; i < count; ++i)
                if (!f.is_zero(s(row, i))) nz.push_back(i);
            for (std::size_t i : nz) {
                const Fe ci = f.mul(coef, s(row, i));
                for (std::size_t j : nz) {
                    auto [pos, inserted] = k.emplace(static_cast<std::uint64_t>(i) * count + j, f.zero());
                    pos->second = f.add(pos->second, f.mul(ci, s(row, j)));
                }
            }
        }
    }

    std::vector<std::ptrdiff_t> pure_of(count, -1);
    for (std::size_t i = 0; i < dim; ++i)
        pure_of[mons.index_of(std::vector<unsigned>(out.m, static_cast<unsigned>(i)))] = static_cast<std::ptrdiff_t>(i);
    std::vector<std::pair<std::uint64_t, Fe>> entries(k.begin(), k.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.polynomial = count <= 4096 ? zeros(f, count, count) : zeros(f, 0, 0);
    for (const auto& [key, value] : entries) {
        if (f.is_zero(value)) continue;
        ++out.nonzero_terms;
        const std::size_t a = key / count, b = key % count;
        if (out.polynomial.rows() != 0) out.polynomial(a, b) = value;
        if (pure_of[a] >= 0 && pure_of[b] >= 0) {
            out.form(static_cast<std::size_t>(pure_of[a]), static_cast<std::size_t>(pure_of[b])) = value;
        } else {
            out.bisemilinear = false;
            if (out.offending.size() < 8)
                out.offending.push_back(f.str(value) + " " + monomial_string("x", mons.monomial(a)) + " " +
                                        monomial_string("y", mons.monomial(b)));
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (!f.is_zero(out.form(i, i))) out.zero_diagonal = false;
        for (std::size_t j = 0; j < dim; ++j)
            if (out.form(i, j) != out.form(j, i)) out.symmetric = false;
    }
    out.rank = matrix_rank(f, out.form);
    return out;
}

Fe invariant_on_colorings(const DualParameters& params, const Triangulation& t, const CocycleKind& kind,
                          const std::vector<Fe>& x, const std::vector<Fe>& y) {
    const Field& f = params.field();
    check_field(f, kind);
    const auto faces = colored_faces(t, params.n());
    if (x.size() != faces.size() || y.size() != faces.size()) throw std::invalid_argument("coloring length mismatch");
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
    const auto c = manifold_bilinear_cocycle(params, t);
    const LiftedCocycle lifted(kind.p, kind.k, static_cast<std::size_t>(2 * params.n()));
    Fe acc = f.zero();
    for (const auto& d : manifold_local_data(c, t, kind)) {
        std::vector<Fe> xl, yl;
        for (const auto& v : d.faces) {
            xl.push_back(x[index.at(v)]);
            yl.push_back(y[index.at(v)]);
        }
        acc = f.add(acc, evaluate(f, lifted.on(f, d), xl, yl));
    }
    return acc;
}

InvariantReport evaluate_invariant(const FieldSpec& spec, const Triangulation& t, const CocycleKind& kind,
                                   const std::vector<std::uint64_t>& seeds, const std::string& name) {
    if (seeds.empty()) throw std::invalid_argument("at least one seed required");
    manifold_n(t);
    if (kind.p != 2 && !t.oriented())
        throw std::invalid_argument("cocycle " + kind.name() + " needs an oriented triangulation");
    InvariantReport report;
    report.manifold_name = name;
    report.field = spec;
    report.cocycle_kind = kind.name();
    report.seeds_used = seeds;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        auto value = with_resampling(
            spec, seeds[i],
            [&](const GenericPoint& point) { return invariant_at(manifold_parameters(point, t), t, kind); },
            &report.resamples);
        report.dims_per_seed.push_back(value.dim_v);
        report.ranks_per_seed.push_back(value.rank);
        if (i == 0) {
            report.dim_v = value.dim_v;
            report.rank = value.rank;
            report.form_matrix = value.form;
        } else if (value.dim_v != report.dim_v || value.rank != report.rank) {
            report.seeds_agree = false;
        }
        if (!value.bisemilinear) {
            report.bisemilinear = false;
            for (auto& o : value.offending)
                if (report.offending.size() < 8) report.offending.push_back(std::move(o));
        }
    }
    return report;
}

PachnerInvarianceReport check_pachner_invariance(const FieldSpec& spec, const Triangulation& t, const CocycleKind& kind,
                                                 int moves, std::uint64_t seed) {
    if (moves < 0) throw std::invalid_argument("negative move count");
    manifold_n(t);
    unsigned resamples = 0;
    auto report = with_resampling(
        spec, seed,
        [&](const GenericPoint& point) {
            PachnerInvarianceReport r;
            std::mt19937_64 rng(seed);
            Triangulation current = t;
            auto params = manifold_parameters(point, current);
            auto record = [&](const std::string& move) {
                const auto v = invariant_at(params, current, kind);
                r.steps.push_back({move, current.facets().size(), v.dim_v, v.rank});
            };
            record("");
            for (int i = 0; i < moves; ++i) {
                const auto site = random_move_site(current, rng);
                if (!site) break;
                current = apply_pachner_move(current, *site);
                params.extend(point, current.vertices());
                record(std::to_string(site->kappa()) + "-" +
                       std::to_string(current.dimension() + 2 - site->kappa()) + " on " + str(site->sphere));
            }
            for (const auto& s : r.steps)
                if (s.dim_v != r.steps.front().dim_v || s.rank != r.steps.front().rank) r.unchanged = false;
            r.final_triangulation = current;
            return r;
        },
        &resamples);
    report.resamples = resamples;
    return report;
}

}  // namespace polygonkit
