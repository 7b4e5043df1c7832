#include "polygonkit/cli/checks.hpp"

#include "polygonkit/cohomology/heptagon5.hpp"
#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/invariant/invariant.hpp"

#include <algorithm>
#include <random>

namespace polygonkit {

bool CocycleCheckReport::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

namespace {

std::map<Simplex, Fe> random_permitted(const PrimalParameters& params, const ColoringSpace& space, std::mt19937_64& rng) {
    const Field& f = params.field();
    std::vector<Fe> coef(space.dim());
    for (auto& c : coef) c = f.random(rng);
    const auto values = row_times(f, coef, space.basis);
    std::map<Simplex, Fe> out;
    for (std::size_t i = 0; i < space.faces.size(); ++i) out[space.faces[i]] = values[i];
    return out;
}

std::vector<Fe> on_faces(const std::map<Simplex, Fe>& coloring, const std::vector<Simplex>& faces) {
    std::vector<Fe> v;
    for (const auto& face : faces) v.push_back(coloring.at(face));
    return v;
}

std::vector<NamedCheck> bilinear_checks(const PrimalParameters& p, const PermittedSpaces& spaces) {
    const Field& f = p.field();
    const int n = p.n(), top = 2 * n + 1;
    const auto c = bilinear_2n2_cocycle(p);
    std::vector<NamedCheck> out;

    std::size_t pairs = 0, bad = 0;
    const auto gs = g_simplices(p_simplex(n), n);
    for (int q = 1; q <= top; ++q) {
        const auto faces = subsets_of_size(remove_vertex(range_simplex(top), q), 2 * n - 1);
        for (const auto& b1 : gs)
            for (const auto& b2 : gs) {
                ++pairs;
                if (!f.is_zero(scalar_product_2n2(f, c, q, g_vector(p, b1, faces).values, g_vector(p, b2, faces).values)))
                    ++bad;
            }
    }
    out.push_back({"vanishes on g-vector pairs", bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs)});

    const auto space = permitted_coloring_space(p, p_simplex(n));
    std::mt19937_64 rng(0x5eed);
    pairs = bad = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_permitted(p, space, rng), y = random_permitted(p, space, rng);
        for (int q = 1; q <= top; ++q) {
            const auto faces = subsets_of_size(remove_vertex(range_simplex(top), q), 2 * n - 1);
            ++pairs;
            if (!f.is_zero(scalar_product_2n2(f, c, q, on_faces(x, faces), on_faces(y, faces)))) ++bad;
        }
    }
    out.push_back({"vanishes on random permitted pairs", bad == 0, std::to_string(pairs - bad) + "/" + std::to_string(pairs)});

    const auto kernel = bilinear_cocycle_kernel(spaces);
    out.push_back({"cocycle space is one-dimensional", kernel.rows() == 1, "dimension " + std::to_string(kernel.rows())});
    bool proportional = kernel.rows() == 1;
    if (proportional) {
        const auto& faces = spaces.simplices(static_cast<std::size_t>(2 * n - 1));
        const Fe ratio = f.div(kernel(0, 0), c.at(faces[0]));
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (kernel(0, i) != f.mul(ratio, c.at(faces[i]))) proportional = false;
    }
    out.push_back({"kernel proportional to c_iq", proportional, ""});
    return out;
}

std::vector<NamedCheck> lifted_checks(const PrimalParameters& p, const PermittedSpaces& spaces, const CocycleKind& kind) {
    const Field& f = p.field();
    const int n = p.n();
    const auto c = bilinear_2n2_cocycle(p);
    const LiftedCocycle lifted(kind.p, kind.k, static_cast<std::size_t>(2 * n));
    const auto space = make_cochain_space(spaces, static_cast<std::size_t>(2 * n - 1), CochainFlavor::kBipolynomial, lifted.m());
    const auto z = cochain_vector(spaces, space, [&](const Simplex& w) { return lifted.on(f, local_data(c, w)); });
    std::vector<NamedCheck> out;
    const bool closed = is_cocycle(spaces, space, z);
    out.push_back({"coboundary vanishes", closed, "bipolynomial degree " + std::to_string(lifted.m())});
    if (closed) {
        const auto t = triviality_test(spaces, space, z);
        out.push_back({"nontrivial", t == Triviality::kNontrivial, to_string(t)});
    } else {
        out.push_back({"nontrivial", false, "not a cocycle"});
    }
    return out;
}

std::vector<NamedCheck> heptagon_checks(const PrimalParameters& p, const PermittedSpaces& spaces) {
    const Field& f = p.field();
    std::vector<NamedCheck> out;

    std::size_t total = 0, bad = 0;
    for (int q = 1; q <= 7; ++q) {
        const auto others = remove_vertex(range_simplex(7), q);
        for (const auto& quad : subsets_of_size(others, 4))
            for (int i : quad) {
                std::vector<int> js;
                for (int j : quad)
                    if (j != i) js.push_back(j);
                const Simplex kl = make_simplex({others[0] == i ? others[1] : others[0], others.back()});
                auto ip = [&](int j) { return heptagon_edge_product(p, make_simplex({i, j}), kl, q); };
                Fe sum = f.mul(p.det3(js[1], js[2], q), ip(js[0]));
                sum = f.sub(sum, f.mul(p.det3(js[0], js[2], q), ip(js[1])));
                sum = f.add(sum, f.mul(p.det3(js[0], js[1], q), ip(js[2])));
                ++total;
                if (!f.is_zero(sum)) ++bad;
            }
    }
    out.push_back({"consistent with three-term dependences", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total)});

    total = bad = 0;
    const auto edges = subsets_of_size(range_simplex(7), 2);
    for (const auto& a : edges)
        for (const auto& b : edges) {
            Fe sum = f.zero();
            for (int q = 1; q <= 7; ++q) {
                const Fe v = heptagon_edge_product(p, a, b, q);
                sum = q % 2 == 0 ? f.add(sum, v) : f.sub(sum, v);
            }
            ++total;
            if (!f.is_zero(sum)) ++bad;
        }
    out.push_back({"alternating sum over the seven 5-simplices", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total)});

    const Fe w1 = heptagon_edge_product(p, {1, 2}, {3, 4}, 7);
    const Fe w2 = heptagon_edge_product(p, {1, 3}, {2, 4}, 7);
    const Fe w3 = heptagon_edge_product(p, {1, 4}, {2, 3}, 7);
    out.push_back({"witness values pairwise distinct", w1 != w2 && w1 != w3 && w2 != w3, ""});

    const auto cocycle = heptagon_5_cocycle(p, spaces);
    out.push_back({"extends to permitted spaces", cocycle.pairs_checked == 7 * 15 * 15,
                   std::to_string(cocycle.pairs_checked) + " edge pairs"});
    for (auto flavor : {CochainFlavor::kSymmetricBilinear, CochainFlavor::kPolynomial}) {
        const auto space = make_cochain_space(spaces, 5, flavor, 2);
        const auto z = heptagon_cochain_vector(spaces, space, cocycle);
        const bool closed = is_cocycle(spaces, space, z);
        const bool nontrivial = closed && triviality_test(spaces, space, z) == Triviality::kNontrivial;
        out.push_back({"nontrivial (" + to_string(flavor) + ")", nontrivial, closed ? "" : "not a cocycle"});
    }
    return out;
}

}  // namespace

CocycleCheckReport cocycle_check(const std::string& cocycle, const FieldSpec& spec, int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    CocycleCheckReport report;
    report.cocycle = cocycle;
    report.field = spec;
    report.n = n;
    report.seed = seed;
    std::optional<CocycleKind> kind;
    if (cocycle == "hepta5") {
        if (n != 3) throw std::invalid_argument("hepta5 needs n = 3");
    } else if (cocycle != "bilinear") {
        kind = CocycleKind::parse(cocycle);
        if (spec.characteristic != kind->p)
            throw std::invalid_argument("cocycle " + cocycle + " needs characteristic " + std::to_string(kind->p));
    }
    report.checks = with_resampling(
        spec, seed,
        [&](const GenericPoint& point) {
            const auto params = PrimalParameters::sample(point, n);
            const PermittedSpaces spaces(params, p_simplex(n));
            if (cocycle == "bilinear") return bilinear_checks(params, spaces);
            if (cocycle == "hepta5") return heptagon_checks(params, spaces);
            return lifted_checks(params, spaces, *kind);
        },
        &report.resamples);
    return report;
}

}  // namespace polygonkit
