#include "doctest.h"

#include "polygonkit/gcolor/coloring.hpp"
#include "polygonkit/gcolor/parameters.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

using namespace polygonkit;

namespace {

std::vector<FieldSpec> test_fields() {
    return {make_field(2, 16), make_field(0, 1), make_field(3, default_extension_degree(3)),
            make_field(5, default_extension_degree(5))};
}

PrimalParameters primal_at(const FieldSpec& spec, int n, std::uint64_t seed) {
    return with_resampling(spec, seed, [&](const GenericPoint& p) { return PrimalParameters::sample(p, n); });
}

std::vector<int> labels(int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

// Sum of a linear combination of g-vectors given as (coefficient, b) pairs over the faces.
std::vector<Fe> combination(const GVectorSource& src, const std::vector<std::pair<Fe, Simplex>>& terms,
                            const std::vector<Simplex>& faces) {
    const Field& f = src.field();
    std::vector<Fe> acc(faces.size(), f.zero());
    for (const auto& [c, b] : terms) {
        const auto e = g_vector(src, b, faces);
        for (std::size_t i = 0; i < faces.size(); ++i) acc[i] = f.add(acc[i], f.mul(c, e.values[i]));
    }
    return acc;
}

bool all_zero(const Field& f, const std::vector<Fe>& v) {
    for (Fe x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

}  // namespace

TEST_CASE("det3 on an identity block and antisymmetry") {
    const Field f(make_field(2, 16));
    std::vector<std::array<Fe, 3>> cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {5, 7, 9}, {3, 11, 2}};
    PrimalParameters m(f, 2, cols);
    CHECK(m.det3(1, 2, 3) == f.one());
    CHECK(m.det3(1, 1, 4) == f.zero());

    for (const auto& spec : test_fields()) {
        const auto p = primal_at(spec, 3, 11);
        const Field& g = p.field();
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                for (int k = 1; k <= 7; ++k) {
                    CHECK(p.det3(i, j, k) == g.neg(p.det3(j, i, k)));
                    CHECK(p.det3(i, j, k) == g.neg(p.det3(i, k, j)));
                    CHECK(p.det3(i, j, k) == p.det3(j, k, i));
                }
    }
}

TEST_CASE("Pluecker three-term identity for determinants") {
    for (const auto& spec : test_fields())
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto p = primal_at(spec, 3, seed);
            const Field& f = p.field();
            for (int q = 1; q <= 7; ++q)
                for (int j1 = 1; j1 <= 7; ++j1)
                    for (int j2 = j1 + 1; j2 <= 7; ++j2)
                        for (int j3 = j2 + 1; j3 <= 7; ++j3)
                            for (int l = 1; l <= 7; ++l) {
                                if (q == j1 || q == j2 || q == j3 || l == q) continue;
                                Fe s = f.mul(p.det3(j2, j3, q), p.det3(j1, l, q));
                                s = f.sub(s, f.mul(p.det3(j1, j3, q), p.det3(j2, l, q)));
                                s = f.add(s, f.mul(p.det3(j1, j2, q), p.det3(j3, l, q)));
                                CHECK(f.is_zero(s));
                            }
        }
}

TEST_CASE("primal g-vectors: support and edge components") {
    const auto p = primal_at(make_field(2, 16), 3, 5);
    const Field& f = p.field();
    const auto faces = colored_faces(p_simplex(3), 3);
    REQUIRE(faces.size() == 21);
    const auto e = g_vector(p, {1, 2}, faces);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!contains(faces[i], Simplex{1, 2})) CHECK(e.values[i] == f.zero());
        else CHECK(e.values[i] != f.zero());
    }
    // e_ij on face ijlm (omitting the other three vertices) in the heptagon setting:
    // with l, m omitted, e_ij|_v = d_ilm d_jlm.
    const Simplex v = {1, 2, 4, 5, 6};
    CHECK(e.at(v) == f.mul(p.det3(1, 3, 7), p.det3(2, 3, 7)));
    CHECK_THROWS_AS(g_vector(p, {1}, faces), std::invalid_argument);
}

TEST_CASE("four-term relation between g-vectors") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : {make_field(2, 16), make_field(0, 1), make_field(3, default_extension_degree(3))})
            for (std::uint64_t seed = 1; seed <= 50; ++seed) {
                const auto p = primal_at(spec, n, seed);
                const Field& f = p.field();
                const auto faces = colored_faces(p_simplex(n), n);
                // A handful of admissible choices per point keeps the run short.
                const auto all = range_simplex(2 * n + 1);
                std::mt19937_64 rng(seed * 31 + n);
                for (int trial = 0; trial < 4; ++trial) {
                    auto perm = all;
                    std::shuffle(perm.begin(), perm.end(), rng);
                    const Simplex base = make_simplex(std::vector<int>(perm.begin(), perm.begin() + (n - 2)));
                    const int j = perm[n - 2], k = perm[n - 1], l = perm[n], m = perm[n + 1];
                    auto with = [&](int x) { return unite(base, Simplex{x}); };
                    const auto r = combination(p,
                                               {{p.det3(k, l, m), with(j)},
                                                {f.neg(p.det3(j, l, m)), with(k)},
                                                {p.det3(j, k, m), with(l)},
                                                {f.neg(p.det3(j, k, l)), with(m)}},
                                               faces);
                    CHECK(all_zero(f, r));
                }
            }
}

TEST_CASE("three-term relation on a d-simplex, primal and dual forms") {
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto p = primal_at(make_field(2, 16), n, seed);
            const Field& f = p.field();
            const int top = 2 * n + 1;
            for (int m = 1; m <= top; ++m) {
                const Simplex w = remove_vertex(range_simplex(top), m);
                const auto faces = subsets_of_size(w, 2 * n - 1);
                const Simplex base(w.begin(), w.begin() + (n - 2));
                const int j = w[n - 2], k = w[n - 1], l = w[n];
                auto with = [&](int x) { return unite(base, Simplex{x}); };
                CHECK(all_zero(f, combination(p,
                                              {{p.det3(k, l, m), with(j)},
                                               {f.neg(p.det3(j, l, m)), with(k)},
                                               {p.det3(j, k, m), with(l)}},
                                              faces)));
            }
        }

    // Dual form with rows drawn independently: the coefficient of e_{b x} is (-1)^{pos y + pos z} p_{w - y - z}
    // for {x, y, z} = {j, k, l}, positions taken in w.
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : test_fields())
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                const std::vector<int> w = {2, 3, 5, 8, 9, 12, 13, 20};
                const Simplex ws(w.begin(), w.begin() + 2 * n);
                const auto d = with_resampling(spec, seed, [&](const GenericPoint& pt) {
                    auto dp = DualParameters::sample(pt, n, ws);
                    local_g_basis(dp, ws);
                    return dp;
                });
                const Field& f = d.field();
                const auto faces = subsets_of_size(ws, 2 * n - 1);
                for (auto [a, b, c] : {std::array<int, 3>{0, 1, 2}, {0, 2, 3}, {1, 2, 3}}) {
                    std::vector<int> rest;
                    for (int i = 0; i < 2 * n; ++i)
                        if (i != a && i != b && i != c) rest.push_back(ws[i]);
                    const Simplex base(rest.begin(), rest.begin() + (n - 2));
                    const int j = ws[a], k = ws[b], l = ws[c];
                    auto coef = [&](int y, int z) {
                        const Fe pv = d.pdet(remove_vertices(ws, Simplex{std::min(y, z), std::max(y, z)}));
                        return ((position_of(ws, y) + position_of(ws, z)) % 2) ? f.neg(pv) : pv;
                    };
                    auto with = [&](int x) { return unite(base, Simplex{x}); };
                    const auto r = combination(d, {{coef(k, l), with(j)}, {f.neg(coef(j, l)), with(k)}, {coef(j, k), with(l)}},
                                               faces);
                    CHECK(all_zero(f, r));
                    // Independent check: the three restricted vectors span a plane.
                    auto m3 = zeros(f, 3, faces.size());
                    int row = 0;
                    for (int x : {j, k, l}) {
                        const auto e = g_vector(d, with(x), faces);
                        for (std::size_t i = 0; i < faces.size(); ++i) m3(row, i) = e.values[i];
                        ++row;
                    }
                    CHECK(matrix_rank(f, m3) == 2);
                }
            }
}

TEST_CASE("dual parameters from primal: duality and agreement of g-vectors") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : test_fields()) {
            const int seeds = (n == 3) ? 100 : 10;
            for (int seed = 1; seed <= seeds; ++seed) {
                const auto p = primal_at(spec, n, seed);
                const Field& f = p.field();
                const auto d = DualParameters::from_primal(p);
                const int top = 2 * n + 1;
                for (const auto& j3 : subsets_of_size(range_simplex(top), 3)) {
                    const auto i_set = complement_in(range_simplex(top), j3);
                    const int sum = std::accumulate(i_set.begin(), i_set.end(), 0);
                    const Fe dj = p.det3(j3[0], j3[1], j3[2]);
                    CHECK(d.pdet(i_set) == (sum % 2 ? f.neg(dj) : dj));
                }
                // Each factor of the dual product carries (-1)^{T + l + m} relative to the primal one,
                // T = 1 + ... + (2n+1), l and m the omitted vertices; with n - 1 factors this cancels for odd n.
                const int total = top * (top + 1) / 2;
                const auto faces = colored_faces(p_simplex(n), n);
                for (const auto& v : faces) {
                    const auto lm = complement_in(range_simplex(top), v);
                    const bool flip = (n - 1) % 2 == 1 && (total + lm[0] + lm[1]) % 2 == 1;
                    for (const auto& b : subsets_of_size(v, n - 1)) {
                        const Fe primal = p.g_component(b, v);
                        CHECK(d.g_component(b, v) == (flip ? f.neg(primal) : primal));
                        if (n % 2 == 1) CHECK(d.g_component(b, v) == primal);
                    }
                }
            }
        }
}

TEST_CASE("pdet is a function of the label set") {
    const GenericPoint pt(make_field(3, default_extension_degree(3)), 4);
    const auto d = DualParameters::sample(pt, 3, {1, 2, 3, 4, 5, 6});
    CHECK(d.pdet({4, 1, 3, 2}) == d.pdet({1, 2, 3, 4}));
    CHECK(d.pdet({1, 1, 3, 2}) == d.field().zero());
    CHECK_THROWS_AS(d.pdet({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(d.pdet({1, 2, 3, 9}), std::invalid_argument);
}

TEST_CASE("dimensions of g-coloring spaces") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& spec : test_fields())
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto p = primal_at(spec, n, seed);
                CHECK(g_coloring_space(p, p_simplex(n)).dim() == static_cast<std::size_t>(n * (n + 1) / 2));
                for (int q = 1; q <= 2 * n + 1; ++q) CHECK(g_coloring_space(p, d_simplex(n, q)).dim() == static_cast<std::size_t>(n));

                // g-vectors of all b inside one n-simplex are independent.
                const Field& f = p.field();
                const auto faces = colored_faces(p_simplex(n), n);
                std::vector<int> chosen;
                for (int v = 2; v <= n + 2; ++v) chosen.push_back(v);
                const Simplex delta_n = make_simplex(chosen);
                auto m = zeros(f, 0, faces.size());
                for (const auto& b : subsets_of_size(delta_n, n - 1)) m.append_row(g_vector(p, b, faces).values);
                CHECK(matrix_rank(f, m) == static_cast<std::size_t>(n * (n + 1) / 2));
            }
}

TEST_CASE("permitted colorings of the boundary of a P-simplex equal its g-colorings") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : test_fields()) {
            const auto sphere = boundary_sphere(2 * n - 1);
            const auto p = primal_at(spec, n, 7);
            const auto vg = g_coloring_space(p, sphere);
            const auto vp = permitted_coloring_space(p, sphere);
            CHECK(vg.dim() == static_cast<std::size_t>(n * (n + 1) / 2));
            CHECK(vp.dim() == vg.dim());
            for (std::size_t r = 0; r < vg.dim(); ++r) CHECK(vp.contains(p.field(), vg.basis.row_vector(r)));

            const auto d = with_resampling(spec, 3, [&](const GenericPoint& pt) {
                auto dp = DualParameters::sample(pt, n, labels(2 * n + 1));
                return std::make_pair(g_coloring_space(dp, sphere).dim(), permitted_coloring_space(dp, sphere).dim());
            });
            CHECK(d.first == static_cast<std::size_t>(n * (n + 1) / 2));
            CHECK(d.second == d.first);
        }
}

TEST_CASE("g-colorings are permitted on closed manifolds") {
    const auto s3 = boundary_sphere(3);
    const auto s1s2 = product_triangulation(boundary_sphere(1), boundary_sphere(2));
    for (const auto& spec : test_fields()) {
        for (const auto* t : {&s3, &s1s2}) {
            const int n = (t->dimension() + 1) / 2;
            const auto r = with_resampling(spec, 1, [&](const GenericPoint& pt) {
                auto d = DualParameters::sample(pt, n, t->vertices());
                auto vg = g_coloring_space(d, *t);
                auto vp = permitted_coloring_space(d, *t);
                bool inside = true;
                for (std::size_t i = 0; i < vg.dim(); ++i) inside = inside && vp.contains(d.field(), vg.basis.row_vector(i));
                return std::make_tuple(vg.dim(), vp.dim(), inside);
            });
            CHECK(std::get<2>(r));
            CHECK(std::get<0>(r) <= std::get<1>(r));
        }
    }
}
