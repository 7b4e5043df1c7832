#include "doctest.h"

#include "polygonkit/gcolor/coloring.hpp"
#include "polygonkit/polygonrel/relation.hpp"

#include <algorithm>
#include <random>

using namespace polygonkit;

namespace {

std::vector<FieldSpec> test_fields() {
    return {make_field(2, 16), make_field(0, 1), make_field(3, default_extension_degree(3)),
            make_field(5, default_extension_degree(5))};
}

PrimalParameters primal_at(const FieldSpec& spec, int n, std::uint64_t seed) {
    return with_resampling(spec, seed, [&](const GenericPoint& p) { return PrimalParameters::sample(p, n); });
}

TransferMatrix standard(const PrimalParameters& p, const TransferMatrix& a) {
    return apply_gauge(p.field(), a, standard_sign_gauge(p.field(), p.n(), a));
}

std::vector<Fe> components(const PrimalParameters& p, const Simplex& b, const std::vector<Simplex>& faces) {
    std::vector<Fe> v;
    for (const auto& face : faces) v.push_back(p.g_component(b, face));
    return v;
}

std::vector<Fe> row_times(const Field& f, const std::vector<Fe>& row, const MatrixOf<Field>& m) {
    std::vector<Fe> out(m.cols(), f.zero());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < row.size(); ++i) out[j] = f.add(out[j], f.mul(row[i], m(i, j)));
    return out;
}

std::vector<int> random_permutation(int top, std::mt19937_64& rng) {
    std::vector<int> v(top);
    for (int i = 0; i < top; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

}  // namespace

TEST_CASE("first row of a transfer matrix from the lower and upper g-vector components") {
    for (int n = 2; n <= 4; ++n) {
        const auto p = primal_at(make_field(2, 16), n, 3);
        const Field& f = p.field();
        for (int q = 1; q <= 2 * n + 1; ++q) {
            const auto a = transfer_matrix(p, q, default_input_vertices(n, q));
            const auto& in = a.input_vertices;
            Fe lower = f.one();
            for (std::size_t k = 1; k < in.size(); ++k) lower = f.mul(lower, p.det3(in[k], in[0], q));
            for (int c = 0; c < n; ++c) {
                Fe upper = f.one();
                for (std::size_t k = 1; k < in.size(); ++k) upper = f.mul(upper, p.det3(in[k], a.output_vertices[c], q));
                CHECK(f.mul(lower, a.entries(0, c)) == upper);
            }
        }
    }
}

TEST_CASE("transfer matrices agree with a solve from g-vectors for arbitrary input legs") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : test_fields())
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                const auto p = primal_at(spec, n, seed);
                const Field& f = p.field();
                for (int q = 1; q <= 2 * n + 1; ++q) {
                    auto legs = remove_vertex(range_simplex(2 * n + 1), q);
                    std::shuffle(legs.begin(), legs.end(), rng);
                    std::vector<int> inputs(legs.begin(), legs.begin() + n);
                    std::sort(inputs.begin(), inputs.end());
                    const auto a = standard(p, transfer_matrix(p, q, inputs));
                    // Every g-vector of the d-simplex is carried from its input to its output legs.
                    const auto w = remove_vertex(range_simplex(2 * n + 1), q);
                    auto lower = zeros(f, 0, n), upper = zeros(f, 0, n);
                    for (const auto& b : subsets_of_size(w, n - 1)) {
                        const auto lo = components(p, b, a.inputs);
                        const auto up = components(p, b, a.outputs);
                        CHECK(row_times(f, lo, a.entries) == up);
                        auto trial = lower;
                        trial.append_row(lo);
                        if (matrix_rank(f, trial) > lower.rows()) {
                            lower.append_row(lo);
                            upper.append_row(up);
                        }
                    }
                    REQUIRE(lower.rows() == static_cast<std::size_t>(n));
                    CHECK(multiply(f, inverse(f, lower), upper) == a.entries);
                }
            }
}

TEST_CASE("B matrices are transfer matrices with legs interchanged") {
    for (int n = 2; n <= 4; ++n) {
        const auto p = primal_at(make_field(3, default_extension_degree(3)), n, 9);
        for (int q = 1; q <= 2 * n + 1; ++q) {
            const auto a = standard(p, transfer_matrix(p, q, default_input_vertices(n, q)));
            const auto b = inverse_transfer(p.field(), a);
            const auto direct = standard(p, transfer_matrix(p, q, a.output_vertices, a.input_vertices));
            CHECK(b.entries == direct.entries);
            CHECK(b.inputs == direct.inputs);
        }
    }
}

TEST_CASE("heptagon relation at twenty points") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto p = primal_at(make_field(2, 16), 3, seed);
        const auto rel = build_odd_gon(p);
        REQUIRE(rel.lhs.size() == 4);
        REQUIRE(rel.rhs.size() == 3);
        CHECK(rel.lhs[1].positions == std::vector<std::size_t>{0, 3, 4});
        CHECK(rel.rhs[1].positions == std::vector<std::size_t>{1, 3, 4});
        CHECK(check_relation(p.field(), rel).holds);
        // For odd n the matrices need no sign adjustment.
        CHECK(check_relation(p.field(), build_odd_gon(p, SignConvention::kRaw)).holds);
    }
}

TEST_CASE("odd-gon relations over several characteristics") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : test_fields())
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const auto check = verify_odd_gon(primal_at(spec, n, seed));
                CHECK(check.holds);
                CHECK(check.superfluous.empty());
            }
}

TEST_CASE("a perturbed factor breaks the relation and the residual locates it") {
    const auto p = primal_at(make_field(5, default_extension_degree(5)), 3, 2);
    const Field& f = p.field();
    auto rel = build_odd_gon(p);
    rel.lhs[0].core.entries(0, 0) = f.add(rel.lhs[0].core.entries(0, 0), f.one());
    const auto check = check_relation(f, rel);
    CHECK_FALSE(check.holds);
    CHECK(check.nonzero_entries > 0);
    REQUIRE(check.first_violation.has_value());
    CHECK(check.first_violation->first == 0);
}

TEST_CASE("full polygon relations for every move and random relabelings") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 4; ++n)
        for (const auto& spec : {make_field(2, 16), make_field(0, 1), make_field(3, default_extension_degree(3))})
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto p = primal_at(spec, n, seed);
                for (int kappa = 1; kappa <= 2 * n; ++kappa) {
                    const auto pi = seed == 1 ? std::vector<int>{} : random_permutation(2 * n + 1, rng);
                    const auto check = full_polygon_relation(p, kappa, pi);
                    CHECK(check.holds);
                    const int k = kappa >= n + 1 ? kappa - n - 1 : n - kappa;
                    CHECK(check.superfluous.size() == static_cast<std::size_t>(k * (k + 1) / 2));
                    CHECK(check.superfluous_identity);
                }
            }
}

TEST_CASE("move 5 -> 2 in the heptagon setting has one superfluous position") {
    const auto p = primal_at(make_field(2, 16), 3, 4);
    const auto rel = build_full_polygon(p, 5);
    CHECK(rel.lhs.size() == 5);
    CHECK(rel.rhs.size() == 2);
    CHECK(rel.lhs.back().inverse);
    const auto check = check_relation(p.field(), rel);
    CHECK(check.holds);
    CHECK(check.superfluous.size() == 1);
    CHECK(check.superfluous_identity);

    const auto p2 = primal_at(make_field(2, 16), 2, 4);
    const auto one_to_four = build_full_polygon(p2, 1);
    CHECK(one_to_four.lhs.size() == 1);
    CHECK(one_to_four.rhs.size() == 4);
    CHECK(check_relation(p2.field(), one_to_four).holds);
}

TEST_CASE("every operator shares exactly one leg with every other") {
    for (int n = 2; n <= 5; ++n) {
        const auto p = primal_at(make_field(2, 16), n, 1);
        for (int kappa = 1; kappa <= 2 * n; ++kappa) {
            const auto report = link_report(build_full_polygon(p, kappa));
            CHECK(report.operators == static_cast<std::size_t>(2 * n + 1));
            CHECK(report.all_linked_once());
        }
    }
}

TEST_CASE("gauge transformations") {
    const auto p = primal_at(make_field(0, 1), 3, 6);
    const Field& f = p.field();
    const auto rel = build_odd_gon(p);

    GaugeVector ones;
    for (const auto& face : colored_faces(p_simplex(3), 3)) ones.lambdas[face] = f.one();
    const auto same = apply_gauge(f, rel, ones);
    for (std::size_t i = 0; i < rel.lhs.size(); ++i) CHECK(same.lhs[i].core.entries == rel.lhs[i].core.entries);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        GaugeVector g;
        for (const auto& face : colored_faces(p_simplex(3), 3)) g.lambdas[face] = f.random_nonzero(rng);
        CHECK(check_relation(f, apply_gauge(f, rel, g)).holds);
    }

    GaugeVector bad;
    bad.lambdas[colored_faces(p_simplex(3), 3)[0]] = f.zero();
    CHECK_THROWS_AS(apply_gauge(f, rel, bad), std::invalid_argument);
}

TEST_CASE("sign gauge for relabelings in even n") {
    std::mt19937_64 rng(21);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto p = primal_at(make_field(5, default_extension_degree(5)), 2, seed);
        const Field& f = p.field();
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b) {
                std::vector<int> pi = {1, 2, 3, 4, 5};
                std::swap(pi[a - 1], pi[b - 1]);
                auto raw = build_full_polygon(p, 3, pi, SignConvention::kRaw);
                // Fix each factor by its own ±1 gauge; the result is a valid relation.
                for (auto* side : {&raw.lhs, &raw.rhs})
                    for (auto& op : *side) {
                        const auto g = standard_sign_gauge(f, 2, op.core);
                        for (const auto& [face, lambda] : g.lambdas) CHECK((lambda == f.one() || lambda == f.neg(f.one())));
                        op = apply_gauge(f, op, g);
                    }
                CHECK(check_relation(f, raw).holds);
            }
    }
}

TEST_CASE("transfer matrix argument validation") {
    const auto p = primal_at(make_field(2, 16), 2, 1);
    CHECK_THROWS_AS(transfer_matrix(p, 1, {2}), std::invalid_argument);
    CHECK_THROWS_AS(transfer_matrix(p, 1, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(transfer_matrix(p, 6, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_full_polygon(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_full_polygon(p, 5), std::invalid_argument);
    CHECK(default_input_vertices(3, 4) == std::vector<int>{1, 3, 6});
}
