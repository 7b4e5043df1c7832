#include "CLI11.hpp"

#include "polygonkit/cli/checks.hpp"
#include "polygonkit/cli/corpus.hpp"
#include "polygonkit/cohomology/cocycles.hpp"
#include "polygonkit/cohomology/heptagon5.hpp"
#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/exactfield/rational.hpp"
#include "polygonkit/invariant/invariant.hpp"
#include "polygonkit/polygonrel/relation.hpp"
#include "polygonkit/simplicial/index_sets.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace polygonkit;

namespace {

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Outcome {
    std::vector<SubCheck> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    bool pass() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.pass; });
    }
    std::size_t failed() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SubCheck& c) { return !c.pass; }));
    }
};

struct Criterion {
    int id;
    std::string title;
    double cap_seconds;
    bool heavy;
    std::function<Outcome()> run;
};

FieldSpec generic(std::uint64_t p) { return make_field(p, p == 0 ? 1 : default_extension_degree(p)); }

const std::vector<FieldSpec>& relation_fields() {
    static const std::vector<FieldSpec> fields = {generic(0), generic(2), generic(3), generic(5)};
    return fields;
}

PrimalParameters primal_at(const FieldSpec& spec, int n, std::uint64_t seed) {
    return with_resampling(spec, seed, [&](const GenericPoint& p) { return PrimalParameters::sample(p, n); });
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

Outcome relation_identities() {
    Outcome out;
    const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    for (int n : {2, 3, 4}) {
        std::size_t good = 0, total = 0;
        for (const auto& spec : relation_fields())
            for (auto seed : seeds) {
                ++total;
                if (verify_odd_gon(primal_at(spec, n, seed)).holds) ++good;
            }
        out.add("odd-gon n=" + std::to_string(n), good == total, ratio(good, total) + " field x seed");
    }
    for (int n : {2, 3}) {
        std::size_t good = 0, total = 0;
        for (const auto& spec : relation_fields())
            for (auto seed : seeds) {
                const auto p = primal_at(spec, n, seed);
                for (int kappa = 1; kappa <= 2 * n; ++kappa) {
                    ++total;
                    if (full_polygon_relation(p, kappa).holds) ++good;
                }
            }
        out.add("full polygon n=" + std::to_string(n) + ", every kappa", good == total, ratio(good, total));
    }
    return out;
}

Outcome dimension_formulas() {
    Outcome out;
    for (int n = 2; n <= 5; ++n) {
        std::size_t good = 0, total = 0;
        for (const auto& spec : relation_fields())
            for (std::uint64_t seed : {1u, 2u}) {
                const auto p = primal_at(spec, n, seed);
                ++total;
                bool ok = g_coloring_space(p, p_simplex(n)).dim() == static_cast<std::size_t>(n * (n + 1) / 2);
                for (int q = 1; q <= 2 * n + 1; ++q)
                    ok = ok && g_coloring_space(p, d_simplex(n, q)).dim() == static_cast<std::size_t>(n);
                if (ok) ++good;
            }
        out.add("n=" + std::to_string(n) + ": P-simplex n(n+1)/2, d-simplex n", good == total, ratio(good, total));
    }
    return out;
}

Outcome quadratic_sequences() {
    struct Row {
        int n;
        std::size_t dims[3];
        std::size_t ranks[2];
        std::size_t middle;
    };
    const Row rows[] = {{2, {10, 15, 6}, {9, 6}, 0},
                        {3, {21, 42, 21}, {20, 21}, 1},
                        {4, {36, 90, 55}, {35, 55}, 0},
                        {5, {55, 165, 120}, {54, 111}, 0}};
    Outcome out;
    for (const auto& row : rows) {
        const auto r = cohomology_dimension(generic(0), row.n, 2, {11, 12});
        const auto& w = r.window;
        bool ok = r.seeds_agree && w.ranks[0] == row.ranks[0] && w.ranks[1] == row.ranks[1] && w.middle() == row.middle;
        for (int i = 0; i < 3; ++i) ok = ok && w.dims[i] == row.dims[i];
        std::ostringstream detail;
        detail << w.dims[0] << "/" << w.dims[1] << "/" << w.dims[2] << ", ranks " << w.ranks[0] << "/" << w.ranks[1]
               << ", H=" << w.middle() << (r.seeds_agree ? "" : ", seeds disagree");
        out.add("n=" + std::to_string(row.n), ok, detail.str());
    }
    return out;
}

Outcome middle_cohomology_rows() {
    Outcome out;
    const std::tuple<std::uint64_t, int, unsigned, std::size_t> rows[] = {
        {0, 3, 2, 1}, {2, 3, 2, 6}, {2, 3, 3, 6}, {3, 3, 3, 6}, {3, 3, 5, 0}, {0, 4, 2, 0}, {2, 4, 2, 10}};
    for (const auto& [p, n, degree, expected] : rows) {
        const auto r = cohomology_dimension(generic(p), n, degree, {1, 2});
        std::ostringstream name;
        name << "char " << p << ", n=" << n << ", degree " << degree;
        out.add(name.str(), r.seeds_agree && r.window.middle() == expected,
                "dim " + std::to_string(r.window.middle()) + (r.seeds_agree ? "" : ", seeds disagree"));
    }
    return out;
}

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

void add_report(Outcome& out, const std::string& label, const CocycleCheckReport& r) {
    std::string failed;
    for (const auto& c : r.checks)
        if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name;
    out.add(label, r.pass(), failed.empty() ? std::to_string(r.checks.size()) + " checks" : "failed: " + failed);
}

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Outcome cocycle_suites() {
    Outcome out;
    for (int n : {2, 3, 4})
        for (std::uint64_t p : {0u, 2u}) add_report(out, "(a) bilinear n=" + std::to_string(n) + " char " + std::to_string(p), cocycle_check("bilinear", generic(p), n, 7));
    for (int n : {2, 3}) add_report(out, "(b) h2 n=" + std::to_string(n), cocycle_check("h2", generic(2), n, 7));
    add_report(out, "(b) h3 n=3", cocycle_check("h3", generic(3), 3, 7));
    add_report(out, "(c) heptagon 5-cocycle", cocycle_check("hepta5", generic(0), 3, 7));

    const RationalField q;
    std::mt19937_64 rng(2024);
    std::size_t good = 0, points = 0;
    while (points < 100) {
        std::vector<std::array<mpq_class, 3>> cols(7);
        for (auto& col : cols)
            for (auto& x : col) x = random_rational(rng);
        auto head = zeros(q, 3, 3);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) head(i, j) = cols[j][i];
        if (q.is_zero(determinant(q, head))) continue;
        ++points;
        const auto check = dethad_check(q, reduce_first_three(q, cols));
        if (check.reduced && check.holds) ++good;
    }
    out.add("(d) dethad identity at rational points", good == points, ratio(good, points));
    return out;
}

bool all_equal(const std::vector<std::size_t>& v, std::size_t value) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](std::size_t x) { return x == value; });
}

std::string per_seed(const InvariantReport& r) {
    std::ostringstream s;
    for (std::size_t i = 0; i < r.dims_per_seed.size(); ++i) s << (i ? " " : "") << "(" << r.dims_per_seed[i] << "," << r.ranks_per_seed[i] << ")";
    return s.str();
}

void manifold_rows_into(Outcome& out, bool heavy, const std::vector<std::uint64_t>& seeds,
                        const std::set<std::string>& required) {
    for (const auto& row : manifold_rows()) {
        if (row.heavy != heavy) continue;
        if (row.file.empty()) {
            out.notes.push_back(row.label + ": skipped (" + row.note + ")");
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const auto r = evaluate_invariant(generic(2), load_corpus(row.file), CocycleKind::parse("h2"), seeds, row.label);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = r.seeds_agree && r.bisemilinear && all_equal(r.dims_per_seed, row.dim_v) &&
                        all_equal(r.ranks_per_seed, row.rank);
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", wall);
        const std::string detail = per_seed(r) + ", expected (" + std::to_string(row.dim_v) + "," +
                                   std::to_string(row.rank) + "), " + timing;
        if (required.empty() || required.count(row.label))
            out.add(row.label, ok, detail);
        else
            out.notes.push_back(row.label + ": " + (ok ? "matches" : "differs") + ", " + detail);
    }
}

Outcome three_manifolds() {
    Outcome out;
    manifold_rows_into(out, false, {1, 2, 3}, {});
    const auto t = load_corpus("s1xs2.tri");
    for (std::uint64_t p : {0u, 3u, 5u}) {
        std::vector<std::size_t> dims;
        for (std::uint64_t seed : {1u, 2u, 3u})
            dims.push_back(with_resampling(generic(p), seed, [&](const GenericPoint& point) {
                return factor_space(manifold_parameters(point, t), t).dim();
            }));
        std::string detail;
        for (auto d : dims) detail += (detail.empty() ? "" : " ") + std::to_string(d);
        out.add("S^1xS^2 dim V over " + to_string(generic(p)), all_equal(dims, 2), detail);
    }
    return out;
}

Outcome five_manifolds() {
    Outcome out;
    manifold_rows_into(out, true, {1, 2}, {"S^2xS^3", "S^3xRP^2"});
    return out;
}

Outcome pachner_invariance() {
    Outcome out;
    struct Case {
        std::string label;
        Triangulation t;
        std::size_t dim_v, rank;
    };
    const Case cases[] = {{"S^1xS^2", load_corpus("s1xs2.tri"), 2, 0},
                          {"RP^3", load_corpus("rp3.tri"), 2, 0},
                          {"boundary of the 4-simplex", boundary_sphere(3), 0, 0}};
    for (const auto& c : cases)
        for (std::uint64_t seed : {1u, 2u}) {
            const auto r = check_pachner_invariance(generic(2), c.t, CocycleKind::parse("h2"), 6, seed);
            bool ok = r.unchanged && r.steps.size() == 7;
            for (const auto& s : r.steps) ok = ok && s.dim_v == c.dim_v && s.rank == c.rank;
            out.add(c.label + " seed " + std::to_string(seed), ok,
                    std::to_string(r.steps.size() - 1) + " moves, " + std::to_string(r.steps.back().facets) + " facets at the end");
        }
    return out;
}

Outcome structural_properties() {
    Outcome out;
    {
        std::size_t good = 0, total = 0;
        for (int n : {2, 3}) {
            const auto setup = with_resampling(generic(0), 3, [&](const GenericPoint& p) {
                auto params = PrimalParameters::sample(p, n);
                return PermittedSpaces(params, p_simplex(n));
            });
            const Field& f = setup.field();
            const std::size_t lo = static_cast<std::size_t>(2 * n - 2);
            for (auto flavor : {CochainFlavor::kPolynomial, CochainFlavor::kBipolynomial, CochainFlavor::kSymmetricBilinear})
                for (unsigned degree : {1u, 2u}) {
                    if (flavor == CochainFlavor::kBipolynomial && n == 3 && degree == 2) continue;
                    const auto c0 = make_cochain_space(setup, lo, flavor, degree);
                    const auto c1 = make_cochain_space(setup, lo + 1, flavor, degree);
                    const auto c2 = make_cochain_space(setup, lo + 2, flavor, degree);
                    ++total;
                    if (is_zero_matrix(f, multiply(f, build_coboundary(setup, c0, c1), build_coboundary(setup, c1, c2)))) ++good;
                }
        }
        out.add("coboundary squares to zero", good == total, ratio(good, total) + " flavor x degree x n");
    }
    {
        std::size_t pairs = 0, single = 0, same_parity = 0, same_parity_single = 0;
        std::string first_bad;
        for (int n = 2; n <= 6; ++n) {
            const auto b = build_index_sets(n);
            for (int q = 1; q <= 2 * n + 1; ++q)
                for (int r = q + 1; r <= 2 * n + 1; ++r) {
                    std::vector<int> common;
                    std::set_intersection(b.of(q).begin(), b.of(q).end(), b.of(r).begin(), b.of(r).end(),
                                          std::back_inserter(common));
                    ++pairs;
                    if (common.size() == 1) ++single;
                    else if (first_bad.empty())
                        first_bad = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                    " share " + std::to_string(common.size());
                    if ((r - q) % 2 == 0) {
                        ++same_parity;
                        if (common.size() == 1) ++same_parity_single;
                    }
                }
        }
        out.add("index sets meet in exactly one position, all q != r, n <= 6", single == pairs,
                ratio(single, pairs) + " pairs" + (first_bad.empty() ? "" : ", first: " + first_bad) +
                    "; equal parity " + ratio(same_parity_single, same_parity));
    }
    {
        const auto params = primal_at(generic(2), 3, 17);
        const Field& f = params.field();
        const auto c = bilinear_2n2_cocycle(params);
        const auto space = permitted_coloring_space(params, p_simplex(3));
        std::mt19937_64 rng(3);
        std::size_t good = 0, total = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_permitted(params, space, rng), y = random_permitted(params, space, rng);
            for (int q = 1; q <= 7; ++q) {
                const auto d = local_data(c, remove_vertex(range_simplex(7), q));
                const auto xs = on_faces(x, d.faces), ys = on_faces(y, d.faces);
                Fe linear = f.zero(), squares = f.zero();
                for (std::size_t v = 0; v < d.faces.size(); ++v) {
                    const Fe t = f.mul(d.c[v], f.mul(xs[v], ys[v]));
                    linear = f.add(linear, t);
                    squares = f.add(squares, f.mul(t, t));
                }
                ++total;
                if (f.is_zero(linear) && f.is_zero(squares)) ++good;
            }
        }
        out.add("Frobenius identity in characteristic 2", good == total, ratio(good, total));
    }
    {
        std::size_t good = 0, total = 0;
        for (int n = 2; n <= 4; ++n)
            for (std::uint64_t seed : {1u, 2u}) {
                const auto p = primal_at(generic(2), n, seed);
                for (int kappa = 1; kappa <= 2 * n; ++kappa) {
                    const auto check = full_polygon_relation(p, kappa);
                    const int k = kappa >= n + 1 ? kappa - n - 1 : n - kappa;
                    ++total;
                    if (check.holds && check.superfluous_identity &&
                        check.superfluous.size() == static_cast<std::size_t>(k * (k + 1) / 2))
                        ++good;
                }
            }
        out.add("superfluous positions number k(k+1)/2 and map identically", good == total, ratio(good, total));
    }
    return out;
}

std::vector<Criterion> criteria() {
    return {
        {1, "relation identities", 30, false, relation_identities},
        {2, "g-coloring dimensions", 10, false, dimension_formulas},
        {3, "quadratic sequences in characteristic zero", 600, false, quadratic_sequences},
        {4, "middle cohomology rows", 600, false, middle_cohomology_rows},
        {5, "cocycle suites", 60, false, cocycle_suites},
        {6, "3-manifold invariants", 600, false, three_manifolds},
        {7, "5-manifold invariants", 7200, true, five_manifolds},
        {8, "Pachner invariance", 300, false, pachner_invariance},
        {9, "structural properties", 30, false, structural_properties},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygonkit acceptance suite"};
    std::vector<int> selected;
    bool heavy = false, verbose = false;
    app.add_option("--criteria", selected, "criteria to run (default: all but heavy)")->delimiter(',')->check(CLI::Range(1, 9));
    app.add_flag("--heavy", heavy, "include heavy criteria");
    app.add_flag("-v,--verbose", verbose, "print every sub-check");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& c : criteria()) {
        const bool chosen = selected.empty() ? (!c.heavy || heavy)
                                             : std::find(selected.begin(), selected.end(), c.id) != selected.end();
        if (!chosen) {
            std::printf("criterion %d: SKIP %s (%s)\n", c.id, c.title.c_str(),
                        selected.empty() ? "heavy; pass --heavy" : "not selected");
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        std::string error;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = wall <= c.cap_seconds;
        const bool pass = error.empty() && outcome.pass() && in_time;
        all = all && pass;
        std::printf("criterion %d: %s %s (%zu/%zu sub-checks, %.2fs of %.0fs)%s%s\n", c.id, pass ? "PASS" : "FAIL",
                    c.title.c_str(), outcome.checks.size() - outcome.failed(), outcome.checks.size(), wall,
                    c.cap_seconds, in_time ? "" : " over time", error.empty() ? "" : (" error: " + error).c_str());
        for (const auto& s : outcome.checks)
            if (verbose || !s.pass)
                std::printf("    %s %s%s%s\n", s.pass ? "ok  " : "FAIL", s.name.c_str(), s.detail.empty() ? "" : ": ",
                            s.detail.c_str());
        for (const auto& note : outcome.notes) std::printf("    note %s\n", note.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
