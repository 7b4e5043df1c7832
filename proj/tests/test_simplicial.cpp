#include "doctest.h"

#include "polygonkit/simplicial/index_sets.hpp"
#include "polygonkit/simplicial/pachner.hpp"
#include "polygonkit/simplicial/triangulation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace polygonkit;

namespace {

long binom(int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

// Euler characteristic from a full face enumeration of all subsets of every facet.
long brute_euler(const Triangulation& t) {
    std::set<Simplex> faces;
    for (const auto& f : t.facets()) {
        const int m = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Simplex s;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            faces.insert(s);
        }
    }
    long chi = 0;
    for (const auto& s : faces) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// Every vertex link of a closed surface is a single cycle.
bool surface_links_are_circles(const Triangulation& t) {
    for (int v : t.vertices()) {
        std::map<int, int> degree;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i : t.star(Simplex{v})) {
            const auto e = remove_vertex(t.facets()[i], v);
            edges.emplace_back(e[0], e[1]);
            ++degree[e[0]];
            ++degree[e[1]];
        }
        for (auto [u, d] : degree)
            if (d != 2) return false;
        // Walk the cycle.
        std::set<int> seen{edges[0].first};
        int cur = edges[0].second, prev = edges[0].first;
        while (!seen.count(cur)) {
            seen.insert(cur);
            for (auto [a, b] : edges) {
                if (a == cur && b != prev) {
                    prev = cur;
                    cur = b;
                    break;
                }
                if (b == cur && a != prev) {
                    prev = cur;
                    cur = a;
                    break;
                }
            }
        }
        if (seen.size() != degree.size()) return false;
    }
    return true;
}

Triangulation random_pure_complex(std::mt19937_64& rng, int dim) {
    const int verts = dim + 1 + static_cast<int>(rng() % 4);
    std::set<Simplex> facets;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int c = 0; c < count; ++c) {
        std::vector<int> pool(verts);
        for (int i = 0; i < verts; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(dim + 1);
        facets.insert(make_simplex(pool));
    }
    return Triangulation(dim, {facets.begin(), facets.end()});
}

}  // namespace

TEST_CASE("simplex helpers") {
    CHECK(make_simplex({3, 1, 2}) == Simplex{1, 2, 3});
    CHECK_THROWS_AS(make_simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_simplex({0, 1}), std::invalid_argument);
    CHECK(incidence({1, 2, 3}, {2, 3}) == 1);
    CHECK(incidence({1, 2, 3}, {1, 3}) == -1);
    CHECK(incidence({1, 2, 3}, {1, 2}) == 1);
    CHECK(permutation_sign({2, 1, 3}) == -1);
    CHECK(permutation_sign({3, 1, 2}) == 1);
    CHECK(subsets_of_size({1, 2, 3, 4}, 2).size() == 6);
    const ComplementalFace f(range_simplex(7), {7, 3});
    CHECK(f.simplex() == Simplex{1, 2, 4, 5, 6});
    CHECK_FALSE(f.is_d_simplex());
    CHECK_THROWS_AS(ComplementalFace(range_simplex(5), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("index sets for the heptagon") {
    const auto b = build_index_sets(3);
    CHECK(b.of(1) == std::vector<int>{1, 2, 3});
    CHECK(b.of(3) == std::vector<int>{1, 4, 5});
    CHECK(b.of(5) == std::vector<int>{2, 4, 6});
    CHECK(b.of(7) == std::vector<int>{3, 5, 6});
    CHECK(b.of(2) == std::vector<int>{1, 2, 3});
    CHECK(b.of(4) == std::vector<int>{2, 4, 5});
    CHECK(b.of(6) == std::vector<int>{3, 5, 6});
    const auto p = build_index_sets(2);
    CHECK(p.size() == 3);
    for (int q = 1; q <= 5; ++q) CHECK(p.of(q).size() == 2);
    CHECK_THROWS_AS(build_index_sets(1), std::invalid_argument);
    // Adjacent labels of opposite parity can share several positions.
    CHECK(b.of(1) == b.of(2));
}

TEST_CASE("index sets of equal parity meet once and every position is covered three or four times") {
    for (int n = 2; n <= 6; ++n) {
        const auto b = build_index_sets(n);
        for (int q = 1; q <= 2 * n + 1; ++q) {
            CHECK(static_cast<int>(b.of(q).size()) == n);
            for (int r = q + 1; r <= 2 * n + 1; ++r) {
                std::vector<int> common;
                std::set_intersection(b.of(q).begin(), b.of(q).end(), b.of(r).begin(), b.of(r).end(),
                                      std::back_inserter(common));
                if ((q - r) % 2 == 0) CHECK(common.size() == 1);
                else CHECK(common.size() >= 1);
            }
        }
        std::vector<int> cover(b.size() + 1, 0);
        for (int q = 1; q <= 2 * n + 1; ++q)
            for (int pos : b.of(q)) ++cover[pos];
        for (int pos = 1; pos <= b.size(); ++pos) CHECK((cover[pos] == 3 || cover[pos] == 4));
    }
}

TEST_CASE("boundary spheres") {
    const auto s2 = boundary_sphere(2);
    CHECK(s2.facets().size() == 4);
    const auto s5 = boundary_sphere(5);
    CHECK(s5.facets().size() == 7);
    CHECK(s5.vertex_count() == 7);
    for (int d = 1; d <= 6; ++d) {
        const auto s = boundary_sphere(d);
        CHECK(s.euler_characteristic() == 1 + (d % 2 == 0 ? 1 : -1));
        CHECK(s.is_closed_pseudomanifold());
        CHECK(s.orientation_consistent());
    }
}

TEST_CASE("products of circles and spheres") {
    const auto s1 = boundary_sphere(1);
    const auto torus = product_triangulation(s1, s1);
    CHECK(torus.facets().size() == 18);
    CHECK(brute_euler(torus) == 0);
    CHECK(torus.is_closed_pseudomanifold());
    CHECK(surface_links_are_circles(torus));
    CHECK(torus.orientation_consistent());

    const auto s1s2 = product_triangulation(s1, boundary_sphere(2));
    CHECK(s1s2.facets().size() == 36);
    CHECK(brute_euler(s1s2) == 0);
    CHECK(s1s2.is_closed_pseudomanifold());
    CHECK(s1s2.orientation_consistent());
    CHECK(betti_numbers(s1s2, 2) == std::vector<int>{1, 1, 1, 1});

    const auto b = boundary_sphere(3);
    CHECK(product_triangulation(point(), b) == b);
}

TEST_CASE("product facet counts follow the binomial formula") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const int da = static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
        const auto a = random_pure_complex(rng, da);
        const auto b = random_pure_complex(rng, db);
        const auto p = product_triangulation(a, b);
        CHECK(static_cast<long>(p.facets().size()) ==
              static_cast<long>(a.facets().size() * b.facets().size()) * binom(da + db, da));
        CHECK(p.dimension() == da + db);
    }
}

TEST_CASE("tri round trip and parse errors") {
    const auto t = product_triangulation(boundary_sphere(1), boundary_sphere(2));
    std::stringstream ss;
    write_tri(ss, t, "S1 x S2");
    const auto back = parse_tri(ss);
    CHECK(back == t);
    CHECK(back.oriented());

    std::istringstream bad1("dim=2\n1 2\n");
    CHECK_THROWS_AS(parse_tri(bad1), std::runtime_error);
    std::istringstream bad2("1 2 3\n");
    CHECK_THROWS_AS(parse_tri(bad2), std::runtime_error);
    std::istringstream bad3("dim=1\n2 1\n");
    CHECK_THROWS_AS(parse_tri(bad3), std::runtime_error);
    std::istringstream good("# comment\ndim=1\n1 2 # edge\n2 3\n1 3\n");
    CHECK(parse_tri(good).facets().size() == 3);
}

TEST_CASE("orientation search") {
    const auto t = product_triangulation(boundary_sphere(1), boundary_sphere(1)).without_orientation();
    const auto o = t.find_orientation();
    REQUIRE(o.has_value());
    CHECK(t.with_orientation(*o).orientation_consistent());
}

TEST_CASE("enumerated Pachner moves") {
    const auto hepta = enumerate_pachner_move(3, 4);
    CHECK(hepta.initial_cluster.size() == 4);
    CHECK(hepta.final_cluster.size() == 3);
    CHECK(hepta.initial_cluster[0] == Simplex{2, 3, 4, 5, 6, 7});
    CHECK(hepta.final_cluster[0] == Simplex{1, 3, 4, 5, 6, 7});

    const auto one = enumerate_pachner_move(2, 1);
    CHECK(one.initial_cluster.size() == 1);
    CHECK(one.final_cluster.size() == 4);
    CHECK(one.initial_cluster[0] == Simplex{1, 2, 3, 5});

    CHECK_THROWS_AS(enumerate_pachner_move(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pachner_move(3, 7), std::invalid_argument);

    std::mt19937_64 rng(4);
    for (int n = 2; n <= 4; ++n)
        for (int kappa = 1; kappa <= 2 * n; ++kappa) {
            std::vector<int> perm(2 * n + 1);
            for (int i = 0; i <= 2 * n; ++i) perm[i] = i + 1;
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto m = enumerate_pachner_move(n, kappa, perm);
            CHECK(static_cast<int>(m.initial_cluster.size()) == kappa);
            CHECK(static_cast<int>(m.final_cluster.size()) == 2 * n + 1 - kappa);
            CHECK(cluster_boundary(m.initial_cluster) == cluster_boundary(m.final_cluster));
            std::set<Simplex> all(m.initial_cluster.begin(), m.initial_cluster.end());
            all.insert(m.final_cluster.begin(), m.final_cluster.end());
            CHECK(all.size() == static_cast<std::size_t>(2 * n + 1));
        }
}

TEST_CASE("applying Pachner moves") {
    const auto s3 = boundary_sphere(3);
    const auto sites = find_move_sites(s3, 1);
    REQUIRE(sites.size() == 5);
    const auto moved = apply_pachner_move(s3, sites[0]);
    CHECK(moved.facets().size() == 8);
    CHECK(moved.orientation_consistent());
    const auto back = apply_pachner_move(moved, sites[0].inverse());
    CHECK(back == s3);

    // Boundary of the changed region is unchanged.
    CHECK(cluster_boundary(sites[0].initial_facets()) == cluster_boundary(sites[0].final_facets()));

    CHECK_THROWS_AS(apply_pachner_move(s3, MoveSite{{1, 2, 3, 4, 5}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("random move sequences preserve manifold data") {
    std::mt19937_64 rng(8);
    for (const auto& start : {boundary_sphere(3), product_triangulation(boundary_sphere(1), boundary_sphere(2)),
                              product_triangulation(boundary_sphere(1), boundary_sphere(1))}) {
        auto t = start;
        const long chi = t.euler_characteristic();
        const auto betti = betti_numbers(t, 2);
        for (int step = 0; step < 12; ++step) {
            const auto site = random_move_site(t, rng);
            REQUIRE(site.has_value());
            const auto next = apply_pachner_move(t, *site);
            CHECK(next.is_closed_pseudomanifold());
            CHECK(next.orientation_consistent());
            CHECK(next.euler_characteristic() == chi);
            const auto undone = apply_pachner_move(next, site->inverse());
            CHECK(undone == t);
            t = next;
        }
        CHECK(betti_numbers(t, 2) == betti);
    }
}
