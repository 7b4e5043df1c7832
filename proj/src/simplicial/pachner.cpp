#include "polygonkit/simplicial/pachner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polygonkit {

std::vector<Simplex> cluster_boundary(const std::vector<Simplex>& cluster) {
    std::map<Simplex, int> count;
    for (const auto& s : cluster)
        for (int v : s) ++count[remove_vertex(s, v)];
    std::vector<Simplex> out;
    for (const auto& [face, c] : count)
        if (c == 1) out.push_back(face);
    return out;
}

PachnerMove enumerate_pachner_move(int n, int kappa, const std::vector<int>& relabeling) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (kappa < 1 || kappa > 2 * n) throw std::invalid_argument("kappa must lie in 1..2n");
    const int m = 2 * n + 1;
    std::vector<int> image(m + 1);
    if (relabeling.empty()) {
        for (int i = 1; i <= m; ++i) image[i] = i;
    } else {
        if (static_cast<int>(relabeling.size()) != m) throw std::invalid_argument("relabeling must have 2n+1 entries");
        for (int i = 1; i <= m; ++i) image[i] = relabeling[i - 1];
        make_simplex(relabeling);
    }
    auto initial_q = [&](int q) {
        if (kappa >= n + 1) return q % 2 == 1 || q <= 2 * (kappa - n - 1);
        return q % 2 == 0 && q >= 2 * (n - kappa + 1);
    };
    PachnerMove move;
    move.dimension = 2 * n - 1;
    move.kappa = kappa;
    std::vector<int> sphere;
    for (int i = 1; i <= m; ++i) sphere.push_back(image[i]);
    move.sphere_vertices = make_simplex(sphere);
    for (int q = 1; q <= m; ++q) {
        std::vector<int> s;
        for (int i = 1; i <= m; ++i)
            if (i != q) s.push_back(image[i]);
        (initial_q(q) ? move.initial_cluster : move.final_cluster).push_back(make_simplex(s));
    }
    return move;
}

std::vector<Simplex> MoveSite::initial_facets() const {
    std::vector<Simplex> out;
    for (int w : omitted) out.push_back(remove_vertex(sphere, w));
    return out;
}

std::vector<Simplex> MoveSite::final_facets() const {
    std::vector<Simplex> out;
    for (int s : sphere)
        if (!contains_vertex(omitted, s)) out.push_back(remove_vertex(sphere, s));
    return out;
}

MoveSite MoveSite::inverse() const { return MoveSite{sphere, complement_in(sphere, omitted)}; }

std::optional<std::string> validate_move_site(const Triangulation& t, const MoveSite& site) {
    const int d = t.dimension();
    if (static_cast<int>(site.sphere.size()) != d + 2) return "sphere must have dimension+2 vertices";
    if (site.omitted.empty() || static_cast<int>(site.omitted.size()) > d + 1) return "kappa out of range";
    if (!contains(site.sphere, site.omitted)) return "omitted vertices outside the sphere";
    const auto initial = site.initial_facets();
    for (const auto& f : initial)
        if (!t.facet_index(f)) return "cluster not found: facet " + str(f) + " missing";
    const Simplex tau = complement_in(site.sphere, site.omitted);
    const auto star = t.star(tau);
    if (star.size() != initial.size()) return "interior face " + str(tau) + " is shared with the rest of the triangulation";
    if (t.has_face(site.omitted)) return "simplex " + str(site.omitted) + " already exists";
    return std::nullopt;
}

Triangulation apply_pachner_move(const Triangulation& t, const MoveSite& site) {
    if (auto err = validate_move_site(t, site)) throw std::invalid_argument(*err);
    const auto initial = site.initial_facets();
    std::set<Simplex> removed(initial.begin(), initial.end());
    int c = 0;
    if (t.oriented()) {
        for (int w : site.omitted) {
            const Simplex f = remove_vertex(site.sphere, w);
            const int o = t.orientation_of(*t.facet_index(f)) * (position_of(site.sphere, w) % 2 ? -1 : 1);
            if (c == 0) c = o;
            if (c != o) throw std::invalid_argument("initial cluster is not coherently oriented");
        }
    }
    std::vector<Simplex> facets;
    std::vector<int> orientation;
    for (std::size_t i = 0; i < t.facets().size(); ++i) {
        if (removed.count(t.facets()[i])) continue;
        facets.push_back(t.facets()[i]);
        orientation.push_back(t.orientation_of(i));
    }
    for (int s : site.sphere) {
        if (contains_vertex(site.omitted, s)) continue;
        facets.push_back(remove_vertex(site.sphere, s));
        orientation.push_back(-c * (position_of(site.sphere, s) % 2 ? -1 : 1));
    }
    if (t.oriented()) return Triangulation(t.dimension(), std::move(facets), std::move(orientation));
    return Triangulation(t.dimension(), std::move(facets));
}

std::vector<MoveSite> find_move_sites(const Triangulation& t, int kappa) {
    const int d = t.dimension();
    std::vector<MoveSite> sites;
    if (kappa < 1 || kappa > d + 1) return sites;
    if (kappa == 1) {
        const int fresh = t.max_label() + 1;
        for (const auto& f : t.facets()) sites.push_back(MoveSite{unite(f, Simplex{fresh}), Simplex{fresh}});
        return sites;
    }
    std::map<Simplex, std::vector<std::size_t>> stars;
    for (std::size_t i = 0; i < t.facets().size(); ++i)
        for (auto& tau : subsets_of_size(t.facets()[i], d + 2 - kappa)) stars[tau].push_back(i);
    for (const auto& [tau, star] : stars) {
        if (static_cast<int>(star.size()) != kappa) continue;
        Simplex omega;
        for (std::size_t i : star) omega = unite(omega, remove_vertices(t.facets()[i], tau));
        if (static_cast<int>(omega.size()) != kappa) continue;
        MoveSite site{unite(tau, omega), omega};
        if (!validate_move_site(t, site)) sites.push_back(std::move(site));
    }
    return sites;
}

std::optional<MoveSite> random_move_site(const Triangulation& t, std::mt19937_64& rng, int max_kappa) {
    const int top = max_kappa < 0 ? t.dimension() + 1 : std::min(max_kappa, t.dimension() + 1);
    std::vector<std::vector<MoveSite>> by_kappa;
    for (int k = 1; k <= top; ++k) {
        auto s = find_move_sites(t, k);
        if (!s.empty()) by_kappa.push_back(std::move(s));
    }
    if (by_kappa.empty()) return std::nullopt;
    const auto& pick = by_kappa[rng() % by_kappa.size()];
    return pick[rng() % pick.size()];
}

}  // namespace polygonkit
