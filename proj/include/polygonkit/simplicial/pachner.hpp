#pragma once

#include "polygonkit/simplicial/triangulation.hpp"

#include <optional>
#include <random>
#include <vector>

namespace polygonkit {

/// A Pachner move kappa -> nu+2-kappa in dimension nu, inside the boundary of a
/// (nu+1)-simplex on `sphere_vertices`.
struct PachnerMove {
    int dimension = 0;
    int kappa = 0;
    Simplex sphere_vertices;
    std::vector<Simplex> initial_cluster;
    std::vector<Simplex> final_cluster;
};

/// Codimension-one faces of a cluster that lie in exactly one of its simplices.
std::vector<Simplex> cluster_boundary(const std::vector<Simplex>& cluster);

/// Move in dimension 2n-1 on the P-simplex vertices 1..2n+1 under `relabeling`
/// (relabeling[i-1] is the image of vertex i; empty means identity).
///
/// The d-simplex "q" (all vertices but q) is in the initial cluster for every
/// odd q and for the even q = 2, 4, ..., 2(kappa-n-1) when kappa > n+1; for
/// kappa <= n the initial cluster is {q even : q >= 2(n-kappa+1)}.
/// Throws std::invalid_argument unless 1 <= kappa <= 2n.
PachnerMove enumerate_pachner_move(int n, int kappa, const std::vector<int>& relabeling = {});

/// Location of a move in a triangulation: sphere vertex set S and the set
/// Omega of vertices omitted by the initial facets (initial facets are S \ w for w in Omega).
struct MoveSite {
    Simplex sphere;
    Simplex omitted;
    int kappa() const { return static_cast<int>(omitted.size()); }
    std::vector<Simplex> initial_facets() const;
    std::vector<Simplex> final_facets() const;
    /// The site of the inverse move on the rebuilt triangulation.
    MoveSite inverse() const;
};

/// All valid sites for moves with the given kappa (kappa = 1 sites use the fresh label max_label+1).
std::vector<MoveSite> find_move_sites(const Triangulation& t, int kappa);

/// Checks the preconditions; returns an explanation when the site is invalid.
std::optional<std::string> validate_move_site(const Triangulation& t, const MoveSite& site);

/// Replaces the initial facets by the final ones; orientations are carried over
/// consistently when t is oriented. Throws std::invalid_argument for invalid sites.
Triangulation apply_pachner_move(const Triangulation& t, const MoveSite& site);

/// Picks a uniformly random kappa among those with available sites, then a random site.
/// `max_kappa` bounds kappa (e.g. to avoid vertex-deleting moves).
std::optional<MoveSite> random_move_site(const Triangulation& t, std::mt19937_64& rng, int max_kappa = -1);

}  // namespace polygonkit
