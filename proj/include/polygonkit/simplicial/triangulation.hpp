#pragma once

#include "polygonkit/simplicial/simplex.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polygonkit {

/// Pure simplicial complex given by its facets, optionally oriented.
class Triangulation {
public:
    Triangulation() = default;
    /// Facets are sorted into increasing label order. Throws std::invalid_argument
    /// if a facet has the wrong vertex count, facets repeat, or orientation sizes mismatch.
    Triangulation(int dimension, std::vector<Simplex> facets, std::optional<std::vector<int>> orientation = {});

    int dimension() const { return dimension_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool oriented() const { return orientation_.has_value(); }
    const std::vector<int>& orientation() const;
    int orientation_of(std::size_t facet_index) const;
    std::optional<std::size_t> facet_index(const Simplex& s) const;

    std::vector<int> vertices() const;
    int vertex_count() const { return static_cast<int>(vertices().size()); }
    int max_label() const;

    /// All faces with k vertices, sorted.
    std::vector<Simplex> faces_of_size(int k) const;
    /// Facets containing the simplex s.
    std::vector<std::size_t> star(const Simplex& s) const;
    bool has_face(const Simplex& s) const;

    /// Every ridge lies in exactly two facets.
    bool is_closed_pseudomanifold() const;
    /// Induced orientations on every ridge cancel (requires an orientation).
    bool orientation_consistent() const;
    /// Some consistent orientation, if the complex is orientable (BFS over ridges).
    std::optional<std::vector<int>> find_orientation() const;
    Triangulation with_orientation(std::vector<int> orientation) const;
    Triangulation without_orientation() const;

    long euler_characteristic() const;
    /// Link of every vertex is connected, and the complex is connected.
    bool is_connected() const;

    /// Relabels vertices to 1..V preserving order.
    Triangulation compacted() const;
    /// Same facet set (and orientations, if both oriented).
    friend bool operator==(const Triangulation& a, const Triangulation& b);

private:
    int dimension_ = 0;
    std::vector<Simplex> facets_;
    std::optional<std::vector<int>> orientation_;
    std::map<Simplex, std::size_t> index_;
};

/// Parses the .tri text format. Throws std::runtime_error with a line number on malformed input.
Triangulation parse_tri(std::istream& in);
Triangulation read_tri(const std::string& path);
void write_tri(std::ostream& out, const Triangulation& t, const std::string& comment = "");

/// Boundary of the (d+1)-simplex on vertices 1..d+2, oriented.
Triangulation boundary_sphere(int d);
/// A single vertex.
Triangulation point();
/// Staircase triangulation of |a| x |b|. Vertex (u, v) gets label (u-1) * max_label(b) + v.
Triangulation product_triangulation(const Triangulation& a, const Triangulation& b);

/// Betti numbers over a prime field F_p (p = 0 uses a large prime), b_0..b_dim.
std::vector<int> betti_numbers(const Triangulation& t, unsigned long long p);

}  // namespace polygonkit
