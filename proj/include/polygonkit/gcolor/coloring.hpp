#pragma once

#include "polygonkit/gcolor/parameters.hpp"
#include "polygonkit/simplicial/triangulation.hpp"

#include <map>
#include <string>
#include <vector>

namespace polygonkit {

/// Colors on an ordered list of (2n-2)-faces.
struct Coloring {
    std::vector<Simplex> faces;
    std::vector<Fe> values;

    /// Color of a face; throws std::out_of_range if the face is not in the domain.
    Fe at(const Simplex& face) const;
};

enum class ColoringKind { kGColorings, kPermitted, kPerSimplex };
std::string to_string(ColoringKind kind);

/// A linear space of colorings given by independent basis rows over `faces`.
struct ColoringSpace {
    ColoringKind kind = ColoringKind::kGColorings;
    std::vector<Simplex> faces;
    MatrixOf<Field> basis;

    std::size_t dim() const { return basis.rows(); }
    std::size_t face_index(const Simplex& face) const;
    /// Membership of a coloring (values in `faces` order) in the span.
    bool contains(const Field& field, const std::vector<Fe>& values) const;
};

/// Faces with 2n-1 vertices (the colored faces), lexicographic.
std::vector<Simplex> colored_faces(const Triangulation& t, int n);
/// Faces with 2n vertices (d-simplices), lexicographic.
std::vector<Simplex> d_simplices(const Triangulation& t, int n);
/// Faces with n-1 vertices (g-simplices), lexicographic.
std::vector<Simplex> g_simplices(const Triangulation& t, int n);

/// The P-simplex on vertices 1..2n+1 as a one-facet complex.
Triangulation p_simplex(int n);
/// The d-simplex "q": all vertices 1..2n+1 except q, as a one-facet complex.
Triangulation d_simplex(int n, int q);

/// The g-simplex vector e_b over the given faces. Throws std::invalid_argument if b has the wrong size.
Coloring g_vector(const GVectorSource& src, const Simplex& b, const std::vector<Simplex>& faces);

/// Span of all g-vectors of g-simplices of t.
ColoringSpace g_coloring_space(const GVectorSource& src, const Triangulation& t);

/// Basis (n rows) of the g-colorings of one d-simplex w over its faces in lexicographic order.
/// Throws DegeneratePoint if the rank is not n.
MatrixOf<Field> local_g_basis(const GVectorSource& src, const Simplex& w);

/// n independent linear constraints (rows) on the 2n face colors of w cutting out its g-colorings.
MatrixOf<Field> local_constraints(const GVectorSource& src, const Simplex& w);

/// Colorings whose restriction to each d-simplex is a g-coloring there.
ColoringSpace permitted_coloring_space(const GVectorSource& src, const Triangulation& t);

/// Restriction of the rows of `rows` (over `from`) to the faces `to` (a subset of `from`).
MatrixOf<Field> restrict_rows(const Field& field, const MatrixOf<Field>& rows, const std::vector<Simplex>& from,
                              const std::vector<Simplex>& to);

}  // namespace polygonkit
