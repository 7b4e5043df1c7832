#include "polygonkit/gcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygonkit {

Fe Coloring::at(const Simplex& face) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), face);
    if (it == faces.end() || *it != face) throw std::out_of_range("face " + str(face) + " not colored");
    return values[it - faces.begin()];
}

std::string to_string(ColoringKind kind) {
    switch (kind) {
        case ColoringKind::kGColorings:
            return "g-colorings";
        case ColoringKind::kPermitted:
            return "permitted";
        case ColoringKind::kPerSimplex:
            return "per-simplex";
    }
    return "?";
}

std::size_t ColoringSpace::face_index(const Simplex& face) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), face);
    if (it == faces.end() || *it != face) throw std::out_of_range("face " + str(face) + " not in space");
    return static_cast<std::size_t>(it - faces.begin());
}

bool ColoringSpace::contains(const Field& field, const std::vector<Fe>& values) const {
    auto m = basis;
    m.append_row(values);
    return matrix_rank(field, m) == dim();
}

std::vector<Simplex> colored_faces(const Triangulation& t, int n) { return t.faces_of_size(2 * n - 1); }
std::vector<Simplex> d_simplices(const Triangulation& t, int n) { return t.faces_of_size(2 * n); }
std::vector<Simplex> g_simplices(const Triangulation& t, int n) { return t.faces_of_size(n - 1); }

Triangulation p_simplex(int n) { return Triangulation(2 * n, {range_simplex(2 * n + 1)}); }

Triangulation d_simplex(int n, int q) { return Triangulation(2 * n - 1, {remove_vertex(range_simplex(2 * n + 1), q)}); }

Coloring g_vector(const GVectorSource& src, const Simplex& b, const std::vector<Simplex>& faces) {
    if (static_cast<int>(b.size()) != src.n() - 1)
        throw std::invalid_argument("g-simplex " + str(b) + " must have n-1 vertices");
    Coloring c{faces, std::vector<Fe>(faces.size(), src.field().zero())};
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (polygonkit::contains(faces[i], b)) c.values[i] = src.g_component(b, faces[i]);
    return c;
}

ColoringSpace g_coloring_space(const GVectorSource& src, const Triangulation& t) {
    const Field& f = src.field();
    const int n = src.n();
    ColoringSpace space;
    space.kind = ColoringKind::kGColorings;
    space.faces = colored_faces(t, n);
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < space.faces.size(); ++i) index.emplace(space.faces[i], i);
    const auto gs = g_simplices(t, n);
    auto m = zeros(f, gs.size(), space.faces.size());
    // Faces containing b are b plus n vertices from the star of b; walk the faces once instead.
    std::map<Simplex, std::size_t> g_index;
    for (std::size_t i = 0; i < gs.size(); ++i) g_index.emplace(gs[i], i);
    for (std::size_t j = 0; j < space.faces.size(); ++j)
        for (auto& b : subsets_of_size(space.faces[j], n - 1)) m(g_index.at(b), j) = src.g_component(b, space.faces[j]);
    space.basis = row_space(f, std::move(m));
    return space;
}

MatrixOf<Field> local_g_basis(const GVectorSource& src, const Simplex& w) {
    const Field& f = src.field();
    const int n = src.n();
    if (static_cast<int>(w.size()) != 2 * n) throw std::invalid_argument("d-simplex " + str(w) + " must have 2n vertices");
    const auto faces = subsets_of_size(w, 2 * n - 1);
    const auto gs = subsets_of_size(w, n - 1);
    auto m = zeros(f, gs.size(), faces.size());
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (polygonkit::contains(faces[j], gs[i])) m(i, j) = src.g_component(gs[i], faces[j]);
    auto basis = row_space(f, std::move(m));
    if (static_cast<int>(basis.rows()) != n)
        throw DegeneratePoint("g-colorings of " + str(w) + " have dimension " + std::to_string(basis.rows()));
    return basis;
}

MatrixOf<Field> local_constraints(const GVectorSource& src, const Simplex& w) {
    return solve_nullspace(src.field(), local_g_basis(src, w));
}

ColoringSpace permitted_coloring_space(const GVectorSource& src, const Triangulation& t) {
    const Field& f = src.field();
    const int n = src.n();
    ColoringSpace space;
    space.kind = ColoringKind::kPermitted;
    space.faces = colored_faces(t, n);
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < space.faces.size(); ++i) index.emplace(space.faces[i], i);
    const auto ws = d_simplices(t, n);
    auto stacked = zeros(f, ws.size() * n, space.faces.size());
    std::size_t row = 0;
    for (const auto& w : ws) {
        const auto local_faces = subsets_of_size(w, 2 * n - 1);
        const auto c = local_constraints(src, w);
        for (std::size_t r = 0; r < c.rows(); ++r, ++row)
            for (std::size_t j = 0; j < local_faces.size(); ++j) stacked(row, index.at(local_faces[j])) = c(r, j);
    }
    space.basis = solve_nullspace(f, std::move(stacked));
    return space;
}

MatrixOf<Field> restrict_rows(const Field& field, const MatrixOf<Field>& rows, const std::vector<Simplex>& from,
                              const std::vector<Simplex>& to) {
    auto out = zeros(field, rows.rows(), to.size());
    for (std::size_t j = 0; j < to.size(); ++j) {
        auto it = std::lower_bound(from.begin(), from.end(), to[j]);
        if (it == from.end() || *it != to[j]) throw std::out_of_range("face " + str(to[j]) + " not in source");
        const std::size_t src = static_cast<std::size_t>(it - from.begin());
        for (std::size_t i = 0; i < rows.rows(); ++i) out(i, j) = rows(i, src);
    }
    return out;
}

}  // namespace polygonkit
