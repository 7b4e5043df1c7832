#pragma once

#include "polygonkit/gcolor/coloring.hpp"
#include "polygonkit/simplicial/triangulation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polygonkit {

enum class CochainFlavor { kPolynomial, kBipolynomial, kSymmetricBilinear };
std::string to_string(CochainFlavor flavor);

/// Permitted-coloring bases of the simplices of a complex (every face of its facets with at least
/// 2n-1 vertices) and the restriction maps between them.
class PermittedSpaces {
public:
    /// Throws DegeneratePoint if a d-simplex has fewer than n independent g-colorings.
    PermittedSpaces(const GVectorSource& src, const Triangulation& complex);

    int n() const { return n_; }
    const Field& field() const { return field_; }

    /// Simplices with `size` vertices, lexicographic.
    const std::vector<Simplex>& simplices(std::size_t size) const;
    /// Basis rows (RREF) over the (2n-2)-faces of s in lexicographic order.
    const MatrixOf<Field>& basis(const Simplex& s) const;
    std::size_t dim(const Simplex& s) const { return basis(s).rows(); }
    /// R with basis(s) restricted to t equal to R * basis(t) (dim s x dim t).
    const MatrixOf<Field>& restriction(const Simplex& s, const Simplex& t) const;

    /// Coordinates of a coloring of s (values over its faces) in basis(s); throws std::domain_error
    /// if the coloring is not permitted.
    std::vector<Fe> coordinates(const Simplex& s, const std::vector<Fe>& values) const;

private:
    Field field_;
    int n_;
    std::map<std::size_t, std::vector<Simplex>> simplices_;
    std::map<Simplex, MatrixOf<Field>> basis_;
    std::map<Simplex, std::vector<std::size_t>> pivots_;
    mutable std::map<std::pair<Simplex, Simplex>, MatrixOf<Field>> restriction_;
};

/// Cochains on the simplices with m+1 vertices: per simplex a polynomial of the given degree in its
/// permitted-coloring coordinates (bidegree (degree, degree) for bipolynomials; degree is ignored
/// for symmetric bilinear forms).
struct CochainSpace {
    std::size_t m = 0;
    CochainFlavor flavor = CochainFlavor::kPolynomial;
    unsigned degree = 2;
    std::vector<Simplex> simplices;
    std::vector<std::size_t> offsets;  // offsets[i]..offsets[i+1] index simplex i's block
    std::size_t size() const { return offsets.empty() ? 0 : offsets.back(); }
    std::size_t block_of(const Simplex& s) const;
};

/// Size of one simplex's block for a permitted space of dimension `dim`.
std::size_t block_size(CochainFlavor flavor, std::size_t dim, unsigned degree);

CochainSpace make_cochain_space(const PermittedSpaces& spaces, std::size_t m, CochainFlavor flavor, unsigned degree);

/// Matrix of delta: C^m -> C^{m+1} acting on coefficient rows (row c maps to c * D).
MatrixOf<Field> build_coboundary(const PermittedSpaces& spaces, const CochainSpace& source, const CochainSpace& target);

/// Pullback of one simplex block along the restriction to a face.
MatrixOf<Field> pullback_block(const Field& f, const MatrixOf<Field>& restriction, CochainFlavor flavor,
                               unsigned degree);

/// The window C^{2n-2} -> C^{2n-1} -> C^{2n} around the middle term.
struct CohomologyWindow {
    std::size_t dims[3] = {0, 0, 0};
    std::size_t ranks[2] = {0, 0};
    std::size_t middle() const { return dims[1] - ranks[0] - ranks[1]; }
};

CohomologyWindow cohomology_window(const PermittedSpaces& spaces, CochainFlavor flavor, unsigned degree);

/// Window for the P-simplex of the given n at one generic point (primal parameters).
CohomologyWindow p_simplex_window(const GenericPoint& point, int n, CochainFlavor flavor, unsigned degree);

struct CohomologyResult {
    FieldSpec spec;
    int n = 0;
    unsigned degree = 0;
    CochainFlavor flavor = CochainFlavor::kPolynomial;
    CohomologyWindow window;
    std::vector<std::uint64_t> seeds;
    unsigned resamples = 0;
    bool seeds_agree = true;
    std::vector<CohomologyWindow> per_seed;
};

/// Middle cohomology of the P-simplex at each seed; the reported window is the first seed's,
/// seeds_agree tells whether all seeds gave identical dimensions and ranks.
CohomologyResult cohomology_dimension(const FieldSpec& spec, int n, unsigned degree,
                                      const std::vector<std::uint64_t>& seeds,
                                      CochainFlavor flavor = CochainFlavor::kPolynomial);

}  // namespace polygonkit
