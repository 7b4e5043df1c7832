#pragma once

#include "polygonkit/cohomology/cocycles.hpp"
#include "polygonkit/gcolor/coloring.hpp"
#include "polygonkit/simplicial/pachner.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polygonkit {

/// Permitted colorings modulo g-colorings, with coset representatives.
struct FactorSpace {
    ColoringSpace vp;
    ColoringSpace vg;
    /// dim rows over vp.faces, all permitted, independent modulo V_g.
    MatrixOf<Field> complement;
    std::size_t dim() const { return complement.rows(); }
};

/// Throws std::invalid_argument unless t is a closed pseudomanifold of dimension 2n-1,
/// std::logic_error if V_g is not contained in V_p.
FactorSpace factor_space(const GVectorSource& src, const Triangulation& t);

/// A lifted cocycle named h2, h3 or general:p:k.
struct CocycleKind {
    std::uint64_t p = 2;
    unsigned k = 1;
    static CocycleKind parse(const std::string& name);  // throws std::invalid_argument
    std::string name() const;
    unsigned m() const;
};

/// The symplectic (or symmetric) normal form of a bilinear form.
struct CanonicalForm {
    std::size_t rank = 0;
    std::size_t hyperbolic_blocks = 0;
    bool alternating = false;
    /// Rows are the new basis: transform * B * transform^T is the normal form.
    MatrixOf<Field> transform;
    MatrixOf<Field> normal_form;
};

/// Alternating forms are reduced to hyperbolic blocks (0 1; -1 0) and zeros; other symmetric forms
/// only report their rank. Throws std::invalid_argument for a non-symmetric input and
/// std::logic_error if the alternating reduction ends with an odd rank.
CanonicalForm canonicalize_form(const Field& f, const MatrixOf<Field>& b);

/// I(M) at one generic point.
struct InvariantValue {
    std::size_t dim_v = 0;
    unsigned m = 0;
    /// Coefficient of x^a y^b for degree-m monomials a, b in the complement coordinates.
    MatrixOf<Field> polynomial;
    std::size_t nonzero_terms = 0;
    /// Only monomials x_i^m y_j^m survive.
    bool bisemilinear = true;
    std::vector<std::string> offending;  // at most a few, verbatim
    MatrixOf<Field> form;                // B_ij, coefficient of x_i^m y_j^m
    bool symmetric = true;
    bool zero_diagonal = true;
    std::size_t rank = 0;
};

/// Coefficients c_v for the dual parameters on t (char 2: sigma = 1; otherwise solved).
BilinearCocycle manifold_bilinear_cocycle(const DualParameters& params, const Triangulation& t);

/// Local data for every facet; orientations are used for odd p and required there.
std::vector<LocalCocycleData> manifold_local_data(const BilinearCocycle& c, const Triangulation& t,
                                                  const CocycleKind& kind);

InvariantValue invariant_at(const DualParameters& params, const Triangulation& t, const CocycleKind& kind);

/// sum over facets of the cocycle value on (x|_w, y|_w), colorings given over colored_faces(t, n).
Fe invariant_on_colorings(const DualParameters& params, const Triangulation& t, const CocycleKind& kind,
                          const std::vector<Fe>& x, const std::vector<Fe>& y);

struct InvariantReport {
    std::string manifold_name;
    FieldSpec field;
    std::string cocycle_kind;
    std::size_t dim_v = 0;
    MatrixOf<Field> form_matrix;
    std::size_t rank = 0;
    bool bisemilinear = true;
    std::vector<std::string> offending;
    std::vector<std::uint64_t> seeds_used;
    std::vector<std::size_t> dims_per_seed;
    std::vector<std::size_t> ranks_per_seed;
    bool seeds_agree = true;
    unsigned resamples = 0;
};

/// Dual parameters for every vertex of t at a point (identifiers mu_<label>_<j>).
DualParameters manifold_parameters(const GenericPoint& point, const Triangulation& t);

/// n with dimension 2n - 1; throws std::invalid_argument for even dimension or dimension < 3.
int manifold_n(const Triangulation& t);

/// I(M) at each seed. Odd p needs an oriented triangulation (std::invalid_argument otherwise).
InvariantReport evaluate_invariant(const FieldSpec& spec, const Triangulation& t, const CocycleKind& kind,
                                   const std::vector<std::uint64_t>& seeds, const std::string& name = "");

struct PachnerStep {
    std::string move;  // "" for the initial triangulation
    std::size_t facets = 0;
    std::size_t dim_v = 0;
    std::size_t rank = 0;
};

struct PachnerInvarianceReport {
    std::vector<PachnerStep> steps;
    bool unchanged = true;
    unsigned resamples = 0;
    Triangulation final_triangulation;
};

/// Applies `moves` random Pachner moves (fresh vertices receive fresh rows) and recomputes
/// (dim V, rank B) after each.
PachnerInvarianceReport check_pachner_invariance(const FieldSpec& spec, const Triangulation& t, const CocycleKind& kind,
                                                 int moves, std::uint64_t seed);

}  // namespace polygonkit
