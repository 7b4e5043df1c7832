#pragma once

#include "polygonkit/polygonrel/transfer.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace polygonkit {

/// Two products of embedded operators; the left factor acts first on rows.
struct PolygonRelation {
    int n = 0;
    int kappa = 0;
    std::vector<int> relabeling;  // relabeling[r-1] is the label playing the role of vertex r
    std::vector<EmbeddedOperator> lhs;
    std::vector<EmbeddedOperator> rhs;

    std::size_t size() const { return static_cast<std::size_t>(n * (n + 1) / 2); }
};

struct RelationCheck {
    bool holds = false;
    MatrixOf<Field> residual;  // LHS - RHS
    std::size_t nonzero_entries = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;
    /// Positions (0-based) untouched by the side with fewer factors; that side maps them identically,
    /// so the other side must as well.
    std::vector<std::size_t> superfluous;
    bool superfluous_identity = true;
};

/// Which operators share legs: count of shared legs per unordered pair of operator names.
struct LinkReport {
    std::map<std::pair<std::string, std::string>, int> shared;
    std::size_t operators = 0;
    /// Every pair of operators shares exactly one leg.
    bool all_linked_once() const;
};

/// Gauge convention for the factors of a relation.
enum class SignConvention {
    kStandard,  // colors are the g-vector components (relations hold for every relabeling)
    kRaw,       // matrices exactly as given by transfer_matrix
};

/// The relation for the move kappa -> 2n+1-kappa realized as in enumerate_pachner_move with the
/// same relabeling: odd matrices then B factors on the left, the remaining even matrices on the
/// right; for kappa <= n the sides of the inverse move's relation are swapped.
/// Throws std::invalid_argument for kappa outside 1..2n.
PolygonRelation build_full_polygon(const PrimalParameters& params, int kappa, const std::vector<int>& relabeling = {},
                                   SignConvention convention = SignConvention::kStandard);

/// kappa = n+1 with the identity labeling.
PolygonRelation build_odd_gon(const PrimalParameters& params, SignConvention convention = SignConvention::kStandard);

/// Product of one side as a dense matrix.
MatrixOf<Field> evaluate_side(const Field& f, const std::vector<EmbeddedOperator>& side, std::size_t size);

RelationCheck check_relation(const Field& f, const PolygonRelation& rel);

/// The gauge applied to every factor of the relation.
PolygonRelation apply_gauge(const Field& f, const PolygonRelation& rel, const GaugeVector& g);

/// Shared legs from the data flow: same side, an output read as a later input; opposite sides,
/// the same initial entry read or the same final entry written; positions touched by one side
/// only link that side's first reader and last writer (an inner face).
LinkReport link_report(const PolygonRelation& rel);

RelationCheck verify_odd_gon(const PrimalParameters& params);
RelationCheck full_polygon_relation(const PrimalParameters& params, int kappa, const std::vector<int>& relabeling = {});

}  // namespace polygonkit
