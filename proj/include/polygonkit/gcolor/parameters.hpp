#pragma once

#include "polygonkit/exactfield/field.hpp"
#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/exactfield/linalg.hpp"
#include "polygonkit/simplicial/simplex.hpp"

#include <array>
#include <map>
#include <vector>

namespace polygonkit {

/// Anything that defines g-simplex vectors: e_b|_v for a g-simplex b and a (2n-2)-face v.
class GVectorSource {
public:
    virtual ~GVectorSource() = default;
    virtual int n() const = 0;
    virtual const Field& field() const = 0;
    /// Component e_b|_v; zero when b is not contained in v.
    virtual Fe g_component(const Simplex& b, const Simplex& v) const = 0;
};

/// The 3 x (2n+1) matrix with columns (alpha_q, beta_q, gamma_q), q = 1..2n+1.
class PrimalParameters : public GVectorSource {
public:
    PrimalParameters(const Field& field, int n, std::vector<std::array<Fe, 3>> columns);

    /// Columns alpha_q, beta_q, gamma_q from the point. Throws DegeneratePoint if
    /// some three columns are dependent.
    static PrimalParameters sample(const GenericPoint& point, int n);
    static std::vector<std::string> indeterminates(int n);

    int n() const override { return n_; }
    const Field& field() const override { return field_; }
    const std::array<Fe, 3>& column(int q) const { return columns_.at(q - 1); }
    int vertex_count() const { return 2 * n_ + 1; }

    /// Determinant of columns i, j, k in that order; zero if two coincide.
    Fe det3(int i, int j, int k) const;

    /// e_b|_v = prod_{i in b} d_{ilm} with l < m the vertices of 1..2n+1 missing from v.
    Fe g_component(const Simplex& b, const Simplex& v) const override;

    /// The matrix M as 3 x (2n+1).
    MatrixOf<Field> matrix() const;

private:
    Field field_;
    int n_;
    std::vector<std::array<Fe, 3>> columns_;
};

/// Rows N_i of length 2n-2 attached to vertex labels.
class DualParameters : public GVectorSource {
public:
    DualParameters(const Field& field, int n, std::map<int, std::vector<Fe>> rows);

    /// Rows mu_{i,1..2n-2} for the given labels, drawn from the point.
    static DualParameters sample(const GenericPoint& point, int n, const std::vector<int>& labels);
    static std::vector<std::string> indeterminates(int n, const std::vector<int>& labels);

    /// The dual of primal parameters: columns of N span the orthogonal complement of the rows of M,
    /// normalized so that p_I = (-1)^{sum I} d_J for complementary I, J.
    static DualParameters from_primal(const PrimalParameters& primal);

    int n() const override { return n_; }
    const Field& field() const override { return field_; }
    const std::map<int, std::vector<Fe>>& rows() const { return rows_; }
    bool has_row(int label) const { return rows_.count(label) > 0; }

    /// Adds rows for labels not yet present, drawn from the point (fresh vertices).
    void extend(const GenericPoint& point, const std::vector<int>& labels);

    /// Determinant of the rows of `labels` taken in increasing label order (zero if
    /// a label repeats). Throws std::invalid_argument if the count is not 2n-2 or a row is missing.
    Fe pdet(const std::vector<int>& labels) const;

    /// e_b|_v = prod_{i in b} (-1)^{pos_v i} p_{v minus i}, pos 1-based.
    /// Throws DegeneratePoint if a needed determinant vanishes.
    Fe g_component(const Simplex& b, const Simplex& v) const override;

private:
    Field field_;
    int n_;
    std::map<int, std::vector<Fe>> rows_;
    mutable std::map<Simplex, Fe> pdet_cache_;
};

}  // namespace polygonkit
