#pragma once

#include "polygonkit/gcolor/parameters.hpp"
#include "polygonkit/simplicial/index_sets.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polygonkit {

/// The n x n matrix of a d-simplex q (all P-simplex vertices but q), acting on rows from the right.
/// Leg "x" is the face without vertices x and q.
struct TransferMatrix {
    int q = 0;
    std::vector<int> input_vertices;   // x for input legs, in the row order
    std::vector<int> output_vertices;  // x for output legs, in the column order
    std::vector<Simplex> inputs;
    std::vector<Simplex> outputs;
    MatrixOf<Field> entries;
};

/// Face colors are renormalized as x_u = lambda_u x_u^new; missing faces have lambda = 1.
struct GaugeVector {
    std::map<Simplex, Fe> lambdas;
    Fe lambda(const Field& f, const Simplex& face) const;
};

/// Leg vertices declared input for d-simplex `q`: the vertices at odd positions of
/// {1..2n+1} minus q, in increasing order.
std::vector<int> default_input_vertices(int n, int q);

/// Entry (x, y) = prod over inputs x' != x of d_{x' y q} / d_{x' x q}; input legs are faces "x q"
/// for x in `input_vertices` (rows in the given order); outputs are `output_vertices`, or the
/// remaining legs in increasing order when empty. Throws DegeneratePoint on a vanishing
/// denominator and std::invalid_argument for malformed legs.
TransferMatrix transfer_matrix(const PrimalParameters& params, int q, const std::vector<int>& input_vertices,
                               std::vector<int> output_vertices = {});

/// The ±1 gauge taking the matrices above to the colors e_b of the g-vectors themselves
/// (determinants with the omitted vertices in increasing order): lambda_{xq} = (-1)^{(n-1)[x > q]}.
GaugeVector standard_sign_gauge(const Field& f, int n, const TransferMatrix& a);

/// A -> diag(lambda_inputs) A diag(lambda_outputs)^{-1}. Throws std::invalid_argument on a zero lambda.
TransferMatrix apply_gauge(const Field& f, const TransferMatrix& a, const GaugeVector& g);

/// Inverse matrix with input and output legs interchanged. Throws DegeneratePoint if singular.
TransferMatrix inverse_transfer(const Field& f, const TransferMatrix& a);

/// A transfer matrix acting on positions (0-based, increasing) of rows of length big_size.
struct EmbeddedOperator {
    std::size_t big_size = 0;
    std::vector<std::size_t> positions;
    TransferMatrix core;
    bool inverse = false;  // a B factor (inverse of the d-simplex matrix)

    std::string name() const;
    /// Dense big_size x big_size matrix (identity off the positions).
    MatrixOf<Field> dense(const Field& f) const;
};

EmbeddedOperator apply_gauge(const Field& f, const EmbeddedOperator& op, const GaugeVector& g);

/// m <- m * op, touching only the columns in op.positions.
void right_multiply(const Field& f, MatrixOf<Field>& m, const EmbeddedOperator& op);

}  // namespace polygonkit
