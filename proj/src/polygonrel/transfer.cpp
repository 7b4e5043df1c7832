#include "polygonkit/polygonrel/transfer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polygonkit {

namespace {

Simplex leg_face(int top, int x, int q) { return remove_vertices(range_simplex(top), make_simplex({x, q})); }

}  // namespace

Fe GaugeVector::lambda(const Field& f, const Simplex& face) const {
    auto it = lambdas.find(face);
    return it == lambdas.end() ? f.one() : it->second;
}

std::vector<int> default_input_vertices(int n, int q) {
    std::vector<int> inputs;
    int pos = 0;
    for (int x = 1; x <= 2 * n + 1; ++x) {
        if (x == q) continue;
        if (++pos % 2 == 1) inputs.push_back(x);
    }
    return inputs;
}

TransferMatrix transfer_matrix(const PrimalParameters& params, int q, const std::vector<int>& input_vertices,
                               std::vector<int> output_vertices) {
    const Field& f = params.field();
    const int n = params.n();
    const int top = 2 * n + 1;
    if (q < 1 || q > top) throw std::invalid_argument("d-simplex label out of range");
    if (static_cast<int>(input_vertices.size()) != n) throw std::invalid_argument("need n input legs");
    std::set<int> used(input_vertices.begin(), input_vertices.end());
    if (static_cast<int>(used.size()) != n || used.count(q)) throw std::invalid_argument("malformed input legs");
    for (int x : input_vertices)
        if (x < 1 || x > top) throw std::invalid_argument("input leg out of range");
    if (output_vertices.empty()) {
        for (int x = 1; x <= top; ++x)
            if (x != q && !used.count(x)) output_vertices.push_back(x);
    } else {
        std::set<int> all(used);
        all.insert(output_vertices.begin(), output_vertices.end());
        if (static_cast<int>(output_vertices.size()) != n || static_cast<int>(all.size()) != 2 * n || all.count(q))
            throw std::invalid_argument("malformed output legs");
    }

    TransferMatrix a;
    a.q = q;
    a.input_vertices = input_vertices;
    a.output_vertices = output_vertices;
    for (int x : input_vertices) a.inputs.push_back(leg_face(top, x, q));
    for (int y : output_vertices) a.outputs.push_back(leg_face(top, y, q));
    a.entries = zeros(f, n, n);
    for (int r = 0; r < n; ++r) {
        const int x = input_vertices[r];
        Fe den = f.one();
        for (int xp : input_vertices)
            if (xp != x) den = f.mul(den, params.det3(xp, x, q));
        if (f.is_zero(den)) throw DegeneratePoint("vanishing denominator in transfer matrix of " + std::to_string(q));
        const Fe inv = f.inv(den);
        for (int c = 0; c < n; ++c) {
            Fe num = f.one();
            for (int xp : input_vertices)
                if (xp != x) num = f.mul(num, params.det3(xp, output_vertices[c], q));
            a.entries(r, c) = f.mul(num, inv);
        }
    }
    return a;
}

GaugeVector standard_sign_gauge(const Field& f, int n, const TransferMatrix& a) {
    GaugeVector g;
    if (n % 2 == 1) return g;
    auto mark = [&](const std::vector<int>& xs, const std::vector<Simplex>& faces) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i] > a.q) g.lambdas[faces[i]] = f.neg(f.one());
    };
    mark(a.input_vertices, a.inputs);
    mark(a.output_vertices, a.outputs);
    return g;
}

TransferMatrix apply_gauge(const Field& f, const TransferMatrix& a, const GaugeVector& g) {
    TransferMatrix out = a;
    const std::size_t n = a.inputs.size();
    for (std::size_t r = 0; r < n; ++r) {
        const Fe li = g.lambda(f, a.inputs[r]);
        if (f.is_zero(li)) throw std::invalid_argument("gauge lambda must be nonzero");
        for (std::size_t c = 0; c < n; ++c) {
            const Fe lo = g.lambda(f, a.outputs[c]);
            if (f.is_zero(lo)) throw std::invalid_argument("gauge lambda must be nonzero");
            out.entries(r, c) = f.div(f.mul(li, a.entries(r, c)), lo);
        }
    }
    return out;
}

TransferMatrix inverse_transfer(const Field& f, const TransferMatrix& a) {
    TransferMatrix b;
    b.q = a.q;
    b.input_vertices = a.output_vertices;
    b.output_vertices = a.input_vertices;
    b.inputs = a.outputs;
    b.outputs = a.inputs;
    try {
        b.entries = inverse(f, a.entries);
    } catch (const std::domain_error&) {
        throw DegeneratePoint("singular transfer matrix of " + std::to_string(a.q));
    }
    return b;
}

std::string EmbeddedOperator::name() const { return (inverse ? "B" : "A") + std::to_string(core.q); }

MatrixOf<Field> EmbeddedOperator::dense(const Field& f) const {
    auto m = identity(f, big_size);
    right_multiply(f, m, *this);
    return m;
}

EmbeddedOperator apply_gauge(const Field& f, const EmbeddedOperator& op, const GaugeVector& g) {
    EmbeddedOperator out = op;
    out.core = apply_gauge(f, op.core, g);
    return out;
}

void right_multiply(const Field& f, MatrixOf<Field>& m, const EmbeddedOperator& op) {
    const std::size_t k = op.positions.size();
    std::vector<Fe> in(k), out(k);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t i = 0; i < k; ++i) in[i] = m(r, op.positions[i]);
        for (std::size_t c = 0; c < k; ++c) {
            Fe s = f.zero();
            for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(in[i], op.core.entries(i, c)));
            out[c] = s;
        }
        for (std::size_t c = 0; c < k; ++c) m(r, op.positions[c]) = out[c];
    }
}

}  // namespace polygonkit
