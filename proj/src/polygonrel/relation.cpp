#include "polygonkit/polygonrel/relation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polygonkit {

namespace {

std::vector<int> identity_labels(int top) {
    std::vector<int> v(top);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

EmbeddedOperator embedded(const PrimalParameters& params, const IndexSets& sets, const std::vector<int>& pi, int q,
                          SignConvention convention) {
    const Field& f = params.field();
    const int n = params.n();
    std::vector<int> in_roles = default_input_vertices(n, q), out_roles;
    for (int x = 1; x <= 2 * n + 1; ++x)
        if (x != q && std::find(in_roles.begin(), in_roles.end(), x) == in_roles.end()) out_roles.push_back(x);
    auto image = [&](const std::vector<int>& roles) {
        std::vector<int> labels;
        for (int r : roles) labels.push_back(pi[r - 1]);
        return labels;
    };
    auto a = transfer_matrix(params, pi[q - 1], image(in_roles), image(out_roles));
    if (convention == SignConvention::kStandard) a = apply_gauge(f, a, standard_sign_gauge(f, n, a));
    EmbeddedOperator op;
    op.big_size = static_cast<std::size_t>(sets.size());
    for (int p : sets.of(q)) op.positions.push_back(static_cast<std::size_t>(p - 1));
    op.core = std::move(a);
    return op;
}

std::vector<bool> touched(const std::vector<EmbeddedOperator>& side, std::size_t size) {
    std::vector<bool> t(size, false);
    for (const auto& op : side)
        for (auto p : op.positions) t[p] = true;
    return t;
}

}  // namespace

bool LinkReport::all_linked_once() const {
    if (shared.size() != operators * (operators - 1) / 2) return false;
    for (const auto& [pair, count] : shared)
        if (count != 1 || pair.first == pair.second) return false;
    return true;
}

PolygonRelation build_full_polygon(const PrimalParameters& params, int kappa, const std::vector<int>& relabeling,
                                   SignConvention convention) {
    const int n = params.n();
    const int top = 2 * n + 1;
    if (kappa < 1 || kappa > 2 * n) throw std::invalid_argument("kappa must lie in 1..2n");
    std::vector<int> pi = relabeling.empty() ? identity_labels(top) : relabeling;
    if (static_cast<int>(pi.size()) != top) throw std::invalid_argument("relabeling must have 2n+1 entries");
    if (make_simplex(pi) != range_simplex(top)) throw std::invalid_argument("relabeling must permute 1..2n+1");

    const auto sets = build_index_sets(n);
    const Field& f = params.field();
    const int big = kappa >= n + 1 ? kappa : top - kappa;
    const int k = big - n - 1;

    PolygonRelation rel;
    rel.n = n;
    rel.kappa = kappa;
    rel.relabeling = pi;
    for (int q = 1; q <= top; q += 2) rel.lhs.push_back(embedded(params, sets, pi, q, convention));
    for (int q = 2; q <= 2 * k; q += 2) {
        auto op = embedded(params, sets, pi, q, convention);
        op.core = inverse_transfer(f, op.core);
        op.inverse = true;
        rel.lhs.push_back(std::move(op));
    }
    for (int q = 2 * n; q >= 2 * k + 2; q -= 2) rel.rhs.push_back(embedded(params, sets, pi, q, convention));
    if (kappa <= n) std::swap(rel.lhs, rel.rhs);
    return rel;
}

PolygonRelation build_odd_gon(const PrimalParameters& params, SignConvention convention) {
    return build_full_polygon(params, params.n() + 1, {}, convention);
}

MatrixOf<Field> evaluate_side(const Field& f, const std::vector<EmbeddedOperator>& side, std::size_t size) {
    auto m = identity(f, size);
    for (const auto& op : side) right_multiply(f, m, op);
    return m;
}

RelationCheck check_relation(const Field& f, const PolygonRelation& rel) {
    const std::size_t size = rel.size();
    const auto l = evaluate_side(f, rel.lhs, size);
    const auto r = evaluate_side(f, rel.rhs, size);
    RelationCheck out;
    out.residual = zeros(f, size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            out.residual(i, j) = f.sub(l(i, j), r(i, j));
            if (!f.is_zero(out.residual(i, j))) {
                ++out.nonzero_entries;
                if (!out.first_violation) out.first_violation = std::make_pair(i, j);
            }
        }
    out.holds = out.nonzero_entries == 0;

    const bool lhs_smaller = rel.lhs.size() < rel.rhs.size();
    const auto t = touched(lhs_smaller ? rel.lhs : rel.rhs, size);
    const auto& bigger = lhs_smaller ? r : l;
    for (std::size_t p = 0; p < size; ++p) {
        if (t[p]) continue;
        out.superfluous.push_back(p);
        for (std::size_t i = 0; i < size; ++i)
            if (bigger(i, p) != (i == p ? f.one() : f.zero())) out.superfluous_identity = false;
    }
    return out;
}

PolygonRelation apply_gauge(const Field& f, const PolygonRelation& rel, const GaugeVector& g) {
    PolygonRelation out = rel;
    for (auto& op : out.lhs) op = apply_gauge(f, op, g);
    for (auto& op : out.rhs) op = apply_gauge(f, op, g);
    return out;
}

LinkReport link_report(const PolygonRelation& rel) {
    const std::size_t size = rel.size();
    LinkReport report;
    report.operators = rel.lhs.size() + rel.rhs.size();
    auto link = [&](const std::string& a, const std::string& b) {
        ++report.shared[a < b ? std::make_pair(a, b) : std::make_pair(b, a)];
    };
    struct Flow {
        std::vector<std::string> first_reader, last_writer;
    };
    auto simulate = [&](const std::vector<EmbeddedOperator>& side) {
        Flow flow{std::vector<std::string>(size), std::vector<std::string>(size)};
        for (const auto& op : side)
            for (auto p : op.positions) {
                if (flow.last_writer[p].empty()) flow.first_reader[p] = op.name();
                else link(flow.last_writer[p], op.name());
                flow.last_writer[p] = op.name();
            }
        return flow;
    };
    const auto left = simulate(rel.lhs);
    const auto right = simulate(rel.rhs);
    for (std::size_t p = 0; p < size; ++p) {
        const bool in_left = !left.first_reader[p].empty();
        const bool in_right = !right.first_reader[p].empty();
        if (in_left && in_right) {
            link(left.first_reader[p], right.first_reader[p]);
            link(left.last_writer[p], right.last_writer[p]);
        } else if (in_left) {
            link(left.first_reader[p], left.last_writer[p]);
        } else if (in_right) {
            link(right.first_reader[p], right.last_writer[p]);
        }
    }
    return report;
}

RelationCheck verify_odd_gon(const PrimalParameters& params) {
    return check_relation(params.field(), build_odd_gon(params));
}

RelationCheck full_polygon_relation(const PrimalParameters& params, int kappa, const std::vector<int>& relabeling) {
    return check_relation(params.field(), build_full_polygon(params, kappa, relabeling));
}

}  // namespace polygonkit
