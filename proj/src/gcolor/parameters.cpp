#include "polygonkit/gcolor/parameters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polygonkit {

PrimalParameters::PrimalParameters(const Field& field, int n, std::vector<std::array<Fe, 3>> columns)
    : field_(field), n_(n), columns_(std::move(columns)) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (static_cast<int>(columns_.size()) != 2 * n + 1) throw std::invalid_argument("need 2n+1 columns");
}

std::vector<std::string> PrimalParameters::indeterminates(int n) {
    std::vector<std::string> ids;
    for (const char* row : {"alpha", "beta", "gamma"})
        for (int q = 1; q <= 2 * n + 1; ++q) ids.push_back(std::string(row) + "_" + std::to_string(q));
    return ids;
}

PrimalParameters PrimalParameters::sample(const GenericPoint& point, int n) {
    std::vector<std::array<Fe, 3>> cols(2 * n + 1);
    for (int q = 1; q <= 2 * n + 1; ++q) {
        const std::string s = std::to_string(q);
        cols[q - 1] = {point.value("alpha_" + s), point.value("beta_" + s), point.value("gamma_" + s)};
    }
    PrimalParameters p(point.field(), n, std::move(cols));
    for (int i = 1; i <= 2 * n + 1; ++i)
        for (int j = i + 1; j <= 2 * n + 1; ++j)
            for (int k = j + 1; k <= 2 * n + 1; ++k)
                if (p.field().is_zero(p.det3(i, j, k)))
                    throw DegeneratePoint("columns " + std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + " are dependent");
    return p;
}

Fe PrimalParameters::det3(int i, int j, int k) const {
    const Field& f = field_;
    if (i == j || j == k || i == k) return f.zero();
    const auto& a = column(i);
    const auto& b = column(j);
    const auto& c = column(k);
    // Expansion along the first row (alpha).
    const Fe m0 = f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1]));
    const Fe m1 = f.sub(f.mul(a[1], c[2]), f.mul(a[2], c[1]));
    const Fe m2 = f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1]));
    return f.add(f.sub(f.mul(a[0], m0), f.mul(b[0], m1)), f.mul(c[0], m2));
}

Fe PrimalParameters::g_component(const Simplex& b, const Simplex& v) const {
    if (!contains(v, b)) return field_.zero();
    int lm[2], found = 0;
    for (int q = 1; q <= 2 * n_ + 1 && found < 2; ++q)
        if (!contains_vertex(v, q)) lm[found++] = q;
    if (found != 2 || static_cast<int>(v.size()) != 2 * n_ - 1)
        throw std::invalid_argument("face " + str(v) + " is not a (2n-2)-face of the P-simplex");
    Fe r = field_.one();
    for (int i : b) r = field_.mul(r, det3(i, lm[0], lm[1]));
    return r;
}

MatrixOf<Field> PrimalParameters::matrix() const {
    auto m = zeros(field_, 3, 2 * n_ + 1);
    for (int q = 1; q <= 2 * n_ + 1; ++q)
        for (int r = 0; r < 3; ++r) m(r, q - 1) = column(q)[r];
    return m;
}

DualParameters::DualParameters(const Field& field, int n, std::map<int, std::vector<Fe>> rows)
    : field_(field), n_(n), rows_(std::move(rows)) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    for (const auto& [label, row] : rows_)
        if (static_cast<int>(row.size()) != 2 * n - 2)
            throw std::invalid_argument("row of vertex " + std::to_string(label) + " must have 2n-2 entries");
}

std::vector<std::string> DualParameters::indeterminates(int n, const std::vector<int>& labels) {
    std::vector<std::string> ids;
    for (int i : labels)
        for (int j = 1; j <= 2 * n - 2; ++j) ids.push_back("mu_" + std::to_string(i) + "_" + std::to_string(j));
    return ids;
}

DualParameters DualParameters::sample(const GenericPoint& point, int n, const std::vector<int>& labels) {
    DualParameters d(point.field(), n, {});
    d.extend(point, labels);
    return d;
}

void DualParameters::extend(const GenericPoint& point, const std::vector<int>& labels) {
    for (int i : labels) {
        if (rows_.count(i)) continue;
        std::vector<Fe> row;
        for (int j = 1; j <= 2 * n_ - 2; ++j) row.push_back(point.value("mu_" + std::to_string(i) + "_" + std::to_string(j)));
        rows_.emplace(i, std::move(row));
    }
}

DualParameters DualParameters::from_primal(const PrimalParameters& primal) {
    const Field& f = primal.field();
    const int n = primal.n();
    const int m = 2 * n + 1;
    const auto ns = solve_nullspace(f, primal.matrix());  // (2n-2) x (2n+1), rows orthogonal to M
    if (static_cast<int>(ns.rows()) != 2 * n - 2) throw DegeneratePoint("primal matrix does not have rank 3");
    std::map<int, std::vector<Fe>> rows;
    for (int i = 1; i <= m; ++i) {
        std::vector<Fe> row(2 * n - 2);
        for (int j = 0; j < 2 * n - 2; ++j) row[j] = ns(j, i - 1);
        rows.emplace(i, std::move(row));
    }
    DualParameters dual(f, n, std::move(rows));
    // Scale the first column so that p_{1..2n-2} = (-1)^{sum} d_{2n-1, 2n, 2n+1}.
    std::vector<int> first(2 * n - 2);
    int sum = 0;
    for (int i = 0; i < 2 * n - 2; ++i) {
        first[i] = i + 1;
        sum += i + 1;
    }
    const Fe target = (sum % 2 ? f.neg(primal.det3(m - 2, m - 1, m)) : primal.det3(m - 2, m - 1, m));
    const Fe current = dual.pdet(first);
    if (f.is_zero(current)) throw DegeneratePoint("dual determinant vanishes");
    const Fe scale = f.div(target, current);
    for (auto& [label, row] : dual.rows_) row[0] = f.mul(row[0], scale);
    dual.pdet_cache_.clear();
    return dual;
}

Fe DualParameters::pdet(const std::vector<int>& labels_in) const {
    if (static_cast<int>(labels_in.size()) != 2 * n_ - 2) throw std::invalid_argument("pdet needs 2n-2 labels");
    std::vector<int> labels = labels_in;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return field_.zero();
    if (auto it = pdet_cache_.find(labels); it != pdet_cache_.end()) return it->second;
    const std::size_t k = labels.size();
    auto m = zeros(field_, k, k);
    for (std::size_t r = 0; r < k; ++r) {
        auto it = rows_.find(labels[r]);
        if (it == rows_.end()) throw std::invalid_argument("no parameter row for vertex " + std::to_string(labels[r]));
        for (std::size_t c = 0; c < k; ++c) m(r, c) = it->second[c];
    }
    const Fe d = determinant(field_, std::move(m));
    pdet_cache_.emplace(labels, d);
    return d;
}

Fe DualParameters::g_component(const Simplex& b, const Simplex& v) const {
    if (!contains(v, b)) return field_.zero();
    if (static_cast<int>(v.size()) != 2 * n_ - 1) throw std::invalid_argument("face " + str(v) + " has wrong size");
    Fe r = field_.one();
    for (int i : b) {
        const Fe p = pdet(remove_vertex(v, i));
        if (field_.is_zero(p)) throw DegeneratePoint("vanishing determinant p for face " + str(v));
        const int pos = position_of(v, i) + 1;
        r = field_.mul(r, pos % 2 ? field_.neg(p) : p);
    }
    return r;
}

}  // namespace polygonkit
