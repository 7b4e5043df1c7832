#include "polygonkit/simplicial/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polygonkit {

Simplex make_simplex(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("repeated vertex in simplex");
    if (!vertices.empty() && vertices.front() <= 0) throw std::invalid_argument("vertex labels must be positive");
    return vertices;
}

int simplex_dimension(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

bool contains(const Simplex& outer, const Simplex& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool contains_vertex(const Simplex& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

int position_of(const Simplex& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    return (it != s.end() && *it == v) ? static_cast<int>(it - s.begin()) : -1;
}

Simplex remove_vertex(const Simplex& s, int v) {
    Simplex r;
    r.reserve(s.size());
    for (int x : s)
        if (x != v) r.push_back(x);
    return r;
}

Simplex remove_vertices(const Simplex& s, const Simplex& vs) {
    Simplex r;
    std::set_difference(s.begin(), s.end(), vs.begin(), vs.end(), std::back_inserter(r));
    return r;
}

Simplex unite(const Simplex& a, const Simplex& b) {
    Simplex r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Simplex complement_in(const Simplex& ambient, const Simplex& part) { return remove_vertices(ambient, part); }

std::vector<Simplex> subsets_of_size(const Simplex& s, int k) {
    std::vector<Simplex> out;
    const int m = static_cast<int>(s.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Simplex f(k);
        for (int i = 0; i < k; ++i) f[i] = s[idx[i]];
        out.push_back(std::move(f));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

int incidence(const Simplex& s, const Simplex& face) {
    if (face.size() + 1 != s.size() || !contains(s, face)) throw std::invalid_argument("not a codimension-one face");
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j == face.size() || s[j] != face[j]) return (j % 2 == 0) ? 1 : -1;
    return 1;
}

int permutation_sign(const std::vector<int>& labels) {
    int sign = 1;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) return 0;
            if (labels[i] > labels[j]) sign = -sign;
        }
    return sign;
}

Simplex range_simplex(int m) {
    Simplex s(m);
    for (int i = 0; i < m; ++i) s[i] = i + 1;
    return s;
}

std::string str(const Simplex& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << ")";
    return os.str();
}

ComplementalFace::ComplementalFace(Simplex amb, Simplex om)
    : ambient(make_simplex(std::move(amb))), omitted(make_simplex(std::move(om))) {
    if (omitted.empty() || omitted.size() > 2) throw std::invalid_argument("complemental notation omits 1 or 2 vertices");
    if (!contains(ambient, omitted)) throw std::invalid_argument("omitted vertices must lie in the ambient simplex");
}

}  // namespace polygonkit
