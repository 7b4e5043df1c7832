#include "polygonkit/simplicial/triangulation.hpp"

#include "polygonkit/exactfield/field.hpp"
#include "polygonkit/exactfield/linalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polygonkit {

Triangulation::Triangulation(int dimension, std::vector<Simplex> facets, std::optional<std::vector<int>> orientation)
    : dimension_(dimension), orientation_(std::move(orientation)) {
    if (dimension < 0) throw std::invalid_argument("negative dimension");
    if (orientation_ && orientation_->size() != facets.size())
        throw std::invalid_argument("orientation count differs from facet count");
    std::vector<std::pair<Simplex, int>> entries;
    entries.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        // Unsorted input facets carry the sign of the sorting permutation.
        const int sign = permutation_sign(facets[i]);
        Simplex s = make_simplex(facets[i]);
        if (static_cast<int>(s.size()) != dimension + 1)
            throw std::invalid_argument("facet " + str(s) + " does not have dimension " + std::to_string(dimension));
        int o = 1;
        if (orientation_) {
            o = (*orientation_)[i];
            if (o != 1 && o != -1) throw std::invalid_argument("orientation entries must be +1 or -1");
            o *= sign;
        }
        entries.emplace_back(std::move(s), o);
    }
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].first == entries[i + 1].first) throw std::invalid_argument("repeated facet " + str(entries[i].first));
    facets_.reserve(entries.size());
    std::vector<int> o;
    for (auto& [s, sign] : entries) {
        index_.emplace(s, facets_.size());
        facets_.push_back(std::move(s));
        o.push_back(sign);
    }
    if (orientation_) orientation_ = std::move(o);
}

const std::vector<int>& Triangulation::orientation() const {
    if (!orientation_) throw std::logic_error("triangulation is not oriented");
    return *orientation_;
}

int Triangulation::orientation_of(std::size_t facet_index) const {
    return orientation_ ? (*orientation_)[facet_index] : 1;
}

std::optional<std::size_t> Triangulation::facet_index(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Triangulation::vertices() const {
    std::set<int> vs;
    for (const auto& f : facets_) vs.insert(f.begin(), f.end());
    return {vs.begin(), vs.end()};
}

int Triangulation::max_label() const {
    int m = 0;
    for (const auto& f : facets_) m = std::max(m, f.back());
    return m;
}

std::vector<Simplex> Triangulation::faces_of_size(int k) const {
    std::set<Simplex> faces;
    for (const auto& f : facets_)
        for (auto& s : subsets_of_size(f, k)) faces.insert(std::move(s));
    return {faces.begin(), faces.end()};
}

std::vector<std::size_t> Triangulation::star(const Simplex& s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (contains(facets_[i], s)) out.push_back(i);
    return out;
}

bool Triangulation::has_face(const Simplex& s) const {
    for (const auto& f : facets_)
        if (contains(f, s)) return true;
    return false;
}

namespace {

std::map<Simplex, std::vector<std::size_t>> ridge_map(const std::vector<Simplex>& facets) {
    std::map<Simplex, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (int v : facets[i]) ridges[remove_vertex(facets[i], v)].push_back(i);
    return ridges;
}

}  // namespace

bool Triangulation::is_closed_pseudomanifold() const {
    if (facets_.empty()) return false;
    if (dimension_ == 0) return true;
    for (const auto& [ridge, owners] : ridge_map(facets_))
        if (owners.size() != 2) return false;
    return true;
}

bool Triangulation::orientation_consistent() const {
    if (!orientation_) return false;
    for (const auto& [ridge, owners] : ridge_map(facets_)) {
        if (owners.size() != 2) return false;
        const int a = (*orientation_)[owners[0]] * incidence(facets_[owners[0]], ridge);
        const int b = (*orientation_)[owners[1]] * incidence(facets_[owners[1]], ridge);
        if (a != -b) return false;
    }
    return true;
}

std::optional<std::vector<int>> Triangulation::find_orientation() const {
    if (!is_closed_pseudomanifold()) return std::nullopt;
    const auto ridges = ridge_map(facets_);
    std::vector<std::vector<std::pair<std::size_t, Simplex>>> adj(facets_.size());
    for (const auto& [ridge, owners] : ridges) {
        adj[owners[0]].emplace_back(owners[1], ridge);
        adj[owners[1]].emplace_back(owners[0], ridge);
    }
    std::vector<int> o(facets_.size(), 0);
    for (std::size_t start = 0; start < facets_.size(); ++start) {
        if (o[start]) continue;
        o[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t f = queue.front();
            queue.pop_front();
            for (const auto& [g, ridge] : adj[f]) {
                const int want = -o[f] * incidence(facets_[f], ridge) * incidence(facets_[g], ridge);
                if (!o[g]) {
                    o[g] = want;
                    queue.push_back(g);
                } else if (o[g] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return o;
}

Triangulation Triangulation::with_orientation(std::vector<int> orientation) const {
    return Triangulation(dimension_, facets_, std::move(orientation));
}

Triangulation Triangulation::without_orientation() const { return Triangulation(dimension_, facets_); }

long Triangulation::euler_characteristic() const {
    long chi = 0;
    for (int k = 1; k <= dimension_ + 1; ++k) {
        const long c = static_cast<long>(faces_of_size(k).size());
        chi += (k % 2 == 1) ? c : -c;
    }
    return chi;
}

bool Triangulation::is_connected() const {
    const auto vs = vertices();
    if (vs.empty()) return false;
    std::map<int, int> parent;
    for (int v : vs) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& f : facets_)
        for (int v : f) parent[find(v)] = find(f.front());
    const int root = find(vs.front());
    for (int v : vs)
        if (find(v) != root) return false;
    return true;
}

Triangulation Triangulation::compacted() const {
    const auto vs = vertices();
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < vs.size(); ++i) relabel[vs[i]] = static_cast<int>(i) + 1;
    std::vector<Simplex> fs;
    for (const auto& f : facets_) {
        Simplex g;
        for (int v : f) g.push_back(relabel[v]);
        fs.push_back(std::move(g));
    }
    return Triangulation(dimension_, fs, orientation_);
}

bool operator==(const Triangulation& a, const Triangulation& b) {
    if (a.dimension_ != b.dimension_ || a.facets_ != b.facets_) return false;
    if (a.orientation_ && b.orientation_) return *a.orientation_ == *b.orientation_;
    return true;
}

Triangulation parse_tri(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<int> dim;
    bool oriented = false;
    std::vector<Simplex> facets;
    std::vector<int> orientation;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!dim) {
            if (first.rfind("dim=", 0) != 0) fail("expected dim=<d>");
            try {
                dim = std::stoi(first.substr(4));
            } catch (const std::exception&) {
                fail("bad dimension");
            }
            continue;
        }
        if (first.rfind("oriented=", 0) == 0) {
            if (!facets.empty()) fail("oriented= must precede the facets");
            const std::string v = first.substr(9);
            if (v != "true" && v != "false") fail("oriented must be true or false");
            oriented = v == "true";
            continue;
        }
        std::vector<std::string> tokens{first};
        for (std::string t; ls >> t;) tokens.push_back(t);
        int o = 1;
        if (!tokens.empty() && (tokens.back() == "+1" || tokens.back() == "-1")) {
            o = tokens.back() == "+1" ? 1 : -1;
            tokens.pop_back();
        }
        Simplex s;
        for (const auto& t : tokens) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(t, &used);
            } catch (const std::exception&) {
                fail("bad vertex label '" + t + "'");
            }
            if (used != t.size() || v <= 0) fail("bad vertex label '" + t + "'");
            s.push_back(v);
        }
        if (static_cast<int>(s.size()) != *dim + 1) fail("facet needs " + std::to_string(*dim + 1) + " vertices");
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] >= s[i + 1]) fail("facet labels must be strictly increasing");
        facets.push_back(std::move(s));
        orientation.push_back(o);
    }
    if (!dim) throw std::runtime_error("missing dim= header");
    if (oriented) return Triangulation(*dim, std::move(facets), std::move(orientation));
    return Triangulation(*dim, std::move(facets));
}

Triangulation read_tri(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_tri(in);
}

void write_tri(std::ostream& out, const Triangulation& t, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "dim=" << t.dimension() << "\n";
    if (t.oriented()) out << "oriented=true\n";
    for (std::size_t i = 0; i < t.facets().size(); ++i) {
        const auto& f = t.facets()[i];
        for (std::size_t j = 0; j < f.size(); ++j) out << (j ? " " : "") << f[j];
        if (t.oriented()) out << (t.orientation()[i] > 0 ? " +1" : " -1");
        out << "\n";
    }
}

Triangulation boundary_sphere(int d) {
    if (d < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    const Simplex all = range_simplex(d + 2);
    std::vector<Simplex> facets;
    std::vector<int> orientation;
    for (int k = 0; k < d + 2; ++k) {
        facets.push_back(remove_vertex(all, all[k]));
        orientation.push_back(k % 2 == 0 ? 1 : -1);
    }
    return Triangulation(d, std::move(facets), std::move(orientation));
}

Triangulation point() { return Triangulation(0, {Simplex{1}}, std::vector<int>{1}); }

Triangulation product_triangulation(const Triangulation& a, const Triangulation& b) {
    const int p = a.dimension(), q = b.dimension();
    const int nb = b.max_label();
    const bool oriented = a.oriented() && b.oriented();
    std::vector<Simplex> facets;
    std::vector<int> orientation;
    // Each lattice path is a sequence of p a-steps and q b-steps; enumerate as bitmasks.
    std::vector<std::vector<bool>> paths;
    for (unsigned mask = 0; mask < (1u << (p + q)); ++mask)
        if (std::popcount(mask) == p) {
            std::vector<bool> steps(p + q);
            for (int s = 0; s < p + q; ++s) steps[s] = (mask >> s) & 1;
            paths.push_back(std::move(steps));
        }
    for (std::size_t ia = 0; ia < a.facets().size(); ++ia) {
        const auto& fa = a.facets()[ia];
        for (std::size_t ib = 0; ib < b.facets().size(); ++ib) {
            const auto& fb = b.facets()[ib];
            for (const auto& steps : paths) {
                Simplex s;
                int i = 0, j = 0;
                s.push_back((fa[0] - 1) * nb + fb[0]);
                int inversions = 0, b_seen = 0;
                for (bool step_a : steps) {
                    if (step_a) {
                        ++i;
                        inversions += b_seen;
                    } else {
                        ++j;
                        ++b_seen;
                    }
                    s.push_back((fa[i] - 1) * nb + fb[j]);
                }
                facets.push_back(std::move(s));
                if (oriented)
                    orientation.push_back(a.orientation_of(ia) * b.orientation_of(ib) * (inversions % 2 ? -1 : 1));
            }
        }
    }
    if (oriented) return Triangulation(p + q, std::move(facets), std::move(orientation));
    return Triangulation(p + q, std::move(facets));
}

std::vector<int> betti_numbers(const Triangulation& t, unsigned long long p) {
    Field f(FieldSpec{p, 1});
    const int d = t.dimension();
    std::vector<std::vector<Simplex>> faces(d + 2);
    for (int k = 0; k <= d; ++k) faces[k] = t.faces_of_size(k + 1);
    // rank of boundary map C_k -> C_{k-1}
    std::vector<std::size_t> ranks(d + 2, 0);
    for (int k = 1; k <= d; ++k) {
        std::map<Simplex, std::size_t> lower;
        for (std::size_t i = 0; i < faces[k - 1].size(); ++i) lower[faces[k - 1][i]] = i;
        auto m = zeros(f, faces[k].size(), faces[k - 1].size());
        for (std::size_t i = 0; i < faces[k].size(); ++i)
            for (int v : faces[k][i]) {
                const Simplex g = remove_vertex(faces[k][i], v);
                m(i, lower.at(g)) = f.from_int(incidence(faces[k][i], g));
            }
        ranks[k] = matrix_rank(f, m);
    }
    std::vector<int> betti(d + 1);
    for (int k = 0; k <= d; ++k)
        betti[k] = static_cast<int>(faces[k].size() - ranks[k] - ranks[k + 1]);
    return betti;
}

}  // namespace polygonkit
