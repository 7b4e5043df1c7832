#pragma once

#include <string>
#include <vector>

namespace polygonkit {

/// Strictly increasing list of positive vertex labels.
using Simplex = std::vector<int>;

/// Sorts, and checks labels are positive and distinct. Throws std::invalid_argument otherwise.
Simplex make_simplex(std::vector<int> vertices);

int simplex_dimension(const Simplex& s);
bool contains(const Simplex& outer, const Simplex& inner);
bool contains_vertex(const Simplex& s, int v);
/// 0-based position of v in s, or -1.
int position_of(const Simplex& s, int v);

Simplex remove_vertex(const Simplex& s, int v);
Simplex remove_vertices(const Simplex& s, const Simplex& vs);
Simplex unite(const Simplex& a, const Simplex& b);
Simplex complement_in(const Simplex& ambient, const Simplex& part);

/// All faces of s with `k` vertices, in lexicographic order.
std::vector<Simplex> subsets_of_size(const Simplex& s, int k);

/// Incidence number [s : f] of a codimension-one face f with the increasing
/// orientations of both: (-1)^j where j is the 0-based position of the omitted vertex.
int incidence(const Simplex& s, const Simplex& face);

/// Sign of the permutation sorting `labels` (0 if a label repeats).
int permutation_sign(const std::vector<int>& labels);

/// Simplex {1, ..., m}.
Simplex range_simplex(int m);

std::string str(const Simplex& s);

/// A simplex inside the P-simplex {1..2n+1} written by its omitted vertices.
struct ComplementalFace {
    Simplex ambient;
    Simplex omitted;  // one vertex: a d-simplex "q"; two: a face "qr"

    ComplementalFace(Simplex ambient, Simplex omitted);
    Simplex simplex() const { return complement_in(ambient, omitted); }
    bool is_d_simplex() const { return omitted.size() == 1; }
};

}  // namespace polygonkit
