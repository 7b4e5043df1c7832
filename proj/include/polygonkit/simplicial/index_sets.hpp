#pragma once

#include <vector>

namespace polygonkit {

/// Positions 1..n(n+1)/2 on which the embedded operator of each d-simplex q acts.
struct IndexSets {
    int n = 0;
    /// sets[q] for q = 1..2n+1 (sets[0] unused), each increasing.
    std::vector<std::vector<int>> sets;

    int size() const { return n * (n + 1) / 2; }
    const std::vector<int>& of(int q) const { return sets.at(q); }
};

/// Odd q: positions of the pairs containing q in the lexicographic list of odd pairs i < j.
/// Even q: the same in the list of even pairs i <= j. Throws std::invalid_argument for n < 2.
IndexSets build_index_sets(int n);

}  // namespace polygonkit
