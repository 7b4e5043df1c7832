#include "polygonkit/simplicial/index_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace polygonkit {

IndexSets build_index_sets(int n) {
    if (n < 2) throw std::invalid_argument("index sets need n >= 2");
    IndexSets out;
    out.n = n;
    out.sets.assign(2 * n + 2, {});
    int pos = 0;
    for (int i = 1; i <= 2 * n + 1; i += 2)
        for (int j = i + 2; j <= 2 * n + 1; j += 2) {
            ++pos;
            out.sets[i].push_back(pos);
            out.sets[j].push_back(pos);
        }
    pos = 0;
    for (int i = 2; i <= 2 * n; i += 2)
        for (int j = i; j <= 2 * n; j += 2) {
            ++pos;
            out.sets[i].push_back(pos);
            if (j != i) out.sets[j].push_back(pos);
        }
    for (auto& s : out.sets) std::sort(s.begin(), s.end());
    return out;
}

}  // namespace polygonkit
