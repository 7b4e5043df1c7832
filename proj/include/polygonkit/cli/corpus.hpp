#pragma once

#include "polygonkit/simplicial/triangulation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polygonkit {

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// $POLYGONKIT_CORPUS if set, otherwise the corpus directory of the source tree.
std::string corpus_dir();

/// Paths that exist as given are used directly; others are looked up in corpus_dir().
std::string resolve_corpus_path(const std::string& file);

/// Throws CorpusError if the file is missing or malformed.
Triangulation load_corpus(const std::string& file);

/// A row of the invariant table for char 2 and the cocycle h2.
struct ManifoldRow {
    std::string label;
    std::string file;  // empty when no triangulation is bundled
    int dimension = 3;
    std::size_t dim_v = 0;
    std::size_t rank = 0;
    bool heavy = false;
    std::string note;
};

const std::vector<ManifoldRow>& manifold_rows();

/// A row of the middle-cohomology table for the P-simplex.
struct CohomologyRow {
    std::uint64_t characteristic = 0;
    int n = 3;
    unsigned degree = 2;
    std::size_t dim = 0;
    bool heavy = false;
};

const std::vector<CohomologyRow>& cohomology_rows();

/// Product triangulations checked into the corpus; `product left right` regenerates each.
struct CorpusProduct {
    std::string file;
    std::string left;
    std::string right;
};

const std::vector<CorpusProduct>& corpus_products();

/// Bundled base triangulations, with their expected topology.
struct CorpusBase {
    std::string file;
    std::string label;
    int dimension = 0;
    long euler = 0;
    bool orientable = true;
};

const std::vector<CorpusBase>& corpus_bases();

}  // namespace polygonkit
