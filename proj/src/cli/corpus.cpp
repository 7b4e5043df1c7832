#include "polygonkit/cli/corpus.hpp"

#include <cstdlib>
#include <filesystem>

#ifndef POLYGONKIT_SOURCE_CORPUS
#define POLYGONKIT_SOURCE_CORPUS "corpus"
#endif

namespace polygonkit {

std::string corpus_dir() {
    if (const char* env = std::getenv("POLYGONKIT_CORPUS"); env && *env) return env;
    return POLYGONKIT_SOURCE_CORPUS;
}

std::string resolve_corpus_path(const std::string& file) {
    namespace fs = std::filesystem;
    if (fs::exists(file)) return file;
    const fs::path in_corpus = fs::path(corpus_dir()) / file;
    if (fs::exists(in_corpus)) return in_corpus.string();
    const fs::path by_name = fs::path(corpus_dir()) / fs::path(file).filename();
    if (fs::exists(by_name)) return by_name.string();
    throw CorpusError("triangulation not found: " + file + " (corpus directory " + corpus_dir() + ")");
}

Triangulation load_corpus(const std::string& file) {
    const auto path = resolve_corpus_path(file);
    try {
        return read_tri(path);
    } catch (const std::invalid_argument& e) {
        throw CorpusError(path + ": " + e.what());
    }
}

const std::vector<ManifoldRow>& manifold_rows() {
    static const std::vector<ManifoldRow> rows = {
        {"L(3,1)", "l31.tri", 3, 0, 0, false, ""},
        {"L(4,1)", "l41.tri", 3, 2, 0, false, ""},
        {"T^3", "t3.tri", 3, 6, 0, false, ""},
        {"S^1xS^2", "s1xs2.tri", 3, 2, 0, false, ""},
        {"S^1xRP^2", "s1xrp2.tri", 3, 4, 4, false, ""},
        {"RP^3", "rp3.tri", 3, 2, 0, false, ""},
        {"S^3xRP^2", "s3xrp2.tri", 5, 6, 0, true, ""},
        {"S^2xS^3", "s2xs3.tri", 5, 6, 0, true, ""},
        {"S^2xRP^3", "s2xrp3.tri", 5, 12, 0, true, ""},
        {"S^1xRP^4", "", 5, 12, 12, true, "no triangulation bundled"},
        {"S^1xRP^2xRP^2", "", 5, 30, 24, true, "product has 9000 facets; elimination passes 5.5 GB"},
        {"RP^2xRP^3", "rp2xrp3.tri", 5, 18, 12, true, ""},
        {"T^5", "", 5, 60, 0, true, "product has 29160 facets; elimination memory out of budget"},
    };
    return rows;
}

const std::vector<CohomologyRow>& cohomology_rows() {
    static const std::vector<CohomologyRow> rows = {
        {0, 3, 2, 1, false},   {0, 3, 3, 0, false},  {0, 3, 4, 0, false},  {2, 3, 2, 6, false},
        {2, 3, 3, 6, false},   {2, 3, 4, 7, false},  {3, 3, 3, 6, false},  {3, 3, 4, 6, false},
        {3, 3, 5, 0, true},    {3, 3, 6, 2, true},   {5, 3, 5, 6, true},   {5, 3, 6, 6, true},
        {7, 3, 7, 6, true},    {7, 3, 8, 6, true},   {11, 3, 11, 6, true}, {11, 3, 12, 6, true},
        {0, 4, 2, 0, false},   {2, 4, 2, 10, false}, {2, 4, 3, 8, true},   {2, 4, 4, 11, true},
        {3, 4, 3, 10, true},   {3, 4, 4, 8, true},   {3, 4, 5, 0, true},   {5, 4, 5, 10, true},
        {5, 4, 6, 8, true},
    };
    return rows;
}

const std::vector<CorpusProduct>& corpus_products() {
    static const std::vector<CorpusProduct> products = {
        {"t2.tri", "s1.tri", "s1.tri"},     {"t3.tri", "t2.tri", "s1.tri"},     {"s1xs2.tri", "s1.tri", "s2.tri"},
        {"s1xrp2.tri", "s1.tri", "rp2.tri"}, {"s2xs3.tri", "s2.tri", "s3.tri"},  {"s3xrp2.tri", "s3.tri", "rp2.tri"},
        {"s2xrp3.tri", "s2.tri", "rp3.tri"}, {"rp2xrp3.tri", "rp2.tri", "rp3.tri"},
    };
    return products;
}

const std::vector<CorpusBase>& corpus_bases() {
    static const std::vector<CorpusBase> bases = {
        {"s1.tri", "S^1", 1, 0, true},       {"s2.tri", "S^2", 2, 2, true},       {"s3.tri", "S^3", 3, 0, true},
        {"rp2.tri", "RP^2", 2, 1, false},    {"rp3.tri", "RP^3", 3, 0, true},     {"rp3_sd.tri", "RP^3", 3, 0, true},
        {"l31.tri", "L(3,1)", 3, 0, true},   {"l41.tri", "L(4,1)", 3, 0, true},   {"t2.tri", "T^2", 2, 0, true},
        {"t3.tri", "T^3", 3, 0, true},       {"s1xs2.tri", "S^1xS^2", 3, 0, true}, {"s1xrp2.tri", "S^1xRP^2", 3, 0, false},
        {"s2xs3.tri", "S^2xS^3", 5, 0, true}, {"s3xrp2.tri", "S^3xRP^2", 5, 0, false},
        {"s2xrp3.tri", "S^2xRP^3", 5, 0, true}, {"rp2xrp3.tri", "RP^2xRP^3", 5, 0, false},
    };
    return bases;
}

}  // namespace polygonkit
