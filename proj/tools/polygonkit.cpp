#include "CLI11.hpp"
#include "json.hpp"

#include "polygonkit/cli/checks.hpp"
#include "polygonkit/cli/corpus.hpp"
#include "polygonkit/cohomology/cochain.hpp"
#include "polygonkit/exactfield/generic_point.hpp"
#include "polygonkit/invariant/invariant.hpp"
#include "polygonkit/polygonrel/relation.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace polygonkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kIoError = 1;
constexpr int kValidationError = 2;
constexpr int kCheckFailure = 3;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 3;
    std::optional<std::int64_t> characteristic;
    std::int64_t extension_degree = 0;
    unsigned degree = 2;
    std::vector<std::uint64_t> seeds;
    std::string triangulation_path;
    std::string cocycle;
    std::string flavor = "polynomial";
    int moves = 5;
    int kappa = 0;
    bool heavy = false;
    std::string output_format = "tsv";
    int threads = 1;
    std::string out_path;
    std::vector<std::string> positional;
};

std::vector<std::uint64_t> parse_seeds(const std::vector<std::uint64_t>& given, std::vector<std::uint64_t> fallback) {
    return given.empty() ? fallback : given;
}

FieldSpec field_of(const RunConfig& c, std::int64_t default_char) {
    const auto p = c.characteristic.value_or(default_char);
    std::int64_t k = c.extension_degree;
    if (k == 0) k = p == 0 ? 1 : default_extension_degree(static_cast<std::uint64_t>(p));
    try {
        return make_field(p, k);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

std::string seeds_string(const std::vector<std::uint64_t>& seeds) {
    std::string s;
    for (std::size_t i = 0; i < seeds.size(); ++i) s += (i ? "," : "") + std::to_string(seeds[i]);
    return s;
}

/// Output sink: stdout or --out; audit log on stderr.
class Run {
public:
    Run(std::string command, const RunConfig& config) : command_(std::move(command)), config_(config) {
        if (!config.out_path.empty()) {
            file_.open(config.out_path);
            if (!file_) throw CorpusError("cannot write " + config.out_path);
        }
    }
    std::ostream& out() { return config_.out_path.empty() ? std::cout : file_; }
    bool json() const { return config_.output_format == "json"; }
    void emit(const nlohmann::ordered_json& j) { out() << j.dump(2) << "\n"; }
    void log(const std::string& field, const std::vector<std::uint64_t>& seeds, unsigned resamples) {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "[polygonkit] command=" << command_ << " field=" << field << " seeds=" << seeds_string(seeds)
             << " resamples=" << resamples << " threads=" << config_.threads << " wall=" << wall << "s";
        std::cerr << line.str() << std::endl;
    }

private:
    std::string command_;
    const RunConfig& config_;
    std::ofstream file_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json base_json(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

std::string relation_name(int n) {
    switch (n) {
        case 2: return "pentagon";
        case 3: return "heptagon";
        case 4: return "enneagon";
        case 5: return "hendecagon";
        default: return std::to_string(2 * n + 1) + "-gon";
    }
}

void require_n(int n) {
    if (n < 2 || n > 8) throw ValidationError("--n must be between 2 and 8");
}

PrimalParameters primal(const FieldSpec& spec, int n, std::uint64_t seed, unsigned& resamples) {
    return with_resampling(spec, seed, [&](const GenericPoint& p) { return PrimalParameters::sample(p, n); }, &resamples);
}

int cmd_verify(const RunConfig& c) {
    require_n(c.n);
    const auto spec = field_of(c, 2);
    const auto seeds = parse_seeds(c.seeds, {1, 2, 3});
    Run run("verify", c);
    unsigned resamples = 0;
    std::vector<bool> per_seed;
    for (auto seed : seeds) {
        const auto check = with_resampling(
            spec, seed, [&](const GenericPoint& p) { return verify_odd_gon(PrimalParameters::sample(p, c.n)); },
            &resamples);
        per_seed.push_back(check.holds);
    }
    const bool pass = std::all_of(per_seed.begin(), per_seed.end(), [](bool b) { return b; });
    if (run.json()) {
        auto j = base_json("verify");
        j["relation"] = relation_name(c.n);
        j["n"] = c.n;
        j["field"] = to_string(spec);
        j["seeds"] = seeds;
        j["per_seed"] = per_seed;
        j["pass"] = pass;
        run.emit(j);
    } else {
        std::size_t ok = std::count(per_seed.begin(), per_seed.end(), true);
        run.out() << relation_name(c.n) << " relation: " << (pass ? "PASS" : "FAIL") << " (";
        if (pass)
            run.out() << seeds.size() << (seeds.size() == 1 ? " seed" : " seeds");
        else
            run.out() << ok << "/" << seeds.size() << " seeds";
        run.out() << ")\n";
    }
    run.log(to_string(spec), seeds, resamples);
    return pass ? 0 : kCheckFailure;
}

int cmd_full_polygon(const RunConfig& c) {
    require_n(c.n);
    if (c.kappa < 0 || c.kappa > 2 * c.n) throw ValidationError("--kappa must be between 1 and 2n (0 for all)");
    const auto spec = field_of(c, 2);
    const auto seeds = parse_seeds(c.seeds, {1, 2, 3});
    Run run("full-polygon", c);
    unsigned resamples = 0;
    bool all = true;
    json rows = json::array();
    if (!run.json()) run.out() << "# kappa\tmove\tseeds_passed\tsuperfluous\tsuperfluous_identity\tresult\n";
    for (int kappa = c.kappa ? c.kappa : 1; kappa <= (c.kappa ? c.kappa : 2 * c.n); ++kappa) {
        std::size_t ok = 0, superfluous = 0;
        bool identity = true;
        for (auto seed : seeds) {
            const auto check = with_resampling(
                spec, seed,
                [&](const GenericPoint& p) { return full_polygon_relation(PrimalParameters::sample(p, c.n), kappa); },
                &resamples);
            if (check.holds) ++ok;
            superfluous = check.superfluous.size();
            identity = identity && check.superfluous_identity;
        }
        const bool pass = ok == seeds.size() && identity;
        all = all && pass;
        const std::string move = std::to_string(kappa) + "-" + std::to_string(2 * c.n + 1 - kappa);
        if (run.json()) {
            rows.push_back({{"kappa", kappa}, {"move", move}, {"seeds_passed", ok}, {"superfluous", superfluous},
                            {"superfluous_identity", identity}, {"pass", pass}});
        } else {
            run.out() << kappa << "\t" << move << "\t" << ok << "/" << seeds.size() << "\t" << superfluous << "\t"
                      << (identity ? "yes" : "no") << "\t" << (pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (run.json()) {
        auto j = base_json("full-polygon");
        j["n"] = c.n;
        j["field"] = to_string(spec);
        j["seeds"] = seeds;
        j["moves"] = rows;
        j["pass"] = all;
        run.emit(j);
    }
    run.log(to_string(spec), seeds, resamples);
    return all ? 0 : kCheckFailure;
}

CochainFlavor parse_flavor(const std::string& s) {
    if (s == "polynomial") return CochainFlavor::kPolynomial;
    if (s == "bipolynomial") return CochainFlavor::kBipolynomial;
    if (s == "symmetric-bilinear") return CochainFlavor::kSymmetricBilinear;
    throw ValidationError("unknown flavor " + s);
}

int cmd_cohomology(const RunConfig& c) {
    require_n(c.n);
    if (c.degree < 1) throw ValidationError("--degree must be positive");
    const auto spec = field_of(c, 0);
    const auto seeds = parse_seeds(c.seeds, {1, 2});
    Run run("cohomology", c);
    const auto r = cohomology_dimension(spec, c.n, c.degree, seeds, parse_flavor(c.flavor));
    if (run.json()) {
        auto j = base_json("cohomology");
        j["characteristic"] = spec.characteristic;
        j["field"] = to_string(spec);
        j["n"] = c.n;
        j["degree"] = c.degree;
        j["flavor"] = to_string(r.flavor);
        j["dims"] = {r.window.dims[0], r.window.dims[1], r.window.dims[2]};
        j["ranks"] = {r.window.ranks[0], r.window.ranks[1]};
        j["dim"] = r.window.middle();
        j["seeds"] = seeds;
        j["seeds_agree"] = r.seeds_agree;
        run.emit(j);
    } else {
        run.out() << "# char\tn\tdegree\tdim\n"
                  << spec.characteristic << "\t" << c.n << "\t" << c.degree << "\t" << r.window.middle() << "\n";
    }
    run.log(to_string(spec), seeds, r.resamples);
    return r.seeds_agree ? 0 : kCheckFailure;
}

int cmd_cocycle_check(const RunConfig& c) {
    require_n(c.n);
    const std::string name = c.cocycle.empty() ? "bilinear" : c.cocycle;
    std::int64_t default_char = 0;
    if (name != "bilinear" && name != "hepta5") default_char = static_cast<std::int64_t>(CocycleKind::parse(name).p);
    const auto spec = field_of(c, default_char);
    const auto seeds = parse_seeds(c.seeds, {1});
    Run run("cocycle-check", c);
    unsigned resamples = 0;
    bool all = true;
    json per_seed = json::array();
    if (!run.json()) run.out() << "# seed\tcheck\tresult\tdetail\n";
    for (auto seed : seeds) {
        const auto r = cocycle_check(name, spec, c.n, seed);
        resamples += r.resamples;
        all = all && r.pass();
        json checks = json::array();
        for (const auto& ch : r.checks) {
            if (run.json())
                checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
            else
                run.out() << seed << "\t" << ch.name << "\t" << (ch.pass ? "PASS" : "FAIL") << "\t" << ch.detail << "\n";
        }
        per_seed.push_back({{"seed", seed}, {"checks", checks}, {"pass", r.pass()}});
    }
    if (run.json()) {
        auto j = base_json("cocycle-check");
        j["cocycle"] = name;
        j["field"] = to_string(spec);
        j["n"] = c.n;
        j["runs"] = per_seed;
        j["pass"] = all;
        run.emit(j);
    }
    run.log(to_string(spec), seeds, resamples);
    return all ? 0 : kCheckFailure;
}

CocycleKind kind_for(const RunConfig& c, const FieldSpec& spec) {
    if (!c.cocycle.empty()) {
        if (c.cocycle == "hepta5" || c.cocycle == "bilinear")
            throw ValidationError("cocycle " + c.cocycle + " is not available for manifold invariants");
        return CocycleKind::parse(c.cocycle);
    }
    if (spec.characteristic == 0) throw ValidationError("invariants need a positive characteristic");
    return {spec.characteristic, 1};
}

Triangulation manifold_input(const RunConfig& c) {
    if (c.triangulation_path.empty()) throw ValidationError("--tri is required");
    return load_corpus(c.triangulation_path);
}

json form_json(const Field& f, const MatrixOf<Field>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(f.str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

int cmd_invariant(const RunConfig& c) {
    const auto t = manifold_input(c);
    const auto spec = field_of(c, 2);
    const auto kind = kind_for(c, spec);
    const auto seeds = parse_seeds(c.seeds, {1, 2, 3});
    Run run("invariant", c);
    const auto r = evaluate_invariant(spec, t, kind, seeds, c.triangulation_path);
    const bool pass = r.seeds_agree && r.bisemilinear;
    if (run.json()) {
        auto j = base_json("invariant");
        j["manifold"] = c.triangulation_path;
        j["field"] = to_string(spec);
        j["cocycle_kind"] = r.cocycle_kind;
        j["dim_v"] = r.dim_v;
        j["rank"] = r.rank;
        j["form_matrix"] = form_json(Field(spec), r.form_matrix);
        j["bisemilinear"] = r.bisemilinear;
        j["offending"] = r.offending;
        j["seeds_used"] = r.seeds_used;
        j["dims_per_seed"] = r.dims_per_seed;
        j["ranks_per_seed"] = r.ranks_per_seed;
        j["seeds_agree"] = r.seeds_agree;
        j["resamples"] = r.resamples;
        run.emit(j);
    } else {
        run.out() << "# manifold\tfield\tcocycle\tdim_v\trank\n"
                  << c.triangulation_path << "\t" << to_string(spec) << "\t" << r.cocycle_kind << "\t" << r.dim_v << "\t"
                  << r.rank << "\n";
        for (const auto& o : r.offending) run.out() << "# surviving monomial outside the bi-semilinear shape: " << o << "\n";
        if (!r.seeds_agree) run.out() << "# seeds disagree\n";
    }
    run.log(to_string(spec), seeds, r.resamples);
    return pass ? 0 : kCheckFailure;
}

int cmd_moves(const RunConfig& c) {
    const auto t = manifold_input(c);
    const auto spec = field_of(c, 2);
    const auto kind = kind_for(c, spec);
    const auto seeds = parse_seeds(c.seeds, {1});
    if (c.moves < 0) throw ValidationError("--moves must be non-negative");
    Run run("moves", c);
    unsigned resamples = 0;
    bool all = true;
    json runs = json::array();
    if (!run.json()) run.out() << "# seed\tstep\tmove\tfacets\tdim_v\trank\n";
    for (auto seed : seeds) {
        const auto r = check_pachner_invariance(spec, t, kind, c.moves, seed);
        resamples += r.resamples;
        all = all && r.unchanged;
        json steps = json::array();
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
            const auto& s = r.steps[i];
            if (run.json())
                steps.push_back({{"move", s.move}, {"facets", s.facets}, {"dim_v", s.dim_v}, {"rank", s.rank}});
            else
                run.out() << seed << "\t" << i << "\t" << (s.move.empty() ? "-" : s.move) << "\t" << s.facets << "\t"
                          << s.dim_v << "\t" << s.rank << "\n";
        }
        runs.push_back({{"seed", seed}, {"steps", steps}, {"unchanged", r.unchanged}});
    }
    if (run.json()) {
        auto j = base_json("moves");
        j["manifold"] = c.triangulation_path;
        j["field"] = to_string(spec);
        j["cocycle_kind"] = kind.name();
        j["runs"] = runs;
        j["unchanged"] = all;
        run.emit(j);
    } else {
        run.out() << "# invariant " << (all ? "unchanged" : "CHANGED") << "\n";
    }
    run.log(to_string(spec), seeds, resamples);
    return all ? 0 : kCheckFailure;
}

int cmd_corpus(const RunConfig& c) {
    Run run("corpus", c);
    bool all = true;
    json rows = json::array();
    std::map<std::string, Triangulation> loaded;
    for (const auto& b : corpus_bases()) loaded.emplace(b.file, load_corpus(b.file));
    if (!run.json()) run.out() << "# file\tmanifold\tdim\tvertices\tfacets\teuler\torientable\tstatus\n";
    for (const auto& b : corpus_bases()) {
        const auto& t = loaded.at(b.file);
        std::vector<std::string> problems;
        if (!t.is_closed_pseudomanifold()) problems.push_back("not a closed pseudomanifold");
        if (t.dimension() != b.dimension) problems.push_back("dimension " + std::to_string(t.dimension()));
        if (t.euler_characteristic() != b.euler) problems.push_back("euler " + std::to_string(t.euler_characteristic()));
        const bool orientable = t.find_orientation().has_value();
        if (orientable != b.orientable) problems.push_back(orientable ? "orientable" : "not orientable");
        if (t.oriented() && !t.orientation_consistent()) problems.push_back("inconsistent orientation");
        for (const auto& p : corpus_products())
            if (p.file == b.file && !(product_triangulation(loaded.at(p.left), loaded.at(p.right)) == t))
                problems.push_back("differs from product " + p.left + " x " + p.right);
        std::string status = "ok";
        if (!problems.empty()) {
            status.clear();
            for (const auto& p : problems) status += (status.empty() ? "" : "; ") + p;
            all = false;
        }
        if (run.json())
            rows.push_back({{"file", b.file}, {"manifold", b.label}, {"dimension", t.dimension()},
                            {"vertices", t.vertex_count()}, {"facets", t.facets().size()},
                            {"euler", t.euler_characteristic()}, {"orientable", orientable}, {"status", status}});
        else
            run.out() << b.file << "\t" << b.label << "\t" << t.dimension() << "\t" << t.vertex_count() << "\t"
                      << t.facets().size() << "\t" << t.euler_characteristic() << "\t" << (orientable ? "yes" : "no")
                      << "\t" << status << "\n";
    }
    if (run.json()) {
        auto j = base_json("corpus");
        j["directory"] = corpus_dir();
        j["entries"] = rows;
        j["pass"] = all;
        run.emit(j);
    }
    run.log("-", {}, 0);
    return all ? 0 : kCheckFailure;
}

int cmd_product(const RunConfig& c) {
    if (c.positional.size() != 2) throw ValidationError("product needs two triangulations");
    const auto a = load_corpus(c.positional[0]), b = load_corpus(c.positional[1]);
    Run run("product", c);
    const auto p = product_triangulation(a, b);
    write_tri(run.out(), p,
              std::filesystem::path(c.positional[0]).filename().string() + " x " +
                  std::filesystem::path(c.positional[1]).filename().string());
    run.log("-", {}, 0);
    return 0;
}

int emit_t_hn(const RunConfig& c, Run& run) {
    const auto seeds = parse_seeds(c.seeds, {1, 2});
    unsigned resamples = 0;
    bool all = true;
    json rows = json::array();
    if (!run.json()) run.out() << "# char\tn\tdegree\tdim\texpected\tstatus\n";
    for (const auto& row : cohomology_rows()) {
        const FieldSpec spec{row.characteristic, row.characteristic == 0 ? 1 : default_extension_degree(row.characteristic)};
        std::string status;
        std::optional<std::size_t> dim;
        if (row.heavy && !c.heavy) {
            status = "skipped (heavy)";
        } else {
            const auto r = cohomology_dimension(spec, row.n, row.degree, seeds);
            resamples += r.resamples;
            dim = r.window.middle();
            const bool ok = r.seeds_agree && *dim == row.dim;
            status = ok ? "match" : (r.seeds_agree ? "MISMATCH" : "SEEDS DISAGREE");
            all = all && ok;
        }
        if (run.json()) {
            json j{{"characteristic", row.characteristic}, {"n", row.n}, {"degree", row.degree}};
            j["dim"] = dim ? json(*dim) : json(nullptr);
            j["expected"] = row.dim;
            j["status"] = status;
            rows.push_back(j);
        } else {
            run.out() << row.characteristic << "\t" << row.n << "\t" << row.degree << "\t"
                      << (dim ? std::to_string(*dim) : "-") << "\t" << row.dim << "\t" << status << "\n";
        }
    }
    if (run.json()) {
        auto j = base_json("emit_tables");
        j["table"] = "t_hn";
        j["rows"] = rows;
        j["pass"] = all;
        run.emit(j);
    }
    run.log("per row", seeds, resamples);
    return all ? 0 : kCheckFailure;
}

int emit_t_hm(const RunConfig& c, Run& run) {
    const auto seeds = parse_seeds(c.seeds, {1, 2, 3});
    const FieldSpec spec{2, default_extension_degree(2)};
    unsigned resamples = 0;
    bool all = true;
    json rows = json::array();
    if (!run.json()) run.out() << "# manifold\tdim_v\trank\texpected_dim_v\texpected_rank\tstatus\n";
    for (const auto& row : manifold_rows()) {
        std::string status;
        std::optional<std::pair<std::size_t, std::size_t>> got;
        if (row.heavy && !c.heavy) {
            status = "skipped (heavy)";
        } else if (row.file.empty()) {
            status = "skipped (" + row.note + ")";
        } else {
            const auto r = evaluate_invariant(spec, load_corpus(row.file), CocycleKind{2, 1}, seeds, row.label);
            resamples += r.resamples;
            got = {r.dim_v, r.rank};
            const bool ok = r.seeds_agree && r.bisemilinear && r.dim_v == row.dim_v && r.rank == row.rank;
            status = ok ? "match" : "MISMATCH";
            all = all && ok;
        }
        if (run.json()) {
            json j{{"manifold", row.label}, {"file", row.file}};
            j["dim_v"] = got ? json(got->first) : json(nullptr);
            j["rank"] = got ? json(got->second) : json(nullptr);
            j["expected_dim_v"] = row.dim_v;
            j["expected_rank"] = row.rank;
            j["status"] = status;
            rows.push_back(j);
        } else {
            run.out() << row.label << "\t" << (got ? std::to_string(got->first) : "-") << "\t"
                      << (got ? std::to_string(got->second) : "-") << "\t" << row.dim_v << "\t" << row.rank << "\t"
                      << status << "\n";
        }
    }
    if (run.json()) {
        auto j = base_json("emit_tables");
        j["table"] = "t_hm";
        j["field"] = to_string(spec);
        j["cocycle_kind"] = "h2";
        j["rows"] = rows;
        j["pass"] = all;
        run.emit(j);
    }
    run.log(to_string(spec), seeds, resamples);
    return all ? 0 : kCheckFailure;
}

int cmd_emit_tables(const RunConfig& c) {
    if (c.positional.size() != 1) throw ValidationError("emit_tables needs one table name (t_hn or t_hm)");
    Run run("emit_tables", c);
    if (c.positional[0] == "t_hn") return emit_t_hn(c, run);
    if (c.positional[0] == "t_hm") return emit_t_hm(c, run);
    throw ValidationError("unknown table " + c.positional[0]);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygonkit: polygon relations, cohomology of P-simplices and manifold invariants"};
    app.require_subcommand(1);
    RunConfig c;
    app.set_config("--config", "", "key=value file with flag values");
    app.add_option("--n", c.n, "half of the P-simplex dimension (d-simplices have dimension 2n-1)");
    app.add_option("--char", c.characteristic, "field characteristic (0 = Q via a large prime)");
    app.add_option("--ext", c.extension_degree, "extension degree (0 = default for generic points)");
    app.add_option("--degree", c.degree, "homogeneous polynomial degree of cochains");
    app.add_option("--seeds", c.seeds, "comma-separated seeds")->delimiter(',');
    app.add_option("--tri", c.triangulation_path, "triangulation (.tri), looked up in the corpus if not a path");
    app.add_option("--cocycle", c.cocycle, "h2, h3, general:p:k, hepta5 or bilinear");
    app.add_option("--flavor", c.flavor, "cochain flavor")
        ->check(CLI::IsMember({"polynomial", "bipolynomial", "symmetric-bilinear"}));
    app.add_option("--moves", c.moves, "number of random Pachner moves");
    app.add_option("--kappa", c.kappa, "single move kappa for full-polygon (0 = all)");
    app.add_flag("--heavy", c.heavy, "include heavy table rows");
    app.add_option("--format", c.output_format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--threads", c.threads, "worker cap (computations are sequential)")->check(CLI::PositiveNumber);
    app.add_option("--out", c.out_path, "write the report to a file");

    std::map<std::string, std::function<int(const RunConfig&)>> commands = {
        {"verify", cmd_verify},           {"full-polygon", cmd_full_polygon},
        {"cohomology", cmd_cohomology},   {"cocycle-check", cmd_cocycle_check},
        {"invariant", cmd_invariant},     {"moves", cmd_moves},
        {"corpus", cmd_corpus},           {"product", cmd_product},
        {"emit_tables", cmd_emit_tables},
    };
    const std::map<std::string, std::string> help = {
        {"verify", "check the odd-gon relation at each seed"},
        {"full-polygon", "check the relation of every Pachner move kappa -> 2n+1-kappa"},
        {"cohomology", "dimension of the middle cohomology of the P-simplex"},
        {"cocycle-check", "cocycle and nontriviality checks on the P-simplex"},
        {"invariant", "dim V and rank B of a triangulated manifold"},
        {"moves", "recompute the invariant along random Pachner moves"},
        {"corpus", "verify the bundled triangulations"},
        {"product", "product triangulation of two .tri files"},
        {"emit_tables", "regenerate t_hn or t_hm as a table"},
    };
    for (const auto& [name, fn] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name))->fallthrough();
        if (name == "product" || name == "emit_tables") sub->add_option("args", c.positional, "inputs");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kValidationError;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return commands.at(name)(c);
    } catch (const CorpusError& e) {
        std::cerr << "polygonkit: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "polygonkit: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        std::cerr << "polygonkit: " << e.what() << "\n";
        return kCheckFailure;
    }
}
