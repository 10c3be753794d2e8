#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "manhattan/bench.hpp"
#include "manhattan/certificate.hpp"
#include "manhattan/errors.hpp"
#include "manhattan/generate.hpp"
#include "manhattan/render.hpp"
#include "manhattan/solver_greedy.hpp"
#include "manhattan/solver_reference.hpp"
#include "manhattan/text_io.hpp"
#include "manhattan/tiler.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace manhattan;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

uint64_t oracle_cell_bound() {
    if (const char* env = std::getenv("MANHATTAN_ORACLE_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed MANHATTAN_ORACLE_MAX_CELLS\n";
    }
    return kDefaultOracleCellBound;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Skyline load_skyline(const std::string& path) { return parse_skyline(read_input(path)); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int cmd_solve(const std::string& file) {
    const Skyline sk = load_skyline(file);
    const DominantInfo dom = dominant_columns(sk);
    const FlowNetwork net = build_network(sk);
    const MatchPlan plan = greedy_stack(net);
    json out;
    out["columns"] = sk.column_count();
    out["dominant_black"] = dom.blacks.size();
    out["dominant_white"] = dom.whites.size();
    out["flow_value"] = plan.value;
    out["uncovered"] = net.verts.size() - 2 * plan.value;
    json pairs = json::array();
    for (const auto& [i, j] : plan.pairs) pairs.push_back({net.verts[i].col, net.verts[j].col});
    out["pairs"] = std::move(pairs);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_tile(const std::string& file, const std::string& svg_path, bool ascii) {
    const Skyline sk = load_skyline(file);
    const Tiling tiling = build_tiling(sk);
    if (!svg_path.empty()) write_file(svg_path, render_svg(sk, &tiling));
    if (ascii) {
        std::cout << render_ascii(sk, &tiling);
        return kExitOk;
    }
    json out;
    json dominoes = json::array();
    for (const Domino& d : tiling.dominoes)
        dominoes.push_back({{"x", d.anchor.col},
                            {"y", d.anchor.row},
                            {"o", d.orient == Orient::Horizontal ? "H" : "V"}});
    out["dominoes"] = std::move(dominoes);
    json uncovered = json::array();
    for (const Cell& c : tiling.uncovered) uncovered.push_back({c.col, c.row});
    out["uncovered"] = std::move(uncovered);
    out["d"] = tiling.uncovered.size();
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_render(const std::string& file, const std::string& svg_path, bool ascii, bool tiled) {
    const Skyline sk = load_skyline(file);
    Tiling tiling;
    const Tiling* tp = nullptr;
    if (tiled) {
        tiling = build_tiling(sk);
        tp = &tiling;
    }
    if (!svg_path.empty()) write_file(svg_path, render_svg(sk, tp));
    if (ascii || svg_path.empty()) std::cout << render_ascii(sk, tp);
    return kExitOk;
}

struct VerifyOutcome {
    std::string label;
    std::vector<std::string> mismatches;
    std::string summary;
    std::string error;
};

VerifyOutcome verify_instance(const std::string& label, const Skyline& sk, uint64_t cell_bound) {
    VerifyOutcome out;
    out.label = label;
    try {
        const FlowNetwork net = build_network(sk);
        const MatchPlan fast = greedy_stack(net);
        const uint64_t d_fast = net.verts.size() - 2 * fast.value;

        const uint64_t cells = sk.cell_count();
        const bool in_bound = cells <= cell_bound;
        if (in_bound) {
            const MatchPlan slow = greedy_naive(net);
            if (slow.value != fast.value)
                out.mismatches.push_back("greedy_naive value " + std::to_string(slow.value) +
                                         " != greedy_stack value " + std::to_string(fast.value));
            const uint64_t ref = max_flow_reference(net);
            if (ref != fast.value)
                out.mismatches.push_back("max_flow_reference " + std::to_string(ref) +
                                         " != greedy_stack value " + std::to_string(fast.value));
            const uint64_t d_ref = d_oracle(sk, cell_bound);
            if (d_ref != d_fast)
                out.mismatches.push_back("d_oracle " + std::to_string(d_ref) + " != deficiency " +
                                         std::to_string(d_fast));
        }

        const Tiling tiling = build_tiling(sk);
        const ValidationReport rep = validate_tiling(sk, tiling);
        for (const std::string& v : rep.violations) out.mismatches.push_back("tiling: " + v);
        if (tiling.uncovered.size() != d_fast)
            out.mismatches.push_back("tiling uncovered " + std::to_string(tiling.uncovered.size()) +
                                     " != deficiency " + std::to_string(d_fast));

        const int64_t imb = imbalance(sk);
        if (d_fast % 2 != cells % 2) out.mismatches.push_back("deficiency parity differs from cell parity");
        if (static_cast<int64_t>(d_fast) < (imb < 0 ? -imb : imb))
            out.mismatches.push_back("deficiency below |imbalance|");

        std::ostringstream s;
        s << "cols=" << sk.column_count() << " cells=" << cells << " v=" << fast.value << " d=" << d_fast
          << (in_bound ? "" : " (oracles skipped: above cell bound)");
        out.summary = s.str();
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

int cmd_verify(const std::vector<std::string>& files, uint64_t random_count, uint64_t seed,
               uint32_t cols, uint32_t max_h, uint64_t max_cells, bool dump) {
    std::vector<std::pair<std::string, Skyline>> instances;
    for (const std::string& f : files) instances.emplace_back(f, load_skyline(f));
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        for (uint64_t i = 0; i < random_count; ++i) {
            const uint32_t n = cols > 0 ? 1 + static_cast<uint32_t>(rng() % cols) : 0;
            const InstanceSpec spec{n, max_h, Dist::Uniform, rng()};
            instances.emplace_back("random[" + std::to_string(i) + "]", generate(spec));
        }
    }
    if (instances.empty()) {
        std::cerr << "verify: no inputs (pass files or --random N)\n";
        return kExitInputError;
    }
    if (dump)
        for (const auto& [label, sk] : instances)
            std::cout << "# network of " << label << "\n" << dump_network(build_network(sk));

    std::vector<VerifyOutcome> outcomes(instances.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(instances.size()); ++i)
        outcomes[i] = verify_instance(instances[i].first, instances[i].second, max_cells);

    uint64_t mismatched = 0;
    for (const VerifyOutcome& o : outcomes) {
        if (!o.error.empty()) {
            ++mismatched;
            std::cout << o.label << ": ERROR " << o.error << '\n';
        } else if (o.mismatches.empty()) {
            std::cout << o.label << ": ok " << o.summary << '\n';
        } else {
            ++mismatched;
            std::cout << o.label << ": MISMATCH " << o.summary << '\n';
            for (const std::string& m : o.mismatches) std::cout << "  - " << m << '\n';
        }
    }
    std::cout << "verified " << outcomes.size() << " instance(s), " << mismatched << " mismatch(es)\n";
    return mismatched == 0 ? kExitOk : kExitMismatch;
}

int cmd_certify(const std::string& file, bool balance_first, uint64_t cell_bound) {
    Skyline sk = load_skyline(file);
    if (imbalance(sk) != 0) {
        if (!balance_first) {
            std::cerr << "certify: skyline is unbalanced (imbalance " << imbalance(sk)
                      << "); pass --balance to pad it first\n";
            return kExitInputError;
        }
        sk = balance(sk);
    }
    const CertificateBundle bundle = make_certificate(sk);
    const bool verified = verify_certificate(sk, bundle.cert, cell_bound);
    json out;
    out["cut_capacity"] = bundle.cut.capacity;
    out["bottlenecks"] = bundle.cert.bottlenecks_raw;
    out["adjusted"] = bundle.cert.bottlenecks_adj;
    json zones = json::array();
    for (const auto& [lo, hi] : bundle.cert.zones) zones.push_back({lo, hi});
    out["zones"] = std::move(zones);
    out["witness_black"] = bundle.cert.witness_black;
    out["witness_nbhd"] = bundle.cert.witness_nbhd;
    out["verified"] = verified;
    out["colors_inverted"] = bundle.cert.colors_inverted;
    out["warnings"] = bundle.cert.warnings;
    std::cout << out.dump(2) << '\n';
    return verified ? kExitOk : kExitMismatch;
}

int cmd_gen(uint32_t cols, uint32_t max_h, const std::string& dist, uint64_t seed) {
    const auto d = parse_dist(dist);
    if (!d) {
        std::cerr << "gen: unknown distribution '" << dist
                  << "' (expected uniform, monotone or bottleneck-chain)\n";
        return kExitInputError;
    }
    const Skyline sk = generate({cols, max_h, *d, seed});
    std::cout << "# cols=" << cols << " max-h=" << max_h << " dist=" << dist << " seed=" << seed << '\n'
              << format_skyline(sk);
    return kExitOk;
}

int cmd_bench(const std::vector<uint32_t>& sizes, uint32_t reps, uint32_t max_h, uint64_t seed,
              uint32_t inner) {
    std::cout << bench_csv(run_bench(sizes, reps, max_h, seed, inner));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal partial domino tilings of Manhattan polyominoes"};
    app.require_subcommand(1);

    std::string file;
    std::string svg_path;
    bool ascii = false;
    bool tiled = false;

    auto* solve = app.add_subcommand("solve", "flow value, matched pairs and deficiency");
    solve->add_option("file", file, "skyline file ('-' for stdin)")->required();

    auto* tile = app.add_subcommand("tile", "explicit optimal partial tiling");
    tile->add_option("file", file, "skyline file ('-' for stdin)")->required();
    tile->add_option("--svg", svg_path, "write an SVG rendering to this path");
    tile->add_flag("--ascii", ascii, "print an ASCII rendering instead of JSON");

    auto* render = app.add_subcommand("render", "draw a skyline");
    render->add_option("file", file, "skyline file ('-' for stdin)")->required();
    render->add_option("--svg", svg_path, "write an SVG rendering to this path");
    render->add_flag("--ascii", ascii, "print an ASCII rendering");
    render->add_flag("--tiled", tiled, "overlay the optimal partial tiling");

    std::vector<std::string> verify_files;
    uint64_t random_count = 0;
    uint64_t seed = 1;
    uint32_t gen_cols = 40;
    uint32_t max_h = 9;
    uint64_t max_cells = oracle_cell_bound();
    bool dump = false;
    auto* verify = app.add_subcommand("verify", "cross-check fast solver, oracles and tiling");
    verify->add_option("files", verify_files, "skyline files");
    verify->add_option("--random", random_count, "number of random instances");
    verify->add_option("--seed", seed, "random corpus seed");
    verify->add_option("--cols", gen_cols, "max columns of random instances");
    verify->add_option("--max-h", max_h, "max height of random instances");
    verify->add_option("--max-cells", max_cells, "oracle cell bound");
    verify->add_flag("--dump-network", dump, "print the flow network of each instance");

    bool balance_first = false;
    auto* certify = app.add_subcommand("certify", "Hall-witness certificate of the deficiency");
    certify->add_option("file", file, "skyline file ('-' for stdin)")->required();
    certify->add_flag("--balance", balance_first, "balance an unbalanced skyline before certifying");

    std::string dist = "uniform";
    auto* gen = app.add_subcommand("gen", "seeded random skyline");
    gen->add_option("--cols", gen_cols, "column count")->required();
    gen->add_option("--max-h", max_h, "maximum column height");
    gen->add_option("--dist", dist, "uniform, monotone or bottleneck-chain");
    gen->add_option("--seed", seed, "generator seed");

    std::vector<uint32_t> sizes;
    uint32_t reps = 5;
    uint32_t inner = 4;
    uint32_t bench_max_h = 1000;
    auto* bench = app.add_subcommand("bench", "timing table of build + solve");
    bench->add_option("--sizes", sizes, "column counts")->delimiter(',');
    bench->add_option("--reps", reps, "repetitions per size (median reported)");
    bench->add_option("--inner", inner, "solver runs per repetition");
    bench->add_option("--max-h", bench_max_h, "maximum column height");
    bench->add_option("--seed", seed, "instance seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(file);
        if (tile->parsed()) return cmd_tile(file, svg_path, ascii);
        if (render->parsed()) return cmd_render(file, svg_path, ascii, tiled);
        if (verify->parsed())
            return cmd_verify(verify_files, random_count, seed, gen_cols, max_h, max_cells, dump);
        if (certify->parsed()) return cmd_certify(file, balance_first, max_cells);
        if (gen->parsed()) return cmd_gen(gen_cols, max_h, dist, seed);
        if (bench->parsed()) return cmd_bench(sizes, reps, bench_max_h, seed, inner);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ScaleError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
