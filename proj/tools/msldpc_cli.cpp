// msldpc: construct, analyze, export and channel-simulate binary cyclic
// LDPC codes found by idempotent search in the finite-field spectral
// domain.
//
// Subcommands: cosets, factor, search, analyze, export-alist, simulate.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "msldpc/alist.hpp"
#include "msldpc/catalog.hpp"
#include "msldpc/channel.hpp"
#include "msldpc/code_search.hpp"
#include "msldpc/cyclic_code.hpp"
#include "msldpc/mattson_solomon.hpp"

using nlohmann::json;
using namespace msldpc;

namespace {

struct Pipeline {
    FieldContext ctx;
    FactorSet fs;
};

Pipeline make_pipeline(uint32_t n, bool with_idempotents) {
    Pipeline p{FieldContext::build(n), {}};
    p.fs = factorize(p.ctx);
    if (with_idempotents) attach_primitive_idempotents(p.fs, p.ctx);
    return p;
}

int cmd_cosets(uint32_t n, bool as_json) {
    auto cs = cosets(n);
    if (as_json) {
        json j;
        j["n"] = n;
        auto& arr = j["cosets"] = json::array();
        for (const auto& c : cs) arr.push_back(c.members);
        std::cout << j.dump() << '\n';
        return 0;
    }
    for (const auto& c : cs) {
        std::cout << '{';
        for (size_t i = 0; i < c.members.size(); ++i) std::cout << (i ? "," : "") << c.members[i];
        std::cout << "}\n";
    }
    return 0;
}

int cmd_factor(uint32_t n, bool as_json) {
    Pipeline p = make_pipeline(n, false);
    if (as_json) {
        json j;
        j["n"] = n;
        j["t"] = p.fs.count();
        auto& arr = j["factors"] = json::array();
        for (size_t i = 0; i < p.fs.count(); ++i) {
            const auto& e = p.fs.entries[i];
            arr.push_back({{"i", i + 1},
                           {"leader", e.coset.leader},
                           {"degree", e.f.degree()},
                           {"f", poly_to_string(e.f, 'z')}});
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    for (size_t i = 0; i < p.fs.count(); ++i) {
        const auto& e = p.fs.entries[i];
        std::cout << i + 1 << ", " << e.coset.leader << ", " << e.f.degree() << ", "
                  << poly_to_string(e.f, 'z') << '\n';
    }
    return 0;
}

int cmd_search(const SearchConfig& cfg, const std::string& catalog_path) {
    Pipeline p = make_pipeline(cfg.n, true);
    SearchResult res = code_search(cfg, p.fs, p.ctx);
    for (const auto& rec : res.records) std::cout << record_to_json(rec).dump() << '\n';

    json summary;
    summary["nodes"] = res.nodes;
    summary["records"] = res.records.size();
    summary["truncated"] = res.truncated;
    if (!catalog_path.empty()) {
        auto added = catalog_append(catalog_path, res.records, cfg);
        summary["catalog_added"] = added.added;
        summary["catalog_skipped"] = added.skipped;
    }
    std::cerr << summary.dump() << '\n';
    return 0;
}

int cmd_analyze(uint32_t n, const std::string& u_text, uint64_t dmin_budget, bool as_json) {
    BinaryPoly u = poly_parse(u_text);
    if (!u.reduced_mod(n)) throw LengthMismatch("polynomial exponents must be below n");
    Pipeline p = make_pipeline(n, false);
    CyclicCode code = build_code(u, n);  // rejects k = 0
    bool idem = is_idempotent(u, n);

    uint32_t bch = bch_bound_from_values(u, p.ctx);
    uint32_t run = bch - 1;
    bool orth = is_orthogonal(u, n);

    std::optional<uint32_t> dmin;
    if (code.k < 63 && (uint64_t(1) << code.k) <= dmin_budget) dmin = min_distance_exact(code, dmin_budget);

    json j;
    j["n"] = n;
    j["k"] = code.k;
    j["u"] = poly_to_string(u);
    j["weight"] = u.weight();
    j["idempotent"] = idem;
    j["g"] = poly_to_string(code.g);
    j["h"] = poly_to_string(code.h);
    j["r_theta"] = run;
    j["bch_bound"] = bch;
    j["orthogonal"] = orth;
    if (idem) j["theta"] = poly_to_string(ms_transform(u, p.ctx), 'z');
    if (dmin)
        j["dmin"] = *dmin;
    else
        j["dmin_lower_bound"] = bch;

    if (as_json) {
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "n: " << n << "\nk: " << code.k << "\nu: " << j["u"].get<std::string>()
              << "\nweight: " << u.weight() << "\nidempotent: " << (idem ? "true" : "false")
              << "\ng: " << j["g"].get<std::string>() << "\nh: " << j["h"].get<std::string>()
              << "\nr_theta: " << run << "\nbch_bound: " << bch
              << "\northogonal: " << (orth ? "true" : "false") << '\n';
    if (idem) std::cout << "theta: " << j["theta"].get<std::string>() << '\n';
    if (dmin)
        std::cout << "dmin: " << *dmin << '\n';
    else
        std::cout << "dmin: >= " << bch << " (enumeration over budget)\n";
    return 0;
}

// Pulls (n, u) out of a search-record JSON line.
void unpack_record(const std::string& record_json, uint32_t& n, std::string& u_text) {
    auto j = json::parse(record_json, nullptr, false);
    if (j.is_discarded() || !j.contains("n") || !j.contains("u"))
        throw ParseError("record must be a JSON object with \"n\" and \"u\"");
    n = j["n"].get<uint32_t>();
    u_text = j["u"].get<std::string>();
}

int cmd_export_alist(uint32_t n, const std::string& u_text, bool reduced, const std::string& out_path) {
    BinaryPoly u = poly_parse(u_text);
    CyclicCode code = build_code(u, n);
    CirculantMatrix h = parity_check_matrix(u, n);
    CheckMatrix m = h.checks(reduced, code.k);
    if (out_path.empty() || out_path == "-") {
        write_alist(m, std::cout);
    } else {
        std::ofstream os(out_path);
        if (!os) throw Error("cannot open output file: " + out_path);
        write_alist(m, os);
    }
    return 0;
}

int cmd_simulate(uint32_t n, const std::string& u_text, const std::string& alist_path,
                 const std::vector<double>& snrs, uint32_t iters, const std::string& decoder, uint64_t seed,
                 uint64_t min_errors, uint64_t max_frames, bool reduced, const std::string& out_path) {
    CheckMatrix h;
    CyclicCode code;
    if (!u_text.empty()) {
        BinaryPoly u = poly_parse(u_text);
        code = build_code(u, n);
        h = parity_check_matrix(u, n).checks(reduced, code.k);
    } else {
        std::ifstream is(alist_path);
        if (!is) throw Error("cannot open parity-check file: " + alist_path);
        h = parse_alist(is);
        code.n = h.n_cols;
        code.k = h.n_cols - gf2_rank(to_bit_matrix(h));
        if (code.k == 0) throw ZeroDimension();
    }

    DecoderConfig dec;
    dec.max_iterations = iters;
    dec.algorithm = decoder == "minsum" ? DecoderConfig::Algo::min_sum : DecoderConfig::Algo::sum_product;

    std::vector<ChannelConfig> points;
    for (double s : snrs) points.push_back({s, static_cast<double>(code.k) / code.n, seed});

    auto results = simulate_fer(code, h, points, dec, StopRule{min_errors, max_frames});
    std::string csv = sim_results_csv(results);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream os(out_path);
        if (!os) throw Error("cannot open output file: " + out_path);
        os << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic LDPC codes from low-weight binary idempotents, searched in the spectral domain"};
    app.require_subcommand(1);

    uint32_t n = 0;
    bool as_json = false;

    auto* sc_cosets = app.add_subcommand("cosets", "list cyclotomic cosets modulo n");
    sc_cosets->add_option("--n", n, "code length (odd)")->required();
    sc_cosets->add_flag("--json", as_json, "JSON output");

    auto* sc_factor = app.add_subcommand("factor", "factor z^n+1 into irreducible binary polynomials");
    sc_factor->add_option("--n", n, "code length (odd)")->required();
    sc_factor->add_flag("--json", as_json, "JSON output");

    SearchConfig cfg;
    uint64_t max_results = 0, budget = 0;
    std::string catalog_path;
    auto* sc_search = app.add_subcommand("search", "bounded exhaustive idempotent search");
    sc_search->add_option("--n", cfg.n, "code length (odd)")->required();
    sc_search->add_option("--rmin", cfg.r_min, "minimum code rate, in [0,1)")->required();
    sc_search->add_option("--d", cfg.d, "lowest expected minimum distance")->required();
    sc_search->add_option("--delta", cfg.delta, "slack on the weight bound")->default_val(0);
    sc_search->add_option("--max-results", max_results, "stop after this many records");
    sc_search->add_option("--budget", budget, "node-count limit");
    sc_search->add_option("--catalog", catalog_path, "append novel records to this JSON-lines catalog");

    std::string u_text;
    uint64_t dmin_budget = uint64_t(1) << 28;
    auto* sc_analyze = app.add_subcommand("analyze", "report the code defined by a polynomial");
    sc_analyze->add_option("--n", n, "code length (odd)")->required();
    sc_analyze->add_option("--u", u_text, "polynomial, e.g. \"1+x^2+x^8\"")->required();
    sc_analyze->add_option("--budget", dmin_budget, "codeword enumeration budget for exact dmin");
    sc_analyze->add_flag("--json", as_json, "JSON output");

    bool reduced = false;
    std::string out_path, record_json;
    auto* sc_alist = app.add_subcommand("export-alist", "write the circulant parity-check matrix as alist");
    sc_alist->add_option("--n", n, "code length (required with --u)");
    sc_alist->add_option("--u", u_text, "defining polynomial");
    sc_alist->add_option("--record", record_json, "search-record JSON line (alternative to --u/--n)");
    sc_alist->add_flag("--reduced", reduced, "emit the (n-k)-row form instead of all n rows");
    sc_alist->add_option("--out", out_path, "output path (default stdout)");

    std::vector<double> snrs;
    uint32_t iters = 50;
    std::string decoder = "spa";
    uint64_t seed = 1, min_errors = 100, max_frames = 100000;
    std::string alist_path;
    auto* sc_sim = app.add_subcommand("simulate", "BPSK/AWGN Monte-Carlo with BP decoding");
    sc_sim->add_option("--n", n, "code length (required with --u)");
    sc_sim->add_option("--u", u_text, "defining polynomial");
    sc_sim->add_option("--alist", alist_path, "parity-check matrix file (alternative to --u)");
    sc_sim->add_option("--record", record_json, "search-record JSON line (alternative to --u/--alist)");
    sc_sim->add_option("--snr", snrs, "Eb/N0 points in dB")->required()->delimiter(',');
    sc_sim->add_option("--iters", iters, "decoder iteration cap")->default_val(50);
    sc_sim->add_option("--decoder", decoder, "spa or minsum")
        ->check(CLI::IsMember({"spa", "minsum"}))
        ->default_val("spa");
    sc_sim->add_option("--seed", seed, "RNG seed")->default_val(1);
    sc_sim->add_option("--min-errors", min_errors, "stop after this many frame errors")->default_val(100);
    sc_sim->add_option("--max-frames", max_frames, "frame cap per point")->default_val(100000);
    sc_sim->add_flag("--reduced", reduced, "use the (n-k)-row parity-check form");
    sc_sim->add_option("--out", out_path, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_cosets->parsed()) return cmd_cosets(n, as_json);
        if (sc_factor->parsed()) return cmd_factor(n, as_json);
        if (sc_search->parsed()) {
            if (max_results) cfg.max_results = max_results;
            if (budget) cfg.budget = budget;
            return cmd_search(cfg, catalog_path);
        }
        if (sc_analyze->parsed()) return cmd_analyze(n, u_text, dmin_budget, as_json);
        if (sc_alist->parsed()) {
            if (!record_json.empty()) {
                if (!u_text.empty()) throw Error("pass either --record or --u, not both");
                unpack_record(record_json, n, u_text);
            }
            if (u_text.empty() || n == 0) throw Error("export-alist needs --record or --u with --n");
            return cmd_export_alist(n, u_text, reduced, out_path);
        }
        if (sc_sim->parsed()) {
            if (!record_json.empty()) {
                if (!u_text.empty() || !alist_path.empty())
                    throw Error("pass only one of --record, --u, --alist");
                unpack_record(record_json, n, u_text);
            }
            if (u_text.empty() == alist_path.empty())
                throw Error("simulate needs exactly one of --u, --alist or --record");
            if (!u_text.empty() && n == 0) throw Error("--n is required with --u");
            return cmd_simulate(n, u_text, alist_path, snrs, iters, decoder, seed, min_errors, max_frames,
                                reduced, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
