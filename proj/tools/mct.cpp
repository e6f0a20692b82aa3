// Command-line workbench: construct the extremal certificates, verify them,
// solve small instances exactly, analyze blow-up structure, and tabulate the
// closed-form bounds. Reports are line-oriented "key value" text; --json
// switches to a structured rendering with the same content.
//
// Exit codes: 0 success/valid, 1 mathematical violation (invalid certificate,
// multicolored triangle, failed bound), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mct/analyzer.hpp"
#include "mct/certificate.hpp"
#include "mct/constructions.hpp"
#include "mct/extremal.hpp"
#include "mct/graph.hpp"
#include "mct/solver.hpp"
#include "mct/verify.hpp"

namespace {

using nlohmann::json;

// Accumulates the text report and its JSON mirror side by side.
class Report {
public:
    explicit Report(bool json_mode) : json_mode_(json_mode) {}

    void kv(const std::string& key, const std::string& value) {
        text_ << key << ' ' << value << '\n';
        obj_[key] = value;
    }
    void kv(const std::string& key, long long value) {
        text_ << key << ' ' << value << '\n';
        obj_[key] = value;
    }
    void kv(const std::string& key, bool value) {
        text_ << key << ' ' << (value ? 1 : 0) << '\n';
        obj_[key] = value;
    }
    void kv(const std::string& key, const mct::Rational& value) {
        text_ << key << ' ' << value.str() << '\n';
        obj_[key] = value.str();
    }

    // Repeated-key rows; rendered as an array under `key` in JSON.
    void row(const std::string& key, const std::string& text_value, json j) {
        text_ << key << ' ' << text_value << '\n';
        if (!obj_.contains(key)) obj_[key] = json::array();
        obj_[key].push_back(std::move(j));
    }

    void print() const {
        if (json_mode_)
            std::cout << obj_.dump(2) << '\n';
        else
            std::cout << text_.str();
    }

private:
    bool json_mode_;
    std::ostringstream text_;
    json obj_ = json::object();
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

std::string triple_str(const std::array<int, 3>& t) {
    return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

void report_verify(Report& rep, const mct::VerifyReport& vr) {
    rep.kv("n", static_cast<long long>(vr.n));
    rep.kv("k", static_cast<long long>(vr.k));
    rep.kv("edges", vr.edges);
    rep.kv("valid", vr.valid);
    if (vr.multicolored_triangle)
        rep.kv("multicolored_triangle", triple_str(*vr.multicolored_triangle));
    else
        rep.kv("multicolored_triangle", std::string("none"));
    rep.kv("triangles", vr.census.triangle_count);
    rep.kv("multicolored_count", vr.census.multicolored_count);
    rep.kv("neighborhood_violations", static_cast<long long>(vr.neighborhood_violations.size()));
    for (int v : vr.neighborhood_violations)
        rep.row("neighborhood_violation", std::to_string(v), json(v));
    rep.kv("kn_checked", vr.kn_checked);
    rep.kv("kn_violations", static_cast<long long>(vr.kn_violations.size()));
    for (int c : vr.kn_violations) rep.row("kn_violation", std::to_string(c), json(c));
    rep.kv("double_count_ok", vr.double_count_ok);
}

int cmd_construct(const std::string& type, long long n, const std::string& parts_csv,
                  const std::string& out_file, const std::string& dot_file, bool json_mode) {
    mct::ColoredGraph graph(0, {});
    std::optional<mct::BlowupPartition> partition;

    if (type == "blowup") {
        mct::PartSizes sizes{};
        if (!parts_csv.empty()) {
            std::istringstream ss(parts_csv);
            std::string item;
            int i = 0;
            while (std::getline(ss, item, ',')) {
                if (i >= 5) throw std::runtime_error("--parts takes five sizes");
                sizes[i++] = std::stoll(item);
            }
            if (i != 5) throw std::runtime_error("--parts takes five sizes");
        } else {
            if (n < 5) throw std::runtime_error("blowup needs --n at least 5");
            sizes = mct::balanced_part_sizes(n);
        }
        mct::BlowupGraph bg = mct::blowup_packing(sizes);
        graph = std::move(bg.graph);
        partition = std::move(bg.partition);
    } else if (type == "perturbed") {
        mct::BlowupGraph bg = mct::perturbed_construction(n);
        graph = std::move(bg.graph);
        partition = std::move(bg.partition);
    } else if (type == "k5star") {
        if (n < 5 || (n - 1) % 4 != 0)
            throw std::runtime_error("k5star needs --n of the form 4m+1 with m >= 1");
        graph = mct::k5_star(static_cast<int>((n - 1) / 4));
    } else {
        throw std::runtime_error("unknown construction type '" + type + "'");
    }

    std::string cert = mct::render_certificate(graph, partition);
    if (!dot_file.empty()) write_file(dot_file, mct::render_dot(graph));
    if (out_file.empty()) {
        std::cout << cert;
        return 0;
    }
    write_file(out_file, cert);
    Report rep(json_mode);
    rep.kv("file", out_file);
    rep.kv("type", type);
    rep.kv("n", static_cast<long long>(graph.n()));
    rep.kv("k", static_cast<long long>(graph.k()));
    rep.kv("edges", graph.edge_count());
    rep.print();
    return 0;
}

int cmd_verify(const std::string& path, bool json_mode) {
    Report rep(json_mode);
    rep.kv("file", path);
    std::string text = read_file(path);
    std::optional<mct::ParsedCertificate> cert;
    try {
        cert = mct::parse_certificate(text);
    } catch (const mct::ValidationError& e) {
        rep.kv("valid", false);
        rep.kv("error", std::string(e.what()));
        rep.print();
        return 1;
    }
    mct::VerifyReport vr = mct::verify(cert->graph);
    report_verify(rep, vr);
    rep.print();
    return vr.valid ? 0 : 1;
}

int cmd_solve(long long n, bool with_oracle, uint64_t budget, int jobs, bool no_symmetry,
              bool stats, bool json_mode) {
    mct::SearchOptions opts;
    opts.node_budget = budget;
    opts.parallel_width = jobs;
    opts.symmetry_breaking = !no_symmetry;
    mct::SolveResult res = mct::solve_exact(static_cast<int>(n), opts);

    Report rep(json_mode);
    rep.kv("n", n);
    rep.kv("k_star", static_cast<long long>(res.k_star));
    rep.kv("source", std::string("computed by exact search; no published table of small values"));
    rep.kv("complete", res.complete);
    rep.kv("t_lower", res.lower_bound_t);
    bool ok = true;
    if (with_oracle) {
        int oracle = mct::brute_force_oracle(static_cast<int>(n));
        rep.kv("oracle", static_cast<long long>(oracle));
        ok = oracle == res.k_star;
        rep.kv("oracle_agrees", ok);
    }
    rep.kv("witness_cycles", static_cast<long long>(res.witness ? res.witness->k() : 0));
    if (res.witness)
        for (const mct::CycleTuple& c : res.witness->classes()) {
            std::string s;
            json arr = json::array();
            for (int v : c) {
                s += (s.empty() ? "" : " ") + std::to_string(v);
                arr.push_back(v);
            }
            rep.row("cycle", s, arr);
        }
    if (stats) {
        rep.kv("nodes", static_cast<long long>(res.nodes_explored));
        std::ostringstream rt;
        rt << res.runtime_seconds;
        rep.kv("runtime_seconds", rt.str());
    }
    rep.print();
    return ok ? 0 : 1;
}

void report_bound(Report& rep, const std::string& name, const mct::BoundCheck& bc) {
    if (!bc.applicable) {
        rep.kv(name + "_applicable", false);
        return;
    }
    rep.kv(name + "_value", bc.value);
    rep.kv(name + "_bound", bc.bound);
    rep.kv(name + "_pass", bc.pass);
}

int cmd_analyze(const std::string& path, const std::string& gamma_str,
                const std::string& good_str, bool find_partition, bool json_mode) {
    Report rep(json_mode);
    rep.kv("file", path);
    std::string text = read_file(path);
    mct::ParsedCertificate cert = mct::parse_certificate(text);
    const mct::ColoredGraph& g = cert.graph;

    mct::AnalyzerConfig cfg;
    cfg.gamma = mct::Rational::parse(gamma_str);
    cfg.good_threshold = mct::Rational::parse(good_str);
    rep.kv("gamma", cfg.gamma);
    rep.kv("good_threshold", cfg.good_threshold);

    std::optional<mct::BlowupPartition> partition = cert.partition;
    std::string source = partition ? "file" : "none";
    if (!partition && find_partition) {
        partition = mct::best_blowup_partition(g);
        source = "search";
    }
    rep.kv("partition", source);

    rep.kv("n", static_cast<long long>(g.n()));
    rep.kv("k", static_cast<long long>(g.k()));
    rep.kv("edges", g.edge_count());

    if (!partition) {
        if (g.n() >= 1) {
            mct::DeviationStats dev = mct::deviation_stats(g);
            rep.kv("sum_s_sq", dev.sum_s_sq);
        }
        rep.kv("vertex_split_bound", mct::vertex_split_bound(g));
        mct::TriangleCensus census = mct::triangle_census(g);
        rep.kv("triangles", census.triangle_count);
        rep.kv("multicolored_count", census.multicolored_count);
        rep.print();
        return 0;
    }

    mct::AnalysisReport ar = mct::structure_report(g, *partition, cfg);
    rep.kv("sum_s_sq", ar.sum_s_sq);
    rep.kv("vertex_split_bound", ar.split_bound);
    rep.kv("triangles", ar.census.triangle_count);
    rep.kv("multicolored_count", ar.census.multicolored_count);
    {
        std::string s;
        json arr = json::array();
        for (long long x : ar.part_sizes) {
            s += (s.empty() ? "" : " ") + std::to_string(x);
            arr.push_back(x);
        }
        rep.kv("part_sizes", s);
    }
    for (int i = 0; i < 5; ++i)
        rep.kv("structured_" + std::to_string(i + 1) + std::to_string((i + 1) % 5 + 1),
               ar.structured_counts[i]);
    rep.kv("structured_total", ar.structured_total);
    rep.kv("m_size", ar.m_size);
    for (const mct::Edge& e : ar.m_edges)
        rep.row("m_edge", std::to_string(e.u) + " " + std::to_string(e.v),
                json::array({e.u, e.v}));
    rep.kv("l_size", static_cast<long long>(ar.l_edges.size()));
    rep.kv("l_is_matching", ar.l_is_matching);
    rep.kv("vg_size", static_cast<long long>(ar.vg.size()));
    rep.kv("vgamma_size", static_cast<long long>(ar.vgamma.size()));
    for (const mct::GreatEdgeCount& gc : ar.great_counts)
        rep.row("great",
                std::to_string(gc.edge.u) + " " + std::to_string(gc.edge.v) + " " +
                    std::to_string(gc.count),
                json{{"u", gc.edge.u}, {"v", gc.edge.v}, {"count", gc.count}});
    report_bound(rep, "vgamma_comp", ar.vgamma_comp);
    report_bound(rep, "min_structured_check", ar.min_structured_check);
    report_bound(rep, "max_degree_check", ar.max_degree_check);
    report_bound(rep, "min_great_check", ar.min_great_check);
    report_bound(rep, "m_bound_check", ar.m_bound_check);
    rep.kv("part_size_min", ar.part_size_min);
    rep.kv("part_size_max", ar.part_size_max);
    rep.kv("part_size_window_ok", ar.part_size_window_ok);
    rep.print();
    return 0;
}

int cmd_bounds(long long from, long long to, const std::string& delta_str, bool json_mode) {
    mct::Rational delta = mct::Rational::parse(delta_str);
    std::vector<mct::BoundsRow> rows = mct::bounds_table(from, to, delta);
    Report rep(json_mode);
    rep.kv("delta", delta);
    rep.kv("columns", std::string("n q r t lower_est upper_main upper_approx lower_ok main_ok approx_ok"));
    bool all_ok = true;
    for (const mct::BoundsRow& row : rows) {
        std::ostringstream line;
        line << row.n << ' ' << row.q << ' ' << row.r << ' ' << row.t << ' '
             << row.lower_est.str() << ' ' << row.upper_main.str() << ' ' << row.upper_approx.str()
             << ' ' << (row.lower_ok ? 1 : 0) << ' ' << (row.main_ok ? 1 : 0) << ' '
             << (row.approx_ok ? 1 : 0);
        rep.row("row", line.str(),
                json{{"n", row.n},
                     {"q", row.q},
                     {"r", row.r},
                     {"t", row.t},
                     {"lower_est", row.lower_est.str()},
                     {"upper_main", row.upper_main.str()},
                     {"upper_approx", row.upper_approx.str()},
                     {"lower_ok", row.lower_ok},
                     {"main_ok", row.main_ok},
                     {"approx_ok", row.approx_ok}});
        all_ok = all_ok && row.lower_ok && row.main_ok && row.approx_ok;
    }
    rep.kv("all_ok", all_ok);
    rep.print();
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multicolored-triangle-free C5-decomposition workbench"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "generate a certificate");
    std::string c_type;
    long long c_n = 0;
    std::string c_parts, c_out, c_dot;
    bool c_json = false;
    construct->add_option("--type", c_type, "blowup | perturbed | k5star")->required();
    construct->add_option("--n", c_n, "vertex count");
    construct->add_option("--parts", c_parts, "explicit part sizes a1,a2,a3,a4,a5 (blowup)");
    construct->add_option("-o,--output", c_out, "certificate file (stdout when absent)");
    construct->add_option("--dot", c_dot, "also write a Graphviz rendering");
    construct->add_flag("--json", c_json, "JSON report");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "certify a certificate file");
    std::string v_file;
    bool v_json = false;
    verify_cmd->add_option("file", v_file, "certificate file")->required();
    verify_cmd->add_flag("--json", v_json, "JSON report");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact maximum for K_n");
    long long s_n = 0;
    bool s_oracle = false, s_nosym = false, s_stats = false, s_json = false;
    uint64_t s_budget = UINT64_MAX;
    int s_jobs = 1;
    solve_cmd->add_option("--n", s_n, "vertex count")->required();
    solve_cmd->add_flag("--oracle", s_oracle, "also run the brute-force oracle (n <= 7)");
    solve_cmd->add_option("--budget", s_budget, "search node budget");
    solve_cmd->add_option("--jobs", s_jobs, "parallel workers");
    solve_cmd->add_flag("--no-symmetry", s_nosym, "disable vertex symmetry breaking");
    solve_cmd->add_flag("--stats", s_stats,
                        "print node/runtime statistics (not stable across --jobs)");
    solve_cmd->add_flag("--json", s_json, "JSON report");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "structural report for a certificate");
    std::string a_file, a_gamma = "1/16", a_good = "7/20";
    bool a_find = false, a_json = false;
    analyze_cmd->add_option("file", a_file, "certificate file")->required();
    analyze_cmd->add_option("--gamma", a_gamma, "degree-deviation fraction (rational)");
    analyze_cmd->add_option("--good-threshold", a_good, "good-vertex degree fraction");
    analyze_cmd->add_flag("--find-partition", a_find,
                          "search for a structured-edge-maximal partition when the file has none");
    analyze_cmd->add_flag("--json", a_json, "JSON report");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table");
    long long b_from = 5, b_to = 5;
    std::string b_delta = "0";
    bool b_json = false;
    bounds_cmd->add_option("--from", b_from, "first n")->required();
    bounds_cmd->add_option("--to", b_to, "last n")->required();
    bounds_cmd->add_option("--delta", b_delta, "slack replacing the o(n)/o(1) terms");
    bounds_cmd->add_flag("--json", b_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*construct) return cmd_construct(c_type, c_n, c_parts, c_out, c_dot, c_json);
        if (*verify_cmd) return cmd_verify(v_file, v_json);
        if (*solve_cmd)
            return cmd_solve(s_n, s_oracle, s_budget, s_jobs, s_nosym, s_stats, s_json);
        if (*analyze_cmd) return cmd_analyze(a_file, a_gamma, a_good, a_find, a_json);
        if (*bounds_cmd) return cmd_bounds(b_from, b_to, b_delta, b_json);
    } catch (const mct::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const mct::ValidationError& e) {
        std::cerr << "error: invalid certificate: " << e.what() << '\n';
        return 1;
    } catch (const mct::PackingNotFoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
