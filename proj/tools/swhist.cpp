// Command-line harness: stream generation, algorithm replay with optional
// oracle ground truth, record evaluation, and a built-in scenario battery.
// Exit codes: 0 all bounds hold, 1 bound violation, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "swhist/swhist.hpp"

namespace {

using namespace swhist;

stream_data load_stream(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open stream file: " + path);
    return read_stream(in);
}

void store_stream(const std::string& path, const stream_data& s) {
    if (path.empty() || path == "-") {
        write_stream(std::cout, s);
        return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path);
    write_stream(out, s);
}

void print_summary(std::ostream& os, const eval_summary& sum) {
    nlohmann::json j{{"records", sum.records},
                     {"checked", sum.checked},
                     {"max_ratio", sum.max_ratio},
                     {"mean_ratio", sum.mean_ratio},
                     {"violations", sum.violations},
                     {"max_bucket_count", sum.max_bucket_count},
                     {"max_footprint", sum.max_footprint}};
    os << j.dump() << "\n";
}

struct scenario {
    std::string name;
    std::function<bool(std::string&)> body;
};

bool scenario_eval_clean(const algo_spec& spec, const stream_data& s, const run_options& opt,
                         std::string& detail, std::size_t max_bucket_cap = 0) {
    auto records = run_algorithm(spec, s, opt);
    auto sum = eval_records(records);
    std::ostringstream os;
    os << "records=" << sum.records << " max_ratio=" << sum.max_ratio
       << " violations=" << sum.violations;
    detail = os.str();
    if (sum.violations != 0) return false;
    if (max_bucket_cap != 0 && sum.max_bucket_count > max_bucket_cap) return false;
    return true;
}

int run_selftest() {
    std::vector<scenario> scenarios;

    scenarios.push_back({"count_histogram_eps0.5_w16", [](std::string& d) {
        algo_spec spec{window_algo::generic, 1, 0.5, 16};
        return scenario_eval_clean(spec, gen_gnp(12, 0.95, 7), {true, 1, false}, d, 12);
    }});
    scenarios.push_back({"count_histogram_doubling", [](std::string& d) {
        algo_spec spec{window_algo::generic, 1, 0.25, 10};
        return scenario_eval_clean(spec, gen_gnp(12, 0.95, 8), {true, 1, true}, d);
    }});
    scenarios.push_back({"mm_goodedges_forest", [](std::string& d) {
        algo_spec spec{window_algo::mm_via_goodedges, 1, 0.1, 20};
        return scenario_eval_clean(spec, gen_forest(60, 59, 11), {true, 1, false}, d);
    }});
    scenarios.push_back({"mm_goodedges_arboricity3", [](std::string& d) {
        algo_spec spec{window_algo::mm_via_goodedges, 3, 0.25, 30};
        return scenario_eval_clean(spec, gen_alpha_union(40, 3, 100, 13).stream, {true, 1, false}, d);
    }});
    scenarios.push_back({"mm_squared_forest", [](std::string& d) {
        algo_spec spec{window_algo::mm_squared, 1, 0.1, 25};
        return scenario_eval_clean(spec, gen_forest(50, 49, 17), {true, 1, false}, d);
    }});
    scenarios.push_back({"vc_forest_stream", [](std::string& d) {
        algo_spec spec{window_algo::vc_forest, 1, 0.1, 25};
        return scenario_eval_clean(spec, gen_forest(80, 79, 19), {true, 1, false}, d);
    }});
    scenarios.push_back({"vc_approx_three_paths", [](std::string& d) {
        algo_spec spec{window_algo::vc_approx, 1, 0.1, 40};
        return scenario_eval_clean(spec, gen_three_paths(20).stream, {true, 1, false}, d);
    }});
    scenarios.push_back({"vc_approx_gnp", [](std::string& d) {
        algo_spec spec{window_algo::vc_approx, 1, 0.05, 60};
        return scenario_eval_clean(spec, gen_gnp(30, 0.25, 23), {true, 1, false}, d);
    }});

    std::vector<std::future<std::pair<bool, std::string>>> futures;
    for (auto& sc : scenarios) {
        futures.push_back(std::async(std::launch::async, [&sc] {
            std::string detail;
            bool ok = false;
            try {
                ok = sc.body(detail);
            } catch (const std::exception& e) {
                detail = std::string("exception: ") + e.what();
            }
            return std::make_pair(ok, detail);
        }));
    }

    int failures = 0;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        auto [ok, detail] = futures[i].get();
        std::cout << (ok ? "PASS " : "FAIL ") << scenarios[i].name << "  " << detail << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "selftest: all scenarios passed" : "selftest: FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-window estimation over bucketed insertion-only estimators"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a stream file");
    gen->require_subcommand(1);
    std::string gen_out = "-";
    std::uint64_t gen_seed = 1;
    std::uint32_t tp_copies = 1;
    std::uint32_t gen_n = 10;
    std::uint32_t gen_alpha = 1;
    std::size_t gen_edges = 9;
    double gnp_p = 0.1;

    auto* g_tp = gen->add_subcommand("three_paths", "disjoint length-3 paths in three segments");
    g_tp->add_option("--copies", tp_copies, "number of disjoint paths")->required();
    g_tp->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* g_fo = gen->add_subcommand("forest", "random forest, shuffled arrival order");
    g_fo->add_option("--n", gen_n, "vertex count")->required();
    g_fo->add_option("--edges", gen_edges, "edge count (at most n-1)")->required();
    g_fo->add_option("--seed", gen_seed, "rng seed");
    g_fo->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* g_au = gen->add_subcommand("alpha_union", "union of alpha random forests");
    g_au->add_option("--n", gen_n, "vertex count")->required();
    g_au->add_option("--alpha", gen_alpha, "number of forests")->required();
    g_au->add_option("--edges", gen_edges, "total edge count")->required();
    g_au->add_option("--seed", gen_seed, "rng seed");
    g_au->add_option("-o,--output", gen_out, "output file (default stdout)");

    auto* g_np = gen->add_subcommand("gnp", "Erdos-Renyi G(n,p)");
    g_np->add_option("--n", gen_n, "vertex count")->required();
    g_np->add_option("--p", gnp_p, "edge probability")->required();
    g_np->add_option("--seed", gen_seed, "rng seed");
    g_np->add_option("-o,--output", gen_out, "output file (default stdout)");

    // ---- run ----
    auto* run = app.add_subcommand("run", "replay a stream through an algorithm");
    std::string run_stream_path;
    std::string run_out = "-";
    std::string alg_name = "generic";
    std::uint32_t run_alpha = 1;
    double run_epsilon = 0.1;
    std::uint64_t run_window = 1;
    std::uint64_t run_every = 1;
    bool run_oracle = false;
    bool run_doubling = false;
    run->add_option("stream", run_stream_path, "stream file ('-' for stdin)")->required();
    run->add_option("--alg", alg_name,
                    "mm_via_goodedges|mm_squared|vc_forest|vc_approx|generic")->required();
    run->add_option("--alpha", run_alpha, "arboricity parameter");
    run->add_option("--epsilon", run_epsilon, "accuracy parameter in (0, 1/2]")->required();
    run->add_option("--window", run_window, "window size")->required();
    run->add_option("--every", run_every, "emit a record every k updates");
    run->add_flag("--oracle", run_oracle, "attach exact window truth and ratio");
    run->add_flag("--doubling", run_doubling, "apply the restart wrapper");
    run->add_option("-o,--output", run_out, "records file (default stdout)");

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "exact window values of a stream");
    std::string orc_stream_path;
    std::string orc_problem = "m";
    std::uint32_t orc_alpha = 1;
    std::uint64_t orc_window = 0;
    std::uint64_t orc_at = 0;
    std::uint64_t orc_every = 0;
    orc->add_option("stream", orc_stream_path, "stream file ('-' for stdin)")->required();
    orc->add_option("--problem", orc_problem, "m|vc|estar|count")->required();
    orc->add_option("--alpha", orc_alpha, "alpha for estar");
    orc->add_option("--window", orc_window, "window size (default: whole stream)");
    orc->add_option("--at", orc_at, "single query time (default: stream end)");
    orc->add_option("--every", orc_every, "print 't value' for every k-th time");

    // ---- eval ----
    auto* ev = app.add_subcommand("eval", "aggregate records and check bounds");
    std::string ev_records_path;
    ev->add_option("records", ev_records_path, "records file ('-' for stdin)")->required();

    // ---- selftest ----
    auto* st = app.add_subcommand("selftest", "run the built-in scenario battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (g_tp->parsed()) {
            store_stream(gen_out, gen_three_paths(tp_copies).stream);
        } else if (g_fo->parsed()) {
            store_stream(gen_out, gen_forest(gen_n, gen_edges, gen_seed));
        } else if (g_au->parsed()) {
            store_stream(gen_out, gen_alpha_union(gen_n, gen_alpha, gen_edges, gen_seed).stream);
        } else if (g_np->parsed()) {
            store_stream(gen_out, gen_gnp(gen_n, gnp_p, gen_seed));
        } else if (run->parsed()) {
            stream_data s = load_stream(run_stream_path);
            algo_spec spec{parse_window_algo(alg_name), run_alpha, run_epsilon, run_window};
            run_options opt{run_oracle, run_every, run_doubling};
            auto records = run_algorithm(spec, s, opt);
            if (run_out.empty() || run_out == "-") {
                for (const auto& r : records) write_record(std::cout, r);
            } else {
                std::ofstream out(run_out);
                if (!out) throw parse_error("cannot open output file: " + run_out);
                for (const auto& r : records) write_record(out, r);
            }
        } else if (orc->parsed()) {
            stream_data s = load_stream(orc_stream_path);
            oracle::window_problem problem;
            if (orc_problem == "m") problem = oracle::window_problem::matching;
            else if (orc_problem == "vc") problem = oracle::window_problem::vertex_cover;
            else if (orc_problem == "estar") problem = oracle::window_problem::alpha_good_star;
            else if (orc_problem == "count") problem = oracle::window_problem::item_count;
            else throw config_error("oracle: unknown problem: " + orc_problem);
            const std::uint64_t w = orc_window == 0 ? std::max<std::uint64_t>(s.edges.size(), 1)
                                                    : orc_window;
            if (orc_every > 0) {
                for (std::uint64_t t = orc_every; t <= s.edges.size(); t += orc_every)
                    std::cout << t << " "
                              << oracle::window_truth(s.edges, w, t, problem, orc_alpha) << "\n";
            } else {
                const std::uint64_t t = orc_at == 0 ? s.edges.size() : orc_at;
                std::cout << oracle::window_truth(s.edges, w, t, problem, orc_alpha) << "\n";
            }
        } else if (ev->parsed()) {
            std::vector<query_record> records;
            if (ev_records_path == "-") {
                records = read_records(std::cin);
            } else {
                std::ifstream in(ev_records_path);
                if (!in) throw parse_error("cannot open records file: " + ev_records_path);
                records = read_records(in);
            }
            auto sum = eval_records(records);
            print_summary(std::cout, sum);
            return sum.violations == 0 ? 0 : 1;
        } else if (st->parsed()) {
            return run_selftest();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
