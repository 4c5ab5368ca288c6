#include "homsolve/cli.hpp"

#include "homsolve/dp.hpp"
#include "homsolve/graph_io.hpp"
#include "homsolve/oracle.hpp"
#include "homsolve/packing.hpp"
#include "homsolve/reductions.hpp"
#include "homsolve/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace homsolve {

namespace {

using nlohmann::json;

struct CommonFlags {
    bool witness = false;
    bool json_out = false;
    bool heuristic = false;
    int exact_threshold = kDefaultExactThreshold;
    int threads = 1;
    std::string ordering_file;
};

void attach_solver_flags(CLI::App* cmd, CommonFlags& f, bool with_ordering = true) {
    cmd->add_flag("--witness", f.witness, "extract and print a witness mapping");
    cmd->add_flag("--json", f.json_out, "machine-readable JSON output");
    cmd->add_flag("--heuristic-bandwidth", f.heuristic,
                  "always use the heuristic ordering, even for small H");
    cmd->add_option("--exact-threshold", f.exact_threshold,
                    "largest H for which the exact bandwidth ordering is computed")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", f.threads, "worker threads for the stage kernels")
        ->check(CLI::Range(1, 1024));
    if (with_ordering)
        cmd->add_option("--ordering", f.ordering_file,
                        "file with a space-separated ordering of V(H)");
}

SolveOptions to_options(const CommonFlags& f, int h_size) {
    SolveOptions opts;
    opts.want_witness = f.witness;
    opts.force_heuristic_ordering = f.heuristic;
    opts.exact_threshold = f.exact_threshold;
    opts.threads = f.threads;
    if (!f.ordering_file.empty())
        opts.ordering = Ordering{load_permutation_file(f.ordering_file, h_size)};
    return opts;
}

void print_ints(std::ostream& out, const std::string& key, const std::vector<int>& vals) {
    out << key;
    for (int v : vals)
        out << ' ' << v;
    out << '\n';
}

void emit_solve(std::ostream& out, const SolveResult& res, Mode mode, bool as_json) {
    RunReport report = make_report(res, mode);
    if (as_json)
        out << json(report).dump(2) << '\n';
    else
        out << render_text(report);
}

void emit_labeling(std::ostream& out, const std::string& kind, bool yes,
                   const std::optional<std::vector<int>>& labels, const SolveResult* run,
                   bool as_json) {
    if (as_json) {
        json j{{"problem", kind}, {"answer", yes ? "yes" : "no"}};
        if (labels)
            j["labeling"] = *labels;
        if (run)
            j["report"] = make_report(*run, Mode::locally_injective);
        out << j.dump(2) << '\n';
        return;
    }
    out << "answer " << (yes ? "yes" : "no") << '\n';
    if (labels)
        print_ints(out, "labeling", *labels);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"homsolve: graph homomorphism and locally injective homomorphism "
                 "solver via bandwidth-windowed dynamic programming"};
    app.require_subcommand(1);

    // deferred work so parsing is fully done before any file is touched
    std::function<void()> action;

    std::string g_arg, h_arg;
    int mk_m = 0, mk_k = 0;
    CommonFlags flags;

    auto add_pair_cmd = [&](const std::string& name, const std::string& desc, Mode mode) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("G", g_arg, "source graph (file or builtin)")->required();
        cmd->add_option("H", h_arg, "target graph (file or builtin)")->required();
        attach_solver_flags(cmd, flags);
        cmd->callback([&, mode]() {
            action = [&, mode]() {
                Graph g = load_graph_arg(g_arg);
                Graph h = load_graph_arg(h_arg);
                emit_solve(out, solve(g, h, mode, to_options(flags, h.vertex_count())), mode,
                           flags.json_out);
            };
        });
    };
    add_pair_cmd("hom", "decide existence of a homomorphism G -> H", Mode::hom);
    add_pair_cmd("lihom", "decide existence of a locally injective homomorphism G -> H",
                 Mode::locally_injective);

    {
        CLI::App* cmd = app.add_subcommand("color-mk", "decide (m,k)-colorability of G");
        cmd->add_option("G", g_arg)->required();
        cmd->add_option("m", mk_m, "number of values")->required()->check(CLI::PositiveNumber);
        cmd->add_option("k", mk_k, "separation")->required()->check(CLI::PositiveNumber);
        attach_solver_flags(cmd, flags, false);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                MkColoringResult res = solve_mk_coloring(g, mk_m, mk_k, to_options(flags, 0));
                if (flags.json_out) {
                    json j{{"problem", "mk-coloring"},
                           {"m", mk_m},
                           {"k", mk_k},
                           {"answer", res.yes ? "yes" : "no"}};
                    if (res.coloring)
                        j["coloring"] = *res.coloring;
                    if (res.run)
                        j["report"] = make_report(*res.run, Mode::hom);
                    out << j.dump(2) << '\n';
                } else {
                    out << "answer " << (res.yes ? "yes" : "no") << '\n';
                    if (res.coloring)
                        print_ints(out, "coloring", *res.coloring);
                }
            };
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("h21", "decide existence of an H(2,1)-labeling of G");
        cmd->add_option("G", g_arg)->required();
        cmd->add_option("H", h_arg)->required();
        attach_solver_flags(cmd, flags, false);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                Graph h = load_graph_arg(h_arg);
                H21Result res = solve_h21(g, h, to_options(flags, 0));
                emit_labeling(out, "h21", res.yes, res.labeling, &res.run, flags.json_out);
            };
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("l21", "minimum L(2,1)-labeling span of G");
        cmd->add_option("G", g_arg)->required();
        attach_solver_flags(cmd, flags, false);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                SpanResult res = l21_span(g, to_options(flags, 0));
                if (flags.json_out) {
                    json j{{"problem", "l21"}, {"span", res.span}};
                    if (res.labels)
                        j["labels"] = *res.labels;
                    out << j.dump(2) << '\n';
                } else {
                    out << "span " << res.span << '\n';
                    if (res.labels)
                        print_ints(out, "labels", *res.labels);
                }
            };
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("cl21", "minimum circular L(2,1)-labeling span of G");
        cmd->add_option("G", g_arg)->required();
        attach_solver_flags(cmd, flags, false);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                CircularSpanResult res = circular_l21_span(g, to_options(flags, 0));
                if (flags.json_out) {
                    json j{{"problem", "cl21"},
                           {"feasible", res.span.has_value()},
                           {"max_cycle_checked", res.max_cycle_checked}};
                    if (res.span) {
                        j["span"] = *res.span;
                        j["cycle_size"] = *res.span + 1;
                    }
                    if (res.labels)
                        j["labels"] = *res.labels;
                    out << j.dump(2) << '\n';
                } else if (res.span) {
                    out << "span " << *res.span << '\n';
                    out << "cycle_size " << (*res.span + 1) << '\n';
                    if (res.labels)
                        print_ints(out, "labels", *res.labels);
                } else {
                    out << "infeasible within cycle sizes 3.." << res.max_cycle_checked << '\n';
                }
            };
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("bandwidth", "bandwidth value and ordering of G");
        cmd->add_option("G", g_arg)->required();
        cmd->add_flag("--json", flags.json_out, "machine-readable JSON output");
        cmd->add_flag("--heuristic-bandwidth", flags.heuristic, "use the heuristic layout");
        cmd->add_option("--exact-threshold", flags.exact_threshold,
                        "largest graph for which the exact search runs")
            ->check(CLI::PositiveNumber);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                BandwidthCertificate cert;
                std::string source;
                if (flags.heuristic || g.vertex_count() > flags.exact_threshold) {
                    cert = heuristic_bandwidth(g);
                    source = "heuristic";
                } else {
                    cert = exact_bandwidth(g, flags.exact_threshold);
                    source = "exact";
                }
                if (flags.json_out) {
                    json j{{"value", cert.value},
                           {"ordering", cert.ordering.perm},
                           {"source", source}};
                    out << j.dump(2) << '\n';
                } else {
                    out << "value " << cert.value << '\n';
                    print_ints(out, "ordering", cert.ordering.perm);
                    out << "source " << source << '\n';
                }
            };
        });
    }

    {
        CLI::App* cmd = app.add_subcommand("stats", "instance statistics for a (G, H) pair");
        cmd->add_option("G", g_arg)->required();
        cmd->add_option("H", h_arg)->required();
        attach_solver_flags(cmd, flags);
        cmd->callback([&]() {
            action = [&]() {
                Graph g = load_graph_arg(g_arg);
                Graph h = load_graph_arg(h_arg);
                SolveOptions opts = to_options(flags, h.vertex_count());
                SolverContext ctx = make_context(g, h, Mode::hom, opts);
                VectorSet p2 = enum_2_independent_sets(g);
                if (flags.json_out) {
                    json j{{"n", g.vertex_count()},
                           {"m", h.vertex_count()},
                           {"g_edges", g.edge_count()},
                           {"h_edges", h.edge_count()},
                           {"beta", ctx.beta},
                           {"alphabet", ctx.beta + 1},
                           {"ordering", ctx.ordering.perm},
                           {"ordering_source", to_string(ctx.ordering_source)},
                           {"p_independent", ctx.p_family.size()},
                           {"p_2independent", p2.size()}};
                    out << j.dump(2) << '\n';
                } else {
                    out << "n " << g.vertex_count() << '\n';
                    out << "m " << h.vertex_count() << '\n';
                    out << "beta " << ctx.beta << '\n';
                    out << "alphabet " << ctx.beta + 1 << '\n';
                    print_ints(out, "ordering", ctx.ordering.perm);
                    out << "ordering_source " << to_string(ctx.ordering_source) << '\n';
                    out << "p_independent " << ctx.p_family.size() << '\n';
                    out << "p_2independent " << p2.size() << '\n';
                }
            };
        });
    }

    {
        CLI::App* oracle_cmd =
            app.add_subcommand("oracle", "brute-force reference solvers (test tooling)");
        oracle_cmd->require_subcommand(1);
        auto add_oracle = [&](const std::string& name, auto solver) {
            CLI::App* cmd = oracle_cmd->add_subcommand(name);
            cmd->add_option("G", g_arg)->required();
            cmd->add_option("H", h_arg)->required();
            cmd->add_flag("--json", flags.json_out);
            cmd->callback([&, solver]() {
                action = [&, solver]() {
                    Graph g = load_graph_arg(g_arg);
                    Graph h = load_graph_arg(h_arg);
                    std::optional<Mapping> found = solver(g, h);
                    if (flags.json_out) {
                        json j{{"answer", found ? "yes" : "no"}};
                        if (found)
                            j["mapping"] = *found;
                        out << j.dump(2) << '\n';
                    } else {
                        out << "answer " << (found ? "yes" : "no") << '\n';
                        if (found)
                            print_ints(out, "mapping", *found);
                    }
                };
            });
        };
        add_oracle("hom", [](const Graph& g, const Graph& h) { return brute_hom(g, h); });
        add_oracle("lihom", [](const Graph& g, const Graph& h) { return brute_lihom(g, h); });
        add_oracle("h21", [](const Graph& g, const Graph& h) {
            return brute_lihom(g, complement(h));
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        action();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace homsolve
