#include "pancover/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pancover/diamond.hpp"
#include "pancover/diamondsolver.hpp"
#include "pancover/findmodel.hpp"
#include "pancover/forge.hpp"
#include "pancover/minpan.hpp"
#include "pancover/oracle.hpp"
#include "pancover/pansolver.hpp"

namespace pancover {

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

Pattern load_pattern(const std::string& name, const std::string& file) {
    if (name == "custom") {
        if (file.empty()) throw std::runtime_error("--pattern custom needs --pattern-file");
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return Pattern::from_file_text(text);
    }
    return Pattern::by_name(name);
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

ThresholdPolicy policy_from(const std::vector<std::string>& kvs) {
    ThresholdPolicy pol;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--policy expects KEY=VALUE");
        pol.set(kv.substr(0, eq), std::stoll(kv.substr(eq + 1)));
    }
    return pol;
}

Graph random_graph(int n, double density, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) es.push_back({i, j});
    return Graph::from_edges(n, std::move(es));
}

Certificate solve_dispatch(const Graph& g, const Pattern& pat, int k, const ThresholdPolicy& pol,
                           long long budget) {
    if (pat.name == "pan1") return solve_pan1(g, k, pol);
    if (pat.name == "pan2") return solve_pan2(g, k, pol);
    if (pat.name == "diamond") return solve_diamond(g, k, pol);
    OracleOptions opt;
    opt.budget = budget;
    return solve_star_forest(g, pat, k, opt);
}

int run_bench(const std::string& suite, unsigned seed, int k, std::ostream& out) {
    std::string pname;
    if (suite == "random-pan1")
        pname = "pan1";
    else if (suite == "random-pan2")
        pname = "pan2";
    else if (suite == "random-diamond")
        pname = "diamond";
    else
        throw std::runtime_error("unknown suite " + suite);
    Pattern pat = Pattern::by_name(pname);
    std::mt19937 rng(seed);
    int packings = 0, covers = 0;
    for (int inst = 0; inst < 20; ++inst) {
        std::uniform_int_distribution<int> nd(8, 24);
        std::uniform_real_distribution<double> dd(0.08, 0.35);
        int n = nd(rng);
        Graph g = random_graph(n, dd(rng), rng);
        Certificate cert = solve_dispatch(g, pat, k, {}, kDefaultModelBudget);
        auto res = verify_certificate(g, pat, cert);
        if (!res) throw std::logic_error("bench: certificate failed verification: " + res.reason);
        if (cert.kind == Certificate::Kind::Packing) {
            ++packings;
            out << "result " << suite << " instance=" << inst << " n=" << n << " PACKING k=" << k
                << "\n";
        } else {
            ++covers;
            out << "result " << suite << " instance=" << inst << " n=" << n
                << " COVER size=" << cert.cover.size() << "\n";
        }
    }
    out << "result " << suite << " summary packings=" << packings << " covers=" << covers << "\n";
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"pancover: packing and covering induced subdivisions"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    std::string gen_family, gen_out, gen_pattern_file;
    int gen_n = 0, gen_r = 3, gen_cap = 200;
    gen->add_option("--family", gen_family, "triangle-wall|k2r|forest|hyper|semigrid|garland")
        ->required();
    gen->add_option("--n", gen_n, "family order")->required();
    gen->add_option("--r", gen_r, "r for the k2r family");
    gen->add_option("--cap", gen_cap, "hyperedge path cap");
    gen->add_option("--pattern-file", gen_pattern_file, "pattern file for forest/hyper/semigrid");
    gen->add_option("-o,--output", gen_out, "output file (stdout when omitted)");

    // detect
    auto* det = app.add_subcommand("detect", "detect an induced subdivision");
    std::string det_pattern, det_pattern_file, det_in;
    long long det_budget = kDefaultModelBudget;
    det->add_option("--pattern", det_pattern, "pan1|pan2|diamond|custom")->required();
    det->add_option("--pattern-file", det_pattern_file, "pattern file for custom");
    det->add_option("-i,--input", det_in, "graph file")->required();
    det->add_option("--budget", det_budget, "search budget for custom patterns");

    // solve
    auto* sol = app.add_subcommand("solve", "pack or cover induced subdivisions");
    std::string sol_pattern, sol_pattern_file, sol_in, sol_out;
    int sol_k = 1;
    long long sol_budget = kDefaultModelBudget;
    std::vector<std::string> sol_policy;
    sol->add_option("--pattern", sol_pattern, "pan1|pan2|diamond|custom")->required();
    sol->add_option("--pattern-file", sol_pattern_file, "pattern file for custom");
    sol->add_option("-k", sol_k, "packing target")->required();
    sol->add_option("-i,--input", sol_in, "graph file")->required();
    sol->add_option("-o,--output", sol_out, "certificate file");
    sol->add_option("--policy", sol_policy, "threshold override KEY=VALUE");
    sol->add_option("--budget", sol_budget, "budget for custom patterns");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a certificate");
    std::string ver_pattern, ver_pattern_file, ver_in, ver_cert;
    long long ver_budget = kDefaultModelBudget;
    ver->add_option("--pattern", ver_pattern, "pan1|pan2|diamond|custom")->required();
    ver->add_option("--pattern-file", ver_pattern_file, "pattern file for custom");
    ver->add_option("-i,--input", ver_in, "graph file")->required();
    ver->add_option("--cert", ver_cert, "certificate file")->required();
    ver->add_option("--budget", ver_budget, "budget for custom patterns");

    // oracle
    auto* ora = app.add_subcommand("oracle", "exact nu/tau by brute force");
    std::string ora_pattern, ora_pattern_file, ora_in;
    bool ora_nu = false, ora_tau = false;
    long long ora_budget = kDefaultModelBudget;
    ora->add_option("--pattern", ora_pattern, "pan1|pan2|diamond|custom")->required();
    ora->add_option("--pattern-file", ora_pattern_file, "pattern file for custom");
    ora->add_option("-i,--input", ora_in, "graph file")->required();
    ora->add_flag("--nu", ora_nu, "report the packing number");
    ora->add_flag("--tau", ora_tau, "report the hitting number");
    ora->add_option("--budget", ora_budget, "search budget");

    // bench
    auto* ben = app.add_subcommand("bench", "run a seeded batch");
    std::string ben_suite;
    unsigned ben_seed = 1;
    int ben_k = 2;
    ben->add_option("--suite", ben_suite, "random-pan1|random-pan2|random-diamond")->required();
    ben->add_option("--seed", ben_seed, "random seed")->required();
    ben->add_option("-k", ben_k, "packing target");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            std::optional<Pattern> pat;
            if (!gen_pattern_file.empty()) pat = load_pattern("custom", gen_pattern_file);
            LabeledGraph lg;
            if (gen_family == "garland")
                lg = garland(gen_n);
            else if (gen_family == "triangle-wall")
                lg = triangle_wall(gen_n);
            else if (gen_family == "k2r")
                lg = build_k2r_ce(gen_r, gen_n);
            else if (gen_family == "forest") {
                if (!pat) throw std::runtime_error("forest family needs --pattern-file");
                lg = build_forest_ce(*pat, gen_n);
            } else if (gen_family == "hyper") {
                lg = pat ? build_longcycle_ce(*pat, gen_n, gen_cap) : build_ub(gen_n, gen_cap);
            } else if (gen_family == "semigrid") {
                lg = pat ? build_3far_ce(*pat, gen_n) : build_semigrid(gen_n);
            } else {
                throw std::runtime_error("unknown family " + gen_family);
            }
            write_out(gen_out, serialize_labeled(lg));
            std::cout << "result gen family=" << gen_family << " n=" << lg.graph.n()
                      << " m=" << lg.graph.edge_count() << "\n";
            return 0;
        }
        if (*det) {
            Graph g = load_graph(det_in);
            Pattern pat = load_pattern(det_pattern, det_pattern_file);
            std::optional<VertexSet> found;
            if (pat.name == "pan1" || pat.name == "pan2") {
                if (auto pan = find_min_pan(g, pat.name == "pan1" ? 1 : 2))
                    found = pan->vertex_set();
            } else if (pat.name == "diamond") {
                if (auto m = detect_diamond(g)) found = m->vertex_set();
            } else {
                if (auto m = find_model(g, pat, det_budget)) found = m->vertex_set();
            }
            if (found) {
                std::cout << "result found order=" << found->size() << " vertices=";
                for (size_t i = 0; i < found->size(); ++i)
                    std::cout << (i ? "," : "") << (*found)[i] + 1;
                std::cout << "\n";
            } else {
                std::cout << "result none\n";
            }
            return 0;
        }
        if (*sol) {
            Graph g = load_graph(sol_in);
            Pattern pat = load_pattern(sol_pattern, sol_pattern_file);
            ThresholdPolicy pol = policy_from(sol_policy);
            Certificate cert = solve_dispatch(g, pat, sol_k, pol, sol_budget);
            auto res = verify_certificate(g, pat, cert, sol_budget);
            if (!res) {
                std::cerr << "solver produced an invalid certificate: " << res.reason << "\n";
                return 3;
            }
            if (!sol_out.empty()) write_out(sol_out, serialize_certificate(cert));
            if (cert.kind == Certificate::Kind::Packing)
                std::cout << "result PACKING pattern=" << pat.name << " k=" << cert.k << "\n";
            else
                std::cout << "result COVER pattern=" << pat.name << " size=" << cert.cover.size()
                          << "\n";
            return 0;
        }
        if (*ver) {
            Graph g = load_graph(ver_in);
            Pattern pat = load_pattern(ver_pattern, ver_pattern_file);
            std::ifstream in(ver_cert);
            if (!in) throw std::runtime_error("cannot open " + ver_cert);
            Certificate cert = parse_certificate(in);
            auto res = verify_certificate(g, pat, cert, ver_budget);
            if (!res) {
                std::cout << "result invalid: " << res.reason << "\n";
                return 3;
            }
            std::cout << "result valid\n";
            return 0;
        }
        if (*ora) {
            Graph g = load_graph(ora_in);
            Pattern pat = load_pattern(ora_pattern, ora_pattern_file);
            OracleOptions opt;
            opt.budget = ora_budget;
            if (!ora_nu && !ora_tau) ora_nu = ora_tau = true;
            if (ora_nu && ora_tau) {
                auto rep = duality_report(g, pat, opt);
                std::cout << "nu " << rep.nu << "\n";
                for (const auto& w : rep.nu_witness) {
                    std::cout << "m";
                    for (int v : w) std::cout << " " << v + 1;
                    std::cout << "\n";
                }
                std::cout << "tau " << rep.tau << "\n";
                std::cout << "x";
                for (int v : rep.tau_witness) std::cout << " " << v + 1;
                std::cout << "\n";
            } else if (ora_nu) {
                auto rep = nu_exact(g, pat, opt);
                std::cout << "nu " << rep.nu << "\n";
                for (const auto& w : rep.nu_witness) {
                    std::cout << "m";
                    for (int v : w) std::cout << " " << v + 1;
                    std::cout << "\n";
                }
            } else {
                auto rep = tau_exact(g, pat, opt);
                std::cout << "tau " << rep.tau << "\n";
                std::cout << "x";
                for (int v : rep.tau_witness) std::cout << " " << v + 1;
                std::cout << "\n";
            }
            return 0;
        }
        if (*ben) return run_bench(ben_suite, ben_seed, ben_k, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace pancover
