#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cherrylab/colouring.hpp"
#include "cherrylab/extremal.hpp"
#include "cherrylab/io.hpp"
#include "cherrylab/oracle.hpp"
#include "cherrylab/pairwalk.hpp"
#include "cherrylab/symmetrise.hpp"
#include "cherrylab/version.hpp"
#include "json.hpp"

using namespace cherrylab;
using nlohmann::json;

namespace {

struct Ctx {
    std::string command;  // argv joined, binary path dropped
    std::string format = "text";
    std::string in_path;

    bool text() const { return format == "text"; }

    std::string header() const {
        return std::string("# cherrylab ") + kVersion + " " + command + "\n";
    }

    std::string read_input() const {
        if (in_path.empty() || in_path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open input file: " + in_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    Hypergraph3 hypergraph() const { return parse_hypergraph(read_input()); }
    ColouredGraph coloured() const { return parse_coloured_graph(read_input()); }

    void emit_json(json j) const {
        j["command"] = command;
        std::cout << j.dump(2) << '\n';
    }
};

void add_common(CLI::App* cmd, Ctx& ctx, bool with_input = true) {
    cmd->add_option("--format", ctx.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_input) cmd->add_option("--in", ctx.in_path, "input file (default stdin)");
}

json witness_json(const std::vector<int>& seq) { return json(seq); }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::runtime_error("empty entry in integer list");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::runtime_error("integer list must be non-empty");
    return out;
}

Selector make_selector(const std::string& spec, std::uint64_t seed) {
    if (spec == "first") return Selector::first_index();
    if (spec == "random") return Selector::seeded_random(seed);
    if (spec.rfind("prefer:", 0) == 0) {
        std::ifstream f(spec.substr(7));
        if (!f) throw std::runtime_error("cannot open prefer-set file: " + spec.substr(7));
        std::vector<int> vs;
        int v;
        while (f >> v) vs.push_back(v);
        return Selector::prefer_set(std::move(vs));
    }
    throw std::runtime_error("unknown selector: " + spec);
}

json trace_json(const SymmetrisationTrace& tr) {
    json steps = json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"k", s.k},
                         {"picked", s.picked},
                         {"gain_picked", s.gain_picked},
                         {"gain_first", s.gain_first},
                         {"cloned_to", s.cloned_to},
                         {"cherries_after", s.cherries_after},
                         {"in_nbhd_symdiff", s.in_nbhd_symdiff}});
    return steps;
}

void write_trace_file(const std::string& path, const SymmetrisationTrace& tr) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open trace file: " + path);
    for (const auto& s : tr.steps) {
        json j = {{"k", s.k},
                  {"picked", s.picked},
                  {"gain_picked", s.gain_picked},
                  {"gain_first", s.gain_first},
                  {"cloned_to", s.cloned_to},
                  {"cherries_after", s.cherries_after},
                  {"in_nbhd_symdiff", s.in_nbhd_symdiff}};
        f << j.dump() << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"cherrylab: tight-cycle extremal hypergraph toolkit"};
    app.require_subcommand(1);
    Ctx ctx;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) ctx.command += ' ';
        ctx.command += argv[i];
    }

    // construct
    std::string parts_arg;
    auto* c_construct = app.add_subcommand("construct", "iterated blow-up construction");
    c_construct->add_option("--parts", parts_arg, "comma-separated part sizes")->required();
    add_common(c_construct, ctx, false);
    c_construct->callback([&] {
        auto h = construct_iterated(make_profile(parse_int_list(parts_arg)));
        if (ctx.text()) std::cout << ctx.header() << serialize(h);
        else
            ctx.emit_json({{"kind", "hypergraph"},
                           {"n", h.n},
                           {"value", h.edge_count()},
                           {"witness", nullptr},
                           {"h3", serialize(h)}});
    });

    // blowup
    int blow_t = 1;
    auto* c_blow = app.add_subcommand("blowup", "t-blow-up of a hypergraph");
    c_blow->add_option("--t", blow_t, "copies per vertex")->required();
    add_common(c_blow, ctx);
    c_blow->callback([&] {
        auto h = blow_up(ctx.hypergraph(), blow_t);
        if (ctx.text()) std::cout << ctx.header() << serialize(h);
        else
            ctx.emit_json({{"kind", "hypergraph"},
                           {"n", h.n},
                           {"value", h.edge_count()},
                           {"witness", nullptr},
                           {"h3", serialize(h)}});
    });

    // shadow
    auto* c_shadow = app.add_subcommand("shadow", "pairs covered by some edge");
    add_common(c_shadow, ctx);
    c_shadow->callback([&] {
        auto h = ctx.hypergraph();
        auto sh = shadow(h);
        if (ctx.text()) {
            std::cout << ctx.header();
            for (auto [u, v] : sh) std::cout << u << ' ' << v << '\n';
        } else {
            ctx.emit_json({{"kind", "shadow"},
                           {"n", h.n},
                           {"value", sh.size()},
                           {"witness", nullptr}});
        }
    });

    // detect-odd
    auto* c_detect = app.add_subcommand("detect-odd", "shortest pseudocycle of length != 0 mod 3");
    add_common(c_detect, ctx);
    c_detect->callback([&] {
        auto h = ctx.hypergraph();
        auto w = detect_odd_pseudocycle(h);
        if (ctx.text()) {
            std::cout << ctx.header();
            if (!w) std::cout << "none\n";
            else {
                std::cout << "odd-cycle length " << w->length() << '\n';
                for (std::size_t i = 0; i < w->seq.size(); ++i)
                    std::cout << w->seq[i] << (i + 1 < w->seq.size() ? ' ' : '\n');
            }
        } else {
            json j = {{"kind", "odd_pseudocycle"}, {"n", h.n}};
            j["value"] = w ? json(w->length()) : json(nullptr);
            j["witness"] = w ? witness_json(w->seq) : json(nullptr);
            ctx.emit_json(j);
        }
    });

    // good-colour
    auto* c_good = app.add_subcommand("good-colour", "construct a good colouring or an odd-cycle witness");
    add_common(c_good, ctx);
    c_good->callback([&] {
        auto h = ctx.hypergraph();
        auto r = construct_good_colouring(h);
        if (ctx.text()) {
            std::cout << ctx.header();
            if (r.has_colouring()) std::cout << serialize(r.colouring());
            else {
                std::cout << "odd-cycle length " << r.witness().length() << '\n';
                for (std::size_t i = 0; i < r.witness().seq.size(); ++i)
                    std::cout << r.witness().seq[i]
                              << (i + 1 < r.witness().seq.size() ? ' ' : '\n');
            }
        } else {
            json j;
            if (r.has_colouring()) {
                j["result"] = "colouring";
                j["colouring"] = serialize(r.colouring());
            } else {
                j["result"] = "odd_cycle";
                j["witness"] = witness_json(r.witness().seq);
            }
            ctx.emit_json(j);
        }
    });

    // verify-colouring
    std::string colouring_path;
    auto* c_verify = app.add_subcommand("verify-colouring", "check every edge is a cherry");
    c_verify->add_option("--colouring", colouring_path,
                         "colouring file (default stdin)");
    add_common(c_verify, ctx);
    int verify_exit = 0;
    c_verify->callback([&] {
        auto h = ctx.hypergraph();
        std::string ctext;
        if (colouring_path.empty()) {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            ctext = ss.str();
        } else {
            std::ifstream f(colouring_path);
            if (!f) throw std::runtime_error("cannot open colouring file: " + colouring_path);
            std::ostringstream ss;
            ss << f.rdbuf();
            ctext = ss.str();
        }
        auto g = parse_coloured_graph(ctext);
        bool ok = verify_good_colouring(h, g);
        if (ctx.text()) std::cout << ctx.header() << (ok ? "ok" : "not-good") << '\n';
        else
            ctx.emit_json({{"kind", "verify_colouring"},
                           {"n", h.n},
                           {"value", ok ? 1 : 0},
                           {"witness", nullptr}});
        verify_exit = ok ? 0 : 1;
    });

    // cherries
    auto* c_cherries = app.add_subcommand("cherries", "count cherries of a coloured graph");
    add_common(c_cherries, ctx);
    c_cherries->callback([&] {
        auto g = ctx.coloured();
        auto c = cherry_count(g);
        if (ctx.text()) std::cout << ctx.header() << c << '\n';
        else
            ctx.emit_json(
                {{"kind", "cherries"}, {"n", g.n}, {"value", c}, {"witness", nullptr}});
    });

    // symmetrise
    int sym_x = 0;
    std::string selector_arg = "first";
    std::uint64_t seed = 0;
    std::string trace_path;
    auto* c_sym = app.add_subcommand("symmetrise", "grow a full blue clone-clique around x");
    c_sym->add_option("--x", sym_x, "start vertex (default 0)");
    c_sym->add_option("--selector", selector_arg, "first | random | prefer:<file>");
    c_sym->add_option("--seed", seed, "seed for the random selector");
    c_sym->add_option("--trace", trace_path, "write the step trace as JSON lines");
    add_common(c_sym, ctx);
    c_sym->callback([&] {
        auto g = ctx.coloured();
        auto res = symmetrise_from(g, sym_x, make_selector(selector_arg, seed));
        if (!trace_path.empty()) write_trace_file(trace_path, res.trace);
        if (ctx.text()) {
            std::cout << ctx.header();
            std::cout << "# block";
            for (int v : res.block) std::cout << ' ' << v;
            std::cout << "\n# cherries " << res.trace.cherries_before << " -> "
                      << (res.trace.steps.empty() ? res.trace.cherries_before
                                                  : res.trace.steps.back().cherries_after)
                      << '\n'
                      << serialize(res.graph);
        } else {
            ctx.emit_json({{"kind", "symmetrise"},
                           {"n", g.n},
                           {"block", res.block},
                           {"cherries_before", res.trace.cherries_before},
                           {"cherries_after",
                            res.trace.steps.empty() ? res.trace.cherries_before
                                                    : res.trace.steps.back().cherries_after},
                           {"trace", trace_json(res.trace)},
                           {"colouring", serialize(res.graph)}});
        }
    });

    // full-symmetrise
    auto* c_full = app.add_subcommand("full-symmetrise",
                                      "partition into full blue clone-cliques");
    c_full->add_option("--selector", selector_arg, "first | random | prefer:<file>");
    c_full->add_option("--seed", seed, "seed for the random selector");
    add_common(c_full, ctx);
    c_full->callback([&] {
        auto g = ctx.coloured();
        auto res = full_symmetrise(g, make_selector(selector_arg, seed));
        auto c = cherry_count(res.graph);
        if (ctx.text()) {
            std::cout << ctx.header();
            for (std::size_t i = 0; i < res.partition.blocks.size(); ++i) {
                std::cout << "# block " << i;
                for (int v : res.partition.blocks[i]) std::cout << ' ' << v;
                std::cout << '\n';
            }
            std::cout << "# cherries " << c << '\n' << serialize(res.graph);
        } else {
            ctx.emit_json({{"kind", "full_symmetrise"},
                           {"n", g.n},
                           {"blocks", res.partition.blocks},
                           {"cherries", c},
                           {"colouring", serialize(res.graph)}});
        }
    });

    // reorient
    auto* c_reorient = app.add_subcommand(
        "reorient", "point between-block red edges at the earlier block");
    add_common(c_reorient, ctx);
    c_reorient->callback([&] {
        auto g = ctx.coloured();
        // blocks are recovered as blue components; validation happens inside
        std::vector<char> seen(g.n, 0);
        ClonePartition part;
        for (int x = 0; x < g.n; ++x) {
            if (seen[x]) continue;
            std::vector<int> q{x};
            seen[x] = 1;
            for (int v = 0; v < g.n; ++v)
                if (!seen[v] && g.is_blue(x, v)) {
                    q.push_back(v);
                    seen[v] = 1;
                }
            part.blocks.push_back(std::move(q));
        }
        std::sort(part.blocks.begin(), part.blocks.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() > b.size();
                      return a.front() < b.front();
                  });
        auto out = reorient_to_larger(g, part);
        auto c = cherry_count(out);
        if (ctx.text()) std::cout << ctx.header() << "# cherries " << c << '\n'
                                  << serialize(out);
        else
            ctx.emit_json({{"kind", "reorient"},
                           {"n", g.n},
                           {"value", c},
                           {"witness", nullptr},
                           {"colouring", serialize(out)}});
    });

    // diameter
    int jobs = 1;
    auto* c_diam = app.add_subcommand("diameter", "max order of shortest pseudopaths");
    c_diam->add_option("--jobs", jobs, "parallel workers (default 1)");
    add_common(c_diam, ctx);
    c_diam->callback([&] {
        auto h = ctx.hypergraph();
        auto d = diameter(h, jobs);
        if (ctx.text())
            std::cout << ctx.header() << d.value << (d.vacuous ? " vacuous" : "") << '\n';
        else {
            json j = {{"kind", "diameter"},
                      {"n", h.n},
                      {"value", d.value},
                      {"witness", nullptr}};
            if (d.vacuous) j["vacuous"] = true;
            ctx.emit_json(j);
        }
    });

    // trim
    int threshold = 1;
    auto* c_trim = app.add_subcommand("trim", "delete edges on pairs of small codegree");
    c_trim->add_option("--threshold", threshold, "codegree threshold c")->required();
    add_common(c_trim, ctx);
    c_trim->callback([&] {
        auto h = trim_small_codegree(ctx.hypergraph(), threshold);
        if (ctx.text()) std::cout << ctx.header() << serialize(h);
        else
            ctx.emit_json({{"kind", "hypergraph"},
                           {"n", h.n},
                           {"value", h.edge_count()},
                           {"witness", nullptr},
                           {"h3", serialize(h)}});
    });

    // extend-cycle
    long long target_m = 0;
    std::string cycle_arg;
    auto* c_ext = app.add_subcommand("extend-cycle", "stretch a pseudocycle to length m");
    c_ext->add_option("--m", target_m, "target length")->required();
    c_ext->add_option("--cycle", cycle_arg, "comma-separated cycle vertices")->required();
    add_common(c_ext, ctx);
    c_ext->callback([&] {
        auto h = ctx.hypergraph();
        CycleWitness base{parse_int_list(cycle_arg)};
        auto out = extend_pseudocycle(h, base, target_m);
        if (ctx.text()) {
            std::cout << ctx.header();
            for (std::size_t i = 0; i < out.seq.size(); ++i)
                std::cout << out.seq[i] << (i + 1 < out.seq.size() ? ' ' : '\n');
        } else {
            ctx.emit_json({{"kind", "extended_pseudocycle"},
                           {"n", h.n},
                           {"value", out.length()},
                           {"witness", witness_json(out.seq)}});
        }
    });

    // f-table
    int max_n = 1;
    auto* c_ft = app.add_subcommand("f-table", "extremal counts f(n) with argmax splits");
    c_ft->add_option("--max-n", max_n, "table size")->required();
    add_common(c_ft, ctx, false);
    c_ft->callback([&] {
        auto t = f_table(max_n);
        auto density = [&](int n) {
            if (n < 3) return 0.0;
            return 6.0 * static_cast<double>(t.f[n]) / (static_cast<double>(n) * (n - 1) * (n - 2));
        };
        if (ctx.text()) {
            std::cout << ctx.header();
            char buf[64];
            for (int n = 1; n <= max_n; ++n) {
                std::snprintf(buf, sizeof buf, "%.6f", density(n));
                std::cout << n << '\t' << t.f[n] << '\t' << t.split[n] << '\t' << buf << '\n';
            }
        } else {
            json rows = json::array();
            for (int n = 1; n <= max_n; ++n)
                rows.push_back({{"n", n},
                                {"f", t.f[n]},
                                {"k", t.split[n]},
                                {"density", density(n)}});
            ctx.emit_json({{"kind", "f_table"}, {"max_n", max_n}, {"rows", rows}});
        }
    });

    // oracle
    auto* c_oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    c_oracle->require_subcommand(1);

    int oracle_n = 3;
    auto* c_me = c_oracle->add_subcommand("max-edges",
                                          "max edges of an odd-pseudocycle-free 3-graph");
    c_me->add_option("--n", oracle_n, "vertex count (<= 6)")->required();
    c_me->add_option("--jobs", jobs, "parallel workers");
    add_common(c_me, ctx, false);
    c_me->callback([&] {
        auto r = oracle::max_edges_odd_free(oracle_n, jobs);
        if (ctx.text()) {
            std::cout << ctx.header() << "objective " << r.objective << "\nn " << r.n
                      << "\noptimum " << r.optimum << "\noptima " << r.optima_count
                      << "\nnodes " << r.nodes_explored << '\n'
                      << serialize(r.witness);
        } else {
            ctx.emit_json({{"kind", "search_report"},
                           {"objective", r.objective},
                           {"n", r.n},
                           {"value", r.optimum},
                           {"witness", serialize(r.witness)},
                           {"optima_count", r.optima_count},
                           {"nodes_explored", r.nodes_explored}});
        }
    });

    auto* c_mc = c_oracle->add_subcommand("max-cherries", "max cherries over all colourings");
    c_mc->add_option("--n", oracle_n, "vertex count (<= 5)")->required();
    c_mc->add_option("--jobs", jobs, "parallel workers");
    add_common(c_mc, ctx, false);
    c_mc->callback([&] {
        auto r = oracle::max_cherries(oracle_n, jobs);
        if (ctx.text()) {
            std::cout << ctx.header() << "objective " << r.objective << "\nn " << r.n
                      << "\noptimum " << r.optimum << "\noptima " << r.optima_count
                      << "\nnodes " << r.nodes_explored << '\n'
                      << serialize(r.witness);
        } else {
            ctx.emit_json({{"kind", "search_report"},
                           {"objective", r.objective},
                           {"n", r.n},
                           {"value", r.optimum},
                           {"witness", serialize(r.witness)},
                           {"optima_count", r.optima_count},
                           {"nodes_explored", r.nodes_explored}});
        }
    });

    int lmax = 15;
    auto* c_so = c_oracle->add_subcommand("shortest-odd",
                                          "shortest odd closed tight walk, by length DP");
    c_so->add_option("--lmax", lmax, "length cap (<= 15)")->required();
    add_common(c_so, ctx);
    c_so->callback([&] {
        auto h = ctx.hypergraph();
        auto r = oracle::shortest_odd_bruteforce(h, lmax);
        if (ctx.text()) {
            std::cout << ctx.header();
            if (r) std::cout << *r << '\n';
            else std::cout << "none\n";
        } else {
            json j = {{"kind", "shortest_odd"}, {"n", h.n}, {"witness", nullptr}};
            j["value"] = r ? json(*r) : json(nullptr);
            ctx.emit_json(j);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return verify_exit;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
