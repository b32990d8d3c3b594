#include "dmorse/cli.hpp"

#include "dmorse/complex.hpp"
#include "dmorse/conf2.hpp"
#include "dmorse/cup.hpp"
#include "dmorse/gradient.hpp"
#include "dmorse/morse.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

namespace dmorse {

namespace {

using json = nlohmann::ordered_json;

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GradientField build_by(const OrderedComplex& K, RunConfig::Algo algo) {
    return algo == RunConfig::Algo::Fast ? build_field_fast(K) : build_field_staged(K);
}

std::vector<std::vector<std::string>> critical_names(const OrderedComplex& K,
                                                     const GradientField& F) {
    std::vector<std::vector<std::string>> out;
    for (int d = 0; d <= K.dim(); ++d) {
        std::vector<std::string> names;
        for (int r : F.critical(d)) names.push_back(format_simplex(K, K.face(d, r)));
        out.push_back(std::move(names));
    }
    return out;
}

std::string critical_line(const std::vector<std::vector<std::string>>& names) {
    std::string s = "critical:";
    for (const auto& dim_names : names)
        for (const auto& n : dim_names) s += " " + n;
    return s;
}

std::string betti_line(const BettiProfile& b) {
    std::string s = "betti:";
    for (long long r : b.betti) s += " " + std::to_string(r);
    s += "; torsion:";
    std::string t;
    for (std::size_t p = 0; p < b.torsion.size(); ++p)
        for (Coeff f : b.torsion[p]) t += " " + std::to_string(p) + ":" + std::to_string(f);
    s += t.empty() ? " none" : t;
    return s;
}

int run_build(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = parse_complex_file(cfg.input);
    GradientField F = build_by(K, cfg.algo);
    bool both = cfg.algo == RunConfig::Algo::Both;
    bool identical = true;
    if (both) identical = F.same_pairings(build_field_fast(K));

    std::vector<long long> faces, counts;
    for (int d = 0; d <= K.dim(); ++d) {
        faces.push_back(K.count(d));
        counts.push_back(F.critical_count(d));
    }
    auto names = critical_names(K, F);
    if (cfg.json) {
        json j;
        if (both) j["identical"] = identical;
        j["faces"] = faces;
        j["critical_counts"] = counts;
        j["critical"] = names;
        j["pairings"] = F.pairings().size();
        out << j.dump(2) << "\n";
    } else {
        if (both) out << "fields identical: " << (identical ? "true" : "false") << "\n";
        out << "faces:";
        for (long long f : faces) out << " " << f;
        out << "\ncritical:";
        for (long long c : counts) out << " " << c;
        out << "\npairings: " << F.pairings().size() << "\n";
    }
    if (!identical) throw contract_violation("staged and fast fields disagree");
    return 0;
}

int run_pair(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = parse_complex_file(cfg.input);
    if (cfg.algo == RunConfig::Algo::Both) {
        GradientField F = build_field_staged(K);
        GradientField G = build_field_fast(K);
        bool identical = F.same_pairings(G);
        auto names = critical_names(K, F);
        if (cfg.json) {
            json j;
            j["identical"] = identical;
            j["critical"] = names;
            out << j.dump(2) << "\n";
        } else {
            out << "fields identical: " << (identical ? "true" : "false") << "; "
                << critical_line(names) << "\n";
        }
        if (!identical) throw contract_violation("staged and fast fields disagree");
        return 0;
    }
    GradientField F = build_by(K, cfg.algo);
    auto names = critical_names(K, F);
    if (cfg.json) {
        json j;
        auto pairs = json::array();
        for (const Pairing& p : F.pairings())
            pairs.push_back({format_simplex(K, K.face(p.dim, p.low)),
                             format_simplex(K, K.face(p.dim + 1, p.high))});
        j["pairings"] = std::move(pairs);
        j["critical"] = names;
        out << j.dump(2) << "\n";
    } else {
        out << pairing_list_text(F);
        out << critical_line(names) << "\n";
    }
    return 0;
}

int run_betti(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = parse_complex_file(cfg.input);
    GradientField F = build_by(K, cfg.algo);
    MorseComplex mc = build_morse_complex(F);
    if (cfg.mod_p != 0) {
        std::vector<long long> ranks = betti_mod_p(mc, cfg.mod_p);
        if (cfg.json) {
            json j;
            j["mod"] = cfg.mod_p;
            j["betti"] = ranks;
            out << j.dump(2) << "\n";
        } else {
            out << "betti mod " << cfg.mod_p << ":";
            for (long long r : ranks) out << " " << r;
            out << "\n";
        }
        return 0;
    }
    BettiProfile b = homology(mc);
    if (cfg.json)
        out << betti_json(b) << "\n";
    else
        out << betti_line(b) << "\n";
    return 0;
}

int run_cup(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = complete_graph(cfg.m);
    OrderedComplex C = two_point_model(K);
    GradientField F = build_field_staged(C);
    MorseComplex mc = build_morse_complex(F);
    Conf2Basis basis = conf2_basis(cfg.m);
    CohomologyRing R = conf2_ring(mc, basis);
    if (cfg.json)
        out << ring_table_json(R) << "\n";
    else
        out << ring_table_text(R);
    return 0;
}

int run_conf(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = complete_graph(cfg.m);
    OrderedComplex C = two_point_model(K);

    if (cfg.conf_export) {
        std::ostringstream text;
        text << "# two-point configuration model of the complete graph on " << cfg.m
             << " vertices\n";
        text << "# vertices are ordered pairs of distinct graph vertices:\n";
        for (int v = 0; v < C.vertex_count(); ++v)
            text << "# vertex " << v << " = " << C.label(v) << "\n";
        for (int d = 0; d <= C.dim(); ++d)
            for (int i = 0; i < C.count(d); ++i) {
                if (!C.cofacets(d, i).empty()) continue;
                const Simplex& f = C.face(d, i);
                for (std::size_t k = 0; k < f.size(); ++k)
                    text << (k ? " " : "") << f.vertices()[k];
                text << "\n";
            }
        if (!cfg.output.empty()) {
            std::ofstream file(cfg.output);
            if (!file) throw parse_error("cannot open output file: " + cfg.output);
            file << text.str();
            out << "wrote " << cfg.output << "\n";
        } else {
            out << text.str();
        }
        return 0;
    }

    GradientField F = build_field_staged(C);
    MorseComplex mc = build_morse_complex(F);
    if (cfg.conf_betti) {
        BettiProfile b = homology(mc);
        if (cfg.json)
            out << betti_json(b) << "\n";
        else
            out << betti_line(b) << "\n";
        return 0;
    }

    std::vector<long long> faces, counts;
    for (int d = 0; d <= C.dim(); ++d) {
        faces.push_back(C.count(d));
        counts.push_back(F.critical_count(d));
    }
    if (cfg.json) {
        json j;
        j["m"] = cfg.m;
        j["faces"] = faces;
        j["critical_counts"] = counts;
        j["euler"] = mc.euler_characteristic();
        out << j.dump(2) << "\n";
    } else {
        out << "m: " << cfg.m << "\nfaces:";
        for (long long f : faces) out << " " << f;
        out << "\ncritical:";
        for (long long c : counts) out << " " << c;
        out << "\neuler: " << mc.euler_characteristic() << "\n";
    }
    return 0;
}

int run_tc(const RunConfig& cfg, std::ostream& out) {
    OrderedComplex K = complete_graph(cfg.m);
    OrderedComplex C = two_point_model(K);
    GradientField F = build_field_staged(C);
    MorseComplex mc = build_morse_complex(F);
    Conf2Basis basis = conf2_basis(cfg.m);
    CohomologyRing R = conf2_ring(mc, basis);

    ZclPlan plan = zcl_plan(R, cfg.s);
    ZclResult res = zcl_lower_bound(R, plan.candidates);
    const int upper = cfg.s * R.hdim();

    if (cfg.json) {
        json j;
        j["m"] = cfg.m;
        j["s"] = cfg.s;
        j["coefficients"] = plan.mod2 ? "mod 2" : "Z";
        j["bound"] = res.bound;
        j["upper"] = upper;
        if (res.bound == upper)
            j["tc"] = res.bound;
        else
            j["tc"] = nullptr;
        auto used = json::array();
        for (int k : res.used) used.push_back(plan.names[static_cast<std::size_t>(k)]);
        j["factors"] = std::move(used);
        out << j.dump(2) << "\n";
    } else {
        out << "zcl lower bound: " << res.bound << "; TC_" << cfg.s;
        if (res.bound == upper)
            out << " = " << res.bound << "\n";
        else
            out << " in [" << res.bound << ", " << upper << "]\n";
    }
    return 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case RunConfig::Command::Build: return run_build(config, out);
        case RunConfig::Command::Pair: return run_pair(config, out);
        case RunConfig::Command::Betti: return run_betti(config, out);
        case RunConfig::Command::Cup: return run_cup(config, out);
        case RunConfig::Command::Conf: return run_conf(config, out);
        case RunConfig::Command::Tc: return run_tc(config, out);
    }
    throw contract_violation("unknown command");
}

int run_cli(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"discrete Morse machinery for ordered simplicial complexes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string algo_name = "staged";

    auto add_algo = [&](CLI::App* sub) {
        sub->add_option("--algo", algo_name,
                        "field construction: staged (alias A), fast, or both")
            ->check(CLI::IsMember({"staged", "A", "fast", "both"}));
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "complex in text format (one face per line)")
            ->required();
    };
    auto add_m = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "number of complete-graph vertices")
            ->required()
            ->check(CLI::Range(2, 64));
    };

    CLI::App* build = app.add_subcommand("build", "build a gradient field on a complex");
    add_input(build);
    add_algo(build);
    add_json(build);

    CLI::App* pair = app.add_subcommand("pair", "list the pairing, or compare constructions");
    add_input(pair);
    add_algo(pair);
    add_json(pair);

    CLI::App* betti = app.add_subcommand("betti", "homology of a complex");
    add_input(betti);
    add_algo(betti);
    betti->add_option("--mod-p", cfg.mod_p, "ranks over the field with p elements");
    add_json(betti);

    CLI::App* cup = app.add_subcommand("cup", "ring table of the two-point complete-graph model");
    add_m(cup);
    add_json(cup);

    CLI::App* conf = app.add_subcommand("conf", "two-point configuration model of a complete graph");
    add_m(conf);
    conf->add_flag("--betti", cfg.conf_betti, "homology of the model");
    conf->add_flag("--export", cfg.conf_export, "print the model in complex text format");
    conf->add_option("--output", cfg.output, "write --export text to a file");
    add_json(conf);

    CLI::App* tc = app.add_subcommand("tc", "zero-divisor bound for higher topological complexity");
    add_m(tc);
    tc->add_option("--s", cfg.s, "number of tensor factors")->check(CLI::Range(2, 16));
    add_json(tc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (build->parsed()) cfg.command = RunConfig::Command::Build;
    if (pair->parsed()) cfg.command = RunConfig::Command::Pair;
    if (betti->parsed()) cfg.command = RunConfig::Command::Betti;
    if (cup->parsed()) cfg.command = RunConfig::Command::Cup;
    if (conf->parsed()) cfg.command = RunConfig::Command::Conf;
    if (tc->parsed()) cfg.command = RunConfig::Command::Tc;
    cfg.algo = algo_name == "fast"   ? RunConfig::Algo::Fast
               : algo_name == "both" ? RunConfig::Algo::Both
                                     : RunConfig::Algo::Staged;

    try {
        if (cfg.mod_p != 0 && !is_prime(cfg.mod_p))
            throw parse_error("--mod-p expects a prime");
        return run(cfg, out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arithmetic_overflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const contract_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace dmorse
