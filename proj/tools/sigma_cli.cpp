// Command-line surface for the sigma-partition toolkit.
//
// Data goes to stdout (JSON/CSV/DOT only); diagnostics go to stderr.
// Exit codes: 0 success / Sat, 1 negative result (Unsat, reject, none),
// 2 resource or budget limit, 64 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigma/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

// A partition argument is a file path or the canonical form k3n12:000121.
sigma::DefiningSequence load_partition(const std::string& arg) {
    if (!std::filesystem::exists(arg) && arg.find(':') != std::string::npos)
        return sigma::parse_canonical(arg);
    std::ifstream in(arg);
    if (!in) throw sigma::parse_error("cannot open partition file: " + arg);
    sigma::json j;
    try {
        in >> j;
    } catch (const sigma::json::exception& e) {
        throw sigma::parse_error(arg + ": " + e.what());
    }
    return sigma::decode_sequence(j);
}

sigma::VertexOrdering load_ordering(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) throw sigma::parse_error("cannot open ordering file: " + arg);
    sigma::json j;
    try {
        in >> j;
    } catch (const sigma::json::exception& e) {
        throw sigma::parse_error(arg + ": " + e.what());
    }
    return sigma::decode_ordering(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw sigma::error("cannot write " + out_path);
        out << text;
    }
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::map<int, int> parse_free_map(const std::string& text) {
    std::map<int, int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw sigma::parse_error("free values are index=label pairs");
        out[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigma-partition toolkit: cyclic decompositions of K_n and transitive orientations"};
    app.require_subcommand(1);

    sigma::Budget budget;
    app.add_option("--budget-nodes", budget.max_nodes, "solver node budget");
    app.add_option("--budget-seconds", budget.max_seconds, "solver time budget per instance");

    std::string part_arg, order_arg, target_arg, out_path, free_arg, a_arg, odd_ns_arg;
    int opt_k = 3, opt_n = 0, opt_u = 0, opt_v = 1, cap = 0, jobs = 1;
    bool all = false;
    std::string format = "csv";

    auto* gen = app.add_subcommand("gen", "emit a partition JSON from k, n and the defining sequence");
    gen->add_option("--k", opt_k, "part count")->required();
    gen->add_option("--n", opt_n, "vertex count")->required();
    gen->add_option("--a", a_arg, "comma-separated labels a_1..a_{n/2}")->required();

    auto* label = app.add_subcommand("label", "label of the edge {u,v}");
    label->add_option("partition", part_arg)->required();
    label->add_option("--u", opt_u)->required();
    label->add_option("--v", opt_v)->required();

    auto* check = app.add_subcommand("check", "reversal report of an ordering against a partition");
    check->add_option("partition", part_arg)->required();
    check->add_option("ordering", order_arg)->required();

    auto* standard = app.add_subcommand("standard", "standard orientation, if one exists");
    standard->add_option("partition", part_arg)->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide transitive sigma-orientability");
    solve_cmd->add_option("partition", part_arg)->required();
    solve_cmd->add_flag("--all", all, "enumerate all accepted orderings");
    solve_cmd->add_option("--cap", cap, "cap for --all");

    auto* enum_cmd = app.add_subcommand("enumerate", "all accepted orderings up to --cap");
    enum_cmd->add_option("partition", part_arg)->required();
    enum_cmd->add_option("--cap", cap);

    auto* blowup = app.add_subcommand("blowup", "blow-up constructions");
    auto* bu_make = blowup->add_subcommand("make", "blow a base sequence up to n");
    bu_make->add_option("--base", part_arg)->required();
    bu_make->add_option("--n", opt_n)->required();
    bu_make->add_option("--free", free_arg, "free labels, e.g. 6=1,12=0");
    auto* bu_lift = blowup->add_subcommand("lift", "lift an accepted base ordering to a blow-up");
    bu_lift->add_option("--base", part_arg)->required();
    bu_lift->add_option("--order", order_arg)->required();
    bu_lift->add_option("--target", target_arg)->required();
    auto* bu_detect = blowup->add_subcommand("detect", "find all blow-up witnesses");
    bu_detect->add_option("partition", part_arg)->required();

    auto* dual = app.add_subcommand("dual", "dual partition");
    dual->add_option("partition", part_arg)->required();

    auto* classify = app.add_subcommand("classify", "halt/step/jump pattern");
    classify->add_option("partition", part_arg)->required();

    auto* necessary = app.add_subcommand("necessary", "necessary-condition predicates");
    necessary->add_option("partition", part_arg)->required();

    auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian decompositions of T_n");
    auto* ham_paths = ham->add_subcommand("paths", "n/2 alternating Hamiltonian paths (even n)");
    ham_paths->add_option("--n", opt_n)->required();
    ham_paths->add_option("--dot", out_path, "write DOT here");
    auto* ham_cycles = ham->add_subcommand("cycles", "(n-1)/2 Hamiltonian cycles (odd n)");
    ham_cycles->add_option("--n", opt_n)->required();
    ham_cycles->add_option("--dot", out_path, "write DOT here");

    auto* sweep_cmd = app.add_subcommand("sweep", "classify every normalized sequence");
    sweep_cmd->add_option("--k", opt_k)->required();
    sweep_cmd->add_option("--n", opt_n)->required();
    sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--jobs", jobs, "worker threads");

    auto* conj = app.add_subcommand("conjecture", "odd-n scan");
    conj->add_option("--k", opt_k)->required();
    conj->add_option("--odd-n", odd_ns_arg, "comma-separated odd n values")->required();
    conj->add_option("--jobs", jobs);

    auto* dot = app.add_subcommand("export-dot", "DOT rendering of a partition");
    dot->add_option("partition", part_arg)->required();
    dot->add_option("--order", order_arg, "ordering file; directed output when given");
    dot->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::ostringstream silent;
        app.exit(e, silent, silent);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) {
            auto s = sigma::validate_sequence(opt_k, opt_n, parse_int_list(a_arg));
            std::cout << sigma::encode(s).dump(2) << "\n";
            return kExitOk;
        }
        if (*label) {
            sigma::PartitionLabeling p(load_partition(part_arg));
            std::cout << sigma::json{{"u", opt_u}, {"v", opt_v}, {"label", p.edge_label(opt_u, opt_v)}}.dump()
                      << "\n";
            return kExitOk;
        }
        if (*check) {
            sigma::PartitionLabeling p(load_partition(part_arg));
            auto rep = sigma::reversal_report(p, load_ordering(order_arg));
            std::cout << sigma::encode(rep).dump(2) << "\n";
            return rep.accepted ? kExitOk : kExitNegative;
        }
        if (*standard) {
            auto o = sigma::standard_orientation(load_partition(part_arg));
            if (!o) {
                std::cerr << "no standard orientation exists\n";
                return kExitNegative;
            }
            std::cout << sigma::encode(*o).dump() << "\n";
            return kExitOk;
        }
        if (*solve_cmd || *enum_cmd) {
            auto s = load_partition(part_arg);
            if (*enum_cmd || all) {
                auto found = sigma::enumerate_orientations(s, cap, budget);
                sigma::json arr = sigma::json::array();
                for (const auto& o : found) arr.push_back(sigma::encode(o));
                std::cout << arr.dump(2) << "\n";
                return found.empty() ? kExitNegative : kExitOk;
            }
            auto oc = sigma::solve(s, budget);
            std::cout << sigma::encode(oc).dump(2) << "\n";
            switch (oc.status) {
            case sigma::SolveStatus::sat: return kExitOk;
            case sigma::SolveStatus::unsat: return kExitNegative;
            default: return kExitResource;
            }
        }
        if (*bu_make) {
            auto out = sigma::blow_up_sequence(load_partition(part_arg), opt_n, parse_free_map(free_arg));
            std::cout << sigma::encode(out).dump() << "\n";
            return kExitOk;
        }
        if (*bu_lift) {
            auto lifted = sigma::lift_orientation(load_partition(part_arg), load_ordering(order_arg),
                                                  load_partition(target_arg));
            std::cout << sigma::encode(lifted).dump() << "\n";
            return kExitOk;
        }
        if (*bu_detect) {
            auto witnesses = sigma::detect_blow_up(load_partition(part_arg), true, budget);
            sigma::json arr = sigma::json::array();
            for (const auto& w : witnesses) arr.push_back(sigma::encode(w));
            std::cout << arr.dump(2) << "\n";
            return witnesses.empty() ? kExitNegative : kExitOk;
        }
        if (*dual) {
            std::cout << sigma::encode(load_partition(part_arg).dual()).dump() << "\n";
            return kExitOk;
        }
        if (*classify) {
            auto steps = sigma::classify_steps(load_partition(part_arg));
            sigma::json arr = sigma::json::array();
            for (auto t : steps) arr.push_back(sigma::step_name(t));
            std::cout << sigma::json{{"steps", arr}}.dump() << "\n";
            return kExitOk;
        }
        if (*necessary) {
            auto s = load_partition(part_arg);
            auto pre = sigma::necessary_prefix(s);
            auto jmp = sigma::necessary_jump(s);
            bool size = sigma::size_filter(s);
            sigma::json j{{"prefix", pre.pass}, {"jump", jmp.pass}, {"size", size}};
            if (!pre.pass) j["prefix_fail_index"] = pre.fail_index;
            if (!jmp.pass) j["jump_fail_index"] = jmp.fail_index;
            std::cout << j.dump() << "\n";
            return (pre.pass && jmp.pass && size) ? kExitOk : kExitNegative;
        }
        if (*ham_paths || *ham_cycles) {
            sigma::OrientedDecomposition dec =
                *ham_paths ? sigma::walecki_paths(opt_n).second : sigma::hamiltonian_cycles(opt_n);
            if (!out_path.empty()) emit(sigma::export_dot(dec), out_path);
            sigma::json parts = sigma::json::array();
            for (const auto& part : dec.parts) {
                sigma::json edges = sigma::json::array();
                for (const auto& e : part) edges.push_back({e.from, e.to});
                parts.push_back(edges);
            }
            std::cout << sigma::json{{"n", dec.n},
                                     {"order", sigma::encode(dec.global_order)},
                                     {"parts", parts}}
                             .dump(2)
                      << "\n";
            return kExitOk;
        }
        if (*sweep_cmd) {
            sigma::SweepOptions opts;
            opts.budget = budget;
            opts.jobs = jobs;
            auto recs = sigma::sweep(opt_k, opt_n, opts);
            if (format == "json") {
                sigma::json arr = sigma::json::array();
                for (const auto& r : recs) arr.push_back(sigma::encode(r));
                emit(arr.dump(2) + "\n", out_path);
            } else {
                emit(sigma::sweep_csv(recs), out_path);
            }
            return kExitOk;
        }
        if (*conj) {
            auto rep = sigma::conjecture_scan(opt_k, parse_int_list(odd_ns_arg), budget, jobs);
            std::cout << sigma::encode(rep).dump(2) << "\n";
            if (rep.sat > 0) {
                std::cerr << "CONJECTURE COUNTEREXAMPLE FOUND: " << rep.sat << " Sat instance(s)\n";
                return kExitNegative;
            }
            return rep.budget_exceeded > 0 ? kExitResource : kExitOk;
        }
        if (*dot) {
            sigma::PartitionLabeling p(load_partition(part_arg));
            std::optional<sigma::VertexOrdering> o;
            if (!order_arg.empty()) o = load_ordering(order_arg);
            emit(sigma::export_dot(p, o), out_path);
            return kExitOk;
        }
    } catch (const sigma::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sigma::space_too_large_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const sigma::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
