#ifndef SIGMA_JSON_IO_HPP
#define SIGMA_JSON_IO_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigma/analysis.hpp"
#include "sigma/blowup.hpp"
#include "sigma/constructions.hpp"
#include "sigma/core.hpp"
#include "sigma/orient.hpp"
#include "sigma/solver.hpp"

// JSON / CSV / DOT serialization.  Decoding is strict: unknown fields and
// invariant violations surface as parse_error.

namespace sigma {

struct parse_error : error { using error::error; };

using json = nlohmann::json;

namespace detail {

inline void expect_keys(const json& j, std::vector<std::string> keys, const char* what) {
    if (!j.is_object()) throw parse_error(std::string(what) + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            throw parse_error(std::string(what) + ": unknown field '" + it.key() + "'");
    for (const auto& k : keys)
        if (!j.contains(k)) throw parse_error(std::string(what) + ": missing field '" + k + "'");
}

} // namespace detail

inline json encode(const DefiningSequence& s) {
    return json{{"k", s.k()}, {"n", s.n()}, {"a", s.labels()}};
}

inline DefiningSequence decode_sequence(const json& j) {
    detail::expect_keys(j, {"k", "n", "a"}, "partition");
    try {
        return {j.at("k").get<int>(), j.at("n").get<int>(), j.at("a").get<std::vector<int>>()};
    } catch (const json::exception& e) {
        throw parse_error(std::string("partition: ") + e.what());
    } catch (const error& e) {
        throw parse_error(std::string("partition: ") + e.what());
    }
}

inline json encode(const VertexOrdering& o) {
    return json{{"n", o.size()}, {"tau", o.tau}};
}

inline VertexOrdering decode_ordering(const json& j) {
    detail::expect_keys(j, {"n", "tau"}, "ordering");
    try {
        VertexOrdering o{j.at("tau").get<std::vector<int>>()};
        if (j.at("n").get<int>() != o.size()) throw parse_error("ordering: n != |tau|");
        o.positions(); // permutation check
        return o;
    } catch (const json::exception& e) {
        throw parse_error(std::string("ordering: ") + e.what());
    } catch (const error& e) {
        throw parse_error(std::string("ordering: ") + e.what());
    }
}

inline json encode(const OrientationReport& r) {
    json rev = json::array();
    for (const ReversedEdge& e : r.reversed) rev.push_back({e.u, e.v, e.label});
    json j{{"verdict", r.accepted ? "accept" : "reject"}, {"reversed", rev}};
    if (r.first_violation) j["first_violation"] = {r.first_violation->first, r.first_violation->second};
    return j;
}

inline const char* status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::sat: return "sat";
    case SolveStatus::unsat: return "unsat";
    default: return "budget_exceeded";
    }
}

inline json encode(const SolveOutcome& o) {
    json j{{"status", status_name(o.status)},
           {"nodes", o.stats.nodes},
           {"millis", o.stats.millis}};
    if (o.witness) j["witness"] = encode(*o.witness);
    return j;
}

inline json encode(const BlowUpWitness& w) {
    json free = json::object();
    for (auto [i, v] : w.free) free[std::to_string(i)] = v;
    json j{{"m", w.m}, {"base", encode(w.base)}, {"free", free}, {"base_standard", w.base_standard}};
    if (w.base_solvable) j["base_solvable"] = status_name(*w.base_solvable);
    return j;
}

inline const char* step_name(Step s) {
    switch (s) {
    case Step::halt: return "halt";
    case Step::step: return "step";
    default: return "jump";
    }
}

inline std::string sequence_string(const DefiningSequence& s) {
    std::string out;
    for (int x : s.labels()) out += std::to_string(x);
    return out;
}

inline json encode(const SweepRecord& r) {
    return json{{"k", r.seq.k()},
                {"n", r.seq.n()},
                {"sequence", sequence_string(r.seq)},
                {"standard", r.standard},
                {"blowup", r.blowup_witnesses},
                {"necessary_prefix", r.prefix_pass},
                {"necessary_jump", r.jump_pass},
                {"size_filter", r.size_pass},
                {"status", status_name(r.status)},
                {"witness", r.witness_digest}};
}

inline SweepRecord decode_sweep_record(const json& j) {
    detail::expect_keys(j,
                        {"k", "n", "sequence", "standard", "blowup", "necessary_prefix", "necessary_jump",
                         "size_filter", "status", "witness"},
                        "sweep record");
    std::string seq = j.at("sequence").get<std::string>();
    std::vector<int> a;
    for (char c : seq) {
        if (c < '0' || c > '9') throw parse_error("sweep record: bad sequence digit");
        a.push_back(c - '0');
    }
    SweepRecord r{DefiningSequence(j.at("k").get<int>(), j.at("n").get<int>(), std::move(a))};
    r.standard = j.at("standard").get<bool>();
    r.blowup_witnesses = j.at("blowup").get<int>();
    r.prefix_pass = j.at("necessary_prefix").get<bool>();
    r.jump_pass = j.at("necessary_jump").get<bool>();
    r.size_pass = j.at("size_filter").get<bool>();
    std::string st = j.at("status").get<std::string>();
    r.status = st == "sat" ? SolveStatus::sat
             : st == "unsat" ? SolveStatus::unsat
                             : SolveStatus::budget_exceeded;
    r.witness_digest = j.at("witness").get<std::string>();
    return r;
}

inline std::string sweep_csv(const std::vector<SweepRecord>& recs) {
    std::ostringstream os;
    os << "k,n,sequence,standard,blowup,necessary_prefix,necessary_jump,size_filter,status,witness\n";
    for (const SweepRecord& r : recs) {
        os << r.seq.k() << ',' << r.seq.n() << ',' << sequence_string(r.seq) << ','
           << (r.standard ? 1 : 0) << ',' << r.blowup_witnesses << ',' << (r.prefix_pass ? 1 : 0) << ','
           << (r.jump_pass ? 1 : 0) << ',' << (r.size_pass ? 1 : 0) << ',' << status_name(r.status) << ','
           << r.witness_digest << '\n';
    }
    return os.str();
}

inline json encode(const ConjectureReport& r) {
    json cx = json::array();
    for (const auto& s : r.counterexamples) cx.push_back(encode(s));
    return json{{"k", r.k},         {"n", r.n_values},
                {"unsat", r.unsat}, {"budget_exceeded", r.budget_exceeded},
                {"sat", r.sat},     {"counterexamples", cx}};
}

// Canonical compact form k3n12:000121 (single-digit labels, so k <= 10).
inline DefiningSequence parse_canonical(const std::string& text) {
    size_t kpos = text.find('k'), npos = text.find('n'), cpos = text.find(':');
    if (kpos != 0 || npos == std::string::npos || cpos == std::string::npos || npos > cpos)
        throw parse_error("canonical form is kKnN:digits, e.g. k3n12:000121");
    try {
        int k = std::stoi(text.substr(1, npos - 1));
        int n = std::stoi(text.substr(npos + 1, cpos - npos - 1));
        std::vector<int> a;
        for (size_t q = cpos + 1; q < text.size(); ++q) {
            char c = text[q];
            if (c < '0' || c > '9') throw parse_error("canonical form: label digits only");
            a.push_back(c - '0');
        }
        return {k, n, std::move(a)};
    } catch (const std::invalid_argument&) {
        throw parse_error("canonical form: bad integer");
    } catch (const std::out_of_range&) {
        throw parse_error("canonical form: integer out of range");
    } catch (const error& e) {
        throw parse_error(std::string("canonical form: ") + e.what());
    }
}

namespace detail {

inline const char* part_color(int d) {
    static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    return palette[d % 8];
}

} // namespace detail

// DOT text for a labeled partition: one subgraph per part, colored by part
// index; directed arcs when an ordering is supplied.  Deterministic.
inline std::string export_dot(const PartitionLabeling& p, const std::optional<VertexOrdering>& order = {}) {
    const int n = p.n();
    const int k = p.k();
    std::vector<int> pos;
    if (order) {
        if (order->size() != n) throw size_mismatch_error("ordering size != n of partition");
        pos = order->positions();
    }
    std::ostringstream os;
    os << (order ? "digraph" : "graph") << " partition {\n";
    for (int d = 0; d < k; ++d) {
        os << "  subgraph part" << d << " {\n";
        os << "    edge [color=\"" << detail::part_color(d) << "\", label=" << d << "];\n";
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (p.edge_label(u, v) != d) continue;
                if (order) {
                    bool fwd = pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)];
                    os << "    " << (fwd ? u : v) << " -> " << (fwd ? v : u) << ";\n";
                } else {
                    os << "    " << u << " -- " << v << ";\n";
                }
            }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

// DOT text for an oriented decomposition: one subgraph per part.
inline std::string export_dot(const OrientedDecomposition& dec) {
    std::ostringstream os;
    os << "digraph decomposition {\n";
    for (size_t d = 0; d < dec.parts.size(); ++d) {
        std::vector<OrientedEdge> edges = dec.parts[d];
        std::sort(edges.begin(), edges.end(), [](const OrientedEdge& a, const OrientedEdge& b) {
            return a.from != b.from ? a.from < b.from : a.to < b.to;
        });
        os << "  subgraph part" << d << " {\n";
        os << "    edge [color=\"" << detail::part_color(static_cast<int>(d)) << "\", label=" << d << "];\n";
        for (const OrientedEdge& e : edges) os << "    " << e.from << " -> " << e.to << ";\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace sigma

#endif
