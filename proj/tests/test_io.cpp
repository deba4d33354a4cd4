#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "sigma/json_io.hpp"

using namespace sigma;

TEST_CASE("sequence JSON round-trip and strict decoding") {
    DefiningSequence s(3, 24, {0, 0, 0, 1, 2, 0, 0, 0, 1, 1, 2, 1});
    CHECK(decode_sequence(encode(s)) == s);

    CHECK_THROWS_AS(decode_sequence(json{{"k", 3}, {"n", 6}, {"a", {0, 0, 0}}, {"extra", 1}}), parse_error);
    CHECK_THROWS_AS(decode_sequence(json{{"k", 3}, {"n", 6}}), parse_error);
    CHECK_THROWS_AS(decode_sequence(json{{"k", 3}, {"n", 6}, {"a", {0, 0}}}), parse_error);
    CHECK_THROWS_AS(decode_sequence(json{{"k", 3}, {"n", 6}, {"a", "000"}}), parse_error);
    CHECK_THROWS_AS(decode_sequence(json::array()), parse_error);
}

TEST_CASE("ordering JSON round-trip and strict decoding") {
    VertexOrdering o{{0, 1, 2, 23, 22, 21, 3, 9, 4, 10, 20, 5, 11, 8, 7, 19, 6, 18, 12, 13, 14, 17, 16, 15}};
    CHECK(decode_ordering(encode(o)) == o);

    CHECK_THROWS_AS(decode_ordering(json{{"n", 3}, {"tau", {0, 1, 2}}, {"x", 0}}), parse_error);
    CHECK_THROWS_AS(decode_ordering(json{{"n", 4}, {"tau", {0, 1, 2}}}), parse_error);
    CHECK_THROWS_AS(decode_ordering(json{{"n", 3}, {"tau", {0, 1, 1}}}), parse_error);
}

TEST_CASE("report and outcome encodings") {
    DefiningSequence s(3, 6, {0, 0, 0});
    PartitionLabeling p(s);
    SECTION("accepted") {
        json j = encode(reversal_report(p, VertexOrdering{{0, 1, 2, 5, 4, 3}}));
        CHECK(j.at("verdict") == "accept");
        for (const json& e : j.at("reversed")) CHECK(e.at(2) == 2);
        CHECK_FALSE(j.contains("first_violation"));
    }
    SECTION("rejected") {
        json j = encode(reversal_report(p, VertexOrdering{{0, 1, 2, 3, 4, 5}}));
        CHECK(j.at("verdict") == "reject");
        CHECK(j.contains("first_violation"));
    }
    SECTION("solve outcome") {
        json j = encode(solve(s));
        CHECK(j.at("status") == "sat");
        CHECK(decode_ordering(j.at("witness")) == VertexOrdering{{3, 4, 5, 2, 1, 0}});
        json u = encode(solve(DefiningSequence(3, 6, {0, 0, 2})));
        CHECK(u.at("status") == "unsat");
        CHECK_FALSE(u.contains("witness"));
    }
}

TEST_CASE("blow-up witness encoding") {
    auto ws = detect_blow_up(DefiningSequence(3, 12, {0, 0, 0, 1, 2, 1}));
    REQUIRE(ws.size() == 1);
    json j = encode(ws[0]);
    CHECK(j.at("m") == 6);
    CHECK(decode_sequence(j.at("base")) == DefiningSequence(3, 6, {0, 0, 0}));
    CHECK(j.at("free") == json{{"6", 1}});
    CHECK(j.at("base_standard") == true);
    CHECK(j.at("base_solvable") == "sat");
}

TEST_CASE("sweep records: JSON round-trip and CSV layout") {
    auto recs = sweep(3, 6);
    REQUIRE(recs.size() == 9);
    for (const SweepRecord& r : recs) {
        SweepRecord back = decode_sweep_record(encode(r));
        CHECK(back.seq == r.seq);
        CHECK(back.standard == r.standard);
        CHECK(back.blowup_witnesses == r.blowup_witnesses);
        CHECK(back.prefix_pass == r.prefix_pass);
        CHECK(back.jump_pass == r.jump_pass);
        CHECK(back.size_pass == r.size_pass);
        CHECK(back.status == r.status);
        CHECK(back.witness_digest == r.witness_digest);
    }

    std::string csv = sweep_csv(recs);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "k,n,sequence,standard,blowup,necessary_prefix,necessary_jump,size_filter,status,witness");
    size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 9);
        CHECK(line.rfind("3,6,", 0) == 0);
    }
    CHECK(rows == 9);
    // the known Sat row carries its witness digest
    CHECK(csv.find("3,6,000,1,0,1,1,1,sat,3-4-5-2-1-0\n") != std::string::npos);

    CHECK_THROWS_AS(decode_sweep_record(json{{"k", 3}}), parse_error);
}

TEST_CASE("canonical compact form") {
    CHECK(parse_canonical("k3n12:000121") == DefiningSequence(3, 12, {0, 0, 0, 1, 2, 1}));
    CHECK(parse_canonical("k2n4:01") == DefiningSequence(2, 4, {0, 1}));
    CHECK_THROWS_AS(parse_canonical("3n12:000121"), parse_error);
    CHECK_THROWS_AS(parse_canonical("k3n12-000121"), parse_error);
    CHECK_THROWS_AS(parse_canonical("k3n12:0001x1"), parse_error);
    CHECK_THROWS_AS(parse_canonical("k3n12:0001"), parse_error); // wrong length
}

TEST_CASE("DOT export is deterministic and complete") {
    SECTION("directed, n=6") {
        DefiningSequence s(3, 6, {0, 0, 0});
        PartitionLabeling p(s);
        VertexOrdering o{{0, 1, 2, 5, 4, 3}};
        std::string dot = export_dot(p, o);
        CHECK(dot == export_dot(p, o));
        CHECK(dot.rfind("digraph", 0) == 0);
        size_t arcs = 0, subs = 0;
        for (size_t q = 0; (q = dot.find(" -> ", q)) != std::string::npos; ++q) ++arcs;
        for (size_t q = 0; (q = dot.find("subgraph part", q)) != std::string::npos; ++q) ++subs;
        CHECK(arcs == 15);
        CHECK(subs == 3);
        CHECK_THROWS_AS(export_dot(p, VertexOrdering{{0, 1, 2}}), size_mismatch_error);
    }
    SECTION("undirected, n=3") {
        DefiningSequence s(3, 3, {0});
        std::string dot = export_dot(PartitionLabeling(s));
        CHECK(dot.rfind("graph", 0) == 0);
        size_t edges = 0;
        for (size_t q = 0; (q = dot.find(" -- ", q)) != std::string::npos; ++q) ++edges;
        CHECK(edges == 3);
    }
    SECTION("decomposition") {
        std::string dot = export_dot(hamiltonian_cycles(5));
        size_t arcs = 0;
        for (size_t q = 0; (q = dot.find(" -> ", q)) != std::string::npos; ++q) ++arcs;
        CHECK(arcs == 10);
    }
}
