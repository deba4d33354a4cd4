#include <catch2/catch_amalgamated.hpp>

#include "sigma/core.hpp"
#include "sigma/orient.hpp"
#include "sigma/solver.hpp"

using namespace sigma;

TEST_CASE("validate_sequence enforces the existence conditions") {
    CHECK_NOTHROW(DefiningSequence(3, 6, {0, 0, 0}));
    CHECK_THROWS_AS(DefiningSequence(3, 4, {0, 0}), divisibility_error);
    CHECK_THROWS_AS(DefiningSequence(2, 6, {0, 1, 0}), divisibility_error); // k even needs 4 | n
    CHECK_THROWS_AS(DefiningSequence(3, 6, {0, 0}), length_error);
    CHECK_THROWS_AS(DefiningSequence(3, 6, {0, 0, 3}), alphabet_error);
    CHECK_THROWS_AS(DefiningSequence(3, 6, {0, 0, -1}), alphabet_error);
    // degenerate n = k is a valid partition (the solver reports it Unsat)
    CHECK_NOTHROW(DefiningSequence(3, 3, {0}));
}

TEST_CASE("edge labels follow the shift congruence") {
    SECTION("published n=24 value") {
        PartitionLabeling p(DefiningSequence(3, 24, {0, 0, 0, 1, 2, 0, 0, 0, 1, 1, 2, 1}));
        CHECK(p.edge_label(4, 8) == 2);
    }
    SECTION("a_1 is the label of {0,1}") {
        PartitionLabeling p(DefiningSequence(3, 12, {1, 0, 2, 1, 0, 2}));
        CHECK(p.edge_label(0, 1) == 1);
    }
    SECTION("extended labels wrap around") {
        PartitionLabeling p(DefiningSequence(3, 6, {0, 0, 0}));
        CHECK(p.edge_label(0, 5) == 2); // = a_1 + 5 mod 3
    }
    SECTION("self loops are rejected") {
        PartitionLabeling p(DefiningSequence(3, 6, {0, 0, 0}));
        CHECK_THROWS_AS(p.edge_label(2, 2), self_loop_error);
        CHECK_THROWS_AS(p.edge_label(0, 6), self_loop_error); // 6 == 0 mod 6
    }
}

TEST_CASE("label symmetry and covariance over all valid small cases") {
    for (int k : {2, 3, 4, 5, 6}) {
        for (int n = k; n <= 30; n += k) {
            if (k % 2 == 0 && n % (2 * k) != 0) continue;
            // pseudo-random but fixed sequences
            std::vector<int> a(static_cast<size_t>(n / 2));
            for (size_t q = 0; q < a.size(); ++q) a[q] = static_cast<int>((q * 7 + n + k) % k);
            PartitionLabeling p(DefiningSequence(k, n, a));
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    REQUIRE(p.edge_label(u, v) == p.edge_label(v, u));
                    REQUIRE(p.edge_label(u + 1, v + 1) == mod(p.edge_label(u, v) + 1, k));
                }
        }
    }
}

TEST_CASE("the label classes are pairwise isomorphic via sigma, and sigma^k fixes each") {
    for (int n : {6, 12, 18}) {
        std::vector<int> a(static_cast<size_t>(n / 2));
        for (size_t q = 0; q < a.size(); ++q) a[q] = static_cast<int>((q * 5 + 1) % 3);
        PartitionLabeling p(DefiningSequence(3, n, a));
        auto has_edge = [&](int d, int u, int v) { return p.edge_label(u, v) == d; };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                for (int d = 0; d < 3; ++d) {
                    // sigma maps F_d onto F_{d+1}
                    REQUIRE(has_edge(d, u, v) == has_edge((d + 1) % 3, u + 1, v + 1));
                    // sigma^3 is an automorphism of F_d
                    REQUIRE(has_edge(d, u, v) == has_edge(d, u + 3, v + 3));
                }
            }
    }
}

TEST_CASE("shift_partition") {
    CHECK(DefiningSequence(3, 6, {1, 1, 1}).shifted(1) == DefiningSequence(3, 6, {0, 0, 0}));
    CHECK(DefiningSequence(3, 6, {0, 0, 0}).shifted(3) == DefiningSequence(3, 6, {0, 0, 0}));
    CHECK(DefiningSequence(3, 6, {2, 0, 1}).shifted(2) == DefiningSequence(3, 6, {0, 1, 2}));
    CHECK(DefiningSequence(3, 12, {2, 0, 1, 2, 0, 1}).normalized().a(1) == 0);
}

TEST_CASE("shift covariance: witnesses map by tau -> tau - c") {
    // brute-force check that solvability is shift invariant and witness
    // sets correspond under vertex relabeling
    DefiningSequence s(3, 6, {2, 0, 1});
    DefiningSequence t = s.shifted(2); // = 012
    auto ws = oracle_enumerate(s);
    auto wt = oracle_enumerate(t);
    REQUIRE(ws.size() == wt.size());
    REQUIRE(!ws.empty());
    // every witness of s, with vertices v -> v+2, is a witness of t
    PartitionLabeling pt(t);
    for (const auto& o : ws) {
        VertexOrdering mapped{o.tau};
        for (int& v : mapped.tau) v = (v + 2) % 6;
        CHECK(reversal_report(pt, mapped).accepted);
    }
}

TEST_CASE("dual_partition") {
    CHECK(DefiningSequence(3, 12, {0, 0, 0, 1, 2, 1}).dual() ==
          DefiningSequence(3, 12, {0, 1, 2, 2, 2, 1}));
    CHECK(DefiningSequence(3, 6, {0, 0, 0}).dual() == DefiningSequence(3, 6, {0, 1, 2}));
    // involution on assorted sequences
    for (int n : {6, 12, 18}) {
        std::vector<int> a(static_cast<size_t>(n / 2));
        for (size_t q = 0; q < a.size(); ++q) a[q] = static_cast<int>((3 * q + n) % 3);
        DefiningSequence s(3, n, a);
        CHECK(s.dual().dual() == s);
    }
}

TEST_CASE("dual covariance of witnesses: tau -> n - tau") {
    for (const DefiningSequence& s : {DefiningSequence(3, 6, {0, 1, 2}), DefiningSequence(3, 6, {0, 0, 1})}) {
        DefiningSequence d = s.dual();
        PartitionLabeling pd(d);
        auto ws = oracle_enumerate(s);
        auto wd = oracle_enumerate(d);
        REQUIRE(ws.size() == wd.size());
        for (const auto& o : ws) {
            VertexOrdering mapped{o.tau};
            for (int& v : mapped.tau) v = (6 - v) % 6;
            CHECK(reversal_report(pd, mapped).accepted);
        }
    }
    // and exhaustively via the solver for n=12
    DefiningSequence s12(3, 12, {0, 0, 0, 1, 2, 1});
    auto ws = enumerate_orientations(s12);
    auto wd = enumerate_orientations(s12.dual());
    REQUIRE(ws.size() == wd.size());
    PartitionLabeling pd(PartitionLabeling(s12.dual()));
    for (const auto& o : ws) {
        VertexOrdering mapped{o.tau};
        for (int& v : mapped.tau) v = (12 - v) % 12;
        CHECK(reversal_report(pd, mapped).accepted);
    }
}

TEST_CASE("classify_steps") {
    using enum Step;
    CHECK(classify_steps(DefiningSequence(3, 12, {0, 0, 0, 1, 2, 1})) ==
          std::vector<Step>{halt, halt, step, step, jump});
    CHECK(classify_steps(DefiningSequence(3, 6, {0, 0, 0})) == std::vector<Step>{halt, halt});
    SECTION("k=2 never jumps") {
        for (int bits = 0; bits < 16; ++bits) {
            std::vector<int> a{0, (bits >> 0) & 1, (bits >> 1) & 1, (bits >> 2) & 1};
            for (Step t : classify_steps(DefiningSequence(2, 8, a))) CHECK(t != Step::jump);
        }
    }
}

TEST_CASE("classify_steps duality: halt and step swap, jumps stay") {
    for (int k : {3, 5}) {
        for (int n : {6, 10, 12}) {
            if (n % k != 0) continue;
            long long total = 1;
            for (int q = 1; q < n / 2; ++q) total *= k;
            for (long long idx = 0; idx < total; ++idx) {
                long long rest = idx;
                std::vector<int> a(static_cast<size_t>(n / 2), 0);
                for (size_t q = 1; q < a.size(); ++q) {
                    a[q] = static_cast<int>(rest % k);
                    rest /= k;
                }
                DefiningSequence s(k, n, a);
                auto cs = classify_steps(s);
                auto cd = classify_steps(s.dual());
                REQUIRE(cs.size() == cd.size());
                for (size_t q = 0; q < cs.size(); ++q) {
                    if (cs[q] == Step::halt) CHECK(cd[q] == Step::step);
                    if (cs[q] == Step::step) CHECK(cd[q] == Step::halt);
                    if (cs[q] == Step::jump) CHECK(cd[q] == Step::jump);
                }
            }
        }
    }
}
