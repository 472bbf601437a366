#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blockcheck/symbols.hpp"

using namespace blockcheck;

TEST_CASE("partition hooks") {
    CHECK(Partition({2, 1}).hooks() == std::vector<unsigned>{3, 1, 1});
    CHECK(Partition({3}).hooks() == std::vector<unsigned>{3, 2, 1});
    CHECK(Partition({1, 1}).hooks() == std::vector<unsigned>{2, 1});
    CHECK(Partition({2, 2}).hooks() == std::vector<unsigned>{3, 2, 2, 1});
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("conjugate partitions share hook multisets") {
    for (unsigned n = 1; n <= 9; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(p.conjugate().hooks() == p.hooks());
            CHECK(p.conjugate().conjugate() == p);
        }
}

TEST_CASE("type A degrees") {
    CHECK(degree_type_a(Partition({2, 1}), false) == CycProduct::phi(2));
    CHECK(degree_type_a(Partition({3}), false) == CycProduct::one());       // trivial character
    CHECK(degree_type_a(Partition({4}), false) == CycProduct::one());
    // conjugates share degrees
    CHECK(degree_type_a(Partition({1, 1, 1}), false) == degree_type_a(Partition({3}), false));
    // twisted (2,1): degree q(q-1), r'-part Phi_1
    CHECK(degree_type_a(Partition({2, 1}), true) == CycProduct::phi(1));
}

TEST_CASE("type A degree identity against the order") {
    // degree * prod_h (q^h - 1) = (q - 1) * order'(A_{n-1}) as CycProducts
    for (unsigned n = 2; n <= 9; ++n) {
        CycProduct rhs = order_rprime({LieFamily::A, n - 1}) * CycProduct::q_pow_minus_one(1);
        for (const Partition& p : partitions_of(n)) {
            CycProduct lhs = degree_type_a(p, false);
            for (unsigned h : p.hooks()) lhs *= CycProduct::q_pow_minus_one(h);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("type A defects") {
    CHECK(defect_type_a(Partition({2, 1}), Int(3), false) == 2);   // 2d, d = 1
    CHECK(defect_type_a(Partition({2}), Int(3), false) == 3);      // d + e = 1 + 2
    CHECK(defect_type_a(Partition({2, 2}), Int(3), false) == 7);
    CHECK(defect_type_a(Partition({2, 1}), Int(3), true) == 4);    // 2e, e = 2
    CHECK(defect_type_a(Partition({2, 1}), Int(5), true) == 2);
}

TEST_CASE("symbol rank and c") {
    Symbol s1({2}, {});
    CHECK(s1.rank() == 2);
    CHECK(s1.c_value() == 0);
    Symbol s2({2, 0}, {1});
    CHECK(s2.rank() == 2);
    CHECK(s2.c_value() == 1);
    Symbol s3({1}, {1});
    CHECK(s3.rank() == 2);
    CHECK(s3.c_value() == 0);
    CHECK(s3.degenerate());
}

TEST_CASE("symbol hooks and cohooks") {
    Symbol s1({2}, {});
    CHECK(s1.hook_list() == std::vector<unsigned>{2, 1});
    CHECK(s1.cohook_list() == std::vector<unsigned>{2, 1});
    Symbol s2({2, 0}, {1});
    CHECK(s2.hook_list().size() == 2);
    CHECK(s2.cohook_list().size() == 1);
    CHECK(s2.h_plus() == 2);
    CHECK(s2.h_minus() == 1);
}

TEST_CASE("hook and cohook counts match the closed forms exhaustively") {
    for (unsigned rank = 0; rank <= 8; ++rank)
        for (unsigned parity : {0u, 1u})
            for (const Symbol& s : enumerate_symbols(rank, parity, 10)) {
                CAPTURE(s.to_string());
                CHECK(static_cast<long>(s.hook_list().size()) == s.h_plus());
                CHECK(static_cast<long>(s.cohook_list().size()) == s.h_minus());
            }
}

TEST_CASE("symbol identity exhaustively to rank 8") {
    long zeros = 0, minus = 0;
    for (unsigned rank = 0; rank <= 8; ++rank)
        for (unsigned parity : {0u, 1u})
            for (const Symbol& s : enumerate_symbols(rank, parity, 10)) {
                long v = s.identity_check();  // throws unless 0 or -1 in the right case
                (v == 0 ? zeros : minus) += 1;
            }
    CHECK(zeros > 0);
    CHECK(minus > 0);
}

TEST_CASE("invariance under shift and swap") {
    std::mt19937 rng(2024);
    std::vector<Symbol> pool;
    for (unsigned rank = 1; rank <= 6; ++rank)
        for (unsigned parity : {0u, 1u})
            for (const Symbol& s : enumerate_symbols(rank, parity, 8)) pool.push_back(s);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<size_t>(pool.size(), 500));
    for (const Symbol& s : pool) {
        Symbol sh = s.shifted().shifted();
        Symbol sw = s.swapped();
        CHECK(sh.rank() == s.rank());
        CHECK(sh.c_value() == s.c_value());
        CHECK(sh.h_plus() == s.h_plus());
        CHECK(sh.h_minus() == s.h_minus());
        CHECK(sh.hook_list() == s.hook_list());
        CHECK(sh.cohook_list() == s.cohook_list());
        CHECK(sw.rank() == s.rank());
        CHECK(sw.c_value() == s.c_value());
        CHECK(sw.hook_list() == s.hook_list());
        CHECK(sw.cohook_list() == s.cohook_list());
        CHECK(sh.reduced() == s.reduced());
        CHECK(sw.reduced() == s.reduced());
        if (s.rank() >= 1 && s.defect() % 2 != 0) {
            CHECK(degree_bcd(sh, LieFamily::B) == degree_bcd(s, LieFamily::B));
            CHECK(degree_bcd(sw, LieFamily::B) == degree_bcd(s, LieFamily::B));
        }
    }
}

TEST_CASE("symbol enumeration counts") {
    // B1 = A1 has two unipotent characters
    CHECK(enumerate_symbols(1, 1).size() == 2);
    // B2 has six
    CHECK(enumerate_symbols(2, 1).size() == 6);
    // rank 0: the trivial symbol only
    auto r0 = enumerate_symbols(0, 1);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].rank() == 0);
    // odd-defect count at rank n equals bipartition count + higher-defect terms;
    // cross-check small ranks against partition counting for defect 1
    for (unsigned n = 1; n <= 6; ++n) {
        size_t bipartitions = 0;
        for (unsigned a = 0; a <= n; ++a)
            bipartitions += partitions_of(a).size() * partitions_of(n - a).size();
        size_t defect1 = 0;
        for (const Symbol& s : enumerate_symbols(n, 1))
            if (s.defect() == 1 || s.defect() == -1) ++defect1;
        CHECK(defect1 == bipartitions);
    }
}

TEST_CASE("degree_bcd basics") {
    // trivial character of B2: symbol [{2},{}]
    CHECK(degree_bcd(Symbol({2}, {}), LieFamily::B) == CycProduct::one());
    // wrong rank rejected
    CHECK_THROWS(degree_bcd(Symbol({1, 0}, {1}), LieFamily::B, 2));
    // parity mismatches rejected
    CHECK_THROWS(degree_bcd(Symbol({2}, {}), LieFamily::D));
    CHECK_THROWS(degree_bcd(Symbol({1}, {1}), LieFamily::B));
    CHECK_THROWS(degree_bcd(Symbol({1}, {1}), LieFamily::TwoD));  // defect 0 is type D
    CHECK_NOTHROW(degree_bcd(Symbol({1}, {1}), LieFamily::D));
}

TEST_CASE("defects of degenerate D2 symbol") {
    Symbol s({1}, {1});
    CHECK(s.identity_check() == 0);
    long d = defect_bcd(s, Int(3));
    CHECK(d == 2 * v2(Int(3 * 3 - 1)));  // 2(d+e)
}

TEST_CASE("min defect scans match the stated bounds") {
    // A2 at q=3: minimum 2 with witness (2,1)
    DefectScanResult a2 = min_defect_scan(LieFamily::A, 2, Int(3));
    CHECK(a2.min_defect == 2);
    CHECK(a2.witness == "(2,1)");
    // A1: every character has defect d+e exactly
    for (long q : {3, 5, 7, 9}) {
        DefectScanResult a1 = min_defect_scan(LieFamily::A, 1, Int(q));
        long de = v2(Int(q * q - 1));
        for (const auto& e : a1.entries) CHECK(e.defect == de);
    }
    // B2 at q=3: at least 2l = 4
    CHECK(min_defect_scan(LieFamily::B, 2, Int(3)).min_defect >= 4);
    // D4 at q=3: at least 2l-1 = 7
    CHECK(min_defect_scan(LieFamily::D, 4, Int(3)).min_defect >= 7);
}
