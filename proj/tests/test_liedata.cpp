#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "blockcheck/defect_tables.hpp"
#include "blockcheck/liedata.hpp"
#include "blockcheck/suites.hpp"

using namespace blockcheck;

TEST_CASE("group orders as Phi-products") {
    // E6: q^36 F1^6 F2^4 F3^3 F4^2 F5 F6^2 F8 F9 F12
    CycProduct e6 = group_order({LieFamily::E6, 6});
    CHECK(e6.qpow() == 36);
    CHECK(e6.phi_exponents() ==
          std::map<unsigned, long>{{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}});

    CycProduct a1 = group_order({LieFamily::A, 1});
    CHECK(a1.qpow() == 1);
    CHECK(a1.phi_exponents() == std::map<unsigned, long>{{1, 1}, {2, 1}});

    CycProduct ua2 = group_order({LieFamily::TwoA, 2});
    CHECK(ua2.qpow() == 3);
    CHECK(ua2.phi_exponents() == std::map<unsigned, long>{{1, 1}, {2, 2}, {6, 1}});

    CycProduct b2 = order_rprime({LieFamily::B, 2});
    CHECK(b2.phi_exponents() == std::map<unsigned, long>{{1, 2}, {2, 2}, {4, 1}});

    CycProduct d43 = order_rprime({LieFamily::ThreeD4, 4});
    CHECK(d43.phi_exponents() == std::map<unsigned, long>{{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}});
}

TEST_CASE("orders match the raw product form") {
    std::vector<LieSeries> all = {
        {LieFamily::A, 1},      {LieFamily::A, 2},    {LieFamily::A, 3},   {LieFamily::TwoA, 2},
        {LieFamily::TwoA, 3},   {LieFamily::B, 2},    {LieFamily::B, 4},   {LieFamily::C, 3},
        {LieFamily::D, 4},      {LieFamily::TwoD, 4}, {LieFamily::ThreeD4, 4}, {LieFamily::G2, 2},
        {LieFamily::TwoG2, 2},  {LieFamily::F4, 4},   {LieFamily::E6, 6},  {LieFamily::TwoE6, 6},
        {LieFamily::E7, 7},     {LieFamily::E8, 8},   {LieFamily::A, 2, 3}, {LieFamily::TwoA, 2, 3}};
    for (const auto& s : all) {
        for (long q : {3, 5, 7, 9}) {
            CAPTURE(family_name(s.family));
            CHECK(group_order(s).eval_integer(Int(q)) == group_order_raw(s, Int(q)));
        }
    }
}

TEST_CASE("named degrees divide the group order") {
    for (const NamedUnipotent& u : named_degree_catalog()) {
        CycProduct quotient = group_order(u.series) / u.degree;
        for (long q : {3, 5, 7, 9, 11, 13}) {
            CAPTURE(u.label);
            Rat v = quotient.eval(Int(q));
            CHECK(v.get_den() == 1);
            CHECK(v > 0);
            CHECK_NOTHROW(u.degree.eval_integer(Int(q)));
        }
    }
}

TEST_CASE("named degree lookups") {
    const NamedUnipotent& t = named_degree("E6:E6[theta]");
    CHECK(t.degree == CycProduct(Rat(1, 3), 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}}));
    const NamedUnipotent& a = named_degree("A2:chi^(2,1)");
    CHECK(a.degree == CycProduct(Rat(1), 1, {{2, 1}}));
    for (long q : {3, 5, 7}) CHECK(a.degree.eval_integer(Int(q)) == Int(q) * (Int(q) + 1));
    const NamedUnipotent& e7 = named_degree("E7:(E6[theta],1)");
    CHECK(e7.degree ==
          CycProduct(Rat(1, 3), 7, {{1, 6}, {2, 6}, {4, 2}, {5, 1}, {7, 1}, {8, 1}, {10, 1}, {14, 1}}));
    CHECK_THROWS(named_degree("E6:nonexistent"));
}

TEST_CASE("named exceptional defects") {
    // E6[theta]: defect 0 at every odd q (only odd cyclotomic factors remain)
    const NamedUnipotent& theta = named_degree("E6:E6[theta]");
    for (long q : {3, 5, 7, 9}) CHECK(named_defect(theta, Int(q)) == 0);

    // E7 (E6[theta],1): defect v2(q^2-1) >= 3
    const NamedUnipotent& e7 = named_degree("E7:(E6[theta],1)");
    for (long q : {3, 5, 7, 9}) {
        long d = named_defect(e7, Int(q));
        CHECK(d == v2(Int(q * q - 1)));
        CHECK(d >= 3);
    }

    // F4[i], F4[-i]: defect 5 at every odd q
    for (const char* label : {"F4:F4[i]", "F4:F4[-i]"}) {
        const NamedUnipotent& u = named_degree(label);
        for (long q : {3, 5, 7, 9}) CHECK(named_defect(u, Int(q)) == 5);
    }
}

TEST_CASE("3D4 degrees back-solve from the defect-table rows") {
    // Oracle: lambda_{r'} = product * z * order'(3D4) / order'(ambient) for
    // rows (xiii)-(xvi) of both tables; all eight rows must agree with the
    // catalog entries.
    CycProduct d4 = order_rprime({LieFamily::ThreeD4, 4});
    auto solve = [&](const DefectRow& row, const LieSeries& ambient) {
        return row.claimed_product * row.z_s * d4 / order_rprime(ambient);
    };
    auto rp = [](const std::string& label) {
        CycProduct d = named_degree(label).degree;
        return d / CycProduct::q_power(d.qpow());
    };
    const LieSeries e6{LieFamily::E6, 6}, te6{LieFamily::TwoE6, 6};
    int checked = 0;
    for (const DefectRow& row : e6_defect_table()) {
        if (!row.c_prime || row.c_prime->family != LieFamily::ThreeD4) continue;
        CHECK(solve(row, e6) == rp("3D4:" + row.lambda_label));
        ++checked;
    }
    for (const DefectRow& row : twisted_e6_defect_table()) {
        if (!row.c_prime || row.c_prime->family != LieFamily::ThreeD4) continue;
        CHECK(solve(row, te6) == rp("3D4:" + row.lambda_label));
        ++checked;
    }
    CHECK(checked == 8);
}

TEST_CASE("3D4 catalog degrees mirror under q -> -q") {
    auto deg = [](const std::string& label) { return named_degree(label).degree; };
    CHECK(deg("3D4:phi_{2,2}").negate_q() == deg("3D4:3D4[1]"));
    CHECK(deg("3D4:phi_{2,1}").negate_q() == deg("3D4:3D4[-1]"));
}

TEST_CASE("conditional checks on ingested records") {
    // a genuine catalog entry passes its series' admissible-defect set
    std::vector<NamedUnipotent> recs{named_degree("E6:E6[theta]"), named_degree("F4:F4[i]")};
    Report ok = suite_conditional(recs, {3, 5});
    CHECK(ok.pass());

    // a fabricated E6 degree with defect 4 violates the residual bound
    NamedUnipotent bogus{LieSeries{LieFamily::E6, 6}, "bogus",
                         CycProduct(Rat(1), 7, {{1, 6}, {2, 4}, {3, 1}, {4, 1}, {5, 1}, {8, 1}})};
    Report bad = suite_conditional({bogus}, {3});
    CHECK(!bad.pass());

    // no records: a single informational pass
    Report none = suite_conditional({}, {3});
    CHECK(none.pass());
    CHECK(none.total() == 1);
}

TEST_CASE("optional degree catalog loading") {
    std::string path = "degree_catalog_test.jsonl";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << R"({"family":"A","rank":1,"label":"St","degree":{"scalar":["1","1"],"qpow":1,"phis":{}}})"
            << "\n";
    }
    auto recs = load_degree_catalog(path);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].label == "St");
    CHECK(recs[0].degree.eval_integer(Int(3)) == 3);
    {
        std::ofstream out(path);
        out << R"({"family":"A","rank":1,"label":"bad","degree":{"scalar":["7","1"],"qpow":0,"phis":{}}})"
            << "\n";
    }
    CHECK_THROWS(load_degree_catalog(path));
    std::remove(path.c_str());
}
