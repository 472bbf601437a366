#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockcheck/defect_tables.hpp"

using namespace blockcheck;

namespace {
const LieSeries kE6{LieFamily::E6, 6};
const LieSeries kTwoE6{LieFamily::TwoE6, 6};

const DefectRow& row(const std::vector<DefectRow>& t, const std::string& id) {
    for (const DefectRow& r : t)
        if (r.row_id == id) return r;
    throw std::runtime_error("row not found: " + id);
}
}  // namespace

TEST_CASE("q conditions") {
    CHECK(q_condition_holds(QCondition::q3mod4, Int(3)));
    CHECK(!q_condition_holds(QCondition::q3mod4, Int(5)));
    CHECK(q_condition_holds(QCondition::q1mod4, Int(9)));
    CHECK(q_condition_holds(QCondition::qsq_two_part_8, Int(3)));
    CHECK(q_condition_holds(QCondition::qsq_two_part_8, Int(5)));
    CHECK(!q_condition_holds(QCondition::qsq_two_part_8, Int(7)));
    CHECK(!q_condition_holds(QCondition::any, Int(4)));
    CHECK(smallest_admissible_q(QCondition::q1mod4) == std::vector<Int>{Int(5), Int(9)});
    CHECK(smallest_admissible_q(QCondition::q3mod4) == std::vector<Int>{Int(3), Int(7)});
    CHECK(smallest_admissible_q(QCondition::qsq_two_part_8) == std::vector<Int>{Int(3), Int(5)});
}

TEST_CASE("table shapes") {
    CHECK(e6_defect_table().size() == 18);
    CHECK(twisted_e6_defect_table().size() == 18);
    for (const DefectRow& r : e6_defect_table()) CHECK(r.claimed_defect <= 3);
    // rows i-x are torus rows; product * z = order'
    int torus_rows = 0;
    CycProduct order_rp = order_rprime(kE6);
    for (const DefectRow& r : e6_defect_table()) {
        if (r.c_prime) continue;
        ++torus_rows;
        CHECK(r.claimed_product * r.z_s == order_rp);
    }
    CHECK(torus_rows == 10);
}

TEST_CASE("specific rows verify at their smallest q") {
    // row (xiii) at q=3: defect 3
    RowReport r13 = verify_row(row(e6_defect_table(), "xiii"), kE6, Int(3));
    CHECK(r13.pass());
    // row (vi) at q=5: defect 0
    RowReport r6 = verify_row(row(e6_defect_table(), "vi"), kE6, Int(5));
    CHECK(r6.pass());
    // twisted row (xi) at q=5: defect 2
    RowReport t11 = verify_row(row(twisted_e6_defect_table(), "xi"), kTwoE6, Int(5));
    CHECK(t11.pass());
    // q violating the condition is rejected
    CHECK_THROWS(verify_row(row(e6_defect_table(), "xiii"), kE6, Int(5)));
}

TEST_CASE("all rows verify at the two smallest admissible q") {
    for (const DefectRow& r : e6_defect_table()) {
        for (const Int& q : smallest_admissible_q(r.condition)) {
            CAPTURE(r.row_id);
            CAPTURE(q.get_si());
            RowReport rep = verify_row(r, kE6, q);
            for (const auto& c : rep.checks) {
                CAPTURE(c.name);
                CHECK(c.pass);
            }
        }
    }
    for (const DefectRow& r : twisted_e6_defect_table()) {
        for (const Int& q : smallest_admissible_q(r.condition)) {
            CAPTURE(r.row_id);
            CAPTURE(q.get_si());
            RowReport rep = verify_row(r, kTwoE6, q);
            for (const auto& c : rep.checks) {
                CAPTURE(c.name);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("q -> -q maps the table onto the twisted table") {
    const auto& a = e6_defect_table();
    const auto& b = twisted_e6_defect_table();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CAPTURE(a[i].row_id);
        CHECK(rows_mirror(a[i], b[i]));
    }
    // and the ambient orders mirror
    CHECK(order_rprime(kE6).negate_q() == order_rprime(kTwoE6));
}

TEST_CASE("f4 isolated centralisers admit no defect 2 or 3") {
    for (long q : {3, 5, 7}) {
        F4Report rep = verify_f4_isolated(Int(q));
        CHECK(rep.entries.size() == 7);
        for (const auto& e : rep.entries) {
            CAPTURE(e.centraliser);
            CHECK(e.pass);
            for (long d : e.small_defects) CHECK((d == 0));
        }
    }
}

TEST_CASE("e8 contradiction arithmetic") {
    for (long q : {3, 5}) {
        E8Report rep = verify_e8_contradiction(Int(q));
        CHECK(rep.identities);
        CHECK(rep.shared_degree);
        CHECK(rep.p3_divides_second);
        CHECK(rep.p3_not_divides_first);
    }
    E8Report r3 = verify_e8_contradiction(Int(3));
    CHECK(r3.p3 == 13);
    CHECK((Int(2) * 2 * 169) % 13 == 0);
    E8Report r5 = verify_e8_contradiction(Int(5));
    CHECK(r5.p3 == 31);
    // q = 7 has (q^2-1)_+ = 16: rejected
    CHECK_THROWS(verify_e8_contradiction(Int(7)));
}
