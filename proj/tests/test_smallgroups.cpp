#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "blockcheck/char_table.hpp"
#include "blockcheck/finite_group.hpp"
#include "blockcheck/sylow.hpp"

using namespace blockcheck;

namespace {

FiniteGroup local_group(unsigned e_order) {
    return build_semidirect(3, gl3f2_odd_subgroup(e_order), "P:E" + std::to_string(e_order));
}

}  // namespace

TEST_CASE("semidirect products have the right orders") {
    CHECK(local_group(1).order() == 8);
    CHECK(local_group(3).order() == 24);
    CHECK(local_group(7).order() == 56);
    CHECK(local_group(21).order() == 168);
    // sampled associativity
    FiniteGroup g = local_group(21);
    for (int a : {0, 5, 17, 33})
        for (int b : {1, 8, 21})
            for (int c : {2, 13, 55}) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

TEST_CASE("semidirect rejects a non-closed acting set") {
    // two order-7 generators from different Singer cycles do not close oddly
    auto a = gl3f2_odd_subgroup(7);
    std::vector<uint32_t> broken{a[1], a[2]};  // identity omitted on purpose is fine; closure fails below
    broken.push_back(0b010'001'100);           // a permutation matrix outside <a>
    CHECK_THROWS(build_semidirect(3, broken, "broken"));
}

TEST_CASE("odd subgroups of GL3(2)") {
    auto reps = odd_subgroups_gl3f2();
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].size() == 1);
    CHECK(reps[1].size() == 3);
    CHECK(reps[2].size() == 7);
    CHECK(reps[3].size() == 21);
    // the order-21 group is nonabelian with trivial centre
    const auto& f21 = reps[3];
    bool abelian = true;
    for (uint32_t a : f21)
        for (uint32_t b : f21)
            if (f2mat::mul(a, b) != f2mat::mul(b, a)) abelian = false;
    CHECK(!abelian);
    size_t central = 0;
    for (uint32_t a : f21) {
        bool commutes_all = true;
        for (uint32_t b : f21)
            if (f2mat::mul(a, b) != f2mat::mul(b, a)) commutes_all = false;
        if (commutes_all) ++central;
    }
    CHECK(central == 1);
    // no odd subgroup of order 9 or 49 (168 = 8 * 21)
    for (const auto& r : reps) CHECK((r.size() != 9 && r.size() != 49));
}

TEST_CASE("conjugacy class counts") {
    CHECK(local_group(7).conjugacy_classes().size() == 8);
    CHECK(local_group(3).conjugacy_classes().size() == 8);
    CHECK(local_group(21).conjugacy_classes().size() == 8);
    CHECK(local_group(1).conjugacy_classes().size() == 8);
    CHECK(build_sl2(3).conjugacy_classes().size() == 7);
    // class sizes divide the group order and partition it
    for (unsigned e : {3u, 7u, 21u}) {
        FiniteGroup g = local_group(e);
        size_t total = 0;
        for (const auto& c : g.conjugacy_classes()) {
            CHECK(g.order() % c.members.size() == 0);
            total += c.members.size();
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("character tables of the local groups") {
    // degrees per inertial quotient: {1^8}, {1^6 3^2}, {1^7 7}, {1^3 3^2 7^3}
    CHECK(character_table(local_group(1)).degrees() ==
          std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(character_table(local_group(3)).degrees() ==
          std::vector<long long>{1, 1, 1, 1, 1, 1, 3, 3});
    CHECK(character_table(local_group(7)).degrees() ==
          std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 7});
    CHECK(character_table(local_group(21)).degrees() ==
          std::vector<long long>{1, 1, 1, 3, 3, 7, 7, 7});
}

TEST_CASE("character table exactness") {
    for (unsigned e : {1u, 3u, 7u, 21u}) {
        CharacterTable t = character_table(local_group(e));
        CHECK(t.num_irreducibles() == 8);
        CHECK_NOTHROW(t.verify());  // orthogonality, degree sum, divisibility
    }
    CharacterTable sl23 = character_table(build_sl2(3));
    CHECK(sl23.num_irreducibles() == 7);
    CHECK_NOTHROW(sl23.verify());
}

TEST_CASE("matrix group orders") {
    CHECK(build_sl2(3).order() == 24);
    CHECK(build_sl2(9).order() == 720);
    CHECK(build_pgl2(5).order() == 120);
    CHECK(build_gl2(5).order() == 480);
    CHECK(build_psl2(5).order() == 60);
}

TEST_CASE("sylow 2-subgroups and recognition") {
    struct Case {
        unsigned q;
        size_t order;
        TwoGroupType type;
    };
    // SL2: generalised quaternion, order 8 exactly when q = +-3 mod 8
    for (const Case& c : {Case{3, 8, TwoGroupType::generalized_quaternion},
                          Case{5, 8, TwoGroupType::generalized_quaternion},
                          Case{7, 16, TwoGroupType::generalized_quaternion},
                          Case{9, 16, TwoGroupType::generalized_quaternion},
                          Case{11, 8, TwoGroupType::generalized_quaternion},
                          Case{13, 8, TwoGroupType::generalized_quaternion}}) {
        FiniteGroup g = build_sl2(c.q);
        auto syl = sylow2(g);
        CHECK(syl.size() == c.order);
        CHECK(recognize_2group(g, syl) == c.type);
        bool small = (c.q % 8 == 3 || c.q % 8 == 5);
        CHECK((syl.size() == 8) == small);
    }
    // PGL2: dihedral of order at least 8
    for (unsigned q : {3u, 5u, 7u, 9u}) {
        FiniteGroup g = build_pgl2(q);
        auto syl = sylow2(g);
        CHECK(syl.size() >= 8);
        CHECK(recognize_2group(g, syl) == TwoGroupType::dihedral);
    }
    // PSL2(3), PSL2(5): Klein four
    for (unsigned q : {3u, 5u}) {
        FiniteGroup g = build_psl2(q);
        auto syl = sylow2(g);
        CHECK(syl.size() == 4);
        CHECK(recognize_2group(g, syl) == TwoGroupType::klein_four);
    }
    // elementary abelian of order 8 inside the local groups
    FiniteGroup l = local_group(7);
    auto syl = sylow2(l);
    CHECK(syl.size() == 8);
    CHECK(recognize_2group(l, syl) == TwoGroupType::elem_abelian_8);
}

TEST_CASE("rank-1 orthogonal groups are dihedral") {
    for (unsigned q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        FiniteGroup plus = build_go2(q, true);
        CHECK(plus.order() == 2 * (q - 1));
        CHECK(is_dihedral_group(plus));
        FiniteGroup minus = build_go2(q, false);
        CHECK(minus.order() == 2 * (q + 1));
        CHECK(is_dihedral_group(minus));
    }
    // non-dihedral controls
    CHECK(!is_dihedral_group(build_sl2(3)));
    FiniteGroup c4 = build_semidirect(3, {}, "P");  // elementary abelian of order 8
    CHECK(!is_dihedral_group(c4));
}

TEST_CASE("recognition on cyclic and semidihedral groups") {
    // a cyclic subgroup of order 8 in SL2(7)
    FiniteGroup g = build_sl2(7);
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        if (g.element_order(x) == 8) {
            auto cyc = g.subgroup_closure({x});
            CHECK(recognize_2group(g, cyc) == TwoGroupType::cyclic);
            break;
        }
    }
    // semidihedral of order 16: Sylow 2 of GL2(3)
    FiniteGroup gl23 = build_gl2(3);
    auto syl = sylow2(gl23);
    CHECK(syl.size() == 16);
    CHECK(recognize_2group(gl23, syl) == TwoGroupType::semidihedral);
}
