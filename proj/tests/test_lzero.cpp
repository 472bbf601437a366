#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "blockcheck/finite_group.hpp"
#include "blockcheck/lzero.hpp"

using namespace blockcheck;

namespace {

CharacterTable local_table(unsigned e_order) {
    FiniteGroup g = build_semidirect(3, gl3f2_odd_subgroup(e_order), "P:E" + std::to_string(e_order));
    return character_table(g);
}

std::vector<Int> row_of(const IntMatrix& m, size_t r) {
    std::vector<Int> v(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) v[j] = m.at(r, j);
    return v;
}

}  // namespace

TEST_CASE("lzero ranks of the local groups") {
    CHECK(compute_lzero(local_table(1)).rank() == 7);
    CHECK(compute_lzero(local_table(3)).rank() == 5);
    CHECK(compute_lzero(local_table(7)).rank() == 1);
    CHECK(compute_lzero(local_table(21)).rank() == 3);
}

TEST_CASE("rank equals irreducibles minus 2-regular classes") {
    for (unsigned e : {1u, 3u, 7u, 21u}) {
        CharacterTable t = local_table(e);
        size_t regular = 0;
        for (const auto& c : t.classes())
            if (c.two_regular) ++regular;
        CHECK(compute_lzero(t).rank() == t.num_irreducibles() - regular);
    }
}

TEST_CASE("inner products") {
    CharacterTable t = local_table(7);
    // <chi, chi> = 1 for an irreducible
    std::vector<Int> e1(8, Int(0));
    e1[0] = 1;
    CHECK(inner_product(t, e1, e1) == Rat(1));

    // the norm-8 generator: all seven linear characters minus the degree-7 one
    GenCharLattice l = compute_lzero(t);
    REQUIRE(l.rank() == 1);
    std::vector<Int> gen = row_of(l.basis(), 0);
    CHECK(inner_product(t, gen, gen) == Rat(8));
    for (const Int& c : gen) CHECK((c == 1 || c == -1));

    // norm 2 differences in C2 x A4
    CharacterTable t3 = local_table(3);
    GenCharLattice l3 = compute_lzero(t3);
    auto n2 = l3.vectors_of_norm(2);
    CHECK(n2.size() == 4);  // the four disjoint norm-2 pairs, up to sign
    for (const auto& v : n2) CHECK(inner_product(t3, v, v) == Rat(2));
}

TEST_CASE("basis shape witnesses") {
    auto w3 = match_basis_shape(compute_lzero(local_table(3)), BasisShape::E3);
    REQUIRE(w3.has_value());
    REQUIRE(w3->vectors.size() == 5);
    // Gram: four orthogonal norm-2 vectors, u of norm 4 meeting each once
    const auto& vs = w3->vectors;
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) {
            Int ip = 0;
            for (size_t j = 0; j < vs[a].size(); ++j) ip += vs[a][j] * vs[b][j];
            CHECK(ip == (a == b ? 2 : 0));
        }
    Int norm_u = 0;
    for (const Int& c : vs[4]) norm_u += c * c;
    CHECK(norm_u == 4);
    for (size_t a = 0; a < 4; ++a) {
        Int ip = 0;
        for (size_t j = 0; j < vs[4].size(); ++j) ip += vs[4][j] * vs[a][j];
        CHECK(ip == 1);  // normalised pairing with the norm-4 vector
    }

    auto w7 = match_basis_shape(compute_lzero(local_table(7)), BasisShape::E7);
    REQUIRE(w7.has_value());

    auto w21 = match_basis_shape(compute_lzero(local_table(21)), BasisShape::E21);
    REQUIRE(w21.has_value());
    REQUIRE(w21->vectors.size() == 3);
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            Int ip = 0;
            for (size_t j = 0; j < w21->vectors[a].size(); ++j)
                ip += w21->vectors[a][j] * w21->vectors[b][j];
            CHECK(ip == (a == b ? 4 : 2));
        }

    // mismatched shapes are rejected
    CHECK(!match_basis_shape(compute_lzero(local_table(7)), BasisShape::E3).has_value());
    CHECK(!match_basis_shape(compute_lzero(local_table(3)), BasisShape::E21).has_value());
}

TEST_CASE("PIM-shaped labelling exists for the E3 case") {
    // the four disjoint norm-2 vectors pair the eight characters as
    // chi_i/chi_{i+3}, chi_7/chi_8 for some labelling
    auto w = match_basis_shape(compute_lzero(local_table(3)), BasisShape::E3);
    REQUIRE(w.has_value());
    std::set<size_t> covered;
    for (size_t a = 0; a < 4; ++a)
        for (size_t j = 0; j < w->vectors[a].size(); ++j)
            if (w->vectors[a][j] != 0) covered.insert(j);
    CHECK(covered.size() == 8);
}

TEST_CASE("norm-8 coefficient supports") {
    auto all = norm8_supports(8);
    std::set<size_t> sizes;
    for (const auto& m : all) sizes.insert(m.size());
    CHECK(sizes == std::set<size_t>{2, 5, 8});
    for (const auto& m : all)
        if (m.size() == 5) CHECK(m == std::vector<unsigned>{1, 1, 1, 1, 2});
    for (const auto& m : all)
        if (m.size() == 2) CHECK(m == std::vector<unsigned>{2, 2});
    auto small = norm8_supports(7);
    for (const auto& m : small) CHECK(m.size() <= 7);
    std::set<size_t> small_sizes;
    for (const auto& m : small) small_sizes.insert(m.size());
    CHECK(small_sizes == std::set<size_t>{2, 5});
}

TEST_CASE("landrock decision table") {
    CHECK(landrock_lookup(1).pairs == std::vector<std::pair<unsigned, unsigned>>{{8, 1}});
    CHECK(landrock_lookup(3).pairs == std::vector<std::pair<unsigned, unsigned>>{{8, 3}});
    CHECK(landrock_lookup(7).pairs == std::vector<std::pair<unsigned, unsigned>>{{5, 4}, {8, 7}});
    CHECK(landrock_lookup(21).pairs == std::vector<std::pair<unsigned, unsigned>>{{7, 4}, {8, 5}});
    for (unsigned e : {1u, 3u, 7u, 21u}) {
        const LandrockCase& c = landrock_lookup(e);
        for (const auto& [k, l] : c.pairs) CHECK(k - l == c.difference);
        CHECK(inertial_from_difference(c.difference) == e);
    }
    CHECK_THROWS(landrock_lookup(5));
    CHECK_THROWS(inertial_from_difference(2));
}

TEST_CASE("lzero rank equals the landrock difference") {
    for (unsigned e : {1u, 3u, 7u, 21u})
        CHECK(compute_lzero(local_table(e)).rank() == landrock_lookup(e).difference);
}
