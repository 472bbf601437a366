#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockcheck/finite_group.hpp"
#include "blockcheck/isometry.hpp"

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

TEST_CASE("identity partial extends for each inertial case") {
    for (unsigned e : {3u, 7u, 21u}) {
        CAPTURE(e);
        CharacterTable t = local_table(e);
        GenCharLattice l = compute_lzero(t);
        auto cand = extend_isometry(l, l, identity_partial(l));
        REQUIRE(cand.has_value());
        PerfectnessReport rep = check_perfect(t, t, *cand);
        CHECK(rep.integrality);
        CHECK(rep.separation);
    }
}

TEST_CASE("negated partial extends in the rank-1 case") {
    CharacterTable t = local_table(7);
    GenCharLattice l = compute_lzero(t);
    PartialIsometry p = identity_partial(l);
    for (auto& img : p.tgt_images)
        for (Int& c : img) c = -c;
    auto cand = extend_isometry(l, l, p);
    REQUIRE(cand.has_value());
    // restriction really is the negation: check the mapped basis vector
    std::vector<Int> v = row_of(l.basis(), 0);
    std::vector<Int> mapped(v.size(), Int(0));
    for (size_t i = 0; i < v.size(); ++i)
        mapped[cand->permutation[i]] = Int(cand->signs[i]) * v[i];
    for (size_t j = 0; j < v.size(); ++j) CHECK(mapped[j] == -v[j]);
    CHECK(check_perfect(t, t, *cand).pass());
}

TEST_CASE("cyclic permutation of an E21 basis extends") {
    // brute force over all shape triples: some triple of norm-4 basis vectors
    // with the common shared pair admits an extension of its 3-cycle
    CharacterTable t = local_table(21);
    GenCharLattice l = compute_lzero(t);
    auto n4 = l.vectors_of_norm(4);
    auto dot = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    bool found = false;
    for (size_t a = 0; a < n4.size() && !found; ++a)
        for (size_t b = 0; b < n4.size() && !found; ++b)
            for (size_t c = 0; c < n4.size() && !found; ++c) {
                if (a == b || a == c || b == c) continue;
                if (dot(n4[a], n4[b]) != 2 || dot(n4[a], n4[c]) != 2 || dot(n4[b], n4[c]) != 2)
                    continue;
                PartialIsometry p;
                p.src_basis = {n4[a], n4[b], n4[c]};
                p.tgt_images = {n4[b], n4[c], n4[a]};
                try {
                    auto cand = extend_isometry(l, l, p);
                    if (!cand) continue;
                    bool ok = true;
                    for (size_t r = 0; r < 3 && ok; ++r) {
                        std::vector<Int> mapped(8, Int(0));
                        for (size_t i = 0; i < 8; ++i)
                            mapped[cand->permutation[i]] = Int(cand->signs[i]) * p.src_basis[r][i];
                        ok = mapped == p.tgt_images[r];
                    }
                    found = ok;
                } catch (const std::invalid_argument&) {
                    continue;  // triple is not a basis of the lattice
                }
            }
    CHECK(found);
}

TEST_CASE("candidates preserve all pairings of integer character combinations") {
    CharacterTable t = local_table(3);
    GenCharLattice l = compute_lzero(t);
    auto cand = extend_isometry(l, l, identity_partial(l));
    REQUIRE(cand.has_value());
    std::vector<Int> u{1, -2, 0, 3, 0, 0, 1, -1}, v{0, 1, 1, 0, -1, 2, 0, 1};
    std::vector<Int> mu(8, Int(0)), mv(8, Int(0));
    for (size_t i = 0; i < 8; ++i) {
        mu[cand->permutation[i]] = Int(cand->signs[i]) * u[i];
        mv[cand->permutation[i]] = Int(cand->signs[i]) * v[i];
    }
    CHECK(inner_product(t, u, v) == inner_product(t, mu, mv));
    CHECK(inner_product(t, u, u) == inner_product(t, mu, mu));
}

TEST_CASE("single sign flip fails perfectness on the elementary abelian group") {
    CharacterTable t = local_table(1);
    IsometryCandidate flip;
    flip.permutation.resize(8);
    flip.signs.assign(8, +1);
    for (size_t i = 0; i < 8; ++i) flip.permutation[i] = i;
    flip.signs[3] = -1;
    PerfectnessReport rep = check_perfect(t, t, flip);
    CHECK(!rep.separation);
}

TEST_CASE("rejects non-isometric partial data") {
    CharacterTable t = local_table(3);
    GenCharLattice l = compute_lzero(t);
    PartialIsometry p = identity_partial(l);
    for (Int& c : p.tgt_images[0]) c *= 2;  // destroys membership/norm
    CHECK_THROWS(extend_isometry(l, l, p));
}

TEST_CASE("reports no extension when the target lattice differs") {
    // partial map into a doubled lattice cannot restrict correctly
    CharacterTable t = local_table(7);
    GenCharLattice l = compute_lzero(t);
    // fabricate a target lattice with the basis negated (same lattice); then
    // feed a partial that is not an isometry of it: identity on src but the
    // doubled vector as image is rejected above, so instead check the
    // permutation-level failure: map the generator to a norm-8 vector of a
    // DIFFERENT lattice built over another table
    CharacterTable t3 = local_table(3);
    GenCharLattice l3 = compute_lzero(t3);
    PartialIsometry p;
    std::vector<Int> gen = row_of(l.basis(), 0);
    p.src_basis = {gen};
    // a norm-8 vector of l3 exists (sum of two disjoint norm-2 and one norm-4);
    // build one: 2 * first norm-2 vector
    auto n2 = l3.vectors_of_norm(2);
    REQUIRE(!n2.empty());
    std::vector<Int> img = n2[0];
    for (Int& c : img) c *= 2;
    p.tgt_images = {img};
    auto cand = extend_isometry(l, l3, p);
    CHECK(!cand.has_value());
}
