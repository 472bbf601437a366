#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blockcheck/cycproduct.hpp"
#include "blockcheck/cyclotomic_poly.hpp"
#include "blockcheck/intmatrix.hpp"
#include "blockcheck/numutil.hpp"
#include "blockcheck/zsigmondy.hpp"

using namespace blockcheck;

TEST_CASE("v2 and two/odd parts") {
    CHECK(v2(Int(8)) == 3);
    CHECK(v2(Int(48)) == 4);
    CHECK(v2(Int(3 * 3 - 1)) == 3);  // q^2 - 1 at q = 3
    auto parts = two_odd_parts(Int(48));
    CHECK(parts.two_part == 16);
    CHECK(parts.odd_part == 3);
    CHECK_THROWS(v2(Int(0)));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly{Int(-1), Int(1)});
    CHECK(cyclotomic_poly(2) == IntPoly{Int(1), Int(1)});
    // frozen: x^12 - 1 divided by the proper-divisor factors
    CHECK(cyclotomic_poly(12) == IntPoly{Int(1), Int(0), Int(-1), Int(0), Int(1)});

    // prod_{d | n} Phi_d(q) = q^n - 1 exactly
    for (unsigned n = 1; n <= 40; ++n) {
        for (long q : {3, 5, 7, 9, 11}) {
            Int prod = 1;
            for (unsigned d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclotomic_at(d, Int(q));
            Int direct;
            mpz_pow_ui(direct.get_mpz_t(), Int(q).get_mpz_t(), n);
            CHECK(prod == direct - 1);
        }
    }
}

TEST_CASE("cycproduct evaluation") {
    CycProduct p(Rat(1), 0, {{1, 1}});
    CHECK(p.eval(Int(7)) == Rat(6));

    // E6 order at q = 3: divisible by 3^36 exactly; equals the raw product.
    CycProduct e6(Rat(1), 36,
                  {{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}});
    Int value = e6.eval_integer(Int(3));
    Int three36;
    mpz_pow_ui(three36.get_mpz_t(), Int(3).get_mpz_t(), 36);
    CHECK(value % three36 == 0);
    CHECK((value / three36) % 3 != 0);
    Int raw;
    mpz_pow_ui(raw.get_mpz_t(), Int(3).get_mpz_t(), 36);
    for (unsigned d : {2u, 5u, 6u, 8u, 9u, 12u}) {
        Int t;
        mpz_pow_ui(t.get_mpz_t(), Int(3).get_mpz_t(), d);
        raw *= t - 1;
    }
    CHECK(value == raw);

    // E6[theta] degree at q = 5 is an integer
    CycProduct theta(Rat(1, 3), 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}});
    CHECK_NOTHROW(theta.eval_integer(Int(5)));
    CHECK(theta.eval(Int(5)).get_den() == 1);
}

TEST_CASE("cycproduct v2 bookkeeping") {
    CycProduct odd(Rat(1), 0, {{3, 3}, {6, 2}, {9, 1}, {12, 1}});
    for (long q : {3, 5, 7, 9, 11, 13}) CHECK(odd.v2_at(Int(q)) == 0);

    CycProduct qsq(Rat(1), 0, {{1, 1}, {2, 1}});
    CHECK(qsq.v2_at(Int(3)) == 3);
    CHECK(CycProduct(Rat(1), 0, {{4, 1}}).v2_at(Int(5)) == 1);  // Phi_4(5) = 26
}

TEST_CASE("v2_at matches v2 of the evaluation on random products") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dpick(1, 14), epick(0, 3), qpick(0, 2);
    const long qs[3] = {3, 5, 9};
    for (int trial = 0; trial < 1000; ++trial) {
        std::map<unsigned, long> phis;
        for (int t = 0; t < 4; ++t) phis[static_cast<unsigned>(dpick(rng))] += epick(rng);
        CycProduct p(Rat(1 + epick(rng)), epick(rng), std::move(phis));
        Int q(qs[qpick(rng)]);
        Rat v = p.eval(q);
        CHECK(v.get_den() == 1);
        CHECK(p.v2_at(q) == v2(v.get_num()));
    }
}

TEST_CASE("cycproduct quotient flags and serialization") {
    CycProduct order(Rat(1), 2, {{1, 2}, {2, 1}});
    CycProduct deg(Rat(1), 1, {{1, 1}, {2, 1}});
    CycProduct quot = order / deg;
    CHECK(quot.phi_exponent(1) == 1);
    CHECK(quot.phi_exponent(2) == 0);
    CycProduct bad = deg / order;
    CHECK(bad.phi_exponent(1) == -1);
    CHECK_THROWS(bad.require_effective("degree"));

    CycProduct theta(Rat(1, 3), 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}});
    CHECK(theta.to_string() == "1/3 * q^7 * F1^6 F2^4 F4^2 F5 F8");
    CycProduct back = CycProduct::from_structured(theta.to_structured());
    CHECK(back == theta);
}

TEST_CASE("negate_q swaps the cyclotomic pairs") {
    CycProduct p(Rat(1), 3, {{1, 2}, {3, 1}, {5, 1}, {9, 1}, {4, 1}, {12, 1}, {6, 1}, {10, 1}, {18, 1}, {2, 1}});
    CycProduct m = p.negate_q();
    CHECK(m.phi_exponent(2) == 2);
    CHECK(m.phi_exponent(6) == 1);
    CHECK(m.phi_exponent(10) == 1);
    CHECK(m.phi_exponent(18) == 1);
    CHECK(m.phi_exponent(4) == 1);
    CHECK(m.phi_exponent(12) == 1);
    CHECK(m.phi_exponent(3) == 1);
    CHECK(m.phi_exponent(5) == 1);
    CHECK(m.phi_exponent(9) == 1);
    CHECK(m.phi_exponent(1) == 1);
    // involution
    CHECK(m.negate_q() == p);
}

TEST_CASE("zsigmondy primes") {
    CHECK(zsigmondy_prime(Int(3), 6) == 7);
    CHECK(zsigmondy_prime(Int(3), 5) == 11);
    CHECK(zsigmondy_prime(Int(5), 3) == 31);
    CHECK_THROWS(zsigmondy_prime(Int(3), 2));
    CHECK_THROWS(zsigmondy_prime(Int(4), 5));

    // Phi_19(13) = 12865927 * 9468940004449: both factors exceed the trial
    // bound, so the 1 (mod 2n) progression scan must find the smaller one.
    Int p = zsigmondy_prime(Int(13), 19);
    CHECK(p == 12865927);
    CHECK(cyclotomic_at(19, Int(13)) % p == 0);
    CHECK(multiplicative_order(Int(13), p) == 19);

    // divisibility property: p_n | Phi_d(q) implies n | d, all d <= 60
    for (long q : {3, 5, 7, 9}) {
        for (unsigned n = 3; n <= 20; ++n) {
            Int p = zsigmondy_prime(Int(q), n);
            Int qn;
            mpz_pow_ui(qn.get_mpz_t(), Int(q).get_mpz_t(), n);
            CHECK((qn - 1) % p == 0);
            for (unsigned m = 1; m < n; ++m) {
                Int qm;
                mpz_pow_ui(qm.get_mpz_t(), Int(q).get_mpz_t(), m);
                CHECK((qm - 1) % p != 0);
            }
            for (unsigned d = 1; d <= 60; ++d)
                if (cyclotomic_at(d, Int(q)) % p == 0) CHECK(d % n == 0);
        }
    }
}

TEST_CASE("hermite kernel") {
    IntMatrix id3 = IntMatrix::identity(3);
    CHECK(hermite_kernel(id3).rows() == 0);

    IntMatrix col(2, 1);
    col.at(0, 0) = 1;
    col.at(1, 0) = -1;
    IntMatrix ker = hermite_kernel(col);
    REQUIRE(ker.rows() == 1);
    CHECK(ker.at(0, 0) == 1);
    CHECK(ker.at(0, 1) == 1);

    // random 5x3 matrices: x A = 0 for every kernel row; ranks add up
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix a(5, 3);
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 3; ++j) a.at(i, j) = entry(rng);
        IntMatrix k = hermite_kernel(a);
        CHECK(k.rows() + a.rank() == 5);
        if (k.rows() > 0) CHECK((k * a).is_zero());
    }
}

TEST_CASE("hermite transform is unimodular") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) a.at(i, j) = entry(rng);
        HermiteResult hr = hermite_normal_form(a);
        Int det = hr.u.determinant();
        CHECK((det == 1 || det == -1));
        CHECK(hr.u * a == hr.h);
    }
}

TEST_CASE("smith normal form") {
    IntMatrix a(3, 3);
    long vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
    SmithResult sr = smith_normal_form(a);
    CHECK(sr.u * a * sr.v == sr.s);
    Int d1 = sr.s.at(0, 0), d2 = sr.s.at(1, 1), d3 = sr.s.at(2, 2);
    CHECK(d1 > 0);
    CHECK(d2 % d1 == 0);
    if (d3 != 0) CHECK(d3 % d2 == 0);
}

TEST_CASE("primality and factors") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int("18446744073709551557")));  // largest prime below 2^64
    CHECK(!is_prime(Int("18446744073709551555")));
    auto f = prime_factors(Int(728));  // 3^6 - 1
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 2);
    CHECK(f[1] == 7);
    CHECK(f[2] == 13);
    CHECK(multiplicative_order(Int(3), Int(7)) == 6);
    CHECK(multiplicative_order(Int(3), Int(13)) == 3);
}
