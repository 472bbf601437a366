#include "blockcheck/numutil.hpp"

#include <algorithm>

namespace blockcheck {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin below 2^64 with the standard 12-witness set.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        uint64_t lo = mpz_get_ui(n.get_mpz_t());
        Int hi = n >> 32;
        uint64_t v = (hi.get_ui() << 32) | (lo & 0xffffffffull);
        return is_prime_u64(v);
    }
    int r = mpz_probab_prime_p(n.get_mpz_t(), 40);
    if (r == 1) throw std::runtime_error("is_prime: inconclusive primality above 2^64");
    return r == 2;
}

std::vector<Int> prime_factors(const Int& n) {
    if (n == 0) throw std::invalid_argument("prime_factors: zero");
    Int m = abs(n);
    std::vector<Int> out;
    auto push = [&out](const Int& p) {
        if (out.empty() || out.back() != p) out.push_back(p);
    };
    for (long p = 2; p <= 1000000 && m > 1; p == 2 ? p = 3 : p += 2) {
        Int pp(p);
        if (pp * pp > m) break;
        if (m % p == 0) {
            push(pp);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        if (!is_prime(m)) throw std::runtime_error("prime_factors: composite cofactor beyond trial-division bound");
        push(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int multiplicative_order(const Int& q, const Int& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("multiplicative_order: modulus must be prime");
    if (q % p == 0) throw std::invalid_argument("multiplicative_order: q divisible by p");
    Int group = p - 1;
    Int ord = group;
    for (const Int& f : prime_factors(group)) {
        while (ord % f == 0) {
            Int cand = ord / f;
            Int r;
            mpz_powm(r.get_mpz_t(), q.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
            if (r == 1)
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

}  // namespace blockcheck
