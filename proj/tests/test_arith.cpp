#include "zetamoments/arith.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace zm::arith;

namespace {

// brute-force d_k(n): count ordered k-tuples with product n
std::uint64_t dk_enumerate(unsigned k, std::uint64_t n) {
    if (k == 1) return 1;
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a)
        if (n % a == 0) count += dk_enumerate(k - 1, n / a);
    return count;
}

// Ramanujan sum by its exponential-sum definition
double ramanujan_expsum(std::uint64_t q, std::uint64_t h) {
    std::complex<double> s = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const double ang = 2.0 * M_PI * double(a) * double(h % q) / double(q);
        s += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s.real();
}

}  // namespace

TEST_CASE("factorize canonical forms") {
    CHECK(factorize(1).factors.empty());
    const auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});
    const auto f97 = factorize(97);
    REQUIRE(f97.factors.size() == 1);
    CHECK(f97.factors[0] == PrimePower{97, 1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    // product-of-prime-powers round trip on a sample
    for (std::uint64_t n : {2ull, 36ull, 9973ull, 123456ull, 999999937ull}) {
        std::uint64_t prod = 1;
        for (const auto& pe : factorize(n).factors)
            for (unsigned e = 0; e < pe.e; ++e) prod *= pe.p;
        CHECK(prod == n);
    }
}

TEST_CASE("dk_prime_power binomials") {
    CHECK(dk_prime_power(3, 2) == 6);
    CHECK(dk_prime_power(1, 5) == 1);
    CHECK(dk_prime_power(4, 1) == 4);
    CHECK(dk_prime_power(2, 0) == 1);
}

TEST_CASE("sieve_dk matches definitions") {
    const auto t2 = sieve_dk(2, 1000);
    CHECK(t2(6) == 4);
    CHECK(t2(1) == 1);
    const auto t3 = sieve_dk(3, 1000);
    CHECK(t3(12) == 18);  // ordered triples with product 12
    CHECK(t3(12) == dk_enumerate(3, 12));
    const auto t1 = sieve_dk(1, 100);
    for (std::uint64_t n = 1; n <= 100; ++n) CHECK(t1(n) == 1);

    // enumeration oracle on small range
    for (std::uint64_t n = 1; n <= 60; ++n) {
        CHECK(t2(n) == dk_enumerate(2, n));
        CHECK(t3(n) == dk_enumerate(3, n));
    }

    // values at primes and prime powers
    CHECK(t3(997) == 3);
    CHECK(t2(512) == dk_prime_power(2, 9));

    CHECK_THROWS(sieve_dk(0, 10));
    CHECK_THROWS(t2(0));
    CHECK_THROWS(t2(1001));
}

TEST_CASE("sieve vs pointwise factorization on random sample") {
    const std::uint64_t xmax = 200000;
    const auto t4 = sieve_dk(4, xmax);
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::uint64_t> dist(1, xmax);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = dist(rng);
        CHECK(t4(n) == dk_pointwise(4, n));
    }
}

TEST_CASE("divisor recurrences from the factorization identities") {
    // d_k(p^b) = d_{k-1}(p^b) + d_k(p^{b-1})
    for (unsigned k = 2; k <= 6; ++k)
        for (unsigned b = 1; b <= 20; ++b)
            CHECK(dk_prime_power(k, b) == dk_prime_power(k - 1, b) + dk_prime_power(k, b - 1));

    // submultiplicativity at prime powers
    for (unsigned l = 1; l <= 6; ++l)
        for (unsigned a = 0; a <= 10; ++a)
            for (unsigned b = 0; b <= 10; ++b)
                CHECK(dk_prime_power(l, a + b) <= dk_prime_power(l, a) * dk_prime_power(l, b));

    // (k-1) d_k(p^{a-1}) = a d_{k-1}(p^a)
    for (unsigned k = 2; k <= 6; ++k)
        for (unsigned a = 1; a <= 20; ++a)
            CHECK((std::uint64_t(k) - 1) * dk_prime_power(k, a - 1) ==
                  std::uint64_t(a) * dk_prime_power(k - 1, a));
}

TEST_CASE("divisor-sum identity sum_{q|n} d_{k-1}(q) = d_k(n)") {
    const std::uint64_t N = 10000;
    for (unsigned k = 2; k <= 4; ++k) {
        const auto tk = sieve_dk(k, N);
        const auto tk1 = sieve_dk(k - 1, N);
        std::vector<std::uint64_t> acc(N + 1, 0);
        for (std::uint64_t q = 1; q <= N; ++q)
            for (std::uint64_t m = q; m <= N; m += q) acc[m] += tk1(q);
        for (std::uint64_t n = 1; n <= N; ++n) CHECK(acc[n] == tk(n));
    }
}

TEST_CASE("ramanujan sums") {
    CHECK(ramanujan_sum(1, 7) == 1);
    CHECK(ramanujan_sum(6, 4) == -1);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull})
        CHECK(ramanujan_sum(p, 3 * p) == std::int64_t(p) - 1);

    // exponential-sum oracle
    for (std::uint64_t q = 1; q <= 30; ++q)
        for (std::uint64_t h = 1; h <= 10; ++h) {
            const double ref = ramanujan_expsum(q, h);
            CHECK(std::abs(double(ramanujan_sum(q, h)) - ref) < 1e-6);
        }
}

TEST_CASE("ramanujan sums are multiplicative in q") {
    for (std::uint64_t h : {1ull, 4ull, 9ull, 30ull})
        for (std::uint64_t q1 : {2ull, 3ull, 4ull, 5ull, 9ull})
            for (std::uint64_t q2 : {7ull, 11ull, 25ull, 13ull}) {
                if (std::gcd(q1, q2) != 1) continue;
                CHECK(ramanujan_sum(q1 * q2, h) ==
                      ramanujan_sum(q1, h) * ramanujan_sum(q2, h));
            }
}

TEST_CASE("brute force correlation sums") {
    const auto t1 = sieve_dk(1, 2000);
    CHECK(brute_force_Dk(1, 1000, 7, t1) == 1000);
    const auto t2 = sieve_dk(2, 64);
    CHECK(brute_force_Dk(2, 10, 1, t2) == 74);
    CHECK(brute_force_Dk(2, 0, 5, t2) == 0);
    CHECK_THROWS_AS(brute_force_Dk(2, 64, 1, t2), std::out_of_range);
    CHECK_THROWS(brute_force_Dk(3, 10, 1, t2));  // k mismatch
}

TEST_CASE("sieve cache round trip is byte-identical") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "zm_cache_test";
    fs::remove_all(dir);
    const auto fresh = sieve_dk(3, 5000);
    const auto file = table_cache_path(dir, 3, 5000);
    save_table(fresh, file);

    const auto first = sieve_dk_cached(3, 5000, dir);
    CHECK(first.values == fresh.values);

    // compare the cache file against a re-serialization of a fresh sieve
    const fs::path file2 = dir / "fresh.bin";
    save_table(fresh, file2);
    std::ifstream a(file, std::ios::binary), b(file2, std::ios::binary);
    const std::string bytes_a((std::istreambuf_iterator<char>(a)), {});
    const std::string bytes_b((std::istreambuf_iterator<char>(b)), {});
    CHECK(bytes_a == bytes_b);

    // corrupt file is ignored, not trusted
    std::ofstream(file, std::ios::binary) << "garbage";
    CHECK(!load_table(file).has_value());
    const auto rebuilt = sieve_dk_cached(3, 5000, dir);
    CHECK(rebuilt.values == fresh.values);
    fs::remove_all(dir);
}
