// arith.hpp
//
// Prime and multiplicative-function services: factorization, the k-th
// divisor function d_k (pointwise and sieved), Ramanujan sums c_q(h),
// and the exact correlation sum sum_{n<=x} d_k(n) d_k(n+h) that serves
// as the oracle for every conjectural prediction downstream.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace zm::arith {

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1,
// product of p^e equal to n. n = 1 has an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

Factorization factorize(std::uint64_t n);  // rejects n = 0

// Moebius mu(n); 0 when n is not squarefree.
int mobius(std::uint64_t n);

// Euler phi(n).
std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// d_k(p^j) = C(k+j-1, j), independent of the prime.
std::uint64_t dk_prime_power(unsigned k, unsigned j);

// d_k(n) from the factorization of n (multiplicative product).
std::uint64_t dk_pointwise(unsigned k, std::uint64_t n);

// Dense table of d_k(n) for 1 <= n <= x_max.
struct DivisorTable {
    unsigned k = 1;
    std::uint64_t x_max = 0;
    std::vector<std::uint64_t> values;  // values[n], index 0 unused

    std::uint64_t operator()(std::uint64_t n) const;  // bounds-checked
};

// Linear smallest-prime-factor sieve; exact 64-bit values, overflow-checked.
DivisorTable sieve_dk(unsigned k, std::uint64_t x_max);

// Binary sieve cache. A hit is byte-identical to a fresh sieve (tested);
// a corrupt or mismatched file is ignored and the sieve rebuilt.
std::filesystem::path table_cache_path(const std::filesystem::path& dir,
                                       unsigned k, std::uint64_t x_max);
void save_table(const DivisorTable& t, const std::filesystem::path& file);
std::optional<DivisorTable> load_table(const std::filesystem::path& file);
DivisorTable sieve_dk_cached(unsigned k, std::uint64_t x_max,
                             const std::filesystem::path& cache_dir);

// c_q(h) = sum_{d | gcd(q,h)} d mu(q/d).
std::int64_t ramanujan_sum(std::uint64_t q, std::uint64_t h);

// D_k(x,h) = sum_{n<=x} d_k(n) d_k(n+h), exact. The table must cover x+h.
std::uint64_t brute_force_Dk(unsigned k, std::uint64_t x, std::uint64_t h,
                             const DivisorTable& table);

}  // namespace zm::arith
