#include "zetamoments/arith.hpp"

#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zm::arith {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return r;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) fail("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    auto strip = [&](std::uint64_t p) {
        if (n % p) return;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

int mobius(std::uint64_t n) {
    const auto f = factorize(n);
    for (const auto& pe : f.factors)
        if (pe.e > 1) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& pe : factorize(n).factors) r -= r / pe.p;
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].e == 1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return primes;
}

std::uint64_t dk_prime_power(unsigned k, unsigned j) {
    if (k == 0) fail("dk_prime_power: k must be >= 1");
    // C(k+j-1, j) via the smaller of j and k-1 factors
    unsigned m = std::min(j, k - 1);
    std::uint64_t num = 1;
    for (unsigned i = 1; i <= m; ++i) {
        // numerator factor (k+j-m) .. (k+j-1), stays exact at each step
        num = mul_checked(num, k + j - m + i - 1, "dk_prime_power");
        num /= i;
    }
    return num;
}

std::uint64_t dk_pointwise(unsigned k, std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& pe : factorize(n).factors)
        r = mul_checked(r, dk_prime_power(k, pe.e), "dk_pointwise");
    return r;
}

std::uint64_t DivisorTable::operator()(std::uint64_t n) const {
    if (n == 0 || n > x_max)
        throw std::out_of_range("DivisorTable: n=" + std::to_string(n) +
                                " outside [1," + std::to_string(x_max) + "]");
    return values[n];
}

DivisorTable sieve_dk(unsigned k, std::uint64_t x_max) {
    if (k == 0 || x_max == 0) fail("sieve_dk: k >= 1 and x_max >= 1 required");
    constexpr std::uint64_t kCapacityLimit = std::uint64_t(1) << 31;
    if (x_max > kCapacityLimit)
        throw std::length_error("sieve_dk: x_max exceeds table capacity");

    DivisorTable t;
    t.k = k;
    t.x_max = x_max;
    t.values.assign(x_max + 1, 0);
    t.values[1] = 1;

    // Linear sieve; pk[n] = spf(n)^e where spf(n)^e || n, cnt[n] that exponent.
    std::vector<std::uint32_t> pk(x_max + 1, 0);
    std::vector<std::uint8_t> cnt(x_max + 1, 0);
    std::vector<std::uint32_t> primes;
    const std::uint64_t dk_p = k;  // d_k(p) = C(k,1)

    for (std::uint64_t i = 2; i <= x_max; ++i) {
        if (pk[i] == 0) {  // prime: composites are always constructed first
            primes.push_back(static_cast<std::uint32_t>(i));
            pk[i] = static_cast<std::uint32_t>(i);
            cnt[i] = 1;
            t.values[i] = dk_p;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > x_max) break;
            if (i % p == 0) {
                // p = spf(i): extend the prime-power part of i
                cnt[ip] = static_cast<std::uint8_t>(cnt[i] + 1);
                pk[ip] = static_cast<std::uint32_t>(std::uint64_t(pk[i]) * p);
                const std::uint64_t core = i / pk[i];
                t.values[ip] =
                    mul_checked(t.values[core], dk_prime_power(k, cnt[ip]), "sieve_dk");
                break;
            }
            cnt[ip] = 1;
            pk[ip] = p;
            t.values[ip] = mul_checked(t.values[i], dk_p, "sieve_dk");
        }
    }
    return t;
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir, unsigned k,
                                       std::uint64_t x_max) {
    return dir / ("dk_" + std::to_string(k) + "_" + std::to_string(x_max) + ".bin");
}

namespace {
constexpr char kMagic[8] = {'Z', 'M', 'D', 'K', 'T', 'B', 'L', '1'};
}

void save_table(const DivisorTable& t, const std::filesystem::path& file) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("save_table: cannot open " + file.string());
    out.write(kMagic, sizeof kMagic);
    std::uint64_t hdr[2] = {t.k, t.x_max};
    out.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
    out.write(reinterpret_cast<const char*>(t.values.data()),
              static_cast<std::streamsize>(t.values.size() * sizeof(std::uint64_t)));
    if (!out) throw std::runtime_error("save_table: write failed for " + file.string());
}

std::optional<DivisorTable> load_table(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    std::uint64_t hdr[2];
    in.read(magic, sizeof magic);
    in.read(reinterpret_cast<char*>(hdr), sizeof hdr);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) return std::nullopt;
    DivisorTable t;
    t.k = static_cast<unsigned>(hdr[0]);
    t.x_max = hdr[1];
    t.values.resize(t.x_max + 1);
    in.read(reinterpret_cast<char*>(t.values.data()),
            static_cast<std::streamsize>(t.values.size() * sizeof(std::uint64_t)));
    if (!in || in.peek() != std::ifstream::traits_type::eof()) return std::nullopt;
    return t;
}

DivisorTable sieve_dk_cached(unsigned k, std::uint64_t x_max,
                             const std::filesystem::path& cache_dir) {
    const auto file = table_cache_path(cache_dir, k, x_max);
    if (auto t = load_table(file); t && t->k == k && t->x_max == x_max) return *std::move(t);
    DivisorTable t = sieve_dk(k, x_max);
    save_table(t, file);
    return t;
}

std::int64_t ramanujan_sum(std::uint64_t q, std::uint64_t h) {
    if (q == 0 || h == 0) fail("ramanujan_sum: q >= 1 and h >= 1 required");
    const std::uint64_t g = std::gcd(q, h);
    // enumerate divisors d of g from its factorization
    const auto fg = factorize(g);
    std::vector<std::uint64_t> divisors{1};
    for (const auto& pe : fg.factors) {
        const std::size_t sz = divisors.size();
        std::uint64_t pw = 1;
        for (unsigned e = 1; e <= pe.e; ++e) {
            pw *= pe.p;
            for (std::size_t i = 0; i < sz; ++i) divisors.push_back(divisors[i] * pw);
        }
    }
    std::int64_t s = 0;
    for (std::uint64_t d : divisors) s += static_cast<std::int64_t>(d) * mobius(q / d);
    return s;
}

std::uint64_t brute_force_Dk(unsigned k, std::uint64_t x, std::uint64_t h,
                             const DivisorTable& table) {
    if (h == 0) fail("brute_force_Dk: h >= 1 required");
    if (table.k != k) fail("brute_force_Dk: table built for different k");
    if (x + h > table.x_max)
        throw std::out_of_range("brute_force_Dk: table covers x_max=" +
                                std::to_string(table.x_max) + ", need " +
                                std::to_string(x + h));
    unsigned __int128 acc = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        acc += static_cast<unsigned __int128>(table.values[n]) * table.values[n + h];
    if (acc > ~std::uint64_t(0)) throw std::overflow_error("brute_force_Dk: sum exceeds 64 bits");
    return static_cast<std::uint64_t>(acc);
}

}  // namespace zm::arith
