#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homind/field.hpp>
#include <homind/modular.hpp>

#include <cmath>

using namespace homind;

TEST_CASE("primality")
{
    CHECK(is_prime((BigInt(1) << 61) - 1));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime((BigInt(1) << 127) - 1));
    CHECK_FALSE(is_prime((BigInt(1) << 128) + 1));
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const BigInt a = random_prime_bits(40, rng);
        const BigInt b = random_prime_bits(40, rng);
        CHECK(bit_length(a) == 40);
        CHECK_FALSE(is_prime(a * b));
    }
}

TEST_CASE("primality agrees with trial division below 10^5")
{
    std::vector<char> sieve(100000, 1);
    sieve[0] = sieve[1] = 0;
    for (std::size_t i = 2; i * i < sieve.size(); ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j < sieve.size(); j += i)
                sieve[j] = 0;
    std::size_t mismatches = 0;
    for (std::uint64_t i = 0; i < sieve.size(); ++i)
        mismatches += is_prime_u64(i) != (sieve[i] != 0);
    CHECK(mismatches == 0);
}

TEST_CASE("prime sampling")
{
    Rng rng(1);
    std::size_t primes = 0;
    for (int i = 0; i < 2000; ++i) {
        auto p = sample_prime_in_range(100, rng);
        if (p) {
            ++primes;
            CHECK(*p > 100);
            CHECK(*p <= 10000);
            CHECK(is_prime(*p));
        }
    }
    CHECK(primes > 0);

    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 50; ++i)
        CHECK(sample_prime_in_range(1000, a) == sample_prime_in_range(1000, b));
}

TEST_CASE("prime density at L = 1000")
{
    Rng rng(2024);
    const int draws = 10000;
    int primes = 0;
    for (int i = 0; i < draws; ++i)
        primes += sample_prime_in_range(1000, rng).has_value();
    const double q = 1.0 / (2.0 * std::log2(1000.0));
    const double sigma = std::sqrt(q * (1 - q) / draws);
    CHECK(static_cast<double>(primes) / draws >= q - 3 * sigma);
}

TEST_CASE("bounds")
{
    const Bounds tw = bound_tw(6, 2, 1);
    CHECK(tw.N == (BigInt(1) << 72));
    CHECK(tw.L == (BigInt(1) << 72) * 3);
    CHECK(tw.trials == 295);
    CHECK(bound_pw(6, 2, 1).N == 73);
    const Bounds las = bound_lasserre(2, 1);
    CHECK(las.N == 512);
    CHECK(las.L == 512);
    CHECK(las.trials == 36);
    CHECK(bound_pw(4, 2, 1).N == 33);
    CHECK_THROWS_AS(bound_tw(40, 3, 5, 4096), BoundTooLarge);
}

TEST_CASE("bounds are monotone in n, k and C")
{
    for (std::uint64_t n = 2; n <= 6; ++n)
        for (std::uint64_t k = 1; k <= 3; ++k)
            for (std::uint64_t c = 1; c <= 3; ++c) {
                CHECK(bound_tw(n + 1, k, c).N >= bound_tw(n, k, c).N);
                CHECK(bound_tw(n, k, c + 1).N >= bound_tw(n, k, c).N);
                CHECK(bound_pw(n + 1, k, c).N >= bound_pw(n, k, c).N);
                CHECK(bound_pw(n, k + 1, c).N >= bound_pw(n, k, c).N);
                CHECK(bound_pw(n, k, c + 1).N >= bound_pw(n, k, c).N);
                const Bounds b = bound_tw(n, k, c);
                // ceil(4 log2 L) is the least T with 2^T >= L^4
                const BigInt l4 = b.L * b.L * b.L * b.L;
                CHECK((BigInt(1) << b.trials) >= l4);
                CHECK((BigInt(1) << (b.trials - 1)) < l4);
            }
}

TEST_CASE("smallest primes with product exceeding B")
{
    CHECK(smallest_primes_with_product_exceeding(5) == std::vector<BigInt>{2, 3});
    CHECK(smallest_primes_with_product_exceeding(1) == std::vector<BigInt>{2});
    for (BigInt b : {BigInt(6), BigInt(29), BigInt(30), BigInt(1) << 66, BigInt(1) << 200}) {
        const auto primes = smallest_primes_with_product_exceeding(b);
        BigInt product = 1;
        for (const auto & p : primes)
            product *= p;
        CHECK(product > b);
        CHECK(product / primes.back() <= b);
    }
    CHECK(smallest_primes_with_product_exceeding(BigInt(1) << 66).size() == 17);
}

template <typename Field>
void check_field_laws(const Field & f, Rng & rng)
{
    const BigInt p = f.modulus_big();
    for (int trial = 0; trial < 200; ++trial) {
        const BigInt xa = uniform_below(p, rng);
        const BigInt xb = uniform_below(p, rng);
        const BigInt xc = uniform_below(p, rng);
        const auto a = f.from_big(xa);
        const auto b = f.from_big(xb);
        const auto c = f.from_big(xc);
        CHECK(f.to_big(f.add(a, b)) == (xa + xb) % p);
        CHECK(f.to_big(f.mul(a, b)) == (xa * xb) % p);
        CHECK(f.to_big(f.sub(a, b)) == (xa + p - xb) % p);
        CHECK(f.to_big(f.mul(a, f.add(b, c))) == f.to_big(f.add(f.mul(a, b), f.mul(a, c))));
        CHECK(f.is_zero(f.add(a, f.neg(a))));
        if (!f.is_zero(a))
            CHECK(f.to_big(f.mul(a, f.inv(a))) == 1);
    }
}

TEST_CASE("field laws")
{
    Rng rng(99);
    check_field_laws(Field64(2), rng);
    check_field_laws(Field64(97), rng);
    check_field_laws(Field64((std::uint64_t{1} << 61) - 1), rng);
    check_field_laws(Field64(18446744073709551557ULL), rng);
    check_field_laws(MontField<2>(random_prime_bits(128, rng)), rng);
    check_field_laws(MontField<2>(random_prime_bits(70, rng)), rng);
    check_field_laws(MontField<4>(random_prime_bits(256, rng)), rng);
    check_field_laws(MontField<6>(random_prime_bits(300, rng)), rng);
    check_field_laws(BigField(random_prime_bits(2100, rng)), rng);
}
