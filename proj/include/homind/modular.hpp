#pragma once

#include <homind/bigint.hpp>
#include <homind/rng.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homind {

/// A bound whose bit length exceeds the configured cap.
class BoundTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_bound_bits_cap = std::size_t{1} << 20;

/// Class-size bound N, prime-range parameter L = N * ceil(log2 n) and the
/// randomized trial count ceil(4 log2 L).
struct Bounds {
    BigInt N;
    BigInt L;
    std::size_t trials = 0;
};

/// Exact below 2^64 (deterministic witnesses), 64 random Miller-Rabin rounds above.
bool is_prime(const BigInt & p);
bool is_prime_u64(std::uint64_t p);

/// Uniform draw from [0, bound), bound > 0.
BigInt uniform_below(const BigInt & bound, Rng & rng);

/// One draw from (L, L^2]; the value if prime, nullopt on a composite draw.
std::optional<BigInt> sample_prime_in_range(const BigInt & L, Rng & rng);

/// Uniform random prime with exactly `bits` bits (bits >= 2).
BigInt random_prime_bits(int bits, Rng & rng);

/// Completes N into Bounds for input order n.
Bounds bounds_from_class_size(BigInt N, std::uint64_t n);

/// N = max{k^(2Cn^k), 2Cn^k}
Bounds bound_tw(std::uint64_t n, std::uint64_t k, std::uint64_t C, std::size_t bits_cap = default_bound_bits_cap);
/// N = 2Cn^k + k - 1
Bounds bound_pw(std::uint64_t n, std::uint64_t k, std::uint64_t C, std::size_t bits_cap = default_bound_bits_cap);
/// N = 2t * 4^(n^(2t))
Bounds bound_lasserre(std::uint64_t n, std::uint64_t t, std::size_t bits_cap = default_bound_bits_cap);

/// 2, 3, 5, ... until the running product exceeds B.
std::vector<BigInt> smallest_primes_with_product_exceeding(const BigInt & B);

} // namespace homind
