#include <homind/modular.hpp>

#include <array>

namespace homind {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint32_t, 25> small_primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m); }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s)
{
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool strong_probable_prime(const BigInt & n, const BigInt & a, const BigInt & d, std::size_t s)
{
    BigInt x = boost::multiprecision::powm(a, d, n);
    const BigInt n1 = n - 1;
    if (x == 1 || x == n1)
        return true;
    for (std::size_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n1)
            return true;
    }
    return false;
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty integer");
    BigInt value = 0;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        for (char c : text.substr(2)) {
            int digit;
            if (c >= '0' && c <= '9')
                digit = c - '0';
            else if (c >= 'a' && c <= 'f')
                digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                digit = c - 'A' + 10;
            else
                throw std::invalid_argument("bad hex digit in '" + std::string(text) + "'");
            value = value * 16 + digit;
        }
        return value;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad decimal digit in '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t q : small_primes) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!strong_probable_prime(n, a, d, s))
            return false;
    return true;
}

bool is_prime(const BigInt & n)
{
    if (n < 2)
        return false;
    if (bit_length(n) <= 64)
        return is_prime_u64(static_cast<std::uint64_t>(n));
    for (std::uint32_t q : small_primes)
        if (n % q == 0)
            return false;
    BigInt d = n - 1;
    std::size_t s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witnesses come from a stream keyed by n so the answer is reproducible.
    Rng rng(static_cast<std::uint64_t>(n & std::numeric_limits<std::uint64_t>::max()) ^ 0x6d696c6c657272ULL);
    const BigInt span = n - 3;
    for (int round = 0; round < 64; ++round) {
        const BigInt a = uniform_below(span, rng) + 2;
        if (!strong_probable_prime(n, a, d, s))
            return false;
    }
    return true;
}

BigInt uniform_below(const BigInt & bound, Rng & rng)
{
    if (bound <= 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    const std::size_t bits = bit_length(bound - 1);
    if (bits == 0)
        return 0;
    while (true) {
        BigInt x = 0;
        std::size_t have = 0;
        while (have < bits) {
            x = (x << 64) | BigInt(rng.next());
            have += 64;
        }
        x >>= (have - bits);
        if (x < bound)
            return x;
    }
}

std::optional<BigInt> sample_prime_in_range(const BigInt & L, Rng & rng)
{
    if (L < 2)
        throw std::invalid_argument("sample_prime_in_range: L must be at least 2");
    const BigInt candidate = L + 1 + uniform_below(L * L - L, rng);
    if (is_prime(candidate))
        return candidate;
    return std::nullopt;
}

BigInt random_prime_bits(int bits, Rng & rng)
{
    if (bits < 2)
        throw std::invalid_argument("random_prime_bits: need at least 2 bits");
    const BigInt low = BigInt(1) << (bits - 1);
    while (true) {
        const BigInt candidate = low + uniform_below(low, rng);
        if (is_prime(candidate))
            return candidate;
    }
}

Bounds bounds_from_class_size(BigInt N, std::uint64_t n)
{
    Bounds b;
    const std::size_t log_n = std::max<std::size_t>(1, ceil_log2(BigInt(n)));
    b.L = N * log_n;
    b.N = std::move(N);
    const BigInt L4 = b.L * b.L * b.L * b.L;
    b.trials = ceil_log2(L4);
    return b;
}

namespace {

void check_bits(std::size_t bits, std::size_t cap, const char * which)
{
    if (bits > cap)
        throw BoundTooLarge(std::string(which) + ": class-size bound needs about " + std::to_string(bits) + " bits, above the cap of " + std::to_string(cap) +
                            " (use --prime-bits for the heuristic mode)");
}

BigInt checked_pow(std::uint64_t base, const BigInt & exponent, std::size_t cap, const char * which)
{
    if (base <= 1)
        return base;
    const std::size_t base_bits = bit_length(BigInt(base));
    // (bits of base - 1) * exponent bounds the result's bit length from below.
    if (bit_length(exponent) + bit_length(BigInt(base_bits)) > 62)
        check_bits(std::numeric_limits<std::size_t>::max(), cap, which);
    const auto e = static_cast<unsigned long long>(exponent);
    check_bits(static_cast<std::size_t>((base_bits - 1) * e), cap, which);
    BigInt result = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
    check_bits(bit_length(result), cap, which);
    return result;
}

void require_positive(std::initializer_list<std::uint64_t> values, const char * which)
{
    for (auto v : values)
        if (v < 1)
            throw std::invalid_argument(std::string(which) + ": arguments must be at least 1");
}

} // namespace

Bounds bound_tw(std::uint64_t n, std::uint64_t k, std::uint64_t C, std::size_t bits_cap)
{
    require_positive({n, k, C}, "bound_tw");
    const BigInt m = 2 * BigInt(C) * checked_pow(n, BigInt(k), bits_cap, "bound_tw");
    BigInt N = checked_pow(k, m, bits_cap, "bound_tw");
    if (m > N)
        N = m;
    check_bits(bit_length(N), bits_cap, "bound_tw");
    return bounds_from_class_size(std::move(N), n);
}

Bounds bound_pw(std::uint64_t n, std::uint64_t k, std::uint64_t C, std::size_t bits_cap)
{
    require_positive({n, k, C}, "bound_pw");
    BigInt N = 2 * BigInt(C) * checked_pow(n, BigInt(k), bits_cap, "bound_pw") + k - 1;
    check_bits(bit_length(N), bits_cap, "bound_pw");
    return bounds_from_class_size(std::move(N), n);
}

Bounds bound_lasserre(std::uint64_t n, std::uint64_t t, std::size_t bits_cap)
{
    require_positive({n, t}, "bound_lasserre");
    const BigInt e = checked_pow(n, BigInt(2 * t), bits_cap, "bound_lasserre");
    BigInt N = 2 * BigInt(t) * checked_pow(4, e, bits_cap, "bound_lasserre");
    check_bits(bit_length(N), bits_cap, "bound_lasserre");
    return bounds_from_class_size(std::move(N), n);
}

std::vector<BigInt> smallest_primes_with_product_exceeding(const BigInt & B)
{
    std::vector<BigInt> out;
    BigInt product = 1;
    std::uint64_t candidate = 2;
    while (product <= B || out.empty()) {
        if (is_prime_u64(candidate)) {
            out.emplace_back(candidate);
            product *= candidate;
        }
        ++candidate;
    }
    return out;
}

} // namespace homind
