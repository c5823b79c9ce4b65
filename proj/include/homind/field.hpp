#pragma once

// Prime-field arithmetic. Field64 covers p < 2^64 (including p = 2);
// MontField<L> uses L-limb Montgomery multiplication for odd p >= 2^64;
// BigField is the cpp_int fallback for primes wider than the largest limb count.

#include <homind/bigint.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace homind {

class Field64 {
public:
    using Elem = std::uint64_t;

    explicit Field64(std::uint64_t p) :
        p_(p), small_(p < (std::uint64_t{1} << 32))
    {
        if (p < 2)
            throw std::invalid_argument("Field64: modulus must be at least 2");
    }

    std::uint64_t modulus() const { return p_; }
    BigInt modulus_big() const { return BigInt(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_u64(std::uint64_t x) const { return x % p_; }
    Elem from_big(const BigInt & x) const { return static_cast<std::uint64_t>(x % p_); }
    BigInt to_big(Elem a) const { return BigInt(a); }
    std::string to_string(Elem a) const { return std::to_string(a); }

    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const
    {
        const Elem s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
    }

    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem mul(Elem a, Elem b) const
    {
        if (small_)
            return a * b % p_;
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
    }

    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem r = one();
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Inverse of a nonzero element (Fermat).
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("Field64: inverse of zero");
        return pow(a, p_ - 2);
    }

private:
    std::uint64_t p_;
    bool small_;
};

template <int Limbs>
class MontField {
public:
    using Elem = std::array<std::uint64_t, Limbs>;

    explicit MontField(const BigInt & p) :
        p_big_(p)
    {
        if (p < 3 || (p & 1) == 0)
            throw std::invalid_argument("MontField: modulus must be odd");
        if (bit_length(p) > 64 * Limbs)
            throw std::invalid_argument("MontField: modulus too wide for the limb count");
        p_ = to_limbs(p);
        // -p^{-1} mod 2^64 by Newton iteration.
        std::uint64_t inv = 1;
        for (int i = 0; i < 7; ++i)
            inv *= 2 - p_[0] * inv;
        pinv_ = ~inv + 1;
        const BigInt R = BigInt(1) << (64 * Limbs);
        one_ = to_limbs(R % p);
        r2_ = to_limbs(R * R % p);
        exponent_ = p - 2;
    }

    BigInt modulus_big() const { return p_big_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return one_; }

    Elem from_u64(std::uint64_t x) const
    {
        Elem a{};
        a[0] = x;
        if (Limbs == 1 && x >= p_[0])
            a[0] = x % p_[0];
        return mul(a, r2_);
    }

    Elem from_big(const BigInt & x) const { return mul(to_limbs(x % p_big_), r2_); }

    BigInt to_big(Elem a) const
    {
        Elem unit{};
        unit[0] = 1;
        const Elem plain = mul(a, unit);
        BigInt out = 0;
        for (int i = Limbs - 1; i >= 0; --i)
            out = (out << 64) | BigInt(plain[i]);
        return out;
    }

    std::string to_string(Elem a) const { return to_big(a).str(); }

    bool is_zero(const Elem & a) const
    {
        for (auto w : a)
            if (w)
                return false;
        return true;
    }

    Elem add(const Elem & a, const Elem & b) const
    {
        Elem r;
        unsigned __int128 carry = 0;
        for (int i = 0; i < Limbs; ++i) {
            carry += static_cast<unsigned __int128>(a[i]) + b[i];
            r[i] = static_cast<std::uint64_t>(carry);
            carry >>= 64;
        }
        if (carry || !less_than_p(r))
            subtract_p(r);
        return r;
    }

    Elem sub(const Elem & a, const Elem & b) const
    {
        Elem r;
        std::uint64_t borrow = 0;
        for (int i = 0; i < Limbs; ++i) {
            const std::uint64_t d = a[i] - b[i];
            const std::uint64_t b1 = a[i] < b[i];
            r[i] = d - borrow;
            borrow = b1 | (d < borrow);
        }
        if (borrow) {
            unsigned __int128 carry = 0;
            for (int i = 0; i < Limbs; ++i) {
                carry += static_cast<unsigned __int128>(r[i]) + p_[i];
                r[i] = static_cast<std::uint64_t>(carry);
                carry >>= 64;
            }
        }
        return r;
    }

    Elem neg(const Elem & a) const { return sub(zero(), a); }

    /// Montgomery product a * b * R^{-1} (CIOS).
    Elem mul(const Elem & a, const Elem & b) const
    {
        std::array<std::uint64_t, Limbs + 2> t{};
        for (int i = 0; i < Limbs; ++i) {
            unsigned __int128 c = 0;
            for (int j = 0; j < Limbs; ++j) {
                c += static_cast<unsigned __int128>(a[j]) * b[i] + t[j];
                t[j] = static_cast<std::uint64_t>(c);
                c >>= 64;
            }
            c += t[Limbs];
            t[Limbs] = static_cast<std::uint64_t>(c);
            t[Limbs + 1] = static_cast<std::uint64_t>(c >> 64);

            const std::uint64_t m = t[0] * pinv_;
            c = static_cast<unsigned __int128>(m) * p_[0] + t[0];
            c >>= 64;
            for (int j = 1; j < Limbs; ++j) {
                c += static_cast<unsigned __int128>(m) * p_[j] + t[j];
                t[j - 1] = static_cast<std::uint64_t>(c);
                c >>= 64;
            }
            c += t[Limbs];
            t[Limbs - 1] = static_cast<std::uint64_t>(c);
            t[Limbs] = t[Limbs + 1] + static_cast<std::uint64_t>(c >> 64);
        }
        Elem r;
        for (int i = 0; i < Limbs; ++i)
            r[i] = t[i];
        if (t[Limbs] || !less_than_p(r))
            subtract_p(r);
        return r;
    }

    Elem inv(const Elem & a) const
    {
        if (is_zero(a))
            throw std::domain_error("MontField: inverse of zero");
        Elem r = one_;
        Elem base = a;
        const std::size_t bits = bit_length(exponent_);
        for (std::size_t i = 0; i < bits; ++i) {
            if (boost::multiprecision::bit_test(exponent_, static_cast<unsigned>(i)))
                r = mul(r, base);
            base = mul(base, base);
        }
        return r;
    }

private:
    static Elem to_limbs(BigInt x)
    {
        Elem out{};
        for (int i = 0; i < Limbs; ++i) {
            out[i] = static_cast<std::uint64_t>(x & std::numeric_limits<std::uint64_t>::max());
            x >>= 64;
        }
        return out;
    }

    bool less_than_p(const Elem & r) const
    {
        for (int i = Limbs - 1; i >= 0; --i) {
            if (r[i] != p_[i])
                return r[i] < p_[i];
        }
        return false;
    }

    void subtract_p(Elem & r) const
    {
        std::uint64_t borrow = 0;
        for (int i = 0; i < Limbs; ++i) {
            const std::uint64_t d = r[i] - p_[i];
            const std::uint64_t b1 = r[i] < p_[i];
            r[i] = d - borrow;
            borrow = b1 | (d < borrow);
        }
    }

    BigInt p_big_;
    Elem p_{};
    std::uint64_t pinv_ = 0;
    Elem one_{};
    Elem r2_{};
    BigInt exponent_;
};

class BigField {
public:
    using Elem = BigInt;

    explicit BigField(BigInt p) :
        p_(std::move(p))
    {
        if (p_ < 2)
            throw std::invalid_argument("BigField: modulus must be at least 2");
    }

    BigInt modulus_big() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_u64(std::uint64_t x) const { return BigInt(x) % p_; }
    Elem from_big(const BigInt & x) const { return x % p_; }
    BigInt to_big(const Elem & a) const { return a; }
    std::string to_string(const Elem & a) const { return a.str(); }
    bool is_zero(const Elem & a) const { return a == 0; }
    Elem add(const Elem & a, const Elem & b) const
    {
        Elem s = a + b;
        if (s >= p_)
            s -= p_;
        return s;
    }
    Elem sub(const Elem & a, const Elem & b) const { return a >= b ? Elem(a - b) : Elem(a + p_ - b); }
    Elem neg(const Elem & a) const { return a == 0 ? Elem(0) : Elem(p_ - a); }
    Elem mul(const Elem & a, const Elem & b) const { return a * b % p_; }
    Elem inv(const Elem & a) const
    {
        if (a == 0)
            throw std::domain_error("BigField: inverse of zero");
        return boost::multiprecision::powm(a, p_ - 2, p_);
    }

private:
    BigInt p_;
};

/// Calls fn(field) with the narrowest field type able to hold p.
template <typename Fn>
decltype(auto) with_field(const BigInt & p, Fn && fn)
{
    const std::size_t bits = bit_length(p);
    if (bits <= 64)
        return fn(Field64(static_cast<std::uint64_t>(p)));
    if ((p & 1) == 0)
        throw std::invalid_argument("with_field: even modulus above 2^64");
    if (bits <= 128)
        return fn(MontField<2>(p));
    if (bits <= 192)
        return fn(MontField<3>(p));
    if (bits <= 256)
        return fn(MontField<4>(p));
    if (bits <= 384)
        return fn(MontField<6>(p));
    if (bits <= 512)
        return fn(MontField<8>(p));
    if (bits <= 1024)
        return fn(MontField<16>(p));
    if (bits <= 2048)
        return fn(MontField<32>(p));
    return fn(BigField(p));
}

} // namespace homind
