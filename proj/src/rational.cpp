#include "exactsdp/rational.hpp"

#include <stdexcept>

#include "exactsdp/errors.hpp"

namespace exactsdp {

Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r;
    r.get_num() = std::move(num);
    r.get_den() = std::move(den);
    r.canonicalize();
    return r;
}

namespace {

// ceil(log2 v + 1) for v >= 1; the zero convention maps v = 0 to 1 as well.
BitSize int_term(const Integer& v) {
    if (sgn(v) == 0) return 1;
    const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    const bool power_of_two = mpz_popcount(v.get_mpz_t()) == 1;
    return power_of_two ? static_cast<BitSize>(bits) : static_cast<BitSize>(bits) + 1;
}

}  // namespace

BitSize bit_size(const Rational& x) {
    return 1 + int_term(abs(x.get_num())) + int_term(x.get_den());
}

BitSize bit_size(std::span<const Rational> v) {
    BitSize total = static_cast<BitSize>(v.size());
    for (const Rational& x : v) total += bit_size(x);
    return total;
}

Integer isqrt_floor(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt_floor of a negative number");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

Integer isqrt_ceil(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt_ceil of a negative number");
    if (sgn(n) == 0) return 0;
    return isqrt_floor(n - 1) + 1;
}

namespace {

// sign of x - 2^k, exact
int cmp_pow2(const Rational& x, long k) {
    Integer lhs = x.get_num();
    Integer rhs = x.get_den();
    if (k >= 0) {
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return cmp(lhs, rhs);
}

Rational pow2(long k) {
    Rational r;
    if (k >= 0) {
        mpz_ui_pow_ui(r.get_num().get_mpz_t(), 2, static_cast<unsigned long>(k));
        r.get_den() = 1;
    } else {
        r.get_num() = 1;
        mpz_ui_pow_ui(r.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-k));
    }
    return r;
}

}  // namespace

long ceil_log2(const Rational& x) {
    if (sgn(x) <= 0) throw std::invalid_argument("ceil_log2 of a nonpositive number");
    const long num_bits = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    long k = num_bits - den_bits + 1;  // x < 2^k here
    while (cmp_pow2(x, k - 1) <= 0) --k;
    return k;
}

Rational pow2_floor(const Rational& x) {
    const long k = ceil_log2(x);
    return cmp_pow2(x, k) == 0 ? pow2(k) : pow2(k - 1);
}

namespace {

// Shared core: floor(sqrt(N * 4^k)) with 2^k >= 2 * ceil(1/relerr), which
// makes both m/(2^k b) and (m+1)/(2^k b) fall within relative error relerr
// of sqrt(N)/b.
struct SqrtBracket {
    Integer m;
    Integer scaled_den;  // b * 2^k
    bool exact;          // N was a perfect square; m is the exact root
};

SqrtBracket sqrt_bracket(const Rational& s, const Rational& relerr) {
    if (sgn(s) < 0) throw std::invalid_argument("square root of a negative number");
    if (sgn(relerr) <= 0 || relerr > 1) throw std::invalid_argument("relative error must lie in (0, 1]");
    Integer scaled = s.get_num() * s.get_den();
    if (mpz_perfect_square_p(scaled.get_mpz_t())) {
        return {isqrt_floor(scaled), s.get_den(), true};
    }
    Integer inv_err;
    mpz_cdiv_q(inv_err.get_mpz_t(), relerr.get_den().get_mpz_t(), relerr.get_num().get_mpz_t());
    const mp_bitcnt_t k = mpz_sizeinbase(inv_err.get_mpz_t(), 2) + 1;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
    Integer den = s.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return {isqrt_floor(scaled), std::move(den), false};
}

}  // namespace

Rational sqrt_upper(const Rational& s, const Rational& relerr) {
    if (sgn(s) == 0) return Rational(0);
    SqrtBracket b = sqrt_bracket(s, relerr);
    return make_rational(b.exact ? b.m : b.m + 1, b.scaled_den);
}

Rational sqrt_lower(const Rational& s, const Rational& relerr) {
    if (sgn(s) == 0) return Rational(0);
    SqrtBracket b = sqrt_bracket(s, relerr);
    return make_rational(std::move(b.m), b.scaled_den);
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    const auto bad = [&](const char* why) {
        throw ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t num_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_start) bad("expected an integer numerator");
    std::string num(text.substr(0, pos));
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') bad("only integers and 'p/q' fractions are accepted");
        ++pos;
        const std::size_t den_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_start || pos != text.size()) bad("malformed denominator");
        den = std::string(text.substr(den_start));
    }
    Integer d(den);
    if (sgn(d) == 0) bad("zero denominator");
    return make_rational(Integer(num), std::move(d));
}

}  // namespace exactsdp
