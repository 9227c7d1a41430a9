#include "exactsdp/diophantine.hpp"

#include <stdexcept>
#include <utility>

#include "exactsdp/errors.hpp"

namespace exactsdp {

Rational DioApprox::value() const { return make_rational(p, q); }

namespace {

void check_eps(const Rational& eps) {
    if (sgn(eps) <= 0 || eps > 1)
        throw std::invalid_argument("approximation tolerance must lie in (0, 1]");
}

// q <= 1/eps, exactly
bool within_cap(const Integer& q, const Rational& eps) {
    return q * eps.get_num() <= eps.get_den();
}

}  // namespace

DioApprox approx_scalar(const Rational& alpha, const Rational& eps) {
    check_eps(eps);
    const bool negative = sgn(alpha) < 0;
    const Rational mag = abs(alpha);

    // Continued-fraction expansion of |alpha|; keep the last convergent h/k
    // whose denominator respects the cap.  The first convergent always does
    // since k = 1 <= 1/eps.
    Integer u = mag.get_num(), v = mag.get_den();
    Integer h_prev = 1, h_prev2 = 0;  // h_{-1}, h_{-2}
    Integer k_prev = 0, k_prev2 = 1;  // k_{-1}, k_{-2}
    Integer best_p, best_q;
    bool have = false;
    while (sgn(v) != 0) {
        Integer a = u / v;  // u, v >= 0, so truncation is the floor
        Integer h = a * h_prev + h_prev2;
        Integer k = a * k_prev + k_prev2;
        Integer r = u - a * v;
        if (!within_cap(k, eps)) break;
        best_p = h;
        best_q = k;
        have = true;
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);
        u = std::move(v);
        v = std::move(r);
    }
    if (!have) throw InvariantError("continued fraction produced no admissible convergent");

    // Exact re-verification of the three guarantees.
    const Rational err = abs(mag * best_q - best_p);  // |alpha - p/q| * q
    if (!(err < eps))
        throw InvariantError("rational approximation violated its error bound");
    if (!within_cap(best_q, eps) || sgn(best_q) <= 0)
        throw InvariantError("rational approximation violated its denominator cap");
    Integer mag_ceil;
    mpz_cdiv_q(mag_ceil.get_mpz_t(), mag.get_num().get_mpz_t(), mag.get_den().get_mpz_t());
    if (best_p > mag_ceil * best_q)
        throw InvariantError("rational approximation violated its numerator cap");

    if (negative) best_p = -best_p;
    return {std::move(best_p), std::move(best_q)};
}

std::vector<Rational> approx_vector(std::span<const Rational> alpha, const Rational& eps) {
    check_eps(eps);
    if (alpha.empty()) throw std::invalid_argument("approx_vector: empty input");
    const std::size_t n = alpha.size();
    const Rational per_component = eps / static_cast<unsigned long>(n);

    std::vector<Rational> out;
    out.reserve(n);
    Integer sup_ceil = 1;  // ceil(max |alpha_i|), clamped to >= 1
    for (const Rational& a : alpha) {
        out.push_back(approx_scalar(a, per_component).value());
        const Integer num_abs = abs(a.get_num());
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), num_abs.get_mpz_t(), a.get_den().get_mpz_t());
        if (c > sup_ceil) sup_ceil = std::move(c);
    }

    // Squared Euclidean error bound, exact.
    Rational err_sq;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational d = alpha[i] - out[i];
        err_sq += d * d;
    }
    if (!(err_sq < eps * eps))
        throw InvariantError("vector rounding violated its Euclidean error bound");

    // Encoding-length bound, exact.
    const Rational ratio =
        Rational(static_cast<unsigned long>(n * n)) * Rational(sup_ceil) / (eps * eps);
    const BitSize per_entry = 6 + static_cast<BitSize>(ceil_log2(ratio));
    if (bit_size(std::span<const Rational>(out)) > static_cast<BitSize>(n) * per_entry)
        throw InvariantError("vector rounding violated its encoding-length bound");

    return out;
}

}  // namespace exactsdp
