#ifndef QFORMS_INT_UTILS_HPP
#define QFORMS_INT_UTILS_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

/* All exact arithmetic in this library runs on GMP integers. Coefficients
 * stay desk-scale, but transform products, Pell fundamental solutions and
 * the 2-adic digit tree overflow 64 bits easily. */
using Int = mpz_class;

inline Int abs(const Int &a) { return ::abs(a); }

inline int sign(const Int &a) { return mpz_sgn(a.get_mpz_t()); }

inline Int gcd(const Int &a, const Int &b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int gcd(const Int &a, const Int &b, const Int &c)
{
    return gcd(gcd(a, b), c);
}

inline Int lcm(const Int &a, const Int &b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/* g = ax + by */
inline Int xgcd(const Int &a, const Int &b, Int &x, Int &y)
{
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/* Representative of a mod m in [0, m), m > 0. */
inline Int mod(const Int &a, const Int &m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/* Quotient a / b when b | a exactly; throws otherwise. */
inline Int exact_div(const Int &a, const Int &b)
{
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int &d, const Int &a)
{
    return d != 0 && mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t());
}

/* floor(sqrt(a)), a >= 0 */
inline Int isqrt(const Int &a)
{
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int &a)
{
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t());
}

/* Square root when a is a perfect square. */
inline std::optional<Int> square_root(const Int &a)
{
    if (!is_square(a)) return std::nullopt;
    return isqrt(a);
}

inline Int pow_int(const Int &base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/* base^e mod m, m > 0 */
inline Int powmod(const Int &base, const Int &e, const Int &m)
{
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int from_string(const std::string &s)
{
    try {
        return Int(s);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("not an integer literal: '" + s + "'");
    }
}

inline long to_long(const Int &a)
{
    if (!a.fits_slong_p())
        throw std::overflow_error("integer does not fit in long");
    return a.get_si();
}

/* 2-adic valuation; v(0) is undefined and throws. */
inline unsigned long val2(const Int &a)
{
    if (a == 0) throw std::logic_error("val2(0)");
    return mpz_scan1(a.get_mpz_t(), 0);
}

/* q-adic valuation for q >= 2. */
inline unsigned long valuation(Int a, const Int &q)
{
    if (a == 0) throw std::logic_error("valuation(0)");
    unsigned long v = 0;
    while (divides(q, a)) {
        a = exact_div(a, q);
        ++v;
    }
    return v;
}

} // namespace qf

#endif
