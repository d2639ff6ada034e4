#include "qforms/arith.hpp"

#include <stdexcept>

namespace qf {

int kronecker(const Int &a, const Int &n)
{
    /* GMP implements the same standard extension; the symbol is ubiquitous
     * here, so lean on the battle-tested routine. An independent schoolbook
     * implementation cross-checks it in the test suite. */
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int quartic_symbol_2(const Int &p)
{
    if (mod(p, 8) != 1)
        throw std::invalid_argument("quartic_symbol_2: p must be 1 mod 8");
    if (!is_prime(p))
        throw std::invalid_argument("quartic_symbol_2: p must be prime");

    Int e = (p - 1) / 4;
    Int r = powmod(2, e, p);
    if (r == 1) return +1;
    if (r == p - 1) return -1;
    /* impossible for p = 1 mod 8: 2 is a quadratic residue there */
    throw std::logic_error("quartic_symbol_2: 2 is not a QR mod p");
}

bool is_prime(const Int &n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (mod(n, 2) == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (divides(d, n)) return false;
    return true;
}

std::vector<std::pair<Int, unsigned>> factor(const Int &n)
{
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    auto strip = [&](const Int &p) {
        unsigned e = 0;
        while (divides(p, m)) {
            m = exact_div(m, p);
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= m; p += 2) strip(p);
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

bool is_fundamental_discriminant(const Int &delta)
{
    if (delta == 0 || delta == 1) return false;
    Int r = mod(delta, 4);
    if (r == 1) {
        Int d = abs(delta);
        for (auto &[p, e] : factor(d))
            if (e > 1) return false;
        return true;
    }
    if (r == 0) {
        Int n = delta / 4;
        Int rn = mod(n, 4);
        if (rn != 2 && rn != 3) return false;
        for (auto &[p, e] : factor(abs(n)))
            if (e > 1) return false;
        return true;
    }
    return false;
}

Discriminant fundamental_decomposition(const Int &delta)
{
    Int r = mod(delta, 4);
    if (r != 0 && r != 1)
        throw std::invalid_argument("fundamental_decomposition: delta must be 0 or 1 mod 4");
    if (is_square(delta))
        throw std::invalid_argument("fundamental_decomposition: delta is a perfect square");

    /* Squarefree kernel s (carrying the sign), then attach the factor 4
     * when s alone is not a discriminant. */
    Int s = sign(delta);
    Int f = 1;
    for (auto &[p, e] : factor(abs(delta))) {
        if (e % 2) s *= p;
        f *= pow_int(p, e / 2);
    }
    Int delta0, cond;
    if (mod(s, 4) == 1) {
        delta0 = s;
        cond = f;
    } else {
        delta0 = 4 * s;
        if (mod(f, 2) != 0)
            throw std::logic_error("fundamental_decomposition: inconsistent parity");
        cond = f / 2;
    }
    if (delta0 * cond * cond != delta)
        throw std::logic_error("fundamental_decomposition: reconstruction failed");
    return Discriminant{delta, delta0, cond};
}

std::vector<long> primes_up_to(long limit)
{
    std::vector<long> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= limit; ++i)
        if (sieve[static_cast<size_t>(i)])
            for (long j = i * i; j <= limit; j += i)
                sieve[static_cast<size_t>(j)] = false;
    for (long i = 2; i <= limit; ++i)
        if (sieve[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

} // namespace qf
