#ifndef QFORMS_ARITH_HPP
#define QFORMS_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qforms/int_utils.hpp"

namespace qf {

/* A discriminant delta = delta0 * f^2 with delta0 fundamental and f > 0
 * the conductor. delta is never a perfect square. */
struct Discriminant {
    Int delta;
    Int delta0;
    Int f;
};

/* Kronecker symbol (a/n), defined for all integers with the standard
 * extension: (a/2) depends on a mod 8, (a/-1) on the sign of a,
 * (a/0) = [|a| = 1]. Agrees with the Legendre symbol for odd prime n. */
int kronecker(const Int &a, const Int &n);

/* Rational quartic residue character of 2: for a prime p = 1 mod 8,
 * returns +1 iff 2 is a fourth power mod p, computed as 2^((p-1)/4) mod p.
 * Rejects p not prime or p != 1 mod 8. */
int quartic_symbol_2(const Int &p);

/* Trial-division primality test; exact for any size, intended for
 * desk-scale operands. */
bool is_prime(const Int &n);

/* Trial-division factorization of n >= 1, primes in increasing order. */
std::vector<std::pair<Int, unsigned>> factor(const Int &n);

/* True iff delta is the discriminant of a quadratic field:
 * squarefree = 1 mod 4, or 4n with n squarefree, n = 2 or 3 mod 4. */
bool is_fundamental_discriminant(const Int &delta);

/* Decompose delta = delta0 * f^2. Rejects delta = 2, 3 mod 4 and
 * perfect squares. */
Discriminant fundamental_decomposition(const Int &delta);

/* Primes <= limit, increasing. */
std::vector<long> primes_up_to(long limit);

} // namespace qf

#endif
