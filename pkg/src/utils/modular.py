"""Integer and polynomial arithmetic over Z/p.

Polynomials are coefficient tuples, lowest degree first, with no trailing zeros
(the zero polynomial is the empty tuple). Used to certify the modulus of GF(p^m).
"""

import itertools
from collections.abc import Sequence

Poly = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (n < 2^32 in practice)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    factors = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            factors.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        factors.append(n)
    return factors


def _trim(coeffs: Sequence[int]) -> Poly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_mod(a: Poly, modulus: Poly, p: int) -> Poly:
    """Remainder of a modulo a nonzero polynomial."""
    rem = list(a)
    deg_m = len(modulus) - 1
    lead_inv = pow(modulus[-1], p - 2, p)
    while len(rem) - 1 >= deg_m and rem:
        factor = (rem[-1] * lead_inv) % p
        shift = len(rem) - 1 - deg_m
        for i, c in enumerate(modulus):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        rem = list(_trim(rem))
    return tuple(rem)


def poly_powmod(base: Poly, exponent: int, modulus: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = poly_mod(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = poly_mod(poly_mul(result, base, p), modulus, p)
        base = poly_mod(poly_mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Certify irreducibility by trial division by every monic polynomial of degree <= m/2."""
    f = _trim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    for degree in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=degree):
            divisor = tuple(low) + (1,)
            if not poly_mod(f, divisor, p):
                return False
    return True


def is_primitive(modulus: Sequence[int], p: int) -> bool:
    """True iff x generates the multiplicative group of Z_p[x]/(modulus), degree >= 2."""
    f = _trim([c % p for c in modulus])
    m = len(f) - 1
    order = p**m - 1
    x: Poly = (0, 1)
    if poly_powmod(x, order, f, p) != (1,):
        return False
    return all(poly_powmod(x, order // r, f, p) != (1,) for r in prime_factors(order))
