"""Exact modular arithmetic: inverses, prime square roots, primality, factoring.

Everything here works on plain Python integers, so nothing ever wraps or
loses precision. All functions are deterministic: repeated calls with the
same arguments take the same path and return the same result.
"""

from __future__ import annotations

import math

from .errors import (
    CompositeModulusError,
    InvalidModulusError,
    NonInvertibleError,
    NHTError,
)

# Miller-Rabin with these twelve witnesses is a proven primality test for
# every n below this bound (far beyond any modulus this package produces).
# Larger inputs reuse the same fixed witnesses, which is deterministic in
# behavior but heuristic in proof.
DETERMINISTIC_PRIMALITY_BOUND = 3_317_044_064_679_887_385_961_981

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_DIVISION_LIMIT = 1_000_000


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test.

    Exact for all n below DETERMINISTIC_PRIMALITY_BOUND (about 3.3e24);
    see the module notes for larger inputs.
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_inverse(a: int, q: int) -> int:
    """Inverse of a modulo q, in [0, q). Raises when gcd(a, q) != 1."""
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    try:
        return pow(a, -1, q)
    except ValueError:
        raise NonInvertibleError(f"{a} is not invertible mod {q}") from None


def sqrt_mod_prime(a: int, q: int) -> tuple[int, int] | None:
    """Both square roots of a modulo a prime q, or None for a non-residue.

    Returns (x, q - x) ordered smaller first. a = 0 yields (0, 0).
    Uses Tonelli-Shanks, with the direct exponent shortcut when
    q % 4 == 3.
    """
    if q < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {q}")
    if not is_prime(q):
        raise CompositeModulusError(f"square roots require a prime modulus, got {q}")
    a %= q
    if a == 0:
        return (0, 0)
    if q == 2:
        return (1, 1)
    if pow(a, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        x = pow(a, (q + 1) // 4, q)
    else:
        # Tonelli-Shanks: write q - 1 = d * 2^s with d odd.
        d = q - 1
        s = 0
        while d % 2 == 0:
            d //= 2
            s += 1
        z = 2
        while pow(z, (q - 1) // 2, q) != q - 1:
            z += 1
        c = pow(z, d, q)
        x = pow(a, (d + 1) // 2, q)
        t = pow(a, d, q)
        m = s
        while t != 1:
            i = 0
            t2 = t
            while t2 != 1:
                t2 = t2 * t2 % q
                i += 1
            b = pow(c, 1 << (m - i - 1), q)
            x = x * b % q
            t = t * b * b % q
            c = b * b % q
            m = i
    return (x, q - x) if x <= q - x else (q - x, x)


def _brent_rho(n: int) -> int:
    # Brent's cycle variant of Pollard rho with fixed parameters, so the
    # factor found for a given n never varies between runs.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise NHTError(f"failed to factor {n}")


def factorize(x: int) -> dict[int, int]:
    """Exact prime factorization of x >= 1 as {prime: multiplicity}.

    x = 1 gives an empty map; x = 0 is undefined and raises. Trial
    division handles factors up to 10^6, Pollard rho the rest, so any
    value the search paths produce factors in well under a second.
    """
    if x < 1:
        raise NHTError(f"factorization is undefined for {x}")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while x % p == 0:
            factors[p] = factors.get(p, 0) + 1
            x //= p
    d = 7
    while d <= _TRIAL_DIVISION_LIMIT and d * d <= x:
        while x % d == 0:
            factors[d] = factors.get(d, 0) + 1
            x //= d
        d += 2
    stack = [x] if x > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _brent_rho(m)
        stack.append(g)
        stack.append(m // g)
    return dict(sorted(factors.items()))


def largest_prime_factor(x: int) -> int:
    """Largest prime dividing x, for x >= 2."""
    if x < 2:
        raise NHTError(f"no prime factor for {x}")
    return max(factorize(x))
