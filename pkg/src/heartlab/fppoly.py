"""Polynomial arithmetic and factorization over prime fields F_p.

Polynomials are tuples of coefficients in [0, p), constant term first, with
no trailing zeros (the zero polynomial is the empty tuple).  Factorization
runs distinct-degree splitting first and then Cantor-Zassenhaus equal-degree
splitting, whose randomness comes from an explicit SplitMix64 stream.
"""

from __future__ import annotations

from .rng import SplitMix64

Poly = tuple[int, ...]


def normalize(coeffs, p: int) -> Poly:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(f: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return normalize(out, p)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return normalize(out, p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return normalize(out, p)


def poly_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = degree(g)
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(0, len(f) - dg)
    while len(rem) - 1 >= dg and rem:
        c = (rem[-1] * inv_lead) % p
        shift = len(rem) - 1 - dg
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = (rem[shift + i] - c * b) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return normalize(quot, p), normalize(rem, p)


def poly_mod(f: Poly, g: Poly, p: int) -> Poly:
    return poly_divmod(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f or f[-1] == 1:
        return f
    inv = pow(f[-1], p - 2, p)
    return normalize([c * inv for c in f], p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    while g:
        f, g = g, poly_mod(f, g, p)
    return monic(f, p)


def derivative(f: Poly, p: int) -> Poly:
    return normalize([(i * c) % p for i, c in enumerate(f)][1:], p)


def pow_mod(base: Poly, exponent: int, modulus: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = poly_mod(base, modulus, p)
    while exponent:
        if exponent & 1:
            result = poly_mod(mul(result, base, p), modulus, p)
        base = poly_mod(mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


_X: Poly = (0, 1)


def distinct_degree_split(f: Poly, p: int) -> list[tuple[int, Poly]]:
    """[(k, product of degree-k irreducible factors)] for squarefree monic f."""
    f = monic(f, p)
    out = []
    h = poly_mod(_X, f, p)
    k = 0
    while degree(f) > 0 and 2 * (k + 1) <= degree(f):
        k += 1
        h = pow_mod(h, p, f, p)
        g = gcd(sub(h, _X, p), f, p)
        if degree(g) > 0:
            out.append((k, g))
            f = poly_divmod(f, g, p)[0]
            h = poly_mod(h, f, p)
    if degree(f) > 0:
        out.append((degree(f), f))
    return out


def factor_degrees(f: Poly, p: int) -> list[int]:
    """Degrees (with multiplicity) of the irreducible factors of squarefree f."""
    out = []
    for k, product in distinct_degree_split(f, p):
        out.extend([k] * (degree(product) // k))
    return sorted(out)


def _random_poly(max_degree: int, p: int, rng: SplitMix64) -> Poly:
    while True:
        coeffs = [rng.below(p) for _ in range(max_degree + 1)]
        f = normalize(coeffs, p)
        if degree(f) >= 1:
            return f


def _equal_degree_split(f: Poly, k: int, p: int, rng: SplitMix64) -> list[Poly]:
    """Cantor-Zassenhaus: split a product of distinct degree-k irreducibles."""
    if degree(f) == k:
        return [monic(f, p)]
    while True:
        r = _random_poly(degree(f) - 1, p, rng)
        if p == 2:
            # trace map r + r^2 + ... + r^(2^(k-1)) modulo f
            t: Poly = ()
            term = poly_mod(r, f, p)
            for _ in range(k):
                t = add(t, term, p)
                term = poly_mod(mul(term, term, p), f, p)
            candidate = gcd(t, f, p)
        else:
            s = pow_mod(r, (p**k - 1) // 2, f, p)
            candidate = gcd(sub(s, (1,), p), f, p)
        if 0 < degree(candidate) < degree(f):
            cofactor = poly_divmod(f, candidate, p)[0]
            return _equal_degree_split(candidate, k, p, rng) + _equal_degree_split(
                cofactor, k, p, rng
            )


def factor_squarefree(f: Poly, p: int, rng: SplitMix64) -> list[Poly]:
    out = []
    for k, product in distinct_degree_split(f, p):
        out.extend(_equal_degree_split(product, k, p, rng))
    return sorted(out)


def _pth_root(f: Poly, p: int) -> Poly:
    # f has zero derivative, so f = g(x^p); coefficients are fixed by Frobenius
    return normalize([f[i] for i in range(0, len(f), p)], p)


def factor(f: Poly, p: int, rng: SplitMix64) -> list[tuple[Poly, int]]:
    """Full monic factorization [(irreducible, multiplicity)], sorted."""
    f = monic(f, p)
    if degree(f) < 1:
        return []
    found: dict[Poly, int] = {}
    while degree(f) > 0:
        deriv = derivative(f, p)
        if not deriv:
            for g, m in factor(_pth_root(f, p), p, rng):
                found[g] = found.get(g, 0) + m * p
            break
        radical = poly_divmod(f, gcd(f, deriv, p), p)[0]
        for g in factor_squarefree(radical, p, rng):
            m = 0
            while True:
                quot, rem = poly_divmod(f, g, p)
                if rem:
                    break
                f = quot
                m += 1
            found[g] = found.get(g, 0) + m
    return sorted(found.items())
