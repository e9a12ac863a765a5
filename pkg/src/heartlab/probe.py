"""Frobenius cycle-type probing of integer polynomials.

Reducing a squarefree integer polynomial modulo an unramified prime p and
reading off the degrees of its irreducible factors samples the cycle type of
a Frobenius element of the Galois group acting on the roots.  Observed types
lying outside a candidate group's exact cycle-type set disprove containment;
agreement is evidence, never proof, and the auditor never consumes it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fppoly
from .fields import is_prime
from .perms import CycleType, cycle_type
from .zoo import GroupId, build_group


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients constant term first, degree >= 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise ValueError("polynomial must have degree at least 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __str__(self) -> str:
        return format_poly(self)


_TOKEN_CHARS = set("0123456789xX+-*^() \t")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch not in _TOKEN_CHARS:
            raise PolyParseError(f"unexpected character {ch!r}", i)
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "xX":
            tokens.append(("x", None, i))
            i += 1
        else:
            tokens.append((ch, None, i))
            i += 1
    return tokens


def parse_poly(text: str) -> IntPolynomial:
    """Parse signed integer-coefficient polynomials in x.

    Grammar: terms joined by + and -, each term an integer, x, x^k, or a
    coefficient times a power of x ('*' optional: "2x^2" == "2*x^2");
    parentheses are allowed only around the whole expression.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    if tokens[0][0] == "(":
        if tokens[-1][0] != ")":
            raise PolyParseError("unbalanced parenthesis", tokens[0][2])
        inner = tokens[1:-1]
        if any(t[0] in "()" for t in inner):
            raise PolyParseError("parentheses are only allowed around the whole expression",
                                 tokens[0][2])
        tokens = inner
        if not tokens:
            raise PolyParseError("empty parentheses", 0)
    if any(t[0] in "()" for t in tokens):
        pos = next(t[2] for t in tokens if t[0] in "()")
        raise PolyParseError("parentheses are only allowed around the whole expression", pos)

    coeffs: dict[int, int] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, _, pos = tokens[i]
        if kind in "+-":
            sign = -1 if kind == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", pos)
        first = False
        if i >= len(tokens):
            raise PolyParseError("dangling sign", pos)

        kind, value, pos = tokens[i]
        coefficient = 1
        have_coefficient = False
        if kind == "int":
            coefficient = value
            have_coefficient = True
            i += 1
            if i < len(tokens) and tokens[i][0] == "*":
                star_pos = tokens[i][2]
                i += 1
                if i >= len(tokens) or tokens[i][0] != "x":
                    where = tokens[i][2] if i < len(tokens) else star_pos + 1
                    raise PolyParseError("expected x after '*'", where)

        exponent = 0
        if i < len(tokens) and tokens[i][0] == "x":
            exponent = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "^":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    where = tokens[i][2] if i < len(tokens) else pos
                    raise PolyParseError("expected integer exponent after '^'", where)
                exponent = tokens[i][1]
                i += 1
        elif not have_coefficient:
            raise PolyParseError("expected a coefficient or x", pos)

        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coefficient

    degree = max(coeffs)
    vector = [coeffs.get(k, 0) for k in range(degree + 1)]
    try:
        return IntPolynomial(tuple(vector))
    except ValueError as exc:
        raise PolyParseError(str(exc), 0) from exc


def format_poly(poly: IntPolynomial) -> str:
    """Canonical form with descending powers; parse(format(p)) == p."""
    parts = []
    for exponent in range(poly.degree, -1, -1):
        c = poly.coeffs[exponent]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if exponent == 0:
            body = str(magnitude)
        else:
            xpart = "x" if exponent == 1 else f"x^{exponent}"
            body = xpart if magnitude == 1 else f"{magnitude}*{xpart}"
        parts.append((sign, body))
    text = ""
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            text = body if sign == "+" else "-" + body
        else:
            text += sign + body
    return text


def primes_coprime_to(count: int, leading: int) -> list[int]:
    """The first ``count`` primes not dividing the leading coefficient."""
    out = []
    candidate = 2
    while len(out) < count:
        if is_prime(candidate) and leading % candidate != 0:
            out.append(candidate)
        candidate += 1
    return out


def cycle_type_mod_p(poly: IntPolynomial, p: int) -> CycleType | None:
    """Cycle type of Frobenius at p, or None when p is ramified.

    Requires p coprime to the leading coefficient; ramification is detected
    as a repeated factor of the reduction (gcd with the derivative).
    """
    if poly.leading % p == 0:
        raise ValueError(f"prime {p} divides the leading coefficient")
    fbar = fppoly.normalize(poly.coeffs, p)
    deriv = fppoly.derivative(fbar, p)
    if not deriv or fppoly.degree(fppoly.gcd(fbar, deriv, p)) > 0:
        return None
    return CycleType(tuple(fppoly.factor_degrees(fbar, p)))


EXACT_ENUMERATION_LIMIT = 10**6


def group_cycle_types(group_id: GroupId, budget: int = 2000, seed: int = 0) -> tuple[set[CycleType], bool]:
    """Cycle types of a group: exhaustive when the order is small enough.

    Returns (types, exact).  Exact sets come from full breadth-first
    enumeration (order <= 1e6); larger groups are sampled with the
    product-replacement stream, giving a subset.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    group = build_group(group_id)
    if group.order() <= EXACT_ENUMERATION_LIMIT:
        types = {cycle_type(p) for p in group.enumerate_elements()}
        return types, True
    sampler = group.sampler(seed)
    types = {cycle_type(group.generators[0] ** 0)}  # identity is always present
    for _ in range(budget):
        types.add(cycle_type(sampler.sample()))
    return types, False


@dataclass
class CandidateVerdict:
    group: str
    status: str  # "consistent" | "inconsistent" | "insufficient_data"
    exact_types: bool
    witness: CycleType | None = None

    def to_payload(self) -> dict:
        payload = {"group": self.group, "status": self.status, "exact_types": self.exact_types}
        if self.witness is not None:
            payload["witness_cycle_type"] = list(self.witness.lengths)
        return payload


@dataclass
class ProbeReport:
    polynomial: str
    primes_used: list[int]
    ramified_primes: list[int]
    histogram: dict[CycleType, int]
    verdicts: list[CandidateVerdict]
    irreducibility_evidence: bool
    seed: int = 0

    def to_payload(self) -> dict:
        histogram = [
            {"cycle_type": list(t.lengths), "count": c}
            for t, c in sorted(self.histogram.items(), key=lambda kv: kv[0].lengths, reverse=True)
        ]
        return {
            "polynomial": self.polynomial,
            "primes_used": self.primes_used,
            "ramified_primes": self.ramified_primes,
            "cycle_type_histogram": histogram,
            "candidates": [v.to_payload() for v in self.verdicts],
            "irreducibility_evidence": self.irreducibility_evidence,
            "seed": self.seed,
        }


def probe(poly: IntPolynomial, prime_count: int, candidates: list[GroupId],
          seed: int = 0, sample_budget: int = 2000) -> ProbeReport:
    """Factor modulo the first ``prime_count`` good primes and compare the
    observed Frobenius cycle types against each candidate group's type set.

    Inconsistency (an observed type outside an exact type set) is sound by
    construction; consistency only says the data does not rule the group out.
    A prime giving a single irreducible factor certifies irreducibility over
    the rationals (sufficient, not necessary).
    """
    for candidate in candidates:
        if candidate.natural_degree != poly.degree:
            raise ValueError(
                f"candidate {candidate.name()} acts on {candidate.natural_degree} "
                f"points but deg f = {poly.degree}"
            )
    primes = primes_coprime_to(prime_count, poly.leading)
    histogram: dict[CycleType, int] = {}
    observed_order: list[CycleType] = []
    ramified = []
    for p in primes:
        ctype = cycle_type_mod_p(poly, p)
        if ctype is None:
            ramified.append(p)
            continue
        if ctype not in histogram:
            observed_order.append(ctype)
        histogram[ctype] = histogram.get(ctype, 0) + 1

    verdicts = []
    for candidate in candidates:
        types, exact = group_cycle_types(candidate, budget=sample_budget, seed=seed)
        outside = [t for t in observed_order if t not in types]
        if not histogram:
            verdicts.append(CandidateVerdict(candidate.name(), "insufficient_data", exact))
        elif outside and exact:
            verdicts.append(
                CandidateVerdict(candidate.name(), "inconsistent", exact, outside[0])
            )
        elif outside:
            verdicts.append(CandidateVerdict(candidate.name(), "insufficient_data", exact))
        else:
            verdicts.append(CandidateVerdict(candidate.name(), "consistent", exact))

    irreducible_seen = any(len(t.lengths) == 1 for t in histogram)
    return ProbeReport(
        format_poly(poly), primes, ramified, histogram, verdicts, irreducible_seen, seed
    )
