"""Permutations and generator-presented permutation groups.

Points are the integers 0..n-1.  The composition convention, fixed once for
the whole package, is ``compose(p, q)(x) == p(q(x))`` (apply q first).

Groups carry a deterministic stabilizer chain built by the Schreier-Sims
procedure with the forced base 0, 1, 2, ... (points fixed by the respective
stabilizer contribute nothing and are filtered from the public base).  No
randomization is used anywhere in the chain construction, so order,
membership and transitivity results are reproducible bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .rng import SplitMix64


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined."""


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images, _checked: bool = False):
        images = tuple(images)
        if not _checked:
            n = len(images)
            seen = [False] * n
            for i in images:
                if not isinstance(i, int) or not 0 <= i < n or seen[i]:
                    raise ValueError("images do not define a bijection of 0..n-1")
                seen[i] = True
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, _checked=True)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(self.degree)
        square = self
        while k:
            if k & 1:
                result = compose(square, result)
            square = compose(square, square)
            k >>= 1
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        result = 1
        for length in cycle_type(self).lengths:
            result = result * length // gcd(result, length)
        return result

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation(identity, degree={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation({text}, degree={self.degree})"


def identity(degree: int) -> Permutation:
    return Permutation(range(degree), _checked=True)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """compose(p, q)(x) == p(q(x)); q is applied first."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"degree {p.degree} != {q.degree}")
    pi = p.images
    return Permutation([pi[j] for j in q.images], _checked=True)


def from_cycles(degree: int, cycles, shift: int = 0) -> Permutation:
    """Build a permutation from disjoint cycles.

    ``shift`` is added to every point, so published 1-indexed cycle data can
    be transcribed verbatim with shift=-1.
    """
    images = list(range(degree))
    touched = set()
    for cyc in cycles:
        cyc = [c + shift for c in cyc]
        for a in cyc:
            if a in touched:
                raise ValueError("cycles are not disjoint")
            touched.add(a)
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        images[cyc[-1]] = cyc[0]
    return Permutation(images)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths (fixed points included as 1s)."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return "+".join(map(str, self.lengths))


def cycle_type(p: Permutation) -> CycleType:
    seen = [False] * p.degree
    lengths = []
    for start in range(p.degree):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            length += 1
            j = p.images[j]
        lengths.append(length)
    return CycleType(tuple(lengths))


class _Level:
    """One stabilizer-chain level: base point, strong generators, transversal.

    ``transversal[beta]`` is a permutation u with u(point) == beta.  The
    transversal is only ever extended, never rebuilt, so coset representatives
    stay stable while the chain grows (this keeps the processed-Schreier
    watermarks below valid).
    """

    __slots__ = ("point", "gens", "orbit_list", "transversal", "expanded", "sifted")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[Permutation] = []
        self.orbit_list: list[int] = [point]
        self.transversal: dict[int, Permutation] = {point: identity(degree)}
        self.expanded: list[int] = []  # orbit positions already expanded per gen
        self.sifted: list[int] = []  # orbit positions whose Schreier gen was sifted per gen

    def add_generator(self, g: Permutation) -> None:
        self.gens.append(g)
        self.expanded.append(0)
        self.sifted.append(0)
        self._extend_orbit()

    def _extend_orbit(self) -> None:
        changed = True
        while changed:
            changed = False
            for k, g in enumerate(self.gens):
                gi = g.images
                while self.expanded[k] < len(self.orbit_list):
                    alpha = self.orbit_list[self.expanded[k]]
                    self.expanded[k] += 1
                    gamma = gi[alpha]
                    if gamma not in self.transversal:
                        self.transversal[gamma] = compose(g, self.transversal[alpha])
                        self.orbit_list.append(gamma)
                        changed = True


class _StabilizerChain:
    """Deterministic Schreier-Sims chain with base forced to 0, 1, 2, ...

    Level i always has base point i; levels whose subgroup fixes their point
    sit in the chain with a singleton orbit and are skipped by the public
    accessors.  A strong generator is listed at every level it stabilizes
    through, so each level's generator list generates the corresponding
    pointwise stabilizer once construction finishes.
    """

    def __init__(self, degree: int, generators: list[Permutation]):
        self.degree = degree
        self.levels: list[_Level] = []
        for g in generators:
            if not g.is_identity():
                residue, j = self._strip(g, 0)
                if not residue.is_identity():
                    self._place(j, residue)
                    self._process()

    def _strip(self, p: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            beta = p.images[level.point]
            if beta == level.point:
                continue
            u = level.transversal.get(beta)
            if u is None:
                return p, i
            p = compose(u.inverse(), p)
        return p, len(self.levels)

    def _place(self, j: int, residue: Permutation) -> None:
        if j == len(self.levels):
            self.levels.append(_Level(j, self.degree))
        for i in range(j + 1):
            self.levels[i].add_generator(residue)

    def _process(self) -> None:
        """Drain unprocessed Schreier generators until the chain is closed."""
        progress = True
        while progress:
            progress = False
            i = 0
            while i < len(self.levels):
                level = self.levels[i]
                k = 0
                while k < len(level.gens):
                    s = level.gens[k]
                    while level.sifted[k] < len(level.orbit_list):
                        beta = level.orbit_list[level.sifted[k]]
                        level.sifted[k] += 1
                        u = level.transversal[beta]
                        v = level.transversal[s.images[beta]]
                        schreier = compose(v.inverse(), compose(s, u))
                        if schreier.is_identity():
                            continue
                        residue, j = self._strip(schreier, i + 1)
                        if not residue.is_identity():
                            self._place(j, residue)
                            progress = True
                    k += 1
                i += 1

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.orbit_list)
        return result

    def contains(self, p: Permutation) -> bool:
        residue, _ = self._strip(p, 0)
        return residue.is_identity()

    def base_points(self) -> list[int]:
        return [lvl.point for lvl in self.levels if len(lvl.orbit_list) > 1]

    def orbit_sizes(self) -> list[tuple[int, int]]:
        return [(lvl.point, len(lvl.orbit_list)) for lvl in self.levels if len(lvl.orbit_list) > 1]

    def transitivity_degree(self) -> int:
        """Largest t with orbit sizes n, n-1, ..., n-t+1 along base 0, 1, ..."""
        n = self.degree
        t = 0
        for i in range(n):
            if i < len(self.levels):
                size = len(self.levels[i].orbit_list)
            else:
                size = 1
            if size != n - i:
                break
            t += 1
        # a group transitive on each of the first n-1 points is all of Sym(n)
        if t == n - 1:
            t = n
        return t


class PermGroup:
    """A permutation group given by generators, with a lazy stabilizer chain."""

    def __init__(self, generators, degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if not gens:
            if degree is None:
                raise ValueError("need generators or an explicit degree")
            gens = [identity(degree)]
        if degree is None:
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError("generators have mixed degrees")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain: _StabilizerChain | None = None

    def chain(self) -> _StabilizerChain:
        if self._chain is None:
            self._chain = _StabilizerChain(self.degree, list(self.generators))
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} != {self.degree}")
        return self.chain().contains(p)

    def base_points(self) -> list[int]:
        return self.chain().base_points()

    def orbit_sizes(self) -> list[tuple[int, int]]:
        return self.chain().orbit_sizes()

    def transitivity_degree(self) -> int:
        return self.chain().transitivity_degree()

    def is_transitive(self) -> bool:
        return self.transitivity_degree() >= 1

    def enumerate_elements(self, limit: int = 10**6) -> list[Permutation]:
        """All elements by breadth-first closure; independent of the chain.

        Intended as an oracle for small groups; raises if the group has more
        than ``limit`` elements.
        """
        seen = {identity(self.degree).images}
        queue = [identity(self.degree)]
        head = 0
        while head < len(queue):
            current = queue[head]
            head += 1
            for g in self.generators:
                nxt = compose(g, current)
                if nxt.images not in seen:
                    if len(seen) >= limit:
                        raise RuntimeError(f"closure exceeds limit {limit}")
                    seen.add(nxt.images)
                    queue.append(nxt)
        return queue

    def sampler(self, seed: int) -> "ElementSampler":
        return ElementSampler(self, seed)

    def random_element(self, seed: int) -> Permutation:
        return ElementSampler(self, seed).sample()

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


class ElementSampler:
    """Product-replacement ("rattle") stream of pseudo-random group elements.

    A reservoir of generator copies is stirred by splitmix64-driven
    multiplications, with an accumulator multiplied on every step; ten mixing
    rounds run before the first sample.  Every output is a product of
    generators and their inverses, so membership is guaranteed.
    """

    _MIN_SLOTS = 8
    _MIXING_ROUNDS = 10

    def __init__(self, group: PermGroup, seed: int):
        gens = group.generators
        nslots = max(self._MIN_SLOTS, len(gens))
        self._slots = [gens[i % len(gens)] for i in range(nslots)]
        self._acc = identity(group.degree)
        self._rng = SplitMix64(seed)
        for _ in range(self._MIXING_ROUNDS):
            self._stir()

    def _stir(self) -> Permutation:
        rng = self._rng
        slots = self._slots
        i = rng.below(len(slots))
        j = rng.below(len(slots) - 1)
        if j >= i:
            j += 1
        t = slots[j] if rng.bit() else slots[j].inverse()
        slots[i] = compose(slots[i], t)
        if rng.bit():
            self._acc = compose(self._acc, slots[i])
        else:
            self._acc = compose(slots[i], self._acc)
        return self._acc

    def sample(self) -> Permutation:
        return self._stir()
