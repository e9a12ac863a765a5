"""G-modules over prime fields: permutation module, heart, endomorphism
algebra, MeatAxe irreducibility, absolute irreducibility, indecomposability.

Modules are spaces of row vectors with generators acting on the right
(v -> v.A), so the matrix of a permutation g has row i equal to e_{g(i)}.
The heart of the permutation action on n points over F_2 is the sum-zero
hyperplane for odd n and the sum-zero hyperplane modulo the constants line
for even n; its basis is the reduced-echelon basis of the sum-zero space
(echelon representatives modulo the constants line in the even case).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product

from . import fppoly
from .linalg import ModMatrix, Subspace, charpoly, kernel, spin
from .perms import PermGroup, Permutation
from .rng import SplitMix64


class MeatAxeInconclusive(RuntimeError):
    """The randomized irreducibility test hit its attempt cap."""


def permutation_matrix(p: Permutation, ell: int = 2) -> ModMatrix:
    n = p.degree
    if ell == 2:
        rows = [1 << p.images[i] for i in range(n)]
        return ModMatrix(2, n, n, rows)
    rows = [tuple(1 if j == p.images[i] else 0 for j in range(n)) for i in range(n)]
    return ModMatrix(ell, n, n, rows)


@dataclass
class GModuleRep:
    """A representation given by generator images (parallel to group generators)."""

    ell: int
    dimension: int
    images: list[ModMatrix]
    provenance: str
    group: PermGroup | None = None

    def transposed_images(self) -> list[ModMatrix]:
        return [a.transpose() for a in self.images]


def permutation_module(group: PermGroup, ell: int = 2) -> GModuleRep:
    images = [permutation_matrix(g, ell) for g in group.generators]
    return GModuleRep(ell, group.degree, images, "permutation", group)


def _sum_zero_image(g: Permutation) -> ModMatrix:
    """Action on the sum-zero hyperplane in its echelon basis b_i = e_i + e_{n-1}."""
    n = g.degree
    mask = (1 << (n - 1)) - 1
    rows = []
    for i in range(n - 1):
        ambient = (1 << g.images[i]) ^ (1 << g.images[n - 1])
        rows.append(ambient & mask)
    return ModMatrix(2, n - 1, n - 1, rows)


def sum_zero_module(group: PermGroup) -> GModuleRep:
    """The stable hyperplane of coordinate-sum-zero vectors in F_2^n."""
    images = [_sum_zero_image(g) for g in group.generators]
    return GModuleRep(2, group.degree - 1, images, "sum-zero", group)


def heart(group: PermGroup) -> GModuleRep:
    """Heart of the permutation action over F_2: dim n-1 (n odd) or n-2 (n even)."""
    n = group.degree
    if n < 3:
        raise ValueError("heart needs degree >= 3")
    if n % 2 == 1:
        rep = sum_zero_module(group)
        return GModuleRep(2, n - 1, rep.images, "heart", group)
    ones = (1 << (n - 1)) - 1
    images = []
    for g in group.generators:
        sz = _sum_zero_image(g)
        rows = []
        for j in range(1, n - 1):
            u = sz.rows[j]
            if u & 1:
                u ^= ones
            rows.append(u >> 1)
        images.append(ModMatrix(2, n - 2, n - 2, rows))
    return GModuleRep(2, n - 2, images, "heart", group)


# -- endomorphism algebra ------------------------------------------------------


@dataclass
class EndoAlgebra:
    """Basis of all matrices commuting with every generator image."""

    ell: int
    dimension: int
    basis: list[ModMatrix] = field(repr=False)

    def contains_identity(self) -> bool:
        n = self.basis[0].nrows if self.basis else 0
        target = ModMatrix.identity(self.ell, n)
        span = Subspace.from_vectors(
            self.ell, n * n, [_vec_of_matrix(b) for b in self.basis]
        )
        return span.contains(_vec_of_matrix(target))


def _vec_of_matrix(m: ModMatrix):
    d = m.ncols
    if m.ell == 2:
        v = 0
        for i, r in enumerate(m.rows):
            v |= r << (i * d)
        return v
    out = []
    for r in m.rows:
        out.extend(r)
    return tuple(out)


def _matrix_of_vec(v, d: int, ell: int) -> ModMatrix:
    if ell == 2:
        mask = (1 << d) - 1
        rows = [(v >> (i * d)) & mask for i in range(d)]
        return ModMatrix(2, d, d, rows)
    rows = [tuple(v[i * d : (i + 1) * d]) for i in range(d)]
    return ModMatrix(ell, d, d, rows)


def _spread_bits(mask: int, stride: int) -> int:
    """Bit k of mask moves to bit k*stride."""
    out = 0
    while mask:
        low = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out |= 1 << (low * stride)
    return out


def endomorphism_algebra(rep: GModuleRep) -> EndoAlgebra:
    """Kernel of the stacked commutation system X.A - A.X = 0 over all images.

    The unknown X is vectorized row-major into d^2 coordinates; the constraint
    rows for each generator image are assembled bitwise for ell = 2.
    """
    d = rep.dimension
    ell = rep.ell
    constraints = []
    if ell == 2:
        for a in rep.images:
            at = a.transpose()
            col_masks = at.rows  # col_masks[j] has bit k iff A[k][j] == 1
            spreads = [_spread_bits(r, d) for r in a.rows]
            for i in range(d):
                block = i * d
                spread_i = spreads[i]
                for j in range(d):
                    row = (col_masks[j] << block) ^ (spread_i << j)
                    if row:
                        constraints.append(row)
    else:
        for a in rep.images:
            for i in range(d):
                for j in range(d):
                    row = [0] * (d * d)
                    for k in range(d):
                        row[i * d + k] = (row[i * d + k] + a.entry(k, j)) % ell
                        row[k * d + j] = (row[k * d + j] - a.entry(i, k)) % ell
                    if any(row):
                        constraints.append(tuple(row))
    system = ModMatrix(ell, len(constraints), d * d, constraints)
    null = kernel(system)
    basis = [_matrix_of_vec(v, d, ell) for v in null.basis]
    return EndoAlgebra(ell, len(basis), basis)


# -- MeatAxe -------------------------------------------------------------------


@dataclass
class IrreducibilityVerdict:
    status: str  # "irreducible" | "reducible" | "inconclusive"
    witness: Subspace | None = None
    attempts: int = 0

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"


MEATAXE_ATTEMPT_CAP = 200


def _random_word(images: list[ModMatrix], rng: SplitMix64, max_length: int) -> ModMatrix:
    length = 1 + rng.below(max_length)
    m = images[rng.below(len(images))]
    for _ in range(length - 1):
        m = m * images[rng.below(len(images))]
    return m


def _random_algebra_element(images: list[ModMatrix], rng: SplitMix64, attempt: int) -> ModMatrix:
    """Words of length <= 4 with coefficients, alternating with sums of two
    conjugated generators; both widen the spectrum of the sampled element."""
    d = images[0].nrows
    ell = images[0].ell
    if attempt % 2 == 0:
        theta = ModMatrix.zeros(ell, d, d)
        for _ in range(3):
            c = rng.below(ell)
            word = _random_word(images, rng, 4)
            if c:
                theta = theta + word.scale(c)
    else:
        g = images[rng.below(len(images))]
        h = _random_word(images, rng, 3)
        theta = (h * g) * h.inverse() + images[rng.below(len(images))]
    return theta


def _verify_invariant(witness: Subspace, images: list[ModMatrix]) -> None:
    for v in witness.basis:
        for a in images:
            if not witness.contains(a.act(v)):
                raise AssertionError("witness subspace is not invariant")


def _orthogonal_complement(dual_witness: Subspace, ell: int, d: int) -> Subspace:
    m = ModMatrix(ell, len(dual_witness.basis), d, list(dual_witness.basis))
    return kernel(m)


def _matrix_poly(coeffs, m: ModMatrix) -> ModMatrix:
    """Evaluate a polynomial (constant term first) at a square matrix."""
    d = m.nrows
    acc = ModMatrix.zeros(m.ell, d, d)
    for c in reversed(coeffs):
        acc = acc * m
        if c:
            acc = acc + ModMatrix.identity(m.ell, d).scale(c)
    return acc


def is_irreducible(rep: GModuleRep, seed: int = 0) -> IrreducibilityVerdict:
    """Norton/Parker MeatAxe.

    For random algebra elements theta, each irreducible factor p of the
    characteristic polynomial gives kernel vectors of p(theta) to spin.  A
    proper spin (on either the module or its transpose, whose witness is
    carried back through the orthogonal complement) proves reducibility; both
    spins filling certifies irreducibility by Norton's criterion, applied
    only when the p(theta)-kernel has the minimal dimension deg(p).
    """
    d = rep.dimension
    ell = rep.ell
    if d == 0:
        raise ValueError("empty module")
    rng = SplitMix64(seed)
    images = rep.images
    if d == 1:
        return IrreducibilityVerdict("irreducible", attempts=0)
    transposed = rep.transposed_images()
    for attempt in range(1, MEATAXE_ATTEMPT_CAP + 1):
        theta = _random_algebra_element(images, rng, attempt)
        if theta.is_zero() or theta.is_scalar():
            continue
        factors = fppoly.factor(tuple(charpoly(theta)), ell, rng)
        for poly_factor, _multiplicity in factors:
            p_of_theta = _matrix_poly(poly_factor, theta)
            null = kernel(p_of_theta.transpose())  # vectors v with v.p(theta) = 0
            if null.dimension == 0:
                continue
            v = null.basis[0]
            span = spin([v], images, ell, d)
            if span.is_proper_nonzero():
                _verify_invariant(span, images)
                return IrreducibilityVerdict("reducible", span, attempt)
            if null.dimension != fppoly.degree(poly_factor):
                continue
            dual_null = kernel(p_of_theta)  # kernel under the transposed action
            w = dual_null.basis[0]
            dual_span = spin([w], transposed, ell, d)
            if dual_span.is_proper_nonzero():
                complement = _orthogonal_complement(dual_span, ell, d)
                _verify_invariant(complement, images)
                return IrreducibilityVerdict("reducible", complement, attempt)
            return IrreducibilityVerdict("irreducible", attempts=attempt)
    return IrreducibilityVerdict("inconclusive", attempts=MEATAXE_ATTEMPT_CAP)


def is_absolutely_irreducible(rep: GModuleRep, seed: int = 0) -> bool:
    """Irreducible with scalar-only endomorphisms; raises on inconclusive."""
    verdict = is_irreducible(rep, seed)
    if verdict.status == "inconclusive":
        raise MeatAxeInconclusive(f"no verdict after {verdict.attempts} attempts")
    if verdict.status == "reducible":
        return False
    return endomorphism_algebra(rep).dimension == 1


# -- indecomposability ---------------------------------------------------------


@dataclass
class IndecomposabilityVerdict:
    status: str  # "indecomposable" | "decomposable" | "inconclusive"
    witness: ModMatrix | None = None  # a nontrivial idempotent
    endo_dimension: int = 0


IDEMPOTENT_ENUM_CAP = 20


def is_indecomposable(rep: GModuleRep) -> IndecomposabilityVerdict:
    """Exhaustive idempotent search in the endomorphism algebra.

    The module decomposes iff End contains an idempotent other than 0 and the
    identity; the witness idempotent's image and kernel are the complementary
    invariant summands.  Dimensions above the enumeration cap return
    inconclusive rather than guessing.
    """
    endo = endomorphism_algebra(rep)
    k = endo.dimension
    ell = rep.ell
    if ell**k > 2**IDEMPOTENT_ENUM_CAP:
        return IndecomposabilityVerdict("inconclusive", endo_dimension=k)
    d = rep.dimension
    zero = ModMatrix.zeros(ell, d, d)
    identity = ModMatrix.identity(ell, d)
    for coeffs in iter_product(range(ell), repeat=k):
        x = zero
        for c, b in zip(coeffs, endo.basis):
            if c:
                x = x + b.scale(c)
        if x == zero or x == identity:
            continue
        if x * x == x:
            _verify_idempotent_witness(x, rep)
            return IndecomposabilityVerdict("decomposable", x, k)
    return IndecomposabilityVerdict("indecomposable", endo_dimension=k)


def _verify_idempotent_witness(x: ModMatrix, rep: GModuleRep) -> None:
    d = rep.dimension
    image = Subspace.from_vectors(rep.ell, d, list(x.rows))
    null = kernel(x.transpose())  # vectors with v.x = 0
    if image.dimension + null.dimension != d:
        raise AssertionError("idempotent image and kernel do not sum to the space")
    _verify_invariant(image, rep.images)
    _verify_invariant(null, rep.images)
