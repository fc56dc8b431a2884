"""Meyer cocycle on SL(2,Z) and two independent signature computations.

For 3-braids the signature of the closure obeys

    sign(closure(a.b)) = sign(closure(a)) + sign(closure(b)) - Meyer(A, B)

with A, B the Burau images at t = -1.  gg_signature peels one letter at a
time off the word (single-generator closures are trivial links, signature
0), so the whole invariant reduces to Meyer cocycle evaluations.

seifert_signature_oracle is the independent check: it builds an explicit
Seifert matrix for the closure of any braid word (disks = strands, bands =
crossings, loops between consecutive crossings on the same strand pair)
and takes the signature of V + V^T.

The symplectic form is Omega(x, y) = x2*y1 - x1*y2.  The sign is pinned by
the convention that positive links have negative signature (trefoil -> -2);
the oracle agrees with the recursion on every word we test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .braid import BraidWord, closure_components
from .burau import burau_generator_minus1, burau_minus1
from .linalg import (
    Matrix,
    Vector,
    form_signature,
    identity,
    kernel_basis,
    mat_mul,
    mat_sub,
    mat_transpose,
    solve_particular,
    subspace_intersection,
)


def omega(x: Vector, y: Vector):
    """Symplectic form on Q^2 used throughout the Meyer computation."""
    return x[1] * y[0] - x[0] * y[1]


def _check_sl2(m: Matrix, name: str) -> None:
    if len(m) != 2 or any(len(r) != 2 for r in m):
        raise ValueError(f"{name} must be a 2x2 matrix")
    if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
        raise ValueError(f"{name} must have determinant 1")


@dataclass(frozen=True)
class MeyerInput:
    """A validated pair of SL(2,Z) matrices."""

    g1: Matrix
    g2: Matrix

    def __post_init__(self):
        g1 = tuple(tuple(r) for r in self.g1)
        g2 = tuple(tuple(r) for r in self.g2)
        _check_sl2(g1, "g1")
        _check_sl2(g2, "g2")
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)


def _inv2(m: Matrix) -> Matrix:
    a, b = m[0]
    c, d = m[1]
    return ((d, -b), (-c, a))


def meyer_space(g1: Matrix, g2: Matrix) -> list[Vector]:
    """Basis of E = Im(g1^{-1} - I) cap Im(g2 - I)."""
    _check_sl2(g1, "g1")
    _check_sl2(g2, "g2")
    i2 = identity(2)
    im1 = [col for col in zip(*mat_sub(_inv2(g1), i2)) if any(col)]
    im2 = [col for col in zip(*mat_sub(g2, i2)) if any(col)]
    return subspace_intersection(im1, im2)


def meyer_gram(
    g1: Matrix,
    g2: Matrix,
    shift1: Vector | None = None,
    shift2: Vector | None = None,
) -> tuple[list[Vector], Matrix]:
    """Basis of E and the Gram matrix of the Meyer form on it.

    For each basis vector e, particular solutions of
    (g1^{-1} - I) v1 = e  and  (g2 - I) v2 = -e
    are found exactly; the quadratic form is q(e) = Omega(e, v1 + v2) and
    the Gram matrix is its polarization.  shift1/shift2, when given, are
    added to every particular solution; they must lie in the respective
    kernels, which leaves the form unchanged (used to test that the
    cocycle does not depend on the choice of solutions).
    """
    basis = meyer_space(g1, g2)
    if not basis:
        return [], ()
    i2 = identity(2)
    a1 = mat_sub(_inv2(g1), i2)
    a2 = mat_sub(g2, i2)
    vs = []
    for e in basis:
        v1 = solve_particular(a1, e)
        v2 = solve_particular(a2, tuple(-x for x in e))
        if shift1 is not None:
            v1 = tuple(x + s for x, s in zip(v1, shift1))
        if shift2 is not None:
            v2 = tuple(x + s for x, s in zip(v2, shift2))
        vs.append(tuple(x + y for x, y in zip(v1, v2)))
    d = len(basis)
    gram = tuple(
        tuple(
            Fraction(omega(basis[a], vs[b]) + omega(basis[b], vs[a]), 2)
            for b in range(d)
        )
        for a in range(d)
    )
    return basis, gram


def meyer_cocycle(g1: Matrix, g2: Matrix) -> int:
    """Meyer cocycle value in {-2,...,2}: signature of the form on E."""
    _, gram = meyer_gram(g1, g2)
    if not gram:
        return 0
    return form_signature(gram)


@lru_cache(maxsize=1 << 20)
def _meyer_cached(flat1: tuple, flat2: tuple) -> int:
    g1 = (flat1[:2], flat1[2:])
    g2 = (flat2[:2], flat2[2:])
    return meyer_cocycle(g1, g2)


def _flat(m: Matrix) -> tuple:
    return (m[0][0], m[0][1], m[1][0], m[1][1])


@dataclass(frozen=True)
class SignatureResult:
    """Signature of a braid closure plus basic context."""

    value: int
    word_length: int
    components: int


_GEN_M1 = {
    g: burau_generator_minus1(3, abs(g), inverse=g < 0) for g in (1, -1, 2, -2)
}


def gg_signature(word: BraidWord) -> SignatureResult:
    """Signature of the closure of a 3-braid via the Meyer recursion.

    Letters are peeled right to left: with w = w'.g and one-letter closures
    being trivial links, sign(w) = sign(w') - Meyer(B(w'), B(g)).
    """
    if word.strands != 3:
        raise ValueError("the Meyer recursion is implemented for 3-braids only")
    sig = 0
    prefix = ((1, 0), (0, 1))
    for g in word.letters:
        gen = _GEN_M1[g]
        sig -= _meyer_cached(_flat(prefix), _flat(gen))
        prefix = mat_mul(prefix, gen)
    return SignatureResult(sig, len(word), closure_components(word))


def power_signatures(word: BraidWord, nmax: int) -> list[int]:
    """[sign(closure(word^n)) for n = 1..nmax], via the pairwise identity.

    sign(w^{n+1}) = sign(w^n) + sign(w) - Meyer(B(w)^n, B(w)); agrees with
    running gg_signature on the expanded power word.
    """
    base = gg_signature(word).value
    m = burau_minus1(word)
    out = [base]
    power = m
    for _ in range(1, nmax):
        out.append(out[-1] + base - _meyer_cached(_flat(power), _flat(m)))
        power = mat_mul(power, m)
    return out


# Seifert matrix oracle ------------------------------------------------------
#
# Loops of the closure surface are indexed by consecutive crossings on the
# same strand pair.  Two loops interact only when they share a crossing
# (same pair) or interleave on adjacent pairs; the interleaving entry signs
# below are a basis-orientation convention, fixed by the torus-knot anchors
# and checked against the Meyer recursion on every 3-braid word up to
# length 8.

_CROSS_AHEAD = 1   # loop on pair i starts first:  a1 < b1 < a2 < b2
_CROSS_BEHIND = -1  # loop on pair i+1 starts first: b1 < a1 < b2 < a2


def seifert_matrix(word: BraidWord) -> Matrix:
    """Integer Seifert matrix V for the closure of the word."""
    positions: dict[int, list[int]] = {}
    signs = []
    for pos, g in enumerate(word.letters):
        positions.setdefault(abs(g), []).append(pos)
        signs.append(1 if g > 0 else -1)
    loops = []  # (pair, start position, end position)
    for pair in sorted(positions):
        occ = positions[pair]
        for a, b in zip(occ, occ[1:]):
            loops.append((pair, a, b))
    d = len(loops)
    v = [[0] * d for _ in range(d)]
    for x, (pair_x, a1, a2) in enumerate(loops):
        v[x][x] = -(signs[a1] + signs[a2]) // 2
        for y in range(x + 1, d):
            pair_y, b1, b2 = loops[y]
            if pair_y == pair_x:
                if b1 == a2:  # consecutive loops share the middle crossing
                    if signs[a2] > 0:
                        v[x][y] = 1
                    else:
                        v[y][x] = -1
            elif abs(pair_y - pair_x) == 1:
                lo, hi = (x, y) if pair_x < pair_y else (y, x)
                _, s1, s2 = loops[lo]
                _, t1, t2 = loops[hi]
                if s1 < t1 < s2 < t2:
                    v[lo][hi] = _CROSS_AHEAD
                elif t1 < s1 < t2 < s2:
                    v[lo][hi] = _CROSS_BEHIND
    return tuple(tuple(row) for row in v)


def seifert_signature_oracle(word: BraidWord) -> int:
    """Link signature of the closure from the explicit Seifert matrix."""
    v = seifert_matrix(word)
    if not v:
        return 0
    sym = tuple(
        tuple(v[i][j] + v[j][i] for j in range(len(v))) for i in range(len(v))
    )
    return form_signature(sym)


def quasipositive_invariants(
    bands: int, strands: int, components: int | None = None
) -> tuple[int, int | None]:
    """(chi_4, g_4) of the closure of a quasipositive braid.

    A product of `bands` conjugates of positive generators on `strands`
    strands closes into a link with chi_4 = strands - bands; when the
    closure is a knot (components == 1) the 4-genus is (1 - chi_4) / 2.
    """
    if bands < 0 or strands < 2:
        raise ValueError("need bands >= 0 and strands >= 2")
    chi4 = strands - bands
    g4 = (1 - chi4) // 2 if components == 1 else None
    return chi4, g4


def check_big_entries(word: BraidWord) -> bool:
    """True iff every entry of the t = -1 Burau matrix exceeds 2 in modulus.

    Braids with this property generate families (sigma_a w sigma_b w^-1)^n
    whose closures all have zero signature.
    """
    if word.strands != 3:
        raise ValueError("entry test applies to 3-braids")
    m = burau_minus1(word)
    return all(abs(m[i][j]) > 2 for i in range(2) for j in range(2))


def is_hyperbolic(m: Matrix) -> bool:
    return abs(m[0][0] + m[1][1]) > 2
