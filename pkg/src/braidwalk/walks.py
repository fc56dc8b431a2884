"""Random walks on braid groups pushed through the Burau map at t = -1.

A step measure is a finitely supported probability measure mu on B(n).  The
k-fold convolution mu^(k) is the law of a product of k independent
mu-distributed letters; pushing it forward through burau_minus1 gives a walk
on an integer matrix group, and for odd n that group sits inside Sp(n-1, Z).

Everything on the exact side is integer arithmetic: distributions are stored
as integer numerators over a common power-of-denominator, so convolving and
summing event probabilities is exact.  A vectorised Monte Carlo path is
provided as a statistical cross-check for the same hitting probabilities.

Reductions mod p land in Sp(2l, F_p) (or its projective quotient); the module
also carries small brute-force enumerations of SL(2, p) and Sp(4, 3) used to
validate the closed-form group orders and to measure zero densities of entry
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .braid import BraidWord
from .burau import burau_minus1, intersection_form, symplectic_image
from .linalg import Matrix, det_fraction, identity, mat_mul


# ---------------------------------------------------------------------------
# step measures


@dataclass(frozen=True)
class GenMeasure:
    """Finitely supported step measure on a braid group.

    atoms: tuple of (word, weight) pairs; weights are positive Fractions
    summing to 1 and all words share the same strand count.
    """

    atoms: tuple[tuple[BraidWord, Fraction], ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("measure needs at least one atom")
        strands = {w.strands for w, _ in self.atoms}
        if len(strands) > 1:
            raise ValueError("atoms live in different braid groups: %s" % strands)
        total = Fraction(0)
        for word, weight in self.atoms:
            weight = Fraction(weight)
            if weight <= 0:
                raise ValueError("weight of %s is not positive" % (word,))
            total += weight
        if total != 1:
            raise ValueError("weights sum to %s, expected 1" % total)

    @property
    def strands(self) -> int:
        return self.atoms[0][0].strands

    @classmethod
    def uniform_generators(cls, strands: int) -> "GenMeasure":
        """Uniform measure on the 2(strands-1) generators and inverses."""
        letters = []
        for i in range(1, strands):
            letters.append(i)
            letters.append(-i)
        weight = Fraction(1, len(letters))
        atoms = tuple(
            (BraidWord(strands, (g,)), weight) for g in letters
        )
        return cls(atoms)


@dataclass(frozen=True)
class WalkDistribution:
    """Exact law of the walk after a fixed number of steps.

    probs maps matrices (nested tuples) to Fractions summing to 1.
    """

    step: int
    probs: dict

    def total(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0))


def _flatten(m: Matrix) -> tuple:
    return tuple(x for row in m for x in row)


def _unflatten(flat: tuple, d: int) -> Matrix:
    return tuple(flat[i * d:(i + 1) * d] for i in range(d))


def _mul_flat_2(a: tuple, b: tuple) -> tuple:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 + a1 * b2,
        a0 * b1 + a1 * b3,
        a2 * b0 + a3 * b2,
        a2 * b1 + a3 * b3,
    )


def _atom_images(mu: GenMeasure, rep) -> tuple[list, int, int]:
    """Flattened rep images with integer weights over a common denominator."""
    denom = 1
    for _, weight in mu.atoms:
        denom = denom * weight.denominator // gcd(denom, weight.denominator)
    images = []
    for word, weight in mu.atoms:
        m = rep(word)
        images.append((_flatten(m), weight.numerator * (denom // weight.denominator)))
    d = len(rep(mu.atoms[0][0]))
    return images, denom, d


def _convolve_states(states: dict, images: list, d: int) -> dict:
    new: dict = {}
    if d == 2:
        for key, num in states.items():
            for img, wnum in images:
                nk = _mul_flat_2(key, img)
                if nk in new:
                    new[nk] += num * wnum
                else:
                    new[nk] = num * wnum
    else:
        for key, num in states.items():
            a = _unflatten(key, d)
            for img, wnum in images:
                nk = _flatten(mat_mul(a, _unflatten(img, d)))
                if nk in new:
                    new[nk] += num * wnum
                else:
                    new[nk] = num * wnum
    return new


def step_distribution(mu: GenMeasure, rep=burau_minus1, k: int = 1) -> WalkDistribution:
    """Exact pushforward of the k-fold convolution of mu through rep."""
    if k < 0:
        raise ValueError("step count must be >= 0")
    images, denom, d = _atom_images(mu, rep)
    states = {_flatten(identity(d)): 1}
    for _ in range(k):
        states = _convolve_states(states, images, d)
    scale = denom ** k
    probs = {_unflatten(key, d): Fraction(num, scale) for key, num in states.items()}
    return WalkDistribution(step=k, probs=probs)


# ---------------------------------------------------------------------------
# hitting probabilities


def predicate_z11(m: Matrix) -> bool:
    """|top-left entry| > 2: the walk left the recurrent-looking band."""
    return abs(m[0][0]) > 2


def predicate_all_entries_big(m: Matrix) -> bool:
    """Every entry of a 2x2 matrix exceeds 2 in absolute value."""
    return all(abs(x) > 2 for row in m for x in row)


def _z11_numpy(batch: np.ndarray) -> np.ndarray:
    return np.abs(batch[:, 0, 0]) > 2


def _all_big_numpy(batch: np.ndarray) -> np.ndarray:
    return (np.abs(batch) > 2).all(axis=(1, 2))


PREDICATES = {
    "z11": (predicate_z11, _z11_numpy),
    "all-entries": (predicate_all_entries_big, _all_big_numpy),
}


def hitting_series(
    mu: GenMeasure, predicate, kmax: int, rep=burau_minus1
) -> list[Fraction]:
    """Exact values of P(predicate holds at step k) for k = 0..kmax.

    One DP pass; the predicate is evaluated once per distinct matrix.
    predicate may be a callable on nested-tuple matrices or a name from
    PREDICATES.
    """
    if kmax < 0:
        raise ValueError("step count must be >= 0")
    if isinstance(predicate, str):
        try:
            predicate = PREDICATES[predicate][0]
        except KeyError:
            raise ValueError("unknown predicate %r" % predicate) from None
    images, denom, d = _atom_images(mu, rep)
    states = {_flatten(identity(d)): 1}
    seen: dict = {}

    def mass(st: dict, scale: int) -> Fraction:
        hit = 0
        for key, num in st.items():
            flag = seen.get(key)
            if flag is None:
                flag = bool(predicate(_unflatten(key, d)))
                seen[key] = flag
            if flag:
                hit += num
        return Fraction(hit, scale)

    out = [mass(states, 1)]
    for k in range(1, kmax + 1):
        states = _convolve_states(states, images, d)
        out.append(mass(states, denom ** k))
    return out


def hitting_probability(mu: GenMeasure, predicate, k: int, rep=burau_minus1) -> Fraction:
    """Exact probability that the predicate holds after exactly k steps."""
    return hitting_series(mu, predicate, k, rep=rep)[k]


def monte_carlo_hitting(
    mu: GenMeasure,
    predicate,
    k: int,
    trials: int = 100_000,
    seed: int = 0,
    rep=burau_minus1,
    batch: int = 100_000,
) -> dict:
    """Monte Carlo estimate of the step-k hitting probability.

    Samples products of k atom images with numpy int64 matmuls; entries of
    Burau images grow geometrically, so k is capped where int64 could
    overflow.  predicate may be a callable on nested-tuple matrices or a name
    from PREDICATES (the named ones use a vectorised path).

    Returns a dict with estimate, stderr, a 95% normal-approximation
    confidence interval, raw hit/trial counts and the seed.
    """
    if k > 40:
        raise ValueError("k > 40 risks int64 overflow; use step_distribution")
    if trials <= 0:
        raise ValueError("trials must be positive")
    np_pred = None
    if isinstance(predicate, str):
        try:
            predicate, np_pred = PREDICATES[predicate]
        except KeyError:
            raise ValueError("unknown predicate %r" % predicate) from None
    else:
        for py_fn, np_fn in PREDICATES.values():
            if predicate is py_fn:
                np_pred = np_fn
                break

    images, denom, d = _atom_images(mu, rep)
    mats = np.array([_unflatten(img, d) for img, _ in images], dtype=np.int64)
    weights = np.array([wnum for _, wnum in images], dtype=np.float64) / denom
    cum = np.cumsum(weights)
    cum[-1] = 1.0

    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < trials:
        n = min(batch, trials - done)
        picks = np.searchsorted(cum, rng.random((n, k)), side="right")
        cur = np.broadcast_to(np.eye(d, dtype=np.int64), (n, d, d)).copy()
        for step in range(k):
            cur = cur @ mats[picks[:, step]]
        if np.abs(cur).max() >= 2 ** 62:
            raise OverflowError("matrix entries too large for int64 sampling")
        if np_pred is not None:
            hits += int(np_pred(cur).sum())
        else:
            for row in cur:
                if predicate(tuple(tuple(int(x) for x in r) for r in row)):
                    hits += 1
        done += n

    est = hits / trials
    stderr = (est * (1 - est) / trials) ** 0.5
    return {
        "estimate": est,
        "stderr": stderr,
        "ci95": (est - 1.96 * stderr, est + 1.96 * stderr),
        "hits": hits,
        "trials": trials,
        "seed": seed,
    }


# ---------------------------------------------------------------------------
# symplectic groups over prime fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def sp_order(l: int, p: int) -> int:
    """|Sp(2l, F_p)| = prod_{m=1..l} (p^(2m) - 1) p^(2m-1)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if not _is_prime(p):
        raise ValueError("%d is not prime" % p)
    order = 1
    for m in range(1, l + 1):
        order *= (p ** (2 * m) - 1) * p ** (2 * m - 1)
    return order


def psp_order(l: int, p: int) -> int:
    """|PSp(2l, F_p)|: halve for odd p, where -I is the only central element."""
    order = sp_order(l, p)
    return order if p == 2 else order // 2


def enumerate_sl2(p: int):
    """All of SL(2, p) as nested tuples, by brute force; p^4 determinant checks."""
    if not _is_prime(p):
        raise ValueError("%d is not prime" % p)
    if p > 13:
        raise ValueError("brute force capped at p <= 13")
    rng = range(p)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if (a * d - b * c) % p == 1:
                        yield ((a, b), (c, d))


def enumerate_sp4(p: int):
    """All of Sp(4, p) w.r.t. the tridiagonal form J, by depth-first search.

    Columns c1..c4 are chosen in F_p^4 subject to <c_i, c_j> = J_ij for i < j,
    where <x, y> = sum J_ab x_a y_b.  Feasible only for tiny p.
    """
    if not _is_prime(p):
        raise ValueError("%d is not prime" % p)
    if p > 3:
        raise ValueError("brute force capped at p <= 3")
    j = intersection_form(4)
    vecs = [
        (a, b, c, d)
        for a in range(p)
        for b in range(p)
        for c in range(p)
        for d in range(p)
    ]

    def pairing(x, y):
        return (
            x[0] * y[1] - x[1] * y[0]
            + x[1] * y[2] - x[2] * y[1]
            + x[2] * y[3] - x[3] * y[2]
        ) % p

    targets = {(a, b): j[a][b] % p for a in range(4) for b in range(4)}

    cols: list = [None] * 4

    def extend(idx):
        for v in vecs:
            ok = True
            for prev in range(idx):
                if pairing(cols[prev], v) != targets[(prev, idx)]:
                    ok = False
                    break
            if not ok:
                continue
            cols[idx] = v
            if idx == 3:
                yield tuple(
                    tuple(cols[jj][ii] for jj in range(4)) for ii in range(4)
                )
            else:
                yield from extend(idx + 1)
        cols[idx] = None

    yield from extend(0)


def count_group_bruteforce(l: int, p: int) -> int:
    """Independent head count of Sp(2l, p) for the tiny cases."""
    if l == 1:
        return sum(1 for _ in enumerate_sl2(p))
    if l == 2:
        return sum(1 for _ in enumerate_sp4(p))
    raise ValueError("brute force only for l in {1, 2}")


# ---------------------------------------------------------------------------
# entry polynomials and zero densities


@dataclass(frozen=True)
class EntryPolynomial:
    """Named polynomial in the matrix entries, evaluated mod p."""

    name: str
    fn: object = field(repr=False)

    def __call__(self, m: Matrix, p: int) -> int:
        return self.fn(m, p) % p


def _det_int(m: Matrix) -> int:
    d = det_fraction(m)
    return int(d)


ENTRY_POLYNOMIALS = {
    "m11": EntryPolynomial("m11", lambda m, p: m[0][0]),
    "m12": EntryPolynomial("m12", lambda m, p: m[0][1]),
    "m21": EntryPolynomial("m21", lambda m, p: m[1][0]),
    "m22": EntryPolynomial("m22", lambda m, p: m[1][1]),
    "det-1": EntryPolynomial("det-1", lambda m, p: _det_int(m) - 1),
}


def zero_density(poly, l: int, p: int) -> Fraction:
    """Fraction of Sp(2l, p) where the entry polynomial vanishes mod p.

    Exhaustive: l = 1 needs p <= 13, l = 2 needs p <= 3.
    """
    if isinstance(poly, str):
        try:
            poly = ENTRY_POLYNOMIALS[poly]
        except KeyError:
            raise ValueError("unknown entry polynomial %r" % poly) from None
    if l == 1:
        group = enumerate_sl2(p)
    elif l == 2:
        group = enumerate_sp4(p)
    else:
        raise ValueError("exhaustive densities only for l in {1, 2}")
    zeros = 0
    total = 0
    for m in group:
        total += 1
        if poly(m, p) == 0:
            zeros += 1
    return Fraction(zeros, total)


# ---------------------------------------------------------------------------
# reductions mod p and finite walks


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over F_p, optionally up to sign (projective quotient).

    entries are reduced to [0, p); in projective mode the representative is
    the lexicographically smaller of {M, -M}.  Determinant 1 mod p is
    enforced, since every matrix we reduce comes from Sp(2l, Z).
    """

    p: int
    entries: tuple
    projective: bool = False

    def __post_init__(self):
        if not _is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        reduced = tuple(tuple(x % self.p for x in row) for row in self.entries)
        if self.projective:
            neg = tuple(tuple((-x) % self.p for x in row) for row in reduced)
            reduced = min(reduced, neg)
        object.__setattr__(self, "entries", reduced)
        det = _det_int(reduced) % self.p
        if det != 1:
            # the projective representative may be -M, which for odd
            # dimension flips the determinant sign
            d = len(reduced)
            if not (self.projective and d % 2 == 1 and det == self.p - 1):
                raise ValueError("determinant is not 1 mod %d" % self.p)

    def matmul(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.projective != other.projective:
            raise ValueError("incompatible reductions")
        a, b = self.entries, other.entries
        d = len(a)
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(d)) % self.p for j in range(d))
            for i in range(d)
        )
        return FpMatrix(self.p, prod, self.projective)


def reduce_mod_p(m: Matrix, p: int, projective: bool = False) -> FpMatrix:
    """Reduce an integer matrix mod an odd prime, optionally up to sign."""
    return FpMatrix(p, tuple(tuple(int(x) for x in row) for row in m), projective)


def finite_step_distribution(
    mu: GenMeasure, p: int, projective: bool = False, k: int = 1
) -> dict:
    """Law of the mod-p walk after k steps, as {FpMatrix: Fraction}."""
    dist = step_distribution(mu, rep=symplectic_image, k=k)
    out: dict = {}
    for m, prob in dist.probs.items():
        key = reduce_mod_p(m, p, projective)
        out[key] = out.get(key, Fraction(0)) + prob
    return out


@dataclass(frozen=True)
class FiniteWalkResult:
    p: int
    projective: bool
    group_order: int
    generated: bool
    tv: tuple


def _semigroup_closure(gens: list, cap: int) -> set:
    """Closure of the generators under multiplication, capped at cap elements.

    In a finite group the semigroup generated by a set equals the subgroup it
    generates, so no inverses are needed.
    """
    seen = set(gens)
    frontier = list(seen)
    while frontier and len(seen) <= cap:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x.matmul(g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def finite_walk_tv(
    mu: GenMeasure, p: int, projective: bool = False, steps: int = 200
) -> FiniteWalkResult:
    """Exact total-variation distance to uniform along the mod-p walk.

    The walk lives in Sp(2l, F_p) (or PSp for projective=True) where
    2l = strands - 1 rounded down to even.  The TV sequence starts at step 0
    (distance 1 - 1/|G| from the point mass at the identity).  A breadth
    first closure of the support images decides whether they generate the
    whole group; if not, the TV floor is positive and `generated` is False.
    """
    n = mu.strands
    l = (n - 1) // 2
    if l < 1:
        raise ValueError("need at least 3 strands for a symplectic image")
    order = psp_order(l, p) if projective else sp_order(l, p)
    uniform = Fraction(1, order)

    gens = [
        reduce_mod_p(symplectic_image(word), p, projective) for word, _ in mu.atoms
    ]
    closure = _semigroup_closure(gens, order)
    generated = len(closure) == order

    images, denom, d = _atom_images(mu, symplectic_image)
    fp_images = [
        (reduce_mod_p(_unflatten(img, d), p, projective), wnum) for img, wnum in images
    ]

    ident = reduce_mod_p(identity(d), p, projective)
    dist = {ident: 1}
    tv = []
    for k in range(steps + 1):
        scale = denom ** k
        diff_support = Fraction(0)
        for _, num in dist.items():
            diff_support += abs(Fraction(num, scale) - uniform)
        off_support = (order - len(dist)) * uniform
        tv.append((diff_support + off_support) / 2)
        if k == steps:
            break
        new: dict = {}
        for key, num in dist.items():
            for img, wnum in fp_images:
                nk = key.matmul(img)
                new[nk] = new.get(nk, 0) + num * wnum
        dist = new
    return FiniteWalkResult(
        p=p, projective=projective, group_order=order, generated=generated, tv=tuple(tv)
    )
