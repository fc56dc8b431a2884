"""Reduced Burau representation of the braid groups.

For B(n) the representation has degree m = n - 1.  The generator sigma_i
acts as the identity except on row r = m - i (0-based):

    row r:  (r, r-1) = -1,   (r, r) = -t,   (r, r+1) = -t

with out-of-range entries omitted.  Words act left to right, so
rho(ab) = rho(a) rho(b) and the matrix of a word is the product of the
generator matrices in word order.

At t = -1 every generator image is an integer transvection preserving the
antisymmetric tridiagonal form J (J[i][i+1] = 1, J[i+1][i] = -1).  For an
even number of strands J is degenerate with one radical line, fixed
pointwise by the image; quotienting by it gives a genuinely symplectic
representation one dimension down.
"""

from __future__ import annotations

from fractions import Fraction

from .braid import BraidWord
from .laurent import ONE, LaurentPoly, T
from .linalg import Matrix, det_fraction, identity, mat_mul, mat_transpose

_T_INV = LaurentPoly.t_power(-1)


def burau_generator(n: int, i: int, inverse: bool = False) -> Matrix:
    """Image of sigma_i (or its inverse) in B(n), entries LaurentPoly."""
    m = n - 1
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    rows = [[ONE if a == b else LaurentPoly.const(0) for b in range(m)] for a in range(m)]
    r = m - i
    if inverse:
        if r - 1 >= 0:
            rows[r][r - 1] = -_T_INV
        rows[r][r] = -_T_INV
        if r + 1 < m:
            rows[r][r + 1] = -ONE
    else:
        if r - 1 >= 0:
            rows[r][r - 1] = -ONE
        rows[r][r] = -T
        if r + 1 < m:
            rows[r][r + 1] = -T
    return tuple(tuple(row) for row in rows)


def burau_matrix(word: BraidWord) -> Matrix:
    """Burau matrix of a braid word over Z[t, 1/t]."""
    n = word.strands
    out = identity(n - 1, one=ONE, zero=LaurentPoly.const(0))
    for g in word.letters:
        out = mat_mul(out, burau_generator(n, abs(g), inverse=g < 0))
    return out


def burau_generator_minus1(n: int, i: int, inverse: bool = False) -> Matrix:
    """Integer image of sigma_i at t = -1."""
    m = n - 1
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    rows = [[1 if a == b else 0 for b in range(m)] for a in range(m)]
    r = m - i
    if inverse:
        if r - 1 >= 0:
            rows[r][r - 1] = 1
        rows[r][r] = 1
        if r + 1 < m:
            rows[r][r + 1] = -1
    else:
        if r - 1 >= 0:
            rows[r][r - 1] = -1
        rows[r][r] = 1
        if r + 1 < m:
            rows[r][r + 1] = 1
    return tuple(tuple(row) for row in rows)


def burau_minus1(word: BraidWord) -> Matrix:
    """Integer Burau matrix at t = -1 (product in word order)."""
    n = word.strands
    out = identity(n - 1)
    for g in word.letters:
        out = mat_mul(out, burau_generator_minus1(n, abs(g), inverse=g < 0))
    return out


def burau_eval(word: BraidWord, value) -> Matrix:
    """Burau matrix with t specialised to a nonzero rational value."""
    value = Fraction(value)
    if value == 0:
        raise ValueError("t = 0 is not in the domain of the representation")
    poly = burau_matrix(word)
    return tuple(tuple(p.evaluate(value) for p in row) for row in poly)


def intersection_form(m: int) -> Matrix:
    """Antisymmetric tridiagonal form J on Z^m preserved at t = -1."""
    rows = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return tuple(tuple(row) for row in rows)


def is_form_preserving(matrix: Matrix, form: Matrix | None = None) -> bool:
    """Whether matrix^T J matrix == J."""
    if form is None:
        form = intersection_form(len(matrix))
    lhs = mat_mul(mat_mul(mat_transpose(matrix), form), matrix)
    return lhs == tuple(tuple(row) for row in form)


def radical_vector(m: int) -> tuple[int, ...]:
    """Spanning vector (1, 0, 1, ..., 0, 1) of the radical of J, odd m only."""
    if m % 2 == 0:
        raise ValueError("J is nondegenerate when m is even")
    return tuple(1 if i % 2 == 0 else 0 for i in range(m))


def symplectic_quotient(matrix: Matrix) -> Matrix:
    """Quotient of a J-preserving integer matrix by the radical line.

    Defined for odd m (even strand count).  Coordinates are reduced modulo
    the radical vector k by v -> v - v[m-1] * k, keeping coordinates
    0..m-2; the result preserves the nondegenerate top-left block of J.
    """
    m = len(matrix)
    k = radical_vector(m)
    cols = []
    for j in range(m - 1):
        col = [matrix[i][j] for i in range(m)]
        last = col[m - 1]
        red = [c - last * ki for c, ki in zip(col, k)]
        cols.append(red[: m - 1])
    return tuple(tuple(cols[j][i] for j in range(m - 1)) for i in range(m - 1))


def symplectic_image(word: BraidWord) -> Matrix:
    """Image of the word in Sp(2l, Z).

    For an odd strand count this is burau_minus1 itself (J nondegenerate,
    m = 2l); for an even count the radical line is quotiented away first.
    """
    m = burau_minus1(word)
    if word.strands % 2 == 0:
        return symplectic_quotient(m)
    return m


def _cyclotomic_like(n: int) -> LaurentPoly:
    """1 + t + ... + t^(n-1)."""
    out = LaurentPoly.const(0)
    for e in range(n):
        out = out + LaurentPoly.t_power(e)
    return out


def alexander_poly(word: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure of the word.

    Computed as det(B_t(word) - I) / (1 + t + ... + t^(n-1)), then
    normalised: exponents centred so p(t) matches p(1/t) up to the
    component-count sign, and overall sign fixed by p(1) > 0 (falling back
    to a positive leading coefficient when p(1) = 0).
    """
    n = word.strands
    b = burau_matrix(word)
    delta = mat_sub_identity_det(b)
    if delta.is_zero():
        return LaurentPoly.const(0)
    quot = delta.divide_exact(_cyclotomic_like(n))
    lo, hi = quot.min_exp(), quot.max_exp()
    centred = quot.shift(-((lo + hi) // 2))
    at_one = centred.evaluate(1)
    if at_one != 0:
        return -centred if at_one < 0 else centred
    lead = centred.coeffs[centred.max_exp()]
    return -centred if lead < 0 else centred


def mat_sub_identity_det(b: Matrix) -> LaurentPoly:
    """det(b - I) for a LaurentPoly matrix."""
    from .linalg import det_ring

    d = len(b)
    shifted = tuple(
        tuple(b[i][j] - (ONE if i == j else 0) for j in range(d)) for i in range(d)
    )
    out = det_ring(shifted)
    return out if isinstance(out, LaurentPoly) else LaurentPoly.const(out)


def alexander_at_minus1(word: BraidWord) -> int:
    """det(B_{-1}(word) - I), the Alexander value at t = -1 up to sign.

    Only defined for an odd strand count; for even n the reduced Burau
    matrix at t = -1 has the radical as eigenspace, so det(B - I) = 0 and
    the determinant carries no information.
    """
    n = word.strands
    if n % 2 == 0:
        raise ValueError("determinant at t = -1 degenerates for even strand count")
    m = burau_minus1(word)
    d = len(m)
    shifted = tuple(
        tuple(m[i][j] - (1 if i == j else 0) for j in range(d)) for i in range(d)
    )
    det = det_fraction(shifted)
    return int(det)
