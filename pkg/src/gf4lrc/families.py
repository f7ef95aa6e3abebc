"""Builders for the GF(4) outer codes that feed the concatenation.

Every builder returns a :class:`~gf4lrc.code.LinearCode` over GF(4) and
re-verifies its advertised parameters with an independent distance
computation where that fits the stated budget.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Sequence

from . import gf4
from .code import LinearCode, WeightDistribution, macwilliams
from .errors import (
    InvalidParameters,
    NotADivisor,
    ParseError,
    UnsupportedParameters,
    UnsupportedSubspaceLayout,
)
from .matrix import FieldMatrix
from .projective import CapSet, pg_points, subspace_points

logger = logging.getLogger(__name__)

W, W2 = gf4.W, gf4.W2

# Generators of the four non-trivial GF(4) MDS codes: polynomial evaluation
# at (0, 1, w, w^2) extended by high-coefficient columns.
_MDS_GENERATORS = {
    (4, 2): [[1, 1, 1, 1], [0, 1, W, W2]],
    (5, 2): [[1, 1, 1, 1, 0], [0, 1, W, W2, 1]],
    (5, 3): [[1, 1, 1, 1, 0], [0, 1, W, W2, 0], [0, 1, W2, W, 1]],
    (6, 3): [[1, 1, 1, 1, 0, 0], [0, 1, W, W2, 1, 0], [0, 1, W2, W, 0, 1]],
}


def _verified(code: LinearCode, expect_d: int, budget: int = 1 << 22) -> LinearCode:
    cert = code.min_distance(budget=budget)
    if cert.d != expect_d:
        raise AssertionError(
            f"builder produced d={cert.d}, expected {expect_d} for [{code.n},{code.k}]"
        )
    return code


def mds_rs(n1: int, k1: int) -> LinearCode:
    """An [n1, k1, n1-k1+1] MDS code over GF(4).

    Supports the four non-trivial parameter pairs realizable over GF(4)
    ((4,2), (5,2), (5,3), (6,3)), the trivial full space k1 = n1, and the
    single-parity case k1 = n1 - 1.
    """
    if k1 == n1 and n1 >= 1:
        code = LinearCode.from_generator(FieldMatrix.identity(4, n1))
        return _verified(code, 1, budget=1 << 16)
    if k1 == n1 - 1 and n1 >= 2:
        rows = [[0] * n1 for _ in range(k1)]
        for i in range(k1):
            rows[i][i] = 1
            rows[i][n1 - 1] = 1
        code = LinearCode.from_generator(FieldMatrix.from_rows(4, rows))
        return _verified(code, 2, budget=1 << 16)
    gen = _MDS_GENERATORS.get((n1, k1))
    if gen is None:
        raise UnsupportedParameters(
            f"no [{n1},{k1},{n1 - k1 + 1}] MDS code over GF(4) is supported"
        )
    code = LinearCode.from_generator(FieldMatrix.from_rows(4, gen))
    return _verified(code, n1 - k1 + 1)


def hamming4(t: int) -> LinearCode:
    """The GF(4) Hamming code with t parity checks: [(4^t-1)/3, n-t, 3].

    Parity-check columns are the points of PG(t-1, 4) in canonical order.
    """
    if t < 2:
        raise InvalidParameters("hamming4 requires t >= 2")
    cols = pg_points(t - 1)
    parity = FieldMatrix.from_cols(4, [list(p) for p in cols])
    code = LinearCode.from_parity(parity)
    return _verified(code, 3, budget=1 << 16)


def hexacode() -> LinearCode:
    """The [6, 3, 4] code with parity check [I | A], A circulant on (1, w, w)."""
    parity = FieldMatrix.from_rows(
        4,
        [
            [1, 0, 0, 1, W, W],
            [0, 1, 0, W, 1, W],
            [0, 0, 1, W, W, 1],
        ],
    )
    return _verified(LinearCode.from_parity(parity), 4)


def hamming4_weights_closed_form(t: int) -> WeightDistribution:
    """Weight distribution of hamming4(t) in closed form.

    The dual has 4^t - 1 nonzero codewords, all of weight 4^(t-1); the
    Krawtchouk-form transform of that two-point distribution is exact.
    """
    if t < 2:
        raise InvalidParameters("hamming4 requires t >= 2")
    n1 = (4**t - 1) // 3
    counts = [0] * (n1 + 1)
    counts[0] = 1
    counts[4 ** (t - 1)] = 4**t - 1
    dual = WeightDistribution(n1, t, 4, tuple(counts))
    return macwilliams(dual, 4**t, n1, 4)


def macdonald(m: int, u: int, t: int = 1) -> LinearCode:
    """Griesmer-meeting code from t copies of PG(m-1,4) minus one subspace copy.

    Generator columns are t copies of every point, with one copy removed for
    each point of the canonical (u-1)-subspace (span of the first u
    coordinates).  Lengths with non-integral (t*4^m - 4^u)/3 are rejected.
    """
    if not 1 <= u <= m - 1:
        raise InvalidParameters(f"macdonald needs 1 <= u <= m-1, got u={u}, m={m}")
    if t not in (1, 2, 3, 4):
        raise InvalidParameters(f"macdonald multiplicity t={t} not in 1..4")
    if (t * 4**m - 4**u) % 3:
        raise InvalidParameters(
            f"({t}*4^{m} - 4^{u})/3 is not an integer; no such length"
        )
    removed = set(subspace_points(m, 0, u))
    cols: list[Sequence[int]] = []
    for p in pg_points(m - 1):
        cols.extend([list(p)] * (t - 1 if p in removed else t))
    code = LinearCode.from_generator(FieldMatrix.from_cols(4, cols))
    return _verified(code, t * 4 ** (m - 1) - 4 ** (u - 1))


def solomon_stiffler(t: int, dims: Sequence[int]) -> LinearCode:
    """Griesmer-meeting code: all PG(t-1,4) points minus disjoint subspaces.

    ``dims`` lists the deleted subspace dimensions u_1 >= ... >= u_h >= 1
    (at most three of any value); the subspaces are realized on consecutive
    disjoint coordinate blocks, which requires sum(dims) <= t.
    """
    dims = list(dims)
    if any(u < 1 for u in dims):
        raise InvalidParameters("subspace dims must be >= 1")
    if any(dims[i] < dims[i + 1] for i in range(len(dims) - 1)):
        raise InvalidParameters("subspace dims must be non-increasing")
    if dims and dims[0] >= t:
        raise InvalidParameters("largest subspace dim must be < t")
    if any(dims.count(v) > 3 for v in set(dims)):
        raise InvalidParameters("at most three subspaces may share a dimension")
    if sum(dims) > t:
        raise UnsupportedSubspaceLayout(
            f"dims {dims} sum to {sum(dims)} > {t}; no disjoint coordinate blocks"
        )
    removed = set()
    offset = 0
    for u in dims:
        removed.update(subspace_points(t, offset, u))
        offset += u
    cols = [list(p) for p in pg_points(t - 1) if p not in removed]
    code = LinearCode.from_generator(FieldMatrix.from_cols(4, cols))
    return _verified(code, 4 ** (t - 1) - sum(4 ** (u - 1) for u in dims))


def cap_code(cap: CapSet, budget: int = 1 << 22) -> LinearCode:
    """Code whose parity-check columns are the cap points; d >= 4 by capness."""
    cap.verify()
    parity = FieldMatrix.from_cols(4, [list(p) for p in cap.points])
    code = LinearCode.from_parity(parity)
    cert = code.min_distance(budget=budget)
    if cert.d < 4:
        raise AssertionError("cap code has d < 4; cap verification is broken")
    return code


# -- GF(4) polynomials (ascending coefficient lists) -------------------------


def poly_trim(p: Sequence[int]) -> list[int]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of GF(4)[x] division."""
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(a)
    if len(rem) < len(b):
        return [], rem
    quot = [0] * (len(rem) - len(b) + 1)
    inv_lead = gf4.gf4_inv(b[-1])
    for shift in range(len(rem) - len(b), -1, -1):
        coeff = gf4.gf4_mul(rem[shift + len(b) - 1], inv_lead)
        if coeff:
            quot[shift] = coeff
            for i, bc in enumerate(b):
                rem[shift + i] ^= gf4.gf4_mul(coeff, bc)
    return quot, poly_trim(rem)


def cyclic4(n: int, gen_poly: Sequence[int]) -> LinearCode:
    """Cyclic code of length n generated by gen_poly (ascending coefficients).

    gen_poly must divide x^n - 1 over GF(4); the generator matrix holds the
    n - deg(g) cyclic shifts of the coefficient vector.
    """
    g = poly_trim(gen_poly)
    if not g:
        raise InvalidParameters("zero generator polynomial")
    deg = len(g) - 1
    if deg >= n:
        raise InvalidParameters(f"deg(g)={deg} must be < n={n}")
    modulus = [1] + [0] * (n - 1) + [1]  # x^n - 1 = x^n + 1 in characteristic 2
    _, rem = poly_divmod(modulus, g)
    if rem:
        raise NotADivisor(f"generator polynomial does not divide x^{n} - 1")
    k = n - deg
    rows = []
    for i in range(k):
        row = [0] * n
        for j, c in enumerate(g):
            row[i + j] = c
        rows.append(row)
    return LinearCode.from_generator(FieldMatrix.from_rows(4, rows))


def ingest(path: str | Path, verify_budget: int = 1 << 20) -> LinearCode:
    """Load a code from a matrix file with a ``kind=generator|parity`` header.

    Advertised n/k/d header values are checked against computed parameters;
    disagreements are logged, not fatal.  Distance verification is skipped
    (and logged) when it does not fit ``verify_budget``.
    """
    text = Path(path).read_text()
    mat, extras = FieldMatrix.from_text(text)
    kind = extras.get("kind")
    if kind == "generator":
        code = LinearCode.from_generator(mat)
    elif kind == "parity":
        code = LinearCode.from_parity(mat)
    else:
        raise ParseError(f"header must carry kind=generator|parity, got {kind!r}")
    for key, actual in (("n", code.n), ("k", code.k)):
        if key in extras and int(extras[key]) != actual:
            logger.warning(
                "%s: advertised %s=%s but computed %s", path, key, extras[key], actual
            )
    if "d" in extras:
        advertised = int(extras["d"])
        try:
            cert = code.min_distance(budget=verify_budget)
        except Exception as exc:  # distance may be out of reach of the budget
            logger.warning("%s: advertised d=%s unverified (%s)", path, advertised, exc)
        else:
            if cert.d != advertised:
                logger.warning(
                    "%s: advertised d=%s but computed d=%s", path, advertised, cert.d
                )
    return code
