"""Concatenation of a GF(4) outer code with the fixed [3,2,2] inner code.

A GF(4) symbol a with basis coordinates (x0, x1) encodes to the inner
codeword (x0+x1, x0, x1), so every nonzero symbol occupies exactly two of
its group's three binary coordinates.  The assembled parity check has the
disjoint-repair-group block form: one all-ones row per group on top, and
below it each group contributes the columns (0, e1, e2) where e1, e2 are
the GF(2) expansions of the outer parity-check column and w times it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from . import gf4
from .code import (
    DEFAULT_ENUM_BUDGET,
    METHOD_GROUP_RANK,
    DistanceCertificate,
    LinearCode,
    WeightDistribution,
)
from .errors import FieldMismatch, Mismatch, ParseError, SubsetBudgetExceeded
from .matrix import FieldMatrix, pack_row, row_entry, rows_rank

#: Default cap on repair-group subsets examined by the distance certifier.
DEFAULT_SUBSET_BUDGET = 10_000_000


@dataclass(frozen=True)
class InnerCode:
    """The fixed [3,2,2] binary inner code and its encoding context."""

    generator: tuple[tuple[int, ...], ...]
    parity: tuple[int, ...]
    right_inverse: tuple[tuple[int, ...], ...]  # Q with Q * generator^T = I

    def encode_symbol(self, a: int) -> tuple[int, int, int]:
        """Inner codeword for one GF(4) symbol; nonzero symbols get weight 2."""
        x0, x1 = gf4.g_map(a)
        return (x0 ^ x1, x0, x1)


INNER = InnerCode(
    generator=((1, 1, 0), (1, 0, 1)),
    parity=(1, 1, 1),
    right_inverse=((0, 1, 0), (0, 0, 1)),
)


class BinaryLrc:
    """A binary code with disjoint 3-coordinate repair groups (locality 2)."""

    def __init__(
        self,
        code: LinearCode,
        groups: Sequence[tuple[int, int, int]],
        e_vectors: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
        d: Optional[int] = None,
        outer: Optional[LinearCode] = None,
    ):
        if code.q != 2:
            raise FieldMismatch("BinaryLrc requires a GF(2) code")
        self.code = code
        self.ell = len(groups)
        self.u = code.n - code.k - self.ell
        self.groups = tuple(tuple(g) for g in groups)
        self.e_vectors = tuple((tuple(a), tuple(b)) for a, b in e_vectors)
        self.d = d
        self.outer = outer
        self._validate()

    def _validate(self) -> None:
        if self.code.n != 3 * self.ell:
            raise ValueError("length must be 3 * group count")
        if self.u < 0:
            raise ValueError("negative auxiliary row count")
        seen: set[int] = set()
        for g in self.groups:
            if len(g) != 3:
                raise ValueError("groups must have exactly 3 coordinates")
            seen.update(g)
        if seen != set(range(self.code.n)):
            raise ValueError("groups must partition the coordinates")
        if len(self.e_vectors) != self.ell:
            raise ValueError("one e-vector pair required per group")
        h = self.code.parity_check
        for i, (a, b, c) in enumerate(self.groups):
            row = h.rows[i]
            support = {j for j in range(self.code.n) if (row >> j) & 1}
            if support != {a, b, c}:
                raise ValueError(f"parity row {i} is not the group-{i} parity")
            e1, e2 = self.e_vectors[i]
            for rb in range(self.u):
                if h.entry(self.ell + rb, a):
                    raise ValueError(f"lower block under group {i} position 0 not zero")
                if h.entry(self.ell + rb, b) != e1[rb] or h.entry(self.ell + rb, c) != e2[rb]:
                    raise ValueError(f"e-vectors of group {i} disagree with the parity check")

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def r(self) -> int:
        return 2

    def params(self) -> tuple[int, int, Optional[int], int]:
        return (self.n, self.k, self.d, 2)

    def __repr__(self) -> str:
        return f"BinaryLrc([{self.n},{self.k},{self.d};2], ell={self.ell})"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "r": 2,
            "ell": self.ell,
            "u": self.u,
            "groups": [list(g) for g in self.groups],
            "H": self.code.parity_check.to_text(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BinaryLrc":
        h, _ = FieldMatrix.from_text(obj["H"])
        code = LinearCode.from_parity(h)
        groups = [tuple(g) for g in obj["groups"]]
        ell = len(groups)
        u = code.n - code.k - ell
        e_vectors = []
        for i, g in enumerate(groups):
            e1 = tuple(h.entry(ell + b, g[1]) for b in range(u))
            e2 = tuple(h.entry(ell + b, g[2]) for b in range(u))
            e_vectors.append((e1, e2))
        lrc = cls(code, groups, e_vectors, d=obj.get("d"))
        if obj.get("n") != lrc.n or obj.get("k") != lrc.k:
            raise ParseError("stored n/k disagree with the parity-check matrix")
        return lrc


def concatenate(outer: LinearCode) -> BinaryLrc:
    """Concatenate a GF(4) outer code with the [3,2,2] inner code.

    Produces the [3*n1, 2*k1, 2*d1; r=2] code whose codewords are the
    symbolwise inner encodings of outer codewords.  The distance field is
    filled from the outer code's cached distance certificate when present.
    """
    if outer.q != 4:
        raise FieldMismatch("outer code must be over GF(4)")
    n1, k1 = outer.n, outer.k
    ell, u = n1, 2 * (n1 - k1)
    n = 3 * n1
    rows = []
    for i in range(ell):
        rows.append([1 if j // 3 == i else 0 for j in range(n)])
    e_vectors = []
    cols_e1 = []
    cols_e2 = []
    for i in range(ell):
        h_col = outer.parity_check.col_tuple(i)
        e1 = gf4.vector_map(h_col)
        e2 = gf4.vector_map(tuple(gf4.gf4_mul(gf4.W, c) for c in h_col))
        e_vectors.append((e1, e2))
        cols_e1.append(e1)
        cols_e2.append(e2)
    for b in range(u):
        row = [0] * n
        for i in range(ell):
            row[3 * i + 1] = cols_e1[i][b]
            row[3 * i + 2] = cols_e2[i][b]
        rows.append(row)
    parity = FieldMatrix.from_rows(2, rows)
    code = LinearCode.from_parity(parity)
    cached = outer.cached_distance
    d = 2 * cached.d if cached is not None else None
    groups = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(ell)]
    return BinaryLrc(code, groups, e_vectors, d=d, outer=outer)


def encode_outer_word(word: Sequence[int]) -> tuple[int, ...]:
    """Symbolwise inner encoding of a GF(4) word."""
    out: list[int] = []
    for a in word:
        out.extend(INNER.encode_symbol(a))
    return tuple(out)


def group_subspaces(lrc: BinaryLrc) -> list[list[tuple[int, ...]]]:
    """Per group, a basis of the span of its two lower-block columns."""
    bases = []
    for e1, e2 in lrc.e_vectors:
        basis: list[tuple[int, ...]] = []
        packed: list[int] = []
        for vec in (e1, e2):
            p = pack_row(2, vec)
            if rows_rank(2, packed + [p], lrc.u) > len(packed):
                basis.append(vec)
                packed.append(p)
        bases.append(basis)
    return bases


def certify_distance(
    lrc: BinaryLrc, subset_budget: int = DEFAULT_SUBSET_BUDGET
) -> DistanceCertificate:
    """Exact distance from repair-group subspace ranks.

    The distance is 2s where s is the smallest number of groups whose 2s
    lower-block columns are dependent; the certificate carries a weight-2s
    codeword built from one deficient subset.  All subsets of smaller sizes
    are enumerated to prove the lower bound.  Subsets are visited in
    lexicographic order, so the reported witness is the least deficient
    subset and the result does not depend on how the range is partitioned.
    """
    u = lrc.u
    pairs = [(pack_row(2, e1), pack_row(2, e2)) for e1, e2 in lrc.e_vectors]
    nodes = 0
    for s in range(1, lrc.ell + 1):
        for subset in combinations(range(lrc.ell), s):
            nodes += 1
            if nodes > subset_budget:
                raise SubsetBudgetExceeded(
                    f"group-subset enumeration exceeded {subset_budget}",
                    lower=2 * (s - 1) + 2,
                    upper=lrc.d,
                )
            vecs = []
            for i in subset:
                vecs.extend(pairs[i])
            if rows_rank(2, vecs, u) < 2 * s:
                return _certificate_from_deficient_subset(lrc, subset)
    raise AssertionError("no deficient group subset in a k>0 code")


def _certificate_from_deficient_subset(
    lrc: BinaryLrc, subset: tuple[int, ...]
) -> DistanceCertificate:
    cols = []
    for i in subset:
        e1, e2 = lrc.e_vectors[i]
        cols.append(list(e1))
        cols.append(list(e2))
    kernel = FieldMatrix.from_cols(2, cols).nullspace()
    if kernel.nrows == 0:
        raise AssertionError("deficient subset has independent columns")
    coeffs = kernel.row_tuple(0)
    word = [0] * lrc.n
    # Per group, the coefficient pair is a GF(4) symbol selecting which two
    # of the three group columns sum to the dependency contribution.
    pair_to_positions = {1: (0, 1), gf4.W: (0, 2), gf4.W2: (1, 2)}
    for j, i in enumerate(subset):
        alpha = gf4.g_unmap((coeffs[2 * j], coeffs[2 * j + 1]))
        if alpha == 0:
            raise AssertionError("dependency skips a group; smaller subset missed")
        for pos in pair_to_positions[alpha]:
            word[lrc.groups[i][pos]] = 1
    witness = tuple(word)
    if not lrc.code.contains(witness):
        raise AssertionError("group-rank witness is not a codeword")
    return DistanceCertificate(2 * len(subset), witness, METHOD_GROUP_RANK)


@dataclass(frozen=True)
class CoverageReport:
    """Per-coordinate repair coverage by low-weight dual codewords."""

    r: int
    covering: tuple[Optional[tuple[int, ...]], ...]
    ok: bool

    def uncovered(self) -> list[int]:
        return [i for i, c in enumerate(self.covering) if c is None]


def locality_check(
    code: LinearCode | BinaryLrc, r: int, budget: int = DEFAULT_ENUM_BUDGET
) -> CoverageReport:
    """Check that every coordinate is covered by a dual word of weight <= r+1.

    For a BinaryLrc with r >= 2 the group parity rows cover structurally;
    otherwise the dual code is enumerated within budget.
    """
    if isinstance(code, BinaryLrc):
        if r >= 2:
            covering: list[Optional[tuple[int, ...]]] = [None] * code.n
            for i, g in enumerate(code.groups):
                row = code.code.parity_check.row_tuple(i)
                for pos in g:
                    covering[pos] = row
            return CoverageReport(r, tuple(covering), True)
        code = code.code
    dual = code.dual()
    total = dual.codeword_count()
    if total > budget:
        from .errors import BudgetExceeded

        raise BudgetExceeded(f"dual enumeration of {total} words exceeds {budget}")
    covering = [None] * code.n
    remaining = code.n
    bit_rows = dual._message_bit_rows()
    first = True
    for packed in dual._iter_packed(0, total, bit_rows):
        if first:
            first = False
            continue
        word = [row_entry(code.q, packed, j) for j in range(code.n)]
        support = [j for j, v in enumerate(word) if v]
        if not 0 < len(support) <= r + 1:
            continue
        for j in support:
            if covering[j] is None:
                covering[j] = tuple(word)
                remaining -= 1
        if remaining == 0:
            break
    return CoverageReport(r, tuple(covering), remaining == 0)


def lrc_weights_from_outer(outer_weights: WeightDistribution) -> WeightDistribution:
    """Weight distribution of the concatenation: A'_{2j} = A_j, odd counts 0."""
    n1 = outer_weights.n
    counts = [0] * (3 * n1 + 1)
    for j, a in enumerate(outer_weights.counts):
        counts[2 * j] = a
    return WeightDistribution(3 * n1, 2 * outer_weights.k, 2, tuple(counts))


def weight_map_check(
    outer: LinearCode, lrc: BinaryLrc, budget: int = DEFAULT_ENUM_BUDGET
) -> bool:
    """Verify A_{2j}(concatenation) = A_j(outer) with all odd counts zero.

    Both distributions are enumerated exhaustively; a Mismatch carrying the
    first differing weight index signals an implementation bug.
    """
    wo = outer.weight_distribution(budget)
    wl = lrc.code.weight_distribution(budget)
    expected = lrc_weights_from_outer(wo)
    for i in range(lrc.n + 1):
        if wl.counts[i] != expected.counts[i]:
            raise Mismatch(
                f"A_{i} = {wl.counts[i]} but the outer distribution implies "
                f"{expected.counts[i]}",
                index=i,
            )
    return True
