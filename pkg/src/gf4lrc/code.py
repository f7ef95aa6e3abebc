"""Linear codes over GF(2)/GF(4): distance, weight enumerator, duality.

Codeword enumeration walks the message space in binary-reflected Gray order
so each successive codeword costs one row XOR.  Over GF(4) the message is
viewed as a GF(2) bit vector of length 2k (bits 2i, 2i+1 select row i and
w*row i), which keeps the Gray walk binary.  The walk is partitionable: any
split of the message-index range yields partial weight histograms that merge
by addition into the single-pass result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf4
from .errors import BudgetExceeded, NonIntegerResult, RankDeficient
from .matrix import (
    FieldMatrix,
    leading_column,
    lo_mask,
    row_entry,
    row_weight,
    scale_row,
    unpack_row,
)

#: Default cap on enumerated codewords; larger codes fall back to
#: column-dependence search in min_distance and refuse weight_distribution.
DEFAULT_ENUM_BUDGET = 1 << 26

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_COLUMN = "column_dependence"
METHOD_GROUP_RANK = "group_rank"


@dataclass(frozen=True)
class DistanceCertificate:
    """Exact minimum distance with a witness codeword of that weight."""

    d: int
    witness: tuple[int, ...]
    method: str


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by Hamming weight, A_0..A_n."""

    n: int
    k: int
    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("counts must have length n+1")
        if self.counts[0] != 1:
            raise ValueError("A_0 must be 1")
        if sum(self.counts) != self.q**self.k:
            raise ValueError("counts must sum to q^k")

    def distance(self) -> Optional[int]:
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "q": self.q, "A": list(self.counts)}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightDistribution":
        return cls(obj["n"], obj["k"], obj["q"], tuple(obj["A"]))


class LinearCode:
    """An [n, k] linear code holding generator and parity-check matrices."""

    def __init__(self, generator: FieldMatrix, parity_check: FieldMatrix):
        if generator.q != parity_check.q:
            raise ValueError("generator and parity check over different fields")
        if generator.ncols != parity_check.ncols:
            raise ValueError("generator and parity check lengths differ")
        self.q = generator.q
        self.n = generator.ncols
        self.k = generator.nrows
        self.generator = generator
        self.parity_check = parity_check
        if parity_check.nrows != self.n - self.k:
            raise RankDeficient("parity check must have n-k rows")
        if not generator.mat_mul(parity_check.transpose()).is_zero():
            raise ValueError("generator rows are not orthogonal to parity check")
        self._distance: Optional[DistanceCertificate] = None
        self._weights: Optional[WeightDistribution] = None

    # -- construction --------------------------------------------------------

    @classmethod
    def from_generator(cls, generator: FieldMatrix) -> "LinearCode":
        if generator.rank() != generator.nrows:
            raise RankDeficient("generator rows are linearly dependent")
        return cls(generator, generator.nullspace())

    @classmethod
    def from_parity(cls, parity_check: FieldMatrix) -> "LinearCode":
        if parity_check.rank() != parity_check.nrows:
            raise RankDeficient("parity-check rows are linearly dependent")
        return cls(parity_check.nullspace(), parity_check)

    def dual(self) -> "LinearCode":
        return LinearCode(self.parity_check, self.generator)

    @property
    def cached_distance(self) -> Optional[DistanceCertificate]:
        return self._distance

    def params(self) -> tuple[int, int]:
        return (self.n, self.k)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.q}))"

    # -- codeword enumeration --------------------------------------------------

    def codeword_count(self) -> int:
        return self.q**self.k

    def _message_bit_rows(self) -> list[int]:
        rows = []
        for g in self.generator.rows:
            rows.append(g)
            if self.q == 4:
                rows.append(scale_row(4, g, gf4.W, self.generator._lo))
        return rows

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """Codeword for a length-k message vector."""
        packed = self.generator.row_combination(message)
        return unpack_row(self.q, packed, self.n)

    def contains(self, word: Sequence[int]) -> bool:
        vec = FieldMatrix.from_rows(self.q, [list(word)])
        return self.parity_check.mat_mul(vec.transpose()).is_zero()

    def _iter_packed(self, start: int, stop: int, bit_rows: list[int]):
        gray = start ^ (start >> 1)
        cur = 0
        g = gray
        b = 0
        while g:
            if g & 1:
                cur ^= bit_rows[b]
            g >>= 1
            b += 1
        m = start
        yield cur
        while m + 1 < stop:
            m += 1
            cur ^= bit_rows[(m & -m).bit_length() - 1]
            yield cur

    def weight_counts_range(self, start: int, stop: int) -> list[int]:
        """Partial weight histogram over message indices [start, stop).

        Merging partial histograms by elementwise addition over any partition
        of [0, q^k) reproduces the full distribution exactly.
        """
        total = self.codeword_count()
        if not 0 <= start <= stop <= total:
            raise ValueError("index range out of bounds")
        counts = [0] * (self.n + 1)
        if start == stop:
            return counts
        lo = lo_mask(self.n) if self.q == 4 else None
        bit_rows = self._message_bit_rows()
        for packed in self._iter_packed(start, stop, bit_rows):
            counts[row_weight(self.q, packed, lo)] += 1
        return counts

    def weight_distribution(self, budget: int = DEFAULT_ENUM_BUDGET) -> WeightDistribution:
        """Exact weight distribution by full enumeration."""
        if self._weights is not None:
            return self._weights
        total = self.codeword_count()
        if total > budget:
            raise BudgetExceeded(
                f"{total} codewords exceed enumeration budget {budget}"
            )
        counts = self.weight_counts_range(0, total)
        self._weights = WeightDistribution(self.n, self.k, self.q, tuple(counts))
        if self._distance is not None and self._weights.distance() != self._distance.d:
            raise AssertionError("weight distribution contradicts cached distance")
        return self._weights

    # -- minimum distance --------------------------------------------------

    def min_distance(self, budget: int = DEFAULT_ENUM_BUDGET) -> DistanceCertificate:
        """Exact minimum distance with witness.

        Enumerates all q^k codewords when that fits the budget; otherwise
        searches for a smallest dependent column set of the parity check,
        spending at most ``budget`` search nodes.  Raises BudgetExceeded
        (carrying the bracket proven so far) if neither route finishes.
        """
        if self._distance is not None:
            return self._distance
        if self.k == 0:
            raise ValueError("zero-dimensional code has no nonzero codeword")
        if self.codeword_count() <= budget:
            cert = self._min_distance_exhaustive()
        else:
            cert = self._min_distance_columns(budget)
        self._distance = cert
        return cert

    def _min_distance_exhaustive(self) -> DistanceCertificate:
        lo = lo_mask(self.n) if self.q == 4 else None
        bit_rows = self._message_bit_rows()
        best_w = self.n + 1
        best = None
        first = True
        for packed in self._iter_packed(0, self.codeword_count(), bit_rows):
            if first:  # message index 0 is the zero codeword
                first = False
                continue
            w = row_weight(self.q, packed, lo)
            if w < best_w:
                best_w = w
                best = packed
                if w == 1:
                    break
        return DistanceCertificate(
            best_w, unpack_row(self.q, best, self.n), METHOD_EXHAUSTIVE
        )

    def _min_distance_columns(self, node_budget: int) -> DistanceCertificate:
        q = self.q
        h = self.parity_check
        cols = [h.col_packed(j) for j in range(self.n)]
        lo = lo_mask(h.nrows) if q == 4 else None
        nodes = 0
        n = self.n

        def dfs(w: int, start: int, depth: int, basis: list, chosen: list):
            nonlocal nodes
            for idx in range(start, n - (w - depth) + 1):
                nodes += 1
                if nodes > node_budget:
                    raise BudgetExceeded(
                        f"column search exceeded {node_budget} nodes",
                        lower=w,
                        upper=None,
                    )
                r = cols[idx]
                for pos, prow in basis:
                    e = row_entry(q, r, pos)
                    if e:
                        r ^= scale_row(q, prow, e, lo)
                if r == 0:
                    chosen.append(idx)
                    return True
                if depth + 1 < w:
                    pos = leading_column(q, r, lo)
                    lead = row_entry(q, r, pos)
                    if lead != 1:
                        r = scale_row(q, r, gf4.gf4_inv(lead), lo)
                    basis.append((pos, r))
                    chosen.append(idx)
                    if dfs(w, idx + 1, depth + 1, basis, chosen):
                        return True
                    basis.pop()
                    chosen.pop()
            return False

        for w in range(1, self.n + 1):
            chosen: list[int] = []
            if dfs(w, 0, 0, [], chosen):
                return self._certificate_from_columns(chosen)
        raise AssertionError("no dependent column set found in a k>0 code")

    def _certificate_from_columns(self, indices: list[int]) -> DistanceCertificate:
        sub = FieldMatrix.from_cols(
            self.q, [self.parity_check.col_tuple(j) for j in indices]
        )
        kernel = sub.nullspace()
        if kernel.nrows == 0:
            raise AssertionError("dependent column set has trivial kernel")
        coeffs = kernel.row_tuple(0)
        word = [0] * self.n
        for j, c in zip(indices, coeffs):
            word[j] = c
        witness = tuple(word)
        if not self.contains(witness):
            raise AssertionError("column-search witness is not a codeword")
        d = sum(1 for c in witness if c)
        return DistanceCertificate(d, witness, METHOD_COLUMN)


def make_code(
    generator: FieldMatrix | None = None, parity_check: FieldMatrix | None = None
) -> LinearCode:
    """Build a LinearCode from either matrix; the other comes from nullspace."""
    if (generator is None) == (parity_check is None):
        raise ValueError("provide exactly one of generator / parity_check")
    if generator is not None:
        return LinearCode.from_generator(generator)
    return LinearCode.from_parity(parity_check)


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    """K_j(i; n; q) = sum_a (-1)^a (q-1)^(j-a) C(i,a) C(n-i, j-a), exact."""
    if not 0 <= j <= n:
        raise ValueError(f"degree {j} out of range [0, {n}]")
    total = 0
    for a in range(j + 1):
        term = (q - 1) ** (j - a) * math.comb(i, a) * math.comb(n - i, j - a)
        total += -term if a & 1 else term
    return total


def macwilliams(
    dual_weights: WeightDistribution, dual_size: int, n: int, q: int
) -> WeightDistribution:
    """Weight distribution of the primal code from its dual's, exactly.

    A_j = (1/dual_size) * sum_i A_i(dual) K_j(i; n; q).  Raises
    NonIntegerResult when the input cannot be a valid dual distribution.
    """
    if sum(dual_weights.counts) != dual_size:
        raise NonIntegerResult("dual weight counts do not sum to dual size")
    log = 0
    size = dual_size
    while size > 1:
        size, rem = divmod(size, q)
        log += 1
        if rem:
            raise NonIntegerResult(f"dual size {dual_size} is not a power of {q}")
    k = n - log
    counts = []
    for j in range(n + 1):
        total = sum(
            a_i * krawtchouk(j, i, n, q)
            for i, a_i in enumerate(dual_weights.counts)
            if a_i
        )
        value, rem = divmod(total, dual_size)
        if rem or value < 0:
            raise NonIntegerResult(f"transform gives non-integer A_{j}")
        counts.append(value)
    return WeightDistribution(n, k, q, tuple(counts))
