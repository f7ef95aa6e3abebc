"""Dense exact linear algebra over GF(2) and GF(4).

Rows are packed into Python ints: one bit per symbol over GF(2), two bits
per symbol over GF(4) (bit 2j = coordinate on 1, bit 2j+1 = coordinate on w
of column j).  Row addition is XOR in both cases, which keeps row
operations O(1) per machine word regardless of width.

Matrix text format (strict): a header line

    field=<2|4> rows=<r> cols=<c> [kind=...] [n=...] [k=...] [d=...]

followed by r lines of c whitespace-separated symbols from the alphabet
``0 1 w W`` (GF(2) uses only ``0`` and ``1``).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import gf4
from .errors import FieldMismatch, ParseError, ShapeMismatch

_HEADER_EXTRA_KEYS = ("kind", "n", "k", "d")


def lo_mask(ncols: int) -> int:
    """0b...0101 with ncols pairs; selects the low bit of every GF(4) slot."""
    return ((1 << (2 * ncols)) - 1) // 3


def _lo_for(row: int) -> int:
    bits = row.bit_length()
    bits += bits & 1
    return ((1 << bits) - 1) // 3


def pack_row(q: int, symbols: Sequence[int]) -> int:
    row = 0
    if q == 2:
        for j, v in enumerate(symbols):
            if v:
                row |= 1 << j
    else:
        for j, v in enumerate(symbols):
            row |= v << (2 * j)
    return row


def unpack_row(q: int, row: int, ncols: int) -> tuple[int, ...]:
    if q == 2:
        return tuple((row >> j) & 1 for j in range(ncols))
    return tuple((row >> (2 * j)) & 3 for j in range(ncols))


def row_entry(q: int, row: int, j: int) -> int:
    if q == 2:
        return (row >> j) & 1
    return (row >> (2 * j)) & 3


def scale_row(q: int, row: int, scalar: int, lo: int | None = None) -> int:
    """Packed row times a field scalar."""
    if scalar == 0:
        return 0
    if scalar == 1 or q == 2:
        return row
    if lo is None:
        lo = _lo_for(row)
    lo_part = row & lo
    hi_part = (row >> 1) & lo
    if scalar == gf4.W:
        return hi_part | ((lo_part ^ hi_part) << 1)
    return (lo_part ^ hi_part) | (lo_part << 1)


def row_weight(q: int, row: int, lo: int | None = None) -> int:
    """Number of nonzero symbols in a packed row."""
    if q == 2:
        return row.bit_count()
    if lo is None:
        lo = _lo_for(row)
    return ((row | (row >> 1)) & lo).bit_count()


def leading_column(q: int, row: int, lo: int | None = None) -> int:
    """Index of the first (lowest) nonzero symbol; row must be nonzero."""
    if q == 2:
        return (row & -row).bit_length() - 1
    if lo is None:
        lo = _lo_for(row)
    support = (row | (row >> 1)) & lo
    return ((support & -support).bit_length() - 1) // 2


def rows_rank(q: int, rows: Iterable[int], ncols: int) -> int:
    """Rank of packed rows via incremental elimination."""
    lo = lo_mask(ncols) if q == 4 else None
    basis: list[tuple[int, int]] = []  # (pivot column, normalized row)
    for row in rows:
        for col, pivot in basis:
            e = row_entry(q, row, col)
            if e:
                row ^= scale_row(q, pivot, e, lo)
        if row:
            col = leading_column(q, row, lo)
            lead = row_entry(q, row, col)
            if lead != 1:
                row = scale_row(q, row, gf4.gf4_inv(lead), lo)
            basis.append((col, row))
    return len(basis)


class FieldMatrix:
    """Immutable dense matrix over GF(2) or GF(4)."""

    __slots__ = ("q", "nrows", "ncols", "rows", "_lo")

    def __init__(self, q: int, nrows: int, ncols: int, rows: Sequence[int]):
        if q not in (2, 4):
            raise ValueError(f"unsupported field GF({q})")
        if len(rows) != nrows:
            raise ShapeMismatch(f"expected {nrows} rows, got {len(rows)}")
        self.q = q
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)
        self._lo = lo_mask(ncols) if q == 4 else None

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]]) -> "FieldMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        packed = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch("ragged rows")
            for v in r:
                if not 0 <= v < q:
                    raise ValueError(f"symbol {v} invalid over GF({q})")
            packed.append(pack_row(q, r))
        return cls(q, nrows, ncols, packed)

    @classmethod
    def from_cols(cls, q: int, cols: Sequence[Sequence[int]]) -> "FieldMatrix":
        ncols = len(cols)
        nrows = len(cols[0]) if ncols else 0
        if nrows == 0:
            return cls(q, 0, ncols, [])
        rows = [[cols[j][i] for j in range(ncols)] for i in range(nrows)]
        return cls.from_rows(q, rows)

    @classmethod
    def identity(cls, q: int, n: int) -> "FieldMatrix":
        shift = 1 if q == 2 else 2
        return cls(q, n, n, [1 << (shift * i) for i in range(n)])

    @classmethod
    def zeros(cls, q: int, nrows: int, ncols: int) -> "FieldMatrix":
        return cls(q, nrows, ncols, [0] * nrows)

    # -- element access ----------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return row_entry(self.q, self.rows[i], j)

    def row_tuple(self, i: int) -> tuple[int, ...]:
        return unpack_row(self.q, self.rows[i], self.ncols)

    def col_tuple(self, j: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for i in range(self.nrows))

    def col_packed(self, j: int) -> int:
        """Column j packed as a length-nrows vector."""
        return pack_row(self.q, self.col_tuple(j))

    def to_rows(self) -> list[tuple[int, ...]]:
        return [self.row_tuple(i) for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return not any(self.rows)

    # -- algebra -----------------------------------------------------------

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix.from_rows(
            self.q, [[self.entry(i, j) for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def mat_mul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.q != other.q:
            raise FieldMismatch(f"GF({self.q}) times GF({other.q})")
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}"
            )
        out = []
        for i in range(self.nrows):
            acc = 0
            row = self.rows[i]
            for k in range(self.ncols):
                e = row_entry(self.q, row, k)
                if e:
                    acc ^= scale_row(self.q, other.rows[k], e, other._lo)
            out.append(acc)
        return FieldMatrix(self.q, self.nrows, other.ncols, out)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self.mat_mul(other)

    def row_combination(self, coeffs: Sequence[int]) -> int:
        """Packed row equal to sum_i coeffs[i] * row_i."""
        if len(coeffs) != self.nrows:
            raise ShapeMismatch("coefficient count != row count")
        acc = 0
        for c, row in zip(coeffs, self.rows):
            if c:
                acc ^= scale_row(self.q, row, c, self._lo)
        return acc

    def rref(self) -> tuple["FieldMatrix", int, tuple[int, ...]]:
        """Reduced row-echelon form, rank, and pivot columns."""
        rows = list(self.rows)
        pivots = []
        r = 0
        for col in range(self.ncols):
            pivot_row = None
            for i in range(r, len(rows)):
                if row_entry(self.q, rows[i], col):
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            lead = row_entry(self.q, rows[r], col)
            if lead != 1:
                rows[r] = scale_row(self.q, rows[r], gf4.gf4_inv(lead), self._lo)
            for i in range(len(rows)):
                if i == r:
                    continue
                e = row_entry(self.q, rows[i], col)
                if e:
                    rows[i] ^= scale_row(self.q, rows[r], e, self._lo)
            pivots.append(col)
            r += 1
        return FieldMatrix(self.q, self.nrows, self.ncols, rows), r, tuple(pivots)

    def rank(self) -> int:
        return rows_rank(self.q, self.rows, self.ncols)

    def nullspace(self) -> "FieldMatrix":
        """Basis (as rows) of {x : self @ x^T = 0}; has ncols - rank rows."""
        reduced, _, pivots = self.rref()
        pivot_set = set(pivots)
        free_cols = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free_cols:
            vec = [0] * self.ncols
            vec[f] = 1
            for i, p in enumerate(pivots):
                vec[p] = reduced.entry(i, f)
            basis.append(pack_row(self.q, vec))
        return FieldMatrix(self.q, len(basis), self.ncols, basis)

    # -- text format -------------------------------------------------------

    def to_text(self, extras: dict | None = None) -> str:
        header = f"field={self.q} rows={self.nrows} cols={self.ncols}"
        if extras:
            for key in _HEADER_EXTRA_KEYS:
                if key in extras:
                    header += f" {key}={extras[key]}"
        lines = [header]
        for i in range(self.nrows):
            lines.append(
                " ".join(gf4.value_to_symbol(v, self.q) for v in self.row_tuple(i))
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> tuple["FieldMatrix", dict]:
        """Parse the strict matrix format; returns (matrix, extra header fields)."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty matrix text")
        fields: dict[str, str] = {}
        for token in lines[0].split():
            if "=" not in token:
                raise ParseError(f"bad header token {token!r}")
            key, _, value = token.partition("=")
            if key not in ("field", "rows", "cols") + _HEADER_EXTRA_KEYS:
                raise ParseError(f"unknown header key {key!r}")
            if key in fields:
                raise ParseError(f"duplicate header key {key!r}")
            fields[key] = value
        for key in ("field", "rows", "cols"):
            if key not in fields:
                raise ParseError(f"missing header key {key!r}")
        try:
            q = int(fields["field"])
            nrows = int(fields["rows"])
            ncols = int(fields["cols"])
        except ValueError as exc:
            raise ParseError(f"non-integer header value: {exc}") from exc
        if q not in (2, 4):
            raise ParseError(f"unsupported field={q}")
        if len(lines) - 1 != nrows:
            raise ParseError(f"expected {nrows} matrix rows, found {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            syms = ln.split()
            if len(syms) != ncols:
                raise ParseError(f"expected {ncols} symbols, found {len(syms)}")
            try:
                rows.append([gf4.symbol_to_value(s, q) for s in syms])
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        extras = {k: v for k, v in fields.items() if k in _HEADER_EXTRA_KEYS}
        if not rows:
            return cls(q, 0, ncols, []), extras
        return cls.from_rows(q, rows), extras

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.q == other.q
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.q, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"FieldMatrix(GF({self.q}), {self.nrows}x{self.ncols})"


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Standard matrix product; raises ShapeMismatch / FieldMismatch."""
    return a.mat_mul(b)


def rref(m: FieldMatrix) -> tuple[FieldMatrix, int, tuple[int, ...]]:
    return m.rref()


def nullspace(m: FieldMatrix) -> FieldMatrix:
    return m.nullspace()
