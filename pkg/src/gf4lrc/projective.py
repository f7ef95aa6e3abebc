"""Projective geometry over GF(4): point enumeration and cap search.

Points of PG(n, 4) are scalar classes of nonzero vectors in GF(4)^(n+1),
canonically represented with first nonzero coordinate 1 and enumerated in
lexicographic order of the coordinate sequence read last-to-first (symbols
ordered 0 < 1 < w < w^2).  Unit points lead, and the points of the span of
the first few coordinates form a prefix, so every consumer sees the same
column order.

Cap file format: a header line ``pg=<n> q=4 size=<k>`` followed by one
normalized point per line, coordinates whitespace-separated in the
``0 1 w W`` alphabet.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from . import gf4
from .errors import BudgetExceeded, NotACap, ParseError, SearchExhausted
from .matrix import FieldMatrix

Point = tuple[int, ...]


def normalize_point(vec: Sequence[int]) -> Point:
    """Canonical representative: first nonzero coordinate scaled to 1."""
    for c in vec:
        if c:
            inv = gf4.gf4_inv(c)
            return tuple(gf4.gf4_mul(inv, v) for v in vec)
    raise ValueError("zero vector has no projective class")


def point_sort_key(p: Point) -> Point:
    return p[::-1]


def pg_points(n: int) -> list[Point]:
    """All (4^(n+1)-1)/3 points of PG(n, 4) in canonical order."""
    if n < 0:
        raise ValueError("ambient dimension must be >= 0")
    pts = []
    for lead in range(n + 1):
        # first nonzero coordinate at position `lead`, normalized to 1
        for tail in product(range(4), repeat=n - lead):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort(key=point_sort_key)
    return pts


def subspace_points(total_coords: int, offset: int, dim: int) -> list[Point]:
    """Points supported on the coordinate block [offset, offset+dim)."""
    pts = []
    for p in pg_points(dim - 1):
        vec = (0,) * offset + p + (0,) * (total_coords - offset - dim)
        pts.append(vec)
    return pts


def _point_add(p: Point, scalar: int, r: Point) -> tuple[int, ...]:
    return tuple(a ^ gf4.gf4_mul(scalar, b) for a, b in zip(p, r))


def collinear_companions(p: Point, r: Point) -> list[Point]:
    """The three remaining points of the line through distinct points p, r."""
    return [normalize_point(_point_add(p, s, r)) for s in gf4.NONZERO]


@dataclass(frozen=True)
class CapSet:
    """A set of PG(ambient, 4) points with no three collinear."""

    ambient: int
    points: tuple[Point, ...]

    def size(self) -> int:
        return len(self.points)

    def verify(self) -> None:
        """Recheck the cap property; raises NotACap with a violating triple."""
        seen = set()
        for i, p in enumerate(self.points):
            if len(p) != self.ambient + 1:
                raise NotACap(f"point {i} has wrong length", triple=None)
            if normalize_point(p) != p:
                raise NotACap(f"point {i} is not normalized", triple=None)
            if p in seen:
                raise NotACap(f"duplicate point {p}", triple=None)
            seen.add(p)
        for triple in combinations(range(len(self.points)), 3):
            mat = FieldMatrix.from_rows(4, [list(self.points[t]) for t in triple])
            if mat.rank() != 3:
                raise NotACap(f"collinear triple at indices {triple}", triple=triple)

    def to_text(self) -> str:
        lines = [f"pg={self.ambient} q=4 size={len(self.points)}"]
        for p in self.points:
            lines.append(" ".join(gf4.value_to_symbol(v, 4) for v in p))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CapSet":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty cap text")
        header = dict(
            token.partition("=")[::2] for token in lines[0].split() if "=" in token
        )
        if set(header) != {"pg", "q", "size"}:
            raise ParseError(f"bad cap header {lines[0]!r}")
        if header["q"] != "4":
            raise ParseError("only q=4 caps supported")
        try:
            ambient = int(header["pg"])
            size = int(header["size"])
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if len(lines) - 1 != size:
            raise ParseError(f"expected {size} points, found {len(lines) - 1}")
        points = []
        for ln in lines[1:]:
            syms = ln.split()
            if len(syms) != ambient + 1:
                raise ParseError(f"point {ln!r} has wrong coordinate count")
            points.append(tuple(gf4.symbol_to_value(s, 4) for s in syms))
        return cls(ambient, tuple(points))


def _auto_seed(ambient: int, target: int) -> list[Point]:
    """Canonical independent seed points the search may fix.

    Any cap's triples are independent, so every cap of size >= 3 maps under
    the projective group onto one through three unit points; a cap in
    PG(3, 4) of size >= 7 cannot lie in a plane (planar caps max out at the
    6-point hyperoval), so it contains four independent points.
    """
    m = min(target, 3)
    if ambient == 3 and target >= 7:
        m = 4
    m = min(m, ambient + 1)
    seed = []
    for i in range(m):
        vec = [0] * (ambient + 1)
        vec[i] = 1
        seed.append(tuple(vec))
    return seed


def cap_search(
    ambient: int,
    target: int,
    effort: int = 2_000_000,
    seed: Optional[Sequence[Point]] = None,
) -> CapSet:
    """Deterministic lexicographic backtracking search for a `target`-cap.

    Fixes a canonical seed of independent unit points, then extends with
    points in increasing lexicographic order; the first completion found is
    returned (points sorted).  Raises SearchExhausted when the full tree
    proves no such cap exists, BudgetExceeded after `effort` nodes.
    """
    points = pg_points(ambient)
    index = {p: i for i, p in enumerate(points)}
    npts = len(points)
    if target > npts:
        raise SearchExhausted(f"PG({ambient},4) has only {npts} points")
    seed_pts = list(seed) if seed is not None else _auto_seed(ambient, target)
    if len(seed_pts) > target:
        seed_pts = seed_pts[:target]
    chosen = [normalize_point(p) for p in seed_pts]
    forbidden = 0
    for p in chosen:
        forbidden |= 1 << index[p]
    for a, b in combinations(chosen, 2):
        for c in collinear_companions(a, b):
            forbidden |= 1 << index[c]
    nodes = 0

    def extend(chosen: list[Point], start: int, forbidden: int):
        nonlocal nodes
        if len(chosen) == target:
            return list(chosen)
        need = target - len(chosen)
        for idx in range(start, npts - need + 1):
            if forbidden & (1 << idx):
                continue
            nodes += 1
            if nodes > effort:
                raise BudgetExceeded(
                    f"cap search exceeded {effort} nodes; retry with more effort"
                )
            cand = points[idx]
            new_forbidden = forbidden | (1 << idx)
            for p in chosen:
                for c in collinear_companions(p, cand):
                    new_forbidden |= 1 << index[c]
            chosen.append(cand)
            result = extend(chosen, idx + 1, new_forbidden)
            if result is not None:
                return result
            chosen.pop()
        return None

    result = extend(chosen, 0, forbidden)
    if result is None:
        raise SearchExhausted(
            f"no {target}-cap in PG({ambient},4) extends the canonical seed"
        )
    return CapSet(ambient, tuple(sorted(result, key=point_sort_key)))


def bundled_cap_pg3_17() -> CapSet:
    """The shipped 17-point cap in PG(3, 4) (one representative)."""
    text = (
        importlib.resources.files("gf4lrc")
        .joinpath("data/cap_pg3_size17.txt")
        .read_text()
    )
    return CapSet.from_text(text)
