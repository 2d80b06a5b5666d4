"""16-bit lattice patterns and the combinatorial PPT / entanglement criteria.

A pattern is a subset of the 4x4 lattice L16, stored as a 16-bit mask
with bit 4*beta + alpha for the point (alpha, beta).  The printable form
is four rows of 'x'/'.' characters with the beta = 3 row on top, so
printed grids read the same way the usual figures do.

All criteria here are pure integer computations; the threshold N/2 is
compared as 2*count <= N so no division ever happens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .pauli import L16, LatticePoint, bit_point, point_bit


class PatternParseError(ValueError):
    """Raised when a pattern string cannot be parsed; carries line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Pattern:
    """An immutable subset of L16."""

    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= 0xFFFF:
            raise ValueError(f"mask out of range: {self.mask:#x}")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_points(points) -> "Pattern":
        mask = 0
        for p in points:
            a, b = p
            if not (0 <= a <= 3 and 0 <= b <= 3):
                raise ValueError(f"lattice point out of range: {p!r}")
            mask |= 1 << point_bit((a, b))
        return Pattern(mask)

    @staticmethod
    def parse(text: str) -> "Pattern":
        """Parse any of the accepted input forms.

        Accepted: a hex mask like "0x1234", a list of "(a,b)" pairs, or a
        4x4 grid of 'x'/'.' rows (top row beta = 3) separated by newlines,
        '/' or ','.
        """
        s = text.strip()
        if not s:
            raise PatternParseError("empty pattern input")
        if s.lower().startswith("0x"):
            if not re.fullmatch(r"0[xX][0-9a-fA-F]{1,4}", s):
                raise PatternParseError(f"bad hex mask {s!r}")
            return Pattern(int(s, 16))
        if "(" in s:
            pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", s)
            leftover = re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)|[,\s]", "", s)
            if not pairs or leftover:
                raise PatternParseError(f"bad point list {s!r}")
            pts = []
            for a, b in pairs:
                if int(a) > 3 or int(b) > 3:
                    raise PatternParseError(f"lattice point ({a},{b}) out of range")
                pts.append((int(a), int(b)))
            return Pattern.from_points(pts)
        rows = [r.strip() for r in re.split(r"[\n/,]", s) if r.strip()]
        if len(rows) != 4:
            raise PatternParseError(f"grid needs 4 rows, got {len(rows)}", line=len(rows))
        mask = 0
        for i, row in enumerate(rows):
            if len(row) != 4:
                raise PatternParseError(f"grid row needs 4 cells, got {len(row)}",
                                        line=i + 1, column=len(row))
            beta = 3 - i
            for alpha, ch in enumerate(row):
                if ch in "xX":
                    mask |= 1 << point_bit((alpha, beta))
                elif ch != ".":
                    raise PatternParseError(f"bad cell {ch!r}", line=i + 1, column=alpha + 1)
        return Pattern(mask)

    # -- views ------------------------------------------------------------

    @property
    def n_points(self) -> int:
        return bin(self.mask).count("1")

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return tuple(bit_point(b) for b in range(16) if self.mask >> b & 1)

    def contains(self, p: LatticePoint) -> bool:
        return bool(self.mask >> point_bit(p) & 1)

    def complement(self) -> "Pattern":
        return Pattern(self.mask ^ 0xFFFF)

    def hex(self) -> str:
        return f"0x{self.mask:04X}"

    def grid_rows(self) -> list[str]:
        rows = []
        for beta in range(3, -1, -1):
            rows.append("".join(
                "x" if self.contains((alpha, beta)) else "." for alpha in range(4)))
        return rows

    def render(self) -> str:
        return "\n".join(self.grid_rows())

    def __iter__(self):
        return iter(self.points)

    def __repr__(self) -> str:
        return f"Pattern({self.hex()})"


@dataclass(frozen=True)
class RowColProfile:
    """Per-row and per-column point counts of a pattern."""

    row_counts: tuple[int, int, int, int]
    col_counts: tuple[int, int, int, int]


def row_col_profile(pattern: Pattern) -> RowColProfile:
    rows = [0, 0, 0, 0]
    cols = [0, 0, 0, 0]
    for (a, b) in pattern.points:
        cols[a] += 1
        rows[b] += 1
    return RowColProfile(tuple(rows), tuple(cols))


def cross_count(pattern: Pattern, p: LatticePoint) -> int:
    """Points of the pattern on the row and column through p, p itself excluded."""
    prof = row_col_profile(pattern)
    a, b = p
    return prof.col_counts[a] + prof.row_counts[b] - 2 * int(pattern.contains(p))


def ppt_combinatorial(pattern: Pattern) -> tuple[bool, LatticePoint | None]:
    """Exact PPT test: every cross count must stay at or below half the size.

    Returns (True, None) when positive under partial transposition, else
    (False, witness) where the witness point has a cross count exceeding
    N/2.  Agrees with the spectral test on every nonempty pattern.
    """
    if pattern.mask == 0:
        raise ValueError("empty pattern")
    n = pattern.n_points
    prof = row_col_profile(pattern)
    for (a, b) in L16:
        count = prof.col_counts[a] + prof.row_counts[b] \
            - 2 * (pattern.mask >> point_bit((a, b)) & 1)
        if 2 * count > n:
            return False, (a, b)
    return True, None


def prop_ppt2_point(pattern: Pattern) -> LatticePoint | None:
    """A point outside the pattern whose row and column meet it exactly once.

    Such a point certifies entanglement of a PPT pattern.  Returns the
    first hit in bit order, or None.
    """
    prof = row_col_profile(pattern)
    for (a, b) in L16:
        if pattern.contains((a, b)):
            continue
        if prof.col_counts[a] + prof.row_counts[b] == 1:
            return (a, b)
    return None


def prop_ppt3_point(pattern: Pattern) -> LatticePoint | None:
    """The refined single-line criterion, indexed through mu, nu plus 2 mod 4.

    For (mu, nu) put a = mu+2 and b = nu+2 (mod 4) and count the pattern
    points on column a and row b, never counting the crossing point
    (a, b) itself, so membership of (a, b) is irrelevant.  A count of
    exactly 1 certifies entanglement of a PPT pattern; returns the first
    (mu, nu) hit in bit order, or None.
    """
    prof = row_col_profile(pattern)
    for (mu, nu) in L16:
        a, b = (mu + 2) % 4, (nu + 2) % 4
        k = prof.col_counts[a] + prof.row_counts[b] \
            - 2 * (pattern.mask >> point_bit((a, b)) & 1)
        if k == 1:
            return (mu, nu)
    return None
