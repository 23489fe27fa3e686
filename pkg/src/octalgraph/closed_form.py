"""Closed forms for the 0.33 game on paths, cycles, subdivided stars and bistars.

Every arm length only matters modulo 3, so a star reduces to a count of
length-1 arms and length-2 arms.  Star values come from a small table built
by recursion over those counts; bistar values come from two class-product
tables indexed by equivalence classes of the two stars (one table for a
middle path of one edge, one for two edges).
"""

from __future__ import annotations

import enum
import re
import threading
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .graph import BistarSpec, StarSpec

__all__ = [
    "ReducedStar",
    "ClassSim1",
    "ClassSim2",
    "path_grundy",
    "cycle_grundy",
    "reduce_star",
    "star_grundy",
    "star_table",
    "star_table_row",
    "row_matches_pattern",
    "classify_sim1",
    "classify_sim2",
    "class_value",
    "table1_lookup",
    "table2_lookup",
    "bistar_grundy",
    "STAR_REFERENCE_ROWS",
]


def path_grundy(n: int) -> int:
    if n < 0:
        raise InvalidArgumentError("path length must be nonnegative")
    return n % 3


def cycle_grundy(n: int) -> int:
    if n < 3:
        raise InvalidArgumentError(f"a simple cycle needs at least 3 vertices, got {n}")
    return n % 3


# -- reduction ----------------------------------------------------------------------


@dataclass(frozen=True)
class ReducedStar:
    """A star after every arm length is taken mod 3.

    ``kind`` is ``"empty"``, ``"path"`` (``size`` vertices, 1..5) or
    ``"star"`` (``ones`` arms of length 1 and ``twos`` of length 2, at least
    three arms in total).
    """

    kind: str
    size: int = 0
    ones: int = 0
    twos: int = 0

    @property
    def paths(self) -> int:
        return self.ones + self.twos

    def __str__(self):
        if self.kind == "empty":
            return "empty"
        if self.kind == "path":
            return f"P_{self.size}"
        return "S_{" + ",".join(["1"] * self.ones + ["2"] * self.twos) + "}"


EMPTY_STAR = ReducedStar("empty")


def reduce_star(spec: StarSpec) -> ReducedStar:
    if not spec.present:
        return EMPTY_STAR
    arms = [a % 3 for a in spec.arms if a % 3]
    if len(arms) <= 2:
        return ReducedStar("path", size=1 + sum(arms))
    ones = arms.count(1)
    return ReducedStar("star", ones=ones, twos=len(arms) - ones)


# -- star table ---------------------------------------------------------------------


class _StarTable:
    """Rows ``k`` (number of arms) by columns ``j`` (arms of length 2), ``j <= k``.

    Rows 0..2 are paths on ``1 + k + j`` vertices.  From row 3 on the only
    moves are: drop a length-1 arm, shorten a length-2 arm, or drop a
    length-2 arm.  Grown on demand under a lock; rows are never modified.
    """

    def __init__(self):
        self._rows: list = []
        self._lock = threading.Lock()

    def _grow(self, k_max: int) -> None:
        rows = self._rows
        for k in range(len(rows), k_max + 1):
            if k <= 2:
                rows.append(tuple((1 + k + j) % 3 for j in range(k + 1)))
                continue
            row: list = []
            for j in range(k + 1):
                opts = set()
                if k - j >= 1:
                    opts.add(rows[k - 1][j])
                if j >= 1:
                    opts.add(row[j - 1])
                    opts.add(rows[k - 1][j - 1])
                m = 0
                while m in opts:
                    m += 1
                row.append(m)
            rows.append(tuple(row))

    def row(self, k: int) -> tuple:
        if k >= len(self._rows):
            with self._lock:
                self._grow(k)
        return self._rows[k]

    def value(self, k: int, j: int) -> int:
        if not 0 <= j <= k:
            raise InvalidArgumentError(f"need 0 <= j <= k, got k={k}, j={j}")
        return self.row(k)[j]


_TABLE = _StarTable()

# Hand-entered reference values for rows 0..5 (21 entries); the recursion must reproduce them.
STAR_REFERENCE_ROWS = {
    0: (1,),
    1: (2, 0),
    2: (0, 1, 2),
    3: (1, 2, 0, 1),
    4: (0, 3, 1, 2, 0),
    5: (1, 2, 0, 3, 1, 2),
}

_ODD_ROW = re.compile(r"1203(12)*")
_EVEN_ROW = re.compile(r"03120(30)*")


def star_table_row(k: int) -> tuple:
    if k < 0:
        raise InvalidArgumentError("row index must be nonnegative")
    return _TABLE.row(k)


def star_table(rows: int) -> list:
    """Rows ``0..rows-1`` of the star value table."""
    return [star_table_row(k) for k in range(rows)]


def row_matches_pattern(k: int, row) -> bool:
    """Check a row against the periodic shape that holds from row 4 on."""
    text = "".join(map(str, row))
    pattern = _ODD_ROW if k % 2 else _EVEN_ROW
    return pattern.fullmatch(text) is not None


def _reduced_value(r: ReducedStar) -> int:
    if r.kind == "empty":
        return 0
    if r.kind == "path":
        return r.size % 3
    return _TABLE.value(r.paths, r.twos)


def star_grundy(spec: StarSpec) -> int:
    return _reduced_value(reduce_star(spec))


# -- equivalence classes ----------------------------------------------------------


class ClassSim1(str, enum.Enum):
    C0 = "C0"
    C1 = "C1"
    C1star = "C1*"
    C2 = "C2"
    C2star = "C2*"
    C2box = "C2box"
    C3 = "C3"
    C3box = "C3box"


class ClassSim2(str, enum.Enum):
    D0 = "D0"
    D0star = "D0*"
    D1 = "D1"
    D1star = "D1*"
    D1box = "D1box"
    D2 = "D2"
    D2star = "D2*"
    D2box = "D2box"
    D3 = "D3"
    D3box = "D3box"


_PATH_SIM1 = {1: ClassSim1.C1star, 2: ClassSim1.C2star, 3: ClassSim1.C0, 4: ClassSim1.C1star, 5: ClassSim1.C2star}
_PATH_SIM2 = {1: ClassSim2.D1star, 2: ClassSim2.D2star, 3: ClassSim2.D0star, 4: ClassSim2.D1star, 5: ClassSim2.D2star}
_PLAIN_SIM1 = [ClassSim1.C0, ClassSim1.C1, ClassSim1.C2, ClassSim1.C3]
_PLAIN_SIM2 = [ClassSim2.D0, ClassSim2.D1, ClassSim2.D2, ClassSim2.D3]


def _as_reduced(star) -> ReducedStar:
    return star if isinstance(star, ReducedStar) else reduce_star(star)


def classify_sim1(spec) -> ClassSim1:
    """Class under joining through one middle edge (accepts StarSpec or ReducedStar)."""
    r = _as_reduced(spec)
    if r.kind == "empty":
        return ClassSim1.C0
    if r.kind == "path":
        return _PATH_SIM1[r.size]
    if r.ones == 0 and r.twos == 3:
        return ClassSim1.C1star
    g = _reduced_value(r)
    if r.twos in (1, 3):
        if g == 2:
            return ClassSim1.C2box
        if g == 3:
            return ClassSim1.C3box
    return _PLAIN_SIM1[g]


def classify_sim2(spec) -> ClassSim2:
    """Class under joining through a two-edge middle path."""
    r = _as_reduced(spec)
    if r.kind == "empty":
        return ClassSim2.D0star
    if r.kind == "path":
        return _PATH_SIM2[r.size]
    if r.ones == 0 and r.twos == 3:
        return ClassSim2.D1star
    g = _reduced_value(r)
    if r.twos in (0, 2):
        if g == 0:
            return ClassSim2.D0star
        if g == 1:
            return ClassSim2.D1box
    elif r.twos in (1, 3):
        if g == 2:
            return ClassSim2.D2box
        if g == 3:
            return ClassSim2.D3box
    return _PLAIN_SIM2[g]


def class_value(label) -> int:
    """Grundy value shared by every star in a class (the digit in its name)."""
    return int(label.value[1])


# -- product tables --------------------------------------------------------------
#
# "x" is the nim-sum cell, "x1" is nim-sum xor 1, digits are constants.

_TABLE1_TEXT = """
x x x x x x x x
x x x x x x x x
x x 2 x 0 x x x
x x x x x x x x
x x 0 x 1 1 x 0
x x x x 1 x x x
x x x x x x x x
x x x x 0 x x x
"""

_TABLE2_TEXT = """
x  x1 x  2 x1 x  0 x1 x  x1
x1 x1 x1 2 x1 x1 0 x1 x1 x1
x  x1 x  3 x1 x  1 x1 x  x1
2  2  3  0 3  0  1 1  1  0
x1 x1 x1 3 x1 x1 1 x1 x1 x1
x  x1 x  0 x1 x  2 x1 x  x1
0  0  1  1 1  2  2 2  3  3
x1 x1 x1 1 x1 x1 2 0  x1 1
x  x1 x  1 x1 x  3 x1 x  x1
x1 x1 x1 0 x1 x1 3 1  x1 0
"""


def _load_table(text: str, labels) -> dict:
    rows = [line.split() for line in text.strip().splitlines()]
    if len(rows) != len(labels) or any(len(r) != len(labels) for r in rows):
        raise AssertionError("product table has the wrong shape")
    cells = {}
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            if rows[i][j] != rows[j][i]:
                raise AssertionError(f"product table not symmetric at ({a.value}, {b.value})")
            cells[a, b] = rows[i][j]
    return cells


TABLE1 = _load_table(_TABLE1_TEXT, list(ClassSim1))
TABLE2 = _load_table(_TABLE2_TEXT, list(ClassSim2))


def _apply(cell: str, g: int, h: int) -> int:
    if cell == "x":
        return g ^ h
    if cell == "x1":
        return g ^ h ^ 1
    return int(cell)


def table1_lookup(c: ClassSim1, c2: ClassSim1, g: int, g2: int) -> int:
    return _apply(TABLE1[ClassSim1(c), ClassSim1(c2)], g, g2)


def table2_lookup(d: ClassSim2, d2: ClassSim2, g: int, g2: int) -> int:
    return _apply(TABLE2[ClassSim2(d), ClassSim2(d2)], g, g2)


def table1_cell(c, c2) -> str:
    return TABLE1[ClassSim1(c), ClassSim1(c2)]


def table2_cell(d, d2) -> str:
    return TABLE2[ClassSim2(d), ClassSim2(d2)]


# -- bistars ----------------------------------------------------------------------


def _joined(left: StarSpec, middle: int, right: StarSpec) -> int:
    """Value for middle length 1 or 2 through the class tables."""
    gl, gr = star_grundy(left), star_grundy(right)
    if middle == 1:
        return table1_lookup(classify_sim1(left), classify_sim1(right), gl, gr)
    return table2_lookup(classify_sim2(left), classify_sim2(right), gl, gr)


def bistar_grundy(spec: BistarSpec) -> int:
    left, m, right = spec.left, spec.middle_edges, spec.right
    if left.present and right.present:
        r = m % 3
        if r == 0:
            return star_grundy(StarSpec(left.arms + right.arms))
        return _joined(left, r, right)
    # With an absent side the middle path becomes a dangling arm, so only
    # m >= 1 is periodic (m and m+3 agree, m = 0 is a different graph).
    if m == 0:
        return star_grundy(right if not left.present else left)
    r = (m - 1) % 3 + 1
    if r == 3:
        return star_grundy(BistarSpec(left, 3, right).as_star())
    return _joined(left, r, right)


def _startup_checks() -> None:
    empty, p1 = StarSpec.empty(), StarSpec()
    for arms in [(), (1,), (1, 1, 2), (2, 2, 2)]:
        s = StarSpec(arms)
        if bistar_grundy(BistarSpec(empty, 1, s)) != star_grundy(s):
            raise AssertionError("empty join-1 S must equal S")
    if bistar_grundy(BistarSpec(empty, 2, empty)) != 1:
        raise AssertionError("empty join-2 empty must be P_1")
    if bistar_grundy(BistarSpec(p1, 1, p1)) != 2:
        raise AssertionError("P_1 join-1 P_1 must be P_2")


_startup_checks()
