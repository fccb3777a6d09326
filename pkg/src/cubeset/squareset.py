"""Finite truncated cubical sets without degeneracies and their maps.

Cells of each dimension are dense integer indices; the two first-order
face maps per direction are stored as flat index tables, which makes the
face-relation check a handful of numpy gathers per (i, j) pair.
"""

from typing import NamedTuple

import numpy as np

from .errors import MalformedInput
from .facewords import FaceWord


class CellRef(NamedTuple):
    dim: int
    index: int


class FaceRelationViolation(NamedTuple):
    n: int
    i: int
    j: int
    eps: int
    eta: int
    cell: int

    def describe(self):
        return (
            f"d_{self.i}^{self.eps} d_{self.j}^{self.eta} != "
            f"d_{self.j - 1}^{self.eta} d_{self.i}^{self.eps} "
            f"on cell {self.cell} of dimension {self.n}"
        )


class RangeViolation(NamedTuple):
    n: int
    i: int
    eps: int
    cell: int
    value: int

    def describe(self):
        return (
            f"face table ({self.n},{self.i},{self.eps}) entry {self.cell} "
            f"= {self.value} is out of range"
        )


class ValidationReport:
    """Violation list; empty report means every checked invariant holds."""

    def __init__(self, entries=None):
        self.entries = list(entries or [])

    def __bool__(self):
        return not self.entries

    @property
    def ok(self):
        return not self.entries

    def __len__(self):
        return len(self.entries)

    def describe(self, limit=20):
        lines = [e.describe() for e in self.entries[:limit]]
        if len(self.entries) > limit:
            lines.append(f"... and {len(self.entries) - limit} more")
        return "\n".join(lines) if lines else "ok"


def _as_table(values, count):
    arr = np.asarray(values, dtype=np.int64)
    if arr.shape != (count,):
        raise MalformedInput(f"face table has shape {arr.shape}, expected ({count},)")
    return arr


class SquareSet:
    """A cubical set without degeneracies, truncated at max_dim.

    face_tables maps (n, i, eps) for 1 <= i <= n <= max_dim, eps in {0,1}
    to an index array of length cell_counts[n] with values in dimension n-1.
    Instances are immutable after construction.
    """

    def __init__(self, cell_counts, face_tables, labels=None):
        self.cell_counts = [int(c) for c in cell_counts]
        if not self.cell_counts or any(c < 0 for c in self.cell_counts):
            raise MalformedInput("cell_counts must be a nonempty list of naturals")
        self.max_dim = len(self.cell_counts) - 1
        self._faces = {}
        for n in range(1, self.max_dim + 1):
            for i in range(1, n + 1):
                for eps in (0, 1):
                    key = (n, i, eps)
                    if key not in face_tables:
                        raise MalformedInput(f"missing face table {key}")
                    tab = _as_table(face_tables[key], self.cell_counts[n])
                    tab.setflags(write=False)
                    self._faces[key] = tab
        self.labels = labels

    # -- basic accessors -------------------------------------------------

    def cell_count(self, n):
        if not 0 <= n <= self.max_dim:
            return 0
        return self.cell_counts[n]

    def cells(self, n):
        return range(self.cell_count(n))

    def face_table(self, n, i, eps):
        try:
            return self._faces[(n, i, eps)]
        except KeyError:
            raise MalformedInput(f"no face table ({n},{i},{eps})") from None

    def label(self, cell):
        if self.labels is None:
            return None
        dim_labels = self.labels.get(cell.dim)
        return None if dim_labels is None else dim_labels[cell.index]

    def euler_characteristic(self):
        return sum((-1) ** n * c for n, c in enumerate(self.cell_counts))

    # -- face action ------------------------------------------------------

    def face(self, x, i, eps):
        """First-order face d_i^eps of a cell, 1 <= i <= dim(x)."""
        n = x.dim
        if n < 1 or not 1 <= i <= n:
            raise MalformedInput(f"face index {i} invalid for a {n}-cell")
        if eps not in (0, 1):
            raise MalformedInput(f"face sign must be 0 or 1, got {eps}")
        if not 0 <= x.index < self.cell_count(n):
            raise MalformedInput(f"no cell {x.index} in dimension {n}")
        return CellRef(n - 1, int(self._faces[(n, i, eps)][x.index]))

    def apply_word(self, x, word):
        """Apply the induced map of a face word: insertions from highest
        position downward, one face table per insertion."""
        if word.target_dim != x.dim:
            raise MalformedInput(
                f"face word targets I^{word.target_dim}, cell has dimension {x.dim}"
            )
        cur = x
        for pos, eps in reversed(word.insertions):
            cur = self.face(cur, pos, eps)
        return cur

    def apply_word_indices(self, word, indices):
        """Vectorized apply_word over an index array of word.target_dim cells."""
        arr = np.asarray(indices, dtype=np.int64)
        d = word.target_dim
        for pos, eps in reversed(word.insertions):
            arr = self._faces[(d, pos, eps)][arr]
            d -= 1
        return arr

    def __repr__(self):
        return f"{type(self).__name__}(cells={self.cell_counts})"


def first_order_face(C, x, i, eps):
    return C.face(x, i, eps)


def apply_face_word(C, x, word):
    return C.apply_word(x, word)


def euler_characteristic(C):
    return C.euler_characteristic()


def validate(C):
    """Check index ranges and every face relation
    d_{j-1}^eta d_i^eps = d_i^eps d_j^eta (i < j) on every cell, exactly.
    """
    entries = []
    bad_tables = set()
    for n in range(1, C.max_dim + 1):
        lower = C.cell_count(n - 1)
        for i in range(1, n + 1):
            for eps in (0, 1):
                tab = C.face_table(n, i, eps)
                bad = np.nonzero((tab < 0) | (tab >= lower))[0]
                for cell in bad:
                    entries.append(
                        RangeViolation(n, i, eps, int(cell), int(tab[cell]))
                    )
                if bad.size:
                    bad_tables.add((n, i, eps))
    for n in range(2, C.max_dim + 1):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for eps in (0, 1):
                    for eta in (0, 1):
                        keys = [(n, j, eta), (n, i, eps), (n - 1, i, eps), (n - 1, j - 1, eta)]
                        if any(k in bad_tables for k in keys):
                            continue
                        left = C.face_table(n - 1, i, eps)[C.face_table(n, j, eta)]
                        right = C.face_table(n - 1, j - 1, eta)[C.face_table(n, i, eps)]
                        for cell in np.nonzero(left != right)[0]:
                            entries.append(
                                FaceRelationViolation(n, i, j, eps, eta, int(cell))
                            )
    return ValidationReport(entries)


class MapViolation(NamedTuple):
    n: int
    i: int
    eps: int
    cell: int

    def describe(self):
        return (
            f"f does not commute with d_{self.i}^{self.eps} "
            f"on cell {self.cell} of dimension {self.n}"
        )


class SquareMap:
    """A map of cubical sets: one level function per dimension.

    levels[n] sends source cells of dimension n to target cell indices.
    """

    def __init__(self, source, target, levels):
        if target.max_dim < source.max_dim:
            raise MalformedInput("target truncated below the source")
        self.source = source
        self.target = target
        self.levels = []
        for n in range(source.max_dim + 1):
            arr = _as_table(levels[n], source.cell_count(n))
            arr.setflags(write=False)
            self.levels.append(arr)

    def apply(self, x):
        return CellRef(x.dim, int(self.levels[x.dim][x.index]))

    def __repr__(self):
        return f"SquareMap({self.source!r} -> {self.target!r})"


def validate_square_map(f):
    """Empty report iff f commutes with every first-order face map and all
    level values are in range."""
    entries = []
    src, tgt = f.source, f.target
    for n in range(src.max_dim + 1):
        lv = f.levels[n]
        bad = np.nonzero((lv < 0) | (lv >= tgt.cell_count(n)))[0]
        for cell in bad:
            entries.append(RangeViolation(n, 0, 0, int(cell), int(lv[cell])))
    if entries:
        return ValidationReport(entries)
    for n in range(1, src.max_dim + 1):
        for i in range(1, n + 1):
            for eps in (0, 1):
                left = f.levels[n - 1][src.face_table(n, i, eps)]
                right = tgt.face_table(n, i, eps)[f.levels[n]]
                for cell in np.nonzero(left != right)[0]:
                    entries.append(MapViolation(n, i, eps, int(cell)))
    return ValidationReport(entries)


def identity_map(C):
    return SquareMap(C, C, [np.arange(C.cell_count(n)) for n in range(C.max_dim + 1)])


def compose_maps(g, f):
    """g o f as a SquareMap."""
    if g.source is not f.target and g.source.cell_counts != f.target.cell_counts:
        raise MalformedInput("maps are not composable")
    levels = [g.levels[n][f.levels[n]] for n in range(f.source.max_dim + 1)]
    return SquareMap(f.source, g.target, levels)


def maps_equal(f, g):
    return all(np.array_equal(a, b) for a, b in zip(f.levels, g.levels))
