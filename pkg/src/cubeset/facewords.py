"""Canonical face maps of cubes.

A face map I^p -> I^n preserves the order of the p input coordinates and
inserts n-p constant coordinates, each 0 or 1.  Its canonical form is the
list of (target position, constant) pairs with positions strictly
increasing; this form is unique per map, so equality of FaceWords is
equality of maps.
"""

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import MalformedInput


@dataclass(frozen=True)
class FaceWord:
    """A face map I^source_dim -> I^target_dim in canonical form.

    insertions: tuple of (position, bit) with positions strictly increasing,
    1-based in the target coordinates.  Empty insertions means the identity.
    """

    source_dim: int
    target_dim: int
    insertions: tuple

    def __post_init__(self):
        p, n, ins = self.source_dim, self.target_dim, self.insertions
        if p < 0 or n < p:
            raise MalformedInput(f"bad face word dims {p} -> {n}")
        if len(ins) != n - p:
            raise MalformedInput(f"need {n - p} insertions, got {len(ins)}")
        last = 0
        for pos, eps in ins:
            if not (last < pos <= n):
                raise MalformedInput(f"insertion positions not increasing: {ins}")
            if eps not in (0, 1):
                raise MalformedInput(f"insertion constant must be 0 or 1: {ins}")
            last = pos

    @property
    def is_identity(self):
        return not self.insertions

    @property
    def is_front(self):
        """True if only 0s are inserted (includes the identity)."""
        return all(eps == 0 for _, eps in self.insertions)

    @property
    def is_back(self):
        """True if only 1s are inserted (includes the identity)."""
        return all(eps == 1 for _, eps in self.insertions)

    def apply(self, coords):
        """Apply to a coordinate tuple of length source_dim.

        Entries may be anything (numbers or symbols); inserted constants
        appear as the ints 0 and 1.
        """
        if len(coords) != self.source_dim:
            raise MalformedInput(
                f"expected {self.source_dim} coordinates, got {len(coords)}"
            )
        out = list(coords)
        for pos, eps in self.insertions:
            out.insert(pos - 1, eps)
        return tuple(out)

    def kept_positions(self):
        """Target positions carrying the input coordinates, in order."""
        inserted = {pos for pos, _ in self.insertions}
        return tuple(q for q in range(1, self.target_dim + 1) if q not in inserted)


def identity_word(n):
    return FaceWord(n, n, ())


def first_order_word(i, eps, n):
    """The map I^(n-1) -> I^n inserting eps at position i."""
    if not 1 <= i <= n:
        raise MalformedInput(f"face index {i} out of range for dimension {n}")
    return FaceWord(n - 1, n, ((i, eps),))


def compose(lam, mu):
    """Canonical form of lam o mu, where mu: I^p -> I^q and lam: I^q -> I^n."""
    if lam.source_dim != mu.target_dim:
        raise MalformedInput(
            f"cannot compose {lam.source_dim}->{lam.target_dim} "
            f"after {mu.source_dim}->{mu.target_dim}"
        )
    marks = tuple(("x", j) for j in range(mu.source_dim))
    out = lam.apply(mu.apply(marks))
    ins = tuple((q + 1, v) for q, v in enumerate(out) if not isinstance(v, tuple))
    return FaceWord(mu.source_dim, lam.target_dim, ins)


def front_back_decompose(word):
    """Split word as front o back, front inserting only 0s, back only 1s.

    The decomposition is unique: the front part keeps every position that
    is not a 0-insertion, and the 1-insertions re-rank inside it.
    """
    zeros = tuple((pos, 0) for pos, eps in word.insertions if eps == 0)
    mid_dim = word.target_dim - len(zeros)
    zero_positions = [pos for pos, _ in zeros]
    ones = []
    for pos, eps in word.insertions:
        if eps == 1:
            below = sum(1 for z in zero_positions if z < pos)
            ones.append((pos - below, 1))
    front = FaceWord(mid_dim, word.target_dim, zeros)
    back = FaceWord(word.source_dim, mid_dim, tuple(ones))
    return front, back


def enumerate_face_words(p, n):
    """All face maps I^p -> I^n, ordered by insertion positions then bits."""
    if p > n:
        raise MalformedInput(f"no face maps I^{p} -> I^{n}")
    out = []
    for positions in combinations(range(1, n + 1), n - p):
        for bits in product((0, 1), repeat=n - p):
            out.append(FaceWord(p, n, tuple(zip(positions, bits))))
    return out


def count_face_maps(p, n):
    """Number of face maps I^p -> I^n, i.e. C(n,p) * 2^(n-p)."""
    if p > n or p < 0:
        raise MalformedInput(f"no face maps I^{p} -> I^{n}")
    return comb(n, p) * 2 ** (n - p)
