"""Cyclic subsets of [n] = {1, ..., n}: interval decompositions and
intertwining predicates.

A subset is stored by its increasing representatives in [1, n].  Its cyclic
interval decomposition splits it into maximal runs, where a run may wrap
n -> 1 (so {8,1,3,5} in [8] decomposes as [8,1], [3,3], [5,5]).  A subset
with exactly l runs is an "l-ple interval"; the left endpoints of the runs
form the hat set, the right endpoints the check set.

Intertwining of two increasing tuples means strict alternation
i_1 < j_1 < i_2 < ... < i_l < j_l in the linear order of the stored
representatives.  Two k-sets l-intertwine when they contain disjoint
l-subtuples that alternate; for two l-ple intervals this reduces to an
endpoint test (`l_intertwines_fast`), which the brute-force predicate
validates exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional

from .errors import (
    IntertwiningError,
    ParameterError,
    PieceCountError,
    SizeMismatchError,
)


@dataclass(frozen=True, order=True)
class CyclicSubset:
    """A nonempty subset of [n], elements strictly increasing in [1, n]."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"ambient size must be positive, got {self.n}")
        k = len(self.elements)
        if not 0 < k <= self.n:
            raise ParameterError(f"size {k} not in (0, {self.n}]")
        prev = 0
        for e in self.elements:
            if not 1 <= e <= self.n:
                raise ParameterError(f"element {e} outside [1, {self.n}]")
            if e <= prev:
                raise ParameterError(f"elements not strictly increasing: {self.elements}")
            prev = e

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "CyclicSubset":
        return cls(n, tuple(sorted(set(elements))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: int) -> bool:
        return e in set(self.elements)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(e) for e in self.elements)
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def shift(self, step: int) -> "CyclicSubset":
        """Elementwise shift mod n, renormalised to representatives in [1, n]."""
        return CyclicSubset.of(self.n, ((e - 1 + step) % self.n + 1 for e in self.elements))

    def complement(self) -> "CyclicSubset":
        missing = [e for e in range(1, self.n + 1) if e not in set(self.elements)]
        if not missing:
            raise ParameterError("complement of the full set is empty")
        return CyclicSubset(self.n, tuple(missing))


@dataclass(frozen=True)
class IntervalDecomposition:
    """Maximal cyclic runs of a subset; a wrapping run is listed first."""

    n: int
    pieces: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.pieces)

    def piece_elements(self, index: int) -> tuple[int, ...]:
        a, b = self.pieces[index]
        return interval_elements(self.n, a, b)

    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for i in range(self.count):
            out.update(self.piece_elements(i))
        return frozenset(out)


def interval_elements(n: int, a: int, b: int) -> tuple[int, ...]:
    """Elements of the closed cyclic interval [a, b] in [1, n]."""
    if a <= b:
        return tuple(range(a, b + 1))
    return tuple(range(a, n + 1)) + tuple(range(1, b + 1))


def decompose(s: CyclicSubset) -> IntervalDecomposition:
    """Unique decomposition into maximal cyclic runs.

    The full set [n] is a single piece [1, n] by convention.  When a run
    wraps n -> 1 it is placed first, matching labels like 8135.
    """
    xs = s.elements
    n = s.n
    if len(xs) == n:
        return IntervalDecomposition(n, ((1, n),))
    runs: list[tuple[int, int]] = []
    start = prev = xs[0]
    for x in xs[1:]:
        if x == prev + 1:
            prev = x
        else:
            runs.append((start, prev))
            start = prev = x
    runs.append((start, prev))
    if len(runs) > 1 and xs[0] == 1 and xs[-1] == n:
        wrap_start, _ = runs.pop()
        _, wrap_end = runs.pop(0)
        runs.insert(0, (wrap_start, wrap_end))
    return IntervalDecomposition(n, tuple(runs))


def piece_count(s: CyclicSubset) -> int:
    return decompose(s).count


def hat(s: CyclicSubset) -> CyclicSubset:
    """Left endpoints of the cyclic runs."""
    return CyclicSubset.of(s.n, (a for a, _ in decompose(s).pieces))


def check(s: CyclicSubset) -> CyclicSubset:
    """Right endpoints of the cyclic runs."""
    return CyclicSubset.of(s.n, (b for _, b in decompose(s).pieces))


def _alternates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """a_1 < b_1 < a_2 < b_2 < ... < a_l < b_l for increasing tuples."""
    prev = a[0] - 1
    for x, y in zip(a, b):
        if not prev < x < y:
            return False
        prev = y
    return True


def intertwines(a: CyclicSubset | Iterable[int], b: CyclicSubset | Iterable[int]) -> bool:
    """Strict alternation a_1 < b_1 < ... < a_l < b_l of the sorted tuples."""
    ta = tuple(sorted(a))
    tb = tuple(sorted(b))
    if len(ta) != len(tb):
        raise SizeMismatchError(f"sizes differ: {len(ta)} vs {len(tb)}")
    return _alternates(ta, tb)


def intertwines_either(a, b) -> bool:
    """True when the tuples alternate in either order (the unordered variant)."""
    return intertwines(a, b) or intertwines(b, a)


def cyclic_intertwines(a: CyclicSubset, b: CyclicSubset) -> bool:
    """Exploratory variant: some common rotation makes the linear test pass.

    Never used by collection validity; the linear order of the stored
    representatives is the operative notion everywhere else.
    """
    if a.n != b.n:
        raise ParameterError("ambient sizes differ")
    return any(intertwines_either(a.shift(r), b.shift(r)) for r in range(a.n))


def l_intertwines(a: CyclicSubset, b: CyclicSubset, l: int) -> bool:
    """Brute force: disjoint alternating l-subtuples exist (either order)."""
    sa, sb = a.as_set(), b.as_set()
    da = sorted(sa - sb)
    db = sorted(sb - sa)
    if len(da) < l or len(db) < l:
        return False
    for ip in combinations(da, l):
        for jp in combinations(db, l):
            if _alternates(ip, jp) or _alternates(jp, ip):
                return True
    return False


def l_intertwines_fast(a: CyclicSubset, b: CyclicSubset) -> bool:
    """Endpoint test for two l-ple intervals of equal size.

    Equal to `l_intertwines(a, b, l)` on its whole domain; the test suite
    checks the agreement exhaustively.
    """
    if len(a) != len(b):
        raise SizeMismatchError(f"sizes differ: {len(a)} vs {len(b)}")
    da, db = decompose(a), decompose(b)
    if da.count != db.count:
        raise PieceCountError(f"piece counts differ: {da.count} vs {db.count}")
    hat_a = tuple(sorted(p[0] for p in da.pieces))
    hat_b = tuple(sorted(p[0] for p in db.pieces))
    chk_a = tuple(sorted(p[1] for p in da.pieces))
    chk_b = tuple(sorted(p[1] for p in db.pieces))
    hats = _alternates(hat_a, hat_b) or _alternates(hat_b, hat_a)
    checks = _alternates(chk_a, chk_b) or _alternates(chk_b, chk_a)
    return hats and checks


def weakly_separated(a: CyclicSubset, b: CyclicSubset) -> bool:
    """No cyclically ordered s < t < u < v with s,u in a\\b and t,v in b\\a.

    Walking the circle, collapse positions into maximal blocks labelled by
    which difference set they lie in; a crossing quadruple exists exactly
    when there are at least four blocks.
    """
    if a.n != b.n:
        raise ParameterError("ambient sizes differ")
    sa, sb = a.as_set(), b.as_set()
    labels = []
    for e in range(1, a.n + 1):
        if e in sa and e not in sb:
            labels.append("a")
        elif e in sb and e not in sa:
            labels.append("b")
    blocks = 0
    prev = None
    for lab in labels:
        if lab != prev:
            blocks += 1
            prev = lab
    if blocks > 1 and labels and labels[0] == labels[-1]:
        blocks -= 1
    return blocks < 4


def in_index_set(t: CyclicSubset, variant: str = "cyclic") -> bool:
    """Consecutive gaps >= 2; the cyclic variant also bounds the wrap gap."""
    if variant not in ("open", "cyclic"):
        raise ParameterError(f"unknown variant {variant!r}")
    xs = t.elements
    for x, y in zip(xs, xs[1:]):
        if y < x + 2:
            return False
    if variant == "cyclic" and len(xs) > 1:
        if xs[-1] + 2 > xs[0] + t.n:
            return False
    return True


def gap_tuples(n: int, l: int) -> list[tuple[int, ...]]:
    """Increasing l-tuples in [n] with consecutive gaps >= 2 (open variant)."""
    if l == 0:
        return [()]
    out = []

    def extend(prefix: list[int], lo: int):
        if len(prefix) == l:
            out.append(tuple(prefix))
            return
        for x in range(lo, n + 1):
            prefix.append(x)
            extend(prefix, x + 2)
            prefix.pop()

    extend([], 1)
    return out


def index_set(n: int, l: int, variant: str = "cyclic") -> list[CyclicSubset]:
    """The index sets of l-tuples with gaps >= 2, as subsets of [n]."""
    subsets = [CyclicSubset(n, t) for t in gap_tuples(n, l)]
    if variant == "open":
        return subsets
    return [s for s in subsets if in_index_set(s, "cyclic")]


def subs(n: int, k: int, l: int) -> list[CyclicSubset]:
    """All k-subsets of [n] that are l-ple intervals, in lexicographic order."""
    out = []
    for elems in combinations(range(1, n + 1), k):
        s = CyclicSubset(n, elems)
        if decompose(s).count == l:
            out.append(s)
    return out


@dataclass(frozen=True, order=True)
class Collection:
    """A set of equal-size cyclic subsets with ambient parameters (n, k, l)."""

    n: int
    k: int
    l: int
    members: tuple[CyclicSubset, ...]

    def __post_init__(self):
        if self.l > self.k:
            raise ParameterError(f"l={self.l} exceeds k={self.k}")
        seen = set()
        for m in self.members:
            if m.n != self.n:
                raise ParameterError(f"member {m} has ambient {m.n}, expected {self.n}")
            if len(m) != self.k:
                raise ParameterError(f"member {m} has size {len(m)}, expected {self.k}")
            if m in seen:
                raise ParameterError(f"duplicate member {m}")
            seen.add(m)
        if list(self.members) != sorted(self.members):
            raise ParameterError("members must be sorted; use Collection.of")

    @classmethod
    def of(cls, n: int, k: int, l: int, members: Iterable[CyclicSubset]) -> "Collection":
        return cls(n, k, l, tuple(sorted(set(members))))

    def __iter__(self) -> Iterator[CyclicSubset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: CyclicSubset) -> bool:
        return s in set(self.members)

    def member_set(self) -> frozenset[CyclicSubset]:
        return frozenset(self.members)

    def replace(self, old: CyclicSubset, new: CyclicSubset) -> "Collection":
        rest = [m for m in self.members if m != old]
        rest.append(new)
        return Collection.of(self.n, self.k, self.l, rest)


def pair_l_intertwines(a: CyclicSubset, b: CyclicSubset, l: int) -> bool:
    """Route one pair through the endpoint test when both have l pieces."""
    if len(a) == len(b) and piece_count(a) == l and piece_count(b) == l:
        return l_intertwines_fast(a, b)
    return l_intertwines(a, b, l)


def first_intertwining_pair(c: Collection) -> Optional[tuple[CyclicSubset, CyclicSubset]]:
    for a, b in combinations(c.members, 2):
        if pair_l_intertwines(a, b, c.l):
            return a, b
    return None


def is_valid_collection(c: Collection) -> bool:
    """No pair of members l-intertwines (in either order)."""
    return first_intertwining_pair(c) is None


def require_valid(c: Collection) -> None:
    pair = first_intertwining_pair(c)
    if pair is not None:
        raise IntertwiningError(
            f"members {pair[0]} and {pair[1]} {c.l}-intertwine",
            pair=[list(pair[0].elements), list(pair[1].elements)],
        )


def expected_collection_size(n: int, k: int, l: int) -> int:
    return comb(k - 1, l - 1) * comb(n - k - 1, l - 1)
