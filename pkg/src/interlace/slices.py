"""Gap-deficit maps, slice detection and the C_k / C'_k constructions.

For a base point i, the map phi_i sends an l-subset with all cyclic gaps
>= 2 to its tuple of gap deficits (g - 2 for each cyclic gap g), read from
the first element in the order i < i+1 < ... < n < 1 < ... < i-1.  The
entries are nonnegative and sum to n - 2l.

A maximal non-intertwining collection T is a slice when some base point
makes phi_i a bijection onto the full set of l-part compositions of
n - 2l.  A slice extends to the non-l-intertwining collection C_k(T) of
all l-ple k-intervals whose left endpoints form a member of T; the psi
parametrisation below enumerates the same collection directly and doubles
as a cross-check against the filtration definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .errors import (
    IntertwiningError,
    NotASliceError,
    NotInIndexSetError,
    ParameterError,
    WrongCollectionSizeError,
)
from .subsets import (
    Collection,
    CyclicSubset,
    gap_tuples,
    hat,
    check,
    in_index_set,
    intertwines_either,
    interval_elements,
    subs,
)


@dataclass(frozen=True)
class SliceCertificate:
    """Least base point whose deficit image is the full composition set."""

    base_point: int
    image: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"base_point": self.base_point, "image": [list(t) for t in self.image]}


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All tuples in Z_{>=0}^parts summing to total, lexicographic."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            out.append((head,) + tail)
    return out


def _base_ordered(t: CyclicSubset, i: int) -> tuple[int, ...]:
    """Elements of t reordered so they increase in the order <_i."""
    return tuple(sorted(t.elements, key=lambda x: (x - i) % t.n))


def phi(t: CyclicSubset, i: int) -> tuple[int, ...]:
    """Cyclic gap deficits of t read from base point i."""
    if not 1 <= i <= t.n:
        raise ParameterError(f"base point {i} outside [1, {t.n}]")
    if not in_index_set(t, "cyclic"):
        raise NotInIndexSetError(f"{t} has a cyclic gap below 2")
    xs = _base_ordered(t, i)
    n = t.n
    return tuple((xs[(j + 1) % len(xs)] - xs[j] - 2) % n for j in range(len(xs)))


def _check_slice_preconditions(t: Collection) -> None:
    if t.k != t.l:
        raise ParameterError(f"slice members must have size l={t.l}, got k={t.k}")
    for m in t.members:
        if not in_index_set(m, "cyclic"):
            raise NotInIndexSetError(f"member {m} has a cyclic gap below 2")
    expected = comb(t.n - t.l - 1, t.l - 1)
    if len(t.members) != expected:
        raise WrongCollectionSizeError(
            f"expected {expected} members for (n,l)=({t.n},{t.l}), got {len(t.members)}"
        )
    for a, b in combinations(t.members, 2):
        if intertwines_either(a, b):
            raise IntertwiningError(
                f"members {a} and {b} intertwine",
                pair=[list(a.elements), list(b.elements)],
            )


def slice_collisions(t: Collection) -> dict[int, list[tuple[CyclicSubset, CyclicSubset]]]:
    """For every base point, the member pairs with equal deficit tuple."""
    out: dict[int, list[tuple[CyclicSubset, CyclicSubset]]] = {}
    for i in range(1, t.n + 1):
        images = [(phi(m, i), m) for m in t.members]
        pairs = []
        for (pa, a), (pb, b) in combinations(images, 2):
            if pa == pb:
                pairs.append((a, b))
        out[i] = pairs
    return out


def is_slice(t: Collection) -> Optional[SliceCertificate]:
    """Certificate for the least base point making phi_i bijective, else None.

    Precondition failures (wrong member size or count, a member outside the
    cyclic index set, an intertwining pair) raise distinct errors rather
    than returning None.
    """
    _check_slice_preconditions(t)
    full = set(compositions(t.n - 2 * t.l, t.l))
    for i in range(1, t.n + 1):
        image = {phi(m, i) for m in t.members}
        if image == full:
            return SliceCertificate(i, tuple(sorted(full)))
    return None


def require_slice(t: Collection) -> SliceCertificate:
    cert = is_slice(t)
    if cert is None:
        raise NotASliceError(f"collection is not a slice for any base point in [1, {t.n}]")
    return cert


def standard_slice(n: int, l: int) -> Collection:
    """The slice labelling the projectives: {1, i_0+2, ..., i_{l-2}+2}."""
    if n < 2 * l:
        raise ParameterError(f"need n >= 2l, got n={n}, l={l}")
    members = [
        CyclicSubset.of(n, (1,) + tuple(x + 2 for x in tup))
        for tup in gap_tuples(n - 3, l - 1)
    ]
    return Collection.of(n, l, l, members)


def psi(
    q: tuple[int, ...],
    r: tuple[int, ...],
    t: Collection,
    base_point: Optional[int] = None,
    phi_fn: Callable[[CyclicSubset, int], tuple[int, ...]] = phi,
) -> CyclicSubset:
    """The l-ple interval [t_1, t_1+q_1] u ... u [t_l, t_l+q_l] where the
    starts invert the deficit map on q + r.

    Bijective from {(q, r) : sum q = k - l, sum r = n - k - l} onto C_k(t).
    """
    l = t.l
    n = t.n
    if len(q) != l or len(r) != l:
        raise ParameterError(f"q and r must have {l} parts")
    if any(x < 0 for x in q) or any(x < 0 for x in r):
        raise ParameterError("q and r must be nonnegative")
    if base_point is None:
        base_point = require_slice(t).base_point
    table = {phi_fn(m, base_point): _base_ordered(m, base_point) for m in t.members}
    p = tuple(x + y for x, y in zip(q, r))
    starts = table.get(p)
    if starts is None:
        raise ParameterError(f"deficit tuple {p} is not in the image of the slice")
    elems: list[int] = []
    for start, extra in zip(starts, q):
        end = (start - 1 + extra) % n + 1
        elems.extend(interval_elements(n, start, end))
    return CyclicSubset.of(n, elems)


def construct_Ck(t: Collection, k: int, endpoints: str = "hat") -> Collection:
    """All l-ple k-intervals of [n] whose run starts (or ends, for the
    primed variant) form a member of the slice t.  Defined by filtration;
    `construct_Ck_by_psi` must produce the same collection.
    """
    require_slice(t)
    return _construct_unchecked(t, k, endpoints)


def _construct_unchecked(t: Collection, k: int, endpoints: str = "hat") -> Collection:
    if endpoints not in ("hat", "check"):
        raise ParameterError(f"unknown endpoints variant {endpoints!r}")
    if not t.l <= k <= t.n - t.l:
        raise ParameterError(f"need l <= k <= n - l, got k={k}, n={t.n}, l={t.l}")
    ends = hat if endpoints == "hat" else check
    wanted = t.member_set()
    members = [s for s in subs(t.n, k, t.l) if ends(s) in wanted]
    return Collection.of(t.n, k, t.l, members)


def construct_Ck_prime(t: Collection, k: int) -> Collection:
    return construct_Ck(t, k, endpoints="check")


def construct_Ck_by_psi(
    t: Collection,
    k: int,
    phi_fn: Callable[[CyclicSubset, int], tuple[int, ...]] = phi,
) -> Collection:
    """The psi-parametrised route to C_k(t); cross-checked against the
    filtration in cross_validate and the test suite."""
    cert = require_slice(t)
    members = [
        psi(q, r, t, cert.base_point, phi_fn=phi_fn)
        for q in compositions(k - t.l, t.l)
        for r in compositions(t.n - k - t.l, t.l)
    ]
    if len(set(members)) != len(members):
        raise ParameterError("psi images collide; input is not a slice")
    return Collection.of(t.n, k, t.l, members)
