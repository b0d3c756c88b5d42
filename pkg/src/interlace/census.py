"""Brute-force enumeration engines: ground truth for the fast paths and
the experimental probe of the open maximal-size question.

Maximal collections are maximal independent sets of the conflict graph
(vertices the candidate subsets, edges the intertwining pairs), found by
Bron-Kerbosch over the complement.  Everything is guarded so a typo in
parameters cannot start an astronomically large search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .errors import GuardError
from .slices import construct_Ck, construct_Ck_by_psi, is_slice, phi, standard_slice
from .subsets import (
    Collection,
    CyclicSubset,
    index_set,
    intertwines_either,
    l_intertwines,
    l_intertwines_fast,
    piece_count,
    subs,
)


def _maximal_compatible_sets(items: list, conflict: Callable) -> list[frozenset[int]]:
    """All inclusion-maximal subsets of `items` avoiding `conflict`,
    via Bron-Kerbosch with pivoting on the compatibility graph."""
    n = len(items)
    compat = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if not conflict(items[i], items[j]):
            compat[i].add(j)
            compat[j].add(i)
    results: list[frozenset[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            results.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(compat[v] & p))
        for v in sorted(p - compat[pivot]):
            expand(r | {v}, p & compat[v], x & compat[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(range(n)), set())
    return results


def enum_maximal_nonintertwining(
    n: int, l: int, max_atoms: int = 40
) -> list[Collection]:
    """All inclusion-maximal pairwise non-intertwining collections inside
    the cyclic index set, sorted canonically."""
    ground = index_set(n, l, "cyclic")
    if len(ground) > max_atoms:
        raise GuardError(f"|ground set| = {len(ground)} exceeds guard {max_atoms}")
    found = _maximal_compatible_sets(ground, intertwines_either)
    collections = [
        Collection.of(n, l, l, (ground[i] for i in idxs)) for idxs in found
    ]
    return sorted(collections)


@lru_cache(maxsize=None)
def count_triangulations(m: int) -> int:
    """Triangulations of a convex m-gon by ear recursion on one fixed edge;
    the independent oracle for the l = 2 census."""
    if m < 2:
        raise GuardError("polygon needs at least 2 vertices")
    if m in (2, 3):
        return 1
    return sum(count_triangulations(j) * count_triangulations(m - j + 1) for j in range(2, m))


@dataclass(frozen=True)
class CensusReport:
    n: int
    k: int
    l: int
    conjectured_max: int
    max_size: int
    max_count: int
    histogram: dict[int, int]
    witnesses: dict[int, Collection]  # one per size
    max_witnesses: tuple[Collection, ...] = field(default=())

    def to_json(self) -> dict:
        from .serialize import collection_to_dict

        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "conjectured_max": self.conjectured_max,
            "max_size": self.max_size,
            "max_count": self.max_count,
            "histogram": {str(s): c for s, c in sorted(self.histogram.items())},
            "witnesses": {
                str(s): collection_to_dict(c) for s, c in sorted(self.witnesses.items())
            },
        }


def enum_maximal_non_l_intertwining(
    n: int, k: int, l: int, max_atoms: int = 60
) -> CensusReport:
    """Inclusion-maximal non-l-intertwining collections inside the l-ple
    k-intervals: size histogram, witnesses, and the maximum found next to
    the conjectured bound.  A larger-than-conjectured maximum is reported,
    never asserted away."""
    ground = subs(n, k, l)
    if len(ground) > max_atoms:
        raise GuardError(f"|Subs({n},{k},{l})| = {len(ground)} exceeds guard {max_atoms}")

    def conflict(a: CyclicSubset, b: CyclicSubset) -> bool:
        if piece_count(a) == l and piece_count(b) == l and len(a) == len(b):
            return l_intertwines_fast(a, b)
        return l_intertwines(a, b, l)

    found = _maximal_compatible_sets(ground, conflict)
    collections = sorted(
        Collection.of(n, k, l, (ground[i] for i in idxs)) for idxs in found
    )
    histogram: dict[int, int] = {}
    witnesses: dict[int, Collection] = {}
    for c in collections:
        histogram[len(c)] = histogram.get(len(c), 0) + 1
        witnesses.setdefault(len(c), c)
    max_size = max(histogram) if histogram else 0
    max_witnesses = tuple(c for c in collections if len(c) == max_size)
    return CensusReport(
        n=n,
        k=k,
        l=l,
        conjectured_max=comb(k - 1, l - 1) * comb(n - k - 1, l - 1),
        max_size=max_size,
        max_count=histogram.get(max_size, 0),
        histogram=histogram,
        witnesses=witnesses,
        max_witnesses=max_witnesses,
    )


@dataclass(frozen=True)
class SliceCensus:
    n: int
    l: int
    slices: tuple[Collection, ...]
    non_slices: tuple[Collection, ...]

    def to_json(self) -> dict:
        from .serialize import collection_to_dict

        return {
            "n": self.n,
            "l": self.l,
            "slice_count": len(self.slices),
            "non_slice_count": len(self.non_slices),
            "slices": [collection_to_dict(c) for c in self.slices],
            "non_slices": [collection_to_dict(c) for c in self.non_slices],
        }


def slice_census(n: int, l: int, max_atoms: int = 40) -> SliceCensus:
    """Partition the maximal non-intertwining collections by slice-ness."""
    slices, non_slices = [], []
    for c in enum_maximal_nonintertwining(n, l, max_atoms=max_atoms):
        (slices if is_slice(c) is not None else non_slices).append(c)
    return SliceCensus(n, l, tuple(slices), tuple(non_slices))


def cross_validate(
    ns: Optional[list[int]] = None,
    ls: tuple[int, ...] = (2, 3),
    phi_fn: Callable = phi,
    endpoint_n_max: int = 8,
) -> dict:
    """Run every fast-vs-brute equivalence and return a pass/fail report.

    Checks: the endpoint test against the brute-force predicate, the psi
    parametrisation against the filtration, and the two wrap-arrow rules
    against each other.  `phi_fn` exists so a deliberately broken deficit
    map can be injected to confirm the harness localises the failure.
    """
    from .strip import gamma_quiver

    if ns is None:
        ns = list(range(4, 10))
    checks: list[dict] = []

    def record(name: str, params: dict, passed: bool, detail: str = ""):
        checks.append({"name": name, "params": params, "passed": passed, "detail": detail})

    for n in ns:
        if n > endpoint_n_max:
            continue
        for l in ls:
            mismatches = 0
            pairs = 0
            for k in range(l, n):
                pool = subs(n, k, l)
                for a, b in combinations(pool, 2):
                    pairs += 1
                    if l_intertwines_fast(a, b) != l_intertwines(a, b, l):
                        mismatches += 1
            record(
                "endpoint_lemma",
                {"n": n, "l": l},
                mismatches == 0,
                f"{pairs} pairs, {mismatches} mismatches",
            )

    for n in ns:
        for l in ls:
            if n < 2 * l:
                continue
            t = standard_slice(n, l)
            for k in range(l, n - l + 1):
                try:
                    agree = construct_Ck_by_psi(t, k, phi_fn=phi_fn) == construct_Ck(t, k)
                    detail = ""
                except Exception as err:  # psi route may fail outright when phi is broken
                    agree = False
                    detail = str(err)
                record("psi_vs_filtration", {"n": n, "l": l, "k": k}, agree, detail)

    for n in ns:
        for l in ls:
            if n < 2 * l:
                continue
            for k in range(l, n - l + 1):
                try:
                    gamma_quiver(n, k, l)
                    record("wrap_rules", {"n": n, "l": l, "k": k}, True)
                except Exception as err:
                    record("wrap_rules", {"n": n, "l": l, "k": k}, False, str(err))

    return {"passed": all(c["passed"] for c in checks), "checks": checks}
