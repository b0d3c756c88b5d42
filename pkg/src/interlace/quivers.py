"""Higher Auslander quivers of type A, cluster-tilting labels, elementary
interval moves, and the tensor-grid quiver.

Quiver vertices are plain integer tuples.  Arrows carry a generator tag:
``alpha_i`` increments one entry of an index tuple, ``v_i`` shifts the i-th
run of an l-ple interval up by one, ``h_i`` moves the left endpoint of the
i-th run down while trimming the previous run, and ``wrap`` marks the
extra arrows of the preprojective quiver.  Relations are emitted as data:
pairs of length-2 vertex paths (commutativity) or a path with None (zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import ParameterError
from .slices import construct_Ck, standard_slice
from .subsets import CyclicSubset, decompose, gap_tuples

Label = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Arrow:
    source: Label
    target: Label
    tag: str


@dataclass(frozen=True, order=True)
class Relation:
    left: tuple[Label, ...]
    right: Optional[tuple[Label, ...]]  # None encodes a zero relation


@dataclass(frozen=True)
class LabeledQuiver:
    vertices: tuple[Label, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ParameterError("duplicate quiver vertices")
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ParameterError(f"arrow {a} has an endpoint outside the vertex set")

    def arrow_pairs(self) -> set[tuple[Label, Label]]:
        return {(a.source, a.target) for a in self.arrows}

    def sources(self) -> list[Label]:
        targets = {a.target for a in self.arrows}
        return [v for v in self.vertices if v not in targets]

    def sinks(self) -> list[Label]:
        sources = {a.source for a in self.arrows}
        return [v for v in self.vertices if v not in sources]


def _quiver(vertices, arrows, relations=()) -> LabeledQuiver:
    return LabeledQuiver(
        tuple(sorted(vertices)), tuple(sorted(arrows)), tuple(sorted(relations))
    )


def build_higher_A_quiver(m: int, d: int) -> LabeledQuiver:
    """Quiver of the (d-1)-Auslander algebra tower over the linear A_m quiver.

    Vertices are the d-tuples in [m + 2d - 2] with consecutive gaps >= 2;
    alpha_i replaces i by i+1.  Relations are the mesh elements
    alpha_j alpha_i - alpha_i alpha_j with compositions through missing
    vertices set to zero.
    """
    if m < 1 or d < 1:
        raise ParameterError(f"need m, d >= 1, got m={m}, d={d}")
    ambient = m + 2 * d - 2
    vertices = set(gap_tuples(ambient, d))

    def bump(label: Label, i: int) -> Optional[Label]:
        out = tuple(sorted(set(label) - {i} | {i + 1}))
        return out if out in vertices else None

    arrows = []
    for label in vertices:
        for i in label:
            target = bump(label, i)
            if target is not None:
                arrows.append(Arrow(label, target, f"alpha_{i}"))

    relations = []
    for label in vertices:
        for i, j in combinations(label, 2):
            via_i = bump(label, i)
            via_j = bump(label, j)
            end_i = bump(via_i, j) if via_i is not None else None
            end_j = bump(via_j, i) if via_j is not None else None
            path_i = (label, via_i, end_i) if end_i is not None else None
            path_j = (label, via_j, end_j) if end_j is not None else None
            if path_i and path_j:
                relations.append(Relation(min(path_i, path_j), max(path_i, path_j)))
            elif path_i:
                relations.append(Relation(path_i, None))
            elif path_j:
                relations.append(Relation(path_j, None))
    return _quiver(vertices, arrows, relations)


def ct_labels(m: int, d: int) -> list[Label]:
    """Index tuples of the distinguished subcategory: I in [m+2d], gaps >= 2."""
    if m < 1 or d < 0:
        raise ParameterError(f"need m >= 1, d >= 0, got m={m}, d={d}")
    return gap_tuples(m + 2 * d, d + 1)


def is_projective_label(label: Label, m: int, d: int) -> bool:
    """label == {1, i_0+2, ..., i_{d-1}+2} for an index tuple (i_0..i_{d-1})."""
    if label[0] != 1:
        return False
    inner = tuple(x - 2 for x in label[1:])
    return inner in set(gap_tuples(m + 2 * d - 2, d))


def is_injective_label(label: Label, m: int, d: int) -> bool:
    """label == {i_0, ..., i_{d-1}, m+2d} for an index tuple (i_0..i_{d-1})."""
    if label[-1] != m + 2 * d:
        return False
    inner = label[:-1]
    return inner in set(gap_tuples(m + 2 * d - 2, d))


def hom_nonzero(a: Label, b: Label) -> bool:
    """i_0 - 1 < j_0 < i_1 - 1 < j_1 < ... < i_d - 1 < j_d."""
    if len(a) != len(b):
        raise ParameterError("labels must have equal length")
    for t in range(len(a)):
        if not a[t] - 1 < b[t]:
            return False
        if t + 1 < len(a) and not b[t] < a[t + 1] - 1:
            return False
    return True


def tau_label(label: Label, direction: int, m: int, d: int) -> Optional[Label]:
    """Shift-by-one on labels: direction -1 is the inverse translate
    (label + 1, undefined on injectives), +1 the translate (label - 1,
    undefined on projectives)."""
    if direction not in (1, -1):
        raise ParameterError("direction must be +1 (tau) or -1 (tau inverse)")
    shifted = tuple(x - direction for x in label)
    return shifted if shifted in set(ct_labels(m, d)) else None


# --- elementary moves on l-ple intervals ---------------------------------


def _rebuild(s: CyclicSubset, remove: int, add: int) -> Optional[CyclicSubset]:
    elems = set(s.elements)
    elems.discard(remove)
    if add in elems:
        return None
    elems.add(add)
    return CyclicSubset.of(s.n, elems)


def v_op(s: CyclicSubset, i: int) -> Optional[CyclicSubset]:
    """Shift the i-th run up by one, linearly; None when a run would merge,
    wrap, or leave [1, n]."""
    dec = decompose(s)
    if not 1 <= i <= dec.count:
        return None
    if any(a > b for a, b in dec.pieces):
        return None  # wrapped input is out of the linear variant's domain
    start, end = dec.pieces[i - 1]
    if end + 1 > s.n:
        return None
    out = _rebuild(s, start, end + 1)
    if out is None or decompose(out).count != dec.count:
        return None
    return out


def h_op(s: CyclicSubset, i: int) -> Optional[CyclicSubset]:
    """Move the i-th run start down by one and trim the (i-1)-th run,
    linearly; undefined for i = 1."""
    dec = decompose(s)
    if not 2 <= i <= dec.count:
        return None
    if any(a > b for a, b in dec.pieces):
        return None
    start_i = dec.pieces[i - 1][0]
    end_prev = dec.pieces[i - 2][1]
    if start_i - 1 < 1:
        return None
    out = _rebuild(s, end_prev, start_i - 1)
    if out is None or decompose(out).count != dec.count:
        return None
    return out


def v_op_cyclic(s: CyclicSubset, i: int) -> Optional[CyclicSubset]:
    """Cyclic variant of v: index and value arithmetic mod n."""
    dec = decompose(s)
    if not 1 <= i <= dec.count:
        return None
    start, end = dec.pieces[i - 1]
    succ = end % s.n + 1
    if succ == start:
        return None
    out = _rebuild(s, start, succ)
    if out is None or decompose(out).count != dec.count:
        return None
    return out


def h_op_cyclic(s: CyclicSubset, i: int) -> Optional[CyclicSubset]:
    """Cyclic variant of h: run i-1 wraps around to run l when i = 1."""
    dec = decompose(s)
    if not 1 <= i <= dec.count or dec.count < 2:
        return None
    start_i = dec.pieces[i - 1][0]
    end_prev = dec.pieces[i - 2][1]  # i-2 == -1 wraps to the last run
    pred = (start_i - 2) % s.n + 1
    out = _rebuild(s, end_prev, pred)
    if out is None or decompose(out).count != dec.count:
        return None
    return out


def _move_images(s: CyclicSubset, cyclic: bool) -> list[tuple[CyclicSubset, str]]:
    v, h = (v_op_cyclic, h_op_cyclic) if cyclic else (v_op, h_op)
    count = decompose(s).count
    out = []
    for i in range(1, count + 1):
        img = v(s, i)
        if img is not None:
            out.append((img, f"v_{i}"))
        img = h(s, i)
        if img is not None:
            out.append((img, f"h_{i}"))
    return out


def _square_relations(vertices: set[Label], arrows: list[Arrow]) -> list[Relation]:
    """One commutativity relation per pair of distinct length-2 paths with
    the same endpoints."""
    outgoing: dict[Label, list[Label]] = {}
    for a in arrows:
        outgoing.setdefault(a.source, []).append(a.target)
    paths: dict[tuple[Label, Label], list[tuple[Label, ...]]] = {}
    for x, mids in outgoing.items():
        for mid in mids:
            for end in outgoing.get(mid, ()):
                paths.setdefault((x, end), []).append((x, mid, end))
    relations = []
    for route in paths.values():
        for p1, p2 in combinations(sorted(route), 2):
            relations.append(Relation(p1, p2))
    return relations


def tensor_quiver(n: int, k: int, l: int) -> LabeledQuiver:
    """Grid quiver on C_k of the standard slice; arrows are the linear
    v and h moves between vertices, relations the commuting squares."""
    grid = construct_Ck(standard_slice(n, l), k)
    vset = {m.elements for m in grid.members}
    arrows = []
    for member in grid.members:
        for img, tag in _move_images(member, cyclic=False):
            if img.elements in vset:
                arrows.append(Arrow(member.elements, img.elements, tag))
    relations = _square_relations(vset, arrows)
    return _quiver(vset, arrows, relations)
