"""Single-element mutations of collections and slices, and mutation paths.

A mutation replaces one member I by its cyclic shift I+1 or I-1, provided
the shifted set is still an l-ple interval, is not already present, and
the resulting collection stays non-l-intertwining.  There is no known
criterion predicting legality; everything here checks, never predicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ConsistencyError,
    DuplicateTargetError,
    IntertwiningError,
    NotAMemberError,
    NotInIndexSetError,
    ParameterError,
    PieceCountError,
    WorkbenchError,
)
from .slices import construct_Ck, require_slice
from .subsets import (
    Collection,
    CyclicSubset,
    decompose,
    hat,
    in_index_set,
    intertwines_either,
    pair_l_intertwines,
    require_valid,
)


def _parse_direction(direction) -> int:
    if direction in (1, "+", "plus"):
        return 1
    if direction in (-1, "-", "minus"):
        return -1
    raise ParameterError(f"direction must be '+' or '-', got {direction!r}")


def shift(s: CyclicSubset, direction) -> CyclicSubset:
    return s.shift(_parse_direction(direction))


def mutate(c: Collection, member: CyclicSubset, direction) -> Collection:
    """Replace member by its shift, checking legality.

    Raises, with distinct codes: not-a-member, wrong-piece-count (target
    leaves Subs(n, k, l)), duplicate-target, invalid-collection (input was
    already bad) and intertwining-pair naming the offending pair.
    """
    step = _parse_direction(direction)
    if member not in c:
        raise NotAMemberError(f"{member} is not in the collection")
    target = member.shift(step)
    if decompose(target).count != c.l:
        raise PieceCountError(
            f"shift of {member} has {decompose(target).count} pieces, needs {c.l}"
        )
    if target in c:
        raise DuplicateTargetError(f"shift of {member} is already a member")
    require_valid(c)
    for other in c.members:
        if other == member:
            continue
        if pair_l_intertwines(other, target, c.l):
            raise IntertwiningError(
                f"replacement {target} would {c.l}-intertwine {other}",
                pair=[list(other.elements), list(target.elements)],
            )
    return c.replace(member, target)


@dataclass(frozen=True)
class MutabilityReport:
    plus: bool
    minus: bool
    reasons: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"plus": self.plus, "minus": self.minus, "reasons": self.reasons}


def is_mutable(c: Collection, member: CyclicSubset) -> MutabilityReport:
    """Per-direction legality probe; reasons carry the blocking error."""
    if member not in c:
        raise NotAMemberError(f"{member} is not in the collection")
    flags = {}
    reasons = {}
    for name, step in (("plus", 1), ("minus", -1)):
        try:
            mutate(c, member, step)
            flags[name] = True
        except WorkbenchError as err:
            flags[name] = False
            reasons[name] = err.to_json()
    return MutabilityReport(flags["plus"], flags["minus"], reasons)


def slice_mutate(t: Collection, member: CyclicSubset, direction) -> Collection:
    """Shift one slice member and verify the result is again a slice."""
    step = _parse_direction(direction)
    if member not in t:
        raise NotAMemberError(f"{member} is not in the slice")
    target = member.shift(step)
    if target in t:
        raise DuplicateTargetError(f"shift of {member} is already a member")
    if not in_index_set(target, "cyclic"):
        raise NotInIndexSetError(f"shift {target} leaves the cyclic index set")
    for other in t.members:
        if other == member:
            continue
        if intertwines_either(other, target):
            raise IntertwiningError(
                f"replacement {target} would intertwine {other}",
                pair=[list(other.elements), list(target.elements)],
            )
    result = t.replace(member, target)
    require_slice(result)
    return result


def mutation_path(
    t: Collection, member: CyclicSubset, k: int
) -> tuple[list[tuple[CyclicSubset, str]], Collection]:
    """Plus-mutations carrying C_k(t) to C_k of the mutated slice.

    Mutates, in lexicographic order, exactly the members of C_k(t) whose
    run starts equal the mutated slice element; every intermediate
    collection is validity-checked by mutate itself.  Returns the steps
    and the final collection, which must equal C_k of the mutated slice.
    """
    mutated_slice = slice_mutate(t, member, "+")
    current = construct_Ck(t, k)
    steps: list[tuple[CyclicSubset, str]] = []
    for s in sorted(current.members):
        if hat(s) == member:
            current = mutate(current, s, "+")
            steps.append((s, "+"))
    expected = construct_Ck(mutated_slice, k)
    if current != expected:
        raise ConsistencyError(
            "mutation path did not land on C_k of the mutated slice"
        )
    return steps, current
