import pytest

from interlace.subsets import Collection, CyclicSubset


def cs(n, given):
    """Subset shorthand: cs(8, "1356") or cs(12, [1, 3, 11])."""
    if isinstance(given, str):
        return CyclicSubset.of(n, [int(ch) for ch in given])
    return CyclicSubset.of(n, given)


def coll(n, k, l, *members):
    return Collection.of(n, k, l, [cs(n, s) for s in members])


@pytest.fixture
def t1():
    return coll(8, 3, 3, "135", "136", "137", "146", "147", "157")


@pytest.fixture
def t2():
    return coll(8, 3, 3, "135", "136", "137", "357", "147", "157")


@pytest.fixture
def c4_t1(t1):
    from interlace.slices import construct_Ck

    return construct_Ck(t1, 4)


REFERENCE_C4 = ("1356", "1346", "1367", "1347", "1246", "1467", "1247", "1457", "1257")
