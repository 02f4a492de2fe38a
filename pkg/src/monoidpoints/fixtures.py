"""Named example monoids."""
from __future__ import annotations

from .monoid import (
    FiniteMonoid,
    direct_product,
    from_transformations,
    full_transformation_monoid,
    trivial_monoid,
)


def two_element_semilattice() -> FiniteMonoid:
    """``{1, t}`` with ``t² = t``."""
    return FiniteMonoid([[0, 1], [1, 1]], 0, ["1", "t"])


def m5() -> FiniteMonoid:
    """``{1, 0, a, b, ab}`` with ``a² = a``, ``b² = b``, ``ba = 0`` and 0 a zero.

    The defining relations ``a² = a, b² = b`` are the ones under which the
    ideals ``Ma = {0, a}`` and ``MbM = {0, b, ab}`` come out as listed for
    this example; ``a² = 1`` would make ``a`` a unit.
    """
    # indices: 0 -> 1, 1 -> 0, 2 -> a, 3 -> b, 4 -> ab
    table = [
        [0, 1, 2, 3, 4],
        [1, 1, 1, 1, 1],
        [2, 1, 2, 4, 4],
        [3, 1, 1, 3, 1],
        [4, 1, 1, 4, 1],
    ]
    return FiniteMonoid(table, 0, ["1", "0", "a", "b", "ab"])


def cyclic_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteMonoid([[(i + j) % n for j in range(n)] for i in range(n)], 0,
                        ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)])


def monogenic(index: int, period: int) -> FiniteMonoid:
    """``{1, s, ..., s^(index+period-1)}`` with ``s^(index+period) = s^index``."""
    if index < 1 or period < 1:
        raise ValueError("index and period must be positive")
    top = index + period  # exponents 0..top-1

    def reduce(k: int) -> int:
        if k < top:
            return k
        return index + (k - index) % period

    table = [[reduce(i + j) for j in range(top)] for i in range(top)]
    names = ["1", "s"] + [f"s{k}" for k in range(2, top)]
    return FiniteMonoid(table, 0, names)


def semilattice_square() -> FiniteMonoid:
    """``{1, a, b, ab}``, the free semilattice monoid on two generators."""
    sq = direct_product(two_element_semilattice(), two_element_semilattice())
    return FiniteMonoid(sq.table, sq.identity, ["1", "b", "a", "ab"])


def brandt_monoid() -> FiniteMonoid:
    """The Brandt semigroup B2 with an identity adjoined (6 elements)."""
    # matrix units e_ij with e_ij e_kl = e_il if j == k else 0
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    names = ["1", "0"] + [f"e{i}{j}" for i, j in units]
    idx = {u: k + 2 for k, u in enumerate(units)}

    def mul(x: int, y: int) -> int:
        if x == 0:
            return y
        if y == 0:
            return x
        if x == 1 or y == 1:
            return 1
        (i, j), (k, l) = units[x - 2], units[y - 2]
        return idx[(i, l)] if j == k else 1

    return FiniteMonoid([[mul(x, y) for y in range(6)] for x in range(6)], 0, names)


def symmetric_and_idempotent_generators(degree: int) -> list[tuple[int, ...]]:
    """Transposition, n-cycle and a rank ``n-1`` idempotent: generators of T_n."""
    gens = []
    if degree >= 2:
        gens.append(tuple([1, 0] + list(range(2, degree))))
        cycle = tuple(list(range(1, degree)) + [0])
        if cycle not in gens:
            gens.append(cycle)
        gens.append(tuple([0, 0] + list(range(2, degree))))
    return gens


def t_n(degree: int, from_generators: bool = True) -> FiniteMonoid:
    if from_generators:
        return from_transformations(degree, symmetric_and_idempotent_generators(degree))
    return full_transformation_monoid(degree)


FIXTURES = {
    "trivial": trivial_monoid,
    "two": two_element_semilattice,
    "m5": m5,
    "t2": lambda: t_n(2),
    "t3": lambda: t_n(3),
    "c2": lambda: cyclic_group(2),
    "c3": lambda: cyclic_group(3),
    "c4": lambda: cyclic_group(4),
    "c5": lambda: cyclic_group(5),
    "square": semilattice_square,
    "brandt": brandt_monoid,
    "nil6": lambda: monogenic(6, 1),
    "s3": lambda: monogenic(2, 1),
}


def fixture(name: str) -> FiniteMonoid:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
