"""Conversions between the four models, plus quotient, product, subalgebra
and the square lift.

The groupoid <-> graph-pair maps are exact inverses on rectangular input;
graph_pair_to_groupoid validates the unique-path property while extracting
and fails fast with the offending pair.
"""

from __future__ import annotations

from .core import (
    BoolMatrix,
    GraphPair,
    Groupoid,
    Partition,
    bits_of,
    transpose_bits,
)
from .properties import congruence_violation


class ClosureError(ValueError):
    """A subset is not closed under the operation; carries the witness."""

    def __init__(self, a: int, b: int, product: int):
        super().__init__(f"subset not closed: {a}*{b} = {product} escapes")
        self.witness = (a, b, product)


def groupoid_to_graph_pair(g: Groupoid) -> GraphPair:
    """Red edges (a, a*b); green edges (a*b, b)."""
    n = g.order
    red = [0] * n
    green = [0] * n
    for a, row in enumerate(g.table):
        for b, x in enumerate(row):
            red[a] |= 1 << x
            green[x] |= 1 << b
    return GraphPair(n, tuple(red), tuple(green))


def graph_pair_to_groupoid(gp: GraphPair) -> Groupoid:
    """a*b = the middle node of the unique red-green path from a to b."""
    n = gp.order
    green_cols = transpose_bits(gp.green, n)
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            mids = gp.red[a] & green_cols[b]
            k = mids.bit_count()
            if k != 1:
                raise ValueError(
                    f"not a unique-path pair: ({a},{b}) has {k} red-green paths"
                )
            row.append(next(bits_of(mids)))
        table.append(tuple(row))
    return Groupoid(n, tuple(table))


def graph_pair_to_matrices(gp: GraphPair) -> tuple[BoolMatrix, BoolMatrix]:
    return BoolMatrix(gp.order, gp.red), BoolMatrix(gp.order, gp.green)


def matrices_to_graph_pair(a: BoolMatrix, b: BoolMatrix) -> GraphPair:
    if a.order != b.order:
        raise ValueError(f"matrix orders differ: {a.order} vs {b.order}")
    return GraphPair(a.order, a.rows, b.rows)


def quotient(g: Groupoid, p: Partition) -> Groupoid:
    """The quotient table on the blocks of a congruence, indexed by least
    element.  The result need not be rectangular even when g is."""
    bad = congruence_violation(g, p)
    if bad is not None:
        a, a2, b, b2 = bad
        raise ValueError(
            f"partition is not a congruence: ({a},{a2},{b},{b2}) maps to "
            f"different blocks"
        )
    idx = p.block_index
    reps = [block[0] for block in p.blocks]
    k = len(reps)
    table = tuple(
        tuple(idx[g.table[reps[i]][reps[j]]] for j in range(k))
        for i in range(k)
    )
    return Groupoid(k, table)


def direct_product(g: Groupoid, h: Groupoid) -> Groupoid:
    """Componentwise product on pairs, flattened as (a, b) -> a*|h| + b."""
    n, m = g.order, h.order
    table = []
    for a in range(n):
        for b in range(m):
            row = []
            for c in range(n):
                gp_ac = g.table[a][c]
                for d in range(m):
                    row.append(gp_ac * m + h.table[b][d])
            table.append(tuple(row))
    return Groupoid(n * m, tuple(table))


def subalgebra(g: Groupoid, subset: set[int] | frozenset[int]) -> Groupoid:
    """Restrict to a closed subset, reindexed by the sorted subset.

    Raises ClosureError with the escaping pair when the subset is not closed.
    """
    members = sorted(subset)
    if not members:
        raise ValueError("subset must be nonempty")
    if members[0] < 0 or members[-1] >= g.order:
        raise ValueError(f"subset {members} leaves 0..{g.order - 1}")
    where = {x: i for i, x in enumerate(members)}
    table = []
    for a in members:
        row = []
        for b in members:
            v = g.table[a][b]
            if v not in where:
                raise ClosureError(a, b, v)
            row.append(where[v])
        table.append(tuple(row))
    return Groupoid(len(members), tuple(table))


def square_lift(g: Groupoid) -> Groupoid:
    """The operation (a,b) . (c,d) = (a*c, c) on pairs, flattened row-major.

    The lift is rectangular for every input, and first-coordinate projection
    is a surjective homomorphism onto the input.
    """
    n = g.order
    table = []
    for a in range(n):
        # the product ignores both second coordinates
        row = tuple(g.table[a][c] * n + c for c in range(n) for _d in range(n))
        for _b in range(n):
            table.append(row)
    return Groupoid(n * n, tuple(table))
