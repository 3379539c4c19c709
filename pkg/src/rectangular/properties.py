"""The predicate suite: defining properties, equational special cases, and
partial-array conditions.

Every ``*_violation`` function returns the first witness tuple in a fixed
scan order, or ``None``; the boolean predicates are thin wrappers.  Witnesses
are what the CLI prints when a check comes out false.
"""

from __future__ import annotations

from itertools import product

from .core import (
    BoolMatrix,
    GraphPair,
    Groupoid,
    Partition,
    PartialArray,
    bits_of,
    transpose_bits,
)


def _symbol_masks(g: Groupoid) -> tuple[list[int], list[int], list[int]]:
    """Per-symbol row mask, column mask, and cell count."""
    n = g.order
    rows = [0] * n
    cols = [0] * n
    counts = [0] * n
    for a, row in enumerate(g.table):
        for b, x in enumerate(row):
            rows[x] |= 1 << a
            cols[x] |= 1 << b
            counts[x] += 1
    return rows, cols, counts


def rectangularity_violation(g: Groupoid) -> tuple[int, int, int] | None:
    """First (symbol, row, col) where the symbol's rectangle is broken.

    A table is rectangular iff each symbol's cells are exactly the product of
    the rows and the columns it occurs in; it suffices to compare cell counts
    and then locate an offending cell.
    """
    rows, cols, counts = _symbol_masks(g)
    for x in range(g.order):
        if counts[x] and counts[x] != rows[x].bit_count() * cols[x].bit_count():
            for r in bits_of(rows[x]):
                for c in bits_of(cols[x]):
                    if g.table[r][c] != x:
                        return (x, r, c)
    return None


def is_rectangular(g: Groupoid) -> bool:
    return rectangularity_violation(g) is None


def _mate_masks(g: Groupoid) -> tuple[list[int], list[int]]:
    """For each symbol: the other symbols sharing a row / a column with it."""
    n = g.order
    row_sets = [0] * n
    col_sets = [0] * n
    for a in range(n):
        m = 0
        for b in range(n):
            m |= 1 << g.table[a][b]
        row_sets[a] = m
    for b in range(n):
        m = 0
        for a in range(n):
            m |= 1 << g.table[a][b]
        col_sets[b] = m
    rowmate = [0] * n
    colmate = [0] * n
    for a in range(n):
        for x in bits_of(row_sets[a]):
            rowmate[x] |= row_sets[a]
    for b in range(n):
        for x in bits_of(col_sets[b]):
            colmate[x] |= col_sets[b]
    for x in range(n):
        rowmate[x] &= ~(1 << x)
        colmate[x] &= ~(1 << x)
    return rowmate, colmate


def p1_violation(g: Groupoid) -> tuple[int, int, int, int] | None:
    """First (x, y, row, col) with the pair {x, y} in both a row and a column."""
    rowmate, colmate = _mate_masks(g)
    n = g.order
    for x in range(n):
        both = rowmate[x] & colmate[x]
        if both:
            y = next(bits_of(both))
            row = next(a for a in range(n)
                       if x in g.table[a] and y in g.table[a])
            col = next(b for b in range(n)
                       if x in [g.table[a][b] for a in range(n)]
                       and y in [g.table[a][b] for a in range(n)])
            return (x, y, row, col)
    return None


def satisfies_p1(g: Groupoid) -> bool:
    return p1_violation(g) is None


def p2_violation(gp: GraphPair) -> tuple[int, int, int] | None:
    """First (a, b, count) whose red-green two-step path count is not 1."""
    green_cols = transpose_bits(gp.green, gp.order)
    for a in range(gp.order):
        red_row = gp.red[a]
        for b in range(gp.order):
            k = (red_row & green_cols[b]).bit_count()
            if k != 1:
                return (a, b, k)
    return None


def satisfies_p2(gp: GraphPair) -> bool:
    return p2_violation(gp) is None


def p4_violation(a: BoolMatrix, b: BoolMatrix) -> tuple[int, int, int] | None:
    """First (i, j, value) where the integer product entry differs from 1."""
    if a.order != b.order:
        raise ValueError(f"matrix orders differ: {a.order} vs {b.order}")
    b_cols = transpose_bits(b.rows, b.order)
    for i in range(a.order):
        for j in range(a.order):
            v = (a.rows[i] & b_cols[j]).bit_count()
            if v != 1:
                return (i, j, v)
    return None


def satisfies_p4(a: BoolMatrix, b: BoolMatrix) -> bool:
    return p4_violation(a, b) is None


def fullness_violation(g: Groupoid) -> tuple[int] | None:
    """A symbol that never occurs in the table."""
    present = 0
    for row in g.table:
        for x in row:
            present |= 1 << x
    missing = ~present & ((1 << g.order) - 1)
    return (next(bits_of(missing)),) if missing else None


def is_full(g: Groupoid) -> bool:
    return fullness_violation(g) is None


def maximality_violation(g: Groupoid) -> tuple[int, int] | None:
    """A pair of distinct symbols co-occurring in no row and no column."""
    rowmate, colmate = _mate_masks(g)
    full = (1 << g.order) - 1
    for x in range(g.order):
        missing = full & ~(rowmate[x] | colmate[x]) & ~(1 << x)
        if missing:
            # co-occurrence is symmetric, so the first hit has y > x
            return (x, next(bits_of(missing)))
    return None


def is_maximal(g: Groupoid) -> bool:
    return maximality_violation(g) is None


def idempotence_violation(g: Groupoid) -> tuple[int] | None:
    for a in range(g.order):
        if g.table[a][a] != a:
            return (a,)
    return None


def is_idempotent(g: Groupoid) -> bool:
    return idempotence_violation(g) is None


def associativity_violation(g: Groupoid) -> tuple[int, int, int] | None:
    t = g.table
    for a, b, c in product(range(g.order), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return (a, b, c)
    return None


def is_associative(g: Groupoid) -> bool:
    return associativity_violation(g) is None


def centrality_violation(g: Groupoid) -> tuple[int, int, int] | None:
    """First (x, y, z) with (x*y)*(y*z) != y."""
    t = g.table
    for x, y, z in product(range(g.order), repeat=3):
        if t[t[x][y]][t[y][z]] != y:
            return (x, y, z)
    return None


def is_central(g: Groupoid) -> bool:
    return centrality_violation(g) is None


def undirected_eq_violation(g: Groupoid) -> tuple[int, int, int] | None:
    """First (a, b, c) with (a*b)*(c*a) != a."""
    t = g.table
    for a, b, c in product(range(g.order), repeat=3):
        if t[t[a][b]][t[c][a]] != a:
            return (a, b, c)
    return None


def satisfies_undirected_eq(g: Groupoid) -> bool:
    return undirected_eq_violation(g) is None


def partitioned_eqs_violation(g: Groupoid) -> tuple[int, ...] | None:
    """Witness against {a*a = a, (a*b)*c = a*c}: (a,) or (a, b, c)."""
    bad = idempotence_violation(g)
    if bad:
        return bad
    t = g.table
    for a, b, c in product(range(g.order), repeat=3):
        if t[t[a][b]][c] != t[a][c]:
            return (a, b, c)
    return None


def satisfies_partitioned_eqs(g: Groupoid) -> bool:
    return partitioned_eqs_violation(g) is None


def dually_partitioned_eqs_violation(g: Groupoid) -> tuple[int, ...] | None:
    """Witness against {a*a = a, a*(b*c) = a*c}: (a,) or (a, b, c)."""
    bad = idempotence_violation(g)
    if bad:
        return bad
    t = g.table
    for a, b, c in product(range(g.order), repeat=3):
        if t[a][t[b][c]] != t[a][c]:
            return (a, b, c)
    return None


def satisfies_dually_partitioned_eqs(g: Groupoid) -> bool:
    return dually_partitioned_eqs_violation(g) is None


def left_reabsorption_violation(g: Groupoid) -> tuple[int, int] | None:
    """First (a, b) with a*(a*b) != a*b."""
    t = g.table
    for a, b in product(range(g.order), repeat=2):
        if t[a][t[a][b]] != t[a][b]:
            return (a, b)
    return None


def satisfies_left_reabsorption(g: Groupoid) -> bool:
    return left_reabsorption_violation(g) is None


def right_reabsorption_violation(g: Groupoid) -> tuple[int, int] | None:
    """First (a, b) with (a*b)*b != a*b."""
    t = g.table
    for a, b in product(range(g.order), repeat=2):
        if t[t[a][b]][b] != t[a][b]:
            return (a, b)
    return None


def satisfies_right_reabsorption(g: Groupoid) -> bool:
    return right_reabsorption_violation(g) is None


def _incidence_rows(g: Groupoid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Red and green bitset rows of the groupoid's graph pair."""
    n = g.order
    red = [0] * n
    green = [0] * n
    for a, row in enumerate(g.table):
        for b, x in enumerate(row):
            red[a] |= 1 << x
            green[x] |= 1 << b
    return tuple(red), tuple(green)


def matrix_symmetry_violation(g: Groupoid) -> tuple[str, int, int, int] | None:
    """First (direction, a, b, count) where a two-step path count is not 1.

    Direction "red-green" corresponds to the product AB, "green-red" to BA.
    """
    red, green = _incidence_rows(g)
    n = g.order
    green_cols = transpose_bits(green, n)
    red_cols = transpose_bits(red, n)
    for a in range(n):
        for b in range(n):
            k = (red[a] & green_cols[b]).bit_count()
            if k != 1:
                return ("red-green", a, b, k)
    for a in range(n):
        for b in range(n):
            k = (green[a] & red_cols[b]).bit_count()
            if k != 1:
                return ("green-red", a, b, k)
    return None


def is_matrix_symmetric(g: Groupoid) -> bool:
    return matrix_symmetry_violation(g) is None


def derive_plus(g: Groupoid) -> Groupoid:
    """The companion operation: a + b is the middle node of the unique
    green-red two-step path from a to b.

    Requires ``is_matrix_symmetric(g)``; together the two operations satisfy
    (a*b)+(b*c) = b and (a+b)*(b+c) = b.
    """
    red, green = _incidence_rows(g)
    n = g.order
    red_cols = transpose_bits(red, n)
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            mids = green[a] & red_cols[b]
            k = mids.bit_count()
            if k != 1:
                raise ValueError(
                    f"not matrix-symmetric: pair ({a},{b}) has {k} green-red paths"
                )
            row.append(next(bits_of(mids)))
        table.append(tuple(row))
    return Groupoid(n, tuple(table))


def partial_latin_violation(p: PartialArray) -> tuple[str, int, int] | None:
    """First (axis, index, symbol) with a repeated symbol in a row or column."""
    n = p.order
    for i in range(n):
        seen = 0
        for j in range(n):
            e = p.cells[i][j]
            if e is None:
                continue
            if seen >> e & 1:
                return ("row", i, e)
            seen |= 1 << e
    for j in range(n):
        seen = 0
        for i in range(n):
            e = p.cells[i][j]
            if e is None:
                continue
            if seen >> e & 1:
                return ("col", j, e)
            seen |= 1 << e
    return None


def is_partial_latin(p: PartialArray) -> bool:
    return partial_latin_violation(p) is None


def partial_p1_violation(p: PartialArray) -> tuple[int, int, int, int] | None:
    """First (x, y, row, col) with the pair {x, y} in both a row and a column."""
    n = p.order
    rowmate = [0] * n
    colmate = [0] * n
    row_sets = [0] * n
    col_sets = [0] * n
    for i, j, e in p.filled():
        row_sets[i] |= 1 << e
        col_sets[j] |= 1 << e
    for m in row_sets:
        for x in bits_of(m):
            rowmate[x] |= m & ~(1 << x)
    for m in col_sets:
        for x in bits_of(m):
            colmate[x] |= m & ~(1 << x)
    for x in range(n):
        both = rowmate[x] & colmate[x]
        if both:
            y = next(bits_of(both))
            row = next(i for i in range(n)
                       if row_sets[i] >> x & 1 and row_sets[i] >> y & 1)
            col = next(j for j in range(n)
                       if col_sets[j] >> x & 1 and col_sets[j] >> y & 1)
            return (x, y, row, col)
    return None


def is_partial_p1(p: PartialArray) -> bool:
    return partial_p1_violation(p) is None


def blackburn_violation(
    p: PartialArray,
) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]] | None:
    """Two equal-symbol cells whose opposite corner is occupied.

    Returns ((i, j), (k, l), corner) where corner is the offending filled
    cell (i, l) or (k, j).
    """
    by_symbol: dict[int, list[tuple[int, int]]] = {}
    for i, j, e in p.filled():
        by_symbol.setdefault(e, []).append((i, j))
    for cells in by_symbol.values():
        for a in range(len(cells)):
            i, j = cells[a]
            for b in range(a + 1, len(cells)):
                k, l = cells[b]
                if i == k or j == l:
                    continue
                if p.cells[i][l] is not None:
                    return ((i, j), (k, l), (i, l))
                if p.cells[k][j] is not None:
                    return ((i, j), (k, l), (k, j))
    return None


def has_blackburn(p: PartialArray) -> bool:
    return blackburn_violation(p) is None


def congruence_violation(g: Groupoid, p: Partition) -> tuple[int, int, int, int] | None:
    """First (a, a', b, b') with a=a', b=b' mod p but a*b != a'*b' mod p."""
    if p.order != g.order:
        raise ValueError(f"partition order {p.order} differs from groupoid order {g.order}")
    idx = p.block_index
    t = g.table
    n = g.order
    for block in p.blocks:
        for ai in range(len(block)):
            a = block[ai]
            for a2 in block[ai + 1:]:
                for b in range(n):
                    if idx[t[a][b]] != idx[t[a2][b]]:
                        return (a, a2, b, b)
                    if idx[t[b][a]] != idx[t[b][a2]]:
                        return (b, b, a, a2)
    return None


def is_congruence(g: Groupoid, p: Partition) -> bool:
    return congruence_violation(g, p) is None
