"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the package's bitset machinery: literal
quantifier loops, plain integer matrix products, and set bookkeeping, so a
disagreement always points at exactly one side.
"""

from itertools import combinations, permutations, product
from math import comb

from rectangular.core import BoolMatrix, GraphPair, Groupoid, PartialArray


def quasi_rectangular(g: Groupoid) -> bool:
    """Literal check of: a*b = c*d = x  implies  a*d = c*b = x."""
    t = g.table
    n = g.order
    for a, b, c, d in product(range(n), repeat=4):
        x = t[a][b]
        if t[c][d] == x and (t[a][d] != x or t[c][b] != x):
            return False
    return True


def p1_by_sets(g: Groupoid) -> bool:
    """Pair-disjointness via explicit pair sets."""
    row_pairs = set()
    col_pairs = set()
    n = g.order
    for i in range(n):
        row = [g.table[i][j] for j in range(n)]
        col = [g.table[j][i] for j in range(n)]
        for bucket, line in ((row_pairs, row), (col_pairs, col)):
            for x, y in combinations(sorted(set(line)), 2):
                bucket.add((x, y))
    return not row_pairs & col_pairs


def p2_by_counting(gp: GraphPair) -> bool:
    red = gp.red_edges()
    green = gp.green_edges()
    n = gp.order
    for a in range(n):
        for b in range(n):
            paths = [c for c in range(n) if (a, c) in red and (c, b) in green]
            if len(paths) != 1:
                return False
    return True


def matmul(a: BoolMatrix, b: BoolMatrix) -> list[list[int]]:
    n = a.order
    ag, bg = a.to_grid(), b.to_grid()
    return [[sum(ag[i][k] * bg[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def all_tables(n: int):
    """Every groupoid of order n (n^(n*n) of them; keep n tiny)."""
    for flat in product(range(n), repeat=n * n):
        yield Groupoid(n, tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def automorphism_count(g: Groupoid) -> int:
    n = g.order
    count = 0
    for sigma in permutations(range(n)):
        if all(sigma[g.table[a][b]] == g.table[sigma[a]][sigma[b]]
               for a in range(n) for b in range(n)):
            count += 1
    return count


def random_groupoid(rng, n: int) -> Groupoid:
    return Groupoid(n, tuple(tuple(rng.randrange(n) for _ in range(n))
                             for _ in range(n)))


def random_partial(rng, n: int, fill: float) -> PartialArray:
    cells = tuple(
        tuple(rng.randrange(n) if rng.random() < fill else None
              for _ in range(n))
        for _ in range(n)
    )
    return PartialArray(n, cells)


def random_graph_pair(rng, n: int) -> GraphPair:
    rows = lambda: tuple(rng.randrange(1 << n) for _ in range(n))
    return GraphPair(n, rows(), rows())


def random_permutation(rng, n: int) -> tuple[int, ...]:
    images = list(range(n))
    rng.shuffle(images)
    return tuple(images)


def falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def blow_up_count_exact(n: int, m: int) -> int:
    """Inclusion-exclusion over the coincidence points of the corner maps.

    A one-element blow-up of the n x m band is a pair of maps f: B->A (new
    row, one value per column block) and g: A->B (new column) such that
    g(f(b)) = b for exactly one b, which pins the corner.
    """
    return sum((-1) ** (k - 1) * k * comb(m, k) * falling(n, k)
               * n ** (m - k) * m ** (n - k)
               for k in range(1, min(n, m) + 1))


def symmetric_group_3():
    """Cayley table of the permutations of three points."""
    from rectangular.core import FiniteGroup

    elems = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(3))] for q in elems)
        for p in elems
    )
    return FiniteGroup(6, table)
