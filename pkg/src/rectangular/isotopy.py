"""Isotopy application and search, isomorphism via canonical forms,
transversal search, and the transversal <-> idempotent-isotope link.

Orientation convention: a witness (alpha, beta, gamma) maps g to h via

    h(a, b) = gamma^-1( g(alpha(a), beta(b)) )

so the identity triple is the identity isotopy and componentwise inversion
inverts a witness.
"""

from __future__ import annotations

from itertools import permutations

from .core import (
    CapacityError,
    Groupoid,
    IsotopyTriple,
    Permutation,
    Transversal,
    compose,
)

ISOTOPY_SEARCH_BOUND = 6
CANONICAL_FORM_BOUND = 9


def apply_isotopy(g: Groupoid, t: IsotopyTriple) -> Groupoid:
    if t.order != g.order:
        raise ValueError(f"triple order {t.order} differs from groupoid order {g.order}")
    n = g.order
    a_img, b_img = t.alpha.images, t.beta.images
    g_inv = t.gamma.inverse().images
    table = tuple(
        tuple(g_inv[g.table[a_img[a]][b_img[b]]] for b in range(n))
        for a in range(n)
    )
    return Groupoid(n, table)


def are_isotopic(g: Groupoid, h: Groupoid) -> IsotopyTriple | None:
    """Search for a witness mapping g to h, or None.

    Iterates (alpha, beta) in lexicographic order; gamma is induced cell by
    cell and checked for consistency, which cuts the search from n!^3 to
    n!^2.  The first witness found is returned.
    """
    if g.order != h.order:
        raise ValueError(f"orders differ: {g.order} vs {h.order}")
    n = g.order
    if n > ISOTOPY_SEARCH_BOUND:
        raise CapacityError(
            f"isotopy search is factorial; order {n} exceeds bound {ISOTOPY_SEARCH_BOUND}"
        )
    gt, ht = g.table, h.table
    cells = [(a, b) for a in range(n) for b in range(n)]
    for alpha in permutations(range(n)):
        rows = [gt[alpha[a]] for a in range(n)]
        for beta in permutations(range(n)):
            gamma = [-1] * n
            used = 0
            ok = True
            for a, b in cells:
                key = ht[a][b]
                val = rows[a][beta[b]]
                cur = gamma[key]
                if cur < 0:
                    if used >> val & 1:
                        ok = False
                        break
                    gamma[key] = val
                    used |= 1 << val
                elif cur != val:
                    ok = False
                    break
            if not ok:
                continue
            free = iter(v for v in range(n) if not used >> v & 1)
            images = tuple(x if x >= 0 else next(free) for x in gamma)
            return IsotopyTriple(Permutation(alpha), Permutation(beta),
                                 Permutation(images))
    return None


def relabel(g: Groupoid, sigma: Permutation) -> Groupoid:
    """Rename rows, columns and symbols simultaneously by sigma."""
    if sigma.order != g.order:
        raise ValueError("permutation order differs from groupoid order")
    n = g.order
    inv = sigma.inverse().images
    img = sigma.images
    table = tuple(
        tuple(img[g.table[inv[a]][inv[b]]] for b in range(n))
        for a in range(n)
    )
    return Groupoid(n, table)


def _min_relabeling(g: Groupoid) -> tuple[tuple[int, ...], Permutation]:
    """Lexicographically least flattened relabeled table, with the relabeling."""
    n = g.order
    t = g.table
    best: list[int] | None = None
    best_sigma: tuple[int, ...] | None = None
    cells = [(a, b) for a in range(n) for b in range(n)]
    for inv in permutations(range(n)):
        sigma = [0] * n
        for i, v in enumerate(inv):
            sigma[v] = i
        if best is None:
            best = [sigma[t[inv[a]][inv[b]]] for a, b in cells]
            best_sigma = tuple(sigma)
            continue
        current: list[int] = []
        verdict = 0
        for idx, (a, b) in enumerate(cells):
            v = sigma[t[inv[a]][inv[b]]]
            if verdict == 0:
                if v > best[idx]:
                    verdict = 1
                    break
                if v < best[idx]:
                    verdict = -1
            current.append(v)
        if verdict == -1:
            best = current
            best_sigma = tuple(sigma)
    assert best is not None and best_sigma is not None
    return tuple(best), Permutation(best_sigma)


def canonical_form(g: Groupoid) -> Groupoid:
    """The least table over all simultaneous relabelings; isomorphism-complete."""
    if g.order > CANONICAL_FORM_BOUND:
        raise CapacityError(
            f"canonical form is factorial; order {g.order} exceeds bound "
            f"{CANONICAL_FORM_BOUND}"
        )
    flat, _ = _min_relabeling(g)
    n = g.order
    return Groupoid(n, tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def are_isomorphic(g: Groupoid, h: Groupoid) -> Permutation | None:
    """A permutation sigma with relabel(g, sigma) = h, or None."""
    if g.order != h.order:
        raise ValueError(f"orders differ: {g.order} vs {h.order}")
    if g.order > CANONICAL_FORM_BOUND:
        raise CapacityError(
            f"isomorphism test is factorial; order {g.order} exceeds bound "
            f"{CANONICAL_FORM_BOUND}"
        )
    flat_g, sigma_g = _min_relabeling(g)
    flat_h, sigma_h = _min_relabeling(h)
    if flat_g != flat_h:
        return None
    witness = compose(sigma_h.inverse(), sigma_g)
    assert relabel(g, witness) == h
    return witness


def find_transversal(g: Groupoid) -> Transversal | None:
    """n cells, one per row and column, covering every symbol once.

    Depth-first over rows with column/symbol bitmasks; returns the first
    selection in row-major order, so the result is deterministic.
    """
    n = g.order
    cols_free = (1 << n) - 1
    syms_free = (1 << n) - 1
    chosen: list[tuple[int, int]] = []

    def descend(row: int, cols: int, syms: int) -> bool:
        if row == n:
            return True
        for c in range(n):
            bit = 1 << c
            if not cols & bit:
                continue
            s = 1 << g.table[row][c]
            if not syms & s:
                continue
            chosen.append((row, c))
            if descend(row + 1, cols & ~bit, syms & ~s):
                return True
            chosen.pop()
        return False

    if not descend(0, cols_free, syms_free):
        return None
    return Transversal(n, tuple(chosen))


def idempotent_isotope(g: Groupoid) -> tuple[IsotopyTriple, Groupoid] | None:
    """An isotope with a*a = a for all a, built from a transversal.

    alpha sends each symbol to the transversal row it sits in, beta to its
    column; gamma is the identity.  Returns None exactly when no transversal
    exists.
    """
    t = find_transversal(g)
    if t is None:
        return None
    n = g.order
    row_of = [0] * n
    col_of = [0] * n
    for r, c in t.cells:
        s = g.table[r][c]
        row_of[s] = r
        col_of[s] = c
    triple = IsotopyTriple(Permutation(tuple(row_of)), Permutation(tuple(col_of)),
                           Permutation.identity(n))
    return triple, apply_isotopy(g, triple)
