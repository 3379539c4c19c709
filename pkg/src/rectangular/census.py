"""Exhaustive censuses: rectangular tables, central groupoids (BB = J
matrices), and one-element blow-ups of rectangular bands.

The rectangular search backtracks over cells keeping the per-symbol
rectangle criterion consistent at every step.  The central search works on
the matrix model: row i's out-neighbours must index rows that tile the
column set, which is checked incrementally; BB = J forces BJ = JB, hence
every row and column sum equals sqrt(n) and the trace is sqrt(n), so loops
can be pinned to the first sqrt(n) indices and solutions deduplicated by a
minimum over the loop-preserving relabelings.

Searches can be split over a worker pool at the first row/cell; results are
merged and sorted, so output is identical for every worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .construct import rectangular_band
from .core import CapacityError, GraphPair, Groupoid, bits_of, mask_of
from .isotopy import are_isotopic, canonical_form
from .properties import is_central, is_rectangular
from .transform import graph_pair_to_groupoid

RECT_LIST_BOUND = 3       # full labeled listing
RECT_COUNT_BOUND = 4      # labeled counting / isomorphism classes
RECT_ISOTOPY_BOUND = 3
ITER_BOUND = 5            # streaming generator
CENTRAL_BOUND = 16
BLOW_UP_BOUND = 12


@dataclass(frozen=True)
class CensusResult:
    order: int
    mode: str
    count: int
    tables: tuple[Groupoid, ...] | None
    note: str | None = None


def _can_place(n, table, filled, row_masks, col_masks, r, c, y) -> bool:
    """May symbol y go at (r, c) without breaking any symbol's rectangle?"""
    rbit = 1 << r
    cbit = 1 << c
    for z in range(n):
        if z != y and row_masks[z] & rbit and col_masks[z] & cbit:
            return False  # cell is demanded by z's rectangle
    rm = row_masks[y]
    while rm:
        low = rm & -rm
        r2 = low.bit_length() - 1
        rm ^= low
        if filled[r2] & cbit and table[r2][c] != y:
            return False
    cm = col_masks[y]
    frow = filled[r]
    trow = table[r]
    while cm:
        low = cm & -cm
        c2 = low.bit_length() - 1
        cm ^= low
        if frow >> c2 & 1 and trow[c2] != y:
            return False
    return True


def _rect_flats(n: int, first_value: int | None = None):
    """Yield every rectangular order-n table as a flat tuple, in lex order."""
    table = [[-1] * n for _ in range(n)]
    filled = [0] * n
    row_masks = [0] * n
    col_masks = [0] * n
    cells = [(r, c) for r in range(n) for c in range(n)]
    total = n * n

    def dfs(idx):
        if idx == total:
            yield tuple(table[r][c] for r, c in cells)
            return
        r, c = cells[idx]
        options = (first_value,) if idx == 0 and first_value is not None else range(n)
        for y in options:
            if not _can_place(n, table, filled, row_masks, col_masks, r, c, y):
                continue
            old_rm, old_cm = row_masks[y], col_masks[y]
            table[r][c] = y
            filled[r] |= 1 << c
            row_masks[y] |= 1 << r
            col_masks[y] |= 1 << c
            yield from dfs(idx + 1)
            table[r][c] = -1
            filled[r] &= ~(1 << c)
            row_masks[y], col_masks[y] = old_rm, old_cm

    yield from dfs(0)


def iter_rectangular_tables(n: int):
    """Stream every rectangular groupoid of order n in lex table order."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > ITER_BOUND:
        raise CapacityError(f"streaming bound is order {ITER_BOUND}")
    size = n
    for flat in _rect_flats(n):
        yield Groupoid(size, tuple(flat[i * size:(i + 1) * size] for i in range(size)))


def _rect_worker(args: tuple[int, int]) -> list[tuple[int, ...]]:
    n, v = args
    return list(_rect_flats(n, first_value=v))


def _collect_rect_flats(n: int, jobs: int) -> list[tuple[int, ...]]:
    shards = [(n, v) for v in range(n)]
    if jobs > 1 and n > 1:
        import multiprocessing

        with multiprocessing.Pool(min(jobs, len(shards))) as pool:
            parts = pool.map(_rect_worker, shards)
    else:
        parts = [_rect_worker(s) for s in shards]
    flats = [f for part in parts for f in part]
    flats.sort()
    return flats


def _groupoid(n: int, flat: tuple[int, ...]) -> Groupoid:
    return Groupoid(n, tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def enumerate_rectangular(n: int, mode: str = "labeled", jobs: int = 1) -> CensusResult:
    """Census of rectangular groupoids of order n.

    mode "labeled": all tables (listed up to order 3, counted at order 4).
    mode "isomorphism": canonical class representatives, order <= 4.
    mode "isotopy": isomorphism classes merged along isotopies, order <= 3.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if mode not in ("labeled", "isomorphism", "isotopy"):
        raise ValueError(f"unknown mode {mode!r}")
    bound = {"labeled": RECT_COUNT_BOUND,
             "isomorphism": RECT_COUNT_BOUND,
             "isotopy": RECT_ISOTOPY_BOUND}[mode]
    if n > bound:
        raise CapacityError(f"mode {mode} is bounded at order {bound}")

    flats = _collect_rect_flats(n, jobs)
    if mode == "labeled":
        if n > RECT_LIST_BOUND:
            return CensusResult(n, mode, len(flats), None,
                                note=f"listing is bounded at order {RECT_LIST_BOUND}")
        return CensusResult(n, mode, len(flats),
                            tuple(_groupoid(n, f) for f in flats))

    reps = sorted({canonical_form(_groupoid(n, f)).flat() for f in flats})
    groupoids = [_groupoid(n, f) for f in reps]
    if mode == "isomorphism":
        return CensusResult(n, mode, len(groupoids), tuple(groupoids))

    classes: list[list[Groupoid]] = []
    for g in groupoids:
        for cls in classes:
            if are_isotopic(cls[0], g) is not None:
                cls.append(g)
                break
        else:
            classes.append([g])
    picks = sorted((min(cls, key=Groupoid.flat) for cls in classes),
                   key=Groupoid.flat)
    return CensusResult(n, mode, len(picks), tuple(picks))


def _row_candidates(m: int) -> list[list[int]]:
    """Per row index: the popcount-m masks obeying the pinned-loop rule."""
    n = m * m
    cand: list[list[int]] = []
    for t in range(n):
        others = [j for j in range(n) if j != t]
        if t < m:
            masks = [1 << t | mask_of(rest) for rest in combinations(others, m - 1)]
        else:
            masks = [mask_of(rest) for rest in combinations(others, m)]
        masks.sort()
        cand.append(masks)
    return cand


def _central_solutions(m: int, first_row: int | None = None) -> list[tuple[int, ...]]:
    """All BB = J matrices with loops at rows 0..m-1, as bitset row tuples."""
    n = m * m
    full = (1 << n) - 1
    cand = _row_candidates(m)

    rows: list[int | None] = [None] * n
    unions = [0] * n      # OR of assigned rows indexed by bits of rows[i]
    missing = [0] * n     # how many of those rows are still unassigned
    watchers: list[list[int]] = [[] for _ in range(n)]
    colcount = [0] * n
    forced: dict[int, int] = {}
    out: list[tuple[int, ...]] = []
    bit_lists: dict[int, tuple[int, ...]] = {}

    def bits(mask: int) -> tuple[int, ...]:
        got = bit_lists.get(mask)
        if got is None:
            got = tuple(bits_of(mask))
            bit_lists[mask] = got
        return got

    def diag_ok(k: int, mask: int) -> bool:
        return (mask >> k & 1) == (1 if k < m else 0)

    def force(k: int, fmask: int, trail: list[int]) -> bool:
        if not diag_ok(k, fmask) or fmask.bit_count() != m:
            return False
        if k in forced:
            return forced[k] == fmask
        forced[k] = fmask
        trail.append(k)
        return True

    def assign(t: int, full_cols: int) -> None:
        if t == n:
            out.append(tuple(rows))  # type: ignore[arg-type]
            return
        if t in forced:
            fmask = forced[t]
            options = (fmask,) if fmask.bit_count() == m and diag_ok(t, fmask) else ()
        elif t == 0 and first_row is not None:
            options = (first_row,)
        else:
            options = cand[t]
        remaining = n - 1 - t
        for mask in options:
            if mask & full_cols:
                continue
            skip = False
            for i in watchers[t]:
                if unions[i] & mask:
                    skip = True
                    break
            if skip:
                continue
            union_own = 0
            miss_own = 0
            mask_bits = bits(mask)
            for k in mask_bits:
                rk = mask if k == t else rows[k]
                if rk is None:
                    miss_own += 1
                    continue
                if rk & union_own:
                    skip = True
                    break
                union_own |= rk
            if skip:
                continue

            rows[t] = mask
            unions[t] = union_own
            missing[t] = miss_own
            new_full = full_cols
            for j in mask_bits:
                colcount[j] += 1
                if colcount[j] == m:
                    new_full |= 1 << j
            watch_trail = []
            for k in mask_bits:
                if rows[k] is None:
                    watchers[k].append(t)
                    watch_trail.append(k)
            union_trail: list[tuple[int, int, int]] = []
            forced_trail: list[int] = []
            dead = any(m - colcount[j] > remaining for j in range(n))
            if not dead:
                for i in watchers[t]:
                    union_trail.append((i, unions[i], missing[i]))
                    unions[i] |= mask
                    missing[i] -= 1
                    if missing[i] == 1:
                        k = next(k for k in bits(rows[i]) if rows[k] is None)
                        if not force(k, full ^ unions[i], forced_trail):
                            dead = True
                            break
            if not dead and miss_own == 1:
                k = next(k for k in mask_bits if rows[k] is None)
                if not force(k, full ^ union_own, forced_trail):
                    dead = True
            if not dead:
                assign(t + 1, new_full)

            for k in forced_trail:
                del forced[k]
            for i, u, ms in union_trail:
                unions[i] = u
                missing[i] = ms
            for k in watch_trail:
                watchers[k].pop()
            for j in mask_bits:
                colcount[j] -= 1
            rows[t] = None
            unions[t] = 0
            missing[t] = 0

    assign(0, 0)
    return out


def _central_worker(args: tuple[int, int]) -> list[tuple[int, ...]]:
    """One first-row shard, already reduced to canonical representatives."""
    m, first_row = args
    reps = {_loops_first_min(rows, m) for rows in _central_solutions(m, first_row=first_row)}
    return sorted(reps)


def _loops_first_min(rows: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Minimum relabeling of a loops-first matrix over the permutations that
    keep loops first.

    Any isomorphism between two loops-first solutions maps loops to loops, so
    equal minima characterise isomorphic solutions exactly.  Cells are
    compared in growing-corner order, which lets the search prune on partial
    relabelings.
    """
    n = m * m
    best: list[int] | None = None
    best_p: list[int] | None = None
    version = 0
    p: list[int] = []
    prefix: list[int] = []
    used = [False] * n

    def layer(d: int) -> list[int]:
        pd = p[d]
        rd = rows[pd]
        out = [rows[p[i]] >> pd & 1 for i in range(d)]
        out.extend(rd >> p[j] & 1 for j in range(d))
        out.append(rd >> pd & 1)
        return out

    # state: 0 = prefix equals the best prefix, -1 = strictly below best (or
    # no best yet).  When a descendant replaces best, the current path is by
    # construction a prefix of the new best, so the state resets to 0.
    def dfs(d: int, state: int) -> None:
        nonlocal best, best_p, version
        if d == n:
            if best is None or state == -1:
                best = prefix.copy()
                best_p = p.copy()
                version += 1
            return
        lo, hi = (0, m) if d < m else (m, n)
        for orig in range(lo, hi):
            if used[orig]:
                continue
            used[orig] = True
            p.append(orig)
            cells = layer(d)
            new_state = state
            pruned = False
            if best is not None and state == 0:
                base = len(prefix)
                for off, bit in enumerate(cells):
                    ref = best[base + off]
                    if bit > ref:
                        pruned = True
                        break
                    if bit < ref:
                        new_state = -1
                        break
            if not pruned:
                seen = version
                prefix.extend(cells)
                dfs(d + 1, new_state)
                del prefix[len(prefix) - len(cells):]
                if version != seen:
                    state = 0
            p.pop()
            used[orig] = False

    dfs(0, -1)
    assert best_p is not None
    out = []
    for i in range(n):
        ri = rows[best_p[i]]
        out.append(mask_of(j for j in range(n) if ri >> best_p[j] & 1))
    return tuple(out)


def enumerate_central(n: int, long_run: bool = False, jobs: int = 1) -> CensusResult:
    """Census of central groupoids of order n, up to isomorphism.

    Orders must be perfect squares; non-squares report zero solutions.
    Order 16 is far beyond desk scale and must be requested with long_run.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    m = isqrt(n)
    if m * m != n:
        return CensusResult(n, "isomorphism", 0, (),
                            note="no central groupoids: order is not a perfect square")
    if n > CENTRAL_BOUND:
        raise CapacityError(f"central census is bounded at order {CENTRAL_BOUND}")
    if n == 16 and not long_run:
        raise CapacityError("order 16 takes far longer than desk scale; pass long_run")

    first_rows = _row_candidates(m)[0]
    shards = [(m, fr) for fr in first_rows]
    if jobs > 1 and len(shards) > 1:
        import multiprocessing

        with multiprocessing.Pool(min(jobs, len(shards))) as pool:
            parts = pool.map(_central_worker, shards)
    else:
        parts = [_central_worker(s) for s in shards]

    reps = {rows for part in parts for rows in part}
    tables = []
    for rows in sorted(reps):
        g = graph_pair_to_groupoid(GraphPair(n, rows, rows))
        assert is_central(g)
        tables.append(g)
    tables.sort(key=Groupoid.flat)
    return CensusResult(n, "isomorphism", len(tables), tuple(tables))


def enumerate_band_blow_ups(n: int, m: int) -> int:
    """Count one-element extensions of the n x m rectangular band whose
    result is rectangular with every product inside the band.

    Matches n^(m-1) * m^(n-1) * (n+m-1) exactly.
    """
    if n < 1 or m < 1:
        raise ValueError("both factors must be positive")
    size = n * m
    if size > BLOW_UP_BOUND:
        raise CapacityError(f"band blow-up census is bounded at band order {BLOW_UP_BOUND}")
    band = rectangular_band(n, m)
    assert is_rectangular(band)
    big = size + 1
    e = size
    table = [[-1] * big for _ in range(big)]
    filled = [0] * big
    row_masks = [0] * big
    col_masks = [0] * big
    for a in range(size):
        for b in range(size):
            y = band.table[a][b]
            table[a][b] = y
            filled[a] |= 1 << b
            row_masks[y] |= 1 << a
            col_masks[y] |= 1 << b
    cells = [(e, y) for y in range(big)] + [(x, e) for x in range(size)]

    def dfs(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for y in range(size):  # products stay inside the band
            if not _can_place(big, table, filled, row_masks, col_masks, r, c, y):
                continue
            old_rm, old_cm = row_masks[y], col_masks[y]
            table[r][c] = y
            filled[r] |= 1 << c
            row_masks[y] |= 1 << r
            col_masks[y] |= 1 << c
            total += dfs(idx + 1)
            table[r][c] = -1
            filled[r] &= ~(1 << c)
            row_masks[y], col_masks[y] = old_rm, old_cm
        return total

    return dfs(0)
