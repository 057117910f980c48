"""Littlewood-Richardson coefficients by direct skew-tableau enumeration.

A coefficient c(outer; inner, weight) is the number of semistandard skew
tableaux of shape outer/inner and content weight whose reverse reading
word (rows right to left, top to bottom) is a lattice word.  The counter
fills cells in exactly that reading order, so semistandardness, content
and the lattice-prefix condition all prune the search as it goes.

On top of the counter sits the multiplicity of a dominant weight in a
module induced from unitary characters of a product of GL factors: an
iterated LR product of rectangles k_i^(d_i), one per chain.
"""

from __future__ import annotations

from .chains import ChainSet, canonical_order
from .weights import Weight

Partition = tuple[int, ...]


def normalize_partition(parts) -> Partition:
    """Validate weak decrease and non-negativity; strip trailing zeros."""
    parts = tuple(parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def contains(outer: Partition, inner: Partition) -> bool:
    """Cellwise containment inner <= outer, ignoring trailing zeros."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def is_lattice_word(word) -> bool:
    """Every prefix holds at least as many i's as (i+1)'s, for every i."""
    counts: dict[int, int] = {}
    for x in word:
        if x < 1:
            return False
        if x > 1 and counts.get(x - 1, 0) <= counts.get(x, 0):
            return False
        counts[x] = counts.get(x, 0) + 1
    return True


def lr_coefficient(outer, inner, weight) -> int:
    """Number of LR skew tableaux of shape outer/inner and content weight."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    weight = normalize_partition(weight)
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    ncells = sum(outer) - sum(inner)
    if ncells != sum(weight):
        raise ValueError(f"skew shape has {ncells} cells but content has size {sum(weight)}")
    if ncells == 0:
        return 1

    # Cells in reverse reading order: row by row, right to left.  For each
    # cell record the index of its right neighbour in the fill order (always
    # the previous cell when in the same row) and of the cell directly above
    # when that cell belongs to the skew shape.
    cells = []  # (row, col)
    pos_index: dict[tuple[int, int], int] = {}
    for r, outer_len in enumerate(outer):
        inner_len = inner[r] if r < len(inner) else 0
        for c in range(outer_len - 1, inner_len - 1, -1):
            pos_index[(r, c)] = len(cells)
            cells.append((r, c))
    right = [pos_index.get((r, c + 1)) for r, c in cells]
    above = [pos_index.get((r - 1, c)) for r, c in cells]

    nletters = len(weight)
    remaining = list(weight)
    counts = [0] * (nletters + 1)  # counts[v] = number of v's placed so far
    values = [0] * len(cells)
    total = 0

    def fill(k: int) -> None:
        nonlocal total
        if k == len(cells):
            total += 1
            return
        hi = values[right[k]] if right[k] is not None else nletters
        lo = values[above[k]] + 1 if above[k] is not None else 1
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            # lattice prefix: placing v keeps counts[v] <= counts[v-1]
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            values[k] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            fill(k + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
        values[k] = 0

    fill(0)
    return total


def _grow_candidates(mu: Partition, k: int, d: int, limit: Partition):
    """Partitions nu with mu <= nu <= limit reachable by adding a k^d rectangle.

    Necessary conditions used to bound the search: |nu| = |mu| + k*d, the
    first row grows by at most k, and no column of nu/mu exceeds d cells,
    i.e. nu[i] <= mu[i-d].
    """
    goal = sum(mu) + k * d
    maxlen = min(len(limit), len(mu) + d)
    acc: list[int] = []

    def rec(i: int, prev: int, remaining: int):
        if remaining == 0:
            if all(mu[j] == 0 for j in range(i, len(mu))):
                yield tuple(acc)
            return
        if i >= maxlen:
            return
        lo = mu[i] if i < len(mu) else 0
        # i < maxlen <= len(mu) + d, so mu[i - d] is in range whenever i >= d
        col_cap = mu[i - d] if i >= d else (mu[0] if mu else 0) + k
        hi = min(prev, limit[i], col_cap, remaining)
        for part in range(hi, max(lo, 1) - 1, -1):
            acc.append(part)
            yield from rec(i + 1, part, remaining - part)
            acc.pop()

    yield from rec(0, goal, goal)


def multiplicity_in_induced(cs: ChainSet, delta: Weight, shift: int | None = None) -> int:
    """Multiplicity of the K-type with doubled highest weight delta.

    The module is induced from the unitary characters det^(k_i) of GL(d_i)
    factors given by the chains.  A uniform shift t makes every k_i + t
    non-negative and delta + t a partition; the answer is independent of
    the choice of t, and the iterated product of rectangle Schur functions
    is evaluated through lr_coefficient with all intermediate shapes
    confined below the target.
    """
    n = cs.n
    if len(delta) != n:
        raise ValueError(f"delta has {len(delta)} coordinates, parameter has {n}")
    if any(x % 2 for x in delta):
        raise ValueError("delta must have even (doubled) coordinates")
    for a, b in zip(delta, delta[1:]):
        if a < b:
            raise ValueError("delta must be dominant")
    delta_std = tuple(x // 2 for x in delta)
    ordered = canonical_order(cs).chains
    if sum(delta_std) != sum(c.avg * c.length for c in ordered):
        return 0
    min_needed = max(0, -min(c.avg for c in ordered), -delta_std[-1])
    if shift is None:
        shift = min_needed
    elif shift < min_needed:
        raise ValueError(f"shift {shift} leaves negative coordinates (need >= {min_needed})")
    target = normalize_partition(x + shift for x in delta_std)

    states: dict[Partition, int] = {(): 1}
    for c in ordered:
        k, d = c.avg + shift, c.length
        new: dict[Partition, int] = {}
        for mu, coeff in states.items():
            if k == 0:
                new[mu] = new.get(mu, 0) + coeff
                continue
            rect = (k,) * d
            for nu in _grow_candidates(mu, k, d, target):
                c_lr = lr_coefficient(nu, mu, rect)
                if c_lr:
                    new[nu] = new.get(nu, 0) + coeff * c_lr
        states = new
        if not states:
            return 0
    return states.get(target, 0)
