"""Instance families: the integrality-gap prism, the bad-DFS caterpillar, random."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .graph import HEAVY, LIGHT, MapInstance


def gen_gap_instance(k: int = 1) -> MapInstance:
    """Two heavy triangles joined by three light rungs (the triangular prism).

    Copy ``j`` uses vertices ``6j..6j+5``: a1, a2, a3, b1, b2, b3. Edge order
    within a copy is a1a2, a1a3, a2a3, b1b2, b1b3, b2b3, a1b1, a2b2, a3b3.
    For ``k >= 2`` copy ``j`` is tied to copy ``j+1`` (cyclically) by one heavy
    edge b3 -> a1. Only ``k = 1`` carries the LP 3 / integral 4 guarantee.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = []
    for j in range(k):
        a1, a2, a3, b1, b2, b3 = range(6 * j, 6 * j + 6)
        edges += [(a1, a2, HEAVY), (a1, a3, HEAVY), (a2, a3, HEAVY),
                  (b1, b2, HEAVY), (b1, b3, HEAVY), (b2, b3, HEAVY),
                  (a1, b1, LIGHT), (a2, b2, LIGHT), (a3, b3, LIGHT)]
    if k >= 2:
        for j in range(k):
            edges.append((6 * j + 5, 6 * ((j + 1) % k), HEAVY))
    return MapInstance.from_edges(6 * k, edges)


def gen_bad_dfs_instance(depth: int) -> MapInstance:
    """A caterpillar on which lexicographic DFS from vertex 0 is a poor guide.

    Vertices: root ``r = 0``, spine ``s_0 = 1`` and ``s_i = 2i``, leaves
    ``l_i = 2i + 1`` for ``i = 1..depth``. Light edges r-s_0 and s_i-l_i. Heavy
    edges: the spine s_{i-1}-s_i, the uplinks s_{i-1}-l_i and s_depth-r.

    The ids are arranged so that smallest-neighbor DFS from r walks the spine
    and hangs every l_i off s_i as a leaf. Each leaf then needs its own uplink
    and the light edge r-s_0 needs s_depth-r: ``depth + 1`` uplinks on top of
    ``depth`` heavy tree edges. The tour r, s_0, l_1, s_1, ..., l_d, s_d, r
    uses every light edge and only ``depth + 1`` heavy edges, which is also
    the LP lower bound n - |M|. Unguided ratio: ``2 - 1/(depth + 1)``.
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")

    def s(i):
        return 1 if i == 0 else 2 * i

    def leaf(i):
        return 2 * i + 1

    edges = [(0, s(0), LIGHT)]
    for i in range(1, depth + 1):
        edges.append((s(i - 1), s(i), HEAVY))
        edges.append((s(i), leaf(i), LIGHT))
        edges.append((s(i - 1), leaf(i), HEAVY))
    edges.append((s(depth), 0, HEAVY))
    return MapInstance.from_edges(2 * depth + 2, edges)


def gen_random_instance(n: int, extra_heavy: int, matching_fraction: float, seed: int) -> MapInstance:
    """Hamiltonian cycle plus random chords, with a random matching made light.

    Deterministic in its arguments. Chords may be parallel to existing edges.
    Up to ``floor(matching_fraction * n / 2)`` vertex-disjoint edges are
    relabelled light.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not 0 <= matching_fraction <= 1:
        raise ValueError("matching_fraction must be in [0, 1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(extra_heavy):
        u, v = rng.sample(range(n), 2)
        pairs.append((u, v))
    target = int(matching_fraction * n / 2)
    candidates = list(range(len(pairs)))
    rng.shuffle(candidates)
    used: set[int] = set()
    light: set[int] = set()
    for e in candidates:
        if len(light) >= target:
            break
        u, v = pairs[e]
        if u in used or v in used:
            continue
        used.update((u, v))
        light.add(e)
    return MapInstance.from_edges(n, [(u, v, LIGHT if e in light else HEAVY)
                                      for e, (u, v) in enumerate(pairs)])


def random_suite(count: int, sizes: Iterable[int], seed: int,
                 extra_heavy: tuple[int, int] | None = None,
                 fractions: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0)) -> list[tuple[int, MapInstance]]:
    """``count`` random instances with n drawn from ``sizes``; returns (seed, instance) pairs.

    Per-instance parameters come from a master RNG, so the suite is a pure
    function of the arguments. ``extra_heavy`` bounds the chord count
    (default ``0..n``).
    """
    sizes = sorted(set(sizes))
    master = random.Random(seed)
    out = []
    for _ in range(count):
        n = master.choice(sizes)
        lo, hi = extra_heavy if extra_heavy is not None else (0, n)
        extra = master.randint(lo, hi)
        frac = master.choice(list(fractions))
        s = master.randrange(2**31)
        out.append((s, gen_random_instance(n, extra, frac, s)))
    return out
