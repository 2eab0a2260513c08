"""Candidate tables consumed by the search kernels.

Candidates are always sorted by numeric bit-vector value; for equal-size
sets that order is a linear extension of coordinatewise dominance, which is
what lets the down-set (shifted family) traversal decide predecessors
before successors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from ..errors import InfeasibleInstanceError
from ..family import mask_of
from ..shifting import dominates

MAX_CANDIDATES = 128
MAX_PARTNER = 128
MAX_AMEMBERS = 64


def layer_masks(n: int, k: int) -> list[int]:
    return sorted(mask_of(c, n) for c in itertools.combinations(range(1, n + 1), k))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InfeasibleInstanceError(msg)


@dataclass(frozen=True)
class PairTables:
    n: int
    cands: list[int]       # F-side candidate masks
    gmasks: list[int]      # partner universe masks
    compat: list[int] | None
    pred: list[int] | None
    kill: list[int]
    selfpos: list[int] | None


def build_pair_tables(
    n: int,
    f_size: int,
    g_size: int,
    t_inter: int | None,
    shifted: bool,
    with_selfpos: bool = False,
) -> PairTables:
    """F-candidates are the f_size-subsets of [n], partner universe the
    g_size-subsets.  ``t_inter`` (when given) restricts F to pairwise
    intersections of at least that depth."""
    cands = layer_masks(n, f_size)
    gmasks = layer_masks(n, g_size)
    m = len(cands)
    _require(m <= MAX_CANDIDATES, f"candidate universe C({n},{f_size}) = {m} exceeds {MAX_CANDIDATES}")
    _require(
        len(gmasks) <= MAX_PARTNER,
        f"partner universe C({n},{g_size}) = {len(gmasks)} exceeds {MAX_PARTNER}",
    )
    compat = None
    if t_inter is not None:
        compat = []
        for a in cands:
            bits = 0
            for j, b in enumerate(cands):
                if (a & b).bit_count() >= t_inter:
                    bits |= 1 << j
            compat.append(bits)
    pred = None
    if shifted:
        pred = []
        for i, a in enumerate(cands):
            bits = 0
            for j in range(i):
                if dominates(a, cands[j]):
                    bits |= 1 << j
            pred.append(bits)
    kill = []
    for a in cands:
        bits = 0
        for j, g in enumerate(gmasks):
            if not a & g:
                bits |= 1 << j
        kill.append(bits)
    selfpos = None
    if with_selfpos:
        index = {g: j for j, g in enumerate(gmasks)}
        selfpos = [index.get(a, -1) for a in cands]
    return PairTables(n, cands, gmasks, compat, pred, kill, selfpos)


@dataclass(frozen=True)
class CliqueTables:
    n: int
    vmasks: list[int]
    adj: list[int]
    layer: int            # vertex bitset of the constrained layer


def build_union_tables(n: int, s: int, constrained_layer: int | None) -> CliqueTables:
    """Vertices are all subsets of [n] with at most s elements; edges join
    pairs whose union stays within s elements."""
    _require(1 << n <= MAX_CANDIDATES, f"2^{n} vertices exceed {MAX_CANDIDATES} (need n <= 7)")
    vmasks = sorted(m for m in range(1 << n) if m.bit_count() <= s)
    nv = len(vmasks)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if (vmasks[i] | vmasks[j]).bit_count() <= s:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    layer = 0
    if constrained_layer is not None:
        for i, m in enumerate(vmasks):
            if m.bit_count() == constrained_layer:
                layer |= 1 << i
    return CliqueTables(n, vmasks, adj, layer)


@dataclass(frozen=True)
class DiversityTables:
    n: int
    hmasks: list[int]     # candidates avoiding element 1
    amasks: list[int]     # candidates containing element 1
    hcompat: list[int]
    akill: list[int]
    avoid_a: list[int]    # indexed by element, A-candidates avoiding it


def build_diversity_tables(n: int, k: int) -> DiversityTables:
    hmasks = sorted(m for m in layer_masks(n, k) if not m & 1)
    amasks = sorted(m for m in layer_masks(n, k) if m & 1)
    _require(
        len(hmasks) <= MAX_CANDIDATES,
        f"C({n - 1},{k}) = {len(hmasks)} candidates exceed {MAX_CANDIDATES}",
    )
    _require(
        len(amasks) <= MAX_AMEMBERS,
        f"C({n - 1},{k - 1}) = {len(amasks)} star members exceed {MAX_AMEMBERS}",
    )
    hcompat = []
    for a in hmasks:
        bits = 0
        for j, b in enumerate(hmasks):
            if a & b:
                bits |= 1 << j
        hcompat.append(bits)
    akill = []
    for h in hmasks:
        bits = 0
        for j, a in enumerate(amasks):
            if not h & a:
                bits |= 1 << j
        akill.append(bits)
    avoid_a = [0] * (n + 1)
    for e in range(1, n + 1):
        bit = 1 << (e - 1)
        for j, a in enumerate(amasks):
            if not a & bit:
                avoid_a[e] |= 1 << j
    return DiversityTables(n, hmasks, amasks, hcompat, akill, avoid_a)


def shifted_family_count_reference(n: int, k: int) -> int:
    """Independent down-set counter over the dominance order: checks all
    2^C(n,k) subsets directly.  Test oracle for tiny instances only."""
    masks = layer_masks(n, k)
    m = len(masks)
    _require(m <= 20, "reference counter is exponential; keep C(n,k) <= 20")
    dom = []
    for i, a in enumerate(masks):
        bits = 0
        for j in range(m):
            if j != i and dominates(a, masks[j]):
                bits |= 1 << j
        dom.append(bits)
    count = 0
    for sub in range(1 << m):
        ok = True
        rest = sub
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if dom[i] & ~sub:
                ok = False
                break
        if ok:
            count += 1
    return count


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
