"""Search problems, engines, and reports.

Every problem kind recomputes a theorem's optimum by exact search and
reports it against the matching closed-form bound.  For the pair kinds the
partner family is always the largest family cross-intersecting with F (the
full layer minus the disjointness family), so the search ranges over F
only.

Engine/kind matrix (auto picks the first listed):

    hemibundled_max          shifted, brute
    cross_pair_max           shifted, brute
    cross_pair_capped        brute
    diverse_intersecting_max clique (alias brute), shifted (lower bound)
    s_union_max              clique (alias brute)
    s_union_conditioned_max  clique (alias brute)

``shifted`` is valid where every constraint survives the shifting operator
(sum objectives with (t+1)-intersecting / cross-intersecting constraints);
for the diversity problem shifting can lower the diversity, so there the
shifted engine is only a lower bound and full validation uses ``clique``.
The overlap cap of cross_pair_capped can grow under joint shifts, so only
``brute`` applies.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Optional

from ..bounds import (
    BoundValue,
    Params,
    bound_classic,
    bound_diversity,
    bound_hemibundled,
    bound_pairs,
    bound_union,
)
from ..errors import InfeasibleInstanceError, ParamRangeError, TimeBudgetExceededError
from ..family import Family, are_isomorphic, degree_profile, is_s_union
from ..shifting import dominates
from .. import engines
from .tables import (
    MAX_CANDIDATES,
    build_diversity_tables,
    build_pair_tables,
    build_union_tables,
    layer_masks,
)

__all__ = [
    "KINDS",
    "Problem",
    "MaximizerClass",
    "SearchReport",
    "solve",
    "bound_for",
    "classify_maximizers",
    "enumerate_shifted",
    "LayerBound",
    "check_layer_inequality",
]

KINDS = (
    "hemibundled_max",
    "cross_pair_max",
    "cross_pair_capped",
    "diverse_intersecting_max",
    "s_union_max",
    "s_union_conditioned_max",
)

_ENGINES = {
    "hemibundled_max": ("shifted", "brute"),
    "cross_pair_max": ("shifted", "brute"),
    "cross_pair_capped": ("brute",),
    "diverse_intersecting_max": ("clique", "shifted"),
    "s_union_max": ("clique",),
    "s_union_conditioned_max": ("clique",),
}


@dataclass(frozen=True)
class Problem:
    kind: str
    params: Params
    engine: str = "auto"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParamRangeError(f"unknown problem kind {self.kind!r}")
        if self.engine not in ("auto", "brute", "shifted", "clique"):
            raise ParamRangeError(f"unknown engine {self.engine!r}")


@dataclass(frozen=True)
class MaximizerClass:
    representative: object  # Family, or (Family, Family) for pair kinds
    size: int


@dataclass(frozen=True)
class SearchReport:
    kind: str
    params: Params
    engine: str
    backend: str
    optimum: int
    bound: BoundValue
    matches_bound: bool
    maximizer_count: int
    classes: tuple[MaximizerClass, ...]
    nodes: int
    elapsed: float
    note: Optional[str] = None

    @property
    def class_representatives(self) -> list:
        return [c.representative for c in self.classes]


def _resolve_engine(kind: str, engine: str) -> str:
    allowed = _ENGINES[kind]
    if engine == "auto":
        return allowed[0]
    if engine == "brute" and "brute" not in allowed and "clique" in allowed:
        return "clique"  # exhaustive engine for graph-shaped kinds
    if engine == "clique" and kind in ("hemibundled_max", "cross_pair_max", "cross_pair_capped"):
        raise ParamRangeError(f"engine 'clique' does not apply to kind {kind!r}")
    if engine not in allowed:
        raise ParamRangeError(f"engine {engine!r} is not valid for kind {kind!r}")
    return engine


def bound_for(kind: str, p: Params) -> BoundValue:
    """The closed-form bound a kind's optimum is compared against."""
    if kind == "hemibundled_max":
        return bound_hemibundled("main1", p)
    if kind == "cross_pair_max":
        (k, r) = p.require("k", "r")
        return bound_pairs("f24_i" if r <= k - 1 else "f24_ii", p)
    if kind == "cross_pair_capped":
        (k, r) = p.require("k", "r")
        return bound_pairs("main3_i" if r <= k - 1 else "main3_ii", p)
    if kind == "diverse_intersecting_max":
        (r,) = p.require("r")
        if r == 0:
            return bound_classic("ekr", p)
        return bound_diversity(p)
    if kind == "s_union_max":
        (n, s) = p.require("n", "s")
        which = "katona_even" if s % 2 == 0 else "katona_odd"
        return bound_union(which, replace(p, d=s // 2))
    if kind == "s_union_conditioned_max":
        (n, s, r) = p.require("n", "s", "r")
        which = "main5_even" if s % 2 == 0 else "main5_odd"
        return bound_union(which, replace(p, d=s // 2))
    raise ParamRangeError(f"unknown problem kind {kind!r}")


def _validate(kind: str, p: Params) -> None:
    # parameter ranges are exactly the bound's theorem ranges
    bound_for(kind, p)


# --------------------------------------------------------------- maximizers


def _family_sort_key(item):
    if isinstance(item, tuple):
        return tuple(f.members for f in item)
    return item.members


def _iso_bucket_key(fam: Family):
    maxdeg, div = degree_profile(fam)
    return (
        len(fam),
        tuple(sorted(m.bit_count() for m in fam.members)),
        maxdeg,
        div,
    )


def classify_maximizers(families: list) -> list[MaximizerClass]:
    """Partition maximizers into isomorphism classes.

    Pair maximizers are classified by their F side: the partner is a
    function of F, so a relabeling carries one pair onto another exactly
    when it carries the F sides onto each other.  Representatives are the
    lexicographically least members of their classes.
    """
    items = sorted(families, key=_family_sort_key)
    classes: list[tuple[object, Family, list]] = []  # (representative, rep F-side, members)
    for item in items:
        fam = item[0] if isinstance(item, tuple) else item
        placed = False
        for rep, repfam, members in classes:
            if _iso_bucket_key(repfam) != _iso_bucket_key(fam):
                continue
            if are_isomorphic(repfam, fam):
                members.append(item)
                placed = True
                break
        if not placed:
            classes.append((item, fam, [item]))
    return [MaximizerClass(rep, len(members)) for rep, _, members in classes]


# ------------------------------------------------------------------ engines


def _partner_masks(fmasks: list[int], gmasks: list[int]) -> list[int]:
    return [g for g in gmasks if all(g & f for f in fmasks)]


def _solve_pair(kind: str, p: Params, engine: str, backend: str, deadline):
    kern = engines.backend_module(backend)
    if kind == "hemibundled_max":
        (n, k, t, r) = p.require("n", "k", "t", "r")
        tabs = build_pair_tables(n, k + t, k, t_inter=t + 1, shifted=engine == "shifted")
        best, maxers, nodes = kern.pair_bnb(
            len(tabs.cands), tabs.compat, tabs.pred, tabs.kill, len(tabs.gmasks),
            r, 0, False, -1, None, deadline,
        )
    elif kind == "cross_pair_max":
        (n, k, r) = p.require("n", "k", "r")
        tabs = build_pair_tables(n, k, k, t_inter=None, shifted=engine == "shifted")
        best, maxers, nodes = kern.pair_bnb(
            len(tabs.cands), None, tabs.pred, tabs.kill, len(tabs.gmasks),
            r, r, True, -1, None, deadline,
        )
    else:  # cross_pair_capped
        (n, k, r) = p.require("n", "k", "r")
        tabs = build_pair_tables(n, k, k, t_inter=None, shifted=False, with_selfpos=True)
        best, maxers, nodes = kern.pair_bnb(
            len(tabs.cands), None, None, tabs.kill, len(tabs.gmasks),
            r, r, False, r - 1, tabs.selfpos, deadline,
        )
    pairs = []
    for chosen in maxers:
        fmasks = [tabs.cands[i] for i in _bits(chosen)]
        gm = _partner_masks(fmasks, tabs.gmasks)
        if kind == "cross_pair_capped":
            # drop the overlap excess deterministically: lowest shared first
            shared = [g for g in gm if g in set(fmasks)]
            over = max(0, len(shared) - (p.r - 1))
            drop = set(shared[:over])
            gm = [g for g in gm if g not in drop]
        pairs.append((Family.of_masks(p.n, fmasks), Family.of_masks(p.n, gm)))
    return best, pairs, nodes


def _solve_union(kind: str, p: Params, backend: str, deadline):
    kern = engines.backend_module(backend)
    (n, s) = p.require("n", "s")
    d = s // 2
    if kind == "s_union_max":
        tabs = build_union_tables(n, s, None)
        cons, r = 0, 0
    else:
        (r,) = p.require("r")
        tabs = build_union_tables(n, s, d + 1)
        cons = 1 if s % 2 == 0 else 2
    best, maxers, nodes = kern.clique_bnb(
        len(tabs.vmasks), tabs.adj, cons, tabs.layer, tabs.vmasks, n, r, deadline
    )
    fams = [
        Family.of_masks(n, [tabs.vmasks[i] for i in _bits(chosen)]) for chosen in maxers
    ]
    return best, fams, nodes


def _solve_diversity_clique(p: Params, backend: str, deadline):
    kern = engines.backend_module(backend)
    (n, k, r) = p.require("n", "k", "r")
    tabs = build_diversity_tables(n, k)
    best, maxers, nodes = kern.diversity_bnb(
        len(tabs.hmasks), tabs.hcompat, tabs.hmasks, tabs.akill,
        len(tabs.amasks), tabs.avoid_a, r, n, deadline,
    )
    fams = []
    for hbits, abits in maxers:
        masks = [tabs.hmasks[i] for i in _bits(hbits)]
        masks += [tabs.amasks[i] for i in _bits(abits)]
        fams.append(Family.of_masks(n, masks))
    return best, fams, nodes


def _solve_diversity_shifted(p: Params, deadline):
    """Lower-bound engine: best shifted intersecting family with diversity
    at least r.  Shifting can decrease diversity, so a non-shifted family
    could in principle beat every shifted one; the clique engine is the
    validator."""
    (n, k, r) = p.require("n", "k", "r")
    masks = layer_masks(n, k)
    m = len(masks)
    if m > MAX_CANDIDATES:
        raise InfeasibleInstanceError(f"C({n},{k}) = {m} exceeds {MAX_CANDIDATES}")
    pred = []
    compat = []
    for i, a in enumerate(masks):
        pb = 0
        for j in range(i):
            if dominates(a, masks[j]):
                pb |= 1 << j
        pred.append(pb)
        cb = 0
        for j, b in enumerate(masks):
            if a & b:
                cb |= 1 << j
        compat.append(cb)
    state = [-1, [], 0]

    def gamma(chosen_masks: list[int]) -> int:
        if not chosen_masks:
            return 0
        best_deg = 0
        for e in range(n):
            bit = 1 << e
            deg = sum(1 for mm in chosen_masks if mm & bit)
            best_deg = max(best_deg, deg)
        return len(chosen_masks) - best_deg

    def rec(chosen: int, fmasks: list[int], pbits: int) -> None:
        state[2] += 1
        if deadline is not None and state[2] % 4096 == 0 and time.monotonic() > deadline:
            raise TimeBudgetExceededError("shifted diversity search timed out", state[0])
        while pbits:
            low = pbits & -pbits
            i = low.bit_length() - 1
            pbits ^= low
            if len(fmasks) + 1 + pbits.bit_count() < state[0]:
                return
            if pred[i] & ~chosen:
                continue
            if chosen & ~compat[i]:
                continue
            child_masks = fmasks + [masks[i]]
            if gamma(child_masks) >= r:
                value = len(child_masks)
                if value > state[0]:
                    state[0] = value
                    state[1] = [list(child_masks)]
                elif value == state[0]:
                    state[1].append(list(child_masks))
            rec(chosen | low, child_masks, pbits & compat[i])

    if r == 0:
        state[0] = 0
        state[1] = [[]]
    rec(0, [], (1 << m) - 1)
    fams = [Family.of_masks(n, fm) for fm in state[1]]
    return state[0], fams, state[2]


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


_NOTES = {
    ("hemibundled_max", "shifted"): "maximizer scope: shifted families only",
    ("cross_pair_max", "shifted"): "maximizer scope: shifted families only",
    ("diverse_intersecting_max", "shifted"): (
        "lower-bound engine: optimum certified over shifted families only; "
        "validate with the clique engine"
    ),
    ("diverse_intersecting_max", "clique"): (
        "maximizer scope: families with maximum degree at element 1"
    ),
    ("cross_pair_capped", "brute"): (
        "partner shown with the lowest-indexed overlap members dropped"
    ),
}


def solve(problem: Problem, max_seconds: float | None = None, backend: str | None = None) -> SearchReport:
    """Run the exact search for a problem and report it against its bound."""
    p = problem.params
    _validate(problem.kind, p)
    engine = _resolve_engine(problem.kind, problem.engine)
    backend_name = backend or engines.DEFAULT_BACKEND
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    start = time.monotonic()
    if problem.kind in ("hemibundled_max", "cross_pair_max", "cross_pair_capped"):
        optimum, maxers, nodes = _solve_pair(problem.kind, p, engine, backend_name, deadline)
    elif problem.kind == "diverse_intersecting_max":
        if engine == "shifted":
            optimum, maxers, nodes = _solve_diversity_shifted(p, deadline)
        else:
            optimum, maxers, nodes = _solve_diversity_clique(p, backend_name, deadline)
    else:
        optimum, maxers, nodes = _solve_union(problem.kind, p, backend_name, deadline)
    elapsed = time.monotonic() - start
    if optimum < 0:
        raise InfeasibleInstanceError(
            "no admissible family satisfies the side constraints at these parameters"
        )
    bound = bound_for(problem.kind, p)
    classes = tuple(classify_maximizers(maxers))
    if problem.kind == "diverse_intersecting_max" and engine == "shifted":
        backend_name = "python"  # the lower-bound traversal has no compiled twin
    return SearchReport(
        kind=problem.kind,
        params=p,
        engine=engine,
        backend=backend_name,
        optimum=optimum,
        bound=bound,
        matches_bound=optimum == bound.value,
        maximizer_count=len(maxers),
        classes=classes,
        nodes=nodes,
        elapsed=elapsed,
        note=_NOTES.get((problem.kind, engine)),
    )


# ------------------------------------------------- shifted-family streaming


def enumerate_shifted(n: int, k: int, predicate: Optional[Callable[[Family], bool]] = None) -> Iterator[Family]:
    """Yield every shifted k-uniform family on [n] (the down-sets of the
    coordinatewise dominance order), each exactly once, in a deterministic
    depth-first order starting from the empty family.  ``predicate`` filters
    the stream without affecting traversal."""
    masks = layer_masks(n, k)
    m = len(masks)
    if m > MAX_CANDIDATES:
        raise InfeasibleInstanceError(
            f"C({n},{k}) = {m} exceeds the enumeration limit of {MAX_CANDIDATES}"
        )
    pred = []
    for i, a in enumerate(masks):
        bits = 0
        for j in range(i):
            if dominates(a, masks[j]):
                bits |= 1 << j
        pred.append(bits)

    def rec(chosen: int, fmasks: tuple[int, ...], start: int) -> Iterator[Family]:
        fam = Family(n, fmasks)
        if predicate is None or predicate(fam):
            yield fam
        for i in range(start, m):
            if pred[i] & ~chosen:
                continue
            yield from rec(chosen | (1 << i), fmasks + (masks[i],), i + 1)

    yield from rec(0, (), 0)


# ----------------------------------------------------- layer-pair invariant


@dataclass(frozen=True)
class LayerBound:
    i: int
    lhs: int
    rhs: int
    tight: bool
    equality_form_ok: bool


def check_layer_inequality(F: Family, s: int) -> list[LayerBound]:
    """Per-layer check that |F_i| + |F_{s+1-i}| <= C(n, i) for an s-union
    family, 1 <= i <= s/2.  A tight layer must have F_i full and F_{s+1-i}
    empty; ``equality_form_ok`` false flags a counterexample to the
    implementation, not to the inequality."""
    from math import comb

    if not is_s_union(F, s):
        raise ParamRangeError("family is not s-union for the given s")
    rows = []
    for i in range(1, s // 2 + 1):
        li = len(F.layer(i))
        lj = len(F.layer(s + 1 - i))
        rhs = comb(F.n, i)
        tight = li + lj == rhs
        ok = (not tight) or (li == rhs and lj == 0)
        rows.append(LayerBound(i, li + lj, rhs, tight, ok))
    return rows
