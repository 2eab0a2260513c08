# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the pure-Python search kernels.

Same signatures, same traversal order, same results as
``setfam.engines.pykern``; candidate universes are capped at 128 entries so
every index set fits two machine words.  The hot recursions run without the
GIL, so independent searches can share a thread pool.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t, uint64_t

from ..errors import InfeasibleInstanceError, TimeBudgetExceededError

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef extern from "time.h" nogil:
    ctypedef long time_t
    cdef struct timespec:
        time_t tv_sec
        long tv_nsec
    int clock_gettime(int clk_id, timespec *tp)
    int CLOCK_MONOTONIC

MAXIMIZER_CAP = 200_000
cdef long long _CAP = 200_000
cdef long long _CHECK_MASK = 0x1FFF


cdef inline int _pop2(uint64_t lo, uint64_t hi) nogil:
    return __builtin_popcountll(lo) + __builtin_popcountll(hi)


cdef inline double _now() nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef uint64_t *_alloc_words(long long count) except NULL:
    cdef uint64_t *buf = <uint64_t *> PyMem_Malloc(count * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill_split(list values, uint64_t *lo, uint64_t *hi):
    cdef Py_ssize_t i
    cdef object v
    for i in range(len(values)):
        v = values[i]
        lo[i] = <uint64_t> (v & 0xFFFFFFFFFFFFFFFF)
        hi[i] = <uint64_t> (v >> 64)


cdef object _join(uint64_t lo, uint64_t hi):
    return (<object> int(hi) << 64) | int(lo)


# ----------------------------------------------------------------- pair BnB

cdef struct PairCtx:
    int m, ng, r_min, g_min, g_ge_f, cap_excess, collect
    int has_compat, has_pred
    uint64_t *compat_lo
    uint64_t *compat_hi
    uint64_t *pred_lo
    uint64_t *pred_hi
    uint64_t *kill_lo
    uint64_t *kill_hi
    int64_t *selfpos
    int best
    uint64_t *sink
    long long sink_count
    long long nodes
    double deadline
    int has_deadline
    int timed_out
    int overflow


cdef inline int _pair_tick(PairCtx *c) nogil:
    c.nodes += 1
    if c.has_deadline and (c.nodes & _CHECK_MASK) == 0:
        if _now() > c.deadline:
            c.timed_out = 1
            return 1
    return 0


cdef int _pair_score(PairCtx *c, uint64_t ch_lo, uint64_t ch_hi, int fc, int gc,
                     uint64_t pa_lo, uint64_t pa_hi) nogil:
    # returns the score, or -1 when the family is not admissible
    cdef int shared = 0, over, sp
    cdef uint64_t rest
    cdef int j
    if fc < c.r_min:
        return -1
    if c.cap_excess >= 0:
        rest = ch_lo
        while rest:
            j = __builtin_ctzll(rest)
            rest &= rest - 1
            sp = <int> c.selfpos[j]
            if sp >= 0:
                if sp < 64:
                    if (pa_lo >> sp) & 1:
                        shared += 1
                elif (pa_hi >> (sp - 64)) & 1:
                    shared += 1
        rest = ch_hi
        while rest:
            j = 64 + __builtin_ctzll(rest)
            rest &= rest - 1
            sp = <int> c.selfpos[j]
            if sp >= 0:
                if sp < 64:
                    if (pa_lo >> sp) & 1:
                        shared += 1
                elif (pa_hi >> (sp - 64)) & 1:
                    shared += 1
        over = shared - c.cap_excess
        if over < 0:
            over = 0
        if gc - over < c.r_min:
            return -1
        return fc + gc - over
    return fc + gc


cdef void _pair_rec(PairCtx *c, uint64_t ch_lo, uint64_t ch_hi, int fcount,
                    uint64_t p_lo, uint64_t p_hi,
                    uint64_t pa_lo, uint64_t pa_hi) nogil:
    cdef int gcount_node, i, ub, fc, gc, g, child_ub
    cdef uint64_t bit_lo, bit_hi, c2_lo, c2_hi, cp_lo, cp_hi, np_lo, np_hi
    if _pair_tick(c):
        return
    gcount_node = _pop2(pa_lo, pa_hi)
    while p_lo or p_hi:
        if c.timed_out or c.overflow:
            return
        if p_lo:
            i = __builtin_ctzll(p_lo)
            bit_lo = (<uint64_t> 1) << i
            bit_hi = 0
            p_lo ^= bit_lo
        else:
            i = __builtin_ctzll(p_hi)
            bit_hi = (<uint64_t> 1) << i
            bit_lo = 0
            p_hi ^= bit_hi
            i += 64
        ub = fcount + 1 + _pop2(p_lo, p_hi) + gcount_node
        if c.g_ge_f and 2 * gcount_node < ub:
            ub = 2 * gcount_node
        if ub < c.best or (not c.collect and ub == c.best):
            return
        if c.has_pred and ((c.pred_lo[i] & ~ch_lo) or (c.pred_hi[i] & ~ch_hi)):
            continue
        if c.has_compat and ((ch_lo & ~c.compat_lo[i]) or (ch_hi & ~c.compat_hi[i])):
            continue
        c2_lo = ch_lo | bit_lo
        c2_hi = ch_hi | bit_hi
        cp_lo = pa_lo & ~c.kill_lo[i]
        cp_hi = pa_hi & ~c.kill_hi[i]
        fc = fcount + 1
        gc = _pop2(cp_lo, cp_hi)
        if gc < c.g_min:
            continue
        if c.g_ge_f and gc < fc:
            continue
        g = _pair_score(c, c2_lo, c2_hi, fc, gc, cp_lo, cp_hi)
        if g >= 0:
            if c.collect:
                if g == c.best:
                    if c.sink_count >= _CAP:
                        c.overflow = 1
                        return
                    c.sink[2 * c.sink_count] = c2_lo
                    c.sink[2 * c.sink_count + 1] = c2_hi
                    c.sink_count += 1
            elif g > c.best:
                c.best = g
        if c.has_compat:
            np_lo = p_lo & c.compat_lo[i]
            np_hi = p_hi & c.compat_hi[i]
        else:
            np_lo = p_lo
            np_hi = p_hi
        child_ub = fc + _pop2(np_lo, np_hi) + gc
        if c.g_ge_f and 2 * gc < child_ub:
            child_ub = 2 * gc
        if child_ub > c.best or (c.collect and child_ub == c.best):
            _pair_rec(c, c2_lo, c2_hi, fc, np_lo, np_hi, cp_lo, cp_hi)


def pair_bnb(int m, compat, pred, kill, int ng, int r_min, int g_min,
             bint g_ge_f, int cap_excess, selfpos, deadline=None):
    """See :func:`setfam.engines.pykern.pair_bnb`."""
    if m > 128 or ng > 128:
        raise InfeasibleInstanceError("compiled pair kernel supports at most 128 candidates")
    cdef PairCtx c
    cdef uint64_t full_p_lo, full_p_hi, full_g_lo, full_g_hi
    cdef Py_ssize_t i
    c.m = m
    c.ng = ng
    c.r_min = r_min
    c.g_min = g_min
    c.g_ge_f = 1 if g_ge_f else 0
    c.cap_excess = cap_excess
    c.nodes = 0
    c.timed_out = 0
    c.overflow = 0
    c.has_deadline = deadline is not None
    c.deadline = deadline if deadline is not None else 0.0
    c.has_compat = compat is not None
    c.has_pred = pred is not None
    c.compat_lo = c.compat_hi = c.pred_lo = c.pred_hi = NULL
    c.kill_lo = c.kill_hi = NULL
    c.selfpos = NULL
    c.sink = NULL
    try:
        c.kill_lo = _alloc_words(m if m else 1)
        c.kill_hi = _alloc_words(m if m else 1)
        _fill_split(list(kill), c.kill_lo, c.kill_hi)
        if c.has_compat:
            c.compat_lo = _alloc_words(m)
            c.compat_hi = _alloc_words(m)
            _fill_split(list(compat), c.compat_lo, c.compat_hi)
        if c.has_pred:
            c.pred_lo = _alloc_words(m)
            c.pred_hi = _alloc_words(m)
            _fill_split(list(pred), c.pred_lo, c.pred_hi)
        if cap_excess >= 0:
            c.selfpos = <int64_t *> PyMem_Malloc(m * sizeof(int64_t))
            if c.selfpos == NULL:
                raise MemoryError()
            for i in range(m):
                c.selfpos[i] = selfpos[i]
        c.sink = _alloc_words(2 * _CAP)
        full_p_lo = 0xFFFFFFFFFFFFFFFF if m >= 64 else ((<uint64_t> 1) << m) - 1
        full_p_hi = 0 if m <= 64 else ((<uint64_t> 1) << (m - 64)) - 1
        full_g_lo = 0xFFFFFFFFFFFFFFFF if ng >= 64 else ((<uint64_t> 1) << ng) - 1
        full_g_hi = 0 if ng <= 64 else ((<uint64_t> 1) << (ng - 64)) - 1

        # phase 1: prove the optimum (prune subtrees that cannot improve)
        c.collect = 0
        c.best = -1
        c.sink_count = 0
        with nogil:
            _pair_rec(&c, 0, 0, 0, full_p_lo, full_p_hi, full_g_lo, full_g_hi)
        _raise_flags(c.timed_out, c.overflow, c.best)
        optimum = c.best
        maximizers = []
        if optimum >= 0:
            # phase 2: collect every family tying the optimum
            c.collect = 1
            c.sink_count = 0
            with nogil:
                _pair_rec(&c, 0, 0, 0, full_p_lo, full_p_hi, full_g_lo, full_g_hi)
            _raise_flags(c.timed_out, c.overflow, c.best)
            for i in range(c.sink_count):
                maximizers.append(_join(c.sink[2 * i], c.sink[2 * i + 1]))
        return optimum, maximizers, int(c.nodes)
    finally:
        if c.kill_lo != NULL:
            PyMem_Free(c.kill_lo)
        if c.kill_hi != NULL:
            PyMem_Free(c.kill_hi)
        if c.compat_lo != NULL:
            PyMem_Free(c.compat_lo)
        if c.compat_hi != NULL:
            PyMem_Free(c.compat_hi)
        if c.pred_lo != NULL:
            PyMem_Free(c.pred_lo)
        if c.pred_hi != NULL:
            PyMem_Free(c.pred_hi)
        if c.selfpos != NULL:
            PyMem_Free(c.selfpos)
        if c.sink != NULL:
            PyMem_Free(c.sink)


def _raise_flags(int timed_out, int overflow, int best):
    if timed_out:
        raise TimeBudgetExceededError(
            "search exceeded its time budget", best_so_far=best if best >= 0 else None
        )
    if overflow:
        raise InfeasibleInstanceError(
            f"maximizer enumeration exceeded the cap of {MAXIMIZER_CAP}"
        )


# --------------------------------------------------------------- clique BnB

cdef struct CliqueCtx:
    int nv, cons, r, nelems, best
    uint64_t *adj_lo
    uint64_t *adj_hi
    uint64_t layer_lo, layer_hi
    uint64_t *vmask
    int *degs
    int *ord_v
    int *ord_c
    uint64_t *sink
    long long sink_count
    long long nodes
    double deadline
    int has_deadline
    int timed_out
    int overflow


cdef inline int _clique_tick(CliqueCtx *c) nogil:
    c.nodes += 1
    if c.has_deadline and (c.nodes & _CHECK_MASK) == 0:
        if _now() > c.deadline:
            c.timed_out = 1
            return 1
    return 0


cdef inline int _max_deg(CliqueCtx *c) nogil:
    cdef int e, best = 0
    for e in range(1, c.nelems + 1):
        if c.degs[e] > best:
            best = c.degs[e]
    return best


cdef inline void _deg_add(CliqueCtx *c, uint64_t mask, int delta) nogil:
    cdef int e = 1
    while mask:
        if mask & 1:
            c.degs[e] += delta
        mask >>= 1
        e += 1


cdef void _clique_record(CliqueCtx *c, uint64_t q_lo, uint64_t q_hi, int qcount) nogil:
    if qcount > c.best:
        c.best = qcount
        c.sink_count = 0
    if qcount == c.best:
        if c.sink_count >= _CAP:
            c.overflow = 1
            return
        c.sink[2 * c.sink_count] = q_lo
        c.sink[2 * c.sink_count + 1] = q_hi
        c.sink_count += 1


cdef void _clique_expand(CliqueCtx *c, int depth, uint64_t q_lo, uint64_t q_hi,
                         int qcount, int laycount,
                         uint64_t p_lo, uint64_t p_hi) nogil:
    cdef int i, v, col, n_ord, in_layer, lay2
    cdef uint64_t un_lo, un_hi, av_lo, av_hi, bit, lp_lo, lp_hi, cp_lo, cp_hi
    cdef int *ord_v = c.ord_v + depth * c.nv
    cdef int *ord_c = c.ord_c + depth * c.nv
    if _clique_tick(c):
        return
    if p_lo == 0 and p_hi == 0:
        if c.cons == 1 and laycount < c.r:
            return
        if c.cons == 2 and laycount - _max_deg(c) < c.r:
            return
        _clique_record(c, q_lo, q_hi, qcount)
        return
    # greedy coloring of the candidate set
    n_ord = 0
    un_lo = p_lo
    un_hi = p_hi
    col = 0
    while un_lo or un_hi:
        col += 1
        av_lo = un_lo
        av_hi = un_hi
        while av_lo or av_hi:
            if av_lo:
                v = __builtin_ctzll(av_lo)
                bit = (<uint64_t> 1) << v
                av_lo ^= bit
                un_lo ^= bit
            else:
                v = __builtin_ctzll(av_hi)
                bit = (<uint64_t> 1) << v
                av_hi ^= bit
                un_hi ^= bit
                v += 64
            ord_v[n_ord] = v
            ord_c[n_ord] = col
            n_ord += 1
            av_lo &= ~c.adj_lo[v]
            av_hi &= ~c.adj_hi[v]
    lp_lo = p_lo
    lp_hi = p_hi
    for i in range(n_ord - 1, -1, -1):
        if c.timed_out or c.overflow:
            return
        v = ord_v[i]
        if qcount + ord_c[i] < c.best:
            return
        if v < 64:
            bit = (<uint64_t> 1) << v
            lp_lo ^= bit
        else:
            bit = (<uint64_t> 1) << (v - 64)
            lp_hi ^= bit
        cp_lo = lp_lo & c.adj_lo[v]
        cp_hi = lp_hi & c.adj_hi[v]
        if v < 64:
            in_layer = 1 if (c.layer_lo >> v) & 1 else 0
        else:
            in_layer = 1 if (c.layer_hi >> (v - 64)) & 1 else 0
        lay2 = laycount + in_layer
        if c.cons == 1:
            if lay2 + _pop2(cp_lo & c.layer_lo, cp_hi & c.layer_hi) < c.r:
                continue
        if c.cons == 2:
            if in_layer:
                _deg_add(c, c.vmask[v], 1)
            if lay2 + _pop2(cp_lo & c.layer_lo, cp_hi & c.layer_hi) - _max_deg(c) < c.r:
                if in_layer:
                    _deg_add(c, c.vmask[v], -1)
                continue
        if v < 64:
            _clique_expand(c, depth + 1, q_lo | ((<uint64_t> 1) << v), q_hi,
                           qcount + 1, lay2, cp_lo, cp_hi)
        else:
            _clique_expand(c, depth + 1, q_lo, q_hi | ((<uint64_t> 1) << (v - 64)),
                           qcount + 1, lay2, cp_lo, cp_hi)
        if c.cons == 2 and in_layer:
            _deg_add(c, c.vmask[v], -1)


def clique_bnb(int nverts, adj, int cons_kind, layer, vmasks, int nelems, int r,
               deadline=None):
    """See :func:`setfam.engines.pykern.clique_bnb`."""
    if nverts > 128:
        raise InfeasibleInstanceError("compiled clique kernel supports at most 128 vertices")
    cdef CliqueCtx c
    cdef Py_ssize_t i
    cdef uint64_t full_lo, full_hi
    cdef object lay = layer
    c.nv = nverts
    c.cons = cons_kind
    c.r = r
    c.nelems = nelems
    c.best = -1
    c.nodes = 0
    c.sink_count = 0
    c.timed_out = 0
    c.overflow = 0
    c.has_deadline = deadline is not None
    c.deadline = deadline if deadline is not None else 0.0
    c.layer_lo = <uint64_t> (lay & 0xFFFFFFFFFFFFFFFF)
    c.layer_hi = <uint64_t> (lay >> 64)
    c.adj_lo = c.adj_hi = NULL
    c.vmask = NULL
    c.degs = NULL
    c.ord_v = c.ord_c = NULL
    c.sink = NULL
    try:
        c.adj_lo = _alloc_words(nverts if nverts else 1)
        c.adj_hi = _alloc_words(nverts if nverts else 1)
        _fill_split(list(adj), c.adj_lo, c.adj_hi)
        c.vmask = _alloc_words(nverts if nverts else 1)
        for i in range(nverts):
            c.vmask[i] = vmasks[i]
        c.degs = <int *> PyMem_Malloc((nelems + 1) * sizeof(int))
        c.ord_v = <int *> PyMem_Malloc((nverts + 1) * nverts * sizeof(int))
        c.ord_c = <int *> PyMem_Malloc((nverts + 1) * nverts * sizeof(int))
        if c.degs == NULL or c.ord_v == NULL or c.ord_c == NULL:
            raise MemoryError()
        for i in range(nelems + 1):
            c.degs[i] = 0
        c.sink = _alloc_words(2 * _CAP)
        full_lo = 0xFFFFFFFFFFFFFFFF if nverts >= 64 else ((<uint64_t> 1) << nverts) - 1
        full_hi = 0 if nverts <= 64 else ((<uint64_t> 1) << (nverts - 64)) - 1
        with nogil:
            _clique_expand(&c, 0, 0, 0, 0, 0, full_lo, full_hi)
        _raise_flags(c.timed_out, c.overflow, c.best)
        out = []
        for i in range(c.sink_count):
            out.append(_join(c.sink[2 * i], c.sink[2 * i + 1]))
        return c.best, out, int(c.nodes)
    finally:
        if c.adj_lo != NULL:
            PyMem_Free(c.adj_lo)
        if c.adj_hi != NULL:
            PyMem_Free(c.adj_hi)
        if c.vmask != NULL:
            PyMem_Free(c.vmask)
        if c.degs != NULL:
            PyMem_Free(c.degs)
        if c.ord_v != NULL:
            PyMem_Free(c.ord_v)
        if c.ord_c != NULL:
            PyMem_Free(c.ord_c)
        if c.sink != NULL:
            PyMem_Free(c.sink)


# ------------------------------------------------------------ diversity BnB

cdef struct DivCtx:
    int mh, na, r, nelems, best
    uint64_t *hcompat_lo
    uint64_t *hcompat_hi
    uint64_t *hmask
    uint64_t *akill
    uint64_t *avoid
    int *degs
    uint64_t *sink          # triples: chosen-H lo, chosen-H hi, A
    long long sink_count
    long long nodes
    double deadline
    int has_deadline
    int timed_out
    int overflow


cdef inline int _div_tick(DivCtx *c) nogil:
    c.nodes += 1
    if c.has_deadline and (c.nodes & _CHECK_MASK) == 0:
        if _now() > c.deadline:
            c.timed_out = 1
            return 1
    return 0


cdef inline int _div_feasible(DivCtx *c, uint64_t am) nogil:
    cdef int e
    for e in range(2, c.nelems + 1):
        if c.degs[e] > __builtin_popcountll(am & c.avoid[e]):
            return 0
    return 1


cdef void _div_record(DivCtx *c, int value, uint64_t ch_lo, uint64_t ch_hi, uint64_t am) nogil:
    if value > c.best:
        c.best = value
        c.sink_count = 0
    if value == c.best:
        if c.sink_count >= _CAP:
            c.overflow = 1
            return
        c.sink[3 * c.sink_count] = ch_lo
        c.sink[3 * c.sink_count + 1] = ch_hi
        c.sink[3 * c.sink_count + 2] = am
        c.sink_count += 1


cdef void _div_deg_add(DivCtx *c, uint64_t mask, int delta) nogil:
    cdef int e = 1
    while mask:
        if mask & 1:
            c.degs[e] += delta
        mask >>= 1
        e += 1


cdef void _div_rec(DivCtx *c, uint64_t ch_lo, uint64_t ch_hi, int hcount,
                   uint64_t p_lo, uint64_t p_hi, uint64_t am) nogil:
    cdef int i, hc2
    cdef uint64_t bit_lo, bit_hi, c2_lo, c2_hi, am2, np_lo, np_hi
    if _div_tick(c):
        return
    while p_lo or p_hi:
        if c.timed_out or c.overflow:
            return
        if p_lo:
            i = __builtin_ctzll(p_lo)
            bit_lo = (<uint64_t> 1) << i
            bit_hi = 0
            p_lo ^= bit_lo
        else:
            i = __builtin_ctzll(p_hi)
            bit_hi = (<uint64_t> 1) << i
            bit_lo = 0
            p_hi ^= bit_hi
            i += 64
        if hcount + 1 + _pop2(p_lo, p_hi) + __builtin_popcountll(am) < c.best:
            return
        if (ch_lo & ~c.hcompat_lo[i]) or (ch_hi & ~c.hcompat_hi[i]):
            continue
        c2_lo = ch_lo | bit_lo
        c2_hi = ch_hi | bit_hi
        am2 = am & ~c.akill[i]
        hc2 = hcount + 1
        _div_deg_add(c, c.hmask[i], 1)
        if _div_feasible(c, am2):
            if hc2 >= c.r:
                _div_record(c, hc2 + __builtin_popcountll(am2), c2_lo, c2_hi, am2)
            np_lo = p_lo & c.hcompat_lo[i]
            np_hi = p_hi & c.hcompat_hi[i]
            if hc2 + _pop2(np_lo, np_hi) + __builtin_popcountll(am2) >= c.best:
                _div_rec(c, c2_lo, c2_hi, hc2, np_lo, np_hi, am2)
        _div_deg_add(c, c.hmask[i], -1)


def diversity_bnb(int mh, hcompat, hmasks, akill, int na, avoid_a, int r,
                  int nelems, deadline=None):
    """See :func:`setfam.engines.pykern.diversity_bnb`."""
    if mh > 128 or na > 64:
        raise InfeasibleInstanceError(
            "compiled diversity kernel supports 128 non-star and 64 star candidates"
        )
    cdef DivCtx c
    cdef Py_ssize_t i
    cdef uint64_t full_p_lo, full_p_hi, full_a
    c.mh = mh
    c.na = na
    c.r = r
    c.nelems = nelems
    c.best = -1
    c.nodes = 0
    c.sink_count = 0
    c.timed_out = 0
    c.overflow = 0
    c.has_deadline = deadline is not None
    c.deadline = deadline if deadline is not None else 0.0
    c.hcompat_lo = c.hcompat_hi = c.hmask = c.akill = c.avoid = NULL
    c.degs = NULL
    c.sink = NULL
    try:
        c.hcompat_lo = _alloc_words(mh if mh else 1)
        c.hcompat_hi = _alloc_words(mh if mh else 1)
        _fill_split(list(hcompat), c.hcompat_lo, c.hcompat_hi)
        c.hmask = _alloc_words(mh if mh else 1)
        c.akill = _alloc_words(mh if mh else 1)
        for i in range(mh):
            c.hmask[i] = hmasks[i]
            c.akill[i] = akill[i]
        c.avoid = _alloc_words(nelems + 1)
        for i in range(nelems + 1):
            c.avoid[i] = avoid_a[i] if i < len(avoid_a) else 0
        c.degs = <int *> PyMem_Malloc((nelems + 1) * sizeof(int))
        if c.degs == NULL:
            raise MemoryError()
        for i in range(nelems + 1):
            c.degs[i] = 0
        c.sink = _alloc_words(3 * _CAP)
        full_p_lo = 0xFFFFFFFFFFFFFFFF if mh >= 64 else ((<uint64_t> 1) << mh) - 1
        full_p_hi = 0 if mh <= 64 else ((<uint64_t> 1) << (mh - 64)) - 1
        full_a = 0xFFFFFFFFFFFFFFFF if na >= 64 else ((<uint64_t> 1) << na) - 1
        if r <= 0:
            _div_record(&c, na, 0, 0, full_a)
        with nogil:
            _div_rec(&c, 0, 0, 0, full_p_lo, full_p_hi, full_a)
        _raise_flags(c.timed_out, c.overflow, c.best)
        out = []
        for i in range(c.sink_count):
            out.append((_join(c.sink[3 * i], c.sink[3 * i + 1]), int(c.sink[3 * i + 2])))
        return c.best, out, int(c.nodes)
    finally:
        if c.hcompat_lo != NULL:
            PyMem_Free(c.hcompat_lo)
        if c.hcompat_hi != NULL:
            PyMem_Free(c.hcompat_hi)
        if c.hmask != NULL:
            PyMem_Free(c.hmask)
        if c.akill != NULL:
            PyMem_Free(c.akill)
        if c.avoid != NULL:
            PyMem_Free(c.avoid)
        if c.degs != NULL:
            PyMem_Free(c.degs)
        if c.sink != NULL:
            PyMem_Free(c.sink)
