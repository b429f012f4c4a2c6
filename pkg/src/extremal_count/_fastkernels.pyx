# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops: injective-embedding counting,
canonical-form minimization, and triangle-free enumeration.

Mirrors `_pykernels` exactly (same mask packing, same output order); see
that module for the conventions.  Limits: hosts up to 64 vertices and
counts below 2**63 for the counter, 16 vertices for canonical forms and
enumeration.  Callers dispatch to the pure kernels beyond these.
"""

from libc.stdint cimport uint64_t, uint32_t
from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "compiled"

cdef extern from *:
    """
    static inline int ec_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int ec_ctz(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int ec_popcount(unsigned long long x) nogil
    int ec_ctz(unsigned long long x) nogil


# ---------------------------------------------------------------------------
# injective embedding counting
# ---------------------------------------------------------------------------

cdef uint64_t _count_rec(int level, int m, uint64_t used, uint64_t full,
                         uint64_t* host_rows, int* parent_flat,
                         int* parent_start, int* sel) nogil:
    cdef uint64_t cand = full & ~used
    cdef uint64_t total = 0
    cdef uint64_t bit
    cdef int i
    for i in range(parent_start[level], parent_start[level + 1]):
        cand &= host_rows[sel[parent_flat[i]]]
    if level == m - 1:
        return <uint64_t> ec_popcount(cand)
    while cand:
        bit = cand & (0 - cand)
        sel[level] = ec_ctz(bit)
        total += _count_rec(level + 1, m, used | bit, full,
                            host_rows, parent_flat, parent_start, sel)
        cand &= cand - 1
    return total


def count_injective(list host_rows_py, int n_host, list parents_py,
                    object first_mask):
    """Injective embedding count; first_mask=-1 means unrestricted."""
    cdef int m = len(parents_py)
    if m == 0:
        return 1
    if m > n_host or n_host > 64:
        if m > n_host:
            return 0
        raise ValueError("compiled kernel supports hosts up to 64 vertices")
    cdef uint64_t host_rows[64]
    cdef int sel[64]
    cdef int parent_start[65]
    cdef int i, j, total_parents = 0
    for i in range(n_host):
        host_rows[i] = <uint64_t> host_rows_py[i]
    for i in range(m):
        total_parents += len(parents_py[i])
    cdef int* parent_flat = <int*> PyMem_Malloc(sizeof(int) * (total_parents if total_parents else 1))
    if not parent_flat:
        raise MemoryError()
    cdef int k = 0
    for i in range(m):
        parent_start[i] = k
        for j in parents_py[i]:
            parent_flat[k] = j
            k += 1
    parent_start[m] = k
    cdef uint64_t full = (<uint64_t> 1 << n_host) - 1 if n_host < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t fm = full
    if first_mask is not None and first_mask != -1:
        fm = <uint64_t> first_mask & full
    cdef uint64_t result = 0
    cdef uint64_t cand0, bit
    try:
        with nogil:
            if m == 1:
                result = <uint64_t> ec_popcount(fm)
            else:
                cand0 = fm
                while cand0:
                    bit = cand0 & (0 - cand0)
                    sel[0] = ec_ctz(bit)
                    result += _count_rec(1, m, bit, full, host_rows,
                                         parent_flat, parent_start, sel)
                    cand0 &= cand0 - 1
    finally:
        PyMem_Free(parent_flat)
    return result


# ---------------------------------------------------------------------------
# canonical forms (n <= 16)
# ---------------------------------------------------------------------------

cdef void _column_blocks_c(uint32_t* rows, int n, uint32_t* out) nogil:
    cdef int i, j
    cdef uint32_t b
    for j in range(1, n):
        b = 0
        for i in range(j):
            b = (b << 1) | ((rows[i] >> j) & 1)
        out[j - 1] = b


cdef bint _is_min_rec(int k, int n, uint32_t used, uint32_t* rows,
                      uint32_t* orig, int* perm) nogil:
    cdef int v, i
    cdef uint32_t block, target, rv
    if k == n:
        return True
    target = orig[k - 1]
    for v in range(n):
        if (used >> v) & 1:
            continue
        rv = rows[v]
        block = 0
        for i in range(k):
            block = (block << 1) | ((rv >> perm[i]) & 1)
        if block > target:
            continue
        if block < target:
            return False
        perm[k] = v
        if not _is_min_rec(k + 1, n, used | (<uint32_t> 1 << v), rows, orig, perm):
            return False
    return True


def is_min_canonical(list rows_py, int n):
    if n <= 1:
        return True
    if n > 16:
        raise ValueError("compiled kernel supports up to 16 vertices")
    cdef uint32_t rows[16]
    cdef uint32_t orig[16]
    cdef int perm[16]
    cdef int v0
    for v0 in range(n):
        rows[v0] = <uint32_t> rows_py[v0]
    _column_blocks_c(rows, n, orig)
    cdef bint ok = True
    with nogil:
        for v0 in range(n):
            perm[0] = v0
            if not _is_min_rec(1, n, <uint32_t> 1 << v0, rows, orig, perm):
                ok = False
                break
    return bool(ok)


cdef uint32_t _block_of(uint32_t* rows, int* perm, int v, int k) nogil:
    cdef uint32_t rv = rows[v]
    cdef uint32_t b = 0
    cdef int i
    for i in range(k):
        b = (b << 1) | ((rv >> perm[i]) & 1)
    return b


cdef void _greedy_completion(int k, int n, uint32_t used, uint32_t* rows,
                             int* perm, uint32_t* best) nogil:
    cdef int kk, v, best_v
    cdef uint32_t b, best_b
    for kk in range(k, n):
        best_b = <uint32_t> 0xFFFFFFFF
        best_v = -1
        for v in range(n):
            if (used >> v) & 1:
                continue
            b = _block_of(rows, perm, v, kk)
            if b < best_b:
                best_b = b
                best_v = v
        perm[kk] = best_v
        used |= <uint32_t> 1 << best_v
        best[kk - 1] = best_b


cdef void _canon_rec(int k, int n, uint32_t used, uint32_t* rows,
                     int* perm, uint32_t* best) nogil:
    cdef int v
    cdef uint32_t b
    if k == n:
        return
    for v in range(n):
        if (used >> v) & 1:
            continue
        b = _block_of(rows, perm, v, k)
        if b > best[k - 1]:
            continue
        perm[k] = v
        if b < best[k - 1]:
            best[k - 1] = b
            _greedy_completion(k + 1, n, used | (<uint32_t> 1 << v), rows, perm, best)
        _canon_rec(k + 1, n, used | (<uint32_t> 1 << v), rows, perm, best)


def canonical_mask(list rows_py, int n):
    if n <= 1:
        return 0
    if n > 16:
        raise ValueError("compiled kernel supports up to 16 vertices")
    cdef uint32_t rows[16]
    cdef uint32_t best[16]
    cdef int perm[16]
    cdef int i, v0
    for i in range(n):
        rows[i] = <uint32_t> rows_py[i]
    _column_blocks_c(rows, n, best)
    with nogil:
        for v0 in range(n):
            perm[0] = v0
            _canon_rec(1, n, <uint32_t> 1 << v0, rows, perm, best)
    mask = 0
    for i in range(1, n):
        mask = (mask << i) | int(best[i - 1])
    return mask


# ---------------------------------------------------------------------------
# triangle-free enumeration (n <= 16 in principle; intended for n <= 9)
# ---------------------------------------------------------------------------

cdef struct EnumState:
    int n
    int n_edges
    int prefix_len
    uint64_t prefix_val
    uint32_t rows[16]
    int edge_i[120]
    int edge_j[120]


cdef int _enum_rec(EnumState* st, int k, uint64_t mask, list out) except -1:
    cdef int i, j
    cdef uint64_t one_mask
    if k == st.n_edges:
        if _accept_canonical(st):
            out.append(mask)
        return 0
    i = st.edge_i[k]
    j = st.edge_j[k]
    cdef int shift = st.n_edges - 1 - k
    cdef bint forced = k < st.prefix_len
    cdef bint forced_bit = False
    if forced:
        forced_bit = (st.prefix_val >> (st.prefix_len - 1 - k)) & 1
    # 0-branch first: ascending mask emission
    if not forced or not forced_bit:
        _enum_rec(st, k + 1, mask, out)
    if (not forced or forced_bit) and not (st.rows[i] & st.rows[j]):
        st.rows[i] |= <uint32_t> 1 << j
        st.rows[j] |= <uint32_t> 1 << i
        one_mask = mask | (<uint64_t> 1 << shift)
        _enum_rec(st, k + 1, one_mask, out)
        st.rows[i] &= ~(<uint32_t> 1 << j)
        st.rows[j] &= ~(<uint32_t> 1 << i)
    return 0


cdef bint _accept_canonical(EnumState* st) nogil:
    cdef uint32_t orig[16]
    cdef int perm[16]
    cdef int v0
    if st.n <= 1:
        return True
    _column_blocks_c(st.rows, st.n, orig)
    for v0 in range(st.n):
        perm[0] = v0
        if not _is_min_rec(1, st.n, <uint32_t> 1 << v0, st.rows, orig, perm):
            return False
    return True


def triangle_free_canonical_masks(int n, int prefix_len=0, object prefix_val=0):
    """Canonical masks of all triangle-free graphs on n vertices, ascending.

    With prefix_len > 0 only masks whose first prefix_len staircase bits
    equal prefix_val are produced, partitioning the search space for
    parallel workers.
    """
    if n > 16:
        raise ValueError("compiled kernel supports up to 16 vertices")
    cdef EnumState st
    cdef int k, i, j
    st.n = n
    st.n_edges = n * (n - 1) // 2
    if prefix_len < 0 or prefix_len > st.n_edges:
        raise ValueError("bad prefix length")
    st.prefix_len = prefix_len
    st.prefix_val = <uint64_t> prefix_val
    for i in range(n):
        st.rows[i] = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            st.edge_i[k] = i
            st.edge_j[k] = j
            k += 1
    out = []
    if n == 0:
        return [0]
    _enum_rec(&st, 0, 0, out)
    return out
