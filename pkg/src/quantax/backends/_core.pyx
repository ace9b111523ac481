# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels for the hot lattice loops.

Must stay result- and witness-identical to ``pure.py``; the scan orders here
define the contract (a ascending, then b / atom order, then x ascending).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def transitive_closure(cnp.ndarray leq_arr):
    cdef unsigned char[:, ::1] m = leq_arr.view(np.uint8)
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k
    for i in range(n):
        m[i, i] = 1
    for k in range(n):
        for i in range(n):
            if m[i, k]:
                for j in range(n):
                    if m[k, j]:
                        m[i, j] = 1
    return leq_arr


def meet_join_tables(cnp.ndarray leq_arr):
    cdef const unsigned char[:, ::1] m = leq_arr.view(np.uint8)
    cdef Py_ssize_t n = m.shape[0]
    meet_arr = np.full((n, n), -1, dtype=np.int32)
    join_arr = np.full((n, n), -1, dtype=np.int32)
    cdef cnp.int32_t[:, ::1] meet = meet_arr
    cdef cnp.int32_t[:, ::1] join = join_arr
    cdef Py_ssize_t a, b, x
    cdef Py_ssize_t g

    for a in range(n):
        for b in range(n):
            g = -1
            for x in range(n):
                if m[x, a] and m[x, b]:
                    if g < 0 or m[g, x]:
                        g = x
            if g < 0:
                return meet_arr, join_arr, (int(a), int(b), "meet")
            for x in range(n):
                if m[x, a] and m[x, b] and not m[x, g]:
                    return meet_arr, join_arr, (int(a), int(b), "meet")
            meet[a, b] = <cnp.int32_t> g

    for a in range(n):
        for b in range(n):
            g = -1
            for x in range(n):
                if m[a, x] and m[b, x]:
                    if g < 0 or m[x, g]:
                        g = x
            if g < 0:
                return meet_arr, join_arr, (int(a), int(b), "join")
            for x in range(n):
                if m[a, x] and m[b, x] and not m[g, x]:
                    return meet_arr, join_arr, (int(a), int(b), "join")
            join[a, b] = <cnp.int32_t> g

    return meet_arr, join_arr, None


def covering_scan(cnp.ndarray leq_arr, cnp.ndarray join_arr, cnp.ndarray atoms_arr):
    cdef const unsigned char[:, ::1] m = leq_arr.view(np.uint8)
    cdef const cnp.int32_t[:, ::1] join = join_arr
    cdef const cnp.int32_t[::1] atoms = atoms_arr
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t k = atoms.shape[0]
    cdef Py_ssize_t a, i, x
    cdef cnp.int32_t p, j

    for a in range(n):
        for i in range(k):
            p = atoms[i]
            j = join[a, p]
            for x in range(n):
                if m[a, x] and x != a and m[x, j] and x != j:
                    return int(a), int(p), int(x)
    return None


def weak_modularity_scan(
    cnp.ndarray leq_arr,
    cnp.ndarray meet_arr,
    cnp.ndarray join_arr,
    cnp.ndarray ortho_arr,
):
    cdef const unsigned char[:, ::1] m = leq_arr.view(np.uint8)
    cdef const cnp.int32_t[:, ::1] meet = meet_arr
    cdef const cnp.int32_t[:, ::1] join = join_arr
    cdef const cnp.int32_t[::1] ortho = ortho_arr
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t a, b
    cdef cnp.int32_t oa, t

    for a in range(n):
        oa = ortho[a]
        for b in range(n):
            if m[a, b]:
                t = meet[oa, b]
                if join[t, a] != b:
                    return int(a), int(b)
    return None
