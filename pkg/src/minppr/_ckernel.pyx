# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel: gather-style sparse step plus fused iterations.

Interface matches ``_pykernel.Stepper``. Loops are kept serial so results
are bit-identical across runs for fixed inputs.
"""

import numpy as np

from libc.math cimport fabs


cdef class Stepper:
    cdef public int n
    cdef int[::1] indptr      # in-adjacency CSR
    cdef int[::1] indices
    cdef double[::1] weights  # 1/d_out(source) per in-edge

    def __init__(self, n, in_indptr, in_indices, in_weights):
        self.n = n
        self.indptr = np.ascontiguousarray(in_indptr, dtype=np.int32)
        self.indices = np.ascontiguousarray(in_indices, dtype=np.int32)
        self.weights = np.ascontiguousarray(in_weights, dtype=np.float64)

    cdef void _gather(self, double[::1] p, double[::1] out) nogil:
        cdef int v, j
        cdef double acc
        for v in range(self.n):
            acc = 0.0
            for j in range(self.indptr[v], self.indptr[v + 1]):
                acc += p[self.indices[j]] * self.weights[j]
            out[v] = acc

    def step(self, p):
        cdef double[::1] src = np.ascontiguousarray(p, dtype=np.float64)
        out = np.empty(self.n, dtype=np.float64)
        cdef double[::1] dst = out
        with nogil:
            self._gather(src, dst)
        return out

    def step_many(self, dists):
        cdef double[:, ::1] src = np.ascontiguousarray(dists, dtype=np.float64)
        cdef Py_ssize_t rows = src.shape[0]
        out = np.empty((rows, self.n), dtype=np.float64)
        cdef double[:, ::1] dst = out
        cdef Py_ssize_t r
        with nogil:
            for r in range(rows):
                self._gather(src[r], dst[r])
        return out

    def pagerank(self, reset, double eps, double tol, long max_iter):
        cdef double[::1] rv = np.ascontiguousarray(reset, dtype=np.float64)
        cur = np.array(rv, dtype=np.float64, copy=True)
        nxt = np.empty(self.n, dtype=np.float64)
        cdef double[::1] a = cur
        cdef double[::1] b = nxt
        cdef double decay = 1.0 - eps
        cdef double delta = np.inf
        cdef long iters = 0
        cdef int v
        with nogil:
            while iters < max_iter:
                self._gather(a, b)
                delta = 0.0
                for v in range(self.n):
                    b[v] = decay * b[v] + eps * rv[v]
                    delta += fabs(b[v] - a[v])
                a, b = b, a
                iters += 1
                if delta <= tol:
                    break
        # `a` holds the latest iterate after the swap
        return np.asarray(a).copy(), iters, delta

    def lazy_stationary(self, p0, double tol, long max_iter):
        cur = np.ascontiguousarray(p0, dtype=np.float64).copy()
        nxt = np.empty(self.n, dtype=np.float64)
        cdef double[::1] a = cur
        cdef double[::1] b = nxt
        cdef double delta = np.inf
        cdef long iters = 0
        cdef int v
        with nogil:
            while iters < max_iter:
                self._gather(a, b)
                delta = 0.0
                for v in range(self.n):
                    b[v] = 0.5 * b[v] + 0.5 * a[v]
                    delta += fabs(b[v] - a[v])
                a, b = b, a
                iters += 1
                if delta <= tol:
                    break
        return np.asarray(a).copy(), iters, delta
