"""Fallback walk kernel built on scipy sparse matvec.

Mirrors the interface of the compiled kernel in ``_ckernel.pyx``; the
active backend is chosen in ``kernels``.
"""

import numpy as np
import scipy.sparse as sp


class Stepper:
    """One uniform-walk step and the two fused iterations over it.

    Holds the transposed transition matrix in CSR form: row ``v`` lists
    the in-edges of ``v`` weighted by ``1/d_out(u)``, so ``mt @ p``
    computes ``p M``.
    """

    def __init__(self, n, in_indptr, in_indices, in_weights):
        self.n = n
        self._mt = sp.csr_matrix((in_weights, in_indices, in_indptr),
                                 shape=(n, n))

    def step(self, p):
        return self._mt @ p

    def step_many(self, dists):
        # each row of `dists` advanced by one step
        return (self._mt @ dists.T).T

    def pagerank(self, reset, eps, tol, max_iter):
        p = reset.copy()
        decay = 1.0 - eps
        shift = eps * reset
        delta = np.inf
        iters = 0
        while iters < max_iter:
            nxt = decay * (self._mt @ p) + shift
            iters += 1
            delta = float(np.abs(nxt - p).sum())
            p = nxt
            if delta <= tol:
                break
        return p, iters, delta

    def lazy_stationary(self, p0, tol, max_iter):
        p = p0.copy()
        delta = np.inf
        iters = 0
        while iters < max_iter:
            nxt = 0.5 * (self._mt @ p) + 0.5 * p
            iters += 1
            delta = float(np.abs(nxt - p).sum())
            p = nxt
            if delta <= tol:
                break
        return p, iters, delta
