# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled step core: one semi-Lagrangian update over all nodes.

Scalar twin of ``_core_np.step_arrays``.  Expression order must stay aligned
with the numpy core and ``kernels.py``; compiled with -ffp-contract=off so
both backends produce bitwise-identical output.
"""

from libc.math cimport fabs

import numpy as np


def step_arrays(f, d, u, double h, double dt, int scheme, double alpha_scale,
                bint periodic):
    """Advance nodal values/derivatives one step; returns (f_new, d_new)."""
    cdef double[::1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef double[::1] dv = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t n = fv.shape[0]
    if scheme < 0 or scheme > 3:
        raise ValueError(f"unknown scheme code {scheme}")

    f_new = np.empty(n, dtype=np.float64)
    d_new = np.empty(n, dtype=np.float64)
    cdef double[::1] fo = f_new
    cdef double[::1] do = d_new

    cdef Py_ssize_t i, j, jp, jm
    cdef double ui, k, hs, fn, ff, dn, df, s, p, q
    cdef double ratio, inv, m, t, alpha, ae
    cdef double den, g1, g2, kk, c2, c3, value, deriv, dudx
    cdef bint convex

    for i in range(n):
        ui = uv[i]
        k = (fabs(ui) * dt) / h
        if ui < 0.0:
            hs = h
            j = i + 1
        else:
            hs = -h
            j = i - 1
        jp = i + 1
        jm = i - 1
        if periodic:
            if j < 0:
                j += n
            elif j >= n:
                j -= n
            if jp >= n:
                jp -= n
            if jm < 0:
                jm += n
        else:
            if j < 0:
                j = 0
            elif j >= n:
                j = n - 1
            if jp >= n:
                jp = n - 1
            if jm < 0:
                jm = 0

        fn = fv[i]
        ff = fv[j]
        dn = dv[i]
        df = dv[j]
        s = (ff - fn) / hs
        p = (s - dn) * hs
        q = (df - s) * hs
        convex = p * q > 0.0

        ae = 0.0
        if scheme == 1:
            if convex:
                ae = 1.0
        elif scheme == 2:
            if convex and dn * df < 0.0:
                ae = 1.0
        elif scheme == 3:
            if convex:
                ratio = q / p
                inv = p / q
                m = ratio if ratio > inv else inv
                if m < 2.0:
                    m = 2.0
                t = m * (m - 2.0)
                alpha = t / (t + 1.0)
                ae = alpha * alpha_scale
                if ae < 0.0:
                    ae = 0.0
                if ae > 1.0:
                    ae = 1.0

        kk = k * k
        if ae > 0.0:
            den = q + (p - q) * k
            g1 = ae * (p * p) / den
            g2 = (1.0 - ae) * (2.0 * p - den)
            value = fn + dn * hs * k + (g1 + g2) * kk
            deriv = dn + (
                g1 * ((q + den) / den) + 2.0 * g2 + (1.0 - ae) * (q - den)
            ) * (k / hs)
        else:
            c2 = 2.0 * p - q
            c3 = q - p
            value = fn + dn * hs * k + c2 * kk + c3 * (kk * k)
            deriv = dn + (2.0 * c2 * k + 3.0 * c3 * kk) / hs

        dudx = (uv[jp] - uv[jm]) / (2.0 * h)
        fo[i] = value
        do[i] = (1.0 - dudx * dt) * deriv

    return f_new, d_new
