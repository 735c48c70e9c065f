"""Vectorized (numpy) step core: one semi-Lagrangian update over all nodes.

Fallback used when the compiled extension is unavailable.  Expression order
must stay aligned with ``_core_cy.pyx`` and ``kernels.py``: the test suite
asserts bitwise-identical output across the backends.
"""

import numpy as np

# Scheme codes shared with the compiled core (see SchemeKind.code).
CIP, RATIONAL, MODIFIED_RATIONAL, HYBRID = 0, 1, 2, 3


def step_arrays(f, d, u, h, dt, scheme, alpha_scale, periodic):
    """Advance nodal values/derivatives one step; returns (f_new, d_new).

    No validation here: the solver checks the CFL condition and array shapes
    before calling.  ``periodic`` selects wraparound neighbors; otherwise
    out-of-range neighbors clone the edge node.
    """
    n = f.shape[0]
    idx = np.arange(n)
    upwind = u < 0.0
    k = (np.abs(u) * dt) / h
    hs = np.where(upwind, h, -h)

    j = np.where(upwind, idx + 1, idx - 1)
    jp = idx + 1
    jm = idx - 1
    if periodic:
        j %= n
        jp %= n
        jm %= n
    else:
        np.clip(j, 0, n - 1, out=j)
        np.clip(jp, 0, n - 1, out=jp)
        np.clip(jm, 0, n - 1, out=jm)

    fn = f
    ff = f[j]
    dn = d
    df = d[j]
    s = (ff - fn) / hs
    p = (s - dn) * hs
    q = (df - s) * hs
    convex = (p * q) > 0.0

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if scheme == CIP:
            ae = np.zeros(n)
        elif scheme == RATIONAL:
            ae = np.where(convex, 1.0, 0.0)
        elif scheme == MODIFIED_RATIONAL:
            ae = np.where(convex & (dn * df < 0.0), 1.0, 0.0)
        elif scheme == HYBRID:
            ratio = q / p
            inv = p / q
            m = np.maximum(ratio, inv)
            m = np.maximum(m, 2.0)
            t = m * (m - 2.0)
            alpha = t / (t + 1.0)
            ae = alpha * alpha_scale
            ae = np.maximum(ae, 0.0)
            ae = np.minimum(ae, 1.0)
            ae = np.where(convex, ae, 0.0)
        else:
            raise ValueError(f"unknown scheme code {scheme}")

        kk = k * k

        # Blended (rational for ae == 1) value/derivative; garbage on lanes
        # with a vanishing denominator, all of which select the cubic below.
        den = q + (p - q) * k
        g1 = ae * (p * p) / den
        g2 = (1.0 - ae) * (2.0 * p - den)
        val_b = fn + dn * hs * k + (g1 + g2) * kk
        der_b = dn + (
            g1 * ((q + den) / den) + 2.0 * g2 + (1.0 - ae) * (q - den)
        ) * (k / hs)

        c2 = 2.0 * p - q
        c3 = q - p
        val_c = fn + dn * hs * k + c2 * kk + c3 * (kk * k)
        der_c = dn + (2.0 * c2 * k + 3.0 * c3 * kk) / hs

    blend = ae > 0.0
    value = np.where(blend, val_b, val_c)
    deriv = np.where(blend, der_b, der_c)

    dudx = (u[jp] - u[jm]) / (2.0 * h)
    return value, (1.0 - dudx * dt) * deriv
