"""Dense symmetric/Hermitian eigensolver.

Householder tridiagonalization followed by implicit-shift QL on the
tridiagonal, with eigenvectors recovered by inverse iteration so the
residual contract max|A v - lambda v| can be reported.  Complex
Hermitian input is handled through the standard real embedding
[[Re, -Im], [Im, Re]], whose spectrum is the Hermitian spectrum doubled.
"""

import numpy as np

from .errors import NumericalError

_MAX_QL_ITER = 50


def _householder_tridiag(a):
    """Reduce symmetric a to tridiagonal (d, e) and return the orthogonal Q."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    q = np.eye(n)
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = np.linalg.norm(x)
        if norm == 0.0:
            continue
        v = x.copy()
        v[0] += np.copysign(norm, x[0] if x[0] != 0 else 1.0)
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        # similarity update of the trailing block, rank-2 form
        blk = a[k + 1:, k + 1:]
        w = blk @ v
        tau = v @ w
        w2 = w - tau * v
        blk -= 2.0 * np.outer(v, w2) + 2.0 * np.outer(w2, v)
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = -np.copysign(norm, x[0] if x[0] != 0 else 1.0)
        a[k, k + 1] = a[k + 1, k]
        # accumulate Q = H_0 H_1 ... (apply reflector on the right)
        qv = q[:, k + 1:] @ v
        q[:, k + 1:] -= 2.0 * np.outer(qv, v)
    d = np.diag(a).copy()
    e = np.diag(a, 1).copy() if n > 1 else np.zeros(0)
    return d, e, q


def _ql_eigenvalues(d, e):
    """Implicit-shift QL iteration on a symmetric tridiagonal (d, e)."""
    d = d.copy()
    n = len(d)
    e = np.append(e.copy(), 0.0)
    for l in range(n):
        for iteration in range(_MAX_QL_ITER + 1):
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= np.finfo(float).eps * dd:
                    break
                m += 1
            if m == l:
                break
            if iteration == _MAX_QL_ITER:
                raise NumericalError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + np.copysign(r, g))
            s = c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return d


def _solve_tridiag(d, e, lam, b):
    """Solve (T - lam I) x = b with partial pivoting; T tridiagonal (d, e)."""
    n = len(d)
    main = d - lam
    lower = e.copy()
    upper = e.copy()
    extra = np.zeros(n)  # second superdiagonal fill-in from pivoting
    main = main.copy()
    x = b.copy()
    tiny = np.finfo(float).tiny * 1e4
    for i in range(n - 1):
        if abs(lower[i]) > abs(main[i]):
            # swap rows i and i+1
            main[i], lower[i] = lower[i], main[i]
            up_next = main[i + 1]
            main[i + 1] = upper[i]
            upper[i] = up_next
            extra[i] = e[i + 1] if i + 1 < n - 1 else 0.0
            if i + 1 < n - 1:
                upper[i + 1] = 0.0
            x[i], x[i + 1] = x[i + 1], x[i]
        if abs(main[i]) < tiny:
            main[i] = tiny
        factor = lower[i] / main[i]
        main[i + 1] = main[i + 1] - factor * upper[i]
        if i + 1 < n - 1:
            upper[i + 1] = upper[i + 1] - factor * extra[i]
        x[i + 1] = x[i + 1] - factor * x[i]
    if abs(main[n - 1]) < tiny:
        main[n - 1] = tiny
    # back substitution
    x[n - 1] = x[n - 1] / main[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - upper[n - 2] * x[n - 1]) / main[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - upper[i] * x[i + 1] - extra[i] * x[i + 2]) / main[i]
    return x


def _tridiag_eigenvector(d, e, lam, scale, k):
    """Inverse iteration for one eigenvector of the tridiagonal (d, e)."""
    n = len(d)
    rng = np.random.default_rng(12345 + k)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    shift = lam + 1e-14 * scale * (1 + k % 3)
    for _ in range(3):
        v = _solve_tridiag(d, e, shift, v)
        norm = np.linalg.norm(v)
        if not np.isfinite(norm) or norm == 0.0:
            raise NumericalError("inverse iteration broke down")
        v /= norm
    return v


def eigh_symmetric(a):
    """Eigenvalues (descending) and eigenvectors of a real symmetric matrix."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0]]), np.ones((1, 1))
    d, e, q = _householder_tridiag(a)
    vals = _ql_eigenvalues(d, e)
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    scale = max(np.max(np.abs(vals)), 1e-300)
    vecs = np.empty((n, n))
    for k, lam in enumerate(vals):
        w = _tridiag_eigenvector(d, e, lam, scale, k)
        vecs[:, k] = q @ w
    return vals, vecs


def eigh_hermitian(a):
    """Eigenvalues (descending) and eigenvectors of a Hermitian matrix.

    Real symmetric input short-circuits to the real path; complex input
    goes through the doubled real embedding.
    """
    a = np.asarray(a)
    if not np.iscomplexobj(a) or np.allclose(a.imag, 0.0):
        return eigh_symmetric(np.real(a))
    n = a.shape[0]
    re, im = a.real, a.imag
    big = np.block([[re, -im], [im, re]])
    vals2, vecs2 = eigh_symmetric(big)
    # each Hermitian eigenvalue appears twice; keep every other one
    vals = vals2[::2]
    vecs = np.empty((n, n), dtype=complex)
    for k in range(n):
        w = vecs2[:, 2 * k]
        z = w[:n] + 1j * w[n:]
        nz = np.linalg.norm(z)
        if nz < 1e-12:
            z = w[:n] - 1j * w[n:]
            nz = np.linalg.norm(z)
        vecs[:, k] = z / nz
    return vals, vecs
