"""Independent numerical routes used only by the tests.

Nothing here calls a numpy eigensolver or matrix exponential: the
exponential is a scaled Taylor series, the Schur form comes from a
hand-rolled Hessenberg reduction plus Wilkinson-shifted QR iteration with
Householder factorizations, the characteristic polynomial is built by the
Faddeev-LeVerrier recursion, and the Hermitian second-pass solver is a
cyclic complex Jacobi sweep. They are slow and exist to cross-check the
package's primary implementations on small dimensions.
"""

import numpy as np


def expm_taylor(a, terms=30, squarings=8):
    """exp(a) by Taylor series on a/2^squarings, then repeated squaring."""
    b = np.asarray(a, dtype=complex) / (2.0**squarings)
    n = b.shape[0]
    out = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, terms):
        term = term @ b / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def householder_qr(a):
    """QR factorization by Householder reflections, returns (q, r)."""
    r = np.asarray(a, dtype=complex).copy()
    n = r.shape[0]
    q = np.eye(n, dtype=complex)
    for k in range(n - 1):
        x = r[k:, k]
        normx = np.linalg.norm(x)
        if normx < 1e-300:
            continue
        alpha = -np.exp(1j * np.angle(x[0])) * normx if x[0] != 0 else -normx
        u = x.copy()
        u[0] -= alpha
        nu = np.linalg.norm(u)
        if nu < 1e-300:
            continue
        u = u / nu
        r[k:, :] -= 2.0 * np.outer(u, u.conj() @ r[k:, :])
        q[:, k:] -= 2.0 * np.outer(q[:, k:] @ u, u.conj())
    return q, r


def hessenberg(a):
    """Unitary similarity to upper Hessenberg form, returns (h, q)."""
    h = np.asarray(a, dtype=complex).copy()
    n = h.shape[0]
    q = np.eye(n, dtype=complex)
    for k in range(n - 2):
        x = h[k + 1 :, k]
        normx = np.linalg.norm(x)
        if normx < 1e-300:
            continue
        alpha = -np.exp(1j * np.angle(x[0])) * normx if x[0] != 0 else -normx
        u = x.copy()
        u[0] -= alpha
        nu = np.linalg.norm(u)
        if nu < 1e-300:
            continue
        u = u / nu
        h[k + 1 :, :] -= 2.0 * np.outer(u, u.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2.0 * np.outer(h[:, k + 1 :] @ u, u.conj())
        q[:, k + 1 :] -= 2.0 * np.outer(q[:, k + 1 :] @ u, u.conj())
    return h, q


def schur_qr(a, tol=1e-14, maxiter=10000):
    """Schur decomposition by shifted QR iteration with deflation.

    Returns (diagonal eigenvalues, accumulated unitary, iterations). The
    Hessenberg reduction comes first so the trailing-subdiagonal deflation
    test is sound; shifts are Wilkinson's choice from the trailing 2x2.
    """
    h, qtot = hessenberg(a)
    n = h.shape[0]
    m = n
    it = 0
    while m > 1:
        it += 1
        if it > maxiter:
            raise RuntimeError(f"QR iteration did not converge in {maxiter} steps")
        if abs(h[m - 1, m - 2]) < tol * (
            abs(h[m - 1, m - 1]) + abs(h[m - 2, m - 2]) + 1e-300
        ):
            h[m - 1, m - 2] = 0.0
            m -= 1
            continue
        t2 = h[m - 2 : m, m - 2 : m]
        tr = t2[0, 0] + t2[1, 1]
        det = t2[0, 0] * t2[1, 1] - t2[0, 1] * t2[1, 0]
        disc = np.sqrt(tr * tr - 4.0 * det + 0j)
        r1 = (tr + disc) / 2.0
        r2 = (tr - disc) / 2.0
        mu = r1 if abs(r1 - t2[1, 1]) <= abs(r2 - t2[1, 1]) else r2
        q, r = householder_qr(h[:m, :m] - mu * np.eye(m))
        h[:m, :m] = r @ q + mu * np.eye(m)
        if m < n:
            h[:m, m:] = q.conj().T @ h[:m, m:]
        qtot[:, :m] = qtot[:, :m] @ q
    return np.diag(h).copy(), qtot, it


def charpoly_coeffs(m):
    """Characteristic polynomial coefficients (leading 1) by the
    Faddeev-LeVerrier recursion."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    c = np.zeros(n + 1, dtype=complex)
    c[0] = 1.0
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ mk + c[k - 1] * np.eye(n)
        c[k] = -np.trace(m @ mk) / k
    return c


def eigvals_charpoly(h):
    """Real eigenvalues of a Hermitian matrix via its characteristic
    polynomial roots."""
    return np.sort(np.roots(charpoly_coeffs(h)).real)


def eigh_jacobi(a, tol=1e-14, sweeps=100):
    """Cyclic complex Jacobi eigensolver for Hermitian matrices.

    Returns (eigenvalues ascending, eigenvector columns). Each rotation
    zeroes one off-diagonal pair exactly; sweeps repeat until the
    off-diagonal Frobenius mass is negligible.
    """
    a = np.asarray(a, dtype=complex).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    diag_scale = max(np.sqrt(np.sum(np.abs(np.diag(a)) ** 2)), 1.0)
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2))
        if off < tol * diag_scale:
            break
        for p in range(n - 1):
            for q in range(n - 1, p, -1):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                phi = np.angle(apq)
                theta = 0.5 * np.arctan2(2.0 * abs(apq), a[p, p].real - a[q, q].real)
                c = np.cos(theta)
                s = np.sin(theta)
                ep = np.exp(-1j * phi)
                colp = a[:, p] * c + a[:, q] * s * ep
                colq = -a[:, p] * s * np.conj(ep) + a[:, q] * c
                a[:, p], a[:, q] = colp, colq
                rowp = a[p, :] * c + a[q, :] * s * np.conj(ep)
                rowq = -a[p, :] * s * ep + a[q, :] * c
                a[p, :], a[q, :] = rowp, rowq
                vp = v[:, p] * c + v[:, q] * s * ep
                vq = -v[:, p] * s * np.conj(ep) + v[:, q] * c
                v[:, p], v[:, q] = vp, vq
    w = np.diag(a).real
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def floquet_pipeline(h1, h2, t0, period, observable=None):
    """Full quasienergy pipeline built only from the oracles above.

    Returns (quasienergies ascending, mean energies, correlator values or
    None), mirroring the package's closed-form definitions but sharing no
    numerical machinery with them.
    """
    u2 = expm_taylor(-1j * t0 * np.asarray(h2, dtype=complex))
    u1 = expm_taylor(-1j * (period - t0) * np.asarray(h1, dtype=complex))
    u = u1 @ u2
    lam, q, _ = schur_qr(u)
    lam = lam / np.abs(lam)
    eps = -np.angle(lam) / period
    order = np.argsort(eps, kind="stable")
    eps = eps[order]
    q = q[:, order]
    h1_rot = u2.conj().T @ h1 @ u2
    mean = (t0 / period) * np.real(np.einsum("ij,ij->j", q.conj(), h2 @ q)) + (
        (period - t0) / period
    ) * np.real(np.einsum("ij,ij->j", q.conj(), h1_rot @ q))
    f = None
    if observable is not None:
        heis = u.conj().T @ observable @ u @ observable
        f = np.einsum("ij,ij->j", q.conj(), heis @ q)
    return eps, mean, f
