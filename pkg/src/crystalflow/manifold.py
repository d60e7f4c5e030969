"""Geometry kernels for the three crystal modalities.

Fractional centroids live on the 3-torus [0,1)^3, orientations on SO(3)
(3x3 matrices), and lattices in the cone of positive-determinant 3x3
matrices with a row-vector convention (rows are the cell vectors).

Convention used everywhere in this package: rotations act on column
vectors, x -> R x.  Row-stacked coordinate arrays therefore transform as
X -> X @ R.T, and a global rotation Q sends (L, R) -> (L @ Q.T, Q @ R).

All functions are pure and accept leading batch dimensions where noted.
"""

import numpy as np

from .errors import (
    InvalidLatticeError,
    InvalidParameterError,
    InvalidRotationError,
    InvalidValueError,
)

# Wrapped values within this distance of 1.0 are float artifacts of inputs
# just below an integer; snap them to the 0.0 representative.
_BOUNDARY_SNAP = 1e-12

_SMALL_ANGLE = 1e-4     # switch to series for sin(w)/w, (1-cos w)/w^2
_ANTIPODAL_SIN = 1e-6   # below this |sin w| the skew part axis is unusable


def wrap(f):
    """Wrap fractional coordinates into [0, 1) componentwise.

    Accepts any shape.  Values landing within 1e-12 of the upper boundary
    (e.g. from inputs like -1e-16) snap to 0.0 so the half-open invariant
    holds exactly.
    """
    f = np.asarray(f, dtype=float)
    if not np.all(np.isfinite(f)):
        raise InvalidValueError("fractional coordinates must be finite")
    w = f - np.floor(f)
    w = np.where(w >= 1.0 - _BOUNDARY_SNAP, 0.0, w)
    return w


def torus_displacement(f0, f1):
    """Minimum-norm per-component displacement d with wrap(f0 + d) == f1.

    Each component lies in (-0.5, 0.5]; a tie at exactly 0.5 resolves to
    +0.5, matching the half-open wrapping convention.
    """
    f0 = np.asarray(f0, dtype=float)
    f1 = np.asarray(f1, dtype=float)
    if not (np.all(np.isfinite(f0)) and np.all(np.isfinite(f1))):
        raise InvalidValueError("fractional coordinates must be finite")
    d = f1 - f0
    d = d - np.floor(d)
    d = np.where(d > 0.5, d - 1.0, d)
    return d


def skew(v):
    """Skew-symmetric matrix K with K @ x = v x x.  Batched over leading dims."""
    v = np.asarray(v, dtype=float)
    x, y, z = v[..., 0], v[..., 1], v[..., 2]
    zero = np.zeros_like(x)
    return np.stack(
        [
            np.stack([zero, -z, y], axis=-1),
            np.stack([z, zero, -x], axis=-1),
            np.stack([-y, x, zero], axis=-1),
        ],
        axis=-2,
    )


def so3_exp(v):
    """Rodrigues exponential map: axis-angle (..., 3) -> rotation (..., 3, 3).

    Uses the series for sin(w)/w and (1-cos w)/w^2 below w = 1e-4.
    """
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise InvalidValueError("axis-angle vector must be finite")
    w2 = np.sum(v * v, axis=-1)
    w = np.sqrt(w2)
    small = w < _SMALL_ANGLE
    w_safe = np.where(small, 1.0, w)
    w2_safe = np.where(small, 1.0, w2)
    a = np.where(small, 1.0 - w2 / 6.0 + w2 * w2 / 120.0, np.sin(w_safe) / w_safe)
    b = np.where(small, 0.5 - w2 / 24.0 + w2 * w2 / 720.0, (1.0 - np.cos(w_safe)) / w2_safe)
    k = skew(v)
    eye = np.broadcast_to(np.eye(3), k.shape)
    return eye + a[..., None, None] * k + b[..., None, None] * (k @ k)


def validate_rotation(r, tol=1e-8):
    """Raise InvalidRotationError unless r is orthonormal with det +1."""
    r = np.asarray(r, dtype=float)
    if r.shape[-2:] != (3, 3) or not np.all(np.isfinite(r)):
        raise InvalidRotationError("rotation must be a finite 3x3 matrix")
    eye = np.eye(3)
    err = np.linalg.norm(np.swapaxes(r, -1, -2) @ r - eye, axis=(-2, -1))
    if np.any(err > tol):
        raise InvalidRotationError(f"matrix not orthonormal (residual {float(np.max(err)):.2e})")
    if np.any(np.linalg.det(r) < 0.0):
        raise InvalidRotationError("matrix has determinant -1 (improper rotation)")
    return r


def _vee(r):
    """Axis part of the antisymmetric component: vee((R - R^T)/2) = sin(w) * e."""
    return 0.5 * np.stack(
        [
            r[..., 2, 1] - r[..., 1, 2],
            r[..., 0, 2] - r[..., 2, 0],
            r[..., 1, 0] - r[..., 0, 1],
        ],
        axis=-1,
    )


def so3_log(r, tol=1e-8):
    """Logarithm map: rotation (..., 3, 3) -> canonical axis-angle with |v| in [0, pi].

    Three regimes: series near w = 0, generic formula with the axis taken
    from the (numerically exact) skew part, and near w = pi the axis is
    recovered from the symmetric part (R + R^T)/2, where the outer product
    e e^T appears with no cancellation, with the dominant-diagonal
    component taken positive when the skew part carries no sign.
    """
    r = validate_rotation(r, tol=tol)
    s_vec = _vee(r)                       # sin(w) * axis, exact to roundoff
    s = np.linalg.norm(s_vec, axis=-1)
    tr = r[..., 0, 0] + r[..., 1, 1] + r[..., 2, 2]
    c = np.clip((tr - 1.0) / 2.0, -1.0, 1.0)
    # angle: arccos is ill-conditioned near c = -1, so past pi/2 use the
    # well-conditioned arcsin of |sin w| instead
    theta = np.where(
        c < -0.5,
        np.pi - np.arcsin(np.clip(s, -1.0, 1.0)),
        np.arccos(c),
    )

    if s.ndim == 0:
        return _log_single(r, s_vec, s, c, theta)

    flat_r = r.reshape(-1, 3, 3)
    flat_sv = s_vec.reshape(-1, 3)
    flat_s = s.reshape(-1)
    flat_c = c.reshape(-1)
    flat_t = theta.reshape(-1)
    res = np.empty((flat_r.shape[0], 3))
    generic = flat_s >= _ANTIPODAL_SIN
    if np.any(generic):
        th = flat_t[generic]
        sg = flat_s[generic]
        small = th < _SMALL_ANGLE
        factor = np.where(small, 1.0 + th * th / 6.0, th / np.where(sg == 0.0, 1.0, sg))
        res[generic] = factor[:, None] * flat_sv[generic]
    anti = ~generic
    for i in np.nonzero(anti)[0]:
        res[i] = _log_single(flat_r[i], flat_sv[i], flat_s[i], flat_c[i], flat_t[i])
    return res.reshape(s.shape + (3,))


def _log_single(r, s_vec, s, c, theta):
    if s >= _ANTIPODAL_SIN:
        if theta < _SMALL_ANGLE:
            return (1.0 + theta * theta / 6.0) * s_vec
        return (theta / s) * s_vec
    if theta < _SMALL_ANGLE:
        return s_vec  # w ~ 0: log ~ vee
    # near-antipodal: e e^T = ((R + R^T)/2 - c I) / (1 - c), conditioning ~ 1
    sym = 0.5 * (r + r.T)
    outer = (sym - c * np.eye(3)) / (1.0 - c)
    k = int(np.argmax(np.diag(outer)))
    e = outer[:, k] / np.sqrt(max(outer[k, k], 1e-300))
    e = e / np.linalg.norm(e)
    if s > 1e-14 and np.dot(e, s_vec) < 0.0:
        e = -e  # keep continuity with the generic branch when a sign exists
    return theta * e


def so3_geodesic(r0, r1, t):
    """Geodesic point r0 . exp(t log(r0^T r1)); exact endpoints at t in {0, 1}."""
    r0 = np.asarray(r0, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    if np.isscalar(t) or np.ndim(t) == 0:
        if t == 0.0:
            return validate_rotation(r0).copy()
        if t == 1.0:
            return validate_rotation(r1).copy()
    rel = so3_log(np.swapaxes(r0, -1, -2) @ r1)
    return r0 @ so3_exp(np.asarray(t, dtype=float)[..., None] * rel)


def geodesic_distance_so3(r0, r1):
    """Geodesic (angular) distance |log(r0^T r1)| in [0, pi]; symmetric."""
    r0 = np.asarray(r0, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    return np.linalg.norm(so3_log(np.swapaxes(r0, -1, -2) @ r1), axis=-1)


def project_rotation(r):
    """Nearest rotation in Frobenius norm (polar-style SVD projection)."""
    r = np.asarray(r, dtype=float)
    u, _, vt = np.linalg.svd(r)
    det = np.linalg.det(u @ vt)
    fix = np.ones(r.shape[:-2] + (3,))
    fix[..., 2] = np.sign(det)
    return (u * fix[..., None, :]) @ vt


def axis_angle_to_spherical(v):
    """Axis-angle -> (w, kappa, rho): magnitude, inclination from +z in [0, pi],
    azimuth in [0, 2 pi).  The zero rotation maps to (0, 0, 0) by convention.

    Batched: input (..., 3) gives three arrays of shape (...).
    """
    v = np.asarray(v, dtype=float)
    if not np.all(np.isfinite(v)):
        raise InvalidValueError("axis-angle vector must be finite")
    w = np.linalg.norm(v, axis=-1)
    nonzero = w > 0.0
    w_safe = np.where(nonzero, w, 1.0)
    e = v / w_safe[..., None]
    kappa = np.where(nonzero, np.arccos(np.clip(e[..., 2], -1.0, 1.0)), 0.0)
    rho = np.where(nonzero, np.arctan2(e[..., 1], e[..., 0]), 0.0)
    rho = np.where(rho < 0.0, rho + 2.0 * np.pi, rho)
    rho = np.where(rho >= 2.0 * np.pi, 0.0, rho)
    return w, kappa, rho


def validate_lattice(l):
    """Raise InvalidLatticeError unless l is a finite 3x3 with det > 0."""
    l = np.asarray(l, dtype=float)
    if l.shape != (3, 3) or not np.all(np.isfinite(l)):
        raise InvalidLatticeError("lattice must be a finite 3x3 matrix")
    det = np.linalg.det(l)
    if det <= 1e-12:
        raise InvalidLatticeError(f"lattice determinant must be positive (got {det:.3e})")
    return l


def standardize_lattice(l):
    """Reduce a lattice to sorted-length lower-triangular form.

    Returns (l_std, q) with l_std lower-triangular, positive diagonal, and
    row lengths a <= b <= c, such that l_std = P @ l @ q.T for a signed row
    permutation P and a rotation q.  If sorting the rows by length flips
    handedness, the third row is negated before the orthogonal-triangular
    factorization of the transpose.
    """
    l = validate_lattice(l)
    lengths = np.linalg.norm(l, axis=1)
    order = np.argsort(lengths, kind="stable")
    perm_sign = _permutation_parity(order)
    pl = l[order].copy()
    if perm_sign < 0:
        pl[2] = -pl[2]
    qmat, rtri = np.linalg.qr(pl.T)
    signs = np.sign(np.diag(rtri))
    signs[signs == 0.0] = 1.0
    qmat = qmat * signs[None, :]
    rtri = rtri * signs[:, None]
    l_std = rtri.T
    q = qmat.T
    if np.linalg.det(q) < 0.0:  # cannot happen for det(pl) > 0; guard anyway
        raise InvalidLatticeError("standardization produced an improper rotation")
    return l_std, q


def _permutation_parity(order):
    order = list(order)
    parity = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            cycle += 1
        if cycle % 2 == 0:
            parity = -parity
    return parity


def lattice_params(l):
    """Cell parameters (a, b, c, alpha, beta, gamma), lengths in Angstrom,
    angles in degrees (alpha between rows 2 and 3, etc.)."""
    l = validate_lattice(l)
    a, b, c = np.linalg.norm(l, axis=1)

    def ang(u, v):
        cosv = np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v))
        return np.degrees(np.arccos(np.clip(cosv, -1.0, 1.0)))

    return a, b, c, ang(l[1], l[2]), ang(l[0], l[2]), ang(l[0], l[1])


def params_to_lattice(a, b, c, alpha, beta, gamma):
    """Lower-triangular lattice from cell parameters (angles in degrees).

    Raises InvalidParameterError when the angle triple does not define a
    positive-definite metric (no real cell exists).
    """
    for name, val in (("a", a), ("b", b), ("c", c)):
        if not np.isfinite(val) or val <= 0.0:
            raise InvalidParameterError(f"length {name} must be positive, got {val}")
    for name, val in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not np.isfinite(val) or not 0.0 < val < 180.0:
            raise InvalidParameterError(f"angle {name} must be in (0, 180) deg, got {val}")
    ca, cb, cg = (np.cos(np.radians(x)) for x in (alpha, beta, gamma))
    sg = np.sin(np.radians(gamma))
    cx = cb
    cy = (ca - cb * cg) / sg
    cz2 = 1.0 - cx * cx - cy * cy
    if cz2 <= 1e-12:
        raise InvalidParameterError(
            f"angles ({alpha}, {beta}, {gamma}) do not define a positive-volume cell"
        )
    return np.array(
        [
            [a, 0.0, 0.0],
            [b * cg, b * sg, 0.0],
            [c * cx, c * cy, c * np.sqrt(cz2)],
        ]
    )
