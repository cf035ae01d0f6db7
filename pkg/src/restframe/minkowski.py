"""Four-vector algebra, boost tetrads for time-like momenta, and helicity
tetrads / little-group rotations for null momenta.

Conventions: metric signature (+,-,-,-); a four-vector is stored as a length-4
numpy array (t, x, y, z).  The evolution parameter tau carries length units,
so the time component of a position four-vector is x^0 = c t.
"""

from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# The helicity tetrad is a section of a bundle with no global smooth choice:
# it degenerates on the ray k = -|k| e_z, where 1/(|k| + k_z) blows up.
AXIS_TOL = 1e-12


def four_vector(t, x=0.0, y=0.0, z=0.0):
    """Build a four-vector array from components or from a 3-vector spatial part."""
    if np.ndim(x) == 1:
        v = np.empty(4)
        v[0] = t
        v[1:] = x
        return v
    return np.array([t, x, y, z], dtype=float)


def minkowski_dot(a, b):
    """Inner product a.b with signature (+,-,-,-)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 0] - np.sum(a[..., 1:] * b[..., 1:], axis=-1)


def lorentz_residual(L):
    """Max deviation of L^T eta L from eta (zero for a Lorentz matrix)."""
    return float(np.max(np.abs(L.T @ METRIC @ L - METRIC)))


@dataclass(frozen=True)
class WignerTetrad:
    """Columns eps^mu_A of the standard boost for a time-like direction.

    h is the a-dimensional 3-velocity; eps^mu_tau = (sqrt(1+h^2); h) is the
    unit four-velocity and the spatial columns complete it to a Lorentz matrix.
    """

    h: np.ndarray
    columns: np.ndarray  # 4x4, columns[:, A]

    @property
    def eps_tau(self):
        return self.columns[:, 0]

    def eps_r(self, r):
        """Spatial column, r in {0,1,2}."""
        return self.columns[:, 1 + r]


def wigner_boost_columns(h) -> WignerTetrad:
    """Standard boost columns for 3-velocity h.

    eps^mu_tau = (sqrt(1+h^2); h),
    eps^mu_r   = (h^r; delta^i_r + h^i h^r / (1 + sqrt(1+h^2))).
    """
    h = np.asarray(h, dtype=float)
    gamma = np.sqrt(1.0 + h @ h)
    cols = np.empty((4, 4))
    cols[0, 0] = gamma
    cols[1:, 0] = h
    cols[0, 1:] = h
    cols[1:, 1:] = np.eye(3) + np.outer(h, h) / (1.0 + gamma)
    return WignerTetrad(h=h.copy(), columns=cols)


@dataclass(frozen=True)
class HelicityTetrad:
    """Adapted tetrad for a null momentum k: columns eps^mu_A plus the dual
    null vector ktilde with k.ktilde = 1.

    The two transverse columns supply the linear polarization 3-vectors used
    by the radiation-field mode expansion.
    """

    k: np.ndarray  # spatial 3-vector
    omega_s: float
    columns: np.ndarray  # 4x4
    ktilde: np.ndarray  # four-vector

    @property
    def k4(self):
        return four_vector(np.linalg.norm(self.k), self.k)

    @property
    def eps_tau(self):
        return self.columns[:, 0]

    @property
    def eps3(self):
        return self.columns[:, 3]

    def polarization(self, lam):
        """Transverse polarization 3-vector, lam in {0,1}."""
        return self.columns[1:, 1 + lam]


def polarization_vectors(k):
    """Transverse polarization 3-vectors for wave vectors k, shape (..., 3).

    Returns eps with shape (..., 2, 3):
        eps^a_lam = delta^a_lam - k^a k^lam / (|k| (|k| + k_z)),  a in {x, y}
        eps^z_lam = -k^lam / |k|
    Orthonormal, transverse (k.eps_lam = 0), right-handed:
    khat . (eps_1 x eps_2) = +1.
    """
    k = np.asarray(k, dtype=float)
    kn = np.linalg.norm(k, axis=-1)
    if np.any(kn == 0.0):
        raise ValueError("polarization vectors undefined at k = 0")
    denom = kn * (kn + k[..., 2])
    if np.any(np.abs(kn + k[..., 2]) <= AXIS_TOL * kn):
        raise ValueError("wave vector on the excluded ray k = -|k| e_z")
    eps = np.zeros(k.shape[:-1] + (2, 3))
    for lam in range(2):
        eps[..., lam, lam] = 1.0
        eps[..., lam, 0] -= k[..., 0] * k[..., lam] / denom
        eps[..., lam, 1] -= k[..., 1] * k[..., lam] / denom
        eps[..., lam, 2] = -k[..., lam] / kn
    return eps


def polarization_gradients(k):
    """d eps^a_lam / d k^r for wave vectors k of shape (..., 3).

    Returns array of shape (..., 2, 3, 3) indexed [lam, a, r].
    """
    k = np.asarray(k, dtype=float)
    kn = np.linalg.norm(k, axis=-1)
    khat = k / kn[..., None]
    s = kn + k[..., 2]
    D = kn * s
    # dD/dk^r = khat_r (|k| + k_z) + |k| (khat_r + delta_r3)
    dD = khat * s[..., None] + kn[..., None] * khat
    dD[..., 2] += kn
    grad = np.zeros(k.shape[:-1] + (2, 3, 3))
    for lam in range(2):
        for a in range(2):
            # eps^a_lam = delta - k^a k^lam / D
            for r in range(3):
                term = k[..., a] * k[..., lam] * dD[..., r] / D**2
                if r == a:
                    term -= k[..., lam] / D
                if r == lam:
                    term -= k[..., a] / D
                grad[..., lam, a, r] = term
        # eps^z_lam = -k^lam / |k|
        for r in range(3):
            term = k[..., lam] * khat[..., r] / kn**2
            if r == lam:
                term -= 1.0 / kn
            grad[..., lam, 2, r] = term
    return grad


def helicity_tetrad(k, omega_s=1.0) -> HelicityTetrad:
    """Tetrad adapted to the null vector k^mu = (|k|; k).

    Raises ValueError for k = 0 and for k within AXIS_TOL of the excluded
    ray k_z = -|k| (mode grids avoid that ray by construction).
    """
    k = np.asarray(k, dtype=float)
    kn = float(np.linalg.norm(k))
    if kn == 0.0:
        raise ValueError("helicity tetrad undefined at k = 0 (boost singular)")
    if omega_s <= 0.0:
        raise ValueError("omega_s must be positive")
    if abs(kn + k[2]) <= AXIS_TOL * kn:
        raise ValueError("wave vector on the excluded ray k = -|k| e_z")
    khat = k / kn
    plus = 0.5 * (kn / omega_s + omega_s / kn)
    minus = 0.5 * (kn / omega_s - omega_s / kn)
    cols = np.empty((4, 4))
    cols[0, 0] = plus
    cols[1:, 0] = minus * khat
    cols[0, 3] = minus
    cols[1:, 3] = plus * khat
    eps = polarization_vectors(k)
    cols[0, 1:3] = 0.0
    cols[1:, 1] = eps[0]
    cols[1:, 2] = eps[1]
    ktilde = four_vector(kn, -k) / (2.0 * kn**2)
    return HelicityTetrad(k=k.copy(), omega_s=float(omega_s), columns=cols, ktilde=ktilde)


def circular_basis(tetrad: HelicityTetrad):
    """Circular polarization four-vectors eps_(+-) = (eps_1 +- i eps_2)/sqrt(2)."""
    e1 = tetrad.columns[:, 1]
    e2 = tetrad.columns[:, 2]
    return (e1 + 1j * e2) / np.sqrt(2.0), (e1 - 1j * e2) / np.sqrt(2.0)


_SIGMA = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def lorentz_from_sl2c(alpha, beta, gamma, delta):
    """Proper orthochronous Lorentz matrix for the SL(2,C) element
    A = [[alpha, beta], [gamma, delta]] with alpha*delta - beta*gamma = 1."""
    A = np.array([[alpha, beta], [gamma, delta]], dtype=complex)
    if abs(np.linalg.det(A) - 1.0) > 1e-10:
        raise ValueError("SL(2,C) entries must satisfy alpha*delta - beta*gamma = 1")
    L = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            L[mu, nu] = 0.5 * np.real(np.trace(_SIGMA[mu] @ A @ _SIGMA[nu] @ A.conj().T))
    return L


def sl2c_rotation(axis, angle):
    """SL(2,C) entries (alpha, beta, gamma, delta) of a rotation."""
    axis = np.asarray(axis, dtype=float)
    axis = axis / np.linalg.norm(axis)
    n_sigma = sum(axis[i] * _SIGMA[i + 1] for i in range(3))
    A = np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * n_sigma
    return A[0, 0], A[0, 1], A[1, 0], A[1, 1]


def sl2c_boost(direction, rapidity):
    """SL(2,C) entries of a pure boost along `direction`."""
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    n_sigma = sum(direction[i] * _SIGMA[i + 1] for i in range(3))
    A = np.cosh(rapidity / 2) * np.eye(2) + np.sinh(rapidity / 2) * n_sigma
    return A[0, 0], A[0, 1], A[1, 0], A[1, 1]


@dataclass(frozen=True)
class WignerRotation:
    """Little-group element R(k, Lambda) = L^-1(k) Lambda^-1 L(Lambda k).

    u1, u2 parametrize the null translations, theta the rotation (only 2*theta
    enters the vector representation; theta itself is fixed up to pi by the
    SL(2,C) phase e^{i theta} = d*/|d| and returned in (-pi, pi]).
    """

    u1: float
    u2: float
    theta: float
    matrix: np.ndarray  # 4x4 in E2 form
    k_out: np.ndarray  # spatial part of Lambda k
    tetrad_out: HelicityTetrad


def _minkowski_inverse(L):
    return METRIC @ L.T @ METRIC


def wigner_rotation(k, sl2c, omega_s=1.0) -> WignerRotation:
    """Little-group decomposition for the action of Lambda(sl2c) on the null
    orbit through k^mu = (|k|; k).

    sl2c is the tuple (alpha, beta, gamma, delta).  The E2 parameters are read
    off the matrix product L^-1(k) Lambda^-1 L(Lambda k); the closed-form
    SL(2,C) combination d = alpha (|k| + k_z) + beta (k_x + i k_y) refines the
    rotation angle branch via e^{i theta} = d*/|d|.
    """
    alpha, beta, gamma, delta = sl2c
    L = lorentz_from_sl2c(alpha, beta, gamma, delta)
    k = np.asarray(k, dtype=float)
    t_in = helicity_tetrad(k, omega_s)
    k4_out = L @ t_in.k4
    k_out = k4_out[1:]
    kn_out = np.linalg.norm(k_out)
    if abs(kn_out + k_out[2]) <= AXIS_TOL * kn_out:
        raise ValueError("Lambda k hits the excluded ray; little group singular")
    t_out = helicity_tetrad(k_out, omega_s)
    R = _minkowski_inverse(t_in.columns) @ _minkowski_inverse(L) @ t_out.columns
    u1 = R[0, 1]
    u2 = R[0, 2]
    two_theta = np.arctan2(R[1, 2], R[1, 1])
    # branch refinement from the SL(2,C) pair
    kn = np.linalg.norm(k)
    d = alpha * (kn + k[2]) + beta * (k[0] + 1j * k[1])
    if abs(d) > 0.0:
        theta = float(-np.angle(d))
        # keep the vector-representation angle authoritative mod pi
        if np.cos(2 * theta - two_theta) < 0.0:
            theta += np.pi if theta <= 0.0 else -np.pi
    else:
        theta = 0.5 * two_theta
    return WignerRotation(u1=float(u1), u2=float(u2), theta=float(theta),
                          matrix=R, k_out=k_out, tetrad_out=t_out)


def transform_polarizations(k, sl2c, omega_s=1.0):
    """Polarization vectors at Lambda k predicted from those at k:

    eps_1(Lk) = L [ cos2t eps_1(k) - sin2t eps_2(k) + u1 k ]
    eps_2(Lk) = L [ sin2t eps_1(k) + cos2t eps_2(k) + u2 k ]
    """
    rot = wigner_rotation(k, sl2c, omega_s)
    L = lorentz_from_sl2c(*sl2c)
    t_in = helicity_tetrad(np.asarray(k, dtype=float), omega_s)
    e1, e2 = t_in.columns[:, 1], t_in.columns[:, 2]
    k4 = t_in.k4
    c2, s2 = np.cos(2 * rot.theta), np.sin(2 * rot.theta)
    out1 = L @ (c2 * e1 - s2 * e2 + rot.u1 * k4)
    out2 = L @ (s2 * e1 + c2 * e2 + rot.u2 * k4)
    return out1, out2, rot
