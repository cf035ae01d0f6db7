"""Closed-form particle-sourced transverse fields in the radiation gauge.

A single positive-energy scalar particle with unit charge, position eta and
momentum kappa sources a transverse vector potential that depends only on
(sigma - eta, kappa) -- no accelerations and no retardation enter.  This
module evaluates the potential, the electric and magnetic fields, their
Fourier transforms, the leading large-c expansion coefficients, and the
residual of the transverse wave equation (an exact algebraic identity).

All functions are evaluated per unit charge; callers attach charge factors.
Scalar functions accept complex arguments so gradients can be taken by
complex-step differentiation.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ParticleKinematics:
    """Source data for one particle: position eta, momentum kappa, mass m,
    speed of light c."""

    eta: np.ndarray
    kappa: np.ndarray
    m: float
    c: float

    def __post_init__(self):
        if np.real(self.m) <= 0 or np.real(self.c) <= 0:
            raise ValueError("mass and c must be positive")
        object.__setattr__(self, "eta", np.asarray(self.eta))
        object.__setattr__(self, "kappa", np.asarray(self.kappa))

    @property
    def energy_momentum(self):
        """sqrt(m^2 c^2 + kappa^2), the energy in momentum units."""
        return np.sqrt(self.m**2 * self.c**2 + self.kappa @ self.kappa)


def _dot(a, b):
    return a @ b


def _norm(v):
    # analytic in the components (complex-step safe), unlike np.linalg.norm
    return np.sqrt(v @ v)


def _separation(sigma, p):
    r = np.asarray(sigma) - p.eta
    u = _norm(r)
    if abs(u) == 0.0:
        raise ValueError("field evaluated at the particle position")
    return r, u


def lw_potential(sigma, p: ParticleKinematics):
    """Transverse vector potential (unit charge) at field point sigma.

    A(r, kappa) = [kappa + kn nhat E/D] / (4 pi |r| (E + D)),
    r = sigma - eta, nhat = r/|r|, kn = kappa.nhat,
    E = sqrt(m^2 c^2 + kappa^2), D = sqrt(m^2 c^2 + kn^2).
    """
    r, u = _separation(sigma, p)
    nhat = r / u
    kn = _dot(p.kappa, nhat)
    E = np.sqrt(p.m**2 * p.c**2 + _dot(p.kappa, p.kappa))
    D = np.sqrt(p.m**2 * p.c**2 + kn * kn)
    return (p.kappa + kn * nhat * (E / D)) / (4.0 * np.pi * u * (E + D))


def lw_electric(sigma, p: ParticleKinematics):
    """Transverse electric field (= field momentum, unit charge).

    The middle term's 0/0 ratio at kappa^2 = kn^2 cancels exactly:
    (kappa^2 + kn^2)/(kappa^2 - kn^2) * (E/D - 1) = (kappa^2 + kn^2)/(D(E+D)),
    so the closed form below is regular everywhere off the particle.
    """
    r, u = _separation(sigma, p)
    nhat = r / u
    kn = _dot(p.kappa, nhat)
    k2 = _dot(p.kappa, p.kappa)
    m2c2 = p.m**2 * p.c**2
    E = np.sqrt(m2c2 + k2)
    D = np.sqrt(m2c2 + kn * kn)
    term1 = p.kappa * (kn * E / D**3)
    term2 = nhat * ((k2 + kn * kn) / (D * (E + D)))
    term3 = nhat * (kn * kn * E / D**3)
    return -(term1 + term2 + term3) / (4.0 * np.pi * u**2)


def lw_magnetic(sigma, p: ParticleKinematics):
    """Magnetic field curl(A) in closed form (unit charge)."""
    r, u = _separation(sigma, p)
    nhat = r / u
    kn = _dot(p.kappa, nhat)
    m2c2 = p.m**2 * p.c**2
    D = np.sqrt(m2c2 + kn * kn)
    return m2c2 * np.cross(p.kappa, nhat) / (4.0 * np.pi * u**2 * D**3)


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Leading 1/c expansion fields: A = a1/c + a3/c^3 + ...,
    E = b2/c^2 + ..., B = g1/c + g3/c^3 + ... (kappa held fixed)."""

    alpha1: np.ndarray
    alpha3: np.ndarray
    beta2: np.ndarray
    gamma1: np.ndarray
    gamma3: np.ndarray


def lw_expansion_coeffs(sigma, p: ParticleKinematics) -> ExpansionCoefficients:
    r, u = _separation(sigma, p)
    nhat = r / u
    kn = _dot(p.kappa, nhat)
    k2 = _dot(p.kappa, p.kappa)
    m = p.m
    kpar = p.kappa + kn * nhat
    alpha1 = kpar / (8.0 * np.pi * m * u)
    alpha3 = (-0.25 * kpar * (k2 + kn * kn) + 0.5 * kn * nhat * (k2 - kn * kn)) / (
        8.0 * np.pi * m**3 * u)
    beta2 = -(p.kappa * kn + nhat * (0.5 * (k2 + kn * kn) + kn * kn)) / (
        4.0 * np.pi * m**2 * u**2)
    gamma1 = np.cross(p.kappa, nhat) / (4.0 * np.pi * m * u**2)
    gamma3 = -3.0 * kn * kn * np.cross(p.kappa, nhat) / (8.0 * np.pi * m**3 * u**2)
    return ExpansionCoefficients(alpha1, alpha3, beta2, gamma1, gamma3)


# -- Fourier transforms ------------------------------------------------------
# Convention: F~(k) = integral d^3sigma e^{-i k.sigma} F(sigma).


def lw_fourier(k, p: ParticleKinematics):
    """Closed-form Fourier transforms (A~, pi~, B~) at wave vector k.

    A~(k)  = e^{-i k.eta} k x (kappa x k) E / (k^4 (m^2c^2 + kappa^2 - (kappa.khat)^2))
    pi~(k) = i (kappa.k / E) A~(k)
    B~(k)  = i k x A~(k)
    """
    k = np.asarray(k, dtype=float)
    kk = k @ k
    if kk == 0.0:
        raise ValueError("Fourier form undefined at k = 0")
    kap = p.kappa
    m2c2 = p.m**2 * p.c**2
    E = np.sqrt(m2c2 + kap @ kap)
    kdk = kap @ k
    denom = m2c2 + kap @ kap - kdk * kdk / kk
    phase = np.exp(-1j * (k @ p.eta))
    vec = np.cross(k, np.cross(kap, k))  # = kk * P_perp(khat) kappa
    At = phase * vec * E / (kk * kk * denom)
    pit = 1j * (kdk / E) * At
    Bt = 1j * np.cross(k, At)
    return At, pit, Bt


def lw_fourier_batch(K, p: ParticleKinematics):
    """Vectorized lw_fourier over K of shape (M, 3); returns (M,3) arrays."""
    K = np.asarray(K, dtype=float)
    kk = np.sum(K * K, axis=1)
    kap = p.kappa
    m2c2 = p.m**2 * p.c**2
    E = np.sqrt(m2c2 + kap @ kap)
    kdk = K @ kap
    denom = m2c2 + kap @ kap - kdk * kdk / kk
    phase = np.exp(-1j * (K @ p.eta))
    vec = np.cross(K, np.cross(np.broadcast_to(kap, K.shape), K))
    At = phase[:, None] * vec * (E / (kk * kk * denom))[:, None]
    pit = (1j * kdk / E)[:, None] * At
    Bt = 1j * np.cross(K, At)
    return At, pit, Bt


def lw_wave_residual(k, p: ParticleKinematics):
    """Residual of the transverse wave equation in Fourier space:

    (k^2 - (k.kappa)^2/(m^2c^2 + kappa^2)) A~(k) - j~(k),
    j~(k) = P_perp(khat) kappa / sqrt(m^2c^2 + kappa^2) e^{-i k.eta}.

    Identically zero; returned for verification.
    """
    k = np.asarray(k, dtype=float)
    kk = k @ k
    At, _, _ = lw_fourier(k, p)
    kap = p.kappa
    E2 = p.m**2 * p.c**2 + kap @ kap
    E = np.sqrt(E2)
    op = kk - (k @ kap) ** 2 / E2
    khat = k / np.sqrt(kk)
    j = (kap - (kap @ khat) * khat) / E * np.exp(-1j * (k @ p.eta))
    return op * At - j


def lw_potential_sum(sigma, particles, charges):
    """Charge-weighted sum of single-particle potentials (commuting weights)."""
    total = np.zeros(3)
    for p, q in zip(particles, charges):
        total = total + q * lw_potential(sigma, p)
    return total
