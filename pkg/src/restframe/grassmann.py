"""Commutative nilpotent charge algebra: generators Q_i with Q_i^2 = 0 and
Q_i Q_j != 0 for i != j.

Elements are polynomials in the Q_i stored sparsely as {bitmask: coefficient};
bit i of the mask set means generator Q_i is present in the monomial.
Coefficients may be real or complex.  The nilpotent part of any element has
vanishing (N+1)-th power, so analytic functions (sqrt, reciprocal) reduce to
finite Taylor expansions.
"""

from __future__ import annotations

import math

import numpy as np

MAX_GENERATORS = 16


def _check_n(n):
    if not (0 < n <= MAX_GENERATORS):
        raise ValueError(f"generator count must be in 1..{MAX_GENERATORS}")


class GrassmannScalar:
    """Sparse multilinear polynomial in nilpotent generators Q_1..Q_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        _check_n(n)
        self.n = n
        self.coeffs = dict(coeffs) if coeffs else {}

    @classmethod
    def const(cls, value, n):
        g = cls(n)
        if value != 0:
            g.coeffs[0] = value
        return g

    @classmethod
    def generator(cls, i, n, scale=1.0):
        """scale * Q_i (i is 0-based)."""
        _check_n(n)
        if not 0 <= i < n:
            raise ValueError("generator index out of range")
        return cls(n, {1 << i: scale})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GrassmannScalar):
            if other.n != self.n:
                raise ValueError("mismatched generator counts")
            return other
        return GrassmannScalar.const(other, self.n)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0.0) + c
        return GrassmannScalar(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannScalar(self.n, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannScalar):
            return GrassmannScalar(self.n, {m: c * other for m, c in self.coeffs.items()})
        if other.n != self.n:
            raise ValueError("mismatched generator counts")
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                if m1 & m2:
                    continue  # repeated generator: Q_i^2 = 0
                m = m1 | m2
                out[m] = out.get(m, 0.0) + c1 * c2
        return GrassmannScalar(self.n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GrassmannScalar):
            return self * other.reciprocal()
        return self * (1.0 / other)

    # -- structure ----------------------------------------------------------

    def body(self):
        """Coefficient of the identity monomial."""
        return self.coeffs.get(0, 0.0)

    def soul(self):
        """Nilpotent part (everything except the constant term)."""
        return GrassmannScalar(self.n, {m: c for m, c in self.coeffs.items() if m})

    def degree_part(self, d):
        return GrassmannScalar(
            self.n, {m: c for m, c in self.coeffs.items() if bin(m).count("1") == d})

    def truncate(self, max_degree):
        return GrassmannScalar(
            self.n,
            {m: c for m, c in self.coeffs.items() if bin(m).count("1") <= max_degree})

    def conjugate(self):
        return GrassmannScalar(self.n, {m: np.conjugate(c) for m, c in self.coeffs.items()})

    def max_abs(self):
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def __eq__(self, other):
        if not isinstance(other, GrassmannScalar):
            other = GrassmannScalar.const(other, self.n)
        return (self - other).max_abs() == 0.0

    def allclose(self, other, tol=0.0):
        return (self - self._coerce(other)).max_abs() <= tol

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            mono = "".join(f"Q{i}" for i in range(self.n) if m >> i & 1) or "1"
            parts.append(f"{c!r}*{mono}")
        return " + ".join(parts)

    # -- analytic functions of the element -----------------------------------

    def apply_analytic(self, derivs):
        """f(self) for analytic f, derivs = [f(x0), f'(x0), f''(x0), ...]
        evaluated at x0 = body; the Taylor series in the soul terminates."""
        s = self.soul()
        out = GrassmannScalar.const(derivs[0], self.n)
        power = GrassmannScalar.const(1.0, self.n)
        for r in range(1, len(derivs)):
            power = power * s
            if not power.coeffs:
                break
            out = out + power * (derivs[r] / math.factorial(r))
        return out

    def sqrt(self):
        x0 = self.body()
        if not np.isreal(x0) and np.imag(x0) != 0:
            raise ValueError("sqrt defined for real positive body only")
        x0 = float(np.real(x0))
        if x0 <= 0.0:
            raise ValueError("sqrt requires positive body")
        derivs = [math.sqrt(x0)]
        # d^r/dx^r sqrt(x) = sqrt(x) * prod_{j<r} (1/2 - j) / x^r
        coef = math.sqrt(x0)
        for r in range(1, self.n + 1):
            coef *= (0.5 - (r - 1)) / x0
            derivs.append(coef)
        return self.apply_analytic(derivs)

    def reciprocal(self):
        x0 = self.body()
        if x0 == 0:
            raise ValueError("reciprocal requires invertible body")
        derivs = [1.0 / x0]
        for r in range(1, self.n + 1):
            derivs.append(derivs[-1] * (-r) / x0)
        return self.apply_analytic(derivs)


def gr_mul(a: GrassmannScalar, b: GrassmannScalar) -> GrassmannScalar:
    """Product with the Q_i^2 = 0 reduction."""
    return a * b


def gr_project(a, charges):
    """Substitute Q_i -> charges[i] monomial-wise and sum."""
    if isinstance(a, GrassmannVec3):
        return a.project(charges)
    if not isinstance(a, GrassmannScalar):
        return a
    charges = np.asarray(charges)
    if charges.shape[0] != a.n:
        raise ValueError("need one charge value per generator")
    total = 0.0
    for m, c in a.coeffs.items():
        for i in range(a.n):
            if m >> i & 1:
                c = c * charges[i]
        total = total + c
    return total


def gr_exp_flow(value, bracket, order=2):
    """Truncated Lie-series flow exp({., S}) value = value + {value,S} + ...

    bracket(X) must return {X, S}.  With S of overall degree >= 1 in the Q_i
    the series terminates; `order` caps the number of bracket applications
    (two suffices for the generating function used here).  Terms that vanish
    identically stop the series early.
    """
    out = value
    term = value
    fact = 1.0
    for r in range(1, order + 1):
        term = bracket(term)
        fact *= r
        if isinstance(term, GrassmannScalar) and not term.coeffs:
            break
        out = out + term * (1.0 / fact)
    return out


class GrassmannVec3:
    """3-vector with GrassmannScalar-valued components, stored as
    {bitmask: ndarray(3)} for efficiency."""

    __slots__ = ("n", "comps")

    def __init__(self, n, comps=None):
        _check_n(n)
        self.n = n
        self.comps = {m: np.asarray(v, dtype=v.dtype if hasattr(v, "dtype") else float)
                      for m, v in (comps or {}).items()}

    @classmethod
    def from_vector(cls, v, n):
        return cls(n, {0: np.array(v, dtype=float)})

    def component(self, r) -> GrassmannScalar:
        return GrassmannScalar(self.n, {m: v[r] for m, v in self.comps.items()})

    def mask(self, m):
        return self.comps.get(m, np.zeros(3))

    def body(self):
        return self.mask(0)

    def __add__(self, other):
        out = {m: v.copy() for m, v in self.comps.items()}
        for m, v in other.comps.items():
            out[m] = out.get(m, 0.0) + v
        return GrassmannVec3(self.n, out)

    def __sub__(self, other):
        out = {m: v.copy() for m, v in self.comps.items()}
        for m, v in other.comps.items():
            out[m] = out.get(m, 0.0) - v
        return GrassmannVec3(self.n, out)

    def __neg__(self):
        return GrassmannVec3(self.n, {m: -v for m, v in self.comps.items()})

    def scale(self, s):
        """Multiply by a scalar or GrassmannScalar."""
        if isinstance(s, GrassmannScalar):
            out = {}
            for m1, v in self.comps.items():
                for m2, c in s.coeffs.items():
                    if m1 & m2:
                        continue
                    m = m1 | m2
                    out[m] = out.get(m, 0.0) + v * c
            return GrassmannVec3(self.n, out)
        return GrassmannVec3(self.n, {m: v * s for m, v in self.comps.items()})

    def dot(self, other) -> GrassmannScalar:
        out = {}
        for m1, v1 in self.comps.items():
            for m2, v2 in other.comps.items():
                if m1 & m2:
                    continue
                m = m1 | m2
                out[m] = out.get(m, 0.0) + v1 @ v2
        return GrassmannScalar(self.n, out)

    def cross(self, other) -> "GrassmannVec3":
        out = {}
        for m1, v1 in self.comps.items():
            for m2, v2 in other.comps.items():
                if m1 & m2:
                    continue
                m = m1 | m2
                out[m] = out.get(m, 0.0) + np.cross(v1, v2)
        return GrassmannVec3(self.n, out)

    def norm(self) -> GrassmannScalar:
        return self.dot(self).sqrt()

    def project(self, charges):
        charges = np.asarray(charges)
        total = np.zeros(3, dtype=complex)
        for m, v in self.comps.items():
            c = 1.0
            for i in range(self.n):
                if m >> i & 1:
                    c *= charges[i]
            total = total + c * np.asarray(v)
        return np.real_if_close(total)

    def max_abs(self):
        return max((float(np.max(np.abs(v))) for v in self.comps.values()), default=0.0)

    def truncate(self, max_degree):
        return GrassmannVec3(
            self.n,
            {m: v for m, v in self.comps.items() if bin(m).count("1") <= max_degree})

    def __repr__(self):
        return f"GrassmannVec3(n={self.n}, {self.comps!r})"
