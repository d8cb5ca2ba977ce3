"""Independent numerical oracles shared by the tests.

These integrate the model densities (and their q-th powers) by adaptive
quadrature, without touching the closed-form q-integral formulas under
test. The density route itself is pinned by the normalization checks
(integral of exp(log_pdf) must be 1), so together the two checks validate
both the normalization constants and the q-integral algebra.
"""

import math

import numpy as np
from scipy import integrate

from tsgof.distributions import (
    GGParams,
    QGaussianParams,
    gg_log_pdf,
    qgauss_log_pdf,
)


def _integrate_1d(f, radius):
    if radius is None:
        value, _ = integrate.quad(f, -np.inf, np.inf, limit=400)
    else:
        value, _ = integrate.quad(f, -radius, radius, limit=400)
    return value


def _integrate_2d(f, radius):
    if radius is None:
        value, _ = integrate.dblquad(f, -np.inf, np.inf, -np.inf, np.inf)
        return value
    # circle-slice bounds keep the integrand smooth up to the support edge
    lo = lambda x: -math.sqrt(max(radius * radius - x * x, 0.0))
    hi = lambda x: math.sqrt(max(radius * radius - x * x, 0.0))
    value, _ = integrate.dblquad(f, -radius, radius, lo, hi)
    return value


def _support_radius(params) -> float | None:
    """Radius beyond which the density is zero (compact q-Gaussian), else None."""
    if isinstance(params, QGaussianParams) and params.q < 1:
        # standardized radius sqrt(2/(1-q)) scaled by the largest sigma scale
        scale = math.sqrt(float(np.max(np.diag(params.sigma.entries))))
        return math.sqrt(2.0 / (1.0 - params.q)) * scale * (1.0 + 1e-12)
    return None


def _log_pdf(params):
    if isinstance(params, GGParams):
        return lambda x: gg_log_pdf(x, params)
    return lambda x: qgauss_log_pdf(x, params)


def pdf_power_integral_quadrature(params, power: float) -> float:
    """integral of f(x)^power over R^m by adaptive quadrature (m = 1 or 2).

    Centered parameters are assumed (the tests use zero location).
    """
    log_pdf = _log_pdf(params)
    radius = _support_radius(params)

    if params.m == 1:

        def f(x):
            lp = log_pdf(np.array([x]))
            return 0.0 if lp == -math.inf else math.exp(power * lp)

        return _integrate_1d(f, radius)

    if params.m == 2:

        def f(y, x):
            lp = log_pdf(np.array([x, y]))
            return 0.0 if lp == -math.inf else math.exp(power * lp)

        return _integrate_2d(f, radius)

    raise ValueError("quadrature oracle covers m = 1 and m = 2 only")


def radial_cdf_from_log_pdf(params: QGaussianParams, radii: np.ndarray) -> np.ndarray:
    """CDF of the standardized radius ||Sigma^(-1/2)(X - mu)||, by cumulative
    quadrature of r^(m-1) * f_profile(r) against the density profile.

    Independent of the sampler's own Beta/Student-t representations: only
    the density (via qgauss_log_pdf on a standardized member) and the
    sphere-area factor enter.
    """
    m, q = params.m, params.q
    standard = QGaussianParams(m=m, q=q)
    log_sphere = math.log(2.0) + 0.5 * m * math.log(math.pi) - math.lgamma(0.5 * m)

    def radial_density(r):
        if r <= 0:
            return 0.0
        point = np.zeros(m)
        point[0] = r
        lp = qgauss_log_pdf(point, standard)
        if lp == -math.inf:
            return 0.0
        return math.exp(log_sphere + (m - 1) * math.log(r) + lp)

    radii = np.asarray(radii, dtype=float)
    order = np.argsort(radii)
    cdf_sorted = np.empty_like(radii)
    total = 0.0
    prev = 0.0
    for pos, idx in enumerate(order):
        r = radii[idx]
        piece, _ = integrate.quad(radial_density, prev, r, limit=200)
        total += piece
        cdf_sorted[pos] = total
        prev = r
    out = np.empty_like(radii)
    out[order] = np.clip(cdf_sorted, 0.0, 1.0)
    return out
