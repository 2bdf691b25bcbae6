"""Deformed elementary functions and the master Mellin integral.

Everything in this module is a pure function of its arguments.  The
deformation parameter ``kappa`` lives in [0, 1); kappa = 0 is the exact
classical limit (ordinary exp/log/erf/Gamma) and is always handled by a
dedicated branch so no formula ever divides by kappa = 0.

All Gamma-function ratios are computed as exp of gammaln differences so
that arguments of order 1/(2 kappa) never overflow.
"""

import math

import numpy as np
from scipy import integrate
from scipy.special import erf as _erf
from scipy.special import gammaln

from .errors import DomainError

# Below this kappa, quantities whose deformed/classical difference is
# O(kappa^2) are evaluated by their classical counterpart: the direct
# gammaln route would subtract two huge near-equal numbers.
KAPPA_SWITCH = 1e-4


def check_kappa(kappa):
    """Validate the deformation parameter and return it as a float."""
    k = float(kappa)
    if not math.isfinite(k) or not 0.0 <= k < 1.0:
        raise DomainError(f"kappa must satisfy 0 <= kappa < 1, got {kappa!r}")
    return k


def _maybe_item(a):
    a = np.asarray(a)
    return float(a) if a.ndim == 0 else a


def kappa_exp(x, kappa):
    """Deformed exponential (sqrt(1 + k^2 x^2) + k x)^(1/k).

    Reduces to exp(x) at kappa = 0, behaves as |2 k x|^(+-1/k) for
    x -> +-inf.  Negative arguments are evaluated through the exact
    reciprocal identity to avoid the cancellation in
    sqrt(1 + k^2 x^2) - k|x|.
    """
    k = check_kappa(kappa)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("kappa_exp requires finite x")
    if k == 0.0:
        return _maybe_item(np.exp(x))
    u = k * np.abs(x)
    pos = np.exp(np.arcsinh(u) / k)
    return _maybe_item(np.where(x >= 0, pos, 1.0 / pos))


def log_kappa_exp(x, kappa):
    """log(kappa_exp(x)) = arcsinh(kappa x)/kappa, stable for any magnitude."""
    k = check_kappa(kappa)
    x = np.asarray(x, dtype=float)
    if k == 0.0:
        return _maybe_item(x + 0.0)
    return _maybe_item(np.arcsinh(k * x) / k)


def kappa_log(t, kappa):
    """Deformed logarithm (t^k - t^-k)/(2k), the inverse of kappa_exp.

    Evaluated as sinh(k log t)/k, which is free of cancellation for
    small k; kappa = 0 returns log(t).
    """
    k = check_kappa(kappa)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0) or not np.all(np.isfinite(t)):
        raise DomainError("kappa_log requires t > 0")
    if k == 0.0:
        return _maybe_item(np.log(t))
    return _maybe_item(np.sinh(k * np.log(t)) / k)


def kappa_exp_tail_exponent(kappa, sign):
    """Exponent and prefactor of the Pareto asymptote of kappa_exp.

    kappa_exp(x) ~ prefactor * |x|**exponent for x -> sign * inf, with
    exponent = sign/kappa and prefactor = (2 kappa)**(sign/kappa).
    Returns (exponent, prefactor).
    """
    k = check_kappa(kappa)
    if k == 0.0:
        raise DomainError("no power-law tail in classical limit (kappa = 0)")
    s = int(np.sign(sign)) if not isinstance(sign, str) else {"+": 1, "-": -1}[sign]
    if s not in (-1, 1):
        raise DomainError("sign must be +1 or -1")
    exponent = s / k
    return exponent, (2.0 * k) ** exponent


def log_mellin_kappa(r, kappa):
    """log of the Mellin transform of kappa_exp(-x), order r.

    M_k(r) = (2k)^-r / (1 + k r) * Gamma(1/2k - r/2)/Gamma(1/2k + r/2)
             * Gamma(r),   valid for 0 < r < 1/kappa.
    """
    k = check_kappa(kappa)
    r = float(r)
    if not r > 0.0:
        raise DomainError(f"Mellin order must be positive, got r = {r}")
    if k > 0.0 and r >= 1.0 / k:
        raise DomainError(
            f"Mellin transform diverges: requires r < 1/kappa = {1.0 / k:g}, got r = {r:g}"
        )
    if k < KAPPA_SWITCH:
        # classical limit; relative error is O(kappa^2)
        return float(gammaln(r))
    z = 0.5 / k
    return float(
        -r * math.log(2.0 * k)
        - math.log1p(k * r)
        + gammaln(z - 0.5 * r)
        - gammaln(z + 0.5 * r)
        + gammaln(r)
    )


def mellin_kappa(r, kappa):
    """Mellin transform of kappa_exp(-x): integral_0^inf x^(r-1) kappa_exp(-x) dx."""
    return math.exp(log_mellin_kappa(r, kappa))


def kappa_erf_prefactor(kappa):
    """Normalization constant of the deformed error function.

    (1 + kappa/2) sqrt(2 kappa) Gamma(1/2k + 1/4)/Gamma(1/2k - 1/4);
    tends to 1 as kappa -> 0.
    """
    k = check_kappa(kappa)
    if k == 0.0:
        return 1.0
    z = 0.5 / k
    return (1.0 + 0.5 * k) * math.sqrt(2.0 * k) * math.exp(
        gammaln(z + 0.25) - gammaln(z - 0.25)
    )


def kappa_erf(x, kappa):
    """Deformed error function: prefactor * (2/sqrt(pi)) * int_0^x kappa_exp(-t^2) dt.

    Odd in x, saturates at +-1, reduces to erf(x) at kappa = 0.
    Accepts +-inf.
    """
    k = check_kappa(kappa)
    xf = float(x)
    if math.isnan(xf):
        raise DomainError("kappa_erf requires a non-NaN argument")
    if k == 0.0:
        return float(_erf(xf))
    if xf == 0.0:
        return 0.0
    c = kappa_erf_prefactor(k) * 2.0 / math.sqrt(math.pi)

    def integrand(t):
        return kappa_exp(-t * t, k)

    hi = abs(xf)
    if math.isinf(hi):
        # tail decays like t^(-2/kappa); split and map the tail
        head, _ = integrate.quad(integrand, 0.0, 1.0, limit=200)
        tail, _ = integrate.quad(
            lambda u: integrand(1.0 / u) / (u * u), 0.0, 1.0, limit=200
        )
        val = head + tail
    elif hi <= 1.0:
        val, _ = integrate.quad(integrand, 0.0, hi, limit=200)
    else:
        head, _ = integrate.quad(integrand, 0.0, 1.0, limit=200)
        body, _ = integrate.quad(
            lambda u: integrand(1.0 / u) / (u * u), 1.0 / hi, 1.0, limit=200
        )
        val = head + body
    return math.copysign(c * val, xf)
