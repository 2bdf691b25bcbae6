"""Deformed Generalized-Logistic family (Type III) and the full-line
deformed Logistic.

survival S(x) = lambda E / (1 + (lambda - 1) E) with
E = kappa_exp(-beta x^alpha); lambda = 1 collapses exactly to Type II,
0 < lambda < 1 is the bosonic regime, lambda > 1 the fermionic one.
S obeys dS/dx = -h S (1 - (lambda-1)/lambda S) with the same h and
cumulative hazard as Type II.
"""

import math

import numpy as np

from . import oracle
from .core import check_kappa, kappa_log
from .errors import DomainError, MomentDivergesError
from .framework import Distribution, ModeResult

__all__ = ["Type3", "KappaLogistic"]


class Type3(Distribution):
    def __init__(self, alpha, beta, lam, kappa):
        self.kappa = check_kappa(kappa)
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.lam = float(lam)
        if self.alpha == 0.0 or not math.isfinite(self.alpha):
            raise DomainError("alpha must be a finite nonzero real")
        if not self.beta > 0.0:
            raise DomainError("beta must be positive")
        if not self.lam > 0.0:
            raise DomainError("lambda must be positive")

    def get_params(self):
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "lam": self.lam,
            "kappa": self.kappa,
        }

    def _E(self, x):
        """kappa_exp(-beta x^alpha)."""
        k = self.kappa
        with np.errstate(divide="ignore", over="ignore"):
            y = self.beta * np.power(np.asarray(x, dtype=float), self.alpha)
        return np.exp(-y) if k == 0.0 else np.exp(-np.arcsinh(k * y) / k)

    def hazard_rate(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            y = self.beta * np.power(x, self.alpha)
            u = self.kappa * y
            out = self.alpha * self.beta * np.power(x, self.alpha - 1.0) / np.sqrt(
                1.0 + u * u
            )
        return float(out) if out.ndim == 0 else out

    def cum_hazard(self, x):
        """Shared with Type II: arcsinh(kappa beta x^alpha)/kappa."""
        if self.alpha < 0.0:
            out = -np.log(np.asarray(self.survival(x), dtype=float))
            return float(out) if out.ndim == 0 else out
        k = self.kappa
        with np.errstate(over="ignore"):
            y = self.beta * np.power(np.asarray(x, dtype=float), self.alpha)
        out = y if k == 0.0 else np.arcsinh(k * y) / k
        return float(out) if np.ndim(out) == 0 else out

    def survival(self, x):
        e = self._E(x)
        s = self.lam * e / (1.0 + (self.lam - 1.0) * e)
        out = 1.0 - s if self.alpha < 0.0 else s
        return float(out) if np.ndim(out) == 0 else out

    def cdf(self, x):
        e = self._E(x)
        c = (1.0 - e) / (1.0 + (self.lam - 1.0) * e)
        out = 1.0 - c if self.alpha < 0.0 else c
        return float(out) if np.ndim(out) == 0 else out

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        e = self._E(x)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            body = (
                self.lam
                * np.abs(self.hazard_rate(x))
                * e
                / np.square(1.0 + (self.lam - 1.0) * e)
            )
        out = np.where(x == 0.0, self._pdf_at_origin(), body)
        return float(out) if out.ndim == 0 else out

    def logpdf(self, x):
        with np.errstate(divide="ignore"):
            out = np.log(self.pdf(x))
        return float(out) if np.ndim(out) == 0 else out

    def _pdf_at_origin(self):
        a = self.alpha
        if a > 1.0:
            return 0.0
        if a == 1.0:
            return self.beta / self.lam
        if a > 0.0:
            return math.inf
        return 0.0 if self.kappa > 0.0 and abs(a) / self.kappa > 1.0 else math.inf

    def rate_residual(self, x):
        """Residual of dS/dx + h S (1 - (lambda-1)/lambda S) at x.

        dS/dx comes from the finite-difference oracle, so a small
        residual certifies the closed forms independently.
        """
        x = float(x)
        if not x > 0.0:
            raise DomainError("rate residual requires x > 0")
        ds = oracle.differentiate(lambda t: self.survival(t), x, order=1).value
        s = self.survival(x)
        return ds + self.hazard_rate(x) * s * (1.0 - (self.lam - 1.0) / self.lam * s)

    def quantile(self, p):
        parr = np.asarray(p, dtype=float)
        if np.any((parr < 0.0) | (parr >= 1.0)) or not np.all(np.isfinite(parr)):
            raise DomainError("quantile requires 0 <= p < 1")
        lam = self.lam
        if self.alpha > 0.0:
            # solve (1 - E)/(1 + (lam-1) E) = p for E
            e = (1.0 - parr) / (1.0 + (lam - 1.0) * parr)
        else:
            # cdf = lam E/(1 + (lam-1) E); solve for E
            e = parr / (lam - parr * (lam - 1.0))
        with np.errstate(divide="ignore", over="ignore"):
            lk = np.where(
                e >= 1.0, 0.0, kappa_log(1.0 / np.maximum(e, 1e-320), self.kappa)
            )
            out = np.power(lk / self.beta, 1.0 / self.alpha)
        out = np.where(parr == 0.0, 0.0, out)
        return float(out) if out.ndim == 0 else out

    def _quantile_scale(self):
        return self.beta ** (-1.0 / self.alpha)

    def moment_constraint(self):
        return "m < alpha/kappa"

    def check_moment_order(self, m):
        r = m / self.alpha
        if not r > -1.0:
            raise MomentDivergesError("m < |alpha|", f"m/alpha = {r:g} <= -1")
        if m > 0 and self.kappa > 0.0 and not r < 1.0 / self.kappa:
            raise MomentDivergesError(
                self.moment_constraint(),
                f"alpha/kappa = {self.alpha / self.kappa:g}, got m = {m:g}",
            )

    def raw_moment(self, m):
        # no closed form in general: quadrature with the Type II tail order
        self.check_moment_order(m)
        if m == 0:
            return 1.0
        return self._moment_by_quadrature(m)

    def _pdf_tail_power(self):
        if self.alpha > 0.0:
            return None if self.kappa == 0.0 else 1.0 + self.alpha / self.kappa
        return 1.0 + abs(self.alpha)

    def _pdf_singular_power(self):
        if self.alpha > 0.0:
            return self.alpha - 1.0
        if self.kappa > 0.0:
            return abs(self.alpha) / self.kappa - 1.0
        return None

    def mode(self):
        a = self.alpha
        if a == 1.0 and self.lam >= 1.0:
            return ModeResult(kind="monotone", pdf_at_origin=self.beta / self.lam)
        if 0.0 < a < 1.0:
            return ModeResult(kind="pole", pdf_at_origin=math.inf)
        return super().mode()


class KappaLogistic(Distribution):
    """Deformed Logistic on the real line: F(x) = 1/(1 + kappa_exp(-beta x)).

    The standard position is loc = 0; loc is a constructor convenience
    shifting the whole distribution.
    """

    support_real_line = True

    def __init__(self, beta, kappa, loc=0.0):
        self.kappa = check_kappa(kappa)
        self.beta = float(beta)
        self.loc = float(loc)
        if not self.beta > 0.0:
            raise DomainError("beta must be positive")

    def get_params(self):
        return {"beta": self.beta, "kappa": self.kappa, "loc": self.loc}

    def _E(self, x):
        k = self.kappa
        z = self.beta * (np.asarray(x, dtype=float) - self.loc)
        return np.exp(-z) if k == 0.0 else np.exp(-np.arcsinh(k * z) / k)

    def cdf(self, x):
        out = 1.0 / (1.0 + self._E(x))
        return float(out) if np.ndim(out) == 0 else out

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        z = self.beta * (x - self.loc)
        e = self._E(x)
        u = self.kappa * z
        out = self.beta * e / (np.sqrt(1.0 + u * u) * np.square(1.0 + e))
        return float(out) if out.ndim == 0 else out

    def quantile(self, p):
        parr = np.asarray(p, dtype=float)
        if np.any((parr <= 0.0) | (parr >= 1.0)):
            raise DomainError("quantile requires 0 < p < 1")
        out = self.loc + kappa_log(parr / (1.0 - parr), self.kappa) / self.beta
        return float(out) if np.ndim(out) == 0 else out

    def raw_moment(self, m):
        raise DomainError("moments of the full-line logistic are not provided")

    def mode(self):
        return ModeResult(kind="interior", x=self.loc)
