"""Weighted L2 norms ``(int |u|^2 r dr)^(1/2)`` by composite Gauss-Legendre quadrature."""

import numpy as np

from .errors import DomainError, NumericalFailure

DEFAULT_PANELS = 64
DEFAULT_POINTS = 8


def _rule(points):
    return np.polynomial.legendre.leggauss(points)


def quadrature_nodes(r_lo, r_hi, panels=DEFAULT_PANELS, points=DEFAULT_POINTS, breakpoints=None):
    """Nodes and weights of the composite rule on ``[r_lo, r_hi]``.

    ``breakpoints`` overrides the uniform panel edges (must start at ``r_lo``
    and end at ``r_hi``); this keeps piecewise integrands smooth per panel.
    """
    if not r_lo < r_hi:
        raise DomainError(f"empty interval [{r_lo}, {r_hi}]")
    if breakpoints is None:
        edges = np.linspace(r_lo, r_hi, panels + 1)
    else:
        edges = np.asarray(breakpoints, dtype=float)
        if edges[0] != r_lo or edges[-1] != r_hi or np.any(np.diff(edges) <= 0):
            raise DomainError("breakpoints must increase strictly from r_lo to r_hi")
    x, w = _rule(points)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def integrate(g, r_lo, r_hi, **rule):
    """``int_{r_lo}^{r_hi} g(r) dr`` for a vectorised callable ``g``."""
    nodes, weights = quadrature_nodes(r_lo, r_hi, **rule)
    vals = np.asarray(g(nodes))
    if not np.all(np.isfinite(vals)):
        raise NumericalFailure("integrand returned a non-finite sample")
    # Panel sums first, then panels in order: fixed summation order.
    per_panel = (vals * weights).reshape(-1, rule.get("points", DEFAULT_POINTS)).sum(axis=1)
    return per_panel.sum()


def sampled_l21_norm(values, nodes, weights):
    """Weighted norm from samples already taken at the rule's nodes."""
    values = np.asarray(values)
    if not np.all(np.isfinite(values)):
        raise NumericalFailure("non-finite sample in norm")
    return float(np.sqrt(np.sum(weights * nodes * np.abs(values) ** 2)))


def l21_norm(f, r_lo, r_hi, **rule):
    """Weighted norm ``(int |f(r)|^2 r dr)^(1/2)`` of a vectorised radial function."""
    sq = integrate(lambda r: np.abs(np.asarray(f(r))) ** 2 * r, r_lo, r_hi, **rule)
    return float(np.sqrt(sq.real))


def relative_l21_error(reference, model, r_lo, r_hi, **rule):
    """``||reference - model|| / ||reference||`` in the weighted norm."""
    ref_norm = l21_norm(reference, r_lo, r_hi, **rule)
    if ref_norm == 0:
        raise DomainError("reference function has zero norm")
    diff = l21_norm(lambda r: np.asarray(reference(r)) - np.asarray(model(r)), r_lo, r_hi, **rule)
    return diff / ref_norm
