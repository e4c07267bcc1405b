"""Dense univariate polynomials from root lists.

Coefficients are stored in ascending degree order and stay in whatever
scalar domain the roots were given in.
"""

from __future__ import annotations


def poly_from_roots(roots):
    """Coefficients of prod (x - r) in ascending degree order."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * r
        coeffs = nxt
    return coeffs


def poly_derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:] or [0]


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def elementary_symmetric(values):
    """e_0..e_n of the given values, by the one-row recurrence."""
    es = [1]
    for v in values:
        es.append(0)
        for j in range(len(es) - 1, 0, -1):
            es[j] = es[j] + v * es[j - 1]
    return es
