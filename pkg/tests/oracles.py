"""Independent reference computations used only by the tests."""

from fractions import Fraction

import numpy as np


def sylvester_resultant(p, q):
    """Determinant of the Sylvester matrix of two univariate polynomials.

    ``p`` and ``q`` are coefficient lists, low degree first.
    """
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for k in range(n):
        row = [Fraction(0)] * size
        for i, c in enumerate(reversed(p)):
            row[k + i] = Fraction(c)
        rows.append(row)
    for k in range(m):
        row = [Fraction(0)] * size
        for i, c in enumerate(reversed(q)):
            row[k + i] = Fraction(c)
        rows.append(row)
    return _det(rows)


def _det(a):
    a = [r[:] for r in a]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def wp_direct(z, omega1, omega2, radius):
    """Truncated lattice sum 1/z^2 + sum over 0 < |w| <= radius of 1/(z-w)^2 - 1/w^2."""
    rng = np.arange(-radius, radius + 1)
    m, n = np.meshgrid(rng, rng)
    w = (m * omega1 + n * omega2).ravel()
    w = w[(np.abs(w) <= radius * min(abs(omega1), abs(omega2))) & (w != 0)]
    return 1 / z**2 + np.sum(1 / (z - w) ** 2 - 1 / w**2)


def wp_oracle(z, omega1, omega2):
    """Circular sums at two radii combined by Richardson extrapolation.

    The truncation error of a circular sum decays like 1/R^2, so
    (4 S(2R) - S(R)) / 3 removes the leading term.
    """
    s1 = wp_direct(z, omega1, omega2, 100)
    s2 = wp_direct(z, omega1, omega2, 200)
    return (4 * s2 - s1) / 3
