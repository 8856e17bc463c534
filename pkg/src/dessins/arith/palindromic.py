"""Reduction of z <-> 1/z symmetric Laurent polynomials to polynomials in y = z + 1/z."""

from ..errors import DomainError, PreconditionError
from .poly import Poly, _fdiv
from .ratfunc import RatFunc


def is_palindromic(lowest, coeffs):
    n = len(coeffs)
    if n == 0:
        return True
    highest = lowest + n - 1
    if lowest != -highest:
        return False
    return all(coeffs[k] == coeffs[n - 1 - k] for k in range(n))


def _trim(lowest, coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        lowest += 1
    return lowest, coeffs


def palindromic_reduce(lowest, coeffs, var="y"):
    """Given ``sum(coeffs[k] * z**(lowest + k))`` invariant under ``z -> 1/z``,
    return ``q`` with ``q(z + 1/z)`` equal to it."""
    lowest, coeffs = _trim(lowest, coeffs)
    if not coeffs:
        return Poly((), var)
    if not is_palindromic(lowest, coeffs):
        raise PreconditionError("Laurent polynomial is not invariant under z -> 1/z")
    n = -lowest
    # work on the upper half: c[k] is the coefficient of z^k + z^-k (k > 0)
    c = {k: coeffs[k - lowest] for k in range(0, n + 1)}
    out = Poly((), var)
    for k in range(n, 0, -1):
        ck = c[k]
        if not ck:
            continue
        out = out + Poly.monomial(ck, k, var)
        # subtract ck*(z + 1/z)^k = ck * sum binom(k, m) z^(k-2m); its z^j + z^-j part
        binom = 1
        for m in range(0, k // 2 + 1):
            j = k - 2 * m
            if m:
                binom = binom * (k - m + 1) // m
            if j == 0:
                c[0] = c[0] - ck * binom
            elif m:
                c[j] = c[j] - ck * binom
    out = out + c[0]
    return out


def expand_in_y(q, zvar="z"):
    """Substitute ``y = z + 1/z`` and return ``(lowest, coeffs)`` of the Laurent result."""
    n = q.degree
    if n < 0:
        return 0, []
    base = Poly((1, 0, 1), zvar)  # z^2 + 1 = z * (z + 1/z)
    acc = Poly((), zvar)
    for k, c in enumerate(q.coeffs):
        if c:
            acc = acc + (base ** k).shift(n - k) * c
    # acc = z^n * q(z + 1/z)
    return _trim(-n, list(acc.coeffs) + [0] * (2 * n + 1 - len(acc.coeffs)))


def laurent_of(f):
    """Write a rational function whose denominator is ``c * z**k`` as ``(lowest, coeffs)``."""
    if not isinstance(f, RatFunc):
        raise DomainError("expected a rational function")
    den = f.den
    k = den.degree
    if any(den[i] for i in range(k)):
        raise PreconditionError("denominator is not a monomial in z")
    c = den.lc()
    return -k, [_fdiv(x, c) for x in f.num.coeffs]
