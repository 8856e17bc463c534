"""Resultants by the subresultant polynomial remainder sequence.

The sign convention is the textbook one,
``Res(A, B) = lc(A)**deg(B) * prod(B(r) for r in roots(A))``, so that
``Res_z(z - X, z - Y) = X - Y``.
"""

from ..errors import DomainError
from .poly import exquo


def resultant(p, q):
    """Resultant of ``p`` and ``q`` with respect to their (outermost) variable.

    Coefficients may come from any integral domain supported by
    :func:`exquo`, including nested polynomials; only exact divisions occur.
    """
    if p.var != q.var:
        raise DomainError(f"elimination variable mismatch {p.var!r} vs {q.var!r}")
    if not p or not q:
        raise DomainError("resultant with the zero polynomial")
    if p.degree == 0 and q.degree == 0:
        raise DomainError("resultant of two constants")
    if p.degree == 0:
        return p.lc() ** q.degree
    if q.degree == 0:
        return q.lc() ** p.degree

    a, b = p, q
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -s
    g, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = a.prem(b)
        a = b
        if not r:
            return 0
        b = exquo(r, g * h ** delta) if delta or g != 1 or h != 1 else r
        g = a.lc()
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exquo(g ** delta, h ** (delta - 1))
        if b.degree == 0:
            break
    # final step: h = lc(b)^deg(a) / h^(deg(a)-1)
    da = a.degree
    if da == 1:
        res = b.lc()
    else:
        res = exquo(b.lc() ** da, h ** (da - 1))
    return res if s == 1 else -res


__all__ = ["resultant"]
