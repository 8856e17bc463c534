"""Permutations of {0..n-1} stored as image tuples.

Products follow the right-action convention used throughout the package:
``mul(p, q)`` applies ``p`` first, then ``q``.  Text I/O is 1-based cycle
notation such as ``(1 2 3)(4 5)``.
"""

import re
from typing import Sequence

from .errors import DomainError, ParseError, ResourceError

Perm = tuple

_CYCLE = re.compile(r"\(([^()]*)\)")


def identity(n) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    """``p`` followed by ``q``."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    while k:
        if k & 1:
            out = mul(out, p)
        p = mul(p, p)
        k >>= 1
    return out


def is_perm(p) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Perm):
    """Cycles as tuples, each starting at its least point, ordered by that point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def fixed_points(p: Perm) -> int:
    return sum(1 for i, j in enumerate(p) if i == j)


def orbits(gens: Sequence[Perm], n=None):
    n = len(gens[0]) if n is None else n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_transitive(gens: Sequence[Perm]) -> bool:
    if not gens or not len(gens[0]):
        return True
    return len(orbits(gens)) == 1


def conjugate(p: Perm, r: Perm) -> Perm:
    """Relabel points by ``r``: the result maps ``r[i]`` to ``r[p[i]]``."""
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[r[i]] = r[j]
    return tuple(out)


def closure(gens: Sequence[Perm], limit=10**6):
    """All elements of the group generated by ``gens`` (breadth-first)."""
    if not gens:
        raise DomainError("no generators")
    e = identity(len(gens[0]))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > limit:
                        raise ResourceError(f"group order exceeds {limit}")
                    nxt.append(y)
        frontier = nxt
    return seen


def parse_cycles(text: str, degree=None) -> Perm:
    """Parse ``(1 2 3)(4 5)``; ``()`` or an empty string is the identity."""
    s = text.strip()
    pos = 0
    cyc_list = []
    for m in _CYCLE.finditer(s):
        gap = s[pos:m.start()]
        if gap.strip():
            raise ParseError("expected '(' in cycle notation", pos + 1, text)
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(x) for x in body]
        except ValueError:
            raise ParseError("cycle entries must be positive integers", m.start() + 2, text) from None
        if any(x < 1 for x in pts):
            raise ParseError("cycle entries must be positive integers", m.start() + 2, text)
        if len(set(pts)) != len(pts):
            raise ParseError("repeated point inside a cycle", m.start() + 1, text)
        cyc_list.append(pts)
        pos = m.end()
    if s[pos:].strip():
        raise ParseError("unbalanced or trailing text in cycle notation", pos + 1, text)
    n = max((max(c) for c in cyc_list if c), default=0)
    if degree is not None:
        if n > degree:
            raise DomainError(f"point {n} exceeds degree {degree}")
        n = degree
    img = list(range(n))
    touched = set()
    for c in cyc_list:
        if touched & set(c):
            raise ParseError("cycles are not disjoint", None, text)
        touched |= set(c)
        for k, x in enumerate(c):
            img[x - 1] = c[(k + 1) % len(c)] - 1
    return tuple(img)


def format_cycles(p: Perm) -> str:
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def pad(p: Perm, n: int) -> Perm:
    return tuple(p) + tuple(range(len(p), n))
