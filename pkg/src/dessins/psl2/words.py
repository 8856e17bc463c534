"""Words in the generators S, T, A = T^2 and B = S T^2 S^-1.

A word is a tuple of ``(letter, exponent)`` pairs.  Text form accepts
juxtaposition or ``*``, parentheses, and integer exponents written ``^k`` or
``^-k``, e.g. ``(TS)T^4(TS)^-1``.
"""

import re

from ..errors import DomainError, ParseError
from .matrix import GEN_A, GEN_B, S, T, Mat2, in_gamma2

LETTERS = {"S": S, "T": T, "A": GEN_A, "B": GEN_B}

_TOK = re.compile(r"\s*(?:([STAB])|(\^)|(\()|(\))|(\*)|(-?\d+)|(\S))")


def reduce_word(word):
    """Merge adjacent equal letters and drop zero exponents (free reduction)."""
    out = []
    for letter, e in word:
        if e == 0:
            continue
        if out and out[-1][0] == letter:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((letter, e2))
        else:
            out.append((letter, e))
    return tuple(out)


def invert_word(word):
    return tuple((letter, -e) for letter, e in reversed(word))


def _as_word(word):
    if isinstance(word, str):
        return parse_word(word)
    out = []
    for item in word:
        if isinstance(item, str):
            out.extend(parse_word(item))
        else:
            letter, e = item
            out.append((letter, int(e)))
    return tuple(out)


def word_matrix(word) -> Mat2:
    """Product matrix in SL2(Z), left to right, without sign normalization."""
    m = Mat2.identity()
    for letter, e in _as_word(word):
        if letter not in LETTERS:
            raise DomainError(f"unknown generator {letter!r}")
        m = m * LETTERS[letter] ** e
    return m


def word_eval(word) -> Mat2:
    """Evaluate a word (text, or a sequence of letters/pairs) to its canonical PSL2 representative."""
    return word_matrix(word).psl()


def parse_word(text: str):
    if text.strip() == "I":
        return ()
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOK.match(text, pos)
        if m.end() == pos:
            break
        col = m.start(m.lastindex) + 1
        if m.group(7):
            raise ParseError(f"unexpected character {m.group(7)!r}", col, text)
        toks.append((m.lastindex, m.group(m.lastindex), col))
        pos = m.end()
    toks.append((0, "", len(text) + 1))
    i = 0

    def peek():
        return toks[i]

    def seq(depth):
        nonlocal i
        out = []
        while True:
            kind, val, col = peek()
            if kind == 5:  # '*'
                i += 1
                continue
            if kind == 1:
                i += 1
                item = ((val, 1),)
            elif kind == 3:
                i += 1
                item = seq(depth + 1)
                k2, _, c2 = peek()
                if k2 != 4:
                    raise ParseError("expected ')'", c2, text)
                i += 1
            elif kind == 4:
                if depth == 0:
                    raise ParseError("unbalanced ')'", col, text)
                return tuple(out)
            elif kind == 0:
                if depth:
                    raise ParseError("expected ')'", col, text)
                return tuple(out)
            else:
                raise ParseError(f"unexpected {val!r}", col, text)
            if peek()[0] == 2:
                i += 1
                k3, v3, c3 = peek()
                if k3 != 6:
                    raise ParseError("expected an integer exponent", c3, text)
                i += 1
                n = int(v3)
                item = _word_power(item, n)
            out.extend(item)

    if toks[0][0] == 0:
        return ()
    return reduce_word(seq(0))


def _word_power(word, n):
    if len(word) == 1:
        return ((word[0][0], word[0][1] * n),)
    base = word if n >= 0 else invert_word(word)
    return tuple(base) * abs(n)


def format_word(word) -> str:
    word = reduce_word(word)
    if not word:
        return "I"
    return "".join(letter if e == 1 else f"{letter}^{e}" for letter, e in word)


def gamma2_word_decompose(g: Mat2):
    """Reduced word in A = T^2, B = S T^2 S^-1 representing ``g`` in PSL2(Z).

    Ping-pong reduction: left-multiply by the power of A (resp. B) that makes
    |a| (resp. |c|) smallest until c = 0, leaving a power of A.
    """
    if not in_gamma2(g):
        raise DomainError(f"{g} is not in Gamma(2)")
    a, b, c, d = g.a, g.b, g.c, g.d
    steps = []  # each step left-multiplies by (letter, k)
    while c:
        if abs(a) > abs(c):
            k = _nearest(-a, 2 * c)
            a, b = a + 2 * k * c, b + 2 * k * d
            steps.append(("A", k))
        else:
            k = _nearest(c, 2 * a)
            c, d = c - 2 * k * a, d - 2 * k * b
            steps.append(("B", k))
    if a < 0:
        a, b, d = -a, -b, -d
    # now [[1, b], [0, 1]] with b even
    tail = ("A", b // 2)
    word = [(letter, -k) for letter, k in steps] + [tail]
    return reduce_word(word)


def _nearest(num, den):
    """Integer k minimizing |num - k*den| (den nonzero; ties cannot occur here)."""
    q, r = divmod(num, den)
    if 2 * abs(r) > abs(den):
        q += 1
    return q
