"""Dense univariate polynomials over Z as plain lists, lowest degree first.

Multiplication goes through Kronecker substitution (pack into one big int,
multiply, unpack) and gcd through the heuristic integer-evaluation GCD with a
primitive-remainder-sequence fallback.  The zero polynomial is ``[]``; every
other value has a nonzero last entry.
"""

from __future__ import annotations

import math
from fractions import Fraction

Poly = list[int]

_SCHOOLBOOK_CUTOFF = 12
_HEU_ATTEMPTS = 6


def trim(f: Poly) -> Poly:
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f: Poly) -> Poly:
    return [-c for c in f]


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, c: int) -> Poly:
    if c == 0:
        return []
    return [c * x for x in f]


def shift(f: Poly, k: int) -> Poly:
    """Multiply by q**k, k >= 0."""
    return [0] * k + f if f else []


def content(f: Poly) -> int:
    return math.gcd(*f) if f else 0


def primitive(f: Poly) -> tuple[int, Poly]:
    """Split f = c * p with p primitive and positive leading coefficient."""
    if not f:
        return 0, []
    c = content(f)
    if f[-1] < 0:
        c = -c
    return c, [x // c for x in f]


def evaluate(f: Poly, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _schoolbook(f: Poly, g: Poly) -> Poly:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _offset(nbytes: int, length: int) -> int:
    # sum over slots of 2**(8*nbytes - 1): shifts balanced digits to [0, 2**bits)
    return int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * length, "little")


def _pack(f: Poly, nbytes: int) -> int:
    """f(2**(8*nbytes)); every |coefficient| must be below 2**(8*nbytes - 1)."""
    half = 1 << (8 * nbytes - 1)
    raw = b"".join((c + half).to_bytes(nbytes, "little") for c in f)
    return int.from_bytes(raw, "little") - _offset(nbytes, len(f))


def _unpack(value: int, nbytes: int, length: int | None = None) -> Poly:
    """Balanced base-2**(8*nbytes) digits of value, lowest first, trimmed."""
    bits = 8 * nbytes
    if length is None:
        length = abs(value).bit_length() // bits + 2
    shifted = value + _offset(nbytes, length)
    if shifted < 0 or shifted.bit_length() > bits * length:
        raise ArithmeticError("Kronecker unpack overflow")
    raw = shifted.to_bytes(nbytes * length, "little")
    half = 1 << (bits - 1)
    return trim(
        [int.from_bytes(raw[i : i + nbytes], "little") - half for i in range(0, len(raw), nbytes)]
    )


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    if min(len(f), len(g)) <= _SCHOOLBOOK_CUTOFF:
        return trim(_schoolbook(f, g))
    bf = max(abs(c) for c in f).bit_length()
    bg = max(abs(c) for c in g).bit_length()
    nbytes = (bf + bg + min(len(f), len(g)).bit_length() + 9) // 8
    prod = _pack(f, nbytes) * _pack(g, nbytes)
    return _unpack(prod, nbytes, len(f) + len(g) - 1)


def divmod_exact(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division over Z; raises if a quotient coefficient is not integral."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    lead = g[-1]
    dg = len(g) - 1
    if len(rem) < len(g):
        return [], trim(rem)
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division over Z")
        quot[i - dg] = qc
        for j, b in enumerate(g):
            rem[i - dg + j] -= qc * b
    return trim(quot), trim(rem[:dg])


def _prs_gcd(f: Poly, g: Poly) -> Poly:
    """Primitive Euclidean remainder sequence; f, g primitive, nonzero."""
    while g:
        # pseudo-remainder of f by g
        r = list(f)
        lead = g[-1]
        dg = len(g) - 1
        while r and len(r) - 1 >= dg:
            c = r[-1]
            r = [lead * x for x in r]
            k = len(r) - 1 - dg
            for j, b in enumerate(g):
                r[k + j] -= c * b
            trim(r)
        f, g = g, primitive(r)[1]
    return primitive(f)[1]


def _heuristic_gcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly] | None:
    """gcd of primitive f, g with cofactors, or None if every attempt fails.

    Evaluation points are xi = 2**(8*nbytes) with xi > 2*min(|f|, |g|) + 2;
    above that bound a candidate dividing both inputs is the true gcd.  The
    byte-aligned xi makes evaluation and interpolation linear-time.
    """
    nf = max(abs(c) for c in f)
    ng = max(abs(c) for c in g)
    bound = 2 * min(nf, ng) + 29
    nbytes = (max(bound, 2 * max(nf, ng) + 2).bit_length() + 8) // 8
    for _ in range(_HEU_ATTEMPTS):
        fx = _pack(f, nbytes)
        gx = _pack(g, nbytes)
        hx = math.gcd(fx, gx)
        _, h = primitive(_unpack(hx, nbytes))
        hval = _pack(h, nbytes)
        if fx % hval == 0 and gx % hval == 0:
            cf = _unpack(fx // hval, nbytes)
            cg = _unpack(gx // hval, nbytes)
            if mul(h, cf) == f and mul(h, cg) == g:
                return h, cf, cg
        nbytes += nbytes // 2 + 1
    return None


def gcd_cofactors(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (h, f/h, g/h) with h = gcd(f, g) over Z, leading coefficient > 0.

    Integer content takes part: gcd([2, 4], [6]) is [2].
    """
    if not f and not g:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    if not f or not g:
        c, p = primitive(f or g)
        h, unit = scale(p, abs(c)), [1 if c > 0 else -1]
        return (h, [], unit) if not f else (h, unit, [])
    cf, pf = primitive(f)
    cg, pg = primitive(g)
    c = math.gcd(cf, cg)
    if len(pf) == 1 or len(pg) == 1:
        h, qf, qg = [1], pf, pg
    else:
        found = _heuristic_gcd(pf, pg)
        if found is None:
            h = _prs_gcd(pf, pg)
            qf, r1 = divmod_exact(pf, h)
            qg, r2 = divmod_exact(pg, h)
            assert not r1 and not r2
        else:
            h, qf, qg = found
    return scale(h, c), scale(qf, cf // c), scale(qg, cg // c)


def evaluate_fraction(f: Poly, x: Fraction) -> Fraction:
    return Fraction(evaluate(f, Fraction(x)))
