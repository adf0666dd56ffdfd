"""Exact arithmetic for the scalar field Q(q) and the output ring Q(q)[x^{±1}].

Three layers, all immutable and exact (no floating point anywhere):

* ``LaurentQ``  -- Laurent polynomials in q with arbitrary-precision integer
  coefficients, stored as a sparse exponent->coefficient map.
* ``RatQ``      -- the field Q(q), as a canonically reduced quotient of two
  ``LaurentQ`` values.  Canonical form makes equality structural, which is
  what the memo tables and golden tests rely on.
* ``XPoly``     -- Laurent polynomials in x with ``RatQ`` coefficients, the
  ring every link invariant lives in.  The substitution x = q^n recovers the
  rank-n specialization.
"""

from __future__ import annotations

from math import gcd as _igcd
from typing import Iterator


# ---------------------------------------------------------------------------
# integer-polynomial helpers (dense lists, index = degree)
# ---------------------------------------------------------------------------

def _list_content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def _list_primitive(cs: list[int]) -> list[int]:
    g = _list_content(cs)
    if g > 1:
        cs = [c // g for c in cs]
    if cs and cs[-1] < 0:
        cs = [-c for c in cs]
    return cs


def _list_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _list_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, over Z
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        da, la = len(a) - 1, a[-1]
        a = [c * lb for c in a]
        shift = da - db
        for i, bc in enumerate(b):
            a[shift + i] -= la * bc
        a = _list_trim(a)
    return a


def _list_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Q[q] of two integer polynomials, positive leading
    coefficient.  Primitive polynomial remainder sequence."""
    a = _list_primitive(_list_trim(list(a)))
    b = _list_primitive(_list_trim(list(b)))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _list_pseudo_rem(a, b)
        a, b = b, _list_primitive(_list_trim(r))
    return a


def _list_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b over Z[q]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        if c % lb:
            raise ValueError("inexact polynomial division")
        qk = c // lb
        q[k] = qk
        if qk:
            for i, bc in enumerate(b):
                a[k + i] -= qk * bc
    if any(a[: len(b) - 1]):
        raise ValueError("inexact polynomial division")
    return q


class LaurentQ:
    """A Laurent polynomial in q over Z; no zero coefficients are stored."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.c: dict[int, int] = {}
        if coeffs:
            self.c = {e: v for e, v in coeffs.items() if v}
        self._hash: int | None = None

    # -- constructors

    @staticmethod
    def zero() -> "LaurentQ":
        return _L_ZERO

    @staticmethod
    def one() -> "LaurentQ":
        return _L_ONE

    @staticmethod
    def mono(coeff: int, exp: int = 0) -> "LaurentQ":
        return LaurentQ({exp: coeff}) if coeff else _L_ZERO

    @staticmethod
    def from_int(n: int) -> "LaurentQ":
        return LaurentQ.mono(n, 0)

    # -- structure

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == {0: 1}

    @property
    def min_exp(self) -> int:
        return min(self.c)

    @property
    def max_exp(self) -> int:
        return max(self.c)

    def content(self) -> int:
        return _list_content(list(self.c.values()))

    def leading_coeff(self) -> int:
        return self.c[self.max_exp] if self.c else 0

    # -- arithmetic

    def __add__(self, other: "LaurentQ") -> "LaurentQ":
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            elif e in out:
                del out[e]
        r = LaurentQ.__new__(LaurentQ)
        r.c = out
        r._hash = None
        return r

    def __sub__(self, other: "LaurentQ") -> "LaurentQ":
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) - v
            if w:
                out[e] = w
            elif e in out:
                del out[e]
        r = LaurentQ.__new__(LaurentQ)
        r.c = out
        r._hash = None
        return r

    def __neg__(self) -> "LaurentQ":
        r = LaurentQ.__new__(LaurentQ)
        r.c = {e: -v for e, v in self.c.items()}
        r._hash = None
        return r

    def __mul__(self, other: "LaurentQ") -> "LaurentQ":
        if not self.c or not other.c:
            return _L_ZERO
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                e = ea + eb
                w = out.get(e, 0) + va * vb
                if w:
                    out[e] = w
                elif e in out:
                    del out[e]
        r = LaurentQ.__new__(LaurentQ)
        r.c = out
        r._hash = None
        return r

    def scale(self, n: int) -> "LaurentQ":
        if n == 0:
            return _L_ZERO
        r = LaurentQ.__new__(LaurentQ)
        r.c = {e: v * n for e, v in self.c.items()}
        r._hash = None
        return r

    def shift(self, k: int) -> "LaurentQ":
        """Multiply by q^k."""
        if k == 0:
            return self
        r = LaurentQ.__new__(LaurentQ)
        r.c = {e + k: v for e, v in self.c.items()}
        r._hash = None
        return r

    def divexact_int(self, n: int) -> "LaurentQ":
        r = LaurentQ.__new__(LaurentQ)
        r.c = {e: v // n for e, v in self.c.items()}
        r._hash = None
        return r

    def __pow__(self, n: int) -> "LaurentQ":
        if n < 0:
            raise ValueError("negative power of a LaurentQ")
        out = _L_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions

    def q_bar(self) -> "LaurentQ":
        """The ring automorphism q -> -q^{-1}."""
        r = LaurentQ.__new__(LaurentQ)
        r.c = {-e: (v if e % 2 == 0 else -v) for e, v in self.c.items()}
        r._hash = None
        return r

    def q_inv(self) -> "LaurentQ":
        """The ring automorphism q -> q^{-1}."""
        r = LaurentQ.__new__(LaurentQ)
        r.c = {-e: v for e, v in self.c.items()}
        r._hash = None
        return r

    # -- dense conversion for gcd work

    def _dense(self) -> tuple[int, list[int]]:
        v = self.min_exp
        out = [0] * (self.max_exp - v + 1)
        for e, c in self.c.items():
            out[e - v] = c
        return v, out

    @staticmethod
    def _from_dense(val: int, cs: list[int]) -> "LaurentQ":
        r = LaurentQ.__new__(LaurentQ)
        r.c = {val + i: c for i, c in enumerate(cs) if c}
        r._hash = None
        return r

    # -- comparison / hash / rendering

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentQ) and self.c == other.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.c.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentQ({self.text()})"

    def text(self) -> str:
        """Canonical rendering: q-exponents descending, e.g. ``q^2 - 2 + q^-2``."""
        if not self.c:
            return "0"
        parts: list[str] = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                qp = "q" if e == 1 else f"q^{e}"
                body = qp if mag == 1 else f"{mag}*{qp}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if v > 0 else f" - {body}")
        return "".join(parts)

    def json_obj(self) -> list[list]:
        """Exponent-descending ``[exp, "coeff"]`` pairs; coefficients as strings."""
        return [[e, str(self.c[e])] for e in sorted(self.c, reverse=True)]


_L_ZERO = LaurentQ()
_L_ONE = LaurentQ({0: 1})


def laurent_gcd(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    """Primitive positive-lead gcd over Q[q] (lowest exponent 0)."""
    if a.is_zero():
        if b.is_zero():
            return _L_ZERO
        _, db = b._dense()
        return LaurentQ._from_dense(0, _list_primitive(db))
    if b.is_zero():
        _, da = a._dense()
        return LaurentQ._from_dense(0, _list_primitive(da))
    _, da = a._dense()
    _, db = b._dense()
    return LaurentQ._from_dense(0, _list_gcd(da, db))


def laurent_divexact(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    if a.is_zero():
        return _L_ZERO
    va, da = a._dense()
    vb, db = b._dense()
    return LaurentQ._from_dense(va - vb, _list_divexact(da, db))


class RatQ:
    """An element of Q(q) in canonical form.

    Invariants: the denominator is a nonzero integer polynomial in q with
    lowest exponent 0 and positive leading coefficient, coprime to the
    numerator over Q[q], and gcd(content(num), content(den)) = 1.  Equality
    is therefore structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentQ, den: LaurentQ = _L_ONE):
        if den.is_zero():
            raise ZeroDivisionError("RatQ denominator is zero")
        if num.is_zero():
            self.num, self.den = _L_ZERO, _L_ONE
        elif den.is_one():
            self.num, self.den = num, _L_ONE
        else:
            va, na = num._dense()
            vb, nb = den._dense()
            g = _list_gcd(na, nb)
            if len(g) > 1:
                na = _list_divexact(na, g)
                nb = _list_divexact(nb, g)
            c = _igcd(_list_content(na), _list_content(nb))
            if c > 1:
                na = [x // c for x in na]
                nb = [x // c for x in nb]
            if nb[-1] < 0:
                na = [-x for x in na]
                nb = [-x for x in nb]
            self.num = LaurentQ._from_dense(va - vb, na)
            self.den = LaurentQ._from_dense(0, nb)
        self._hash = None

    # -- constructors

    @staticmethod
    def zero() -> "RatQ":
        return _R_ZERO

    @staticmethod
    def one() -> "RatQ":
        return _R_ONE

    @staticmethod
    def from_int(n: int) -> "RatQ":
        return RatQ(LaurentQ.from_int(n))

    @staticmethod
    def q_power(e: int) -> "RatQ":
        return RatQ(LaurentQ.mono(1, e))

    @staticmethod
    def from_laurent(p: LaurentQ) -> "RatQ":
        return RatQ(p)

    # -- predicates

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        """True iff the value is an integer Laurent polynomial in q."""
        return self.den.is_one()

    # -- arithmetic

    def __add__(self, other: "RatQ") -> "RatQ":
        if self.den.is_one() and other.den.is_one():
            r = RatQ.__new__(RatQ)
            r.num = self.num + other.num
            r.den = _L_ONE
            r._hash = None
            return r
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __sub__(self, other: "RatQ") -> "RatQ":
        if self.den.is_one() and other.den.is_one():
            r = RatQ.__new__(RatQ)
            r.num = self.num - other.num
            r.den = _L_ONE
            r._hash = None
            return r
        if self.den == other.den:
            return RatQ(self.num - other.num, self.den)
        return RatQ(self.num * other.den - other.num * self.den,
                    self.den * other.den)

    def __neg__(self) -> "RatQ":
        r = RatQ.__new__(RatQ)
        r.num = -self.num
        r.den = self.den
        r._hash = None
        return r

    def __mul__(self, other: "RatQ") -> "RatQ":
        if self.num.is_zero() or other.num.is_zero():
            return _R_ZERO
        if self.den.is_one() and other.den.is_one():
            r = RatQ.__new__(RatQ)
            r.num = self.num * other.num
            r.den = _L_ONE
            r._hash = None
            return r
        return RatQ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatQ") -> "RatQ":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero RatQ")
        return RatQ(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatQ":
        return _R_ONE / self

    def __pow__(self, n: int) -> "RatQ":
        if n < 0:
            return self.inverse() ** (-n)
        out = _R_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions

    def q_bar(self) -> "RatQ":
        return RatQ(self.num.q_bar(), self.den.q_bar())

    def q_inv(self) -> "RatQ":
        return RatQ(self.num.q_inv(), self.den.q_inv())

    # -- comparison / hash / rendering

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RatQ) and self.num == other.num
                and self.den == other.den)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RatQ({self.text()})"

    def text(self) -> str:
        if self.den.is_one():
            return self.num.text()
        return f"({self.num.text()})/({self.den.text()})"

    def json_obj(self) -> dict:
        return {"num": self.num.json_obj(), "den": self.den.json_obj()}


_R_ZERO = RatQ(_L_ZERO)
_R_ONE = RatQ(_L_ONE)


class XPoly:
    """A Laurent polynomial in x over Q(q); the ring the invariants live in."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: dict[int, RatQ] | None = None):
        self.c: dict[int, RatQ] = {}
        if coeffs:
            self.c = {e: v for e, v in coeffs.items() if not v.is_zero()}
        self._hash: int | None = None

    @staticmethod
    def zero() -> "XPoly":
        return _X_ZERO

    @staticmethod
    def one() -> "XPoly":
        return _X_ONE

    @staticmethod
    def from_ratq(r: RatQ) -> "XPoly":
        return XPoly({0: r})

    @staticmethod
    def from_int(n: int) -> "XPoly":
        return XPoly({0: RatQ.from_int(n)})

    @staticmethod
    def x_power(k: int) -> "XPoly":
        return XPoly({k: _R_ONE})

    @staticmethod
    def mono(r: RatQ, k: int) -> "XPoly":
        return XPoly({k: r})

    # -- predicates / structure

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and 0 in self.c and self.c[0].is_one()

    @property
    def min_exp(self) -> int:
        return min(self.c)

    @property
    def max_exp(self) -> int:
        return max(self.c)

    def coeff(self, k: int) -> RatQ:
        return self.c.get(k, _R_ZERO)

    def items(self) -> Iterator[tuple[int, RatQ]]:
        return iter(self.c.items())

    # -- arithmetic

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self.c)
        for e, v in other.c.items():
            if e in out:
                w = out[e] + v
                if w.is_zero():
                    del out[e]
                else:
                    out[e] = w
            else:
                out[e] = v
        r = XPoly.__new__(XPoly)
        r.c = out
        r._hash = None
        return r

    def __sub__(self, other: "XPoly") -> "XPoly":
        return self + (-other)

    def __neg__(self) -> "XPoly":
        r = XPoly.__new__(XPoly)
        r.c = {e: -v for e, v in self.c.items()}
        r._hash = None
        return r

    def __mul__(self, other: "XPoly") -> "XPoly":
        if not self.c or not other.c:
            return _X_ZERO
        out: dict[int, RatQ] = {}
        for ea, va in self.c.items():
            for eb, vb in other.c.items():
                e = ea + eb
                w = va * vb
                if e in out:
                    w = out[e] + w
                if w.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = w
        r = XPoly.__new__(XPoly)
        r.c = out
        r._hash = None
        return r

    def scale(self, r: RatQ) -> "XPoly":
        if r.is_zero():
            return _X_ZERO
        out = XPoly.__new__(XPoly)
        out.c = {e: v * r for e, v in self.c.items()}
        out._hash = None
        return out

    def __pow__(self, n: int) -> "XPoly":
        if n < 0:
            inv = xpoly_invert(self)
            return inv ** (-n)
        out = _X_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- substitutions

    def subst_x_eq_qn(self, n: int) -> RatQ:
        """Evaluate at x = q^n; a ring homomorphism Q(q)[x^±1] -> Q(q)."""
        out = _R_ZERO
        for e, v in self.c.items():
            out = out + v * RatQ.q_power(n * e)
        return out

    def q_bar(self) -> "XPoly":
        """Apply q -> -q^{-1} coefficient-wise (x fixed); an involution."""
        r = XPoly.__new__(XPoly)
        r.c = {e: v.q_bar() for e, v in self.c.items()}
        r._hash = None
        return r

    def q_inv(self) -> "XPoly":
        r = XPoly.__new__(XPoly)
        r.c = {e: v.q_inv() for e, v in self.c.items()}
        r._hash = None
        return r

    def x_inv(self) -> "XPoly":
        """Apply x -> x^{-1} (q fixed)."""
        r = XPoly.__new__(XPoly)
        r.c = {-e: v for e, v in self.c.items()}
        r._hash = None
        return r

    # -- comparison / hash / rendering

    def __eq__(self, other: object) -> bool:
        return isinstance(other, XPoly) and self.c == other.c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted((e, v) for e, v in self.c.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"XPoly({self.text()})"

    def text(self) -> str:
        """Canonical rendering: x-exponents descending, each coefficient in
        canonical Q(q) form, e.g. ``(q^2 - q^-2)/(q - q^-1) * x^1``."""
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if v.den.is_one() and len(v.num.c) == 1:
                coef = v.num.text()
                if any(s in coef for s in (" ",)):
                    coef = f"({coef})"
            elif v.den.is_one():
                coef = f"({v.num.text()})"
            else:
                coef = f"({v.num.text()})/({v.den.text()})"
            parts.append(coef if e == 0 else f"{coef} * x^{e}")
        return " + ".join(parts)

    def json_obj(self) -> dict:
        return {str(e): self.c[e].json_obj() for e in sorted(self.c, reverse=True)}


_X_ZERO = XPoly()
_X_ONE = XPoly({0: _R_ONE})


def is_integral_laurent(r: RatQ) -> tuple[bool, LaurentQ | None]:
    """Whether r reduces to a Laurent polynomial with integer coefficients.

    Canonical form makes this a denominator check; the polynomial is
    returned when the answer is yes.
    """
    if r.den.is_one():
        return True, r.num
    return False, None


def xpoly_divexact(a: XPoly, b: XPoly) -> XPoly:
    """Exact quotient in Q(q)[x^{±1}]; raises ValueError if not divisible."""
    if b.is_zero():
        raise ZeroDivisionError("XPoly division by zero")
    if a.is_zero():
        return _X_ZERO
    rem = dict(a.c)
    bm = b.max_exp
    blead = b.c[bm]
    qmin = a.min_exp - b.min_exp
    out: dict[int, RatQ] = {}
    while rem:
        am = max(rem)
        qexp = am - bm
        if qexp < qmin:
            raise ValueError("inexact XPoly division")
        qc = rem[am] / blead
        out[qexp] = qc
        for e, v in b.c.items():
            t = e + qexp
            w = rem.get(t, _R_ZERO) - v * qc
            if w.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = w
    return XPoly(out)


def xpoly_invert(p: XPoly) -> XPoly:
    """Inverse of a unit (single-term) XPoly."""
    if len(p.c) != 1:
        raise ValueError("only monomials are invertible in Q(q)[x^(+/-1)]")
    ((e, v),) = p.c.items()
    return XPoly({-e: v.inverse()})


def _xpoly_mod(a: XPoly, b: XPoly) -> XPoly:
    # remainder of division in x over the field Q(q); b nonzero
    bm = b.max_exp
    blead = b.c[bm]
    span_b = bm - b.min_exp
    rem = dict(a.c)
    while rem and max(rem) - min(rem) >= span_b:
        am = max(rem)
        qc = rem[am] / blead
        shift = am - bm
        for e, v in b.c.items():
            t = e + shift
            w = rem.get(t, _R_ZERO) - v * qc
            if w.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = w
    return XPoly(rem)


def xpoly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """A gcd in x over Q(q), normalized to lowest x-exponent 0 with monic
    leading coefficient 1; returns 1 for coprime inputs."""
    while not b.is_zero():
        a, b = b, _xpoly_mod(a, b)
    if a.is_zero():
        return a
    lead = a.c[a.max_exp]
    shift = -a.min_exp
    return XPoly({e + shift: v / lead for e, v in a.c.items()})
