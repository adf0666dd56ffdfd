"""Quantum Weyl algebra operators and recurrence tooling.

An operator P = sum_j c_j(q, x, M) L^j acts on a sequence f of values in
Q(q)[x^{±1}] by (Pf)(m) = sum_j c_j(q, x, q^m) f(m+j): M is evaluated at
q^m before shifting, which realizes the relation L M = q M L.

``parse_operator`` reads the text format ``(<scalar>)*M^k*L^j`` with
``+``-separated terms; products, parentheses, integer powers of q, x, M, L
and division by q-scalars are accepted, and noncommutative products are
normalized with L^j M^k = q^{jk} M^k L^j.  ``guess`` finds a recurrence for
a computed sequence by an exact fraction-free nullspace over Q(q)[x^{±1}].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .rings import (LaurentQ, RatQ, XPoly, laurent_divexact, laurent_gcd,
                    xpoly_divexact, xpoly_gcd)


class OperatorError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[qxML()+\-*/^]|$)")


class _Parser:
    """Recursive descent over elements of the algebra Q(q)[x^±1]<M, L>."""

    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        out, i = [], 0
        while i < len(text):
            mo = _TOKEN.match(text, i)
            if not mo or mo.group(1) == "":
                if text[i:].strip():
                    raise OperatorError(f"bad character at: {text[i:i+10]!r}")
                break
            out.append(mo.group(1))
            i = mo.end()
        return out

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise OperatorError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> dict[tuple[int, int], XPoly]:
        e = self.expr()
        if self.peek() is not None:
            raise OperatorError(f"trailing input at token {self.peek()!r}")
        return e

    def expr(self):
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = _add(out, rhs if op == "+" else _neg(rhs))
        return out

    def term(self):
        out = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            out = _mul(out, rhs) if op == "*" else _div(out, rhs)
        return out

    def unary(self):
        if self.peek() == "-":
            self.take()
            return _neg(self.unary())
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if not tok.isdigit():
                raise OperatorError(f"exponent expected, got {tok!r}")
            return _pow(base, sign * int(tok))
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return _scalar(XPoly.from_int(int(tok)))
        if tok == "q":
            return _scalar(XPoly.from_ratq(RatQ.q_power(1)))
        if tok == "x":
            return _scalar(XPoly.x_power(1))
        if tok == "M":
            return {(0, 1): XPoly.one()}
        if tok == "L":
            return {(1, 0): XPoly.one()}
        if tok == "(":
            e = self.expr()
            if self.take() != ")":
                raise OperatorError("unbalanced parenthesis")
            return e
        raise OperatorError(f"unexpected token {tok!r}")


# element = dict[(L-power, M-power)] -> XPoly coefficient

def _scalar(p: XPoly):
    return {(0, 0): p} if not p.is_zero() else {}


def _add(a, b):
    out = dict(a)
    for key, v in b.items():
        w = out.get(key, XPoly.zero()) + v
        if w.is_zero():
            out.pop(key, None)
        else:
            out[key] = w
    return out


def _neg(a):
    return {k: -v for k, v in a.items()}


def _mul(a, b):
    out: dict[tuple[int, int], XPoly] = {}
    for (j1, k1), c1 in a.items():
        for (j2, k2), c2 in b.items():
            # L^j1 M^k2 = q^(j1 k2) M^k2 L^j1
            c = (c1 * c2).scale(RatQ.q_power(j1 * k2))
            key = (j1 + j2, k1 + k2)
            w = out.get(key, XPoly.zero()) + c
            if w.is_zero():
                out.pop(key, None)
            else:
                out[key] = w
    return out


def _div(a, b):
    if list(b) != [(0, 0)]:
        raise OperatorError("can only divide by scalars in Q(q)")
    p = b[(0, 0)]
    if set(p.c) != {0}:
        raise OperatorError("can only divide by scalars in Q(q)")
    inv = p.c[0].inverse()
    return {k: v.scale(inv) for k, v in a.items()}


def _pow(a, n: int):
    if n < 0:
        if list(a) == [(0, 0)] and len(a[(0, 0)].c) == 1:
            ((e, v),) = a[(0, 0)].c.items()
            base = _scalar(XPoly({-e: v.inverse()}))
            return _pow(base, -n)
        if list(a) in ([(0, 1)], [(1, 0)]):
            (key,) = a
            coef = a[key]
            if not coef.is_one():
                raise OperatorError("cannot invert this element")
            return {(key[0] * n, key[1] * n): XPoly.one()}
        raise OperatorError("cannot invert this element")
    out = _scalar(XPoly.one())
    base = a
    while n:
        if n & 1:
            out = _mul(out, base)
        base = _mul(base, base)
        n >>= 1
    return out


def parse_xpoly(text: str) -> XPoly:
    """Parse a plain scalar (no M, L) in the canonical text format."""
    elem = _Parser(text).parse()
    if not elem:
        return XPoly.zero()
    if list(elem) != [(0, 0)]:
        raise OperatorError("expression contains M or L; expected a scalar")
    return elem[(0, 0)]


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceOperator:
    """sum_j c_j(q,x,M) L^j with c_j polynomials in M over Q(q)[x^±1]."""

    coeffs: tuple[tuple[tuple[int, XPoly], ...], ...]  # per j: ((k, coeff), ...)

    def __init__(self, table: Mapping[int, Mapping[int, XPoly]]):
        if not table:
            raise OperatorError("empty operator")
        if min(table) < 0:
            raise OperatorError("negative L powers are not recurrence operators")
        d = max(table)
        rows = []
        for j in range(d + 1):
            row = tuple(sorted((k, v) for k, v in table.get(j, {}).items()
                               if not v.is_zero()))
            rows.append(row)
        if not rows[-1]:
            raise OperatorError("leading coefficient c_d is zero")
        object.__setattr__(self, "coeffs", tuple(rows))

    @staticmethod
    def from_element(elem: dict[tuple[int, int], XPoly]) -> "RecurrenceOperator":
        table: dict[int, dict[int, XPoly]] = {}
        for (j, k), c in elem.items():
            table.setdefault(j, {})[k] = c
        return RecurrenceOperator(table)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int, m: int) -> XPoly:
        """c_j with M evaluated at q^m."""
        out = XPoly.zero()
        for k, c in self.coeffs[j]:
            out = out + c.scale(RatQ.q_power(m * k))
        return out

    def apply(self, f: Mapping[int, XPoly], m: int) -> XPoly:
        """(Pf)(m) = sum_j c_j(q, x, q^m) f(m+j); raises on missing indices."""
        out = XPoly.zero()
        for j in range(self.order + 1):
            if m + j not in f:
                raise OperatorError(f"sequence not defined at index {m + j}")
            out = out + self.coefficient(j, m) * f[m + j]
        return out

    def verify(self, f: Mapping[int, XPoly], m_range) -> bool:
        """Exact annihilation at every m in the range."""
        return all(self.apply(f, m).is_zero() for m in m_range)

    def text(self) -> str:
        parts = []
        for j in range(self.order, -1, -1):
            for k, c in sorted(self.coeffs[j], reverse=True):
                term = f"({c.text()})"
                if k:
                    term += f"*M^{k}"
                if j:
                    term += f"*L^{j}"
                parts.append(term)
        return " + ".join(parts)


def parse_operator(text: str) -> RecurrenceOperator:
    return RecurrenceOperator.from_element(_Parser(text).parse())


def trefoil_recurrence() -> RecurrenceOperator:
    """The canonical order-2 operator annihilating the standard-normalized
    0-framed right-hand trefoil row sequence W(h_m) for all m >= 0."""
    a0 = "x^4*(x^2*M^2-1)*(q^6*x^2*M^4-1)"
    a1 = ("q*x^3*(q^4*x^2*M^4-1)*(q^8*x^4*M^8 - q^4*x^4*M^6 + q^2*x^4*M^4"
          " + x^4*M^4 - q^6*x^2*M^4 - q^2*x^2*M^4 - x^2*M^2 + 1)")
    a2 = "-q^6*x^8*M^6*(q^4*M^2-1)*(q^2*x^2*M^4-1)"
    return parse_operator(f"({a2})*L^2 + ({a1})*L^1 + ({a0})")


# ---------------------------------------------------------------------------
# guessing
# ---------------------------------------------------------------------------

def _vector_normalize(vec: list[XPoly]) -> list[XPoly]:
    """Clear denominators and divide out the common numerator content."""
    lcm = LaurentQ.one()
    for p in vec:
        for r in p.c.values():
            if not r.den.is_one():
                g = laurent_gcd(lcm, r.den)
                lcm = laurent_divexact(lcm * r.den, g)
    if not lcm.is_one():
        s = RatQ(lcm)
        vec = [p.scale(s) for p in vec]
    content = LaurentQ.zero()
    for p in vec:
        for r in p.c.values():
            content = laurent_gcd(content, r.num)
            if content.is_one():
                break
        if content.is_one():
            break
    if not (content.is_zero() or content.is_one()):
        inv = RatQ.one() / RatQ(content)
        vec = [p.scale(inv) for p in vec]
    return vec


def _nullspace_columns(rows: list[list[XPoly]], ncols: int) -> list[list[XPoly]]:
    """Kernel vectors of the homogeneous system, by fraction-free column
    elimination carrying a tracking block (entries stay in Q(q)[x^±1])."""
    nrows = len(rows)
    cols = []
    for i in range(ncols):
        vec = [rows[r][i] for r in range(nrows)]
        track = [XPoly.one() if t == i else XPoly.zero() for t in range(ncols)]
        cols.append((vec, track))
    active = list(range(ncols))
    for r in range(nrows):
        hot = [ci for ci in active if not cols[ci][0][r].is_zero()]
        if not hot:
            continue
        # the smallest column keeps intermediate growth down
        pi = min(hot, key=lambda ci: sum(len(p.c) for p in cols[ci][0]))
        pvec, ptrack = cols[pi]
        pr = pvec[r]
        for ci in hot:
            if ci == pi:
                continue
            vec, track = cols[ci]
            cr = vec[r]
            new_vec = [pr * a - cr * b for a, b in zip(vec, pvec)]
            new_track = [pr * a - cr * b for a, b in zip(track, ptrack)]
            joint = _vector_normalize(new_vec + new_track)
            cols[ci] = (joint[:nrows], joint[nrows:])
        active.remove(pi)
    kernels = []
    for ci in active:
        vec, track = cols[ci]
        assert all(v.is_zero() for v in vec)
        kernels.append(track)
    return kernels


def guess(f: Mapping[int, XPoly], max_order: int, max_m_degree: int
          ) -> RecurrenceOperator | None:
    """Search for a recurrence annihilating f, smallest order first.

    Solves the exact homogeneous system for the coefficients c_{j,k} of
    c_j = sum_k c_{j,k} M^k over the fraction field, denominator-cleared and
    content-reduced, and re-verifies the result on every available index
    before returning it.  Returns None when no operator exists within the
    bounds; raises OperatorError when the sequence window is too small to
    pose the problem.
    """
    g = max_m_degree
    indices = sorted(f)
    for order in range(1, max_order + 1):
        usable = [m for m in indices if all(m + j in f for j in range(order + 1))]
        ncols = (order + 1) * (g + 1)
        if len(usable) < ncols:
            raise OperatorError(
                f"need at least {ncols} sequence values for order {order}, "
                f"M-degree {g}; have {len(usable)} usable start indices")
        rows = []
        for m in usable:
            row = []
            for j in range(order + 1):
                for k in range(g + 1):
                    row.append(f[m + j].scale(RatQ.q_power(m * k)))
            rows.append(row)
        for kernel in _nullspace_columns(rows, ncols):
            top = kernel[order * (g + 1):]
            if all(c.is_zero() for c in top):
                continue
            kernel = _kernel_reduce(kernel)
            table: dict[int, dict[int, XPoly]] = {}
            for j in range(order + 1):
                for k in range(g + 1):
                    c = kernel[j * (g + 1) + k]
                    if not c.is_zero():
                        table.setdefault(j, {})[k] = c
            op = RecurrenceOperator(table)
            if op.verify(f, usable):
                return op
    return None


def _kernel_reduce(vec: list[XPoly]) -> list[XPoly]:
    """Divide out the full common x-polynomial factor and normalize."""
    g = XPoly.zero()
    for p in vec:
        if p.is_zero():
            continue
        g = p if g.is_zero() else xpoly_gcd(g, p)
        if len(g.c) == 1:
            break
    if not g.is_zero():
        if len(g.c) == 1:
            ((e, v),) = g.c.items()
            if e or not v.is_one():
                from .rings import xpoly_invert
                inv = xpoly_invert(g)
                vec = [p * inv for p in vec]
        else:
            vec = [xpoly_divexact(p, g) if not p.is_zero() else p for p in vec]
    vec = _vector_normalize(vec)
    # strip common monomial units q^a x^b
    xs = [p.min_exp for p in vec if not p.is_zero()]
    qs = [r.num.min_exp for p in vec for r in p.c.values() if not p.is_zero()]
    if xs and (min(xs) or (qs and min(qs))):
        unit = XPoly.mono(RatQ.q_power(-min(qs)), -min(xs))
        vec = [p * unit for p in vec]
    lead = next((p for p in reversed(vec) if not p.is_zero()), None)
    if lead is not None and lead.c[lead.max_exp].num.leading_coeff() < 0:
        vec = [-p for p in vec]
    return vec
