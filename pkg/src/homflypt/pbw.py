"""The core evaluator: sorting a ladder word into PBW order.

``Evaluator.ev`` computes the unique element of Q(q)[x^{±1}] whose value at
x = q^n equals the evaluation of the word on the highest-weight idempotent
of the 2m-sided ladder, for every n.  The recursion moves the rightmost E
letter rightward:

1. a negative divided power is the zero element;
2. a word with a suffix whose weight goes negative in one of the last m
   slots evaluates to zero (the first m slots carry the symbolic n and are
   never range-checked);
3. with no E letters left, only the empty word survives (value 1);
4. an E letter at the right end annihilates the idempotent unless its power
   is zero;
5. E past an F with a different index commutes freely;
6. E_r^(b) F_r^(b') with equal indices swap through a binomial sum over t,
   with coefficient the x-shifted binomial exactly when r = m (the slot
   where the symbolic n sits) and a plain quantum binomial otherwise.

Memoization is keyed on the letter tuple alone; the cache is a pure
accelerator and never changes results.  ``ev_specialized`` runs the same
recursion with n substituted, which is the engine's internal consistency
oracle.
"""

from __future__ import annotations

import sys
from typing import Callable

from .ladder import LadderWord, Letter, Word
from .qcomb import qbinom, xbinom
from .rings import RatQ, XPoly

_MIN_RECURSION = 20000


class Evaluator:
    """Evaluation session for one ladder size; owns the memo tables."""

    def __init__(self, sides: int, memoize: bool = True,
                 trace: Callable[[str], None] | None = None):
        if sides < 2 or sides % 2:
            raise ValueError("sides must be an even integer >= 2")
        self.sides = sides
        self.m = sides // 2
        self.memoize = memoize
        self.trace = trace
        self._memo: dict[Word, XPoly] = {}
        self._memo_spec: dict[tuple[int, Word], RatQ] = {}
        self.max_depth = 0
        self._depth = 0
        if sys.getrecursionlimit() < _MIN_RECURSION:
            sys.setrecursionlimit(_MIN_RECURSION)

    # -- public entry points

    def ev(self, word: LadderWord | Word) -> XPoly:
        letters = self._letters(word)
        return self._ev(letters, None)

    def ev_specialized(self, word: LadderWord | Word, n: int) -> RatQ:
        letters = self._letters(word)
        return self._ev(letters, n)

    # -- helpers

    def _letters(self, word) -> Word:
        letters = word.letters if isinstance(word, LadderWord) else tuple(word)
        if isinstance(word, LadderWord) and word.sides != self.sides:
            raise ValueError("word has a different ladder size")
        for let in letters:
            if not 1 <= let.index <= self.sides - 1:
                raise ValueError(f"letter index {let.index} outside [1, {self.sides - 1}]")
        return letters

    def _tail_negative(self, w: Word) -> bool:
        # suffix weights, last m slots only (offsets off the zero part of
        # the highest weight); scanned right to left
        m = self.m
        offs = [0] * m
        for kind, i, p in reversed(w):
            if i > m:
                j = i - m - 1
                if kind == "E":
                    offs[j] += p
                else:
                    offs[j] -= p
                    if offs[j] < 0:
                        return True
            if i >= m:
                j = i - m
                if kind == "E":
                    offs[j] -= p
                    if offs[j] < 0:
                        return True
                else:
                    offs[j] += p
        return False

    def _lin_form(self, tail: Word, r: int, bl: int, bl1: int) -> int:
        # <weight offsets of tail, alpha_r> + bl - bl1; the n part of the
        # pairing appears only at r = m and is handled by the caller.
        # a letter at index i moves slot i by +-p and slot i+1 by the
        # opposite amount
        dr = dr1 = 0
        for kind, i, p in tail:
            s = p if kind == "E" else -p
            if i == r:
                dr += s
                dr1 -= s
            elif i == r - 1:
                dr -= s
            elif i == r + 1:
                dr1 += s
        return dr - dr1 + bl - bl1

    # -- the recursion

    def _ev(self, w: Word, n: int | None):
        one = XPoly.one() if n is None else RatQ.one()
        zero = XPoly.zero() if n is None else RatQ.zero()
        if not w:
            return one
        if any(let.power < 0 for let in w):
            return zero
        if self._tail_negative(w):
            if self.trace:
                self.trace(f"tail-negative: {_dump(w)}")
            return zero
        if self.memoize:
            if n is None:
                hit = self._memo.get(w)
            else:
                hit = self._memo_spec.get((n, w))
            if hit is not None:
                return hit

        self._depth += 1
        if self._depth > self.max_depth:
            self.max_depth = self._depth
        try:
            res = self._step(w, n, one, zero)
        finally:
            self._depth -= 1

        if self.memoize:
            if n is None:
                self._memo[w] = res
            else:
                self._memo_spec[(n, w)] = res
        return res

    def _step(self, w: Word, n: int | None, one, zero):
        m = self.m
        l = None
        for k in range(len(w) - 1, -1, -1):
            if w[k].kind == "E":
                l = k
                break
        if l is None:
            # all F: a positive power cannot return to the highest weight
            return one if all(let.power == 0 for let in w) else zero
        let = w[l]
        if l == len(w) - 1:
            if let.power != 0:
                if self.trace:
                    self.trace(f"annihilate {let.dump()}: {_dump(w)}")
                return zero
            return self._ev(w[:l], n)
        # slide right past every F with a different index (free commutation)
        j = l + 1
        while j < len(w) and w[j].index != let.index:
            j += 1
        if j == len(w):
            if let.power != 0:
                if self.trace:
                    self.trace(f"annihilate {let.dump()}: {_dump(w)}")
                return zero
            return self._ev(w[:l] + w[l + 1:], n)
        if j > l + 1 and self.trace:
            self.trace(f"commute {let.dump()} past {j - l - 1}: {_dump(w)}")
        r = let.index
        bl, bl1 = let.power, w[j].power
        tail = w[j + 1:]
        lin = self._lin_form(tail, r, bl, bl1)
        head = w[:l] + w[l + 1:j]
        res = zero
        for t in range(0, min(bl, bl1) + 1):
            if n is None:
                coeff_x = xbinom(lin, t) if r == m else None
                coeff_q = None if r == m else qbinom(lin, t)
            else:
                coeff_x = None
                coeff_q = qbinom((n if r == m else 0) + lin, t)
            if (coeff_x is not None and coeff_x.is_zero()) or \
               (coeff_q is not None and coeff_q.is_zero()):
                continue
            mid: list[Letter] = []
            if bl1 - t:
                mid.append(Letter("F", r, bl1 - t))
            if bl - t:
                mid.append(Letter("E", r, bl - t))
            sub = self._ev(head + tuple(mid) + tail, n)
            if self.trace:
                self.trace(f"swap E{r}^({bl}) F{r}^({bl1}) t={t} lin={lin}: {_dump(w)}")
            if n is None:
                if coeff_x is not None:
                    res = res + coeff_x * sub
                else:
                    res = res + sub.scale(coeff_q)
            else:
                res = res + coeff_q * sub
        return res


def _dump(w: Word) -> str:
    return " ".join(let.dump() for let in w) or "1"


def ev(word: LadderWord) -> XPoly:
    """One-shot generic evaluation (fresh memo)."""
    return Evaluator(word.sides).ev(word)


def ev_specialized(word: LadderWord, n: int) -> RatQ:
    """One-shot evaluation at x = q^n (fresh memo)."""
    return Evaluator(word.sides).ev_specialized(word, n)
