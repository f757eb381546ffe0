"""Semilinear subsets of the natural numbers.

A finite union of progressions ``a + b*N`` is ultimately periodic, so it is
stored as a threshold ``t``, a period ``p``, the members below ``t``, and the
residues mod ``p`` of the members at or above ``t``. Membership, emptiness,
Boolean operations and the least element all reduce to this form.

>>> evens = SemilinearSet.progression(0, 2)
>>> evens.contains(10), evens.contains(7), (evens | SemilinearSet.progression(1, 2)).is_full()
(True, False, True)
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional


class SemilinearError(ValueError):
    pass


@dataclass(frozen=True)
class SemilinearSet:
    threshold: int
    period: int
    low: frozenset  # members below threshold
    residues: frozenset  # residues mod period of members >= threshold
    text: tuple = ()  # the progressions it was written as, for emission

    # -- construction --------------------------------------------------------

    @classmethod
    def progression(cls, a: int, b: int) -> "SemilinearSet":
        if a < 0 or b < 0:
            raise SemilinearError("progressions need a >= 0 and b >= 0")
        if b == 0:
            return cls.finite([a])
        return cls(a, b, frozenset(), frozenset({a % b}), ((a, b),))

    @classmethod
    def finite(cls, members) -> "SemilinearSet":
        ms = sorted(set(int(m) for m in members))
        if any(m < 0 for m in ms):
            raise SemilinearError("naturals only")
        t = ms[-1] + 1 if ms else 0
        return cls(t, 1, frozenset(ms), frozenset(), tuple((m, 0) for m in ms))

    @classmethod
    def union_of(cls, progressions) -> "SemilinearSet":
        out = cls.finite([])
        for a, b in progressions:
            out = out | cls.progression(a, b)
        return out.with_text(tuple(progressions))

    def with_text(self, text) -> "SemilinearSet":
        return SemilinearSet(self.threshold, self.period, self.low, self.residues, tuple(text))

    # -- normal form ---------------------------------------------------------

    def _lift(self, t: int, p: int):
        """Same set over a larger threshold ``t`` and a multiple ``p`` of the period."""
        low = set(self.low)
        for x in range(self.threshold, t):
            if x % self.period in self.residues:
                low.add(x)
        res = {r for r in range(p) if self._tail_has(t + ((r - t) % p))}
        return low, res

    def _tail_has(self, x: int) -> bool:
        return x >= self.threshold and x % self.period in self.residues

    def _common(self, other):
        t = max(self.threshold, other.threshold)
        p = math.lcm(self.period, other.period)
        return t, p, self._lift(t, p), other._lift(t, p)

    def _combine(self, other, op) -> "SemilinearSet":
        t, p, (l1, r1), (l2, r2) = self._common(other)
        return SemilinearSet(t, p, frozenset(op(l1, l2)), frozenset(op(r1, r2)))

    def __or__(self, other):
        return self._combine(other, lambda a, b: a | b)

    def __and__(self, other):
        return self._combine(other, lambda a, b: a & b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def complement(self) -> "SemilinearSet":
        low = frozenset(range(self.threshold)) - self.low
        res = frozenset(range(self.period)) - self.residues
        return SemilinearSet(self.threshold, self.period, low, res)

    def __eq__(self, other):
        if not isinstance(other, SemilinearSet):
            return NotImplemented
        _, _, a, b = self._common(other)
        return a == b

    def __hash__(self):
        return hash(self.canonical())

    def canonical(self) -> tuple:
        """Smallest period, then smallest threshold, describing the same set."""
        p = self.period
        for d in _divisors(p):
            if _periodic_with(self.residues, p, d):
                p = d
                break
        res = frozenset(r % p for r in self.residues)
        t = self.threshold
        low = set(self.low)
        while t > 0:
            x = t - 1
            inside = x in low
            if inside != (x % p in res):
                break
            low.discard(x)
            t -= 1
        return (t, p, tuple(sorted(low)), tuple(sorted(res)))

    # -- queries -------------------------------------------------------------

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x < self.threshold:
            return x in self.low
        return x % self.period in self.residues

    __contains__ = contains

    def is_empty(self) -> bool:
        return not self.low and not self.residues

    def is_full(self) -> bool:
        return self.complement().is_empty()

    def is_finite(self) -> bool:
        return not self.residues

    def isdisjoint(self, other) -> bool:
        return (self & other).is_empty()

    def least(self) -> Optional[int]:
        if self.low:
            return min(self.low)
        if not self.residues:
            return None
        t, p = self.threshold, self.period
        return min(t + ((r - t) % p) for r in self.residues)

    def members_below(self, bound: int) -> list:
        return [x for x in range(bound) if self.contains(x)]

    def progressions(self) -> tuple:
        """Progressions whose union is this set, as ``(a, b)`` pairs."""
        if self.text:
            return self.text
        t, p, low, res = self.canonical()
        out = [(x, 0) for x in low]
        out += [(t + ((r - t) % p), p) for r in res]
        return tuple(sorted(out))

    def __str__(self):
        return format_class(self)


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _periodic_with(residues, p: int, d: int) -> bool:
    return all(((r + d) % p in residues) == (r in residues) for r in range(p))


_LIN = re.compile(r"^lin\{(.*)\}$")
_FIN = re.compile(r"^finite\{(.*)\}$")
_PROG = re.compile(r"^\s*(\d+)\s*(?:\+\s*(\d+)\s*\*\s*N)?\s*$")


def parse_class(text: str, letters=None):
    """``lin{a+b*N, ...}`` gives a :class:`SemilinearSet`; ``finite{x, ...}``
    gives a frozenset of letters, or of naturals when ``letters`` is None."""
    text = text.strip()
    m = _LIN.match(text)
    if m:
        progs = []
        for part in filter(None, (x.strip() for x in m.group(1).split(","))):
            pm = _PROG.match(part)
            if not pm:
                raise SemilinearError(f"bad progression {part!r}")
            progs.append((int(pm.group(1)), int(pm.group(2) or 0)))
        if not progs:
            raise SemilinearError("empty lin{} class")
        return SemilinearSet.union_of(progs)
    m = _FIN.match(text)
    if m:
        items = [x.strip() for x in m.group(1).split(",") if x.strip()]
        if not items:
            raise SemilinearError("empty finite{} class")
        if letters is None:
            if not all(x.isdigit() for x in items):
                raise SemilinearError(f"finite class over N must list naturals: {text!r}")
            return SemilinearSet.finite(int(x) for x in items).with_text(tuple((int(x), 0) for x in items))
        unknown = [x for x in items if x not in letters]
        if unknown:
            raise SemilinearError(f"letters outside the alphabet: {unknown}")
        return frozenset(items)
    raise SemilinearError(f"unrecognised label class {text!r}")


def format_class(cls, letters=None) -> str:
    if isinstance(cls, SemilinearSet):
        progs = cls.progressions()
        if all(b == 0 for _, b in progs):
            return "finite{" + ",".join(str(a) for a, _ in progs) + "}"
        return "lin{" + ",".join(f"{a}" if b == 0 else f"{a}+{b}*N" for a, b in progs) + "}"
    order = list(letters) if letters is not None else sorted(cls)
    return "finite{" + ",".join(x for x in order if x in cls) + "}"
