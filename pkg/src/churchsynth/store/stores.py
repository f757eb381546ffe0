"""Abstract stores: values with observations and partial update operations.

An observation is a hashable summary of the predicate values of a store
value; rules and strategy tables are keyed by it. Operations are tuples whose
first item names the operation, e.g. ``("push", "a")`` or ``("pop",)``.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Hashable, Optional

SKIP = ("skip",)
POP = ("pop",)


class StoreError(ValueError):
    pass


def push(letter) -> tuple:
    return ("push", letter)


def op_text(op) -> str:
    return " ".join(str(x) for x in op)


class AbstractStore(ABC):
    @abstractmethod
    def observe(self, value) -> Hashable:
        """Predicate values of ``value`` folded into one hashable key."""

    @abstractmethod
    def apply(self, op, value):
        """Result of ``op`` on ``value``, or None where ``op`` is undefined."""

    def is_operation(self, op) -> bool:
        return op == SKIP

    def is_observation(self, obs) -> bool:
        return True

    def height(self, value) -> Optional[int]:
        """Stack height for stack-shaped stores, else None."""
        return None


class PushdownStore(AbstractStore):
    """Words over ``gamma``; the top is the last letter. Observation is the
    top letter, or None on the empty stack."""

    def __init__(self, gamma):
        self.gamma = tuple(gamma)
        if len(set(self.gamma)) != len(self.gamma):
            raise StoreError("repeated stack letter")
        self._letters = frozenset(self.gamma)

    def __repr__(self):
        return f"PushdownStore({self.gamma!r})"

    def __eq__(self, other):
        return isinstance(other, PushdownStore) and other.gamma == self.gamma

    def __hash__(self):
        return hash(("pds", self.gamma))

    def observe(self, value):
        return value[-1] if value else None

    def apply(self, op, value):
        kind = op[0]
        if kind == "skip":
            return value
        if kind == "push":
            return value + (op[1],)
        if kind == "pop":
            return value[:-1] if value else None
        raise StoreError(f"unknown operation {op!r}")

    def is_operation(self, op) -> bool:
        return op in (SKIP, POP) or (len(op) == 2 and op[0] == "push" and op[1] in self._letters)

    def is_observation(self, obs) -> bool:
        return obs is None or obs in self._letters

    def observations(self):
        return (None,) + self.gamma

    def height(self, value) -> int:
        return len(value)


class BoundedCounterStore(AbstractStore):
    """Integers ``0..cap``. Observation is ``"zero"``, ``"full"`` or ``"mid"``."""

    def __init__(self, cap: int):
        if cap < 1:
            raise StoreError("counter cap must be positive")
        self.cap = cap

    def observe(self, value):
        if value == 0:
            return "zero"
        return "full" if value == self.cap else "mid"

    def apply(self, op, value):
        kind = op[0]
        if kind == "skip":
            return value
        if kind == "inc":
            return value + 1 if value < self.cap else None
        if kind == "dec":
            return value - 1 if value > 0 else None
        if kind == "reset":
            return 0
        raise StoreError(f"unknown operation {op!r}")

    def is_operation(self, op) -> bool:
        return op in (SKIP, ("inc",), ("dec",), ("reset",))

    def is_observation(self, obs) -> bool:
        return obs in ("zero", "mid", "full")


class MirrorStore(AbstractStore):
    """Same values and operations as ``base``, but every value is observable:
    the base store expanded by one predicate ``store == s`` per value."""

    def __init__(self, base: AbstractStore):
        self.base = base

    def __eq__(self, other):
        return isinstance(other, MirrorStore) and other.base == self.base

    def __hash__(self):
        return hash(("mirror", self.base))

    def observe(self, value):
        return value

    def apply(self, op, value):
        return self.base.apply(op, value)

    def is_operation(self, op) -> bool:
        return self.base.is_operation(op)

    def height(self, value):
        return self.base.height(value)


def _lower(a, b):
    if a is None:
        return None
    return min(a, b)


class FrameStack(AbstractStore):
    """Stack of frame records ``(letter, claim, low)``; the bottom record is
    ``(None, None, None)``. Observation is the top record.

    ``("popmin", c)`` pops the top record and lowers the new top's ``low`` to
    the minimum of itself, the popped ``low`` and ``c``.
    """

    BOTTOM = (None, None, None)

    def __eq__(self, other):
        return isinstance(other, FrameStack)

    def __hash__(self):
        return hash("framestack")

    def observe(self, value):
        return value[-1]

    def apply(self, op, value):
        kind = op[0]
        if kind == "skip":
            return value
        if kind == "push":
            return value + (op[1],)
        if kind == "set":
            return value[:-1] + (op[1],)
        if kind == "popmin":
            if len(value) < 2:
                return None
            top = value[-1]
            letter, claim, low = value[-2]
            low = _lower(_lower(low, top[2]), op[1])
            return value[:-2] + ((letter, claim, low),)
        raise StoreError(f"unknown operation {op!r}")

    def is_operation(self, op) -> bool:
        return op[0] in ("skip", "push", "set", "popmin")

    def height(self, value) -> int:
        return len(value) - 1
