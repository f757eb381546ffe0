"""Tiny regular-expression front end producing complete DFAs.

Letters are tokens matching ``-?[A-Za-z0-9_]+``, so ``-1`` is one letter.
Operators: union ``+`` or ``|``, concatenation by juxtaposition or ``.``,
postfix ``*`` and ``^n`` (n-fold concatenation), parentheses.

>>> dfa = compile_regex("((0 1)^3)* 0", alphabet=["0", "1"])
>>> dfa.accepts(("0",)), dfa.accepts(tuple("0101010")), dfa.accepts(tuple("010"))
(True, True, False)
"""
from __future__ import annotations

import re
from collections import deque

from .labelled import Dfa

_TOKEN = re.compile(r"\s*(?:(-?[A-Za-z0-9_]+)|(\^\d+)|([()+|*.·]))")


class RegexError(ValueError):
    pass


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise RegexError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        letter, power, op = m.groups()
        if letter is not None:
            out.append(("letter", letter))
        elif power is not None:
            out.append(("power", int(power[1:])))
        elif op in "·.":
            pass
        else:
            out.append((op, op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        node = self.union()
        if self.peek() is not None:
            raise RegexError(f"trailing token {self.tokens[self.i][1]!r}")
        return node

    def union(self):
        parts = [self.concat()]
        while self.peek() in ("+", "|"):
            self.take()
            parts.append(self.concat())
        return parts[0] if len(parts) == 1 else ("union", parts)

    def concat(self):
        parts = []
        while self.peek() in ("letter", "("):
            parts.append(self.postfix())
        if not parts:
            raise RegexError("empty operand")
        return parts[0] if len(parts) == 1 else ("concat", parts)

    def postfix(self):
        node = self.atom()
        while self.peek() in ("*", "power"):
            kind, val = self.take()
            if kind == "*":
                node = ("star", node)
            else:
                node = ("concat", [node] * val) if val > 0 else ("eps",)
        return node

    def atom(self):
        kind, val = self.take()
        if kind == "letter":
            return ("letter", val)
        if kind == "(":
            node = self.union()
            if self.peek() != ")":
                raise RegexError("missing ')'")
            self.take()
            return node
        raise RegexError(f"unexpected {val!r}")


class _Nfa:
    def __init__(self):
        self.eps = []
        self.moves = []

    def new(self):
        self.eps.append(set())
        self.moves.append({})
        return len(self.eps) - 1

    def build(self, node):
        kind = node[0]
        if kind == "letter":
            s, t = self.new(), self.new()
            self.moves[s].setdefault(node[1], set()).add(t)
            return s, t
        if kind == "eps":
            s = self.new()
            return s, s
        if kind == "concat":
            s, t = self.build(node[1][0])
            for part in node[1][1:]:
                s2, t2 = self.build(part)
                self.eps[t].add(s2)
                t = t2
            return s, t
        if kind == "union":
            s, t = self.new(), self.new()
            for part in node[1]:
                s2, t2 = self.build(part)
                self.eps[s].add(s2)
                self.eps[t2].add(t)
            return s, t
        if kind == "star":
            s, t = self.new(), self.new()
            s2, t2 = self.build(node[1])
            self.eps[s].update({s2, t})
            self.eps[t2].update({s2, t})
            return s, t
        raise AssertionError(kind)

    def closure(self, states):
        out = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for r in self.eps[q]:
                if r not in out:
                    out.add(r)
                    stack.append(r)
        return frozenset(out)


def letters_of(text: str) -> list:
    seen = []
    for kind, val in _tokenize(text):
        if kind == "letter" and val not in seen:
            seen.append(val)
    return seen


def compile_regex(text: str, alphabet=None) -> Dfa:
    """Subset construction; states are numbered in discovery order."""
    tokens = _tokenize(text)
    tree = _Parser(tokens).parse()
    sigma = tuple(alphabet) if alphabet is not None else tuple(letters_of(text))
    unknown = set(letters_of(text)) - set(sigma)
    if unknown:
        raise RegexError(f"letters outside the alphabet: {sorted(unknown)}")
    nfa = _Nfa()
    start, final = nfa.build(tree)
    first = nfa.closure({start})
    ids = {first: 0}
    queue = deque([first])
    delta = {}
    while queue:
        cur = queue.popleft()
        for a in sigma:
            nxt = set()
            for q in cur:
                nxt |= nfa.moves[q].get(a, set())
            target = nfa.closure(nxt)
            if target not in ids:
                ids[target] = len(ids)
                queue.append(target)
            delta[(ids[cur], a)] = ids[target]
    accepting = {i for s, i in ids.items() if final in s}
    return Dfa.build(sigma, range(len(ids)), 0, accepting, delta)
