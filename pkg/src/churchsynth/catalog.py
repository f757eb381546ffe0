"""Small named instances used by the tests, demos and CLI golden files."""
from __future__ import annotations

from .labelled import Digraph, LabelledGraph, normalize_dfa
from .parity.arena import I, II, validate_arena
from .regex import compile_regex
from .representation import GraphRepresentation
from .semilinear import SemilinearSet
from .store.automaton import Rule, pushdown_automaton
from .store.stores import POP, SKIP, push
from .synthesis import Acceptor, EdgeLabelledGame, LabelDomain

LINE_REGEX = "(((0 1)^3)* + ((0 -1)^3)*) 0"
LINE_ALPHABET = ("0", "1", "-1")


def line_graph(n: int = 12) -> LabelledGraph:
    """Vertices ``0..n`` labelled ``0``; ``k -> k+1`` labelled ``1``, ``k -> k-1`` labelled ``-1``."""
    vertex_labels = {k: {"0"} for k in range(n + 1)}
    edge_labels = {}
    for k in range(n):
        edge_labels[(k, k + 1)] = {"1"}
        edge_labels[(k + 1, k)] = {"-1"}
    return LabelledGraph.build(LINE_ALPHABET, vertex_labels, edge_labels)


def line_dfa():
    return normalize_dfa(compile_regex(LINE_REGEX, alphabet=LINE_ALPHABET))


def line_expected_pairs(n: int = 12) -> frozenset:
    """Pairs ``(k, k +- 3m)`` inside ``0..n``, ``m >= 0``."""
    return frozenset((a, b) for a in range(n + 1) for b in range(n + 1) if (b - a) % 3 == 0)


def short_long_representation(n: int = 15, close: bool = False) -> GraphRepresentation:
    """Bounded out-degree graph representing ``x -> y`` iff ``y - x`` is 1 or a
    positive multiple of 3, truncated to ``0..n``.

    Short edges ``x -> x+1``. Even ``x`` enters the chain ``(x+3, 'I')``, odd
    ``x`` the chain ``(x+3, 'II')``; a chain vertex ``(y, t)`` exits to ``y`` or
    continues to ``(y+3, t)``. With ``close`` the last vertex gets a self-loop
    so the graph can carry a game.
    """
    verts = list(range(n + 1))
    edges = set()
    for x in range(n):
        edges.add((x, x + 1))
    for x in range(n + 1):
        tag = "I" if x % 2 == 0 else "II"
        if x + 3 <= n:
            edges.add((x, (x + 3, tag)))
    for y in range(3, n + 1):
        for tag in ("I", "II"):
            verts.append((y, tag))
            edges.add(((y, tag), y))
            if y + 3 <= n:
                edges.add(((y, tag), (y + 3, tag)))
    if close:
        edges.add((n, n))
    return GraphRepresentation(Digraph.build(verts, edges), frozenset(range(n + 1)))


def short_long_expected(n: int = 15, close: bool = False) -> frozenset:
    pairs = {(x, y) for x in range(n + 1) for y in range(x + 1, n + 1) if y - x == 1 or (y - x) % 3 == 0}
    if close:
        pairs.add((n, n))
    return frozenset(pairs)


def short_long_game(n: int = 15, colors=None):
    """The parity game on ``0..n``: even vertices belong to I, odd to II."""
    edges = short_long_expected(n, close=True)
    if colors is None:
        colors = {x: x % 3 for x in range(n + 1)}
    owner = {x: I if x % 2 == 0 else II for x in range(n + 1)}
    return validate_arena(range(n + 1), edges, owner, colors)


# -- acceptors and edge-labelled games ---------------------------------------


def equality_acceptor(letters=("0", "1")):
    """Output must copy the current input letter; a mismatch falls into the
    absorbing ``bad``."""
    nodes = ("ok", "bad")
    delta = {(v, a, b): "ok" if a == b and v == "ok" else "bad" for v in nodes for a in letters for b in letters}
    return Acceptor.build(letters, letters, nodes, "ok", delta, {"ok": 0, "bad": 1})


def predictor_acceptor():
    """Output must equal the next input bit.

    ``c0``/``c1`` remember the last claim; a wrong claim falls into the
    absorbing ``fail``. ``start`` holds no claim yet.
    """
    bits = ("0", "1")
    nodes = ("start", "c0", "c1", "fail")
    delta = {}
    for a in bits:
        for b in bits:
            delta[("start", a, b)] = "c" + b
            delta[("fail", a, b)] = "fail"
            for x in bits:
                delta[("c" + x, a, b)] = "c" + b if a == x else "fail"
    color = {"start": 0, "c0": 0, "c1": 0, "fail": 1}
    return Acceptor.build(bits, bits, nodes, "start", delta, color)


def all_even_acceptor(inputs=("a", "b"), outputs=("x", "y")):
    nodes = ("s", "t")
    delta = {(v, a, b): ("t" if b == outputs[-1] else "s") for v in nodes for a in inputs for b in outputs}
    return Acceptor.build(inputs, outputs, nodes, "s", delta, {"s": 0, "t": 2})


def echo_parity_elgame():
    """Output must answer each natural number with one of the same parity.

    ``ok`` (color 0) moves on an even input to ``e`` and on an odd one to
    ``o``; a matching answer returns to ``ok``, a wrong one falls into the
    ``bad``/``bb`` loop of color 1.
    """
    evens = SemilinearSet.union_of([(0, 2)])
    odds = SemilinearSet.union_of([(1, 2)])
    everything = SemilinearSet.union_of([(0, 1)])
    rows = {
        "ok": ((evens, "e"), (odds, "o")),
        "bad": ((everything, "bb"),),
        "e": ((evens, "ok"), (odds, "bad")),
        "o": ((odds, "ok"), (evens, "bad")),
        "bb": ((everything, "bad"),),
    }
    color = {"ok": 0, "bad": 1, "e": 2, "o": 2, "bb": 1}
    return EdgeLabelledGame.build(
        ["ok", "bad"], ["e", "o", "bb"], LabelDomain(), LabelDomain(), "ok", rows, color
    )


# -- pushdown games ----------------------------------------------------------


def one_play_pusher(color: int = 1):
    """A single player II state that can only push: the unique play sees ``color`` forever."""
    rules = [Rule("q", top, push("a"), "q") for top in (None, "a")]
    return pushdown_automaton(["a"], {"q": II}, {"q": color}, rules)


def drain_game(height=None):
    """Player I pushes ``a`` for a while, then II must pop back to the empty
    stack, where color 0 is seen and the round restarts.

    With ``height`` the letters carry their level and I cannot push past it,
    so the configuration space is finite.
    """
    if height is None:
        gamma, levels = ["a"], {None: "a", "a": "a"}
    else:
        gamma = [f"a{i}" for i in range(1, height + 1)]
        levels = {None: "a1", **{f"a{i}": f"a{i + 1}" for i in range(1, height)}}
    rules = []
    for top in [None] + gamma:
        if top in levels:
            rules.append(Rule("u", top, push(levels[top]), "u"))
        rules.append(Rule("u", top, SKIP, "d"))
        if top is None:
            rules.append(Rule("d", top, SKIP, "z"))
        else:
            rules.append(Rule("d", top, POP, "d"))
        rules.append(Rule("z", top, SKIP, "u"))
    owner = {"u": I, "d": II, "z": I}
    color = {"u": 1, "d": 2, "z": 0}
    return pushdown_automaton(gamma, owner, color, rules)
