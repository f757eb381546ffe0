"""Church synthesis from deterministic parity acceptors and edge-labelled games.

Player ``I`` plays output and player ``II`` plays input throughout, so the
output player wins exactly when the least recurring color is even.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional

from .parity.arena import I, II, ParityArena, PositionalStrategy, WinningRegions, parity_winner, vertex_key, validate_arena
from .parity.solver import solve
from .semilinear import SemilinearSet

OUTPUT = I
INPUT = II


class SynthesisError(ValueError):
    pass


# -- ultimately periodic words -----------------------------------------------


@dataclass(frozen=True)
class LassoWord:
    """The word ``stem cycle cycle ...``, kept in a canonical form: the cycle
    is primitive and the stem is as short as possible."""

    stem: tuple
    cycle: tuple

    def __post_init__(self):
        if not self.cycle:
            raise SynthesisError("lasso cycle must be nonempty")
        stem, cycle = tuple(self.stem), tuple(self.cycle)
        n = len(cycle)
        for d in range(1, n + 1):
            if n % d == 0 and cycle == cycle[:d] * (n // d):
                cycle = cycle[:d]
                break
        while stem and stem[-1] == cycle[-1]:
            stem = stem[:-1]
            cycle = (cycle[-1],) + cycle[:-1]
        object.__setattr__(self, "stem", stem)
        object.__setattr__(self, "cycle", cycle)

    def __getitem__(self, i: int):
        if i < len(self.stem):
            return self.stem[i]
        return self.cycle[(i - len(self.stem)) % len(self.cycle)]

    def prefix(self, n: int) -> tuple:
        return tuple(self[i] for i in range(n))


@dataclass(frozen=True)
class LassoWordPair:
    x: LassoWord
    y: LassoWord

    def zipped(self) -> LassoWord:
        s = max(len(self.x.stem), len(self.y.stem))
        c = math.lcm(len(self.x.cycle), len(self.y.cycle))
        stem = tuple((self.x[i], self.y[i]) for i in range(s))
        cycle = tuple((self.x[i], self.y[i]) for i in range(s, s + c))
        return LassoWord(stem, cycle)


def _lasso_min_color(step, start, word: LassoWord, color) -> int:
    """Least color recurring on the run of ``step`` over ``word`` from ``start``.

    The run is periodic once a (state, phase) pair repeats inside the cycle.
    """
    state = start
    for letter in word.stem:
        state = step(state, letter)
    seen = {}
    trail = []
    phase = 0
    n = len(word.cycle)
    while (state, phase) not in seen:
        seen[(state, phase)] = len(trail)
        trail.append(state)
        state = step(state, word.cycle[phase])
        phase = (phase + 1) % n
    loop = trail[seen[(state, phase)]:]
    return min(color(s) for s in loop)


# -- acceptors and transducers -----------------------------------------------


@dataclass(frozen=True)
class Acceptor:
    nodes: tuple
    inputs: tuple
    outputs: tuple
    initial: object
    delta: Mapping  # (node, in letter, out letter) -> node
    color: Mapping

    @classmethod
    def build(cls, inputs, outputs, nodes, initial, delta: Mapping, color: Mapping) -> "Acceptor":
        nodes = tuple(nodes)
        known = set(nodes)
        if len(known) != len(nodes):
            raise SynthesisError("repeated node")
        if initial not in known:
            raise SynthesisError(f"initial node {initial!r} not declared")
        inputs, outputs = tuple(inputs), tuple(outputs)
        if not inputs or not outputs:
            raise SynthesisError("alphabets must be nonempty")
        for v in nodes:
            c = color.get(v)
            if not isinstance(c, int) or c < 0:
                raise SynthesisError(f"missing or bad color at {v!r}")
            for a in inputs:
                for b in outputs:
                    t = delta.get((v, a, b))
                    if t is None:
                        raise SynthesisError(f"transition missing at ({v}, {a}, {b})")
                    if t not in known:
                        raise SynthesisError(f"transition to undeclared node {t!r}")
        extra = set(delta) - {(v, a, b) for v in nodes for a in inputs for b in outputs}
        if extra:
            raise SynthesisError(f"transition on unknown letters: {sorted(extra, key=vertex_key)[0]}")
        return cls(nodes, inputs, outputs, initial, dict(delta), {v: color[v] for v in nodes})

    def step(self, v, pair):
        return self.delta[(v, pair[0], pair[1])]


@dataclass(frozen=True)
class Transducer:
    nodes: tuple
    inputs: tuple
    outputs: tuple
    initial: object
    delta: Mapping  # (node, in letter) -> (node, out letter)

    def step(self, v, a):
        return self.delta[(v, a)]


def game_from_acceptor(acceptor: Acceptor) -> ParityArena:
    """Input owns ``("orig", v)`` and picks a letter, moving to ``("in", v, a)``;
    output owns that vertex and picks a letter, moving to ``("orig", v')``."""
    verts, edges, owner, color = [], set(), {}, {}
    for v in acceptor.nodes:
        o = ("orig", v)
        verts.append(o)
        owner[o] = INPUT
        color[o] = acceptor.color[v]
        for a in acceptor.inputs:
            m = ("in", v, a)
            verts.append(m)
            owner[m] = OUTPUT
            color[m] = acceptor.color[v]
            edges.add((o, m))
            for b in acceptor.outputs:
                edges.add((m, ("orig", acceptor.delta[(v, a, b)])))
    return validate_arena(verts, edges, owner, color)


@dataclass(frozen=True)
class Realizability:
    realizable: bool
    arena: ParityArena
    regions: WinningRegions
    output_strategy: PositionalStrategy
    input_strategy: PositionalStrategy

    @property
    def verdict(self) -> str:
        return "realizable" if self.realizable else "unrealizable"


def decide_realizability(acceptor: Acceptor) -> Realizability:
    arena = game_from_acceptor(acceptor)
    regions, s_out, s_in = solve(arena)
    ok = ("orig", acceptor.initial) in regions.region_I
    return Realizability(ok, arena, regions, s_out, s_in)


def extract_transducer(acceptor: Acceptor, strategy: PositionalStrategy, regions: Optional[WinningRegions] = None) -> Transducer:
    """Transducer on the acceptor's nodes following the output strategy.

    At ``(v, a)`` the strategy names a successor ``("orig", v')``; the output
    is the first letter ``b`` in declaration order with ``delta(v, a, b) = v'``.
    Outside the output region the first letter is used.
    """
    if strategy.player != OUTPUT:
        raise SynthesisError("need the output player's strategy")
    delta = {}
    for v in acceptor.nodes:
        for a in acceptor.inputs:
            m = ("in", v, a)
            inside = regions is None or m in regions.region_I
            target = strategy.moves.get(m) if inside else None
            if target is None:
                b = acceptor.outputs[0]
                delta[(v, a)] = (acceptor.delta[(v, a, b)], b)
                continue
            if target[0] != "orig":
                raise SynthesisError(f"strategy moves {m} to {target}, not an acceptor node")
            for b in acceptor.outputs:
                if acceptor.delta[(v, a, b)] == target[1]:
                    delta[(v, a)] = (target[1], b)
                    break
            else:
                raise SynthesisError(f"no output letter realises {m} -> {target}")
    return Transducer(acceptor.nodes, acceptor.inputs, acceptor.outputs, acceptor.initial, delta)


def transducer_run(transducer, x: LassoWord) -> LassoWord:
    """Output word of ``transducer`` on ``x``, as a lasso.

    ``transducer`` is anything with ``initial`` and ``step(node, letter) ->
    (node, output)``.
    """
    state = transducer.initial
    out = []
    for a in x.stem:
        state, b = transducer.step(state, a)
        out.append(b)
    n = len(x.cycle)
    seen = {}
    phase = 0
    while (state, phase) not in seen:
        seen[(state, phase)] = len(out)
        state, b = transducer.step(state, x.cycle[phase])
        out.append(b)
        phase = (phase + 1) % n
    cut = seen[(state, phase)]
    return LassoWord(tuple(out[:cut]), tuple(out[cut:]))


def check_pair(acceptor: Acceptor, pair: LassoWordPair) -> bool:
    """Whether ``(x, y)`` is accepted: the least recurring node color is even."""
    word = pair.zipped()
    for a, b in word.stem + word.cycle:
        if a not in acceptor.inputs or b not in acceptor.outputs:
            raise SynthesisError(f"letter pair ({a}, {b}) outside the alphabets")
    c = _lasso_min_color(acceptor.step, acceptor.initial, word, acceptor.color.__getitem__)
    return parity_winner(c) == OUTPUT


# -- edge-labelled games -----------------------------------------------------


NAT = "N"


class LabelDomain:
    """Either a finite, ordered alphabet or the natural numbers."""

    def __init__(self, letters=None):
        self.letters = None if letters is None else tuple(letters)

    @property
    def is_nat(self) -> bool:
        return self.letters is None

    def __eq__(self, other):
        return isinstance(other, LabelDomain) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "LabelDomain(N)" if self.is_nat else f"LabelDomain({self.letters!r})"

    def member(self, x) -> bool:
        if self.is_nat:
            return isinstance(x, int) and not isinstance(x, bool) and x >= 0
        return x in self.letters

    def contains(self, cls, x) -> bool:
        return cls.contains(x) if self.is_nat else x in cls

    def least(self, cls):
        if self.is_nat:
            return cls.least()
        for x in self.letters:
            if x in cls:
                return x
        return None

    def check_partition(self, classes, where="") -> None:
        """Raise unless ``classes`` are nonempty, pairwise disjoint and cover the domain."""
        if self.is_nat:
            union = SemilinearSet.finite([])
            for c in classes:
                if not isinstance(c, SemilinearSet):
                    raise SynthesisError(f"{where}: class over N must be semilinear")
                if c.is_empty():
                    raise SynthesisError(f"{where}: empty label class")
                if not union.isdisjoint(c):
                    raise SynthesisError(f"{where}: label classes overlap")
                union = union | c
            if not union.is_full():
                missing = union.complement().least()
                raise SynthesisError(f"{where}: label classes miss {missing}")
            return
        seen = set()
        for c in classes:
            if not c:
                raise SynthesisError(f"{where}: empty label class")
            if not set(c) <= set(self.letters):
                raise SynthesisError(f"{where}: letters outside the alphabet")
            if seen & set(c):
                raise SynthesisError(f"{where}: label classes overlap")
            seen |= set(c)
        if seen != set(self.letters):
            missing = [x for x in self.letters if x not in seen]
            raise SynthesisError(f"{where}: label classes miss {missing[0]}")


@dataclass(frozen=True)
class EdgeLabelledGame:
    v_in: tuple
    v_out: tuple
    dom_in: LabelDomain
    dom_out: LabelDomain
    initial: object
    rows: Mapping  # vertex -> tuple of (label class, target)
    color: Mapping

    @classmethod
    def build(cls, v_in, v_out, dom_in, dom_out, initial, rows: Mapping, color: Mapping) -> "EdgeLabelledGame":
        v_in = tuple(sorted(set(v_in), key=vertex_key))
        v_out = tuple(sorted(set(v_out), key=vertex_key))
        if set(v_in) & set(v_out):
            raise SynthesisError("a vertex cannot be both input and output")
        if initial not in v_in:
            raise SynthesisError("initial vertex must be an input vertex")
        frozen = {}
        for side, dom, other in ((v_in, dom_in, set(v_out)), (v_out, dom_out, set(v_in))):
            for v in side:
                c = color.get(v)
                if not isinstance(c, int) or c < 0:
                    raise SynthesisError(f"missing or bad color at {v!r}")
                vrows = tuple(rows.get(v, ()))
                dom.check_partition([c for c, _ in vrows], where=f"vertex {v}")
                for _, t in vrows:
                    if t not in other:
                        raise SynthesisError(f"row from {v} must lead to the other side, not {t!r}")
                frozen[v] = vrows
        unknown = set(rows) - set(frozen)
        if unknown:
            raise SynthesisError(f"rows for undeclared vertex {sorted(unknown, key=vertex_key)[0]!r}")
        return cls(v_in, v_out, dom_in, dom_out, initial, frozen, {v: color[v] for v in frozen})

    def domain_of(self, v) -> LabelDomain:
        return self.dom_in if v in set(self.v_in) else self.dom_out

    def move(self, v, label):
        dom = self.domain_of(v)
        if not dom.member(label):
            raise SynthesisError(f"label {label!r} outside the domain at {v!r}")
        for cls, t in self.rows[v]:
            if dom.contains(cls, label):
                return t
        raise AssertionError("rows do not cover the domain")


def forget_labels(game: EdgeLabelledGame) -> ParityArena:
    edges = {(v, t) for v, rows in game.rows.items() for _, t in rows}
    owner = {v: INPUT for v in game.v_in}
    owner.update({v: OUTPUT for v in game.v_out})
    return validate_arena(game.v_in + game.v_out, edges, owner, game.color)


@dataclass(frozen=True)
class ClassTransducer:
    """Transducer over input label classes.

    ``rows[v]`` lists ``(input class, next node, output label)``; the nodes
    are the game's input vertices.
    """

    nodes: tuple
    dom_in: LabelDomain
    dom_out: LabelDomain
    initial: object
    rows: Mapping

    def step(self, v, label):
        for cls, t, out in self.rows[v]:
            if self.dom_in.contains(cls, label):
                return t, out
        raise SynthesisError(f"no row of {v!r} matches {label!r}")


@dataclass(frozen=True)
class ElgameSynthesis:
    realizable: bool
    arena: ParityArena
    regions: WinningRegions
    transducer: Optional[ClassTransducer]

    @property
    def verdict(self) -> str:
        return "realizable" if self.realizable else "unrealizable"


def synthesize_from_elgame(game: EdgeLabelledGame, require_realizable: bool = True) -> ElgameSynthesis:
    """Transducer whose nodes are the input vertices.

    For an input class leading to ``w``, the output strategy at ``w`` names
    the next input vertex ``v'``; the emitted label is the least one (numeric
    order, or declaration order for letters) among the classes leading from
    ``w`` to ``v'``. Outside the output region the least class of ``w`` is used.
    """
    arena = forget_labels(game)
    regions, s_out, _ = solve(arena)
    ok = game.initial in regions.region_I
    if not ok and require_realizable:
        return ElgameSynthesis(False, arena, regions, None)
    rows = {}
    for v in game.v_in:
        out_rows = []
        for cls, w in game.rows[v]:
            if w in regions.region_I:
                target = s_out.moves[w]
                options = [c for c, t in game.rows[w] if t == target]
            else:
                options = [c for c, _ in game.rows[w]]
            label = _least_over(game.dom_out, options)
            out_rows.append((cls, game.move(w, label), label))
        rows[v] = tuple(out_rows)
    trans = ClassTransducer(game.v_in, game.dom_in, game.dom_out, game.initial, rows)
    return ElgameSynthesis(ok, arena, regions, trans)


def _least_over(dom: LabelDomain, classes):
    best = None
    for c in classes:
        x = dom.least(c)
        if best is None or (dom.is_nat and x < best) or (not dom.is_nat and dom.letters.index(x) < dom.letters.index(best)):
            best = x
    return best


def check_pair_elgame(game: EdgeLabelledGame, pair: LassoWordPair) -> bool:
    """Whether the play labelled by ``(x, y)`` is won by output."""
    word = pair.zipped()
    for a, b in word.stem + word.cycle:
        if not game.dom_in.member(a) or not game.dom_out.member(b):
            raise SynthesisError(f"label pair ({a!r}, {b!r}) outside the domains")
    return parity_winner(_elgame_min_color(game, word)) == OUTPUT


def _elgame_min_color(game: EdgeLabelledGame, word: LassoWord) -> int:
    v = game.initial
    for a, b in word.stem:
        v = game.move(game.move(v, a), b)
    seen = {}
    trail = []
    phase = 0
    n = len(word.cycle)
    while (v, phase) not in seen:
        seen[(v, phase)] = len(trail)
        a, b = word.cycle[phase]
        w = game.move(v, a)
        trail.append(min(game.color[v], game.color[w]))
        v = game.move(w, b)
        phase = (phase + 1) % n
    return min(trail[seen[(v, phase)]:])


def acceptor_to_elgame(acceptor: Acceptor) -> EdgeLabelledGame:
    """The acceptor's game with letters on its edges.

    Input vertices are ``("orig", v)`` and output vertices ``("in", v, a)``,
    matching :func:`game_from_acceptor`; output letters leading to the same
    node share one class.
    """
    v_in = [("orig", v) for v in acceptor.nodes]
    v_out = [("in", v, a) for v in acceptor.nodes for a in acceptor.inputs]
    rows = {}
    color = {}
    for v in acceptor.nodes:
        color[("orig", v)] = acceptor.color[v]
        rows[("orig", v)] = tuple((frozenset([a]), ("in", v, a)) for a in acceptor.inputs)
        for a in acceptor.inputs:
            color[("in", v, a)] = acceptor.color[v]
            groups = {}
            for b in acceptor.outputs:
                groups.setdefault(acceptor.delta[(v, a, b)], []).append(b)
            rows[("in", v, a)] = tuple(
                (frozenset(bs), ("orig", t)) for t, bs in sorted(groups.items(), key=lambda kv: vertex_key(kv[0]))
            )
    return EdgeLabelledGame.build(
        v_in,
        v_out,
        LabelDomain(acceptor.inputs),
        LabelDomain(acceptor.outputs),
        ("orig", acceptor.initial),
        rows,
        color,
    )
