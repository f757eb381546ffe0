"""Reference implementations used only by the tests.

They are deliberately naive and share no code with the package beyond the
data classes they read.
"""
import itertools
import re

from churchsynth.parity import I, II


def cycle_min(arena, moves, start):
    """Least color on the cycle reached from ``start`` when every vertex
    follows ``moves`` (a total successor map)."""
    order = []
    pos = {}
    v = start
    while v not in pos:
        pos[v] = len(order)
        order.append(v)
        v = moves[v]
    return min(arena.color[u] for u in order[pos[v]:])


def memoryless(arena, player):
    """Every positional strategy of ``player`` as a dict."""
    own = [v for v in arena.vertices if arena.owner[v] == player]
    for choice in itertools.product(*(arena.succ[v] for v in own)):
        yield dict(zip(own, choice))


def _reach(succ, sources, allowed):
    seen = set(s for s in sources if s in allowed)
    todo = list(seen)
    while todo:
        v = todo.pop()
        for w in succ[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def opponent_can_win(arena, player, moves):
    """Vertices from which the opponent of ``player`` beats the fixed
    positional strategy ``moves``: some reachable cycle has a least color of
    the opponent's parity. Checked color by color on the one-player graph."""
    succ = {v: (moves[v],) if arena.owner[v] == player else tuple(arena.succ[v]) for v in arena.vertices}
    pred = {v: [] for v in arena.vertices}
    for v, ws in succ.items():
        for w in ws:
            pred[w].append(v)
    bad_parity = 1 if player == I else 0
    bad = set()
    for c in sorted(set(arena.color.values())):
        if c % 2 != bad_parity:
            continue
        allowed = {v for v in arena.vertices if arena.color[v] >= c}
        for v in arena.vertices:
            if arena.color[v] != c:
                continue
            # v lies on a cycle inside ``allowed``
            if v in _reach(succ, [w for w in succ[v]], allowed):
                bad.add(v)
    return _reach(pred, bad, set(arena.vertices))


def regions_by_enumeration(arena):
    """Player I wins at v iff some I-strategy leaves II no winning reply at v."""
    win = set()
    for s in memoryless(arena, I):
        win |= set(arena.vertices) - opponent_can_win(arena, I, s)
    return frozenset(win), frozenset(arena.vertices) - frozenset(win)


# -- labelled graphs ---------------------------------------------------------


def language_edges(graph, dfa):
    """Path-label relation by layered iteration over path length."""
    out = set()
    for u in graph.vertices:
        layer = {(u, dfa.delta[(dfa.initial, a)]) for a in graph.vertex_labels[u]}
        seen = set(layer)
        while layer:
            nxt = set()
            for v, q in layer:
                for (x, w), labels in graph.edge_labels.items():
                    if x != v:
                        continue
                    for e in labels:
                        for b in graph.vertex_labels[w]:
                            item = (w, dfa.delta[(dfa.delta[(q, e)], b)])
                            if item not in seen:
                                nxt.add(item)
            seen |= nxt
            layer = nxt
        out |= {(u, v) for v, q in seen if q in dfa.accepting}
    return out


def short_paths(graph, max_edges):
    """All vertex paths with at most ``max_edges`` edges."""
    paths = [(v,) for v in graph.vertices]
    out = list(paths)
    for _ in range(max_edges):
        paths = [p + (w,) for p in paths for (x, w) in graph.edge_labels if x == p[-1]]
        out += paths
    return out


def python_regex(text):
    """Translate the package's regex syntax (single-character letters) to ``re``."""
    t = re.sub(r"\s+", "", text).replace("+", "|")
    return re.compile(re.sub(r"\^(\d+)", r"{\1}", t))


# -- semilinear sets ---------------------------------------------------------


def progression_members(progs, bound):
    return {a + b * k for a, b in progs for k in range(bound + 1) if a + b * k < bound}
