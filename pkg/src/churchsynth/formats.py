"""Line-oriented text formats.

Every format starts with a header word, has one record per line, and allows
``#`` comments and blank lines. Emitters write records in a fixed order
(sorted ids, or declaration order where the value has one), so the same value
always produces the same bytes; parsers accept any record order.
"""
from __future__ import annotations

from .labelled import Dfa, Digraph, LabelledGraph
from .parity.arena import PLAYERS, ParityArena, PositionalStrategy, validate_arena
from .representation import GameRepresentation, GraphRepresentation
from .semilinear import SemilinearSet, format_class, parse_class
from .store.automaton import Rule, StoreAutomaton, pushdown_automaton
from .store.stores import POP, SKIP, FrameStack, push
from .store.strategy import StoreStrategy
from .synthesis import Acceptor, ClassTransducer, EdgeLabelledGame, LabelDomain, Transducer


class FormatError(ValueError):
    pass


# -- helpers -----------------------------------------------------------------


def fmt_id(v) -> str:
    """Text form of a vertex id; tuples are joined with underscores."""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, int):
        return str(v)
    if v is None:
        return "none"
    if isinstance(v, tuple):
        return "_".join(fmt_id(x) for x in v)
    raise FormatError(f"cannot write id {v!r}")


def id_table(ids) -> dict:
    """id -> text, refusing two ids with the same text."""
    out = {}
    back = {}
    for v in ids:
        s = fmt_id(v)
        if s in back and back[s] != v:
            raise FormatError(f"ids {back[s]!r} and {v!r} both print as {s!r}")
        back[s] = v
        out[v] = s
    return out


def _records(text: str, header: str):
    """Yield ``(line number, tokens)`` after checking the header."""
    seen_header = False
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            words = line.split()
            if words[0] != header:
                raise FormatError(f"line {n}: expected header {header!r}, got {words[0]!r}")
            seen_header = True
            if len(words) > 1:
                yield n, words
            continue
        yield n, line.split()
    if not seen_header:
        raise FormatError(f"missing header {header!r}")


def _kv(tokens, n) -> tuple:
    plain, opts = [], {}
    for t in tokens:
        if "=" in t:
            k, v = t.split("=", 1)
            opts[k] = v
        else:
            plain.append(t)
    return plain, opts


def _uint(s, n, what="color") -> int:
    if not s.isdigit():
        raise FormatError(f"line {n}: {what} must be a natural number, got {s!r}")
    return int(s)


def _lines(*parts) -> str:
    return "\n".join(parts) + "\n"


# -- arenas and positional strategies ----------------------------------------


def parse_arena(text: str) -> ParityArena:
    arena, gv = _parse_arena(text, allow_gvertices=False)
    return arena


def parse_represented_arena(text: str):
    """Arena file with a ``gvertices`` line; returns ``(arena, gvertices)``."""
    arena, gv = _parse_arena(text, allow_gvertices=True)
    if gv is None:
        raise FormatError("missing gvertices line")
    unknown = gv - set(arena.vertices)
    if unknown:
        raise FormatError(f"gvertices not in the arena: {sorted(unknown)[:3]}")
    return arena, gv


def _parse_arena(text, allow_gvertices):
    verts, owner, color, edges = [], {}, {}, []
    gv = None
    for n, tok in _records(text, "arena"):
        kind = tok[0]
        if kind == "arena":
            continue
        if kind == "gvertices" and allow_gvertices:
            gv = frozenset(tok[1:])
            continue
        if kind == "vertex":
            plain, opts = _kv(tok[1:], n)
            if len(plain) != 1:
                raise FormatError(f"line {n}: vertex needs exactly one id")
            v = plain[0]
            if v in owner:
                raise FormatError(f"line {n}: vertex {v} declared twice")
            if "owner" not in opts or opts["owner"] not in PLAYERS:
                raise FormatError(f"line {n}: missing or bad owner at {v}")
            if "color" not in opts:
                raise FormatError(f"line {n}: missing color at {v}")
            verts.append(v)
            owner[v] = opts["owner"]
            color[v] = _uint(opts["color"], n)
        elif kind == "edge":
            if len(tok) != 3:
                raise FormatError(f"line {n}: edge needs two ids")
            edges.append((tok[1], tok[2]))
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    return validate_arena(verts, edges, owner, color), gv


def emit_arena(arena: ParityArena, names=None, extra=()) -> str:
    names = names or id_table(arena.vertices)
    out = ["arena"]
    for v in sorted(arena.vertices, key=lambda x: names[x]):
        out.append(f"vertex {names[v]} owner={arena.owner[v]} color={arena.color[v]}")
    for a, b in sorted((names[u], names[w]) for u, w in arena.edges):
        out.append(f"edge {a} {b}")
    out.extend(extra)
    return _lines(*out)


def parse_strategy(text: str) -> PositionalStrategy:
    player = None
    moves = {}
    for n, tok in _records(text, "strategy"):
        if tok[0] == "strategy":
            _, opts = _kv(tok[1:], n)
            player = opts.get("player")
        elif tok[0] == "move" and len(tok) == 3:
            moves[tok[1]] = tok[2]
        else:
            raise FormatError(f"line {n}: unknown record {tok[0]!r}")
    if player not in PLAYERS:
        raise FormatError("strategy header needs player=I or player=II")
    return PositionalStrategy(player, moves)


def emit_strategy(strategy: PositionalStrategy, names=None) -> str:
    names = names or id_table(set(strategy.moves) | set(strategy.moves.values()))
    rows = sorted((names[v], names[w]) for v, w in strategy.moves.items())
    return _lines(f"strategy player={strategy.player}", *(f"move {a} {b}" for a, b in rows))


# -- labelled graphs, DFAs and representations -------------------------------


def _labels(s: str, n):
    items = [x for x in s.split(",") if x]
    if not items:
        raise FormatError(f"line {n}: empty label set")
    return items


def parse_lgraph(text: str) -> LabelledGraph:
    alphabet = None
    vl, el = {}, {}
    for n, tok in _records(text, "lgraph"):
        kind = tok[0]
        if kind == "alphabet":
            alphabet = tok[1:]
        elif kind == "vertex":
            plain, opts = _kv(tok[1:], n)
            if len(plain) != 1 or "labels" not in opts:
                raise FormatError(f"line {n}: vertex needs an id and labels=")
            vl[plain[0]] = _labels(opts["labels"], n)
        elif kind == "edge":
            plain, opts = _kv(tok[1:], n)
            if len(plain) != 2 or "labels" not in opts:
                raise FormatError(f"line {n}: edge needs two ids and labels=")
            el[(plain[0], plain[1])] = _labels(opts["labels"], n)
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if alphabet is None:
        raise FormatError("missing alphabet line")
    return LabelledGraph.build(alphabet, vl, el)


def _ordered(labels, alphabet):
    return ",".join(a for a in alphabet if a in labels)


def emit_lgraph(graph: LabelledGraph) -> str:
    names = id_table(graph.vertices)
    out = ["lgraph", "alphabet " + " ".join(graph.alphabet)]
    for v in sorted(graph.vertices, key=lambda x: names[x]):
        out.append(f"vertex {names[v]} labels={_ordered(graph.vertex_labels[v], graph.alphabet)}")
    rows = sorted(((names[u], names[w]), labels) for (u, w), labels in graph.edge_labels.items())
    for (a, b), labels in rows:
        out.append(f"edge {a} {b} labels={_ordered(labels, graph.alphabet)}")
    return _lines(*out)


def parse_dfa(text: str) -> Dfa:
    alphabet = None
    states, initial, accepting, delta = [], [], set(), {}
    for n, tok in _records(text, "dfa"):
        kind = tok[0]
        if kind == "alphabet":
            alphabet = tok[1:]
        elif kind == "state":
            if len(tok) < 2:
                raise FormatError(f"line {n}: state needs an id")
            q = tok[1]
            flags = set(tok[2:])
            if not flags <= {"initial", "accepting"}:
                raise FormatError(f"line {n}: unknown state flag")
            states.append(q)
            if "initial" in flags:
                initial.append(q)
            if "accepting" in flags:
                accepting.add(q)
        elif kind == "trans":
            if len(tok) != 4:
                raise FormatError(f"line {n}: trans needs state, letter, state")
            delta[(tok[1], tok[2])] = tok[3]
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if alphabet is None:
        alphabet = sorted({a for _, a in delta})
    if len(initial) != 1:
        raise FormatError("exactly one initial state is required")
    return Dfa.build(alphabet, states, initial[0], accepting, delta)


def emit_dfa(dfa: Dfa) -> str:
    names = id_table(dfa.states)
    out = ["dfa", "alphabet " + " ".join(dfa.alphabet)]
    for q in sorted(dfa.states, key=lambda x: names[x]):
        flags = ""
        if q == dfa.initial:
            flags += " initial"
        if q in dfa.accepting:
            flags += " accepting"
        out.append(f"state {names[q]}{flags}")
    rows = sorted((names[q], dfa.alphabet.index(a), a, names[t]) for (q, a), t in dfa.delta.items())
    out.extend(f"trans {q} {a} {t}" for q, _, a, t in rows)
    return _lines(*out)


def parse_graph_representation(text: str) -> GraphRepresentation:
    verts, edges, gv = set(), set(), None
    for n, tok in _records(text, "graph"):
        kind = tok[0]
        if kind == "vertex" and len(tok) == 2:
            verts.add(tok[1])
        elif kind == "edge" and len(tok) == 3:
            edges.add((tok[1], tok[2]))
        elif kind == "gvertices":
            gv = frozenset(tok[1:])
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    for e in edges:
        for x in e:
            if x not in verts:
                raise FormatError(f"unknown vertex {x}")
    if gv is None:
        raise FormatError("missing gvertices line")
    return GraphRepresentation(Digraph.build(verts, edges), gv)


def emit_graph_representation(rep: GraphRepresentation) -> str:
    names = id_table(rep.big.vertices)
    out = ["graph"]
    out.extend(f"vertex {s}" for s in sorted(names.values()))
    out.extend(f"edge {a} {b}" for a, b in sorted((names[u], names[w]) for u, w in rep.big.edges))
    out.append("gvertices " + " ".join(sorted(names[v] for v in rep.gvertices)))
    return _lines(*out)


def game_rep_names(rep: GameRepresentation) -> dict:
    """``(m, j)`` is written ``<m>@<j>``."""
    return id_table_from({v: f"{fmt_id(v[0])}@{v[1]}" for v in rep.arena.vertices})


def id_table_from(mapping: dict) -> dict:
    seen = {}
    for v, s in mapping.items():
        if s in seen:
            raise FormatError(f"ids {seen[s]!r} and {v!r} both print as {s!r}")
        seen[s] = v
    return mapping


def emit_game_representation(rep: GameRepresentation) -> str:
    names = game_rep_names(rep)
    gline = "gvertices " + " ".join(sorted(names[w] for w in rep.gvertices))
    return emit_arena(rep.arena, names, extra=[gline])


# -- pushdown systems and store strategies -----------------------------------


def _op_from(tokens, n):
    if tokens[0] == "push" and len(tokens) == 2:
        return push(tokens[1])
    if tokens == ["pop"]:
        return POP
    if tokens == ["skip"]:
        return SKIP
    raise FormatError(f"line {n}: bad operation {' '.join(tokens)!r}")


def _rule_from(tokens, n) -> Rule:
    if len(tokens) not in (4, 5) or not tokens[1].startswith("top="):
        raise FormatError(f"line {n}: rule needs <state> top=<letter|empty> <op> <state>")
    top = tokens[1][4:]
    return Rule(tokens[0], None if top == "empty" else top, _op_from(tokens[2:-1], n), tokens[-1])


def rule_text(rule: Rule) -> str:
    top = "empty" if rule.guard is None else rule.guard
    return f"{fmt_id(rule.source)} top={top} {' '.join(str(x) for x in rule.op)} {fmt_id(rule.target)}"


def parse_pds(text: str):
    """Returns ``(automaton, start)``; ``start`` is ``(state, stack)`` or None."""
    gamma = None
    owner, color, rules = {}, {}, []
    start = None
    for n, tok in _records(text, "pds"):
        kind = tok[0]
        if kind == "gamma":
            gamma = tok[1:]
        elif kind == "state":
            plain, opts = _kv(tok[1:], n)
            if len(plain) != 1:
                raise FormatError(f"line {n}: state needs one id")
            if opts.get("owner") not in PLAYERS or "color" not in opts:
                raise FormatError(f"line {n}: state needs owner= and color=")
            owner[plain[0]] = opts["owner"]
            color[plain[0]] = _uint(opts["color"], n)
        elif kind == "rule":
            rules.append(_rule_from(tok[1:], n))
        elif kind == "start":
            if len(tok) < 2:
                raise FormatError(f"line {n}: start needs a state")
            start = (tok[1], tuple(tok[2:]))
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if gamma is None:
        raise FormatError("missing gamma line")
    return pushdown_automaton(gamma, owner, color, rules), start


def emit_pds(automaton: StoreAutomaton, start=None) -> str:
    out = ["pds", "gamma " + " ".join(automaton.store.gamma)]
    for q in sorted(automaton.states, key=fmt_id):
        out.append(f"state {fmt_id(q)} owner={automaton.owner[q]} color={automaton.color[q]}")
    out.extend(sorted(f"rule {rule_text(r)}" for r in automaton.rules))
    if start is not None:
        out.append(" ".join(["start", fmt_id(start[0]), *start[1]]))
    return _lines(*out)


def _claim_text(claim) -> str:
    if claim is None:
        return "-"
    return ",".join(f"{fmt_id(p)}:{c}" for p, c in sorted(claim, key=lambda pc: (fmt_id(pc[0]), pc[1])))


def record_text(record) -> str:
    letter, claim, low = record
    return "|".join(["-" if letter is None else letter, _claim_text(claim), "-" if low is None else str(low)])


def parse_record(s: str, n=0) -> tuple:
    parts = s.split("|")
    if len(parts) != 3:
        raise FormatError(f"line {n}: bad frame record {s!r}")
    letter = None if parts[0] == "-" else parts[0]
    if parts[1] == "-":
        claim = None
    else:
        claim = set()
        for item in filter(None, parts[1].split(",")):
            p, _, c = item.rpartition(":")
            claim.add((p, _uint(c, n)))
        claim = frozenset(claim)
    low = None if parts[2] == "-" else _uint(parts[2], n)
    return (letter, claim, low)


def _aux_text(op) -> str:
    if op[0] in ("push", "set"):
        return f"{op[0]} {record_text(op[1])}"
    if op[0] == "popmin":
        return f"popmin {op[1]}"
    return "skip"


def _aux_from(s: str, n):
    tok = s.split()
    if tok == ["skip"]:
        return SKIP
    if len(tok) == 2 and tok[0] in ("push", "set"):
        return (tok[0], parse_record(tok[1], n))
    if len(tok) == 2 and tok[0] == "popmin":
        return ("popmin", _uint(tok[1], n))
    raise FormatError(f"line {n}: bad auxiliary operation {s!r}")


def emit_store_strategy(strategy: StoreStrategy, start=None) -> str:
    """Frame-stack strategies only; rows are ``;``-separated fields."""
    if not isinstance(strategy.store, FrameStack):
        raise FormatError("only frame-stack strategies have a text form")
    out = [f"storestrategy player={strategy.player}"]
    out.append("states " + " ".join(sorted(fmt_id(q) for q in strategy.states)))
    if start is not None:
        q, frames = start
        out.append(" ".join(["start", fmt_id(q), *(record_text(r) for r in frames)]))
    rows = []
    for (q, rec), (op, q2, rule) in strategy.choose.items():
        rows.append(f"choose {fmt_id(q)} {record_text(rec)} ; {_aux_text(op)} ; {fmt_id(q2)} ; {rule_text(rule)}")
    for (q, rec, rule), (op, q2) in strategy.update.items():
        rows.append(f"update {fmt_id(q)} {record_text(rec)} ; {rule_text(rule)} ; {_aux_text(op)} ; {fmt_id(q2)}")
    out.extend(sorted(rows))
    return _lines(*out)


def parse_store_strategy(text: str):
    """Returns ``(strategy, start)``."""
    player, states, start = None, (), None
    choose, update = {}, {}
    for n, tok in _records(text, "storestrategy"):
        kind = tok[0]
        if kind == "storestrategy":
            player = _kv(tok[1:], n)[1].get("player")
        elif kind == "states":
            states = tuple(tok[1:])
        elif kind == "start":
            start = (tok[1], tuple(parse_record(r, n) for r in tok[2:]))
        elif kind in ("choose", "update"):
            fields = [f.strip() for f in " ".join(tok[1:]).split(" ; ")]
            if len(fields) != 4:
                raise FormatError(f"line {n}: {kind} row needs four fields")
            head = fields[0].split()
            if len(head) != 2:
                raise FormatError(f"line {n}: row key needs a state and a record")
            key = (head[0], parse_record(head[1], n))
            if kind == "choose":
                choose[key] = (_aux_from(fields[1], n), fields[2], _rule_from(fields[3].split(), n))
            else:
                rule = _rule_from(fields[1].split(), n)
                update[key + (rule,)] = (_aux_from(fields[2], n), fields[3])
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if player not in PLAYERS:
        raise FormatError("storestrategy header needs player=I or player=II")
    order = tuple(sorted(states, key=fmt_id))
    return StoreStrategy(player, order, FrameStack(), choose, update), start


# -- acceptors, transducers and edge-labelled games --------------------------


def parse_acceptor(text: str) -> Acceptor:
    inputs = outputs = None
    nodes, color, initial, delta = [], {}, [], {}
    for n, tok in _records(text, "acceptor"):
        kind = tok[0]
        if kind == "in":
            inputs = tok[1:]
        elif kind == "out":
            outputs = tok[1:]
        elif kind == "node":
            plain, opts = _kv(tok[1:], n)
            if not plain or "color" not in opts:
                raise FormatError(f"line {n}: node needs an id and color=")
            v = plain[0]
            nodes.append(v)
            color[v] = _uint(opts["color"], n)
            if "initial" in plain[1:]:
                initial.append(v)
        elif kind == "trans":
            if len(tok) != 5:
                raise FormatError(f"line {n}: trans needs node, in letter, out letter, node")
            delta[(tok[1], tok[2], tok[3])] = tok[4]
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if inputs is None or outputs is None:
        raise FormatError("missing in/out alphabet line")
    if len(initial) != 1:
        raise FormatError("exactly one initial node is required")
    return Acceptor.build(inputs, outputs, nodes, initial[0], delta, color)


def emit_acceptor(acc: Acceptor) -> str:
    names = id_table(acc.nodes)
    out = ["acceptor", "in " + " ".join(acc.inputs), "out " + " ".join(acc.outputs)]
    pos = {v: i for i, v in enumerate(acc.nodes)}
    for v in acc.nodes:
        flag = " initial" if v == acc.initial else ""
        out.append(f"node {names[v]} color={acc.color[v]}{flag}")
    rows = sorted(
        (pos[v], acc.inputs.index(a), acc.outputs.index(b), a, b, names[t]) for (v, a, b), t in acc.delta.items()
    )
    rows = [(names[acc.nodes[i]], *rest) for i, *rest in rows]
    out.extend(f"trans {v} {a} {b} {t}" for v, _, _, a, b, t in rows)
    return _lines(*out)


def _domain_text(dom: LabelDomain) -> str:
    return "nat" if dom.is_nat else " ".join(dom.letters)


def _domain_from(tokens) -> LabelDomain:
    return LabelDomain() if tokens == ["nat"] else LabelDomain(tokens)


def emit_transducer(t) -> str:
    if isinstance(t, ClassTransducer):
        names = id_table(t.nodes)
        out = ["transducer", "in " + _domain_text(t.dom_in), "out " + _domain_text(t.dom_out)]
        for v in t.nodes:
            out.append(f"node {names[v]}" + (" initial" if v == t.initial else ""))
        for v in t.nodes:
            for cls, nxt, label in t.rows[v]:
                text = format_class(cls, t.dom_in.letters)
                out.append(f"emit {names[v]} class={text} {label} {names[nxt]}")
        return _lines(*out)
    names = id_table(t.nodes)
    out = ["transducer", "in " + " ".join(t.inputs), "out " + " ".join(t.outputs)]
    pos = {v: i for i, v in enumerate(t.nodes)}
    for v in t.nodes:
        out.append(f"node {names[v]}" + (" initial" if v == t.initial else ""))
    rows = sorted((pos[v], t.inputs.index(a), a, b, names[w]) for (v, a), (w, b) in t.delta.items())
    out.extend(f"emit {names[t.nodes[i]]} {a} {b} {w}" for i, _, a, b, w in rows)
    return _lines(*out)


def parse_transducer(text: str):
    dom_in = dom_out = None
    nodes, initial = [], []
    plain_rows, class_rows = {}, {}
    for n, tok in _records(text, "transducer"):
        kind = tok[0]
        if kind == "in":
            dom_in = tok[1:]
        elif kind == "out":
            dom_out = tok[1:]
        elif kind == "node":
            nodes.append(tok[1])
            if "initial" in tok[2:]:
                initial.append(tok[1])
        elif kind == "emit":
            if len(tok) == 5 and tok[2].startswith("class="):
                class_rows.setdefault(tok[1], []).append((tok[2][6:], tok[3], tok[4]))
            elif len(tok) == 5:
                plain_rows[(tok[1], tok[2])] = (tok[4], tok[3])
            else:
                raise FormatError(f"line {n}: bad emit row")
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if dom_in is None or dom_out is None or len(initial) != 1:
        raise FormatError("transducer needs in, out and one initial node")
    if class_rows:
        din, dout = _domain_from(dom_in), _domain_from(dom_out)
        rows = {}
        for v in nodes:
            rows[v] = tuple(
                (parse_class(c, din.letters), nxt, int(label) if dout.is_nat else label)
                for c, label, nxt in class_rows.get(v, [])
            )
        return ClassTransducer(tuple(nodes), din, dout, initial[0], rows)
    return Transducer(tuple(nodes), tuple(dom_in), tuple(dom_out), initial[0], plain_rows)


def parse_elgame(text: str) -> EdgeLabelledGame:
    dom_in = dom_out = None
    v_in, v_out, color, initial = [], [], {}, []
    rows = {}
    for n, tok in _records(text, "elgame"):
        kind = tok[0]
        if kind == "in":
            dom_in = _domain_from(tok[1:])
        elif kind == "out":
            dom_out = _domain_from(tok[1:])
        elif kind == "node":
            plain, opts = _kv(tok[1:], n)
            if not plain or opts.get("side") not in ("in", "out") or "color" not in opts:
                raise FormatError(f"line {n}: node needs an id, side=in|out and color=")
            v = plain[0]
            (v_in if opts["side"] == "in" else v_out).append(v)
            color[v] = _uint(opts["color"], n)
            if "initial" in plain[1:]:
                initial.append(v)
        elif kind == "trans":
            if len(tok) != 4 or not tok[2].startswith("class="):
                raise FormatError(f"line {n}: trans needs <node> class=<class> <node>")
            rows.setdefault(tok[1], []).append((tok[2][6:], tok[3]))
        else:
            raise FormatError(f"line {n}: unknown record {kind!r}")
    if dom_in is None or dom_out is None:
        raise FormatError("missing in/out domain line")
    if len(initial) != 1:
        raise FormatError("exactly one initial node is required")
    parsed = {}
    ins = set(v_in)
    for v, vrows in rows.items():
        dom = dom_in if v in ins else dom_out
        parsed[v] = tuple((parse_class(c, dom.letters), t) for c, t in vrows)
    return EdgeLabelledGame.build(v_in, v_out, dom_in, dom_out, initial[0], parsed, color)


def emit_elgame(game: EdgeLabelledGame) -> str:
    names = id_table(game.v_in + game.v_out)
    out = ["elgame", "in " + _domain_text(game.dom_in), "out " + _domain_text(game.dom_out)]
    for side, vs in (("in", game.v_in), ("out", game.v_out)):
        for v in vs:
            flag = " initial" if v == game.initial else ""
            out.append(f"node {names[v]} side={side} color={game.color[v]}{flag}")
    for v in game.v_in + game.v_out:
        dom = game.domain_of(v)
        for cls, t in game.rows[v]:
            out.append(f"trans {names[v]} class={format_class(cls, dom.letters)} {names[t]}")
    return _lines(*out)


def sniff(text: str) -> str:
    """Header word of a file in one of these formats."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    raise FormatError("empty input")
