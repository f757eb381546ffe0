"""From a regular expression to a graph representation.

The line 0..12 carries labels 0, 1, -1 on its vertices. The expression
(((0 1)^3)* + ((0 -1)^3)*) 0 connects n to every n +- 3m. We build the
language edges directly, then the representing graph, and check that walking
through the representation induces exactly the same edges.
"""
from churchsynth import catalog
from churchsynth.labelled import edges_by_language, normalize_dfa, represent_by_regexp
from churchsynth.regex import compile_regex
from churchsynth.representation import GraphRepresentation, induced_edges

g = catalog.line_graph(12)
dfa = compile_regex("(((0 1)^3)* + ((0 -1)^3)*) 0", alphabet=("0", "1", "-1"))
pairs = edges_by_language(g, dfa).pairs
print(f"{len(pairs)} language edges, e.g. from 4:", sorted(b for a, b in pairs if a == 4))

norm = normalize_dfa(dfa)
big = represent_by_regexp(g, norm)
rep = GraphRepresentation(big, frozenset((v, norm.initial) for v in g.vertices))
induced = {(a[0], b[0]) for a, b in induced_edges(rep)}
print(f"representing graph: {len(big.vertices)} vertices, max out-degree {big.max_out_degree()}")
print("induced edges equal language edges:", induced == pairs)
