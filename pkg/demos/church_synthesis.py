"""Church synthesis: from a specification automaton to a transducer.

Three specifications. Copying the input is realizable; predicting the next
input is not; over the natural numbers, echoing the parity of each input is
realized by a transducer that outputs the least label of each class.
"""
import random

from churchsynth import catalog
from churchsynth.generate import random_lasso
from churchsynth.synthesis import (
    LassoWordPair,
    check_pair,
    decide_realizability,
    extract_transducer,
    synthesize_from_elgame,
    transducer_run,
)

acc = catalog.equality_acceptor()
res = decide_realizability(acc)
t = extract_transducer(acc, res.output_strategy, res.regions)
x = random_lasso(random.Random(0), acc.inputs)
y = transducer_run(t, x)
print(f"equality: {res.verdict}; on input {x} the transducer answers {y}; accepted: {check_pair(acc, LassoWordPair(x, y))}")

pred = decide_realizability(catalog.predictor_acceptor())
print(f"predictor: {pred.verdict} ({len(pred.arena.vertices)}-vertex game)")

syn = synthesize_from_elgame(catalog.echo_parity_elgame())
print("echo parity:", "realizable" if syn.realizable else "unrealizable")
print("  outputs for inputs 0..9:", [syn.transducer.step("ok", n)[1] for n in range(10)])
