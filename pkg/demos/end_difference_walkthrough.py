"""From an edge set to an orientable sequence, step by step.

The simplest construction keeps exactly the n-tuples whose last symbol
minus first symbol lands in {1, ..., (k-1)/2} mod k.  Reversing a tuple
negates that difference, so no tuple and its reversal can both be kept;
summing differences around any cycle gives zero, so every vertex is
balanced.  One Eulerian circuit through those edges is the sequence.
"""

import numpy as np

from oseq import (
    ConstructionRecipe,
    Method,
    circuit_to_sequence,
    edge_graph_of_sequence,
    end_difference_graph,
    eulerian_circuit,
    generate,
    is_antisymmetric,
    is_balanced,
    is_connected,
    period_upper_bound,
    verify,
)

k, n = 5, 3

g = end_difference_graph(k, n)
print(f"edge set for k={k}, n={n}: {g.edge_count} tuples")
print("first few edges:", g.edge_tuples()[:6])

# The three certificates behind the construction.
print("antisymmetric:", is_antisymmetric(g)[0])
print("balanced:", is_balanced(g)[0])
print("connected:", is_connected(g)[0])

circuit = eulerian_circuit(g)
seq = circuit_to_sequence(circuit)
print("\nsequence:", "".join(str(s) for s in seq))
print("verified:", bool(verify(seq, n, k)))
print(f"period {seq.size} vs bound {period_upper_bound(k, n)}")

# Reading the n-windows back off the sequence recovers the edge set.
print("round trip ok:", edge_graph_of_sequence(seq, n, k) == g)

# generate() bundles those steps and attaches the recipe.
seq2 = generate(ConstructionRecipe(Method.END_DIFFERENCE, k, n))
print("\ngenerate() agrees:", np.array_equal(seq2.symbols, seq))

# The price of simplicity: for k = 3 and k = 4 the kept difference
# class is a single value, the graph falls apart into several cycles,
# and the construction refuses (see tiny_alphabets.py).
print("\nperiods for larger alphabets:")
for kk in (5, 6, 7, 8, 9):
    s = generate(ConstructionRecipe(Method.END_DIFFERENCE, kk, 3))
    print(f"  k={kk}: period {s.period} (bound {period_upper_bound(kk, 3)})")
