"""What happens below k = 5, where the main construction gives out.

For k = 3 and k = 4 the end-difference edge set keeps a single
difference class, every vertex has in- and out-degree 1, and the graph
is a disjoint union of short cycles: no single circuit covers it.  The
state space is tiny enough here to search every antisymmetric closed
trail outright, which both certifies the failure and finds the true
optimum.
"""

from oseq import (
    ConstructionError,
    ConstructionRecipe,
    Method,
    exhaustive_max_period,
    generate,
    period_upper_bound,
    verify,
)

# The refusal is explicit and carries the component breakdown.
for k, n in [(3, 3), (3, 4), (4, 3)]:
    try:
        generate(ConstructionRecipe(Method.END_DIFFERENCE, k, n))
    except ConstructionError as exc:
        print(f"k={k}, n={n}: {exc}")

# n = 2 is the exception: the single difference class is one cycle.
for k in (3, 4):
    seq = generate(ConstructionRecipe(Method.END_DIFFERENCE, k, 2))
    print(f"k={k}, n=2 still works: {''.join(str(s) for s in seq.symbols)}")

# Exhaustive search over closed trails settles the tiny cases exactly.
print()
for k, n in [(2, 2), (3, 2), (4, 2), (2, 5), (3, 3), (4, 3)]:
    outcome = exhaustive_max_period(k, n)
    bound = period_upper_bound(k, n)
    label = "exact" if outcome.exact else "lower bound"
    print(f"k={k}, n={n}: best period {outcome.period} ({label}), "
          f"bound {bound}, {outcome.nodes_expanded} nodes")
    if outcome.witness:
        assert verify(list(outcome.witness), n, k).accepted
        print(f"  witness: {''.join(str(s) for s in outcome.witness)}")

# Binary sequences need windows of length 5 before any exist at all,
# and the lifted construction picks up k = 3 and 4 from n = 3 onward
# (see lempel_lift_pipeline.py).
