"""How large can the period of an orientable sequence get?

An orientable sequence over Z_k with window length n can never visit a
palindromic window, and a handful of further windows are lost to degree
constraints in the underlying de Bruijn digraph.  Walking through those
exclusions gives the closed-form period bound; this script prints the
bound, its audit trail, and the full comparison table.
"""

from oseq import compute_table, empirical_exclusion_audit, ledger_bound

# Start with one cell: 7-ary sequences with windows of length 4.
report = ledger_bound(7, 4)
print(f"k=7, n=4: period bound {report.closed_form_bound}")
print(f"  usable-edge ledger total: {report.ledger_edge_bound}")
for name, value in report.ledger_terms.items():
    if value:
        print(f"  excluded {name}: {value}")

# Each ledger term corresponds to a class of vertices in the
# palindrome-free de Bruijn digraph whose in- or out-degree forces edges
# to go unused.  The audit recounts those classes by brute force.
audit = empirical_exclusion_audit(7, 4)
print(f"\naudit at k=7, n=4: degree rule holds = {audit.degree_rule_holds}, "
      f"parity rule holds = {audit.parity_rule_holds}")
for cls, count in audit.class_counts.items():
    print(f"  {count:4d} vertices: {cls}")

# The same arithmetic across the whole small-parameter grid, with the
# previously published bound in brackets where it was weaker.
print("\nbound table (previous bound in brackets):")
print(compute_table("bounds", 8, 9).text())
