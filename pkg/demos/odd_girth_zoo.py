"""
Odd girth and the three-way split
=================================

For a normal digraph the odd girth is capped at 2D + 1, and hitting
the cap with small spectral degree forces distance-regularity.  Every
normal digraph lands in at least one of three bins: bipartite (no odd
cycles at all), generalized odd graph, or small odd girth.  This
script sorts a small zoo into the bins.
"""

from dgexcess import (INFINITE, AnalysisContext, complete, directed_cycle,
                      generalized_odd_graph_check, hypercube, kneser_odd_graph,
                      odd_girth_walks, paley_tournament, petersen, trichotomy)

ZOO = [
    ("K_4", complete(4)),
    ("C_4", directed_cycle(4)),
    ("C_5", directed_cycle(5)),
    ("Q_3", hypercube(3)),
    ("Petersen", petersen()),
    ("O_3", kneser_odd_graph(3)),
    ("Paley-7", paley_tournament(7)),
]

for label, G in ZOO:
    ctx = AnalysisContext(G)
    result = trichotomy(ctx)
    print(f"{label:9s} odd girth {result.odd_girth!s:9s} "
          f"d={result.d} D={result.diameter} -> {', '.join(result.branches)}")

# The generalized odd graphs in the zoo: distance-regular, symmetric,
# and odd girth exactly 2D + 1.  The Petersen graph (D = 2, odd girth
# 5) and the complete graphs (D = 1, odd girth 3) qualify; the cube is
# bipartite so it cannot.
print()
for label, G in ZOO:
    verdict = generalized_odd_graph_check(G)
    print(f"{label:9s} generalized odd graph: {verdict.decision}")

# The cap itself, on the whole zoo: the first odd closed walk never
# comes later than 2D + 1 steps on a normal digraph.
print()
for label, G in ZOO:
    ctx = AnalysisContext(G)
    g_odd = odd_girth_walks(G)
    if g_odd is not INFINITE:
        bound = 2 * ctx.ds.diameter + 1
        print(f"{label:9s} {g_odd} <= {bound}")
