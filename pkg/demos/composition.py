"""Compose families induced by a chain of random covers and check the result."""

import random

from graphactors.actors import compose_families
from graphactors.families import verify_family
from graphactors.randomgen import random_cover, random_graph
from graphactors.relations import relation_to_family

rng = random.Random(3)
base = random_graph(rng, max_vertices=3, max_edges=4, acyclic=False, name="A0", prefix="a")
fams = []
for i in (1, 2):
    cover, rel = random_cover(rng, base, name=f"A{i}")
    print(f"{cover.name}: {len(cover.vertices)} vertices, {len(cover.edges)} edges over {base.name}")
    fams.append(relation_to_family(rel))
    base = cover
comp = compose_families(*fams)
rep = verify_family(comp)
print(f"composite family of {comp.source_graph.name} in {comp.ambient_graph.name}:",
      "accepted" if rep.accepted else "rejected", "nondegenerate" if rep.nondegenerate else "degenerate")
