"""Build the chain-to-parallel family from a relation, check it, invert it."""

from graphactors.actors import compose_families, identity_family, search_inverse, verify_inverse
from graphactors.families import verify_family
from graphactors.relations import PreconditionError, family_to_relation, relation_to_family
from graphactors.samples import chain_graph, chain_to_parallel_relation, parallel_graph
from graphactors.serialize import dumps, family_to_json

g1, g2 = chain_graph(), parallel_graph()
fwd = relation_to_family(chain_to_parallel_relation(g1, g2))
print("family induced by the relation:")
print(dumps(family_to_json(fwd)))
print("verification:", verify_family(fwd).to_json())

bwd = search_inverse(fwd, max_len=2)
print("inverse found by search:")
print(dumps(family_to_json(bwd)))
print("inverse check:", verify_inverse(fwd, bwd).to_json())
print("compose back to identity:", compose_families(fwd, bwd).omega == identity_family(g2).omega)

try:
    family_to_relation(bwd)
except PreconditionError as exc:
    print("the inverse does not come from a relation:", exc.condition, exc.witness)
