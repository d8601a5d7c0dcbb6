# Shapovalov Gram matrices for simply-laced types vs the product formula.
import time

from shapovalov.forms import cartan, shapovalov_gram
from shapovalov.divisors import predicted_shapovalov, hecke_block_invariants
from shapovalov.snf import smith_normal_form

for family, rank, d_max in [("A", 1, 5), ("A", 2, 3), ("D", 4, 2), ("E", 6, 1)]:
    spec = cartan(family, rank)
    print(spec.name, "Cartan invariants", spec.invariant_factors)
    for d in range(d_max + 1):
        t0 = time.time()
        G = shapovalov_gram(spec, d)
        computed = smith_normal_form(G).invariant_factors
        predicted = predicted_shapovalov(spec.invariant_factors, d).as_chain()
        print("  d=%d size=%d match=%s (%.2fs)" % (d, G.shape[0], computed == predicted, time.time() - t0))

# type A_{l-1} gives the block invariants of Hecke algebras at an l-th root of unity
for l in (2, 3, 4, 6):
    hb = hecke_block_invariants(l, 2)
    print(l, hb.provenance, list(hb.invariants)[-4:])
