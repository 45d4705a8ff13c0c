"""Embed a pair of families into regular games over twice as many players.

A pair (H, K) is coherent and complete exactly when its embedded pair is,
so deciding duality for regular games is as hard as in general.
"""
from simplegames import Hypergraph, is_coherent, is_complete, reduce_pair, shift_is_coherent, shift_is_complete_oracle

h = Hypergraph.from_rows(["1100", "0011"])
k = Hypergraph.from_rows(["1010", "1001", "0110", "0101"])
pair = reduce_pair(h, k)
print("H' =", " ".join(pair.hp.rows()))
print("K' =", " ".join(pair.kp.rows()))
print("original pair:  coherent", is_coherent(h, k), " complete", is_complete(h, k))
print("embedded pair:  coherent", shift_is_coherent(pair.hp, pair.kp), " complete", shift_is_complete_oracle(pair.hp, pair.kp))
