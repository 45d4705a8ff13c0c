"""Count games by property for small n.

"regular" means regular in the given player order (player n strongest);
"linear" allows any relabelling.  Every regular decisive game with at most
six players turns out to be weighted, and the same holds for the 135
fixed-order regular decisive games with seven players.
"""
from time import perf_counter

from simplegames import census, regular_decisive_census

for n in range(1, 6):
    reg = census(n, "regular & decisive")
    lin = census(n, "linear & decisive")
    print(f"n={n}: {reg.total} antichains, {lin.matched} linear decisive, {reg.matched} regular decisive")

t0 = perf_counter()
print("n=6 regular decisive, not weighted:", census(6, "regular & decisive & !weighted").matched)
print(f"({perf_counter() - t0:.1f} s)")

for line in regular_decisive_census(7).lines():
    print(line)
