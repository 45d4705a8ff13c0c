"""Walk through the set operators on a three-player family.

Rows are written with player n on the left, so "100" is the coalition {3}.
"""
from simplegames import Hypergraph, complement_family, minimize, responds, transversal, transversal_kernel


def show(title, masks, n):
    print(f"{title:>8}: " + " ".join(format(z, f"0{n}b") for z in sorted(masks)))


h = Hypergraph.from_rows(["011", "100", "111"])
n = h.n
show("H", h.edges, n)
show("not H", complement_family(h).edges, n)
show("mu H", minimize(h).edges, n)
show("nu H", [z for z in range(1 << n) if responds(h, z)], n)
show("tau H", [z for z in range(1 << n) if transversal(h, z)], n)
show("lambda H", transversal_kernel(h).edges, n)
