"""Two decisive games that are not weighted, for different reasons.

The Fano plane has no ordering of players that makes it regular, so it is
not even linear.  The nine-player game below is regular, yet no weights
realise it; a small trading certificate shows why.
"""
from simplegames import analyze, family, search_nonweighted_certificate, shift_minimize

fano = family("fano")
print("Fano plane")
print(analyze(fano).format())
print()

nine = family("example4")
rep = analyze(nine, certify=True, max_certificate_total=4)
print("nine-player game")
print(rep.format())
print()

cert = search_nonweighted_certificate(nine, 4)
print("certificate, u above u'")
print(cert.format())
print("shift-minimal winning coalitions:")
for r in shift_minimize(nine).rows():
    print("  ", r)
