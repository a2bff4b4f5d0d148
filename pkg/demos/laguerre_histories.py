"""Encode signed permutations as marked Laguerre histories and split off the q-factorial.

    python demos/laguerre_histories.py
"""

from collections import Counter

from ratab.assemblee import all_as, all_signed, crossings, inversions, parse_signed
from ratab.laguerre import format_mlh, format_mlh_star, mlh_to_sp, rho, sp_to_mlh, star_to_plain, weight_exponent
from ratab.render import render


def main():
    tau = parse_signed("-9 -8 -2 4 7 -6 -5 1 3")
    H = sp_to_mlh(tau)
    print("signed permutation:", tau)
    print("modified history:  ", format_mlh_star(H))
    print("plain history:     ", format_mlh(star_to_plain(H)))
    print(f"weight q^{weight_exponent(star_to_plain(H))}, crossings {crossings(tau).total}")
    print(render(H, "ascii"))
    assert mlh_to_sp(H) == tau

    nu_tau, sigma = rho(tau)
    print("rho splits it into", nu_tau, "and the ordering", sigma)
    print(f"  {crossings(tau).total} = {crossings(nu_tau).total} + {inversions(sigma)} inversions\n")

    n, r = 5, 3
    sp = Counter(crossings(t).total for t in all_signed(n, r))
    asm = Counter(crossings(t).total for t in all_as(n, r))
    qfact = Counter({0: 1})
    for i in range(1, r + 1):
        nxt = Counter()
        for e, c in qfact.items():
            for k in range(i):
                nxt[e + k] += c
        qfact = nxt
    prod = Counter()
    for e1, c1 in qfact.items():
        for e2, c2 in asm.items():
            prod[e1 + e2] += c1 * c2
    print(f"crossing distribution on SP({n},{r}):", dict(sorted(sp.items())))
    print(f"[{r}]_q! times the assemblee-form distribution:", dict(sorted(prod.items())))
    print("equal:", sp == prod)


if __name__ == "__main__":
    main()
