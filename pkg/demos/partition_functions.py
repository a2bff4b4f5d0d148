"""Tabulate tableau generating polynomials and compare them with their closed forms.

    python demos/partition_functions.py [max_n]
"""

import math
import sys
from fractions import Fraction

from ratab.verify import MultiPoly, pasep_Z, poly_Y, poly_Y_assemblee, rising

V = ("alpha", "beta", "q", "y")


def main(max_n: int = 4):
    a, b = MultiPoly.var("alpha", V), MultiPoly.var("beta", V)
    print("Y(n,r) over tableaux, with alpha^frow beta^fcol q^fcell y^row:\n")
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            Y = poly_Y(n, r)
            same = "=" if Y == poly_Y_assemblee(n, r) else "!="
            print(f"  Y({n},{r}) = {Y}")
            print(f"           {same} the assemblee-side polynomial")

    print("\nAt q = y = 1 each one collapses to C(n,r) (alpha+beta+r)(alpha+beta+r+1)...:")
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            got = sum(
                c * a ** e[0] * b ** e[1] for e, c in poly_Y(n, r).terms.items()
            )
            want = math.comb(n, r) * rising(a + b + r, n - r)
            print(f"  n={n} r={r}: {'ok' if got == want else 'MISMATCH'}")

    print("\nTwo-species exclusion process normalisation at alpha=1/2, beta=1/3, q=1/4:")
    for n in range(1, max_n + 1):
        vals = [pasep_Z(n, r, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)) for r in range(n + 1)]
        print(f"  n={n}: " + ", ".join(str(v) for v in vals))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
