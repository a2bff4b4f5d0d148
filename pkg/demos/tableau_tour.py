"""Follow one extended tableau through the bijections and watch its statistics move.

    python demos/tableau_tour.py [--svg out.svg]
"""

import argparse

from ratab.assemblee import eps_word, format_cycles, format_word, signed_stats
from ratab.bijections import arrow_zigzag, insertion, zeta, zeta_inverse
from ratab.render import render
from ratab.tableaux import compute_stats, flatten, format_rat, parse_rat, restrict, split

TABLEAU = """\
shape: 122101020
arrows: U@(1,5) U@(1,9) L@(2,6) U@(4,7) L@(8,9)
"""


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--svg", help="also write the tableau as SVG")
    args = ap.parse_args()

    R = parse_rat(TABLEAU)
    st = compute_stats(R)
    print(format_rat(R))
    print(f"free cells {st.fcell}, free rows {st.free_rows}, up-arrows on top {st.topup}, rows {st.row}")

    print("\nDropping the top diagonal gives the plain tableau:")
    base = restrict(R)
    print(format_rat(base))
    print(f"its free columns {compute_stats(base).free_cols} are where the top strip held up-arrows")

    print("\nInsertion, its e-word, and the arrow zigzag (which is the Foata form of that word):")
    pi = insertion(R)
    print(" ", pi)
    print(" ", format_word(eps_word(pi)))
    print(" ", format_cycles(arrow_zigzag(R)))

    print("\nThe zigzag through free and up-arrow cells gives a signed permutation:")
    tau = zeta(R)
    s = signed_stats(tau)
    print(" ", tau)
    rows = [
        ("free cells", st.fcell, "crossings", s.cro),
        ("tiles", st.tile, "shape-inversions", s.sinv),
        ("rows", st.row, "weak excedances", s.wex),
        ("free rows", st.frow, "special LR-maxima", s.lrmax),
        ("top up-arrows", st.topup, "special RL-minima", s.rlmin),
    ]
    for a, x, b, y in rows:
        print(f"  {a:>14} {x:>3}   {b:<18} {y:>3}")
    assert zeta_inverse(tau) == R

    print("\nConnected pieces of the plain tableau:")
    for labels, P in split(base):
        print(f"  {labels}: {P.word.text()}")

    print("\nFlattened into an alternative tableau with e-rows on top:")
    print(format_rat(flatten(R)))

    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render(R, "svg"))
        print(f"\nwrote {args.svg}")


if __name__ == "__main__":
    main()
