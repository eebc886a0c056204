"""Tabulate growth class, quiver size and Hilbert series over random presentations.

Prints one tab-separated line per presentation, handy for eyeballing how the
cycle structure of the quiver shows up in the coefficients.
"""

import argparse

from ufna.corpus import RandomSpec, random_corpus
from ufna.hilbert import hilbert_algebra
from ufna.quiver import build_quiver, cycle_period, growth_class


def fmt_poly(coeffs):
    return " ".join(map(str, coeffs)) or "0"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--generators", type=int, default=3)
    ap.add_argument("--expand", type=int, default=12)
    args = ap.parse_args()

    spec = RandomSpec(max_generators=args.generators)
    print("relations\td\t|V|\t|E|\tperiod\tgrowth\tdenominator\tdims")
    for p in random_corpus(args.count, seed=args.seed, spec=spec):
        q = build_quiver(p)
        series = hilbert_algebra(p, q)
        rels = " ".join(p.spell(r) for r in p.relations) or "-"
        print("\t".join([
            f"{{{rels}}} over {''.join(p.generators)}",
            str(q.d), str(len(q.vertices)), str(len(q.arrows)), str(cycle_period(q)),
            str(growth_class(q)), fmt_poly(series.denominator),
            fmt_poly(series.expand(args.expand)),
        ]))


if __name__ == "__main__":
    main()
