"""Find the smallest ball radius on which a Pompeiu family pins f to zero.

For each pair of distinct nonempty radius sets drawn from {1..top}, the
finite translate system on the radius-R ball is solved exactly and we report
the least R for which every solution vanishes on the radius-`inner` ball.
"""
import argparse
from itertools import combinations

from pompeiu.decision import RadialSetFamily, free_pompeiu_check
from pompeiu.oracles import pompeiu_forcing


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--top", type=int, default=3)
    ap.add_argument("--inner", type=int, default=2)
    ap.add_argument("--max-radius", type=int, default=8)
    args = ap.parse_args()

    radii = range(1, args.top + 1)
    subsets = [frozenset(c) for n in radii for c in combinations(radii, n)]
    for a, b in combinations(subsets, 2):
        if not free_pompeiu_check(RadialSetFamily(args.k, [a, b]), verify=False).pompeiu:
            continue
        start = max(max(a), max(b)) + args.inner
        hit = next((R for R in range(start, args.max_radius + 1)
                    if pompeiu_forcing(args.k, [a, b], radius=R, inner=args.inner)), None)
        print(f"{sorted(a)!s:>10} {sorted(b)!s:>10}  forced from R = {hit if hit else '>' + str(args.max_radius)}")


if __name__ == "__main__":
    main()
