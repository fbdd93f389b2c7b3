"""Tabulate the two-radius decision and its common root for r < s <= max."""
import argparse

from pompeiu.decision import two_circle_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--max", type=int, default=8)
    args = ap.parse_args()

    print(f"{'r':>3} {'s':>3}  decision      root")
    for r in range(1, args.max + 1):
        for s in range(r + 1, args.max + 1):
            rep = two_circle_check(args.k, r, s, radius=s, verify=False)
            root = "" if rep.pompeiu else (str(rep.root.exact) if rep.root.exact is not None else f"{rep.root.value:.6g}")
            print(f"{r:>3} {s:>3}  {'pompeiu' if rep.pompeiu else 'not-pompeiu':<12}  {root}")


if __name__ == "__main__":
    main()
