"""Print the mean-value hypothesis table for all pairs n < m <= radius."""
import argparse

from pompeiu.decision import mvp_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--radius", type=int, default=10)
    args = ap.parse_args()

    scan = mvp_scan(args.k, args.radius)
    R = args.radius
    print("n\\m " + " ".join(f"{m:>2}" for m in range(2, R + 1)))
    for n in range(1, R):
        cells = []
        for m in range(2, R + 1):
            cells.append(" ." if m <= n else (" +" if scan.table[(n, m)] else " -"))
        print(f"{n:>3} " + " ".join(cells))
    print()
    for cls, row in scan.parity_summary().items():
        print(f"{cls:>10}: {row['pass']}/{row['total']}")


if __name__ == "__main__":
    main()
