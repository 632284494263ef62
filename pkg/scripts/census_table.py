"""Print the component census for a range of even squares, checked against the box oracle."""
import argparse

from enriques.fundrep import enumerate_components
from enriques.invariants import phi
from enriques.oracles import census_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-square", type=int, default=20)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--no-oracle", action="store_true", help="skip the exhaustive cross-check")
    args = ap.parse_args()

    print(f"{'L^2':>4} {'genus':>5} {'count':>5}  oracle  phi values")
    for sq in range(2, args.max_square + 1, 2):
        rows = enumerate_components(sq, threads=args.threads)
        if args.no_oracle:
            status = "-"
        else:
            status = "ok" if [(r.a, r.epsilon) for r in rows] == census_oracle(sq) else "MISMATCH"
        phis = sorted({phi(r.as_class()) for r in rows})
        print(f"{sq:>4} {1 + sq // 2:>5} {len(rows):>5}  {status:<6}  {phis}")


if __name__ == "__main__":
    main()
