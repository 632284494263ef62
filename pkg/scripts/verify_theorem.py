"""Replay the eps = phi argument for a few polarizations and print the cited step chain."""
import argparse

from enriques.cli import parse_class
from enriques.exceptional import verify_eps_equals_phi


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("classes", nargs="*", default=["2*E1+E2", "E1+E2", "2*E9+2*E10+2*E910"])
    args = ap.parse_args()
    for text in args.classes:
        cert = verify_eps_equals_phi(parse_class(text).num)
        print(f"H = {text}: verdict {cert.verdict.value}, valid {cert.validate()}")
        for i, s in enumerate(cert.steps, 1):
            mark = "ok " if s.ok else "BAD"
            print(f"  {i:>2} {mark} [{s.citation}] {s.claim}")


if __name__ == "__main__":
    main()
