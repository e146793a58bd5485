"""Produce the asymptotics table over [10^4, 10^10] and a gnuplot script next to it."""

import argparse
import sys

from hyperhull.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="scan.csv")
    ap.add_argument("--jobs", default="1")
    a = ap.parse_args()
    sys.exit(main(["scan", "--n-min", "10000", "--n-max", "10000000000", "--points", "20",
                   "--jobs", a.jobs, "--out", a.out, "--gnuplot", a.out.rsplit(".", 1)[0] + ".gp"]))
