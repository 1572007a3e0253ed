#!/usr/bin/env python3
"""Populate data/orbits/ with Atkin-Lehner-invariant newform orbits.

Requires cypari2. Each output file N=<M>.jsonl holds a header line followed by
one record per Galois orbit of weight-2 newforms of level M whose Atkin-Lehner
eigenvalues are all +1.
"""
import argparse
import json
import os
import sys
import time
from fractions import Fraction

import cypari2

SCHEMA = 1
AP_BOUND = 60

pari = cypari2.Pari()
pari.allocatemem(3 * 10**9)
pari.default("parisizemax", 4 * 10**9)


def primes_upto(n):
    return [int(p) for p in pari(f"primes([2,{n}])")]


def echelon(rows):
    """Row-reduce a list of Fraction rows; rescale each row to a primitive
    integer vector with positive pivot."""
    rows = [r[:] for r in rows]
    piv_row = 0
    ncols = len(rows[0])
    for c in range(ncols):
        pr = next((i for i in range(piv_row, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[piv_row], rows[pr] = rows[pr], rows[piv_row]
        inv = 1 / rows[piv_row][c]
        rows[piv_row] = [x * inv for x in rows[piv_row]]
        for i in range(len(rows)):
            if i != piv_row and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv_row])]
        piv_row += 1
        if piv_row == len(rows):
            break
    out = []
    from math import gcd, lcm
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        ints = [int(x * den) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        out.append([x // g for x in ints])
    return out


def to_fraction(g):
    return Fraction(int(pari.numerator(g)), int(pari.denominator(g)))


def level_records(M, prec):
    pari(f"mf=mfinit([{M},2],0)")
    if int(pari("mfdim(mf)")) == 0:
        return []
    primes = [int(p) for p in pari(f"factor({M})[,1]")]
    pari("E=mfeigenbasis(mf); K=mffields(mf)")
    norb = int(pari("#E"))
    star = [True] * norb
    for p in primes:
        ev = pari(f"mfatkineigenvalues(mf,{p})")
        for i in range(norb):
            if any(int(e) != 1 for e in ev[i]):
                star[i] = False
    recs = []
    for i in range(norb):
        if not star[i]:
            continue
        pol = pari(f"K[{i + 1}]")
        dim = int(pari(f"poldegree(K[{i + 1}])"))
        coefs = pari(f"liftall(mfcoefs(E[{i + 1}],{prec}))")
        var = pari(f"variable(K[{i + 1}])") if dim > 1 else None
        rows = [[Fraction(0)] * prec for _ in range(dim)]
        for n in range(1, prec + 1):
            c = coefs[n]
            for j in range(dim):
                cj = pari.polcoef(c, j, var) if dim > 1 else (c if j == 0 else 0)
                rows[j][n - 1] = to_fraction(cj)
        basis = echelon(rows)
        ap = {}
        for p in primes_upto(AP_BOUND):
            if M % p == 0:
                continue
            if dim == 1:
                cp = pari(f"Pol([1,-({coefs[p]})])")
            else:
                cp = pari(f"charpoly(Mod({coefs[p]},K[{i + 1}]))")
            ap[str(p)] = [int(pari.polcoef(cp, k)) for k in range(dim + 1)]
        recs.append({
            "schema": SCHEMA,
            "level": M,
            "dim": dim,
            "al": {str(p): 1 for p in primes},
            "ap": ap,
            "qexp": basis,
            "prec": prec,
        })
    return recs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("levels", nargs="*", type=int)
    ap.add_argument("--from-json", help="json file with a 'levels' list")
    ap.add_argument("--out", default="data/orbits")
    ap.add_argument("--prec-small", type=int, default=240)
    ap.add_argument("--prec-large", type=int, default=64)
    ap.add_argument("--large-above", type=int, default=2000)
    ap.add_argument("--force", action="store_true")
    args = ap.parse_args()
    levels = list(args.levels)
    if args.from_json:
        levels += json.load(open(args.from_json))["levels"]
    os.makedirs(args.out, exist_ok=True)
    for M in sorted(set(levels)):
        path = os.path.join(args.out, f"N={M}.jsonl")
        if os.path.exists(path) and not args.force:
            continue
        t = time.time()
        prec = args.prec_large if M > args.large_above else args.prec_small
        recs = level_records(M, prec)
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            f.write(json.dumps({"schema": SCHEMA, "level": M, "count": len(recs)}) + "\n")
            for r in recs:
                f.write(json.dumps(r, separators=(",", ":")) + "\n")
        os.replace(tmp, path)
        print(f"{M}: {len(recs)} orbits, dims {[r['dim'] for r in recs]} ({time.time() - t:.1f}s)",
              flush=True)


if __name__ == "__main__":
    sys.exit(main())
