#!/usr/bin/env python3
"""Regenerate the classical modular polynomial data files (data/phiN.txt).

The polynomial Phi_N(X, Y) is recovered from q-expansions of the j-function:
it is the unique symmetric integer polynomial of degree N+1 in each variable,
normalised by the X^(N+1) coefficient being 1, with Phi_N(j(q), j(q^N)) = 0.
The linear system is solved exactly over the rationals.

Usage: gen_modular_polynomials.py N [N ...] [--outdir DIR]
"""
import argparse
import hashlib
from fractions import Fraction
from pathlib import Path


def j_series(prec):
    """Coefficients of q*j(q) = 1 + 744 q + ... up to q^(prec-1)."""
    e4 = [0] * prec
    e4[0] = 1
    for n in range(1, prec):
        e4[n] = 240 * sum(d ** 3 for d in range(1, n + 1) if n % d == 0)
    # eta^24 / q = prod (1 - q^n)^24
    eta = [0] * prec
    eta[0] = 1
    for n in range(1, prec):
        for _ in range(24):
            for k in range(prec - 1, n - 1, -1):
                eta[k] -= eta[k - n]
    num = mul(mul(e4, e4, prec), e4, prec)
    # invert eta
    inv = [0] * prec
    inv[0] = 1
    for k in range(1, prec):
        inv[k] = -sum(eta[i] * inv[k - i] for i in range(1, k + 1))
    return mul(num, inv, prec)


def mul(a, b, prec):
    out = [0] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for k, y in enumerate(b[: prec - i]):
                out[i + k] += x * y
    return out


def modular_polynomial(N):
    deg = N + 1
    pole = deg + N * deg  # largest pole order among monomials
    extra = 12
    prec = pole + extra + 1
    jq = j_series(prec)  # q^{-1} * jq
    # j(q^N) as q^{-N} * jqN with jqN in powers of q
    jqN = [0] * prec
    for k in range(0, prec):
        if k * N < prec:
            jqN[k * N] = jq[k]
    powx = [[1] + [0] * (prec - 1)]
    powy = [[1] + [0] * (prec - 1)]
    for _ in range(deg):
        powx.append(mul(powx[-1], jq, prec))
        powy.append(mul(powy[-1], jqN, prec))
    unknowns = [(a, b) for a in range(deg + 1) for b in range(a, deg + 1)]
    unknowns.remove((0, deg))  # normalised: X^{N+1} + Y^{N+1} coefficient 1
    # each monomial sum X^a Y^b (+ X^b Y^a) as a Laurent series in q starting at q^{-pole}
    def series(a, b):
        out = [0] * (prec)
        for (x, y) in {(a, b), (b, a)}:
            shift = pole - x - N * y
            s = mul(powx[x], powy[y], prec)
            for k in range(prec - shift):
                out[k + shift] += s[k]
        return out
    cols = [series(a, b) for (a, b) in unknowns]
    rhs = [-x for x in series(0, deg)]
    rows = [[Fraction(c[k]) for c in cols] + [Fraction(rhs[k])] for k in range(prec)]
    n = len(unknowns)
    rank = 0
    pivots = []
    for col in range(n):
        pr = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        iv = 1 / rows[rank][col]
        rows[rank] = [x * iv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank != n:
        raise RuntimeError(f"underdetermined system for N={N}: rank {rank} < {n}")
    for i in range(rank, len(rows)):
        if rows[i][n] != 0:
            raise RuntimeError("inconsistent system")
    coeffs = {(0, deg): 1}
    for i, col in enumerate(pivots):
        v = rows[i][n]
        if v.denominator != 1:
            raise RuntimeError("non-integral coefficient")
        if v != 0:
            coeffs[unknowns[col]] = int(v)
    return coeffs


def write(N, coeffs, outdir):
    body = "".join(
        f"{a} {b} {c}{' S' if a != b else ''}\n" for (a, b), c in sorted(coeffs.items())
    )
    digest = hashlib.sha256(body.encode()).hexdigest()
    path = Path(outdir) / f"phi{N}.txt"
    path.write_text(f"PHI N={N} terms={len(coeffs)} sha256={digest}\n" + body)
    return path


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("levels", type=int, nargs="+")
    ap.add_argument("--outdir", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    for N in args.levels:
        print(write(N, modular_polynomial(N), args.outdir))


if __name__ == "__main__":
    main()
