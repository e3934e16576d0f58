#!/usr/bin/env python3
"""Generate D/E representation tables in the reflections-canonical basis.

Each generator acts as sigma_s = Phi_s + t * e_{alpha_s} g_s^T, where Phi_s is
the q-deformed permutation action of s on positive roots and the row vector
g_s is the unique solution of the linear system imposed by the braid
relations, normalised by g_s(alpha_s) = q^2.  The output is the canonical
serialization read by the C++ loader, which re-validates it.

usage: gen_tables.py D4 D5 D6 E6 E7 E8 --out data/tables
"""
import argparse
import json
import pathlib
import re
import sys
import time

import sympy as sp
from sympy.polys.matrices import DomainMatrix

q = sp.Symbol("q")


def cartan(family, n):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if family == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    else:
        raise ValueError(family)
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return a


def positive_roots(a):
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots, frontier = set(simple), list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                c = sum(a[i][j] * b[j] for j in range(n))
                nb = tuple(b[j] - (c if j == i else 0) for j in range(n))
                if all(x >= 0 for x in nb) and any(nb) and nb not in roots:
                    roots.add(nb)
                    nxt.append(nb)
        frontier = nxt
    # height ascending, then descending lex (matches RootSystem's canonical order)
    return sorted(roots, key=lambda b: (sum(b), tuple(-x for x in b)))


def deformed_action(a, roots):
    n, idx = len(a), {b: i for i, b in enumerate(roots)}
    phi = []
    for s in range(n):
        cols = {}
        for b in roots:
            p = sum(a[s][j] * b[j] for j in range(n))
            c = idx[b]
            if b == tuple(int(j == s) for j in range(n)):
                cols[c] = []
            elif p == 0:
                cols[c] = [(c, sp.Integer(1))]
            elif p == 1:
                cols[c] = [(idx[tuple(b[j] - (j == s) for j in range(n))], q)]
            else:
                cols[c] = [(c, 1 - q), (idx[tuple(b[j] + (j == s) for j in range(n))], sp.Integer(1))]
        phi.append(cols)
    return phi


def solve_rows(a, roots, phi):
    n, N = len(a), len(roots)
    idx = {b: i for i, b in enumerate(roots)}
    var = lambda s, c: s * N + c
    rows = []

    def g_phi(u, s, b):
        return {var(u, r): c for r, c in phi[s][b]}

    def add(d, e, scale=1):
        for k, v in e.items():
            d[k] = d.get(k, 0) + scale * v

    for s in range(n):
        for u in range(n):
            if s == u:
                continue
            for b in range(N):
                if a[s][u] == 0:
                    d = g_phi(u, s, b)
                    add(d, {var(u, b): 1}, -1)
                    rows.append((d, 0))
                elif s < u:
                    d = g_phi(u, s, b)
                    add(d, g_phi(s, u, b), -1)
                    rows.append((d, 0))
            if a[s][u] == -1:
                for b in range(N):
                    d = {var(s, b): q}
                    add(d, g_phi(u, s, b), 1 - q)
                    for r, c in phi[u][b]:
                        for r2, c2 in phi[s][r]:
                            add(d, {var(u, r2): c * c2}, -1)
                    rows.append((d, 0))
    for s in range(n):
        rows.append(({var(s, idx[tuple(int(j == s) for j in range(n))]): 1}, q**2))

    field = sp.QQ.frac_field(q)
    nv = n * N
    dense = [[field.zero] * (nv + 1) for _ in rows]
    for i, (d, rhs) in enumerate(rows):
        for k, v in d.items():
            dense[i][k] = field.from_sympy(sp.sympify(v))
        dense[i][nv] = field.from_sympy(sp.sympify(rhs))
    rref, pivots = DomainMatrix(dense, (len(rows), nv + 1), field).rref()
    if len(pivots) != nv or nv in pivots:
        raise RuntimeError("linear system is not uniquely solvable")
    rref = rref.to_Matrix()
    return {p: sp.cancel(rref[i, nv]) for i, p in enumerate(pivots)}


def laurent_terms(expr):
    """Rational function with monomial denominator -> {e_q: Rational}."""
    num, den = sp.fraction(sp.cancel(expr))
    dpoly = sp.Poly(den, q)
    if len(dpoly.terms()) != 1:
        raise RuntimeError(f"non-Laurent coefficient {expr}")
    (dexp,), dcoef = dpoly.terms()[0]
    out = {}
    for (e,), c in sp.Poly(num, q).terms():
        out[e - dexp] = sp.Rational(c) / sp.Rational(dcoef)
    return out


def build_table(name):
    m = re.fullmatch(r"([ADE])(\d+)", name)
    if not m:
        raise ValueError(f"unsupported type {name}")
    family, n = m.group(1), int(m.group(2))
    a = cartan(family, n)
    roots = positive_roots(a)
    phi = deformed_action(a, roots)
    sol = solve_rows(a, roots, phi)
    N = len(roots)
    gens = []
    for s in range(n):
        simple = roots.index(tuple(int(j == s) for j in range(n)))
        entries = {}
        for c in range(N):
            for r, coef in phi[s][c]:
                for e, v in laurent_terms(coef).items():
                    entries.setdefault((r, c), {})
                    entries[(r, c)][(e, 0)] = entries[(r, c)].get((e, 0), 0) + v
            for e, v in laurent_terms(sol[s * N + c]).items():
                entries.setdefault((simple, c), {})
                entries[(simple, c)][(e, 1)] = entries[(simple, c)].get((e, 1), 0) + v
        rows = []
        for (r, c) in sorted(entries):
            terms = [[int(v.p), int(v.q), eq, et] for (eq, et), v in sorted(entries[(r, c)].items()) if v != 0]
            if terms:
                rows.append([r, c, terms])
        gens.append({"index": s + 1, "entries": rows})
    return {
        "type": name,
        "dimension": N,
        "basis": "reflections-canonical",
        "metadata": {
            "convention": "sigma_s = Phi_s + t e_{alpha_s} g_s^T, g_s(alpha_s) = q^2",
            "generator": "tools/gen_tables.py",
        },
        "generators": gens,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("types", nargs="+")
    ap.add_argument("--out", default="data/tables")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in args.types:
        t0 = time.time()
        table = build_table(name)
        (out / f"{name}.json").write_text(json.dumps(table, separators=(",", ":")) + "\n")
        print(f"{name}: dimension {table['dimension']}, {time.time() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
