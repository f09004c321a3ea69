#!/usr/bin/env python3
"""Independent reference pipeline written on top of sympy.

Recomputes the hyperelliptic lambda=(1..8) Jacobian-ring quantities with a
separate code path (sympy Groebner bases and sympy Matrix ranks) and prints
them as JSON. The values are frozen into tests/fixtures/oracle_lambda_1_8.json
and checked by the C++ suites.

Usage: jacobian_oracle.py [--charvar-invariants] [--modulus P]
"""
import argparse
import itertools
import json
import sys

import sympy as sp


def glex_desc(monos, nvars):
    # total degree first, then lexicographic with variable 0 largest
    return sorted(monos, key=lambda e: (sum(e), tuple(e)), reverse=True)


def exps_of_degree(nvars, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for c in combo:
            e[c] += 1
        out.append(tuple(e))
    return glex_desc(out, nvars)


def terms_json(expr, syms):
    # same layout as the library's polynomial JSON: descending glex
    terms = sp.Poly(expr, *syms, domain="QQ").terms()
    terms = sorted(terms, key=lambda t: (sum(t[0]), tuple(t[0])), reverse=True)
    return [{"coeff": str(c), "exps": list(e)} for e, c in terms]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--charvar-invariants", action="store_true")
    ap.add_argument("--modulus", type=int, default=32003)
    args = ap.parse_args()

    xs = sp.symbols("x0:8")
    ys = sp.symbols("y1:5")
    gens = list(xs) + list(ys)
    lam = list(range(1, 9))
    A = [[sp.Integer(l) ** i for l in lam] for i in range(4)]
    f = [sum(A[i][j] * xs[j] ** 2 for j in range(8)) for i in range(4)]
    F = sum(ys[i] * f[i] for i in range(4))
    jac = [sp.diff(F, g) for g in gens]

    G = sp.groebner(jac, *gens, order="grlex", domain="QQ")

    def mono(e):
        return sp.Mul(*[g ** k for g, k in zip(gens, e)])

    def nf(p):
        return G.reduce(sp.expand(p))[1]

    def is_basis_elt(e):
        m = mono(e)
        return sp.expand(nf(m) - m) == 0

    def is_h_invar(e):
        for i in range(7):
            if (e[i] + e[i + 1]) % 2:
                return False
        return (e[0] + e[7]) % 2 == 0

    basis = []
    for p in range(3):
        comp = []
        for xe in exps_of_degree(8, 2 * p):
            for ye in exps_of_degree(4, p):
                e = tuple(xe) + tuple(ye)
                if is_h_invar(e) and is_basis_elt(e):
                    comp.append(e)
        basis.append(comp)
    top = tuple([0] * 7 + [6] + [0, 0, 0, 3])
    top_ok = is_h_invar(top) and is_basis_elt(top)
    basis.append([top])
    dims = [len(c) for c in basis]
    flat = [e for c in basis for e in c]
    index = {e: k for k, e in enumerate(flat)}

    def poly2vec(p):
        r = sp.Poly(nf(p), *gens, domain="QQ")
        v = [sp.Integer(0)] * 20
        for e, c in r.terms():
            if tuple(e) not in index:
                if is_h_invar(e):
                    raise RuntimeError("off-basis residue %s" % (e,))
                continue
            v[index[tuple(e)]] = c
        return v

    # Higgs matrices: row k of theta_j = poly2vec(e_j * b_k)
    thetas = []
    for j in range(9):
        w = mono(basis[1][j])
        thetas.append(sp.Matrix([poly2vec(w * mono(b)) for b in flat]))

    # symmetric-square indexing exactly as ijpos, 1-based
    def ijpos(i, j, n):
        if i > j:
            i, j = j, i
        p = n - i + 1
        return n * (n + 1) // 2 - p * (p + 1) // 2 + (j - i) + 1

    n20 = 20
    pairs = {}
    for i in range(1, 21):
        for j in range(i, 21):
            pairs[ijpos(i, j, n20)] = (i, j)

    def im_theta(th, pos):
        i, j = pairs[pos]
        T = thetas[th]
        res = [sp.Integer(0)] * 210
        for k in range(1, 21):
            c = T[j - 1, k - 1]
            if c != 0:
                res[ijpos(i, k, n20) - 1] += c
        for k in range(1, 21):
            c = T[i - 1, k - 1]
            if c != 0:
                res[ijpos(k, j, n20) - 1] += c
        return res

    def image(rows):
        out = []
        for v in rows:
            for th in range(9):
                acc = [sp.Integer(0)] * 210
                for pos in range(1, 211):
                    if v[pos - 1] != 0:
                        im = im_theta(th, pos)
                        acc = [a + v[pos - 1] * b for a, b in zip(acc, im)]
                out.append(acc)
        M = sp.Matrix(out)
        R, piv = M.rref()
        return [list(R.row(k)) for k in range(len(piv))]

    u51 = []
    for i in range(1, 10):
        v = [sp.Integer(0)] * 210
        v[ijpos(1, 1 + i, n20) - 1] = 1
        u51.append(v)
    u42 = image(u51)
    u33 = image(u42)

    # first characteristic subvariety
    def ijpos9(i, j):
        return ijpos(i, j, 9)

    M1 = [[None] * 9 for _ in range(45)]
    for i in range(1, 10):
        for j in range(i, 10):
            vec = poly2vec(mono(basis[1][i - 1]) * mono(basis[1][j - 1]))
            M1[ijpos9(i, j) - 1] = vec[10:19]
    z = sp.symbols("z1:10")
    eqs = []
    for l in range(9):
        g = 0
        for i in range(1, 10):
            for j in range(i, 10):
                la = 1 if i == j else 2
                g += la * M1[ijpos9(i, j) - 1][l] * z[i - 1] * z[j - 1]
        eqs.append(sp.expand(g))

    # second characteristic subvariety
    cubic = 0
    for i, j, k in itertools.combinations_with_replacement(range(1, 10), 3):
        vec = poly2vec(mono(basis[1][i - 1]) * mono(basis[1][j - 1]) * mono(basis[1][k - 1]))
        la = {1: 1, 2: 3, 3: 6}[len({i, j, k})]
        cubic += la * vec[19] * z[i - 1] * z[j - 1] * z[k - 1]
    cubic = sp.expand(cubic)

    out = {
        "lambda": lam,
        "gb_size": len(G.exprs),
                "dims": dims,
        "top_class_valid": bool(top_ok),
        "basis": [[list(e) for e in c] for c in basis],
        "U51": len(u51),
        "U42": len(u42),
        "U33": len(u33),
        "charvar1_equations": [terms_json(e, z) for e in eqs],
        "charvar2_equation": terms_json(cubic, z),
    }

    if args.charvar_invariants:
        # Hilbert polynomial of CSR/(eqs) from the leading-term ideal mod p
        Gz = sp.groebner(eqs, *z, order="grevlex", modulus=args.modulus)
        lts = [sp.Poly(g, *z).monoms(order="grevlex")[0] for g in Gz.exprs]

        def hf(d):
            cnt = 0
            for e in exps_of_degree(9, d):
                if not any(all(a >= b for a, b in zip(e, lt)) for lt in lts):
                    cnt += 1
            return cnt

        vals = [hf(d) for d in range(0, 16)]
        # fit Hilbert polynomial on the tail by finite differences
        t = sp.symbols("t")
        for start in range(0, 8):
            pts = list(range(start, 16))
            P = sp.interpolate([(d, vals[d]) for d in pts[:9]], t)
            if all(P.subs(t, d) == vals[d] for d in pts):
                break
        P = sp.expand(P)
        dim = sp.degree(P, t) if P != 0 else -1
        genus = (-1) ** dim * (P.subs(t, 0) - 1)
        out["charvar1_hilbert_function"] = vals
        out["charvar1_hilbert_polynomial"] = str(P)
        out["charvar1_dimension"] = int(dim)
        out["charvar1_genus"] = int(genus)
        out["charvar1_field_modulus"] = args.modulus

    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
