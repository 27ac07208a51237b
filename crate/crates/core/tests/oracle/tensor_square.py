#!/usr/bin/env python3
"""Brute-force dimensions of the non-abelian tensor square M*M.

Dense enumeration of every basis instance of RTLeib3-5 over the ambient
(M(x)M) + (M(*)M), rank by Fraction row reduction. Writes one golden file per
algebra. Shares no code with the Rust crate.

    python3 tensor_square.py OUTDIR
"""
import json
import sys
from fractions import Fraction
from itertools import product

ALGEBRAS = {
    "A1": (1, {}),
    "L2": (2, {(1, 1): {0: 1}}),
    "R2": (2, {(0, 1): {0: 1}, (1, 0): {0: -1}}),
}


def bracket(sc, n, u, v):
    out = [Fraction(0)] * n
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            for k, c in sc.get((i, j), {}).items():
                out[k] += a * b * c
    return out


def unit(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def rank(rows):
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


class Square:
    def __init__(self, n, sc):
        self.n, self.sc = n, sc
        self.amb = 2 * n * n

    def br(self, u, v):
        return bracket(self.sc, self.n, u, v)

    def sym(self, block, u, v):
        out = [Fraction(0)] * self.amb
        off = 0 if block == "ot" else self.n * self.n
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                out[off + i * self.n + j] += a * b
        return out

    def ot(self, u, v):
        return self.sym("ot", u, v)

    def oa(self, u, v):
        return self.sym("oa", u, v)

    def relations(self, lie):
        n = self.n
        e = [unit(n, i) for i in range(n)]
        br, ot, oa = self.br, self.ot, self.oa
        rows = []

        def comb(*terms):
            out = [Fraction(0)] * self.amb
            for c, v in terms:
                for k, x in enumerate(v):
                    out[k] += c * x
            return out

        for a, b, c in product(range(n), repeat=3):
            x, y, z = e[a], e[b], e[c]
            # RTLeib3, all four lines, with every action the bracket
            rows.append(comb((1, ot(x, br(y, z))), (-1, ot(br(x, y), z)), (1, ot(br(x, z), y))))
            rows.append(comb((1, oa(x, br(y, z))), (-1, oa(br(x, y), z)), (1, oa(br(x, z), y))))
            rows.append(comb((1, ot(br(x, y), z)), (-1, oa(br(x, z), y)), (1, ot(x, br(z, y)))))
            rows.append(comb((1, oa(br(x, y), z)), (-1, ot(br(x, z), y)), (1, oa(x, br(z, y)))))
            # RTLeib4
            rows.append(comb((1, ot(x, br(y, z))), (1, ot(x, br(z, y)))))
            rows.append(comb((1, oa(x, br(y, z))), (1, oa(x, br(z, y)))))
        for a, b, c, d in product(range(n), repeat=4):
            x1, x2, x3, x4 = e[a], e[b], e[c], e[d]
            # RTLeib5: every line reads [x1,x2] (x) [x3,x4] = [x1,x2] (*) [x3,x4]
            rows.append(comb((1, ot(br(x1, x2), br(x3, x4))), (-1, oa(br(x1, x2), br(x3, x4)))))
        if lie:
            for a, b in product(range(n), repeat=2):
                rows.append(comb((1, oa(e[a], e[b])), (1, ot(e[b], e[a]))))
        return rows

    def dim(self, lie=False):
        r = rank(self.relations(lie))
        return r, self.amb - r

    def classical_lie_dim(self):
        """Lie tensor square: [x,x'](x)y = x(x)[x',y] - x'(x)[x,y],
        x(x)[y,y'] = [y',x](x)y - [y,x](x)y'."""
        n = self.n
        e = [unit(n, i) for i in range(n)]
        amb = n * n

        def t(u, v):
            out = [Fraction(0)] * amb
            for i, a in enumerate(u):
                for j, b in enumerate(v):
                    out[i * n + j] += a * b
            return out

        rows = []
        for a, b, c in product(range(n), repeat=3):
            x, y, z = e[a], e[b], e[c]
            r1 = [p - q + s for p, q, s in zip(t(self.br(x, y), z), t(x, self.br(y, z)), t(y, self.br(x, z)))]
            r2 = [p - q + s for p, q, s in zip(t(x, self.br(y, z)), t(self.br(z, x), y), t(self.br(y, x), z))]
            rows += [r1, r2]
        return amb - rank(rows)


def is_lie(n, sc):
    for i, j in product(range(n), repeat=2):
        a = sc.get((i, j), {})
        b = sc.get((j, i), {})
        for k in set(a) | set(b):
            if a.get(k, 0) + b.get(k, 0) != 0:
                return False
    return True


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "."
    for name, (n, sc) in ALGEBRAS.items():
        sq = Square(n, sc)
        rel, dim = sq.dim()
        doc = {"algebra": name, "ambient_dim": sq.amb, "relation_rank": rel, "dim": dim}
        if is_lie(n, sc):
            _, lie_dim = sq.dim(lie=True)
            doc["lie_regime_dim"] = lie_dim
            doc["classical_lie_dim"] = sq.classical_lie_dim()
        with open(f"{outdir}/tensor-{name}.json", "w") as f:
            json.dump(doc, f, indent=2, sort_keys=True)
            f.write("\n")
        print(json.dumps(doc, sort_keys=True))


if __name__ == "__main__":
    main()
