#!/usr/bin/env python3
"""Regenerate the JSON fixtures in tests/data.

Output is canonical: rationals as reduced "p/q" strings, polynomial terms
sorted by (u, v).
"""
import json
import sys
from fractions import Fraction as F
from pathlib import Path


def qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)


def padd(p, q):
    out = dict(p)
    for k, c in q.items():
        s = tuple(x + y for x, y in zip(out.get(k, (0, 0, 0, 0)), c))
        out[k] = s
    return {k: c for k, c in out.items() if any(c)}


def pmul(p, q):
    out = {}
    for (u1, v1), c1 in p.items():
        for (u2, v2), c2 in q.items():
            out = padd(out, {(u1 + u2, v1 + v2): qmul(c1, c2)})
    return out


def qpoly(*terms):
    """terms: (u, v, w, x, y, z)."""
    return padd({}, {(t[0], t[1]): tuple(F(c) for c in t[2:]) for t in terms[:1]}) if len(terms) == 1 else \
        padd(qpoly(terms[0]), qpoly(*terms[1:]))


def rat(r):
    r = F(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def qpoly_json(p):
    return [{"u": u, "v": v, "c": [rat(x) for x in p[(u, v)]]} for (u, v) in sorted(p)]


def rpoly_json(terms):
    return [{"u": u, "v": v, "c": rat(c)} for (u, v), c in sorted(terms.items()) if c != 0]


def kron(x, y):
    return [[pmul(x[0], y[0]), pmul(x[0], y[1])], [pmul(x[1], y[0]), pmul(x[1], y[1])]]


def mat_json(m):
    return [[qpoly_json(e) for e in row] for row in m]


def rmul(p, q):
    out = {}
    for (u1, v1), c1 in p.items():
        for (u2, v2), c2 in q.items():
            k = (u1 + u2, v1 + v2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c != 0}


def radd(*ps):
    out = {}
    for p in ps:
        for k, c in p.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c != 0}


def rs(c, p):
    return {k: F(c) * v for k, v in p.items()}


def main(dest):
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    files = {}
    one = qpoly((0, 0, 1, 0, 0, 0))
    u = qpoly((1, 0, 1, 0, 0, 0))
    v = qpoly((0, 1, 1, 0, 0, 0))

    files["matrix_pythagorean_345"] = mat_json([[qpoly((0, 0, 5, 0, 0, 0)), qpoly((0, 0, 3, 4, 0, 0))],
                                                [qpoly((0, 0, 3, -4, 0, 0)), qpoly((0, 0, 5, 0, 0, 0))]])
    files["matrix_kron_1u_1v"] = mat_json(kron([one, u], [one, v]))
    x = [qpoly((1, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0)), qpoly((2, 0, 0, 0, 1, 0), (0, 0, F(1, 2), 0, 0, -1))]
    y = [qpoly((0, 1, 0, 0, 0, 1), (1, 0, 2, 0, 0, 0)), qpoly((1, 1, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0), (2, 0, 0, 0, -3, 0))]
    files["matrix_kron_noncommuting"] = mat_json(kron(x, y))
    xv = [qpoly((1, 0, 0, 0, 1, 0), (0, 0, 1, 0, 0, 0)), qpoly((0, 0, 0, 2, 0, 0))]
    yv = [qpoly((2, 0, 1, 0, 0, 1)), qpoly((0, 0, 0, 0, 0, 3), (1, 0, -1, 0, 0, 0))]
    files["matrix_kron_vfree"] = mat_json(kron(xv, yv))
    files["matrix_identity"] = mat_json([[one, {}], [{}, one]])
    files["matrix_zero"] = mat_json([[{}, {}], [{}, {}]])
    files["matrix_left_not_right"] = mat_json([[one, qpoly((0, 0, 0, 1, 0, 0))], [qpoly((0, 0, 0, 0, 1, 0)), qpoly((0, 0, 0, 0, 0, -1))]])

    files["certificate_kron_1u_1v"] = {"x": [qpoly_json(one), qpoly_json(u)], "y": [qpoly_json(one), qpoly_json(v)]}

    files["poly_a"] = qpoly_json(qpoly((1, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0)))
    files["poly_b"] = qpoly_json(qpoly((0, 0, 1, 0, 0, 0), (0, 1, 0, 0, 1, 0), (1, 1, 0, 0, 0, F(1, 3))))

    unit = [{(0, 0): F(1)}, {}, {}, {}, {}, {}]
    files["tuple_unit"] = [rpoly_json(p) for p in unit]
    files["tuple_345"] = [rpoly_json({(0, 0): F(c)}) if c else [] for c in (3, 4, 0, 0, 0, 5)]
    uu, vv, c1 = {(1, 0): F(1)}, {(0, 1): F(1)}, {(0, 0): F(1)}
    u2, v2 = rmul(uu, uu), rmul(vv, vv)
    torus = [rs(4, radd(c1, u2)),
             rmul(radd(rs(3, c1), v2), radd(c1, rs(-1, u2))),
             rs(2, rmul(uu, radd(rs(3, c1), v2))),
             rs(2, rmul(vv, radd(c1, u2))),
             {},
             rmul(radd(rs(5, c1), v2), radd(c1, u2))]
    files["tuple_torus"] = [rpoly_json(p) for p in torus]
    perturbed = list(torus)
    perturbed[4] = {(1, 1): F(1)}
    files["tuple_torus_perturbed"] = [rpoly_json(p) for p in perturbed]

    def vec(*c):
        return [rat(x) for x in c]

    files["surface_e"] = {"family": "E",
                          "alpha": {"center": vec(0, 0, 0), "e1": vec(1, 0, 0), "e2": vec(0, 1, 0)},
                          "beta": {"center": vec(0, 0, 1), "e1": vec(F(3, 5), 0, F(4, 5)), "e2": vec(0, 1, 0)}}
    files["surface_c"] = {"family": "C",
                          "alpha": {"center": vec(0, 0, 0, 0), "e1": vec(1, 0, 0, 0), "e2": vec(0, 1, 0, 0)},
                          "beta": {"center": vec(F(3, 5), 0, 0, 0), "e1": vec(0, 0, F(4, 5), 0),
                                   "e2": vec(0, 0, 0, F(4, 5))}}
    quadric = [[0] * 5 for _ in range(5)]
    quadric[0][0], quadric[4][4], quadric[0][4], quadric[4][0] = 1, 4, -2, -2
    quadric[1][1] = quadric[2][2] = -4
    qj = [[rat(c) for c in row] for row in quadric]
    files["surface_d_torus"] = {"family": "D", "quadric": qj, "param": files["tuple_torus"]}
    files["surface_d_implicit"] = {"family": "D", "quadric": qj}

    for name, doc in files.items():
        (dest / f"{name}.json").write_text(json.dumps(doc, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data")
