#!/usr/bin/env python3
"""Brute-force oracle for the derived test fixtures.

Everything here is recomputed from first principles with explicit Gram
matrices and Fraction arithmetic, sharing no code with the C++ library.
Run without arguments to rewrite tests/fixtures/derived_fixtures.json, or
with --check to fail if the committed file is stale.
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

FIXTURE = Path(__file__).resolve().parents[2] / "tests" / "fixtures" / "derived_fixtures.json"


class Lattice:
    """Base surface plus named blow-up centers, total-transform basis."""

    def __init__(self, base, e=0, centers=()):
        self.base = base
        self.e = e
        self.centers = list(centers)  # (name, parent)

    @property
    def rank(self):
        return (1 if self.base == "plane" else 2) + len(self.centers)

    def gram(self):
        r = self.rank
        g = [[0] * r for _ in range(r)]
        if self.base == "plane":
            g[0][0] = 1
            off = 1
        else:
            g[0][0] = -self.e
            g[0][1] = g[1][0] = 1
            off = 2
        for i in range(len(self.centers)):
            g[off + i][off + i] = -1
        return g

    def offset(self):
        return 1 if self.base == "plane" else 2

    def index(self, name):
        return self.offset() + [c[0] for c in self.centers].index(name)

    def dot(self, a, b):
        g = self.gram()
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def vec(self, base_coeffs, exc=None):
        v = list(base_coeffs) + [0] * len(self.centers)
        for name, c in (exc or {}).items():
            v[self.index(name)] += c
        return v

    def canonical(self):
        if self.base == "plane":
            return self.vec([-3], {c[0]: 1 for c in self.centers})
        return self.vec([-2, -(self.e + 2)], {c[0]: 1 for c in self.centers})


def add(a, b, k=1):
    return [x + k * y for x, y in zip(a, b)]


def resolve(base, e, base_class, pre_centers, points):
    """points: list of (name, parent, effective multiplicity)."""
    lat = Lattice(base, e, list(pre_centers) + [(p[0], p[1]) for p in points])
    b = list(base_class) + [0] * len(points)
    for name, _parent, m in points:
        b[lat.index(name)] -= 2 * (m // 2)
    assert all(x % 2 == 0 for x in b), b
    return lat, b


def dn_points(n, d1, d2, inf_near=False):
    pts = []
    if n >= 1:
        pts.append(("gamma", "p1'" if inf_near else None, 2 * n + 2))
    for i in range(1, n + 1):
        pts += [(f"p{i}", None, 5), (f"p{i}'", f"p{i}", 6)]
    for j in range(1, d1 + 1):
        pts += [(f"q{j}", None, 3), (f"q{j}'", f"q{j}", 4)]
    for j in range(1, d2 + 1):
        pts.append((f"r{j}", None, 4))
    return pts


def cover_numbers(lat, b, chi_base=1):
    k = lat.canonical()
    d = [x // 2 for x in b]
    kd = add(k, d)
    chi = Fraction(2 * chi_base) + Fraction(lat.dot(d, kd), 2)
    ksq = 2 * lat.dot(kd, kd)
    h0 = Fraction(chi_base) + Fraction(lat.dot(add(k, kd), kd), 2)
    assert chi.denominator == 1 and h0.denominator == 1
    return int(chi), ksq, int(h0)


def closed_under_parent(lat, names):
    parents = dict(lat.centers)
    return all(parents[x] is None or parents[x] in names for x in names)


def is_line(parents, triple):
    """Collinearity in the D_n configuration: the tangent line at p_i is the
    line L_i through gamma; tangent lines at the q_j and all other triples of
    points are in general position."""
    pairs = [x for x in triple if parents[x] is not None and parents[x] in triple and x != "gamma"]
    if len(pairs) != 1:
        return False
    child = pairs[0]
    rest = triple - {child, parents[child]}
    return parents[child].startswith("p") and rest == {"gamma"}


def count_minus_two(lat, b):
    """Search over exceptional differences E_x - E_child and lines through
    parent-closed collinear triples, kept when C^2 = -2 and C.B = -2."""
    names = [c[0] for c in lat.centers]
    parents = dict(lat.centers)
    found = 0
    for x in names:
        for y in names:
            if parents[y] == x:
                c = lat.vec([0], {x: 1, y: -1})
                if lat.dot(c, c) == -2 and lat.dot(c, b) == -2:
                    found += 1
    for triple in itertools.combinations(names, 3):
        if not closed_under_parent(lat, set(triple)) or not is_line(parents, set(triple)):
            continue
        c = lat.vec([1], {t: -1 for t in triple})
        if lat.dot(c, c) == -2 and lat.dot(c, b) == -2:
            found += 1
    return found


def admissible(n, d1, d2):
    return 0 <= n <= 6 and n + d1 + d2 <= 6 and not (n <= 1 and d2 > n)


def sweep():
    rows = []
    for n in range(7):
        for d1 in range(7):
            for d2 in range(7):
                if not admissible(n, d1, d2):
                    continue
                for inf in (False, True) if n == 1 else (False,):
                    pts = dn_points(n, d1, d2, inf)
                    lat, b = resolve("plane", 0, [10 + 2 * n], [], pts)
                    chi, ksq, h0 = cover_numbers(lat, b)
                    rows.append({
                        "n": n, "delta1": d1, "delta2": d2, "gamma_infinitely_near": inf,
                        "chi": chi, "ksq_resolution": ksq, "h0": h0,
                        "minus_two_curves": count_minus_two(lat, b),
                    })
    return rows


def fixed_points_for_sweep(rows):
    out = []
    for r in rows:
        if r["n"] < 2:
            continue
        ksq_min = r["ksq_resolution"] + r["minus_two_curves"]
        k = ksq_min - 2 * r["chi"] + 6 - 2 * r["h0"]
        out.append({"n": r["n"], "delta1": r["delta1"], "delta2": r["delta2"], "ksq_minimal": ksq_min, "k": k})
    return out


def plane_smooth(degree):
    lat, b = resolve("plane", 0, [degree], [], [])
    chi, ksq, h0 = cover_numbers(lat, b)
    return {"degree": degree, "chi": chi, "ksq_resolution": ksq, "h0": h0}


def xiao(case):
    r, a, bb, extra = (7, 12, 20, []) if case == "III" else (9, 16, 26, [("s", None, 8)])
    pts = []
    for i in range(1, 4):
        pts += [(f"p{i}", None, r), (f"p{i}'", f"p{i}", r + r % 2)]
    pts += extra
    base_lat = Lattice("plane", 0, [("p0", None)])
    b0 = base_lat.vec([bb], {"p0": -(bb - a)})
    lat, b = resolve("plane", 0, b0, [("p0", None)], pts)
    b0_full = b0 + [0] * len(pts)
    exc = {"p0": -1}
    for i in range(1, 4):
        exc[f"p{i}"] = -2
        exc[f"p{i}'"] = -2
    d = lat.vec([5], exc)
    fibre = lat.vec([1], {"p0": -1})
    return {
        "xi": lat.dot(fibre, b0_full),
        "d_squared": lat.dot(d, d),
        "d_dot_k": lat.dot(d, lat.canonical()),
        "d_dot_e0": lat.dot(d, lat.vec([0], {"p0": 1})),
        "d_dot_base_branch": lat.dot(d, b0_full),
        "d_dot_branch": lat.dot(d, b),
    }


def rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


def conic_dim(points):
    rows = []
    for p in points:
        x, y, z = (Fraction(v) for v in p)
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    return 6 - rank(rows)


CONIC_CASES = {
    "pythagorean_six": [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1], [3, 4, 5], [5, 12, 13]],
    "rational_on_circle_six": [["3/5", "4/5", 1], ["8/17", "15/17", 1], [-1, 0, 1], [0, 1, 1], ["-7/25", "24/25", 1],
                               [1, 0, 1]],
    "generic_six": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [2, -1, 5]],
    "five_general": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]],
    "six_with_five_collinear": [[1, 0, 1], [2, 0, 1], [3, 0, 1], [4, 0, 1], [5, 0, 1], [0, 1, 1]],
    "empty": [],
}


def pairings():
    f1 = Lattice("hirzebruch", 1)
    f2 = Lattice("hirzebruch", 2)
    return {
        "f1_4c0_5g_dot_12c0_20g": f1.dot([4, 5], [12, 20]),
        "f2_c0_dot_8c0_14g": f2.dot([1, 0], [8, 14]),
        "f2_branch_dot_fibre": f2.dot([0, 1], [8, 14]),
    }


def pencils():
    # Line through a 4-tuple point r of a degree-10 plane branch.
    lat, b = resolve("plane", 0, [10], [], [("r", None, 4)])
    f = lat.vec([1], {"r": -1})
    line = {"self": lat.dot(f, f), "dot_branch": lat.dot(f, b)}
    # Conics through r1, r2, p1, p1' on a D1 branch with two 4-tuple points.
    lat, b = resolve("plane", 0, [12], [], dn_points(1, 0, 2))
    f = lat.vec([2], {"r1": -1, "r2": -1, "p1": -1, "p1'": -1})
    conic = {"self": lat.dot(f, f), "dot_branch": lat.dot(f, b)}
    return {"line_through_4_tuple_deg10": line, "conic_d1_two_4_tuples": conic}


def cremona_d0(d1=6):
    """D0 branch, quadratic map centered at q1, q1', q2: new class by pairing
    with the images of the new basis."""
    pts = dn_points(0, d1, 0)
    lat, b = resolve("plane", 0, [10], [], pts)
    e = {n: lat.vec([0], {n: 1}) for n, _ in lat.centers}
    line = lat.vec([1])
    c = ["q1", "q1'", "q2"]
    new_l = add(add(add([2 * x for x in line], e[c[0]], -1), e[c[1]], -1), e[c[2]], -1)
    img = {c[i]: add(add(line, e[c[(i + 1) % 3]], -1), e[c[(i + 2) % 3]], -1) for i in range(3)}
    deg = lat.dot(b, new_l)
    subs = sorted(lat.dot(b, img[n]) if n in img else -b[lat.index(n)] for n, _ in lat.centers)
    return {"delta1": d1, "degree": deg, "subtractions": subs}


def build():
    rows = sweep()
    return {
        "pairings": pairings(),
        "plane_smooth": [plane_smooth(d) for d in (8, 10, 12, 20)],
        "f2_smooth": dict(zip(("chi", "ksq_resolution", "h0"),
                              cover_numbers(*resolve("hirzebruch", 2, [8, 14], [], [])))),
        "sweep": rows,
        "fixed_points": fixed_points_for_sweep(rows),
        "xiao": {"III": xiao("III"), "IV": xiao("IV")},
        "conic": [{"name": k, "points": v, "dim": conic_dim(v)} for k, v in CONIC_CASES.items()],
        "pencils": pencils(),
        "cremona_d0": [cremona_d0(d) for d in range(2, 7)],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true", help="compare against the committed fixture")
    ap.add_argument("--output", type=Path, default=FIXTURE)
    args = ap.parse_args()
    text = json.dumps(build(), indent=1, sort_keys=True) + "\n"
    if args.check:
        current = args.output.read_text() if args.output.exists() else ""
        if current != text:
            print(f"{args.output} is stale; rerun {Path(__file__).name}", file=sys.stderr)
            return 1
        print("fixtures up to date")
        return 0
    args.output.write_text(text)
    print(f"wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
