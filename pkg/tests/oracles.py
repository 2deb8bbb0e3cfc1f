"""Independent oracles used to pre-compute expected values.

Nothing in here calls into ``p6fold``'s substitution tables or identity
machinery: the split-bundle oracle works from the total Chern class of a
direct sum of line bundles with its own 4-term polynomial arithmetic, and
the sympy helpers expand products symbolically.  Tests freeze or recompute
expectations from these and diff the package against them.
"""

from __future__ import annotations

from fractions import Fraction


def _pmul(p, q):
    """Product of degree-<=3 truncated polynomials in one variable."""
    r = [Fraction(0)] * 4
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            if i + j <= 3:
                r[i + j] += pi * qj
    return r


def _pinv(p):
    """Inverse of a truncated polynomial with constant term 1."""
    assert p[0] == 1
    a = [Fraction(0), p[1], p[2], p[3]]
    a2 = _pmul(a, a)
    a3 = _pmul(a2, a)
    return [1 + a2[0] - a3[0], -a[1] + a2[1] - a3[1],
            -a[2] + a2[2] - a3[2], -a[3] + a2[3] - a3[3]]


def split_bundle_profile(d: int, canonical_multiple: int,
                         normal_degrees: tuple) -> dict:
    """Expected profile of a threefold of degree d with K = m*H and split
    normal bundle O(a) + O(b) + O(c).

    Every number is produced by direct expansion of total Chern classes;
    chi and u are derived from Noether's formula and the topological Euler
    number rather than taken as inputs.
    """
    m = canonical_multiple
    a, b, c = normal_degrees

    cn = _pmul(_pmul([Fraction(1), Fraction(a), Fraction(0), Fraction(0)],
                     [Fraction(1), Fraction(b), Fraction(0), Fraction(0)]),
               [Fraction(1), Fraction(c), Fraction(0), Fraction(0)])
    # c(T_X) = c(T_P6 restricted) / c(N) = (1+h)^7 / c(N)
    ctx = _pmul([Fraction(1), Fraction(7), Fraction(21), Fraction(35)],
                _pinv(cn))
    assert ctx[1] == -m, "canonical multiple inconsistent with normal bundle"
    c2x, c3x = ctx[2], ctx[3]

    hc2 = c2x * d
    KS2 = (m + 1) ** 2 * d
    c2S = hc2 + (m + 1) * d  # tangent sequence of the hyperplane surface
    noether = KS2 + c2S
    assert noether % 12 == 0
    chi = noether // 12
    u = c2S - 2 * chi
    delta = (m + 2) * d

    e1 = a + b + c
    f = (a - 1, b - 1, c - 1)
    t1 = sum(f)
    t2 = f[0] * f[1] + f[0] * f[2] + f[1] * f[2]
    t3 = f[0] * f[1] * f[2]

    g = Fraction(delta + 2, 2)
    return {
        "tuple": (d, delta, int(chi), int(u), (e1 - 3) ** 3 * d),
        "h3": d, "h2k": m * d, "hk2": m * m * d, "k3": m ** 3 * d,
        "hc2": int(hc2), "kc2": int(m * hc2), "c3": int(c3x * d),
        "n3": a * b * c * d,
        "KS2": int(KS2), "c2S": int(c2S), "pg": int(chi) - 1,
        "g": int(g) if g.denominator == 1 else g,
        "s1h2": t1 * d, "s20h": t2 * d, "s11h": (t1 * t1 - t2) * d,
        "s300": t3 * d, "s210": (t1 * t2 - t3) * d,
        "s111": (t1 ** 3 - 2 * t1 * t2 + t3) * d,
    }


# The three reference threefolds: a linear P^3, the quadric in P^4, and the
# (2,2) complete intersection in P^5, each with its canonical multiple and
# split normal bundle degrees.
FIXTURES = {
    "linear_p3": (1, -4, (1, 1, 1)),
    "quadric": (2, -3, (2, 1, 1)),
    "ci_22": (4, -2, (2, 2, 1)),
}


def naive_feasible_rows(box, cfg):
    """Reference enumeration: plain nested loop + is_feasible, CSV cells."""
    from p6fold.constraints import is_feasible
    from p6fold.invariants import InvariantTuple

    rows = []
    (d0, d1), (e0, e1), (c0, c1), (u0, u1), (v0, v1) = box.ranges()
    for d in range(d0, d1 + 1):
        for delta in range(e0, e1 + 1):
            for chi in range(c0, c1 + 1):
                for u in range(u0, u1 + 1):
                    for v in range(v0, v1 + 1):
                        t = InvariantTuple(d, delta, chi, u, v)
                        if is_feasible(t, cfg):
                            rows.append(f"{d},{delta},{chi},{u},{v}")
    return rows
