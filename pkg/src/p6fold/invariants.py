"""Closed-form numeric profile of a candidate threefold from its five invariants.

The five integers ``(d, delta, chi, u, v)`` determine every Chern and
intersection number in scope.  :func:`profile` computes them all by direct
substitution, deliberately *not* through the symbolic ring, so the two
routes can be cross-checked against each other.

``profile`` is total on raw integer tuples; geometric plausibility (parity,
positivity) is the constraints module's business.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import DomainError
from .formatting import rat_str


class InvariantTuple(NamedTuple):
    """The five free invariants: degree, sectional 2g-2, chi(O_S), h^{1,1}(S),
    and the cube of the twisted normal determinant."""

    d: int
    delta: int
    chi: int
    u: int
    v: int


class SchurNumbers(NamedTuple):
    """The six Schur numbers of the twisted normal bundle."""

    s1h2: int
    s20h: int
    s11h: int
    s300: int
    s210: int
    s111: int


@dataclass(frozen=True)
class Profile:
    """All derived numbers of one invariant tuple.

    ``g`` is an exact half-integer when ``delta`` is odd (raw mode only);
    every other field is an integer.
    """

    h3: int
    h2k: int
    hk2: int
    k3: int
    hc2: int
    kc2: int
    c3top: int
    n3: int
    KS2: int
    c2S: int
    pg: int
    g: Union[int, Fraction]
    schur: SchurNumbers

    def to_json_dict(self) -> dict:
        g = self.g if isinstance(self.g, int) else rat_str(self.g)
        return {
            "h3": self.h3, "h2k": self.h2k, "hk2": self.hk2, "k3": self.k3,
            "hc2": self.hc2, "kc2": self.kc2, "c3": self.c3top, "n3": self.n3,
            "KS2": self.KS2, "c2S": self.c2S, "pg": self.pg, "g": g,
            "s1h2": self.schur.s1h2, "s20h": self.schur.s20h,
            "s11h": self.schur.s11h, "s300": self.schur.s300,
            "s210": self.schur.s210, "s111": self.schur.s111,
        }


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{what} came out non-integral: {x}")
    return int(x)


def from_geometry(d: int, g: int, chi: int, u: int, v: int) -> InvariantTuple:
    """Build a tuple from the sectional genus instead of delta = 2g - 2."""
    if g < 0:
        raise DomainError(f"sectional genus must be non-negative, got {g}")
    return InvariantTuple(d, 2 * g - 2, chi, u, v)


def profile(t: InvariantTuple) -> Profile:
    """Every derived number of ``t``, by closed-form substitution.

    Internal arithmetic routes through exact rationals and asserts
    integrality, so a bad coefficient shows up as a hard failure instead of
    a silently wrong number.
    """
    d, delta, chi, u, v = (Fraction(x) for x in t)

    h3 = d
    h2k = -2 * d + delta
    hk2 = 3 * d - 2 * delta + 10 * chi - u
    k3 = -4 * d - 24 * delta - 120 * chi + 12 * u + v
    hc2 = d - delta + 2 * chi + u
    kc2 = Fraction(-24)
    c3top = 3 * d - 10 * delta - 64 * chi - 2 * u + v - d * d + 48

    n3 = 35 * h3 + 21 * h2k + 7 * hk2 + k3 - 7 * hc2 - c3top + 48
    assert n3 == d * d, (t, n3)

    KS2 = 10 * chi - u
    c2S = 2 * chi + u
    assert KS2 + c2S == 12 * chi, t  # Noether
    pg = chi - 1
    g = Fraction(delta + 2, 2)

    schur = SchurNumbers(
        s1h2=_as_int(2 * d + delta, "s1h2"),
        s20h=_as_int(2 * d + 4 * delta + 8 * chi - 2 * u, "s20h"),
        s11h=_as_int(d + 2 * delta + 2 * chi + u, "s11h"),
        s300=_as_int(-5 * d - 5 * delta - 8 * chi + 2 * u + d * d, "s300"),
        s210=_as_int(4 * d - 3 * delta - 30 * chi - 3 * u + v + 24 - d * d,
                     "s210"),
        s111=_as_int(-3 * d + 11 * delta + 68 * chi + 4 * u - v - 48 + d * d,
                     "s111"),
    )

    return Profile(
        h3=_as_int(h3, "h3"),
        h2k=_as_int(h2k, "h2k"),
        hk2=_as_int(hk2, "hk2"),
        k3=_as_int(k3, "k3"),
        hc2=_as_int(hc2, "hc2"),
        kc2=_as_int(kc2, "kc2"),
        c3top=_as_int(c3top, "c3"),
        n3=_as_int(n3, "n3"),
        KS2=_as_int(KS2, "KS2"),
        c2S=_as_int(c2S, "c2S"),
        pg=_as_int(pg, "pg"),
        g=int(g) if g.denominator == 1 else g,
        schur=schur,
    )
