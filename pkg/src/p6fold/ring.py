"""Truncated graded intersection ring of a threefold in P^6, over exact rationals.

Two symbolic domains live here:

* :class:`GradedPoly`: polynomials in the four generators ``h`` (hyperplane
  class), ``k`` (canonical class), ``c2``, ``c3`` (Chern classes of the
  tangent bundle), graded by ``deg h = deg k = 1``, ``deg c2 = 2``,
  ``deg c3 = 3``.  Every product is truncated above total degree 3, because
  on a threefold any intersection product of higher degree vanishes.

* :class:`ParamExpr`: polynomials with rational coefficients in the five
  free parameters ``d, delta, chi, u, v`` (degree, sectional 2g-2, chi(O_S),
  h^{1,1}(S), and the cube of the twisted normal determinant).  Every
  intersection number of the threefold reduces to one of these.

:func:`reduce_to_params` is the bridge: it sends each degree-3 monomial to
its closed-form value in the five parameters.  All arithmetic is exact
(``fractions.Fraction``); nothing here ever rounds.

Everything is immutable and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError
from .formatting import terms_str

# Exponent tuples are (e_h, e_k, e_c2, e_c3); grading weights of the generators.
_WEIGHTS = (1, 1, 2, 3)
_TOP_DEGREE = 3
_GEN_NAMES = ("h", "k", "c2", "c3")

_PARAM_NAMES = ("d", "delta", "chi", "u", "v")
_PARAM_DISPLAY = ("d", "δ", "χ", "u", "v")


def _degree(mono):
    return sum(e * w for e, w in zip(mono, _WEIGHTS))


def _canon_key(mono):
    # Canonical term order: lexicographic on exponent vectors, largest first,
    # so pure h-powers lead and the constant term trails.
    return mono


class GradedPoly:
    """Immutable element of the truncated ring; mapping monomial -> coefficient.

    Supports ``+ - *`` (with other elements, ints, or Fractions) and integer
    powers.  Monomials of total degree above 3 are silently dropped by
    multiplication; constructing one directly is an error.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != 4 or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r}")
            if _degree(mono) > _TOP_DEGREE:
                raise ValueError(f"monomial {mono!r} exceeds total degree 3")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        object.__setattr__(self, "_terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value) -> "GradedPoly":
        return cls({(0, 0, 0, 0): Fraction(value)})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GradedPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return GradedPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                if _degree(mono) > _TOP_DEGREE:
                    continue  # dim X = 3: higher products vanish
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return GradedPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GradedPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    # -- structure ----------------------------------------------------------

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0, 0), Fraction(0))

    def monomials(self):
        return dict(self._terms)

    def degree_part(self, degree: int) -> "GradedPoly":
        return GradedPoly(
            {m: c for m, c in self._terms.items() if _degree(m) == degree}
        )

    def degrees(self):
        return sorted({_degree(m) for m in self._terms})

    def is_homogeneous(self, degree: int) -> bool:
        return all(_degree(m) == degree for m in self._terms)

    def degree3_basis(self) -> "Basis3":
        """The seven coordinates of the degree-3 component."""
        p = self.degree_part(3)
        return Basis3(
            h3=p.coefficient((3, 0, 0, 0)),
            h2k=p.coefficient((2, 1, 0, 0)),
            hk2=p.coefficient((1, 2, 0, 0)),
            k3=p.coefficient((0, 3, 0, 0)),
            hc2=p.coefficient((1, 0, 1, 0)),
            kc2=p.coefficient((0, 1, 1, 0)),
            c3=p.coefficient((0, 0, 0, 1)),
        )

    # -- equality / rendering ------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def text(self) -> str:
        """Canonical serialization, terms in canonical order."""
        ordered = sorted(self._terms.items(), key=lambda kv: _canon_key(kv[0]),
                         reverse=True)
        return terms_str(ordered, _GEN_NAMES)

    def __repr__(self):
        return f"GradedPoly({self.text()})"


class Basis3(NamedTuple):
    """Coordinates of a degree-3 class in the canonical monomial basis."""

    h3: Fraction
    h2k: Fraction
    hk2: Fraction
    k3: Fraction
    hc2: Fraction
    kc2: Fraction
    c3: Fraction


class ParamExpr:
    """Immutable polynomial in the five parameters, exact coefficients.

    Exponent tuples run over ``(d, delta, chi, u, v)``.  Unlike
    :class:`GradedPoly` there is no truncation; squares of reduced numbers
    (Hodge-index expressions) live here.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != 5 or any(e < 0 for e in mono):
                raise ValueError(f"bad parameter monomial {mono!r}")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def constant(cls, value) -> "ParamExpr":
        return cls({(0, 0, 0, 0, 0): Fraction(value)})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, ParamExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return ParamExpr(terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return ParamExpr(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ParamExpr.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def monomials(self):
        return dict(self._terms)

    def evaluate(self, d, delta, chi, u, v) -> Fraction:
        """Exact value at an integer or rational parameter point."""
        point = (Fraction(d), Fraction(delta), Fraction(chi), Fraction(u),
                 Fraction(v))
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for e, x in zip(mono, point):
                if e:
                    term *= x ** e
            total += term
        return total

    def substitute(self, **values) -> "ParamExpr":
        """Partially evaluate; unnamed parameters stay symbolic.

        >>> quad = ParamExpr({(0, 2, 0, 0, 0): 33})
        >>> quad.substitute(d=7).text()
        '33*δ^2'
        """
        idx = {name: i for i, name in enumerate(_PARAM_NAMES)}
        for name in values:
            if name not in idx:
                raise ValueError(f"unknown parameter {name!r}")
        terms = {}
        for mono, c in self._terms.items():
            coeff = c
            rest = list(mono)
            for name, val in values.items():
                i = idx[name]
                if mono[i]:
                    coeff *= Fraction(val) ** mono[i]
                rest[i] = 0
            key = tuple(rest)
            new = terms.get(key, Fraction(0)) + coeff
            terms[key] = new
        return ParamExpr(terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def text(self) -> str:
        ordered = sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)
        return terms_str(ordered, _PARAM_DISPLAY)

    def __repr__(self):
        return f"ParamExpr({self.text()})"


# Ring generators.
h = GradedPoly({(1, 0, 0, 0): 1})
k = GradedPoly({(0, 1, 0, 0): 1})
c2 = GradedPoly({(0, 0, 1, 0): 1})
c3 = GradedPoly({(0, 0, 0, 1): 1})

# Parameter generators.
d = ParamExpr({(1, 0, 0, 0, 0): 1})
delta = ParamExpr({(0, 1, 0, 0, 0): 1})
chi = ParamExpr({(0, 0, 1, 0, 0): 1})
u = ParamExpr({(0, 0, 0, 1, 0): 1})
v = ParamExpr({(0, 0, 0, 0, 1): 1})

# The k*c2 number is pinned by Riemann-Roch: chi(O_X) = (c1*c2)/24 = 1 for a
# rationally connected threefold, so k*c2 = -c1*c2 = -24.
KC2_VALUE = -24

# Closed-form value of each degree-3 basis monomial in the five parameters.
# Derivations: adjunction on the sectional curve (h2k), Noether's formula on
# the hyperplane surface (hk2), the cube of the twisted normal determinant
# 4h+k (k3), the tangent sequence of the hyperplane surface (hc2), and the
# double-point identity n3 = d^2 (c3).
SUBSTITUTIONS = {
    (3, 0, 0, 0): d,
    (2, 1, 0, 0): -2 * d + delta,
    (1, 2, 0, 0): 3 * d - 2 * delta + 10 * chi - u,
    (0, 3, 0, 0): -4 * d - 24 * delta - 120 * chi + 12 * u + v,
    (1, 0, 1, 0): d - delta + 2 * chi + u,
    (0, 1, 1, 0): ParamExpr.constant(KC2_VALUE),
    (0, 0, 0, 1): 3 * d - 10 * delta - 64 * chi - 2 * u + v - d * d + 48,
}


def mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Truncated product (function form of ``a * b``)."""
    return a * b


def invert_unit(c: GradedPoly) -> GradedPoly:
    """Multiplicative inverse of a total class with constant term 1.

    ``invert_unit(1 + a) = 1 - a + a^2 - a^3`` truncated above degree 3, so
    ``mul(c, invert_unit(c)) == 1``.
    """
    if c.constant_term() != 1:
        raise DomainError("invert_unit requires constant term 1, got "
                          f"{c.constant_term()}")
    a = c - 1
    a2 = a * a
    return 1 - a + a2 - a2 * a


def normal_chern() -> tuple[GradedPoly, GradedPoly, GradedPoly]:
    """Chern classes (n1, n2, n3) of the normal bundle of X in P^6.

    From the tangent sequence, c(N) = (1+h)^7 / c(X) with
    c(X) = 1 - k + c2 + c3.  The k*c2 monomial that the division produces in
    degree 3 is folded into the constant via k*c2 = -24, so n3 carries the
    bookkeeping constant +48:

        n1 = 7h + k
        n2 = 21h^2 + 7hk + k^2 - c2
        n3 = 35h^3 + 21h^2k + 7hk^2 + k^3 - 7h*c2 - c3 + 48
    """
    cx = 1 - k + c2 + c3
    cn = (1 + h) ** 7 * invert_unit(cx)
    n1 = cn.degree_part(1)
    n2 = cn.degree_part(2)
    n3 = cn.degree_part(3)
    gamma = n3.coefficient((0, 1, 1, 0))
    n3 = n3 - gamma * k * c2 + gamma * KC2_VALUE
    return n1, n2, n3


def _require_degree(poly: GradedPoly, degree: int, what: str,
                    allow_constant: bool = False):
    for mono in poly.monomials():
        deg = _degree(mono)
        if deg == degree:
            continue
        if allow_constant and deg == 0:
            continue
        raise DomainError(
            f"{what} must be homogeneous of degree {degree}; "
            f"found a degree-{deg} term in {poly.text()}"
        )


def twist_rank3(c1: GradedPoly, c2_: GradedPoly, c3_: GradedPoly,
                l: GradedPoly) -> tuple[GradedPoly, GradedPoly, GradedPoly]:
    """Chern classes of a rank-3 bundle after twisting by a line class ``l``.

    Returns ``(c1 + 3l, c2 + 2l*c1 + 3l^2, c3 + l*c2 + l^2*c1 + l^3)``.
    The top class may carry a degree-0 bookkeeping constant, which passes
    through additively.
    """
    _require_degree(l, 1, "twist class")
    _require_degree(c1, 1, "c1")
    _require_degree(c2_, 2, "c2")
    _require_degree(c3_, 3, "c3", allow_constant=True)
    return (
        c1 + 3 * l,
        c2_ + 2 * l * c1 + 3 * l * l,
        c3_ + l * c2_ + l * l * c1 + l ** 3,
    )


def schur_values(c1: GradedPoly, c2_: GradedPoly, c3_: GradedPoly):
    """The six Schur combinations of rank-3 Chern classes.

    Order: s(1), s(20), s(300), s(11), s(210), s(111), i.e.
    ``c1, c2, c3, c1^2 - c2, c1*c2 - c3, c1^3 - 2*c1*c2 + c3``.
    For a globally generated bundle each one pairs non-negatively with
    subvarieties; that is the source of the S-constraints.
    """
    s1 = c1
    s20 = c2_
    s300 = c3_
    s11 = c1 * c1 - c2_
    s210 = c1 * c2_ - c3_
    s111 = c1 ** 3 - 2 * c1 * c2_ + c3_
    return s1, s20, s300, s11, s210, s111


def reduce_to_params(p: GradedPoly) -> ParamExpr:
    """Reduce a degree-3 class to its closed form in the five parameters.

    A degree-0 component is allowed and passes through as an additive
    constant (top classes carry the +48 bookkeeping constant).  Nonzero
    degree-1 or degree-2 components have no parameter value and raise
    :class:`DomainError`.
    """
    result = ParamExpr()
    for mono, coeff in p.monomials().items():
        deg = _degree(mono)
        if deg == 0:
            result = result + coeff
        elif deg == 3:
            result = result + coeff * SUBSTITUTIONS[mono]
        else:
            raise DomainError(
                "reduce_to_params needs a degree-3 class (plus optional "
                f"constant); found a degree-{deg} term in {p.text()}"
            )
    return result
