"""Exact backend: normalized rationals and radical extension towers.

Elements live in Q(g1)(g2)...(gn) where each generator is a square or cube
root of an element built from the levels below it.  Representations are
nested coefficient tuples in reduced normal form -- degree below each
generator's extension degree, rational leaves normalized -- so equality
with zero is decidable by inspection.

Towers are append-only and immutable: adjoining a root returns a new tower
sharing the existing levels, and an element built on a shorter tower can be
used anywhere a longer tower extending it is in play.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .complexfield import ccbrt_principal, csqrt_principal
from .fields import FieldCapabilities

#: The exact base field scalar: arbitrary precision, positive denominator,
#: numerator coprime with denominator, zero uniquely 0/1.
BigRational = Fraction


class TowerMismatchError(ValueError):
    """Raised when combining elements of towers where neither extends the other."""


class ReducibleExtensionError(ArithmeticError):
    """A defining polynomial turned out reducible over its base.

    Raised when inverting a nonzero zero-divisor.  ``factor`` carries the
    discovered proper factor of the defining polynomial (little-endian
    coefficient list over the level below).  The tower is not auto-split;
    callers typically retry on the approximate backend.
    """

    def __init__(self, factor):
        super().__init__("reducible extension")
        self.factor = factor


def rat_normalize(num, den):
    """Normalized rational num/den: sign on the numerator, gcd divided out."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def _isqrt_exact(n):
    r = math.isqrt(n)
    return r if r * r == n else None


def _icbrt(n):
    """Floor cube root of a nonnegative integer (exact integer iteration)."""
    if n == 0:
        return 0
    r = 1 << ((n.bit_length() + 2) // 3)
    while True:
        nxt = (2 * r + n // (r * r)) // 3
        if nxt >= r:
            break
        r = nxt
    while r * r * r > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def rational_sqrt(q):
    """Exact nonnegative square root of a rational, or None."""
    if q < 0:
        return None
    rn = _isqrt_exact(q.numerator)
    if rn is None:
        return None
    rd = _isqrt_exact(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def rational_cbrt(q):
    """Exact real cube root of a rational (sign preserved), or None."""
    rn = _icbrt(abs(q.numerator))
    if rn * rn * rn != abs(q.numerator):
        return None
    rd = _icbrt(q.denominator)
    if rd * rd * rd != q.denominator:
        return None
    root = Fraction(rn, rd)
    return -root if q < 0 else root


# ---------------------------------------------------------------------------
# Representation helpers.  A rep at depth 0 is a Fraction; at depth k it is a
# tuple of length levels[k-1].deg whose entries are reps at depth k-1.
# ---------------------------------------------------------------------------


def _zero_rep(levels):
    rep = Fraction(0)
    for lv in levels:
        rep = (rep,) * lv.deg
    return rep


def _const_rep(levels, q):
    rep = Fraction(q)
    zero = Fraction(0)
    for lv in levels:
        rep = (rep,) + (zero,) * (lv.deg - 1)
        zero = (zero,) * lv.deg
    return rep


def _lift_rep(rep, from_levels, to_levels):
    zero = _zero_rep(from_levels)
    for lv in to_levels[len(from_levels):]:
        rep = (rep,) + (zero,) * (lv.deg - 1)
        zero = (zero,) * lv.deg
    return rep


def _is_zero_rep(levels, rep):
    if not levels:
        return rep == 0
    sub = levels[:-1]
    return all(_is_zero_rep(sub, c) for c in rep)


def _add_rep(levels, x, y):
    if not levels:
        return x + y
    sub = levels[:-1]
    return tuple(_add_rep(sub, a, b) for a, b in zip(x, y))


def _neg_rep(levels, x):
    if not levels:
        return -x
    sub = levels[:-1]
    return tuple(_neg_rep(sub, c) for c in x)


def _sub_rep(levels, x, y):
    return _add_rep(levels, x, _neg_rep(levels, y))


def _mul_rep(levels, x, y):
    if not levels:
        return x * y
    sub = levels[:-1]
    deg = levels[-1].deg
    prod = [_zero_rep(sub)] * (2 * deg - 1)
    for i, xi in enumerate(x):
        if _is_zero_rep(sub, xi):
            continue
        for j, yj in enumerate(y):
            if _is_zero_rep(sub, yj):
                continue
            prod[i + j] = _add_rep(sub, prod[i + j], _mul_rep(sub, xi, yj))
    # rewrite g**k for k >= deg using the defining relation g**deg = radicand
    a = levels[-1].radicand_rep
    for k in range(2 * deg - 2, deg - 1, -1):
        if not _is_zero_rep(sub, prod[k]):
            prod[k - deg] = _add_rep(sub, prod[k - deg], _mul_rep(sub, prod[k], a))
    return tuple(prod[:deg])


# Polynomial helpers over the ring at `levels` (coefficients little-endian).


def _poly_trim(levels, p):
    while p and _is_zero_rep(levels, p[-1]):
        p.pop()
    return p


def _poly_sub(levels, a, b):
    n = max(len(a), len(b))
    zero = _zero_rep(levels)
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else zero
        bi = b[i] if i < len(b) else zero
        out.append(_sub_rep(levels, ai, bi))
    return _poly_trim(levels, out)


def _poly_mul(levels, a, b):
    if not a or not b:
        return []
    out = [_zero_rep(levels)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if _is_zero_rep(levels, ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = _add_rep(levels, out[i + j], _mul_rep(levels, ai, bj))
    return _poly_trim(levels, out)


def _poly_divmod(levels, a, b):
    """Quotient and remainder of a by b; b's leading coefficient must invert."""
    binv = _inv_rep(levels, b[-1])
    rem = list(a)
    q = [_zero_rep(levels)] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = _mul_rep(levels, rem[k + len(b) - 1], binv)
        if _is_zero_rep(levels, c):
            continue
        q[k] = c
        for j in range(len(b)):
            rem[k + j] = _sub_rep(levels, rem[k + j], _mul_rep(levels, c, b[j]))
    return _poly_trim(levels, q), _poly_trim(levels, rem)


def _inv_rep(levels, x):
    """Inverse in the tower ring, by extended Euclid against the defining
    polynomial at each level (recursing into the level below for coefficient
    inverses)."""
    if not levels:
        if x == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / x
    sub = levels[:-1]
    deg = levels[-1].deg
    f = _poly_trim(sub, list(x))
    if not f:
        raise ZeroDivisionError("division by zero")
    # m(X) = X**deg - radicand
    m = [_neg_rep(sub, levels[-1].radicand_rep)]
    m += [_zero_rep(sub)] * (deg - 1)
    m.append(_const_rep(sub, 1))
    r0, r1 = m, f
    s0, s1 = [], [_const_rep(sub, 1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(sub, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(sub, s0, _poly_mul(sub, q, s1))
        if not r1:
            # gcd(f, m) = r0 has positive degree: m is reducible over sub
            raise ReducibleExtensionError(factor=r0)
    cinv = _inv_rep(sub, r1[0])
    inv = [_mul_rep(sub, c, cinv) for c in s1]
    inv += [_zero_rep(sub)] * (deg - len(inv))
    return tuple(inv[:deg])


def _to_complex_rep(levels, rep):
    if not levels:
        return complex(rep)
    sub = levels[:-1]
    g = levels[-1].embed
    acc = 0j
    for c in reversed(rep):
        acc = acc * g + _to_complex_rep(sub, c)
    return acc


def _lower_rep(levels, rep):
    """Strip top levels whose non-constant coefficients are all zero."""
    while levels:
        sub = levels[:-1]
        if all(_is_zero_rep(sub, c) for c in rep[1:]):
            levels, rep = sub, rep[0]
        else:
            break
    return levels, rep


def _monomials(levels, rep, exps=()):
    """Yield (exponent tuple lowest-level-first, rational) for nonzero terms."""
    if not levels:
        if rep != 0:
            yield exps, rep
        return
    sub = levels[:-1]
    for i, c in enumerate(rep):
        yield from _monomials(sub, c, (i,) + exps)


class Level:
    """One radical extension: a generator g with g**deg equal to the radicand."""

    __slots__ = ("kind", "deg", "radicand_rep", "embed")

    def __init__(self, kind, radicand_rep, embed):
        self.kind = kind
        self.deg = 2 if kind == "sqrt" else 3
        self.radicand_rep = radicand_rep
        self.embed = embed

    def __eq__(self, other):
        if not isinstance(other, Level):
            return NotImplemented
        return self.kind == other.kind and self.radicand_rep == other.radicand_rep

    def __hash__(self):
        return hash((self.kind, self.radicand_rep))

    def __repr__(self):
        return f"Level({self.kind!r}, radicand={self.radicand_rep!r})"


class Tower:
    """Immutable chain of radical extensions over the rationals."""

    __slots__ = ("levels",)

    def __init__(self, levels=()):
        self.levels = tuple(levels)

    @property
    def depth(self):
        return len(self.levels)

    def rational(self, q):
        return TowerElement(self, _const_rep(self.levels, Fraction(q)))

    @property
    def zero(self):
        return self.rational(0)

    @property
    def one(self):
        return self.rational(1)

    def generator(self, index):
        """The generator adjoined at ``index`` (0-based), as an element."""
        lv = self.levels[index]
        below = self.levels[:index]
        rep = (_zero_rep(below), _const_rep(below, 1))
        if lv.deg == 3:
            rep += (_zero_rep(below),)
        return TowerElement(self, _lift_rep(rep, self.levels[: index + 1], self.levels))

    def _prepare_radicand(self, a):
        if not isinstance(a, TowerElement):
            a = self.rational(a)
        return a._on(self)

    def adjoin_sqrt(self, a):
        """Adjoin a square root of ``a``.

        Returns ``(tower, generator)``.  If ``a`` is a rational leaf that is
        a perfect square of a rational, the root is returned directly and
        the tower is unchanged.  The generator's numeric embedding is the
        principal complex square root of the radicand's embedding.
        """
        a = self._prepare_radicand(a)
        q = a.as_rational()
        if q is not None:
            root = rational_sqrt(q)
            if root is not None:
                return self, self.rational(root)
        level = Level("sqrt", a.rep, csqrt_principal(a.to_complex()))
        grown = Tower(self.levels + (level,))
        return grown, grown.generator(self.depth)

    def adjoin_cbrt(self, a):
        """Adjoin a cube root of ``a``; rational perfect cubes (either sign)
        short-circuit to their rational root with the tower unchanged."""
        a = self._prepare_radicand(a)
        q = a.as_rational()
        if q is not None:
            root = rational_cbrt(q)
            if root is not None:
                return self, self.rational(root)
        level = Level("cbrt", a.rep, ccbrt_principal(a.to_complex()))
        grown = Tower(self.levels + (level,))
        return grown, grown.generator(self.depth)

    def __eq__(self, other):
        if not isinstance(other, Tower):
            return NotImplemented
        return self.levels == other.levels

    def __hash__(self):
        return hash(self.levels)

    def __repr__(self):
        return f"Tower(depth={self.depth})"


class TowerElement:
    """A tower value in reduced polynomial normal form."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower, rep):
        self.tower = tower
        self.rep = rep

    # -- tower compatibility ------------------------------------------------

    def _on(self, tower):
        """Re-express this element on ``tower`` (which must extend its own)."""
        mine = self.tower.levels
        if mine == tower.levels:
            return self
        if mine == tower.levels[: len(mine)]:
            return TowerElement(tower, _lift_rep(self.rep, mine, tower.levels))
        levels, rep = _lower_rep(mine, self.rep)
        if levels == tower.levels[: len(levels)]:
            return TowerElement(tower, _lift_rep(rep, levels, tower.levels))
        raise TowerMismatchError("tower mismatch")

    def _pair(self, other):
        if not isinstance(other, TowerElement):
            if isinstance(other, (int, Fraction)):
                other = self.tower.rational(other)
            else:
                return None
        if self.tower.depth >= other.tower.depth:
            return self, other._on(self.tower)
        return self._on(other.tower), other

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElement(x.tower, _add_rep(x.tower.levels, x.rep, y.rep))

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, _neg_rep(self.tower.levels, self.rep))

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElement(x.tower, _sub_rep(x.tower.levels, x.rep, y.rep))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElement(x.tower, _mul_rep(x.tower.levels, x.rep, y.rep))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; the input must be nonzero.

        Raises ``ZeroDivisionError`` on zero and ``ReducibleExtensionError``
        when a nonzero zero-divisor reveals a reducible defining polynomial.
        """
        return TowerElement(self.tower, _inv_rep(self.tower.levels, self.rep))

    def is_zero(self):
        return _is_zero_rep(self.tower.levels, self.rep)

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x.rep == y.rep

    def __hash__(self):
        levels, rep = _lower_rep(self.tower.levels, self.rep)
        return hash((levels, rep))

    # -- views ----------------------------------------------------------------

    def to_complex(self):
        """Evaluate the coefficient tree at the generators' embeddings."""
        return _to_complex_rep(self.tower.levels, self.rep)

    def as_rational(self):
        levels, rep = _lower_rep(self.tower.levels, self.rep)
        return rep if not levels else None

    def debug_str(self):
        """Canonical text form, lowest level first, for golden tests."""
        body = _render_monomials(self.tower.levels, self.rep)
        clauses = []
        for i, lv in enumerate(self.tower.levels):
            rhs = _render_monomials(self.tower.levels[:i], lv.radicand_rep)
            clauses.append(f"g{i + 1}^{lv.deg} = {rhs}")
        if clauses:
            return f"{body} where {'; '.join(clauses)}"
        return body

    def __repr__(self):
        return f"TowerElement({self.debug_str()})"


def _render_monomials(levels, rep):
    terms = list(_monomials(levels, rep))
    if not terms:
        return "0"
    if len(terms) == 1 and not any(terms[0][0]):
        return str(terms[0][1])
    parts = []
    for exps, q in terms:
        factors = [f"({q})"]
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(f"g{i + 1}")
            elif e > 1:
                factors.append(f"g{i + 1}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


class TowerField(FieldCapabilities):
    """Field capabilities over a growing radical tower.

    One instance is a single solve session: the session tower grows as
    ``sqrt``/``cbrt`` adjoin generators, and repeated calls with the same
    radicand return the same generator, so each provider is a genuine
    function.  Towers and elements themselves remain immutable; only the
    session's notion of "current tower" advances.
    """

    name = "tower"
    is_exact = True

    def __init__(self):
        self.tower = Tower()
        self._roots = {}

    @property
    def zero(self):
        return _ZERO

    @property
    def one(self):
        return _ONE

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def inverse(self, x):
        return x.inverse()

    def is_zero(self, x):
        return x.is_zero()

    def from_rational(self, q):
        return self.tower.rational(q)

    def to_complex(self, x):
        return x.to_complex()

    def as_rational(self, x):
        return x.as_rational()

    def _adjoin(self, kind, x):
        x = x._on(self.tower) if x.tower != self.tower else x
        key = (kind,) + _lower_rep(x.tower.levels, x.rep)
        found = self._roots.get(key)
        if found is not None:
            return found
        if kind == "sqrt":
            self.tower, g = self.tower.adjoin_sqrt(x)
        else:
            self.tower, g = self.tower.adjoin_cbrt(x)
        self._roots[key] = g
        return g

    def sqrt(self, x):
        return self._adjoin("sqrt", x)

    def cbrt(self, x):
        return self._adjoin("cbrt", x)


_ZERO = Tower().rational(0)
_ONE = Tower().rational(1)
