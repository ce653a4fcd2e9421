"""Linear combinations and the two coproducts.

coproduct splits a poset along its up-closed subsets of the first
order; deconcat_coproduct_g splits along the g-factorization.  LinComb
and TensorComb hold exact rational coefficients keyed by canonical
representatives; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    EMPTY,
    EmptyInputError,
    canonical_form,
    induced_subposet,
    _bits,
)
from .products import compose_many, factor_blocks


def _coeff(c):
    c = Fraction(c)
    return c


class LinComb:
    """Immutable linear combination with exact rational coefficients.

    Keys are canonical basis objects exposing sort_key(); zero
    coefficients are never stored.  The algebra layers always insert
    canonical representatives, so key equality is isoclass equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for k, c in dict(terms).items():
                c = _coeff(c)
                if c:
                    d[k] = c
        self._terms = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, key, coeff=1):
        return cls({key: coeff})

    def terms(self):
        """Sorted (key, coefficient) pairs."""
        return tuple(
            (k, self._terms[k])
            for k in sorted(self._terms, key=lambda k: k.sort_key())
        )

    def coefficient(self, key):
        return self._terms.get(key, Fraction(0))

    def is_zero(self):
        return not self._terms

    def support(self):
        return frozenset(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, Fraction(0)) + c
        return LinComb(d)

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, Fraction(0)) - c
        return LinComb(d)

    def __neg__(self):
        return LinComb({k: -c for k, c in self._terms.items()})

    def __rmul__(self, scalar):
        c = _coeff(scalar)
        return LinComb({k: c * v for k, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_keys(self, f):
        """Linear extension of a basis map key -> key or key -> LinComb."""
        out = {}
        for k, c in self._terms.items():
            img = f(k)
            if isinstance(img, LinComb):
                for k2, c2 in img._terms.items():
                    out[k2] = out.get(k2, Fraction(0)) + c * c2
            else:
                out[img] = out.get(img, Fraction(0)) + c
        return LinComb(out)

    def filter_keys(self, pred):
        return LinComb({k: c for k, c in self._terms.items() if pred(k)})

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        bits = ", ".join(f"{c}*{k!r}" for k, c in self.terms())
        return f"LinComb({bits})"


def extend_bilinear(f):
    """Lift a bilinear basis operation to LinComb x LinComb.

    f(a, b) may return a basis key or a LinComb.
    """

    def lifted(x, y):
        out = LinComb.zero()
        for a, ca in x.terms():
            for b, cb in y.terms():
                img = f(a, b)
                if not isinstance(img, LinComb):
                    img = LinComb.term(img)
                out = out + (ca * cb) * img
        return out

    return lifted


class TensorComb:
    """Linear combination of ordered tensor pairs, exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for k, c in dict(terms).items():
                c = _coeff(c)
                if c:
                    d[k] = c
        self._terms = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, left, right, coeff=1):
        return cls({(left, right): coeff})

    def terms(self):
        return tuple(
            (k, self._terms[k])
            for k in sorted(
                self._terms, key=lambda k: (k[0].sort_key(), k[1].sort_key())
            )
        )

    def coefficient(self, left, right):
        return self._terms.get((left, right), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        if not isinstance(other, TensorComb):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, Fraction(0)) + c
        return TensorComb(d)

    def __sub__(self, other):
        if not isinstance(other, TensorComb):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, Fraction(0)) - c
        return TensorComb(d)

    def __neg__(self):
        return TensorComb({k: -c for k, c in self._terms.items()})

    def __rmul__(self, scalar):
        c = _coeff(scalar)
        return TensorComb({k: c * v for k, v in self._terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, TensorComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def componentwise(self, op, other):
        """(a1 (x) a2) . (b1 (x) b2) = (a1 op b1) (x) (a2 op b2)."""
        out = {}
        for (a1, a2), ca in self._terms.items():
            for (b1, b2), cb in other._terms.items():
                k = (op(a1, b1), op(a2, b2))
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return TensorComb(out)

    def map_pairs(self, f):
        """Linear extension of (left, right) -> value into a LinComb."""
        out = LinComb.zero()
        for (a, b), c in self._terms.items():
            img = f(a, b)
            if not isinstance(img, LinComb):
                img = LinComb.term(img)
            out = out + c * img
        return out

    def __repr__(self):
        if not self._terms:
            return "TensorComb(0)"
        bits = ", ".join(f"{c}*({a!r} (x) {b!r})" for (a, b), c in self.terms())
        return f"TensorComb({bits})"


def ideals(p):
    """All up-closed subsets of the first order, as frozensets of vertices.

    Depth-first over the vertices in reverse linear-extension order: a
    vertex may join only when everything above it already has, so each
    up-set appears exactly once.
    """
    n = p.n
    order = sorted(range(n), key=lambda v: p.dn1[v].bit_count(), reverse=True)
    masks = []

    def dfs(i, mask):
        if i == n:
            masks.append(mask)
            return
        v = order[i]
        dfs(i + 1, mask)
        if p.up1[v] & ~mask == 0:
            dfs(i + 1, mask | (1 << v))

    dfs(0, 0)
    sets = [frozenset(b + 1 for b in _bits(m)) for m in masks]
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))


def _split(p, mask):
    """(rest, part) canonical pair for an up-set given as a bitmask."""
    inside = [b + 1 for b in _bits(mask)]
    outside = [v for v in range(1, p.n + 1) if not (mask >> (v - 1)) & 1]
    left = canonical_form(induced_subposet(p, outside))[0]
    right = canonical_form(induced_subposet(p, inside))[0]
    return left, right


def coproduct(x):
    """Sum of (P minus I) tensor I over up-closed I; linear in LinComb input."""
    if isinstance(x, LinComb):
        out = TensorComb.zero()
        for p, c in x.terms():
            out = out + c * coproduct(p)
        return out
    p = x
    n = p.n
    order = sorted(range(n), key=lambda v: p.dn1[v].bit_count(), reverse=True)
    acc = {}

    def dfs(i, mask):
        if i == n:
            k = _split(p, mask)
            acc[k] = acc.get(k, 0) + 1
            return
        v = order[i]
        dfs(i + 1, mask)
        if p.up1[v] & ~mask == 0:
            dfs(i + 1, mask | (1 << v))

    dfs(0, 0)
    return TensorComb(acc)


def reduced_coproduct(x):
    """coproduct minus the two trivial terms; rejects the empty poset."""
    if isinstance(x, LinComb):
        out = TensorComb.zero()
        for p, c in x.terms():
            out = out + c * reduced_coproduct(p)
        return out
    if x.n == 0:
        raise EmptyInputError("reduced coproduct needs a nonempty poset")
    p = canonical_form(x)[0]
    return (
        coproduct(p)
        - TensorComb.term(p, EMPTY)
        - TensorComb.term(EMPTY, p)
    )


def deconcat_coproduct_g(x):
    """Deconcatenation along the g-factorization.

    With P = P1 g ... g Pr this is the sum over i of
    (P1 g ... g Pi) tensor (P(i+1) g ... g Pr), including both trivial
    splits.
    """
    if isinstance(x, LinComb):
        out = TensorComb.zero()
        for p, c in x.terms():
            out = out + c * deconcat_coproduct_g(p)
        return out
    p = x
    blocks = factor_blocks(p, "g")
    factors = [
        canonical_form(induced_subposet(p, b))[0] for b in blocks
    ]
    out = TensorComb.zero()
    for i in range(len(factors) + 1):
        left = compose_many(factors[:i], "g")
        right = compose_many(factors[i:], "g")
        out = out + TensorComb.term(left, right)
    return out
