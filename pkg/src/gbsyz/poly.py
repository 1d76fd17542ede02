"""Free-module polynomial vectors and monomial orders.

A monomial in R[X1..Xn]^m is X^alpha * e_pos; exponents are tuples
indexed by the ambient's variable list (index 0 = lex-greatest by
default). A vector is a descending-sorted tuple of (coeff, monomial)
terms under its active order; the empty tuple is 0. Ring polynomials
(division quotients, syzygy coordinates) are rank-1 vectors.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

from .errors import UsageError


class Mono(NamedTuple):
    exps: tuple
    pos: int


class Term(NamedTuple):
    coeff: object
    mono: Mono


class _NegInfinity:
    """mdeg of the zero vector; compares below every exponent tuple."""

    def __lt__(self, other):
        return not isinstance(other, _NegInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __repr__(self):
        return "-inf"


MDEG_NEG_INF = _NegInfinity()


class Ambient(NamedTuple):
    """The data of H_m = R[X1..Xn]^m."""

    ring: object
    nvars: int
    rank: int


def positive_part(alpha):
    """Componentwise max(alpha_i, 0)."""
    return tuple(a if a > 0 else 0 for a in alpha)


def exps_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exps_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(m, n):
    """Quotient exponent vector n/m if m divides n (same position), else None."""
    if m.pos != n.pos:
        return None
    out = []
    for a, b in zip(m.exps, n.exps):
        if a > b:
            return None
        out.append(b - a)
    return tuple(out)


def term_divides(t, u, ring):
    """Quotient term u/t when both coefficient and monomial divide, else None.

    The quotient is a ring-level term (coefficient, exponent vector);
    multiplying it back onto t recovers u exactly.
    """
    gamma = mono_divides(t.mono, u.mono)
    if gamma is None:
        return None
    c = ring.divides(t.coeff, u.coeff)
    if c is None:
        return None
    return Term(c, Mono(gamma, 0))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class TopLex:
    """Term-over-position order on H_m over lex on the ring monomials.

    `priority` is the variable-index permutation, most significant
    first; the default is declaration order (vars[0] greatest). Ring
    monomials compare lexicographically along the priority; ties go to
    the smaller position.
    """

    def __init__(self, nvars, priority=None):
        self.nvars = nvars
        self.priority = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(self.priority) != list(range(nvars)):
            raise UsageError(f"priority {priority!r} is not a permutation of 0..{nvars - 1}")

    def __eq__(self, other):
        return type(other) is TopLex and other.priority == self.priority

    def __hash__(self):
        return hash(("toplex", self.priority))

    def compare_exps(self, a, b):
        for i in self.priority:
            if a[i] != b[i]:
                return 1 if a[i] > b[i] else -1
        return 0

    def compare(self, m, n):
        c = self.compare_exps(m.exps, n.exps)
        if c:
            return c
        if m.pos != n.pos:
            return 1 if m.pos < n.pos else -1
        return 0


class Schreyer:
    """Order induced by a parent order and nonzero images g_1..g_p.

    X^a*eps_l > X^b*eps_k iff LM(X^a g_l) > LM(X^b g_k) under the
    parent order, with ties broken by l < k.
    """

    def __init__(self, images, parent):
        if not images:
            raise UsageError("Schreyer order needs at least one image")
        for g in images:
            if g.is_zero():
                raise UsageError("Schreyer order images must be nonzero")
        self.images = tuple(images)
        self.parent = parent
        self._lms = tuple(g.lm() for g in self.images)

    def compare(self, m, n):
        lm_l = self._lms[m.pos]
        lm_k = self._lms[n.pos]
        c = self.parent.compare(
            Mono(exps_add(m.exps, lm_l.exps), lm_l.pos),
            Mono(exps_add(n.exps, lm_k.exps), lm_k.pos),
        )
        if c:
            return c
        if m.pos != n.pos:
            return 1 if m.pos < n.pos else -1
        return 0


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


class Vector:
    """An element of H_m as a descending-sorted term tuple."""

    __slots__ = ("ambient", "order", "terms")

    def __init__(self, ambient, order, terms, _normalized=False):
        self.ambient = ambient
        self.order = order
        if _normalized:
            self.terms = tuple(terms)
        else:
            self.terms = _normalize(ambient, order, terms)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient, order):
        return cls(ambient, order, (), _normalized=True)

    @classmethod
    def monomial(cls, ambient, order, coeff, exps, pos=0):
        return cls(ambient, order, [Term(coeff, Mono(tuple(exps), pos))])

    # -- leading data --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def lt(self):
        return self.terms[0] if self.terms else None

    def lm(self):
        if not self.terms:
            raise UsageError("leading monomial of the zero vector")
        return self.terms[0].mono

    def lc(self):
        if not self.terms:
            return self.ambient.ring.zero()
        return self.terms[0].coeff

    def lp(self):
        if not self.terms:
            raise UsageError("leading position of the zero vector")
        return self.terms[0].mono.pos

    def mdeg(self):
        if not self.terms:
            return MDEG_NEG_INF
        return self.terms[0].mono.exps

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other):
        if self.ambient != other.ambient:
            raise UsageError("vectors from different ambients")
        if self.order is not other.order and self.order != other.order:
            raise UsageError("vectors under different monomial orders")

    def add(self, other):
        self._check_compatible(other)
        ring = self.ambient.ring
        cmp = self.order.compare
        out = []
        i, j = 0, 0
        a, b = self.terms, other.terms
        while i < len(a) and j < len(b):
            c = cmp(a[i].mono, b[j].mono)
            if c > 0:
                out.append(a[i])
                i += 1
            elif c < 0:
                out.append(b[j])
                j += 1
            else:
                s = ring.add(a[i].coeff, b[j].coeff)
                if not ring.is_zero(s):
                    out.append(Term(s, a[i].mono))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Vector(self.ambient, self.order, out, _normalized=True)

    def neg(self):
        ring = self.ambient.ring
        return Vector(
            self.ambient,
            self.order,
            [Term(ring.neg(c), m) for c, m in self.terms],
            _normalized=True,
        )

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, coeff):
        """Multiply by a ring element (zero terms may appear and are dropped)."""
        ring = self.ambient.ring
        out = []
        for c, m in self.terms:
            p = ring.mul(coeff, c)
            if not ring.is_zero(p):
                out.append(Term(p, m))
        return Vector(self.ambient, self.order, out, _normalized=True)

    def term_mul(self, coeff, exps):
        """Multiply by the ring term coeff * X^exps."""
        ring = self.ambient.ring
        out = []
        for c, m in self.terms:
            p = ring.mul(coeff, c)
            if not ring.is_zero(p):
                out.append(Term(p, Mono(exps_add(m.exps, exps), m.pos)))
        return Vector(self.ambient, self.order, out, _normalized=True)

    def mul(self, other):
        """Polynomial product; only meaningful for rank-1 (ring) vectors."""
        self._check_compatible(other)
        if self.ambient.rank != 1:
            raise UsageError("product of module vectors of rank > 1")
        acc = Vector.zero(self.ambient, self.order)
        for c, m in self.terms:
            acc = acc.add(other.term_mul(c, m.exps))
        return acc

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if self.ambient != other.ambient or len(self.terms) != len(other.terms):
            return False
        ring = self.ambient.ring
        mine = {m: c for c, m in self.terms}
        return all(
            m in mine and ring.eq(mine[m], c) for c, m in other.terms
        )

    def __hash__(self):
        ring = self.ambient.ring
        return hash(
            (self.ambient, frozenset((m, ring.sort_key(c)) for c, m in self.terms))
        )

    def __repr__(self):
        from .dsl import format_vector

        names = tuple(f"x{i + 1}" for i in range(self.ambient.nvars))
        return f"<{format_vector(self, names)}>"


def _normalize(ambient, order, terms):
    ring = ambient.ring
    merged = {}
    for c, m in terms:
        if m.pos < 0 or m.pos >= ambient.rank or len(m.exps) != ambient.nvars:
            raise UsageError(f"monomial {m} outside ambient {ambient}")
        if any(e < 0 for e in m.exps):
            raise UsageError(f"negative exponent in {m}")
        if m in merged:
            merged[m] = ring.add(merged[m], c)
        else:
            merged[m] = c
    monos = [m for m, c in merged.items() if not ring.is_zero(c)]
    monos.sort(key=functools.cmp_to_key(order.compare), reverse=True)
    return tuple(Term(merged[m], m) for m in monos)


def reorder(v, order):
    """The same vector re-sorted under a different monomial order."""
    return Vector(v.ambient, order, v.terms)


def poly_mul_vector(q, v):
    """Multiply a rank-1 ring polynomial into a module vector."""
    acc = Vector.zero(v.ambient, v.order)
    for c, m in q.terms:
        acc = acc.add(v.term_mul(c, m.exps))
    return acc


def compare_vectors(order, u, v):
    """Total deterministic comparison used to sort bases (descending)."""
    ring = u.ambient.ring
    for a, b in zip(u.terms, v.terms):
        c = order.compare(a.mono, b.mono)
        if c:
            return c
        ka, kb = ring.sort_key(a.coeff), ring.sort_key(b.coeff)
        if ka != kb:
            return -1 if ka > kb else 1
    if len(u.terms) != len(v.terms):
        return 1 if len(u.terms) > len(v.terms) else -1
    return 0


def sort_basis(vectors, order):
    """Descending by leading term, the stable display and Schreyer-source order."""

    def cmp(u, v):
        c = order.compare(u.lm(), v.lm())
        if c:
            return c
        ring = u.ambient.ring
        ka, kb = ring.sort_key(u.lc()), ring.sort_key(v.lc())
        if ka != kb:
            return -1 if ka > kb else 1
        return compare_vectors(order, u, v)

    return sorted(vectors, key=functools.cmp_to_key(cmp), reverse=True)
