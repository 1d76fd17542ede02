"""Division with remainder, S-polynomials, Buchberger's algorithm.

The division aggregates every divisor whose leading monomial divides
the working leading monomial and reduces by a Bezout combination of
their leading coefficients, with one refinement: when a single leading
coefficient already divides exactly, the first such divisor is used
alone. That reproduces the hand computations of the worked examples
while keeping the output contract (reconstruction identity, the
LM(q_j)LM(h_j) <= LM(h) bound, and no remainder term lying in the
leading-term module of the divisors).

`pseudo_reduce` is the leading-term exhaustion used between syzygy
levels: unit-normalize leading coefficients, reduce a leading term away
whenever the other leading terms divide it, and replace coefficients by
proper gcd combinations when they improve the displayed leading-term
module. Tails are deliberately left alone; full tail reduction would
rewrite the bases the worked examples pin down.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Optional

from .errors import GuardExceeded, UsageError
from .poly import (
    Mono,
    Term,
    Vector,
    exps_sub,
    mono_divides,
    poly_mul_vector,
    positive_part,
    sort_basis,
)


class DivisionResult(NamedTuple):
    quotients: tuple
    remainder: Vector


class SPair(NamedTuple):
    value: Vector
    left_cofactor: Optional[Term]
    right_cofactor: Optional[Term]
    kind: str  # "auto" | "cross" | "zero"


class GroebnerBasis(NamedTuple):
    elements: tuple
    order: object
    pseudo_reduced: bool


def _ring_poly_ambient(ambient):
    from .poly import Ambient

    return Ambient(ambient.ring, ambient.nvars, 1)


def _quotient_vector(ambient, order, acc):
    ring_amb = _ring_poly_ambient(ambient)
    return Vector(ring_amb, order, [Term(c, Mono(e, 0)) for e, c in acc.items()])


def _check_divisors(h, divisors):
    for d in divisors:
        if d.is_zero():
            raise UsageError("zero divisor in division")
        h._check_compatible(d)


def divide(h, divisors, order=None, trace=None):
    """Divide h by the list of divisors (gcd-aggregating division).

    Returns quotients as rank-1 polynomials and a remainder none of
    whose terms lies in the leading-term module of the divisors. With
    an empty divisor list the remainder is h itself.
    """
    order = order or h.order
    _check_divisors(h, divisors)
    ring = h.ambient.ring
    zero = ring.zero()
    q_acc = [dict() for _ in divisors]
    r_terms = []
    lead = [(d.lc(), d.lm()) for d in divisors]
    work = h
    while not work.is_zero():
        lc, lm = work.terms[0]
        D = []
        for j, (_djc, djm) in enumerate(lead):
            gamma = mono_divides(djm, lm)
            if gamma is not None:
                D.append((j, gamma))
        if not D:
            r_terms.append(work.terms[0])
            work = work.sub(Vector(work.ambient, order, [work.terms[0]], _normalized=True))
            continue
        if trace is not None:
            trace({"event": "reduction_step", "lm": lm, "divisors": [j for j, _ in D]})
        step = None
        for j, gamma in D:
            q = ring.divides(lead[j][0], lc)
            if q is not None:
                step = [(j, gamma, q)]
                break
        if step is None:
            d, coeffs = ring.gcd_bezout([lead[j][0] for j, _ in D])
            c, e = ring.euclid_step(lc, d)
            if not ring.is_zero(e):
                r_terms.append(Term(e, lm))
            step = []
            for (j, gamma), cj in zip(D, coeffs):
                w = ring.mul(c, cj)
                if not ring.is_zero(w):
                    step.append((j, gamma, w))
        new = work
        for j, gamma, w in step:
            q_acc[j][gamma] = ring.add(q_acc[j].get(gamma, zero), w)
            new = new.sub(divisors[j].term_mul(w, gamma))
        if r_terms and r_terms[-1].mono == lm:
            new = new.sub(Vector(work.ambient, order, [r_terms[-1]], _normalized=True))
        work = new
    quotients = tuple(_quotient_vector(h.ambient, order, acc) for acc in q_acc)
    return DivisionResult(quotients, Vector(h.ambient, order, r_terms))


def divide_valuation(h, divisors, order=None, trace=None):
    """First-divisor division for the valuation-ring backends.

    Scans for the first leading term that divides (as a term) and
    reduces by it alone; anything else moves to the remainder.
    """
    order = order or h.order
    if not h.ambient.ring.is_valuation_ring:
        raise UsageError(f"{h.ambient.ring} is not a valuation ring")
    _check_divisors(h, divisors)
    ring = h.ambient.ring
    zero = ring.zero()
    q_acc = [dict() for _ in divisors]
    r_terms = []
    work = h
    while not work.is_zero():
        lc, lm = work.terms[0]
        hit = None
        for j, d in enumerate(divisors):
            gamma = mono_divides(d.lm(), lm)
            if gamma is None:
                continue
            c = ring.divides(d.lc(), lc)
            if c is not None:
                hit = (j, gamma, c)
                break
        if hit is None:
            r_terms.append(work.terms[0])
            work = work.sub(Vector(work.ambient, order, [work.terms[0]], _normalized=True))
            continue
        j, gamma, c = hit
        if trace is not None:
            trace({"event": "reduction_step", "lm": lm, "divisors": [j]})
        q_acc[j][gamma] = ring.add(q_acc[j].get(gamma, zero), c)
        work = work.sub(divisors[j].term_mul(c, gamma))
    quotients = tuple(_quotient_vector(h.ambient, order, acc) for acc in q_acc)
    return DivisionResult(quotients, Vector(h.ambient, order, r_terms))


def s_pair_indexed(f, g, order, auto):
    """S-pair computation with the auto/cross split decided by the caller.

    Buchberger's loop and the syzygy algorithms take the auto case for
    the index pair i = j; two equal values at distinct indices still
    form a cross pair (their syzygy eps_i - eps_j matters).
    """
    if f.is_zero() or g.is_zero():
        raise UsageError("S-polynomial of the zero vector")
    f._check_compatible(g)
    ring = f.ambient.ring
    zero_vec = Vector.zero(f.ambient, order)
    if auto:
        b = ring.ann_gen(f.lc())
        if ring.is_zero(b):
            return SPair(zero_vec, None, None, "auto")
        nil = tuple([0] * f.ambient.nvars)
        return SPair(f.scale(b), Term(b, Mono(nil, 0)), None, "auto")
    if f.lp() != g.lp():
        return SPair(zero_vec, None, None, "zero")
    a, b = ring.spair_cofactors(f.lc(), g.lc())
    mu, nu = f.mdeg(), g.mdeg()
    beta = positive_part(exps_sub(nu, mu))
    alpha = positive_part(exps_sub(mu, nu))
    value = f.term_mul(b, beta).sub(g.term_mul(a, alpha))
    return SPair(value, Term(b, Mono(beta, 0)), Term(a, Mono(alpha, 0)), "cross")


def s_poly(f, g, order=None):
    """The S-polynomial of f and g, with its cofactors.

    f = g (as values) is the auto case b*f with Ann(LC(f)) = <b>;
    distinct leading positions give the zero S-polynomial; otherwise
    the cofactors come from the ring's coprime decomposition of the
    leading coefficients.
    """
    order = order or f.order
    if f.is_zero() or g.is_zero():
        raise UsageError("S-polynomial of the zero vector")
    return s_pair_indexed(f, g, order, auto=(f == g))


def buchberger(gens, order, guard=10_000, trace=None):
    """Buchberger's algorithm with the deterministic (i, j) pair queue.

    Auto pairs whose leading coefficient is regular are skipped without
    a division. Remainders are taken against the full current basis.
    The guard bounds the basis size; all shipped rings are Groebner
    rings, so hitting it means a bug, not a hard instance.
    """
    gens = list(gens)
    if not gens:
        raise UsageError("buchberger needs at least one generator")
    if guard < 1:
        raise UsageError("guard must be >= 1")
    for g in gens:
        if g.is_zero():
            raise UsageError("zero generator")
    basis = list(gens)
    queue = deque((i, j) for i in range(len(basis)) for j in range(i, len(basis)))
    while queue:
        i, j = queue.popleft()
        sp = s_pair_indexed(basis[i], basis[j], order, auto=(i == j))
        if trace is not None:
            trace({"event": "pair", "i": i + 1, "j": j + 1, "kind": sp.kind})
        if sp.value.is_zero():
            continue
        rem = divide(sp.value, basis, order, trace=trace).remainder
        if rem.is_zero():
            continue
        basis.append(rem)
        t = len(basis) - 1
        if len(basis) > guard:
            raise GuardExceeded(f"basis grew past guard={guard}", tuple(basis))
        if trace is not None:
            trace({"event": "basis_added", "index": t + 1})
        queue.extend((k, t) for k in range(t))
        queue.append((t, t))
    return GroebnerBasis(tuple(basis), order, pseudo_reduced=False)


def is_groebner(elements, order) -> bool:
    """Buchberger's criterion: every S-pair (auto included) reduces to zero."""
    elements = list(elements)
    for g in elements:
        if g.is_zero():
            raise UsageError("zero element in candidate basis")
    for i in range(len(elements)):
        for j in range(i, len(elements)):
            sp = s_pair_indexed(elements[i], elements[j], order, auto=(i == j))
            if sp.value.is_zero():
                continue
            if not divide(sp.value, elements, order).remainder.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# leading-term exhaustion (pseudo-reduction)
# ---------------------------------------------------------------------------


def _unit_normalize(v):
    ring = v.ambient.ring
    u, _canon = ring.normalize_unit(v.lc())
    if ring.eq(u, ring.one()):
        return v
    return v.scale(ring.unit_inverse(u))


def _head_exhaust(g, others, order):
    """Drive the leading term of g as low as the other elements allow.

    Returns (new_g_or_None, extras): gcd combinations adjoined when the
    Bezout coefficient of g is not a unit. Such a combination joins the
    divisor set at once, so g's old leading term is reduced away before
    returning (otherwise the two could recreate each other forever).
    """
    ring = g.ambient.ring
    others = list(others)
    extras = []
    while True:
        if g.is_zero():
            return None, extras
        g = _unit_normalize(g)
        lc, lm = g.terms[0]
        D = []
        for o in others:
            gamma = mono_divides(o.lm(), lm)
            if gamma is not None:
                D.append((o, gamma))
        if not D:
            return g, extras
        single = None
        for o, gamma in D:
            q = ring.divides(o.lc(), lc)
            if q is not None:
                single = (o, gamma, q)
                break
        if single is not None:
            o, gamma, q = single
            g = g.sub(o.term_mul(q, gamma))
            continue
        d, coeffs = ring.gcd_bezout([o.lc() for o, _ in D])
        c, e = ring.euclid_step(lc, d)
        if ring.is_zero(e):
            for (o, gamma), cj in zip(D, coeffs):
                w = ring.mul(c, cj)
                if not ring.is_zero(w):
                    g = g.sub(o.term_mul(w, gamma))
            continue
        dd, combo = ring.gcd_bezout([lc, d])
        if ring.divides(lc, dd) is not None:
            return g, extras  # gcd is an associate of LC(g): nothing to gain
        c0, c1 = combo
        mixed = Vector.zero(g.ambient, order)
        for (o, gamma), cj in zip(D, coeffs):
            w = ring.mul(c1, cj)
            if not ring.is_zero(w):
                mixed = mixed.add(o.term_mul(w, gamma))
        comb = g.scale(c0).add(mixed)
        if ring.is_unit(c0):
            g = comb
            continue
        comb = _unit_normalize(comb)
        extras.append(comb)
        others.append(comb)


def pseudo_reduce(gb, order=None, guard=10_000):
    """Exhaust all reductions between the leading terms of a Groebner basis.

    Elements are unit-normalized and kept sorted descending; an element
    whose leading term the others divide is rewritten (and dropped when
    it reduces to zero), and coefficient gcd combinations are formed
    where they properly shrink a displayed leading coefficient. The
    result generates the same module and is again a Groebner basis.
    """
    if isinstance(gb, GroebnerBasis):
        elements, order = list(gb.elements), gb.order
    else:
        if order is None:
            raise UsageError("pseudo_reduce of a plain list needs the order")
        elements = list(gb)
    work = sort_basis([_unit_normalize(v) for v in elements], order)
    passes = 0
    changed = True
    while changed:
        passes += 1
        if passes > guard:
            raise GuardExceeded("pseudo_reduce did not stabilise", tuple(work))
        changed = False
        idx = 0
        while idx < len(work):
            others = work[:idx] + work[idx + 1 :]
            new, extras = _head_exhaust(work[idx], others, order)
            for extra in extras:
                if not extra.is_zero() and extra not in work:
                    work.append(extra)
                    changed = True
            if new is None:
                del work[idx]
                changed = True
                continue
            if new != work[idx]:
                changed = True
            work[idx] = new
            idx += 1
        work = sort_basis(work, order)
    return GroebnerBasis(tuple(work), order, pseudo_reduced=True)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


class TermCertificate(NamedTuple):
    """T = sum coeff_i * X^gamma_i * gens[index_i]."""

    entries: tuple  # of (index, coeff, gamma)


def term_module_member(term, gens, ring):
    """Membership of a term in a module generated by terms.

    gens is a list of (coeff, Mono). The divisible subset decides: the
    gcd of its coefficients must divide the target coefficient.
    """
    b, target = term
    entries = []
    divisible = []
    for i, (c, m) in enumerate(gens):
        if ring.is_zero(c):
            raise UsageError("zero generator term")
        gamma = mono_divides(m, target)
        if gamma is not None:
            divisible.append((i, c, gamma))
    if not divisible:
        return None
    d, coeffs = ring.gcd_bezout([c for _i, c, _g in divisible])
    q = ring.divides(d, b)
    if q is None:
        return None
    for (i, _c, gamma), cj in zip(divisible, coeffs):
        w = ring.mul(q, cj)
        if not ring.is_zero(w):
            entries.append((i, w, gamma))
    return TermCertificate(tuple(entries))


def module_member(h, gb):
    """Quotients expressing h over a Groebner basis, or None."""
    res = divide(h, list(gb.elements), gb.order)
    if res.remainder.is_zero():
        return res.quotients
    return None


def leading_terms_by_position(elements):
    """Group the leading terms of a basis by position for display."""
    out = {}
    for v in elements:
        lt = v.lt()
        out.setdefault(lt.mono.pos, []).append((lt.coeff, lt.mono.exps))
    return out


def expand_combination(quotients, vectors):
    """sum q_i * v_i for rank-1 quotients against module vectors."""
    if not vectors:
        raise UsageError("empty combination")
    acc = Vector.zero(vectors[0].ambient, vectors[0].order)
    for q, v in zip(quotients, vectors):
        acc = acc.add(poly_mul_vector(q, v))
    return acc
