"""Shared fixtures: the worked-example problems and random generators."""

from __future__ import annotations

from fractions import Fraction

from gbsyz import (
    Ambient,
    Integers,
    IntegersLocalizedAt,
    IntegersMod,
    Mono,
    Term,
    TruncatedF2y,
    Vector,
    parse_problem,
)
from gbsyz.dsl import ProblemFile, parse_vector_literal

GOLDEN = {
    "f2y_spair": """ring F2[y]/y^2; vars X2 X1; rank 1;
        f = y*X2 + X1;
        g = y*X1 + y;
    """,
    "z2_rank2": """ring Z/2; vars Y X; rank 2;
        u1 = [Y, X];
        u2 = [X, 0];
    """,
    "zloc2_ideal": """ring Z_(2); vars Y X; rank 1;
        g1 = Y^4 - Y;
        g2 = 2*Y;
        g3 = X^3 - 1;
    """,
    "z4_ideal": """ring Z/4; vars Y X; rank 1;
        g1 = Y^4 - Y;
        g2 = 2*Y;
        g3 = X^3 - 1;
    """,
    "zint_ideal": """ring Z; vars Y X; rank 1;
        g1 = Y^2 - X + 3;
        g2 = 4*X^2 - 4;
        g3 = 6*X + 6;
    """,
    "z12_ideal": """ring Z/12; vars Y X; rank 1;
        g1 = Y + 1;
        g2 = X^3 + X^2 + 6;
        g3 = 3*X^2;
        g4 = 9;
    """,
}


def problem(key):
    return parse_problem(GOLDEN[key])


def gens_of(prob):
    return [name for name, _ in prob.generators], [v for _, v in prob.generators]


def resized_problem(prob, rank):
    """The same ring/vars with a different rank, for parsing payload strings."""
    ambient = Ambient(prob.ring, len(prob.var_names), rank)
    return ProblemFile(
        prob.ring, prob.var_names, rank, prob.order, ambient, prob.poly_ambient, ()
    )


def parse_in(prob, rank, text):
    return parse_vector_literal(text, resized_problem(prob, rank))


def rings_under_test():
    return [
        Integers(),
        IntegersMod(4),
        IntegersMod(6),
        IntegersMod(12),
        TruncatedF2y(2),
        IntegersLocalizedAt(2),
    ]


def random_element(rng, ring):
    if isinstance(ring, Integers):
        return rng.randint(-6, 6)
    if isinstance(ring, IntegersMod):
        return rng.randrange(ring.n)
    if isinstance(ring, TruncatedF2y):
        return rng.randrange(1 << ring.r)
    if isinstance(ring, IntegersLocalizedAt):
        den = rng.choice([1, 3, 5, 7])
        while den % ring.p == 0:
            den += 2
        return Fraction(rng.randint(-8, 8), den)
    raise AssertionError(ring)


def random_nonzero(rng, ring):
    x = random_element(rng, ring)
    while ring.is_zero(x):
        x = random_element(rng, ring)
    return x


def element_candidates(ring, bound=10):
    """Search space for brute-force oracles; exhaustive on the finite rings."""
    if isinstance(ring, IntegersMod):
        return list(range(ring.n))
    if isinstance(ring, TruncatedF2y):
        return list(range(1 << ring.r))
    if isinstance(ring, Integers):
        return list(range(-bound, bound + 1))
    if isinstance(ring, IntegersLocalizedAt):
        dens = [d for d in (1, 3, 5) if d % ring.p]
        return [Fraction(n, d) for d in dens for n in range(-bound, bound + 1)]
    raise AssertionError(ring)


def random_mono(rng, nvars, rank, max_exp=4):
    return Mono(tuple(rng.randrange(max_exp + 1) for _ in range(nvars)), rng.randrange(rank))


def random_vector(rng, ambient, order, max_terms=4, max_exp=4):
    terms = []
    for _ in range(rng.randrange(max_terms + 1)):
        c = random_element(rng, ambient.ring)
        if not ambient.ring.is_zero(c):
            terms.append(Term(c, random_mono(rng, ambient.nvars, ambient.rank, max_exp)))
    return Vector(ambient, order, terms)


def random_nonzero_vector(rng, ambient, order, max_terms=4, max_exp=4):
    while True:
        v = random_vector(rng, ambient, order, max_terms, max_exp)
        if not v.is_zero():
            return v


def vec(prob, text, order=None):
    v = parse_vector_literal(text, prob)
    if order is not None and order is not prob.order:
        return Vector(v.ambient, order, v.terms)
    return v
