"""The division algorithm and its valuation-ring variant."""

import random

import pytest

from gbsyz import (
    Ambient,
    TopLex,
    UsageError,
    divide,
    divide_valuation,
    expand_combination,
    term_module_member,
)
from helpers import (
    gens_of,
    problem,
    random_nonzero_vector,
    random_vector,
    rings_under_test,
    vec,
)


def check_contract(h, divisors, res):
    order = h.order
    recon = res.remainder
    if divisors:
        recon = recon.add(expand_combination(res.quotients, divisors))
    else:
        assert res.remainder == h
    assert recon == h, "reconstruction identity failed"
    if not h.is_zero():
        for q, d in zip(res.quotients, divisors):
            if q.is_zero():
                continue
            prod = tuple(a + b for a, b in zip(q.lm().exps, d.lm().exps))
            assert order.compare(h.lm(), type(d.lm())(prod, d.lm().pos)) >= 0
    ring = h.ambient.ring
    lts = [(d.lc(), d.lm()) for d in divisors]
    for t in res.remainder.terms:
        assert term_module_member(t, lts, ring) is None, "remainder term is reducible"


def test_divide_by_self():
    p = problem("zint_ideal")
    g = vec(p, "Y^2 - X + 3")
    res = divide(g, [g], p.order)
    assert res.remainder.is_zero()
    assert res.quotients[0] == vec(p, "1")


def test_divide_empty_divisors():
    p = problem("zint_ideal")
    h = vec(p, "Y^2 - X + 3")
    res = divide(h, [], p.order)
    assert res.remainder == h and res.quotients == ()


def test_divide_zint_ideal_golden():
    # S(g1,g2) = 4Y^2 - 4X^3 + 12X^2 divides out as 4*g1 + (-X+3)*g2
    p = problem("zint_ideal")
    _, gens = gens_of(p)
    h = vec(p, "4*Y^2 - 4*X^3 + 12*X^2")
    res = divide(h, gens, p.order)
    assert res.remainder.is_zero()
    assert [str_q for str_q in _fmt(res.quotients, p)] == ["4", "-X + 3", "0"]


def test_divide_z12_ideal_golden():
    p = problem("z12_ideal")
    _, gens = gens_of(p)
    h = vec(p, "3*X^2 + 6")
    res = divide(h, gens, p.order)
    assert res.remainder.is_zero()
    assert _fmt(res.quotients, p) == ["0", "0", "1", "2"]


def _fmt(quotients, p):
    from gbsyz import format_vector

    return [format_vector(q, p.var_names) for q in quotients]


def test_divide_zero_divisor_rejected():
    p = problem("zint_ideal")
    with pytest.raises(UsageError):
        divide(vec(p, "X"), [vec(p, "0")], p.order)


def test_divide_valuation_exact_divisor():
    p = problem("zloc2_ideal")
    _, gens = gens_of(p)
    h = vec(p, "2*Y")
    res = divide_valuation(h, gens, p.order)
    assert res.remainder.is_zero()
    assert _fmt(res.quotients, p) == ["0", "1", "0"]


def test_divide_valuation_f2y_case():
    # remainder terms are certified irreducible by the term-membership test
    p = problem("f2y_spair")
    _, gens = gens_of(p)
    h = vec(p, "X1^2 + y*X2")
    res = divide_valuation(h, gens, p.order)
    check_contract(h, gens, res)
    assert not res.remainder.is_zero()


def test_divide_valuation_requires_valuation_ring():
    p = problem("zint_ideal")
    with pytest.raises(UsageError):
        divide_valuation(vec(p, "X"), [vec(p, "X")], p.order)


def test_divide_valuation_position_mismatch():
    from gbsyz import parse_problem

    q = problem("zloc2_ideal")
    h = vec(q, "Y^4")
    res = divide_valuation(h, [vec(q, "X^3 - 1")], q.order)
    check_contract(h, [vec(q, "X^3 - 1")], res)
    assert res.remainder == h
    # divisor positions never match the dividend's: remainder is h itself
    p2 = parse_problem("ring Z_(2); vars Y X; rank 2; h = [Y + X, 0]; d = [0, X];")
    h2, d2 = [v for _, v in p2.generators]
    res2 = divide_valuation(h2, [d2], p2.order)
    assert res2.remainder == h2 and res2.quotients[0].is_zero()


def test_division_contract_randomized():
    rng = random.Random(42)
    for ring in rings_under_test():
        amb = Ambient(ring, 2, 3)
        order = TopLex(2)
        for _ in range(250):
            h = random_vector(rng, amb, order, max_terms=4, max_exp=4)
            divisors = [
                random_nonzero_vector(rng, amb, order, max_terms=3, max_exp=3)
                for _ in range(rng.randrange(1, 4))
            ]
            res = divide(h, divisors, order)
            check_contract(h, divisors, res)
            if ring.is_valuation_ring:
                resv = divide_valuation(h, divisors, order)
                check_contract(h, divisors, resv)


def test_divide_and_valuation_agree_on_contract_not_output():
    # both satisfy the same postconditions; the quotients may differ
    p = problem("f2y_spair")
    _, gens = gens_of(p)
    h = vec(p, "y*X2*X1 + X1^3 + y")
    a = divide(h, gens, p.order)
    b = divide_valuation(h, gens, p.order)
    check_contract(h, gens, a)
    check_contract(h, gens, b)


def test_members_reduce_to_zero_under_both_divisions():
    # over a valuation ring, a known module element has zero remainder
    # under the aggregating and the first-divisor division alike
    import random

    from gbsyz import buchberger, expand_combination

    rng = random.Random(404)
    p = problem("zloc2_ideal")
    _, gens = gens_of(p)
    gb = buchberger(gens, p.order).elements
    for _ in range(40):
        member = expand_combination(
            [random_vector(rng, gens[0].ambient._replace(rank=1), p.order, 2, 2) for _ in gb],
            list(gb),
        )
        assert divide(member, list(gb), p.order).remainder.is_zero()
        assert divide_valuation(member, list(gb), p.order).remainder.is_zero()
