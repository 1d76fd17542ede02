"""Coefficient rings: Z, Z/N, F2[y]/(y^r), and Z localized at a prime p.

All four are coherent strict Bezout rings with a divisibility test.
Elements are plain Python values (int for Z and Z/N, an r-bit mask for
F2[y]/(y^r), Fraction for Z_(p)); every operation goes through the ring
object, so values from different rings never mix silently.

Conventions fixed here, because the algorithms compare results "up to a
unit" and we need equality of normal forms:

* canonical associates: |a| over Z, gcd(a, N) over Z/N, y^k over
  F2[y]/(y^r), p^v over Z_(p);
* divides() returns the smallest canonical quotient when several exist;
* euclidean steps over Z minimize |e| and break ties toward e > 0;
* over the two valuation rings, division is trivial (c=0, e=a) unless
  the divisor divides exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def xgcd(a, b):
    """Extended gcd for nonnegative integers: returns (g, x, y) with x*a + y*b = g.

    When one argument divides the other the coefficients are (1, 0) or
    (0, 1); otherwise the classical iteration yields the minimal pair.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    if b == 0:
        return a, 1, 0
    if a == 0:
        return b, 0, 1
    if b % a == 0:
        return a, 1, 0
    if a % b == 0:
        return b, 0, 1
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return g, x, y


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Ring:
    """Shared interface of the four coefficient-ring backends."""

    is_domain = False
    has_zerodivisors = False
    is_valuation_ring = False

    # -- plain arithmetic -------------------------------------------------

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_zero(self, a):
        raise NotImplementedError

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def from_int(self, n):
        raise NotImplementedError

    def from_fraction(self, num, den):
        """Interpret a literal num/den, or raise UsageError if it has no meaning here."""
        from .errors import UsageError

        if den == 0:
            raise UsageError("zero denominator")
        raise UsageError(f"fraction {num}/{den} is not a valid coefficient in {self}")

    # -- Bezout structure -------------------------------------------------

    def divides(self, a, b):
        """Return c with b = c*a if b lies in <a>, else None."""
        raise NotImplementedError

    def is_unit(self, a):
        return self.divides(a, self.one()) is not None

    def gcd_bezout(self, items):
        """Return (d, coeffs) with d = sum(c_i * a_i), d dividing every a_i.

        d is the canonical associate of the gcd; the empty list is a
        usage error (an empty divisible set is the caller's d = 0 case).
        """
        raise NotImplementedError

    def strict_pair(self, b1, b2):
        """Return (d, b1p, b2p, c1, c2) with b1 = d*b1p, b2 = d*b2p, c1*b1p + c2*b2p = 1."""
        raise NotImplementedError

    def spair_cofactors(self, lc_f, lc_g):
        """Return (a, b) with b*lc_f = a*lc_g = lcm-like cancellation and gcd(a, b) = 1.

        The S-polynomial of f and g is b*X^beta*f - a*X^alpha*g.
        """
        d, fp, gp, _c1, _c2 = self.strict_pair(lc_f, lc_g)
        return fp, gp

    def ann_gen(self, a):
        """Return a canonical generator of Ann(a); 1 for a = 0, 0 when a is regular."""
        raise NotImplementedError

    def euclid_step(self, a, d):
        """Return (c, e) with a = c*d + e and e = 0 iff d divides a."""
        raise NotImplementedError

    def normalize_unit(self, a):
        """Return (u, a_canon) with a = u * a_canon and u a unit."""
        raise NotImplementedError

    def canonical(self, a):
        return self.normalize_unit(a)[1]

    def unit_inverse(self, u):
        inv = self.divides(u, self.one())
        if inv is None:
            from .errors import InternalError

            raise InternalError(f"{self.format(u)} is not a unit in {self}")
        return inv

    # -- presentation ------------------------------------------------------

    def format(self, a):
        raise NotImplementedError

    def sort_key(self, a):
        """A deterministic total key on canonical element representations."""
        raise NotImplementedError

    def descriptor(self):
        """The DSL spelling of this ring (`ring <descriptor>;`)."""
        raise NotImplementedError

    def __repr__(self):
        return self.descriptor()


class Integers(Ring):
    """The rational integers with exact arbitrary-precision arithmetic."""

    is_domain = True

    def __eq__(self, other):
        return type(other) is Integers

    def __hash__(self):
        return hash("Z")

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n

    def from_fraction(self, num, den):
        from .errors import UsageError

        if den != 0 and num % den == 0:
            return num // den
        raise UsageError(f"{num}/{den} is not an integer coefficient")

    def divides(self, a, b):
        if a == 0:
            return 0 if b == 0 else None
        return b // a if b % a == 0 else None

    def gcd_bezout(self, items):
        from .errors import UsageError

        if not items:
            raise UsageError("gcd_bezout of an empty list")
        d, coeffs = abs(items[0]), [1 if items[0] >= 0 else -1]
        for a in items[1:]:
            g, x, y = xgcd(d, abs(a))
            coeffs = [c * x for c in coeffs]
            coeffs.append(y if a >= 0 else -y)
            d = g
        return d, coeffs

    def strict_pair(self, b1, b2):
        from .errors import UsageError

        if b1 == 0 and b2 == 0:
            raise UsageError("strict_pair(0, 0)")
        d = gcd(b1, b2)
        b1p, b2p = b1 // d, b2 // d
        g, x, y = xgcd(abs(b1p), abs(b2p))
        assert g == 1
        c1 = x if b1p >= 0 else -x
        c2 = y if b2p >= 0 else -y
        return d, b1p, b2p, c1, c2

    def ann_gen(self, a):
        return 1 if a == 0 else 0

    def euclid_step(self, a, d):
        if d == 0:
            return 0, a
        sign = 1 if d > 0 else -1
        ad = abs(d)
        c = a // ad
        e = a - c * ad
        # e in [0, ad); the balanced remainder may be smaller
        if abs(e - ad) < e:
            c, e = c + 1, e - ad
        return c * sign, e

    def normalize_unit(self, a):
        if a < 0:
            return -1, -a
        return 1, a

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return (abs(a), -a)

    def descriptor(self):
        return "Z"


class IntegersMod(Ring):
    """Z/NZ with canonical representatives in [0, N-1]."""

    has_zerodivisors = True

    def __init__(self, n):
        from .errors import UsageError

        if not isinstance(n, int) or n < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n

    def __eq__(self, other):
        return type(other) is IntegersMod and other.n == self.n

    def __hash__(self):
        return hash(("Z/", self.n))

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_zero(self, a):
        return a % self.n == 0

    def from_int(self, v):
        return v % self.n

    def from_fraction(self, num, den):
        from .errors import UsageError

        inv = self.divides(den % self.n, self.one())
        if den == 0 or inv is None:
            raise UsageError(f"{num}/{den} is not a valid coefficient mod {self.n}")
        return (num * inv) % self.n

    def divides(self, a, b):
        a, b = a % self.n, b % self.n
        if a == 0:
            return 0 if b == 0 else None
        g = gcd(a, self.n)
        if b % g:
            return None
        m = self.n // g
        # smallest canonical solution of a*x = b (mod n)
        return (b // g) * pow(a // g, -1, m) % m

    def gcd_bezout(self, items):
        from .errors import UsageError

        if not items:
            raise UsageError("gcd_bezout of an empty list")
        reps = [a % self.n for a in items]
        g, coeffs = reps[0], [1]
        for a in reps[1:]:
            g, x, y = xgcd(g, a)
            coeffs = [c * x for c in coeffs]
            coeffs.append(y)
        d, _s, t = xgcd(self.n, g)
        coeffs = [t * c % self.n for c in coeffs]
        if d == self.n:  # all entries were 0
            d = 0
        # smallest representative within c_i + <n / gcd(n, a_i)> keeps the sum
        out = []
        for c, a in zip(coeffs, reps):
            m = self.n // gcd(self.n, a) if a else 1
            out.append(c % m)
        return d % self.n, out

    def strict_pair(self, b1, b2):
        from .errors import UsageError

        r1, r2 = b1 % self.n, b2 % self.n
        if r1 == 0 and r2 == 0:
            raise UsageError("strict_pair(0, 0)")
        g = gcd(r1, r2)
        b1p, b2p = r1 // g, r2 // g
        one, c1, c2 = xgcd(b1p, b2p)
        assert one == 1
        return g % self.n, b1p % self.n, b2p % self.n, c1 % self.n, c2 % self.n

    def ann_gen(self, a):
        a = a % self.n
        if a == 0:
            return self.one()
        return (self.n // gcd(self.n, a)) % self.n

    def euclid_step(self, a, d):
        a, d = a % self.n, d % self.n
        if d == 0:
            return 0, a
        q = self.divides(d, a)
        if q is not None:
            return q, 0
        g = gcd(self.n, d)
        e = a % g
        c = self.divides(d, (a - e) % self.n)
        assert c is not None
        return c, e

    def normalize_unit(self, a):
        a = a % self.n
        if a == 0:
            return self.one(), 0
        g = gcd(a, self.n)
        step = self.n // g
        u = (a // g) % step
        while gcd(u, self.n) != 1:
            u += step
        return u % self.n, g

    def format(self, a):
        return str(a % self.n)

    def sort_key(self, a):
        return a % self.n

    def descriptor(self):
        return f"Z/{self.n}"


class TruncatedF2y(Ring):
    """F2[Y]/(Y^r), written F2[y]; elements are bit masks of length r.

    Bit i is the coefficient of y^i. A nonzero element factors uniquely
    as y^k * (1 + y*b) with the second factor a unit, so the ring is a
    zero-dimensional valuation ring with Ann(y^k) = <y^(r-k)>.
    """

    has_zerodivisors = True
    is_valuation_ring = True

    def __init__(self, r):
        from .errors import UsageError

        if not isinstance(r, int) or r < 2:
            raise UsageError(f"truncation order must be an integer >= 2, got {r!r}")
        self.r = r
        self.mask = (1 << r) - 1

    def __eq__(self, other):
        return type(other) is TruncatedF2y and other.r == self.r

    def __hash__(self):
        return hash(("F2y", self.r))

    def zero(self):
        return 0

    def one(self):
        return 1

    def y(self):
        return 2

    def add(self, a, b):
        return (a ^ b) & self.mask

    def sub(self, a, b):
        return (a ^ b) & self.mask

    def mul(self, a, b):
        out = 0
        while b:
            low = b & -b
            out ^= a << (low.bit_length() - 1)
            b ^= low
        return out & self.mask

    def neg(self, a):
        return a & self.mask

    def is_zero(self, a):
        return a & self.mask == 0

    def from_int(self, v):
        return v % 2

    def valuation(self, a):
        assert a
        return (a & -a).bit_length() - 1

    def _unit_inv(self, u):
        # invert 1 + y*b bit by bit
        assert u & 1
        x, prod = 1, u
        for i in range(1, self.r):
            if (prod >> i) & 1:
                x |= 1 << i
                prod ^= (u << i) & self.mask
        return x

    def divides(self, a, b):
        a, b = a & self.mask, b & self.mask
        if a == 0:
            return 0 if b == 0 else None
        if b == 0:
            return 0
        k, l = self.valuation(a), self.valuation(b)
        if k > l:
            return None
        q = self.mul(self._unit_inv(a >> k), b) >> k
        # quotient is determined mod y^(r-k); clear the free high bits
        return q & ((1 << (self.r - k)) - 1)

    def gcd_bezout(self, items):
        from .errors import UsageError

        if not items:
            raise UsageError("gcd_bezout of an empty list")
        vals = [(self.valuation(a), i) for i, a in enumerate(items) if a & self.mask]
        if not vals:
            return 0, [0] * len(items)
        v, i0 = min(vals)
        d = 1 << v
        coeffs = [0] * len(items)
        coeffs[i0] = self.divides(items[i0], d)
        return d, coeffs

    def strict_pair(self, b1, b2):
        from .errors import UsageError

        b1, b2 = b1 & self.mask, b2 & self.mask
        if b1 == 0 and b2 == 0:
            raise UsageError("strict_pair(0, 0)")
        v1 = self.valuation(b1) if b1 else self.r
        v2 = self.valuation(b2) if b2 else self.r
        d = 1 << min(v1, v2)
        b1p = self.divides(d, b1)
        b2p = self.divides(d, b2)
        if v1 <= v2:
            c1, c2 = self._unit_inv(b1p), 0
        else:
            c1, c2 = 0, self._unit_inv(b2p)
        return d, b1p, b2p, c1, c2

    def spair_cofactors(self, lc_f, lc_g):
        # valuation-ring convention: one cofactor is exactly 1
        q = self.divides(lc_g, lc_f)
        if q is not None:
            return q, self.one()
        return self.one(), self.divides(lc_f, lc_g)

    def ann_gen(self, a):
        a &= self.mask
        if a == 0:
            return 1
        k = self.valuation(a)
        if k == 0:
            return 0
        return 1 << (self.r - k)

    def euclid_step(self, a, d):
        q = self.divides(d, a)
        if q is not None:
            return q, 0
        return 0, a & self.mask

    def normalize_unit(self, a):
        a &= self.mask
        if a == 0:
            return 1, 0
        k = self.valuation(a)
        return a >> k, 1 << k

    def format(self, a):
        a &= self.mask
        if a == 0:
            return "0"
        parts = []
        for i in reversed(range(self.r)):
            if (a >> i) & 1:
                parts.append("1" if i == 0 else ("y" if i == 1 else f"y^{i}"))
        return " + ".join(parts)

    def sort_key(self, a):
        return a & self.mask

    def descriptor(self):
        return f"F2[y]/y^{self.r}"


class IntegersLocalizedAt(Ring):
    """Z localized at the prime p: reduced fractions a/s with p not dividing s."""

    is_domain = True
    is_valuation_ring = True

    def __init__(self, p):
        from .errors import UsageError

        if not isinstance(p, int) or not _is_prime(p):
            raise UsageError(f"localization requires a prime, got {p!r}")
        self.p = p

    def __eq__(self, other):
        return type(other) is IntegersLocalizedAt and other.p == self.p

    def __hash__(self):
        return hash(("Z_(p)", self.p))

    def _check(self, a):
        from .errors import UsageError

        if a.denominator % self.p == 0:
            raise UsageError(f"{a} does not lie in Z localized at {self.p}")
        return a

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def from_int(self, v):
        return Fraction(v)

    def from_fraction(self, num, den):
        from .errors import UsageError

        if den == 0:
            raise UsageError("zero denominator")
        return self._check(Fraction(num, den))

    def valuation(self, a):
        assert a != 0
        v, num = 0, abs(a.numerator)
        while num % self.p == 0:
            num //= self.p
            v += 1
        return v

    def divides(self, a, b):
        if a == 0:
            return Fraction(0) if b == 0 else None
        if b == 0:
            return Fraction(0)
        if self.valuation(a) <= self.valuation(b):
            return self._check(b / a)
        return None

    def gcd_bezout(self, items):
        from .errors import UsageError

        if not items:
            raise UsageError("gcd_bezout of an empty list")
        vals = [(self.valuation(a), i) for i, a in enumerate(items) if a != 0]
        if not vals:
            return Fraction(0), [Fraction(0)] * len(items)
        v, i0 = min(vals)
        d = Fraction(self.p) ** v
        coeffs = [Fraction(0)] * len(items)
        coeffs[i0] = d / items[i0]
        return d, coeffs

    def strict_pair(self, b1, b2):
        from .errors import UsageError

        if b1 == 0 and b2 == 0:
            raise UsageError("strict_pair(0, 0)")
        v1 = self.valuation(b1) if b1 else None
        v2 = self.valuation(b2) if b2 else None
        vmin = min(v for v in (v1, v2) if v is not None)
        d = Fraction(self.p) ** vmin
        b1p, b2p = b1 / d, b2 / d
        if v1 is not None and v1 == vmin:
            c1, c2 = 1 / b1p, Fraction(0)
        else:
            c1, c2 = Fraction(0), 1 / b2p
        return d, b1p, b2p, c1, c2

    def spair_cofactors(self, lc_f, lc_g):
        q = self.divides(lc_g, lc_f)
        if q is not None:
            return q, self.one()
        return self.one(), self.divides(lc_f, lc_g)

    def ann_gen(self, a):
        return Fraction(1) if a == 0 else Fraction(0)

    def euclid_step(self, a, d):
        q = self.divides(d, a)
        if q is not None:
            return q, Fraction(0)
        return Fraction(0), a

    def normalize_unit(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        canon = Fraction(self.p) ** self.valuation(a)
        return a / canon, canon

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return (a.numerator, a.denominator)

    def descriptor(self):
        return f"Z_({self.p})"


def ring_from_descriptor(text):
    """Parse a ring descriptor string as written in the DSL."""
    from .errors import UsageError

    s = text.strip()
    if s == "Z":
        return Integers()
    if s.startswith("Z/"):
        try:
            return IntegersMod(int(s[2:]))
        except ValueError:
            raise UsageError(f"unknown ring {text!r}") from None
    if s.startswith("F2[y]/y^"):
        try:
            return TruncatedF2y(int(s[8:]))
        except ValueError:
            raise UsageError(f"unknown ring {text!r}") from None
    if s.startswith("Z_(") and s.endswith(")"):
        try:
            return IntegersLocalizedAt(int(s[3:-1]))
        except ValueError:
            raise UsageError(f"unknown ring {text!r}") from None
    raise UsageError(f"unknown ring {text!r}")
