"""Exact scalar tower: Q(zeta_N), Laurent polynomials in v, and the local ring at v = zeta.

Everything here is exact.  Cyclotomic elements are residues modulo the N-th
cyclotomic polynomial with rational coefficients, Laurent polynomials carry
cyclotomic coefficients, and the localization consists of fractions whose
denominator does not vanish at zeta.  No floating point is used anywhere:
identity checks downstream are exact coefficient comparisons.

The q-combinatorics ([m]_d, [m]_d!, [m over t]_d) live here as well, since
they are the structure constants of everything built on top.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class ExactDivisionError(ArithmeticError):
    """A division that should have been exact left a remainder."""


class OutsideLocalizationError(ArithmeticError):
    """Denominator vanishes at zeta: the value is not in the local ring."""


class LatticeError(ArithmeticError):
    """A matrix expected to lie in the integral lattice does not."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)
# ---------------------------------------------------------------------------

def _zx_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zx_div_exact(a, b):
    """Exact division of integer polynomials, b monic up to sign."""
    a = list(a)
    if not b:
        raise ZeroDivisionError
    lead = b[-1]
    assert lead in (1, -1)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * lead
        if c:
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    if any(a):
        raise ExactDivisionError("non-exact integer polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]          # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _zx_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _normalize(num, den):
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = den
    for a in num:
        if a:
            g = gcd(g, a)
        if g == 1:
            return tuple(num), den
    if g == 0:
        return tuple(num), 1
    if g > 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CycloField:
    """The field Q(zeta_n) = Q[x] / Phi_n(x), with zeta_n the residue of x."""

    _instances: dict[int, "CycloField"] = {}

    __slots__ = ("n", "phi", "degree", "_red", "_zeta_rows", "zero", "one")

    def __new__(cls, n: int):
        inst = cls._instances.get(n)
        if inst is not None:
            return inst
        inst = object.__new__(cls)
        cls._instances[n] = inst
        phi = cyclotomic_poly(n)
        d = len(phi) - 1
        inst.n = n
        inst.phi = phi
        inst.degree = d
        # reduction rows: x^(d+k) mod phi for k = 0 .. d-2 (integer entries)
        red = [tuple(-c for c in phi[:d])]
        for _ in range(max(0, d - 2)):
            prev = red[-1]
            row = [0] * d
            for j in range(d - 1):
                row[j + 1] += prev[j]
            top = prev[d - 1]
            if top:
                first = red[0]
                for j in range(d):
                    row[j] += top * first[j]
            red.append(tuple(row))
        inst._red = red
        # zeta^k for k = 0 .. n-1 as integer rows
        rows = []
        for k in range(n):
            if k < d:
                rows.append(tuple(1 if j == k else 0 for j in range(d)))
            else:
                rows.append(inst._red[k - d] if k - d < len(red) else None)
        # fill the rest by multiplying by x
        for k in range(d + len(red), n):
            prev = rows[k - 1]
            row = [0] * d
            for j in range(d - 1):
                row[j + 1] += prev[j]
            top = prev[d - 1]
            if top:
                first = red[0]
                for j in range(d):
                    row[j] += top * first[j]
            rows[k] = tuple(row)
        inst._zeta_rows = rows
        inst.zero = CycloElem(inst, (0,) * d, 1)
        inst.one = CycloElem(inst, tuple(1 if j == 0 else 0 for j in range(d)), 1)
        return inst

    def from_int(self, a: int) -> "CycloElem":
        d = self.degree
        return CycloElem(self, tuple(a if j == 0 else 0 for j in range(d)), 1)

    def from_fraction(self, fr: Fraction) -> "CycloElem":
        d = self.degree
        return CycloElem(self, tuple(fr.numerator if j == 0 else 0 for j in range(d)), fr.denominator)

    def elem(self, nums, den=1) -> "CycloElem":
        nums = list(nums) + [0] * (self.degree - len(nums))
        num, den = _normalize(nums, den)
        return CycloElem(self, num, den)

    def zeta(self, k: int = 1) -> "CycloElem":
        return CycloElem(self, self._zeta_rows[k % self.n], 1)

    def __repr__(self):
        return f"Q(zeta_{self.n})"


class CycloElem:
    """Element of Q(zeta_n): integer coefficient vector over a common denominator."""

    __slots__ = ("field", "num", "den", "is_rational")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self.is_rational = not any(num[1:])

    def _make(self, nums, den):
        num, den = _normalize(list(nums), den)
        return CycloElem(self.field, num, den)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational and self.den == 1 and self.num[0] == other
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        xd, yd = self.den, other.den
        if xd == yd:
            return self._make([a + b for a, b in zip(self.num, other.num)], xd)
        return self._make([a * yd + b * xd for a, b in zip(self.num, other.num)], xd * yd)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        xd, yd = self.den, other.den
        if xd == yd:
            return self._make([a - b for a, b in zip(self.num, other.num)], xd)
        return self._make([a * yd - b * xd for a, b in zip(self.num, other.num)], xd * yd)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloElem(self.field, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field.zero
            return self._make([a * other for a in self.num], self.den)
        f = self.field
        a, b = self.num, other.num
        if self.is_rational:
            a0 = a[0]
            if a0 == 0:
                return f.zero
            return self._make([a0 * c for c in b], self.den * other.den)
        if other.is_rational:
            b0 = b[0]
            if b0 == 0:
                return f.zero
            return self._make([b0 * c for c in a], self.den * other.den)
        d = f.degree
        t = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        t[i + j] += ai * bj
        red = f._red
        for k in range(2 * d - 2, d - 1, -1):
            c = t[k]
            if c:
                row = red[k - d]
                for j in range(d):
                    t[j] += c * row[j]
        return self._make(t[:d], self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        f = self.field
        # extended Euclid in Q[x] against Phi_n
        a = [Fraction(c, self.den) for c in self.num]
        b = [Fraction(c) for c in f.phi]
        # invariants: s*self + t*phi = r  (we only track s)
        r0, s0 = b, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        r0, r1 = trim(r0), trim(r1)
        while len(r1) > 1 or (len(r1) == 1 and False):
            if len(r1) == 1:
                break
            # divide r0 by r1
            q = [Fraction(0)] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            rem = list(r0)
            for k in range(len(q) - 1, -1, -1):
                c = rem[k + len(r1) - 1] / r1[-1]
                if c:
                    q[k] = c
                    for j, bj in enumerate(r1):
                        rem[k + j] -= c * bj
            rem = trim(rem)
            # s_next = s0 - q*s1
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] += qi * sj
            s_next = [Fraction(0)] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                s_next[i] += c
            for i, c in enumerate(qs1):
                s_next[i] -= c
            r0, s0, r1, s1 = r1, s1, rem, trim(s_next)
            if not r1:
                raise ZeroDivisionError("element not invertible (not coprime to Phi)")
        c = r1[0]
        inv_coeffs = [s / c for s in s1]
        # common denominator
        den = 1
        for fr in inv_coeffs:
            den = den * fr.denominator // gcd(den, fr.denominator)
        nums = [int(fr * den) for fr in inv_coeffs]
        nums += [0] * (f.degree - len(nums))
        return self._make(nums, den)

    def __truediv__(self, other):
        if isinstance(other, int):
            return self._make(self.num, self.den * other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational element")
        return Fraction(self.num[0], self.den)

    def __repr__(self):
        if not self:
            return "0"
        terms = []
        for j, a in enumerate(self.num):
            if not a:
                continue
            c = f"{a}" if self.den == 1 else f"{a}/{self.den}"
            if j == 0:
                terms.append(c)
            elif j == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{j}")
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# Laurent polynomials in v over a cyclotomic field
# ---------------------------------------------------------------------------

class LaurentRing:
    """Laurent polynomials in v with CycloElem coefficients."""

    _instances: dict[int, "LaurentRing"] = {}

    __slots__ = ("field", "zero", "one", "v", "_qint", "_qfact", "_qbinom", "_qbinom_zeta")

    def __new__(cls, field: CycloField):
        inst = cls._instances.get(field.n)
        if inst is not None:
            return inst
        inst = object.__new__(cls)
        cls._instances[field.n] = inst
        inst.field = field
        inst.zero = LaurentPoly(inst, {})
        inst.one = LaurentPoly(inst, {0: field.one})
        inst.v = LaurentPoly(inst, {1: field.one})
        inst._qint = {}
        inst._qfact = {}
        inst._qbinom = {}
        inst._qbinom_zeta = {}
        return inst

    def monomial(self, e: int, coeff=None) -> "LaurentPoly":
        c = self.field.one if coeff is None else coeff
        if not c:
            return self.zero
        return LaurentPoly(self, {e: c})

    def from_int(self, a: int) -> "LaurentPoly":
        if a == 0:
            return self.zero
        return LaurentPoly(self, {0: self.field.from_int(a)})

    def from_int_dict(self, d: dict[int, int]) -> "LaurentPoly":
        f = self.field
        return LaurentPoly(self, {e: f.from_int(c) for e, c in d.items() if c})

    def __repr__(self):
        return f"{self.field}[v, v^-1]"


class LaurentPoly:
    """Sparse Laurent polynomial; no zero coefficients are stored."""

    __slots__ = ("ring", "c", "_ints")

    def __init__(self, ring, coeffs: dict):
        self.ring = ring
        self.c = coeffs
        self._ints = 0          # 0 = not computed; None = non-integer; dict = cache

    def _int_support(self):
        cached = self._ints
        if cached != 0:
            return cached
        out = {}
        for e, a in self.c.items():
            if a.is_rational and a.den == 1:
                out[e] = a.num[0]
            else:
                self._ints = None
                return None
        self._ints = out
        return out

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.c
            other = self.ring.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        out = dict(self.c)
        for e, a in other.c.items():
            b = out.get(e)
            if b is None:
                out[e] = a
            else:
                s = b + a
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -a for e, a in self.c.items()})

    def __mul__(self, other):
        ring = self.ring
        if isinstance(other, int):
            other = ring.from_int(other)
        if isinstance(other, CycloElem):
            if not other:
                return ring.zero
            return LaurentPoly(ring, {e: a * other for e, a in self.c.items() if a * other})
        if not self.c or not other.c:
            return ring.zero
        si = self._int_support()
        if si is not None:
            oi = other._int_support()
            if oi is not None:
                acc: dict[int, int] = {}
                get = acc.get
                for e1, c1 in si.items():
                    for e2, c2 in oi.items():
                        k = e1 + e2
                        acc[k] = get(k, 0) + c1 * c2
                return ring.from_int_dict(acc)
        acc2: dict[int, CycloElem] = {}
        for e1, c1 in self.c.items():
            for e2, c2 in other.c.items():
                k = e1 + e2
                p = c1 * c2
                b = acc2.get(k)
                acc2[k] = p if b is None else b + p
        return LaurentPoly(ring, {e: a for e, a in acc2.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one
        base = self
        if k < 0:
            raise ValueError("use exact_div for negative powers")
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        if k == 0:
            return self
        return LaurentPoly(self.ring, {e + k: a for e, a in self.c.items()})

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def eval_zeta(self) -> CycloElem:
        """Evaluate at v = zeta (the generator of the coefficient field)."""
        f = self.ring.field
        n = f.n
        si = self._int_support()
        if si is not None:
            acc = [0] * n
            for e, c in si.items():
                acc[e % n] += c
            d = f.degree
            vec = [0] * d
            rows = f._zeta_rows
            for r, cnt in enumerate(acc):
                if cnt:
                    row = rows[r]
                    for j in range(d):
                        vec[j] += cnt * row[j]
            num, den = _normalize(vec, 1)
            return CycloElem(f, num, den)
        out = f.zero
        for e, c in self.c.items():
            out = out + c * f.zeta(e)
        return out

    def _dense(self):
        """(min_exp, ascending CycloElem list)."""
        if not self.c:
            return 0, []
        lo, hi = min(self.c), max(self.c)
        f = self.ring.field
        dense = [f.zero] * (hi - lo + 1)
        for e, a in self.c.items():
            dense[e - lo] = a
        return lo, dense

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact division by another Laurent polynomial; raises if not exact."""
        ring = self.ring
        if not den.c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.c:
            return ring.zero
        si, di = self._int_support(), den._int_support()
        if si is not None and di is not None:
            lo_n, hi_n = min(si), max(si)
            lo_d, hi_d = min(di), max(di)
            lead = di[hi_d]
            if lead in (1, -1):
                a = [0] * (hi_n - lo_n + 1)
                for e, c in si.items():
                    a[e - lo_n] = c
                b = [0] * (hi_d - lo_d + 1)
                for e, c in di.items():
                    b[e - lo_d] = c
                if len(a) < len(b):
                    raise ExactDivisionError("degree too small for exact division")
                q = [0] * (len(a) - len(b) + 1)
                for k in range(len(q) - 1, -1, -1):
                    c = a[k + len(b) - 1] * lead
                    if c:
                        q[k] = c
                        for j, bj in enumerate(b):
                            a[k + j] -= c * bj
                if any(a):
                    raise ExactDivisionError("non-exact Laurent division")
                shift = lo_n - lo_d
                return ring.from_int_dict({i + shift: c for i, c in enumerate(q) if c})
        lo_n, a = self._dense()
        lo_d, b = den._dense()
        if len(a) < len(b):
            raise ExactDivisionError("degree too small for exact division")
        lead_inv = b[-1].inverse()
        f = ring.field
        q = [f.zero] * (len(a) - len(b) + 1)
        for k in range(len(q) - 1, -1, -1):
            c = a[k + len(b) - 1] * lead_inv
            if c:
                q[k] = c
                for j, bj in enumerate(b):
                    if bj:
                        a[k + j] = a[k + j] - c * bj
        if any(a):
            raise ExactDivisionError("non-exact Laurent division")
        shift = lo_n - lo_d
        return LaurentPoly(ring, {i + shift: c for i, c in enumerate(q) if c})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            a = self.c[e]
            coeff = repr(a)
            if e == 0:
                parts.append(coeff)
            else:
                ve = "v" if e == 1 else f"v^{e}"
                parts.append(ve if coeff == "1" else f"({coeff})*{ve}")
        return " + ".join(parts)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q(zeta)[v], as a Laurent polynomial with min exponent 0."""
    ring = a.ring
    f = ring.field

    def dense_of(p):
        _, d = p._dense()
        return d

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def mod(p, q):
        p = list(p)
        lead_inv = q[-1].inverse()
        for k in range(len(p) - len(q), -1, -1):
            c = p[k + len(q) - 1] * lead_inv
            if c:
                for j, bj in enumerate(q):
                    if bj:
                        p[k + j] = p[k + j] - c * bj
        return trim(p)

    r0, r1 = trim(dense_of(a)), trim(dense_of(b))
    if not r0:
        r0, r1 = r1, r0
    while r1:
        if len(r0) < len(r1):
            r0, r1 = r1, r0
            continue
        r0, r1 = r1, mod(r0, r1)
    if not r0:
        return ring.zero
    lead_inv = r0[-1].inverse()
    return LaurentPoly(ring, {i: c * lead_inv for i, c in enumerate(r0) if c})


# ---------------------------------------------------------------------------
# localization at (v - zeta)
# ---------------------------------------------------------------------------

class LocalScalar:
    """Fraction num/den of Laurent polynomials with den(zeta) != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, reduce: bool = True):
        ring = num.ring
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        one = ring.field.one
        if reduce and num.c and den.c != {0: one}:
            g = poly_gcd(num, den)
            if g.c != {0: one}:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if not num.c:
            den = ring.one
        else:
            # canonical form: den has min exponent 0 and leading coefficient 1
            k = den.min_exp()
            if k:
                den = den.shift(-k)
                num = num.shift(-k)
            lead = den.c[den.max_exp()]
            if lead != ring.field.one:
                inv = lead.inverse()
                den = den * inv
                num = num * inv
        if den.c != {0: ring.field.one} and not den.eval_zeta():
            raise OutsideLocalizationError(
                "denominator vanishes at zeta after reduction")
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "LocalScalar":
        out = object.__new__(cls)
        out.num = p
        out.den = p.ring.one
        return out

    @property
    def ring(self):
        return self.num.ring

    def is_polynomial(self) -> bool:
        return self.den == self.ring.one

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError("denominator is not trivial")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LocalScalar.from_poly(self.ring.from_int(other))
        if isinstance(other, LaurentPoly):
            other = LocalScalar.from_poly(other)
        if not isinstance(other, LocalScalar):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _promote_local(self.ring, other)
        return LocalScalar(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _promote_local(self.ring, other)
        return LocalScalar(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def __neg__(self):
        out = object.__new__(LocalScalar)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _promote_local(self.ring, other)
        return LocalScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _promote_local(self.ring, other)
        return LocalScalar(self.num * other.den, self.den * other.num)

    def inverse(self) -> "LocalScalar":
        return LocalScalar(self.den, self.num)

    def eval(self) -> CycloElem:
        """Reduction modulo (v - zeta): num(zeta) / den(zeta)."""
        d = self.den.eval_zeta()
        if not d:
            raise OutsideLocalizationError("denominator vanishes at zeta")
        return self.num.eval_zeta() * d.inverse()

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r}) / ({self.den!r})"


def _promote_local(ring, x):
    if isinstance(x, int):
        return LocalScalar.from_poly(ring.from_int(x))
    return LocalScalar.from_poly(x)


def local_eval(x: LocalScalar) -> CycloElem:
    """Evaluate a localized scalar at zeta, exactly in Q(zeta_N)."""
    return x.eval()


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

def qint(m: int, d: int, ring: LaurentRing) -> LaurentPoly:
    """[m]_d = (v^{dm} - v^{-dm}) / (v^d - v^{-d}), expanded exactly."""
    key = (m, d)
    out = ring._qint.get(key)
    if out is not None:
        return out
    if m == 0:
        out = ring.zero
    elif m < 0:
        out = -qint(-m, d, ring)
    else:
        out = ring.from_int_dict({d * (m - 1 - 2 * j): 1 for j in range(m)})
    ring._qint[key] = out
    return out


def qfact(m: int, d: int, ring: LaurentRing) -> LaurentPoly:
    """[m]_d! = product of [s]_d for s = 1..m; [0]_d! = 1."""
    if m < 0:
        raise ValueError("q-factorial of a negative integer")
    key = (m, d)
    out = ring._qfact.get(key)
    if out is not None:
        return out
    out = ring.one
    if m:
        out = qfact(m - 1, d, ring) * qint(m, d, ring)
    ring._qfact[key] = out
    return out


def qbinom(m: int, t: int, d: int, ring: LaurentRing) -> LaurentPoly:
    """[m over t]_d for any integer m and t >= 0; always a Laurent polynomial."""
    if t < 0:
        raise ValueError("lower index must be nonnegative")
    key = (m, t, d)
    out = ring._qbinom.get(key)
    if out is not None:
        return out
    out = ring.one
    for s in range(1, t + 1):
        out = (out * qint(m - s + 1, d, ring)).exact_div(qint(s, d, ring))
        if not out:
            break
    ring._qbinom[key] = out
    return out


def qbinom_zeta(m: int, t: int, d: int, ring: LaurentRing) -> CycloElem:
    """[m over t]_d evaluated at zeta, cached."""
    key = (m, t, d)
    out = ring._qbinom_zeta.get(key)
    if out is None:
        out = qbinom(m, t, d, ring).eval_zeta()
        ring._qbinom_zeta[key] = out
    return out


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

class QParams:
    """Root-of-unity parameters: even ell, per-vertex d_i | ell, ell_i = ell/d_i."""

    __slots__ = ("ell", "d", "ell_i", "n", "field", "vring")

    def __init__(self, ell: int, d=(1,)):
        d = tuple(d)
        if ell <= 0 or ell % 2 != 0:
            raise ValueError("ell must be a positive even integer")
        for di in d:
            if di not in (1, 2, 3):
                raise ValueError("each d_i must be 1, 2 or 3")
            if ell % di != 0:
                raise ValueError(f"d_i = {di} does not divide ell = {ell}")
            if ell // di < 2:
                raise ValueError("ell_i = ell/d_i must be at least 2")
        self.ell = ell
        self.d = d
        self.ell_i = tuple(ell // di for di in d)
        self.n = 2 * ell
        self.field = CycloField(2 * ell)
        self.vring = LaurentRing(self.field)

    def __eq__(self, other):
        return isinstance(other, QParams) and (self.ell, self.d) == (other.ell, other.d)

    def __hash__(self):
        return hash((self.ell, self.d))

    def __repr__(self):
        return f"QParams(ell={self.ell}, d={self.d})"


# ---------------------------------------------------------------------------
# matrix division into the localization
# ---------------------------------------------------------------------------

def matrix_divide_exact(matrix, s: LaurentPoly):
    """Divide every LaurentPoly entry by s, landing in the localization.

    Entries are reduced by cancelling common polynomial factors; an entry
    whose reduced denominator still vanishes at zeta means the matrix does
    not lie in the integral lattice, which is a hard error.
    """
    if not s.c:
        raise ZeroDivisionError("division of a matrix by the zero polynomial")
    out = []
    for i, row in enumerate(matrix):
        new_row = []
        for j, entry in enumerate(row):
            try:
                new_row.append(LocalScalar(entry, s))
            except OutsideLocalizationError as exc:
                raise LatticeError(
                    f"entry ({i}, {j}) leaves the localization: {exc}") from exc
        out.append(new_row)
    return out


def matrix_divide_exact_poly(matrix, s: LaurentPoly):
    """Divide every entry by s, requiring exact polynomial quotients."""
    if not s.c:
        raise ZeroDivisionError("division of a matrix by the zero polynomial")
    out = []
    for i, row in enumerate(matrix):
        new_row = []
        for j, entry in enumerate(row):
            try:
                new_row.append(entry.exact_div(s))
            except ExactDivisionError as exc:
                raise LatticeError(
                    f"entry ({i}, {j}) is not divisible by the q-factorial") from exc
        out.append(new_row)
    return out
