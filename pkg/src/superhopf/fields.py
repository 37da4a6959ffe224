"""Exact field arithmetic over Q, F_p, F_p(t) / Q(t), and Q(sqrt(d)).

Every element is immutable and stored in a unique canonical form (reduced
fraction, reduced residue, reduced rational function with monic denominator,
or rational pair a + b*sqrt(d)), so equality is a plain representation check.
Characteristic 2 is rejected at descriptor construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _expr


class FieldError(Exception):
    """Base class for exact-field failures."""


class DivisionByZero(FieldError):
    pass


class DescriptorMismatch(FieldError):
    pass


class Unsupported(FieldError):
    """An exact decision procedure is not available for this input."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    i = 2
    while i * i <= n:
        if n % (i * i) == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers over the prime coefficient ring
# (Fraction when p == 0, reduced int residues when p > 0); tuples are stored
# low-degree first with no trailing zeros.


def _pnorm(c, p):
    c = list(c)
    if p:
        c = [x % p for x in c]
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _pnorm(out, p)


def _pneg(a, p):
    return _pnorm([-x for x in a], p)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _pnorm(out, p)


def _pscale(a, s, p):
    return _pnorm([x * s for x in a], p)


def _cinv(x, p):
    if p:
        return pow(x, -1, p)
    return Fraction(1) / x


def _pdivmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = _cinv(b[-1], p)
    while len(a) >= len(b):
        while a and not (a[-1] % p if p else a[-1]):
            a.pop()
        if len(a) < len(b):
            break
        s = (a[-1] * inv_lead) % p if p else a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = s
        for i, y in enumerate(b):
            a[i + d] -= s * y
        a.pop()
    return _pnorm(q, p), _pnorm(a, p)


def _pgcd(a, b, p):
    a, b = _pnorm(a, p), _pnorm(b, p)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        a = _pscale(a, _cinv(a[-1], p), p)
    return a


def _pderiv(a, p):
    return _pnorm([i * a[i] for i in range(1, len(a))], p)


def _pstr(c, var):
    if not c:
        return "0"
    terms = []
    for i in range(len(c) - 1, -1, -1):
        x = c[i]
        if not x:
            continue
        if i == 0:
            terms.append(str(x))
        else:
            head = "" if x == 1 else f"{x}*"
            tail = var if i == 1 else f"{var}^{i}"
            terms.append(head + tail)
    return "+".join(terms).replace("+-", "-")


def _sqrt_fraction(q: Fraction):
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_mod_p(a: int, p: int):
    """Tonelli-Shanks; returns a square root of a mod p, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class Field:
    """Descriptor of one of the supported exact fields.

    kind is one of "Q", "Fp", "Fpt", "Qsqrt". Construct through the
    module-level factories (QQ, GF, FunctionField, QuadraticField).
    """

    __slots__ = ("kind", "p", "var", "d")

    def __init__(self, kind, p=None, var=None, d=None):
        if kind == "Fp":
            if not _is_prime(p):
                raise FieldError(f"{p} is not prime")
            if p == 2:
                raise FieldError("characteristic 2 is not supported")
        elif kind == "Fpt":
            if p != 0:
                if not _is_prime(p):
                    raise FieldError(f"{p} is not prime")
                if p == 2:
                    raise FieldError("characteristic 2 is not supported")
            if not var or not var.isidentifier():
                raise FieldError("function field needs a variable name")
        elif kind == "Qsqrt":
            if d in (0, 1) or not _is_squarefree(d):
                raise FieldError(f"d={d} must be square-free and not a square")
        elif kind != "Q":
            raise FieldError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p
        self.var = var
        self.d = d

    # -- identity -----------------------------------------------------------
    def _key(self):
        return (self.kind, self.p, self.var, self.d)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == "Q":
            return "Field(Q)"
        if self.kind == "Fp":
            return f"Field(F{self.p})"
        if self.kind == "Fpt":
            base = "Q" if self.p == 0 else f"F{self.p}"
            return f"Field({base}({self.var}))"
        return f"Field(Q(sqrt({self.d})))"

    @property
    def characteristic(self):
        if self.kind == "Fp":
            return self.p
        if self.kind == "Fpt":
            return self.p
        return 0

    # -- constructors ---------------------------------------------------------
    def from_int(self, n: int) -> "FieldElement":
        if self.kind == "Q":
            return FieldElement(self, Fraction(n))
        if self.kind == "Fp":
            return FieldElement(self, n % self.p)
        if self.kind == "Fpt":
            c = Fraction(n) if self.p == 0 else n % self.p
            return FieldElement(self, (_pnorm((c,), self.p), (self._one_coeff(),)))
        return FieldElement(self, (Fraction(n), Fraction(0)))

    def from_fraction(self, q: Fraction) -> "FieldElement":
        q = Fraction(q)
        if self.kind == "Q":
            return FieldElement(self, q)
        if self.kind == "Qsqrt":
            return FieldElement(self, (q, Fraction(0)))
        if self.characteristic == 0 and self.kind == "Fpt":
            return FieldElement(self, (_pnorm((q,), 0), (Fraction(1),)))
        return self.from_int(q.numerator) / self.from_int(q.denominator)

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def _one_coeff(self):
        return Fraction(1) if self.p == 0 else 1

    def generator(self) -> "FieldElement":
        """t for function fields, sqrt(d) for quadratic extensions."""
        if self.kind == "Fpt":
            zero = Fraction(0) if self.p == 0 else 0
            return FieldElement(self, ((zero, self._one_coeff()), (self._one_coeff(),)))
        if self.kind == "Qsqrt":
            return FieldElement(self, (Fraction(0), Fraction(1)))
        raise Unsupported(f"{self!r} has no distinguished generator")

    def random(self, rng) -> "FieldElement":
        if self.kind == "Q":
            return FieldElement(self, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        if self.kind == "Fp":
            return self.from_int(rng.randrange(self.p))
        if self.kind == "Qsqrt":
            return FieldElement(
                self,
                (Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-3, 3))),
            )
        deg = rng.randint(0, 2)
        num = [rng.randint(-3, 3) if self.p == 0 else rng.randrange(self.p) for _ in range(deg + 1)]
        elem = FieldElement(self, (_pnorm(num, self.p), (self._one_coeff(),)))
        if rng.random() < 0.3:
            den = self.generator() + self.from_int(rng.randint(1, 3))
            elem = elem / den
        return elem

    # -- parsing / serialization ----------------------------------------------
    def parse(self, src) -> "FieldElement":
        if isinstance(src, FieldElement):
            if src.field != self:
                raise DescriptorMismatch("element belongs to a different field")
            return src
        if isinstance(src, int):
            return self.from_int(src)
        atoms = {}
        funcs = {}
        if self.kind == "Fpt":
            atoms[self.var] = self.generator()
        if self.kind == "Qsqrt":
            def _sqrt(arg):
                if arg != self.from_int(self.d):
                    raise FieldError(f"only sqrt({self.d}) lives in this field")
                return self.generator()

            funcs["sqrt"] = _sqrt
        return _expr.evaluate(str(src), self.from_int, atoms, funcs)

    def to_json(self):
        if self.kind == "Q":
            return {"kind": "Q"}
        if self.kind == "Fp":
            return {"kind": "Fp", "p": self.p}
        if self.kind == "Fpt":
            return {"kind": "Fpt", "p": self.p, "var": self.var}
        return {"kind": "Qsqrt", "d": self.d}

    @staticmethod
    def from_json(data) -> "Field":
        kind = data["kind"]
        if kind == "Q":
            return QQ()
        if kind == "Fp":
            return GF(data["p"])
        if kind == "Fpt":
            return FunctionField(data["p"], data.get("var", "t"))
        if kind == "Qsqrt":
            return QuadraticField(data["d"])
        raise FieldError(f"unknown field kind {kind!r}")


def QQ() -> Field:
    return Field("Q")


def GF(p: int) -> Field:
    return Field("Fp", p=p)


def FunctionField(p: int, var: str = "t") -> Field:
    return Field("Fpt", p=p, var=var)


def QuadraticField(d: int) -> Field:
    return Field("Qsqrt", d=d)


class FieldElement:
    """Immutable element of a Field, always in canonical form."""

    __slots__ = ("field", "_v")

    def __init__(self, field: Field, value):
        self.field = field
        if field.kind == "Fpt":
            value = self._canonical_fpt(field, value)
        self._v = value

    @staticmethod
    def _canonical_fpt(field, value):
        num, den = _pnorm(value[0], field.p), _pnorm(value[1], field.p)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ((), (field._one_coeff(),))
        g = _pgcd(num, den, field.p)
        if len(g) > 1:
            num = _pdivmod(num, g, field.p)[0]
            den = _pdivmod(den, g, field.p)[0]
        lead = _cinv(den[-1], field.p)
        return (_pscale(num, lead, field.p), _pscale(den, lead, field.p))

    # -- helpers ---------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch("mixed field descriptors")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def is_zero(self) -> bool:
        k = self.field.kind
        if k == "Q":
            return self._v == 0
        if k == "Fp":
            return self._v == 0
        if k == "Fpt":
            return not self._v[0]
        return self._v == (0, 0)

    def is_one(self) -> bool:
        return self == self.field.one()

    # -- arithmetic --------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        k = f.kind
        if k in ("Q", "Fp"):
            v = self._v + other._v
            return FieldElement(f, v % f.p if k == "Fp" else v)
        if k == "Fpt":
            (an, ad), (bn, bd) = self._v, other._v
            num = _padd(_pmul(an, bd, f.p), _pmul(bn, ad, f.p), f.p)
            return FieldElement(f, (num, _pmul(ad, bd, f.p)))
        (a, b), (c, e) = self._v, other._v
        return FieldElement(f, (a + c, b + e))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        k = f.kind
        if k == "Q":
            return FieldElement(f, -self._v)
        if k == "Fp":
            return FieldElement(f, (-self._v) % f.p)
        if k == "Fpt":
            return FieldElement(f, (_pneg(self._v[0], f.p), self._v[1]))
        return FieldElement(f, (-self._v[0], -self._v[1]))

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
        f = self.field
        k = f.kind
        if k in ("Q", "Fp"):
            v = self._v * other._v
            return FieldElement(f, v % f.p if k == "Fp" else v)
        if k == "Fpt":
            (an, ad), (bn, bd) = self._v, other._v
            return FieldElement(f, (_pmul(an, bn, f.p), _pmul(ad, bd, f.p)))
        (a, b), (c, e) = self._v, other._v
        return FieldElement(f, (a * c + b * e * f.d, a * e + b * c))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        f = self.field
        k = f.kind
        if k == "Q":
            return FieldElement(f, 1 / self._v)
        if k == "Fp":
            return FieldElement(f, pow(self._v, -1, f.p))
        if k == "Fpt":
            return FieldElement(f, (self._v[1], self._v[0]))
        a, b = self._v
        norm = a * a - b * b * f.d
        return FieldElement(f, (a / norm, -b / norm))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.field.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self._coerce(other)
            except FieldError:
                return NotImplemented
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self._v == other._v

    def __hash__(self):
        return hash((self.field, self._v))

    def __bool__(self):
        return not self.is_zero()

    # -- squares -------------------------------------------------------------------
    def _as_prime_subfield(self):
        """Value in Q (char 0) or F_p (char p), or None if not in it."""
        f = self.field
        if f.kind == "Q":
            return self._v
        if f.kind == "Fp":
            return self._v
        if f.kind == "Qsqrt":
            return self._v[0] if self._v[1] == 0 else None
        num, den = self._v
        if len(num) <= 1 and den == (f._one_coeff(),):
            return num[0] if num else (Fraction(0) if f.p == 0 else 0)
        return None

    def sqrt(self):
        """An exact square root, or None if provably not a square.

        Raises Unsupported outside the decidable cases (non-constant function
        field elements; quadratic-extension elements with a sqrt(d) part).
        """
        f = self.field
        if f.kind == "Q":
            r = _sqrt_fraction(self._v)
            return None if r is None else FieldElement(f, r)
        if f.kind == "Fp":
            r = _sqrt_mod_p(self._v, f.p)
            return None if r is None else FieldElement(f, r)
        if f.kind == "Qsqrt":
            q = self._as_prime_subfield()
            if q is None:
                raise Unsupported("is_square is only decided on the prime subfield")
            r = _sqrt_fraction(q)
            if r is not None:
                return f.from_fraction(r)
            r = _sqrt_fraction(q / f.d)
            if r is not None:
                return f.from_fraction(r) * f.generator()
            return None
        c = self._as_prime_subfield()
        if c is None:
            raise Unsupported("is_square is only decided on the prime subfield")
        if f.p == 0:
            r = _sqrt_fraction(c)
            return None if r is None else f.from_fraction(r)
        r = _sqrt_mod_p(c, f.p)
        return None if r is None else f.from_int(r)

    def is_square(self) -> bool:
        return self.sqrt() is not None

    # -- printing --------------------------------------------------------------------
    def __str__(self):
        f = self.field
        if f.kind == "Q":
            return str(self._v)
        if f.kind == "Fp":
            return str(self._v)
        if f.kind == "Fpt":
            num, den = self._v
            ns = _pstr(num, f.var)
            if den == (f._one_coeff(),):
                return ns
            return f"({ns})/({_pstr(den, f.var)})"
        a, b = self._v
        if b == 0:
            return str(a)
        bs = f"sqrt({f.d})" if b == 1 else f"{b}*sqrt({f.d})"
        if a == 0:
            return bs
        return f"{a}+{bs}".replace("+-", "-")

    def __repr__(self):
        return f"<{self} in {self.field!r}>"
