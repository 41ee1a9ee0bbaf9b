"""Exact arithmetic in GF(p) and GF(p^m).

Elements are plain integers in ``[0, q)``.  For extension fields the integer is
the base-p positional encoding of the coefficient vector modulo the defining
polynomial, so ``a_0 + a_1 p + ... + a_{m-1} p^{m-1}`` stands for
``a_0 + a_1 x + ... + a_{m-1} x^{m-1}``.  All kernels in the package work on
these integers through a :class:`GF` context; :class:`FieldElement` wraps an
integer with operator overloading for interactive use.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DivisionByZero, FieldMismatch, NotIrreducible, NotPrime, OrderTooLarge

MAX_ORDER = 1 << 20
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), ascending int lists ---------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial (ascending coefficients) over GF(p)."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if m <= 3:
        return all(sum(c * pow(r, i, p) for i, c in enumerate(f)) % p for r in range(p))
    # Ben-Or: gcd(f, x^(p^i) - x) = 1 for i = 1..m/2
    xp = [0, 1]
    for _ in range(m // 2):
        # x^(p^i) = (x^(p^(i-1)))^p
        acc = [1]
        base = xp
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = acc
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordered by the integer encoding of its lower coefficients."""
    for code in range(p**m):
        lower = [(code // p**i) % p for i in range(m)]
        if lower[0] == 0:
            continue
        f = lower + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise NotIrreducible(f"no irreducible polynomial of degree {m} over GF({p})")


class GF:
    """A finite field context.  Immutable after construction."""

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise OrderTooLarge(f"q = {p}^{m} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus:
                mod = _trim([c % p for c in modulus])
                if len(mod) != 2 or mod[-1] != 1:
                    raise NotIrreducible("prime field takes no modulus (or a monic linear one)")
            self.modulus: tuple[int, ...] = ()
        else:
            if modulus is None:
                raise NotIrreducible(f"GF({p}^{m}) needs a modulus")
            mod = [c % p for c in modulus]
            if len(mod) != m + 1 or mod[-1] != 1:
                raise NotIrreducible(f"modulus must be monic of degree {m}")
            if not is_irreducible(mod, p):
                raise NotIrreducible(f"modulus {list(modulus)} is reducible over GF({p})")
            self.modulus = tuple(mod)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if m > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ----------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        factors = _prime_factors(q - 1)
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // r) != 1 for r in factors):
                break
        else:  # pragma: no cover - every finite field has a generator
            raise RuntimeError("no primitive element found")
        exp = [0] * (2 * q)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, g)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        self.generator = g

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_pmod(prod, list(self.modulus), self.p))

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    # -- encoding ------------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d % self.p
        return v

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldMismatch(f"{a!r} is not an element of {self}")
        return a

    def render(self, a: int) -> str:
        return str(self.check(a))

    def parse(self, s: str) -> int:
        return self.check(int(s.strip()))

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def embed(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    # -- arithmetic ------------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            s = a + b
            return s - self.p if s >= self.p else s
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (self.p - a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise DivisionByZero("negative power of 0")
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._pow_slow(a, e % (self.q - 1))

    def sum(self, xs) -> int:
        if self.m == 1:
            return sum(xs) % self.p
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def dot(self, xs, ys) -> int:
        if self.m == 1:
            return sum(x * y for x, y in zip(xs, ys)) % self.p
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    # -- misc ----------------------------------------------------------------------

    def random_element(self, rng, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    def descriptor(self) -> dict:
        d = {"p": self.p, "m": self.m}
        if self.m > 1:
            d["modulus"] = list(self.modulus)
        return d

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


def make_field(p: int, m: int = 1, modulus: Sequence[int] | str | None = None) -> GF:
    """Build a verified field.  Pass ``modulus="auto"`` to pick the smallest irreducible."""
    if m > 1 and (modulus is None or modulus == "auto"):
        if modulus is None:
            raise NotIrreducible(f"GF({p}^{m}) needs a modulus (or modulus='auto')")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p**m > MAX_ORDER:
            raise OrderTooLarge(f"q = {p}^{m} exceeds {MAX_ORDER}")
        modulus = find_irreducible(p, m)
    if modulus == "auto":
        modulus = None
    return GF(p, m, modulus)


def field_from_descriptor(desc: dict) -> GF:
    """``{"p": int, "m": int, "modulus": [...] optional}``; a missing modulus is auto-selected."""
    p = int(desc["p"])
    m = int(desc.get("m", 1))
    return make_field(p, m, desc.get("modulus") or "auto")


class FieldElement:
    """An element tied to its field, with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


__all__ = [
    "GF",
    "FieldElement",
    "MAX_ORDER",
    "find_irreducible",
    "field_from_descriptor",
    "is_irreducible",
    "is_prime",
    "make_field",
]
