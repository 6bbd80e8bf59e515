"""Finite fields GF(p^n) of odd characteristic.

Elements are stored in polynomial-basis coordinates over GF(p). Internally a
coordinate vector ``(c_0, ..., c_{n-1})`` is packed into the integer
``sum(c_i * p**i)``; that integer (the *code*) is what the numpy tables are
indexed by, and it also fixes the ordering of elements.

For fields up to ``table_cap`` elements (default 2**22) the context carries
exp/log/Zech tables and an absolute-trace table, so multiplication is O(1)
and whole-field evaluations can be vectorized. Larger fields fall back to
polynomial arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import warnings
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_TABLE_CAP = 2**22

# Conway polynomials, little-endian coefficients, leading 1 included.
# Every entry is re-validated when used (irreducible, primitive root,
# norm-compatible with the smaller entries of the same characteristic).
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (11, 4): (2, 10, 8, 0, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (13, 4): (2, 12, 3, 0, 1),
}


class FieldError(ValueError):
    """Invalid field parameters or an invalid field operation."""


class ContextMismatch(FieldError):
    pass


# ---------------------------------------------------------------------------
# integers

def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of ``m`` by trial division."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


# ---------------------------------------------------------------------------
# polynomials over GF(p), little-endian lists

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                prod[i + j] += ac * bc
    return poly_mod(prod, f, p)


def poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        e >>= 1
        if e:
            base = poly_mulmod(base, base, f, p)
    return result


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    m = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(m)]
    return _trim(out)


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic ``f`` of degree >= 1."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if poly_sub(poly_powmod(x, p**n, f, p), x, p):
        return False
    for r in prime_factors(n):
        h = poly_sub(poly_powmod(x, p ** (n // r), f, p), x, p)
        if len(poly_gcd(h, f, p)) != 1:
            return False
    return True


def _poly_is_primitive_elem(g: Sequence[int], f: Sequence[int], p: int) -> bool:
    order = p ** (len(f) - 1) - 1
    if not poly_mod(g, f, p):
        return False
    if poly_powmod(g, order, f, p) != [1]:
        return False
    return all(poly_powmod(g, order // r, f, p) != [1] for r in prime_factors(order))


# ---------------------------------------------------------------------------
# field context

class FieldCtx:
    """Immutable description of GF(p^n).

    Attributes
    ----------
    p, n, q : characteristic, degree, field size
    modulus : little-endian coefficients of the defining polynomial (monic)
    xi : a fixed primitive element
    exp, log, zech : discrete-log tables (``None`` above the table cap).
        ``log[0] == -1``; ``zech[z] == log(1 + xi**z)`` or -1 when that sum is 0.
    trace_table : absolute trace of every element, indexed by code
    """

    def __init__(self, p: int, n: int, modulus: Sequence[int], xi_code: int,
                 table_cap: int = DEFAULT_TABLE_CAP, source: str = "supplied"):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = tuple(int(c) for c in modulus)
        self.source = source
        self._pows = np.array([p**i for i in range(n)], dtype=np.int64)
        self.xi = FieldElem(self, xi_code)
        self.has_tables = self.q <= table_cap
        self.exp = self.log = self.zech = self.trace_table = None
        if self.has_tables:
            self._build_tables()
        self.key = (p, n, self.modulus, xi_code)

    # -- construction helpers -------------------------------------------------

    def _mul_matrix(self, a: Sequence[int]) -> np.ndarray:
        """Matrix M over GF(p) with digits(y) @ M == digits(a*y)."""
        rows = []
        for i in range(self.n):
            xi_pow = [0] * i + [1]
            prod = poly_mulmod(a, xi_pow, self.modulus, self.p)
            rows.append(prod + [0] * (self.n - len(prod)))
        return np.array(rows, dtype=np.int64)

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        xi_poly = list(self.xi.coords)
        digits = np.zeros((1, n), dtype=np.int64)
        digits[0, 0] = 1
        while len(digits) < q - 1:
            step = poly_powmod(xi_poly, len(digits), self.modulus, p)
            digits = np.concatenate([digits, digits @ self._mul_matrix(step) % p])
        digits = digits[: q - 1]
        exp = digits @ self._pows
        if len(np.unique(exp)) != q - 1:
            raise FieldError("xi does not have multiplicative order p^n - 1")
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)

        one_plus = digits.copy()
        one_plus[:, 0] = (one_plus[:, 0] + 1) % p
        zech = log[one_plus @ self._pows]

        tr_basis = np.array([self._poly_abs_trace([0] * i + [1]) for i in range(n)],
                            dtype=np.int64)
        trace_table = self.digits(np.arange(q, dtype=np.int64)) @ tr_basis % p

        for arr in (exp, log, zech, trace_table):
            arr.setflags(write=False)
        self.exp, self.log, self.zech, self.trace_table = exp, log, zech, trace_table

    def _poly_abs_trace(self, a: Sequence[int]) -> int:
        total: list[int] = []
        conj = poly_mod(a, self.modulus, self.p)
        for _ in range(self.n):
            total = poly_sub(total, [-c for c in conj], self.p)
            conj = poly_powmod(conj, self.p, self.modulus, self.p)
        if len(total) > 1:
            raise FieldError("trace landed outside GF(p); modulus is not irreducible")
        return total[0] if total else 0

    # -- encoding ---------------------------------------------------------------

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != self.n:
            raise FieldError(f"expected {self.n} coordinates, got {len(coords)}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coords))

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def digits(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self._pows) % self.p

    def undigits(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self._pows

    # -- element constructors ---------------------------------------------------

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            _check_ctx(self, value.ctx)
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, int(value) % self.p)
        return FieldElem(self, self.encode(value))

    def from_code(self, code: int) -> "FieldElem":
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range")
        return FieldElem(self, int(code))

    def from_log(self, i: int) -> "FieldElem":
        return self.xi ** i

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elements(self) -> Iterator["FieldElem"]:
        for code in range(self.q):
            yield FieldElem(self, code)

    def all_codes(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- scalar arithmetic on codes --------------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        p = self.p
        out, mult = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def neg_code(self, a: int) -> int:
        p = self.p
        out, mult = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * mult
            mult *= p
        return out

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])
        return self.mul_codes_poly(a, b)

    def mul_codes_poly(self, a: int, b: int) -> int:
        prod = poly_mulmod(list(self.decode(a)), list(self.decode(b)), self.modulus, self.p)
        return self.encode(prod + [0] * (self.n - len(prod)))

    def zech_add(self, a: int, b: int) -> int:
        """Addition through the Zech table: xi^i + xi^j = xi^i (1 + xi^(j-i))."""
        if a == 0:
            return b
        if b == 0:
            return a
        m = self.q - 1
        i, j = int(self.log[a]), int(self.log[b])
        z = int(self.zech[(j - i) % m])
        if z < 0:
            return 0
        return int(self.exp[(i + z) % m])

    # -- vectorized arithmetic (table contexts only) -----------------------------

    def _need_tables(self) -> None:
        if not self.has_tables:
            raise FieldError(f"field of size {self.q} exceeds the table cap")

    def vadd(self, a, b) -> np.ndarray:
        return self.undigits(self.digits(a) + self.digits(b))

    def vsub(self, a, b) -> np.ndarray:
        return self.undigits(self.digits(a) - self.digits(b))

    def vneg(self, a) -> np.ndarray:
        return self.undigits(-self.digits(a))

    def vmul(self, a, b) -> np.ndarray:
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e: int) -> np.ndarray:
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        m = self.q - 1
        out = self.exp[(self.log[a] * (e % m)) % m]
        zero_val = 1 if e == 0 else 0
        if e < 0 and np.any(a == 0):
            raise FieldError("zero raised to a negative power")
        return np.where(a == 0, zero_val, out)

    def vscale(self, a, t: int) -> np.ndarray:
        """Multiply by the prime-field scalar ``t``."""
        return self.undigits(self.digits(a) * t)

    def vtrace(self, a, k: int = 1, over: int | None = None) -> np.ndarray:
        """Relative trace Tr_k^over of an array of codes (over defaults to n).

        For ``k == 1`` the result is an array of residues mod p.
        """
        m = self.n if over is None else over
        _check_tower(self, k, m)
        a = np.asarray(a, dtype=np.int64)
        if k == 1 and m == self.n:
            return self.trace_table[a]
        total = np.zeros_like(a)
        for i in range(m // k):
            total = self.vadd(total, self.vpow(a, self.p ** (i * k)))
        return total  # codes of GF(p) elements equal their residues

    def vquadratic_character(self, a, sub_degree: int | None = None) -> np.ndarray:
        m = self.n if sub_degree is None else sub_degree
        e = (self.p**m - 1) // 2
        r = self.vpow(a, e)
        return np.where(np.asarray(a) == 0, 0, np.where(r == 1, 1, -1))

    def subfield_codes(self, k: int) -> np.ndarray:
        if self.n % k:
            raise FieldError(f"GF({self.p}^{k}) is not a subfield of GF({self.p}^{self.n})")
        if self.has_tables:
            step = (self.q - 1) // (self.p**k - 1)
            codes = np.concatenate([[0], self.exp[::step]])
        else:
            codes = np.array([x.code for x in self.elements() if x ** (self.p**k) == x])
        return np.sort(codes)

    # -- description ------------------------------------------------------------

    def description(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "modulus_coeffs": list(self.modulus),
            "xi_coords": list(self.xi.coords),
        }

    def __repr__(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.modulus))):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}*{mono}" if i else str(c))
        return f"GF({self.p}^{self.n}) mod {' + '.join(terms)}"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


def _check_ctx(a: FieldCtx, b: FieldCtx) -> None:
    if a is not b and a.key != b.key:
        raise ContextMismatch(f"elements of {a!r} and {b!r} cannot be mixed")


def _check_tower(ctx: FieldCtx, k: int, m: int) -> None:
    if k < 1 or m % k or ctx.n % m:
        raise FieldError(f"need k | m | n, got k={k}, m={m}, n={ctx.n}")


# ---------------------------------------------------------------------------
# elements

class FieldElem:
    """Element of a :class:`FieldCtx`; integers are coerced into GF(p)."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coords(self) -> tuple[int, ...]:
        return self.ctx.decode(self.code)

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            _check_ctx(self.ctx, other.ctx)
            return other
        if isinstance(other, (int, np.integer)):
            return FieldElem(self.ctx, int(other) % self.ctx.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.ctx, self.ctx.add_codes(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg_code(self.code))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.ctx, self.ctx.mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.code == 0:
            raise ZeroDivisionError("division by zero in " + repr(self.ctx))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "FieldElem":
        e = int(e)
        if self.code == 0:
            if e < 0:
                raise FieldError("zero raised to a negative power")
            return self.ctx.one if e == 0 else self
        e %= self.ctx.q - 1
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius(self, j: int = 1) -> "FieldElem":
        return self ** (self.ctx.p**j)

    def log(self) -> int:
        if self.code == 0:
            raise FieldError("log of zero")
        if self.ctx.has_tables:
            return int(self.ctx.log[self.code])
        raise FieldError("discrete log needs tables")

    def in_subfield(self, m: int) -> bool:
        if self.ctx.n % m:
            return False
        return self.frobenius(m) == self

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        if self.code >= self.ctx.p:
            raise FieldError(f"{self!r} is not in the prime field")
        return self.code

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.ctx.p
        if not isinstance(other, FieldElem):
            return NotImplemented
        _check_ctx(self.ctx, other.ctx)
        return self.code == other.code

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.code))

    def __lt__(self, other: "FieldElem") -> bool:
        _check_ctx(self.ctx, other.ctx)
        return self.code < other.code

    def __repr__(self) -> str:
        return f"FieldElem({list(self.coords)})"


# ---------------------------------------------------------------------------
# operations

def trace(x: FieldElem, k: int = 1, over: int | None = None):
    """Tr_k^m(x) = sum_{i < m/k} x^(p^(ik)) for x in GF(p^m); m defaults to n.

    Returns an ``int`` residue when ``k == 1``.
    """
    ctx = x.ctx
    m = ctx.n if over is None else over
    _check_tower(ctx, k, m)
    if m != ctx.n and not x.in_subfield(m):
        raise FieldError(f"{x!r} is not in GF({ctx.p}^{m})")
    total = ctx.zero
    conj = x
    for _ in range(m // k):
        total = total + conj
        conj = conj.frobenius(k)
    if k == 1:
        return int(total)
    return total


def quadratic_character(x: FieldElem, sub_degree: int | None = None) -> int:
    """Quadratic character of GF(p^m) evaluated at x (m defaults to n)."""
    ctx = x.ctx
    m = ctx.n if sub_degree is None else sub_degree
    if ctx.n % m or not x.in_subfield(m):
        raise FieldError(f"{x!r} is not in GF({ctx.p}^{m})")
    if x.is_zero():
        return 0
    return 1 if x ** ((ctx.p**m - 1) // 2) == 1 else -1


def subfield_elements(ctx: FieldCtx, k: int) -> list[FieldElem]:
    return [FieldElem(ctx, int(c)) for c in ctx.subfield_codes(k)]


def _check_prime(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or p == 2 or not is_prime(int(p)):
        raise FieldError(f"odd characteristic only: p={p} is not an odd prime")


def _conway_ok(p: int, n: int, f: tuple[int, ...]) -> bool:
    if not is_irreducible(f, p) or not _poly_is_primitive_elem([0, 1], f, p):
        return False
    q = p**n
    for d in divisors(n)[:-1]:
        sub = CONWAY_POLYNOMIALS.get((p, d))
        if sub is None:
            continue
        # root of the degree-d Conway polynomial must be x^((q-1)/(p^d-1))
        g = poly_powmod([0, 1], (q - 1) // (p**d - 1), f, p)
        acc: list[int] = []
        power = [1]
        for c in sub:
            acc = poly_sub(acc, [-(c * t) for t in power], p)
            power = poly_mulmod(power, g, f, p)
        if acc:
            return False
    return True


def _search_primitive_modulus(p: int, n: int) -> tuple[int, ...]:
    # lexicographic on (c_{n-1}, ..., c_0)
    for high_first in itertools.product(range(p), repeat=n):
        f = tuple(reversed(high_first)) + (1,)
        if f[0] == 0:
            continue
        if is_irreducible(f, p) and _poly_is_primitive_elem([0, 1], f, p):
            return f
    raise FieldError(f"no primitive polynomial of degree {n} over GF({p})")


@functools.lru_cache(maxsize=64)
def _build_field_cached(p: int, n: int, modulus: tuple[int, ...] | None,
                        xi_coords: tuple[int, ...] | None, table_cap: int) -> FieldCtx:
    if modulus is None:
        source = "conway"
        modulus = CONWAY_POLYNOMIALS.get((p, n))
        if modulus is not None and not _conway_ok(p, n, modulus):
            warnings.warn(f"bundled Conway polynomial for ({p}, {n}) failed validation")
            modulus = None
        if modulus is None:
            source = "search"
            modulus = _search_primitive_modulus(p, n)
    else:
        source = "supplied"
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {n}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise FieldError("reducible modulus")

    if xi_coords is not None:
        if len(xi_coords) != n:
            raise FieldError(f"xi needs {n} coordinates")
        if not _poly_is_primitive_elem(_trim(list(xi_coords)), modulus, p):
            raise FieldError("supplied xi is not a primitive element")
        xi_code = sum(c * p**i for i, c in enumerate(xi_coords))
    elif n > 1 and _poly_is_primitive_elem([0, 1], modulus, p):
        xi_code = p
    else:
        xi_code = next(
            code for code in range(1, p**n)
            if _poly_is_primitive_elem(
                _trim([(code // p**i) % p for i in range(n)]), modulus, p)
        )
    return FieldCtx(p, n, modulus, xi_code, table_cap=table_cap, source=source)


def build_field(p: int, n: int, modulus: Iterable[int] | None = None, *,
                xi: Iterable[int] | None = None,
                table_cap: int = DEFAULT_TABLE_CAP) -> FieldCtx:
    """Construct GF(p^n) for an odd prime p.

    ``modulus`` is a little-endian coefficient sequence of a monic degree-n
    polynomial. Without one, the bundled Conway polynomial is used when it
    validates, else the lexicographically smallest primitive polynomial.
    Identical arguments return the same (cached) context.
    """
    _check_prime(p)
    p, n = int(p), int(n)
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    mod = None if modulus is None else tuple(int(c) for c in modulus)
    xi_t = None if xi is None else tuple(int(c) for c in xi)
    return _build_field_cached(p, n, mod, xi_t, int(table_cap))


def field_from_description(desc: dict) -> FieldCtx:
    return build_field(desc["p"], desc["n"], desc["modulus_coeffs"], xi=desc.get("xi_coords"))
