"""Prime fields, monomial orders and the ambient ring.

Monomials are stored as integer *order keys*.  Every supported order is a
lexicographic comparison of integer linear forms in the exponent vector, so a
key is a linear function of the exponents packed into one Python int:

* comparing monomials is comparing ints,
* multiplying monomials is adding keys,
* dividing is subtracting keys.

Divisibility needs the exponents themselves; ``RingContext.packed`` maps a key
to a plain packing with one guard bit per field so that ``b | a`` reduces to a
single subtraction and mask test.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Iterable, Sequence

from .errors import ResourceError

BITS = 12
FIELD_MASK = (1 << BITS) - 1
MAX_EXPONENT = (1 << (BITS - 1)) - 1

DEFAULT_CHARACTERISTIC = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.3e24
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/p."""

    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime, got {p!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    def normalize(self, a: int) -> int:
        return a % self.characteristic

    def inv(self, a: int) -> int:
        a %= self.characteristic
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a prime field")
        return pow(a, -1, self.characteristic)


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or a two-block order (grevlex on each block).

    For ``block`` the first ``split`` variables are compared by grevlex first
    and ties are broken by grevlex on the remaining ones.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.split < 1:
            raise ValueError("block order needs split >= 1")

    def __str__(self) -> str:
        return f"block({self.split})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


def _grevlex_key(exps: Sequence[int]) -> int:
    deg = 0
    packed = 0
    for i, e in enumerate(exps):
        deg += e
        packed |= e << (BITS * i)
    return (deg << (BITS * len(exps))) - packed


def _grevlex_exps(key: int, n: int) -> tuple[int, ...]:
    shift = BITS * n
    deg = -((-key) >> shift)
    packed = (deg << shift) - key
    return tuple((packed >> (BITS * i)) & FIELD_MASK for i in range(n))


@dataclass(frozen=True)
class RingContext:
    """k[x_1..x_n] over a prime field, standing in for its localization at
    the origin."""

    variables: tuple[str, ...] = ("x", "y")
    field: PrimeField = PrimeField()
    order: MonomialOrder = GREVLEX
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names) or not all(names):
            raise ValueError(f"variable names must be distinct and nonempty: {names}")
        if self.order.kind == "block" and self.order.split >= len(names):
            raise ValueError("block split must leave a nonempty second block")
        n = len(names)
        guard = 0
        for i in range(n):
            guard |= 1 << (BITS * i + BITS - 1)
        self._cache["guard"] = guard
        self._cache["decode"] = {}
        self._cache["packed"] = {}
        self._cache["var_keys"] = tuple(
            self.encode(tuple(int(j == i) for j in range(n))) for i in range(n)
        )

    @classmethod
    def make(cls, variables: str | Iterable[str] = "x,y",
             characteristic: int = DEFAULT_CHARACTERISTIC,
             order: MonomialOrder = GREVLEX) -> "RingContext":
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",")]
        return cls(tuple(variables), PrimeField(characteristic), order)

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    @property
    def p(self) -> int:
        return self.field.characteristic

    @property
    def guard(self) -> int:
        return self._cache["guard"]

    @property
    def var_keys(self) -> tuple[int, ...]:
        return self._cache["var_keys"]

    def with_order(self, order: MonomialOrder, variables: Sequence[str] | None = None) -> "RingContext":
        return RingContext(tuple(variables or self.variables), self.field, order)

    # -- key encoding -------------------------------------------------------

    def encode(self, exps: Sequence[int]) -> int:
        n = self.num_vars
        if len(exps) != n:
            raise ValueError(f"expected {n} exponents, got {len(exps)}")
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent")
            if e > MAX_EXPONENT:
                raise ResourceError(f"exponent {e} exceeds the supported maximum {MAX_EXPONENT}")
        kind = self.order.kind
        if kind == "grevlex":
            key = _grevlex_key(exps)
        elif kind == "lex":
            key = 0
            for e in exps:
                key = (key << BITS) | e
        else:
            k = self.order.split
            key = (_grevlex_key(exps[:k]) << self._block_shift()) + _grevlex_key(exps[k:])
        self._cache["decode"][key] = tuple(exps)
        return key

    def _block_shift(self) -> int:
        return BITS * (self.num_vars - self.order.split + 1) + 4

    def decode(self, key: int) -> tuple[int, ...]:
        cache = self._cache["decode"]
        exps = cache.get(key)
        if exps is not None:
            return exps
        n = self.num_vars
        kind = self.order.kind
        if kind == "grevlex":
            exps = _grevlex_exps(key, n)
        elif kind == "lex":
            exps = tuple((key >> (BITS * (n - 1 - i))) & FIELD_MASK for i in range(n))
        else:
            k = self.order.split
            hi, lo = divmod(key, 1 << self._block_shift())
            exps = _grevlex_exps(hi, k) + _grevlex_exps(lo, n - k)
        cache[key] = exps
        return exps

    def packed(self, key: int) -> int:
        """Guarded exponent packing used for divisibility tests."""
        cache = self._cache["packed"]
        pk = cache.get(key)
        if pk is None:
            pk = 0
            for i, e in enumerate(self.decode(key)):
                pk |= e << (BITS * i)
            cache[key] = pk
        return pk

    def divides(self, a: int, b: int) -> bool:
        """True iff the monomial with key ``a`` divides the one with key ``b``."""
        return not ((self.packed(b) - self.packed(a)) & self.guard)

    def degree(self, key: int) -> int:
        return sum(self.decode(key))

    def lcm(self, a: int, b: int) -> int:
        return self.encode(tuple(map(max, self.decode(a), self.decode(b))))

    def monomial(self, key: int) -> Monomial:
        return Monomial(self.decode(key))

    def monomial_str(self, key: int) -> str:
        parts = []
        for name, e in zip(self.variables, self.decode(key)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def monomials_of_degree(self, d: int) -> list[int]:
        """Keys of all monomials of total degree ``d``."""
        out = []

        def rec(i: int, left: int, acc: list[int]):
            if i == self.num_vars - 1:
                out.append(self.encode(acc + [left]))
                return
            for e in range(left, -1, -1):
                rec(i + 1, left - e, acc + [e])

        rec(0, d, [])
        return out

    def __str__(self) -> str:
        return f"GF({self.p})[{','.join(self.variables)}] ({self.order})"
