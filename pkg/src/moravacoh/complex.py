"""The exterior complex E(h_{i,j})_n with its quadratic differential.

Generators h_{i,j} (1 <= i <= n, j in Z/n) are numbered lexicographically,
h_{i,j} -> (i-1)*n + j, and a square-free monomial is the bitmask of its
factors.  A monomial always means the product of its factors in increasing
generator order; every sign below is relative to that normal form:

* products carry (-1)^(number of inversions) when the factors are merged;
* d(h_{i,j}) = sum_{s=1}^{i-1} h_{s,j} h_{i-s,s+j}, extended as a graded
  derivation;
* the dual of h_A is the complement h_A^* with the sign that makes
  h_A^* . h_A = +g_n.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple

import numpy as np

from moravacoh.arithmetic import InternalDegree, PrimeContext


class GeneratorId(NamedTuple):
    i: int
    j: int

    def label(self) -> str:
        return f"{self.i},{self.j}"


def gen_index(n: int, i: int, j: int) -> int:
    if not 1 <= i <= n:
        raise ValueError(f"first index i={i} out of range 1..{n}")
    return (i - 1) * n + (j % n)


def gen_id(n: int, k: int) -> GeneratorId:
    i, j = divmod(k, n)
    return GeneratorId(i + 1, j)


def _bits_members(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True, order=False)
class Monomial:
    """Square-free product h_A; `bits` marks the factors, `n` the height."""

    bits: int
    n: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits_members(self.bits))

    @property
    def members(self) -> tuple[GeneratorId, ...]:
        return tuple(gen_id(self.n, k) for k in _bits_members(self.bits))

    @property
    def s(self) -> int:
        return self.bits.bit_count()

    def __lt__(self, other: "Monomial") -> bool:
        return self.indices < other.indices

    def __str__(self) -> str:
        if not self.bits:
            return "1"
        if self.n < 10:
            return "".join(f"h{g.i}{g.j}" for g in self.members)
        return "".join(f"h({g.i},{g.j})" for g in self.members)

    def labels(self) -> list[str]:
        return [g.label() for g in self.members]


def monomial(n: int, *pairs: tuple[int, int]) -> Monomial:
    """Monomial from (i, j) pairs in any order (repeats are rejected)."""
    bits = 0
    for i, j in pairs:
        k = gen_index(n, i, j)
        if bits >> k & 1:
            raise ValueError(f"repeated generator h_{{{i},{j}}}")
        bits |= 1 << k
    return Monomial(bits, n)


_PAREN = re.compile(r"h\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_COMPACT = re.compile(r"h(\d)(\d)")


def parse_monomial(n: int, text: str) -> Monomial:
    """Parse 'h31h40h41', 'h(3,1) h(4,0)' or '3,1 4,0'; '1' is the empty monomial."""
    text = text.strip()
    if text in ("", "1"):
        return Monomial(0, n)
    if "h" not in text:
        pairs = [tuple(int(x) for x in tok.split(",")) for tok in text.split()]
        return monomial(n, *pairs)
    pattern = _PAREN if "(" in text else _COMPACT
    squeezed = re.sub(r"[\s*.]", "", text)
    matches = list(pattern.finditer(squeezed))
    if "".join(m.group(0) for m in matches) != squeezed:
        raise ValueError(f"cannot parse monomial {text!r}")
    return monomial(n, *((int(m.group(1)), int(m.group(2))) for m in matches))


class SignedMonomial(NamedTuple):
    monomial: Monomial
    sign: int


def mul_sign(a: int, b: int) -> int:
    """Sign of h_A . h_B relative to h_{A u B}; 0 when A and B meet."""
    if a & b:
        return 0
    inv = 0
    for k in _bits_members(b):
        inv += (a >> (k + 1)).bit_count()
    return -1 if inv & 1 else 1


def perm_sign(word: Iterable[int]) -> int:
    """Sign of the permutation sorting `word` (0 if it has repeats); brute force."""
    word = list(word)
    if len(set(word)) != len(word):
        return 0
    inv = sum(1 for x, y in itertools.combinations(word, 2) if x > y)
    return -1 if inv & 1 else 1


class _ComplexData:
    """Per-context tables: generator degrees, d on generators, caches."""

    def __init__(self, ctx: PrimeContext):
        self.ctx = ctx
        n, p, en = ctx.n, ctx.p, ctx.en
        self.N = n * n
        self.full = (1 << self.N) - 1
        self.gdeg = [pow(p, k % n, en) * ctx.e[k // n + 1] % en for k in range(self.N)]
        self.dgen: list[list[tuple[int, int]]] = []
        for k in range(self.N):
            i, j = k // n + 1, k % n
            terms = []
            for s in range(1, i):
                a = gen_index(n, s, j)
                b = gen_index(n, i - s, s + j)
                sign = 1 if a < b else -1
                terms.append(((1 << a) | (1 << b), sign))
            self.dgen.append(terms)
        self._dcache: dict[int, dict[int, int]] = {}
        self._reach: list[list[np.ndarray]] | None = None

    def degree_bits(self, bits: int) -> int:
        return sum(self.gdeg[k] for k in _bits_members(bits)) % self.ctx.en

    def d_bits(self, bits: int) -> dict[int, int]:
        """d(h_A) as {bits: coefficient mod p}, cached."""
        cached = self._dcache.get(bits)
        if cached is not None:
            return cached
        p = self.ctx.p
        out: dict[int, int] = {}
        prefix = 0
        for r, k in enumerate(_bits_members(bits)):
            suffix = bits >> (k + 1) << (k + 1)
            rest = prefix | suffix
            lead = -1 if r & 1 else 1
            for pair, psign in self.dgen[k]:
                if pair & rest:
                    continue
                left = prefix | pair
                sign = lead * psign * mul_sign(prefix, pair) * mul_sign(left, suffix)
                key = left | suffix
                out[key] = (out.get(key, 0) + sign) % p
            prefix |= 1 << k
        out = {key: c for key, c in out.items() if c}
        self._dcache[bits] = out
        return out

    def _reach_tables(self) -> list[list[np.ndarray]]:
        """reach[k][r][x]: can r generators from k..N-1 have reduced degree x."""
        if self._reach is None:
            en, N = self.ctx.en, self.N
            reach = [[np.zeros(en, dtype=bool) for _ in range(N + 1)] for _ in range(N + 1)]
            reach[N][0][0] = True
            for k in range(N - 1, -1, -1):
                reach[k][0][0] = True
                for r in range(1, N - k + 1):
                    reach[k][r] = reach[k + 1][r] | np.roll(reach[k + 1][r - 1], self.gdeg[k])
            self._reach = reach
        return self._reach

    def basis_bits(self, s: int, t_reduced: int) -> list[int]:
        en, N = self.ctx.en, self.N
        t_reduced %= en
        if s < 0 or s > N:
            return []
        if math.comb(N, s) <= 4096 or (N + 1) ** 2 * en > 50_000_000:
            out = []
            for combo in itertools.combinations(range(N), s):
                if sum(self.gdeg[k] for k in combo) % en == t_reduced:
                    out.append(sum(1 << k for k in combo))
            return out
        reach = self._reach_tables()
        gdeg = self.gdeg
        out = []

        def walk(k: int, r: int, target: int, bits: int) -> None:
            if r == 0:
                out.append(bits)
                return
            for kk in range(k, N - r + 1):
                rest = (target - gdeg[kk]) % en
                if reach[kk + 1][r - 1][rest]:
                    walk(kk + 1, r - 1, rest, bits | (1 << kk))

        if reach[0][s][t_reduced]:
            walk(0, s, t_reduced, 0)
        return out


@lru_cache(maxsize=32)
def complex_data(ctx: PrimeContext) -> _ComplexData:
    return _ComplexData(ctx)


class Cochain:
    """Homogeneous F_p-linear combination of monomials of one bidegree.

    `t` is the reduced internal degree (a residue mod e(n)).  Terms are kept
    as {bits: coefficient}; `terms` gives the Monomial-keyed view.
    """

    __slots__ = ("ctx", "s", "t", "_terms")

    def __init__(self, ctx: PrimeContext, s: int, t: int, terms: Mapping[int, int] | None = None):
        self.ctx = ctx
        self.s = s
        self.t = t % ctx.en
        data = complex_data(ctx)
        clean: dict[int, int] = {}
        for bits, c in (terms or {}).items():
            if isinstance(bits, Monomial):
                bits = bits.bits
            c %= ctx.p
            if not c:
                continue
            if bits.bit_count() != s or data.degree_bits(bits) != self.t:
                raise ValueError(f"monomial {Monomial(bits, ctx.n)} is not in bidegree ({s}, {t})")
            clean[bits] = (clean.get(bits, 0) + c) % ctx.p
        self._terms = {b: c for b, c in sorted(clean.items(), key=lambda kv: _bits_members(kv[0])) if c}

    @classmethod
    def from_monomial(cls, ctx: PrimeContext, m: Monomial, coeff: int = 1) -> "Cochain":
        return cls(ctx, m.s, complex_data(ctx).degree_bits(m.bits), {m.bits: coeff})

    @classmethod
    def zero(cls, ctx: PrimeContext, s: int, t: int) -> "Cochain":
        return cls(ctx, s, t)

    @property
    def bidegree(self) -> tuple[int, InternalDegree]:
        return self.s, InternalDegree.from_reduced(self.ctx, self.t)

    @property
    def raw_terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def terms(self) -> dict[Monomial, int]:
        n = self.ctx.n
        return {Monomial(b, n): c for b, c in self._terms.items()}

    def support(self) -> set[Monomial]:
        return set(self.terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: "Cochain") -> None:
        if self.ctx != other.ctx or self.s != other.s or self.t != other.t:
            raise ValueError("cochains live in different bidegrees")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            terms[b] = terms.get(b, 0) + c
        return Cochain(self.ctx, self.s, self.t, terms)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c: int) -> "Cochain":
        return Cochain(self.ctx, self.s, self.t, {b: c * v for b, v in self._terms.items()})

    def __rmul__(self, c: int) -> "Cochain":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.ctx, self.s, self.t, self._terms) == (other.ctx, other.s, other.t, other._terms)

    def __hash__(self) -> int:
        return hash((self.ctx, self.s, self.t, tuple(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"Cochain(0; s={self.s}, t={self.t})"
        parts = [f"{c}*{Monomial(b, self.ctx.n)}" for b, c in self._terms.items()]
        return f"Cochain({' + '.join(parts)}; s={self.s}, t={self.t})"

    def to_json(self) -> list:
        """[[["i,j", ...], coeff], ...] with monomials in canonical order."""
        n = self.ctx.n
        return [[Monomial(b, n).labels(), c] for b, c in self._terms.items()]


def generator_degree(ctx: PrimeContext, g: GeneratorId | tuple[int, int]) -> InternalDegree:
    """|h_{i,j}| = 2 p^j (p^i - 1) mod 2(p^n - 1); reduced form p^j e(i) mod e(n)."""
    i, j = g
    k = gen_index(ctx.n, i, j)
    return InternalDegree.from_reduced(ctx, complex_data(ctx).gdeg[k])


def monomial_degree(ctx: PrimeContext, m: Monomial) -> InternalDegree:
    return InternalDegree.from_reduced(ctx, complex_data(ctx).degree_bits(m.bits))


def multiply(x: Cochain, y: Cochain) -> Cochain:
    if x.ctx != y.ctx:
        raise ValueError("cochains over different contexts")
    ctx = x.ctx
    terms: dict[int, int] = {}
    for a, ca in x.raw_terms.items():
        for b, cb in y.raw_terms.items():
            sign = mul_sign(a, b)
            if sign:
                terms[a | b] = terms.get(a | b, 0) + sign * ca * cb
    return Cochain(ctx, x.s + y.s, x.t + y.t, terms)


def differential(ctx: PrimeContext, x: Cochain) -> Cochain:
    data = complex_data(ctx)
    terms: dict[int, int] = {}
    for bits, c in x.raw_terms.items():
        for key, v in data.d_bits(bits).items():
            terms[key] = terms.get(key, 0) + c * v
    return Cochain(ctx, x.s + 1, x.t, terms)


def top_class(ctx: PrimeContext) -> Monomial:
    """g_n, the product of all n^2 generators."""
    return Monomial(complex_data(ctx).full, ctx.n)


def dual(ctx: PrimeContext, m: Monomial) -> SignedMonomial:
    """Complement monomial h_A^*, signed so that dual(m) . m = +g_n."""
    full = complex_data(ctx).full
    comp = full & ~m.bits
    return SignedMonomial(Monomial(comp, ctx.n), mul_sign(comp, m.bits))


def dual_cochain(ctx: PrimeContext, m: Monomial) -> Cochain:
    mono, sign = dual(ctx, m)
    return Cochain.from_monomial(ctx, mono, sign)


def enumerate_basis(ctx: PrimeContext, s: int, t_reduced: int) -> list[Monomial]:
    """Monomials with s factors and reduced degree t_reduced, lexicographic on factors."""
    if not 0 <= s <= ctx.num_generators:
        raise ValueError(f"s={s} outside 0..{ctx.num_generators}")
    n = ctx.n
    return [Monomial(b, n) for b in complex_data(ctx).basis_bits(s, t_reduced)]
