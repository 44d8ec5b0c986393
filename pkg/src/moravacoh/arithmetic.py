"""Degree and index arithmetic for the height-n exterior complex at a prime p.

All internal degrees live in Z/2(p^n - 1) because v_n is inverted.  Every
degree that occurs in the complex is a multiple of q = 2p - 2, so it is
usually handled in *reduced* form, i.e. divided by q, as a residue mod e(n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    k = 3
    while k * k <= m:
        if m % k == 0:
            return False
        k += 2
    return True


def signed_residue(x: int, modulus: int) -> int:
    """Representative of x mod `modulus` in (-modulus/2, modulus/2]."""
    r = x % modulus
    if 2 * r > modulus:
        r -= modulus
    return r


@dataclass(frozen=True)
class PrimeContext:
    """Fixed (p, n) together with the constants derived from it."""

    p: int
    n: int
    q: int
    e: tuple[int, ...]
    period: int
    cond_ok: bool
    pn_ok: bool

    @property
    def en(self) -> int:
        """e(n), the modulus of reduced degrees."""
        return self.e[self.n]

    @property
    def num_generators(self) -> int:
        return self.n * self.n

    @property
    def collapse_ok(self) -> bool:
        """n <= p - 2: the range where the exterior complex is used at all."""
        return self.n <= self.p - 2

    def reduce(self, t_reduced: int) -> "InternalDegree":
        return InternalDegree.from_reduced(self, t_reduced)


def make_context(p: int, n: int, *, allow_even: bool = False) -> PrimeContext:
    """Validate (p, n) and compute q, e(0..n), the period and condition flags.

    `allow_even` admits p = 2; it exists only for the Greek-letter degree
    formula, which makes sense at every prime.
    """
    if not isinstance(p, int) or not isinstance(n, int):
        raise TypeError("p and n must be integers")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2 and not allow_even:
        raise ValueError("p=2 is not supported; the exterior complex needs an odd prime")
    if n < 1:
        raise ValueError(f"height n={n} must be >= 1")
    if n >= p:
        raise ValueError(f"height n={n} must be < p={p}")
    q = 2 * p - 2
    e = [0]
    for _ in range(n):
        e.append(p * e[-1] + 1)
    cond_ok = n * n <= 2 * p - 1 and n <= p - 2
    pn_ok = p % 4 == 3 or n % 2 == 0
    return PrimeContext(p=p, n=n, q=q, e=tuple(e), period=q * e[n], cond_ok=cond_ok, pn_ok=pn_ok)


@dataclass(frozen=True)
class InternalDegree:
    """An internal degree mod 2(p^n - 1), with its reduced form mod e(n)."""

    raw: int
    reduced: int | None
    period: int = field(repr=False)
    en: int = field(repr=False)

    @classmethod
    def from_raw(cls, ctx: PrimeContext, raw: int) -> "InternalDegree":
        raw %= ctx.period
        reduced = raw // ctx.q if raw % ctx.q == 0 else None
        return cls(raw=raw, reduced=reduced, period=ctx.period, en=ctx.en)

    @classmethod
    def from_reduced(cls, ctx: PrimeContext, reduced: int) -> "InternalDegree":
        reduced %= ctx.en
        return cls(raw=reduced * ctx.q, reduced=reduced, period=ctx.period, en=ctx.en)

    @property
    def raw_signed(self) -> int:
        return signed_residue(self.raw, self.period)

    @property
    def reduced_signed(self) -> int | None:
        return None if self.reduced is None else signed_residue(self.reduced, self.en)

    def as_dict(self) -> dict:
        return {
            "raw": self.raw,
            "raw_signed": self.raw_signed,
            "reduced": self.reduced,
            "reduced_signed": self.reduced_signed,
        }


class LemmaIntResult(NamedTuple):
    a: int
    neg_a: int
    digits: tuple[int, ...]


def _check_eps(ctx: PrimeContext, eps: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    length = ctx.n if length is None else length
    eps = tuple(int(x) for x in eps)
    if len(eps) != length:
        raise ValueError(f"epsilon vector must have length {length}, got {len(eps)}")
    if any(x not in (0, 1) for x in eps):
        raise ValueError("epsilon entries must be 0 or 1")
    return eps


def lemma_int_negate(ctx: PrimeContext, eps: Sequence[int]) -> LemmaIntResult:
    """Negate a = sum eps_i e(i) mod e(n) in the two closed forms.

    Returns a, the residue n + sum (p-1-eps_i) e(i) (which is -a), and the
    base-p digits a_0..a_{n-1} of a, where a_k counts the eps_i = 1 with i > k.
    """
    eps = _check_eps(ctx, eps)
    p, n, e, en = ctx.p, ctx.n, ctx.e, ctx.en
    a = sum(x * e[i] for i, x in enumerate(eps)) % en
    neg_a = (n + sum((p - 1 - x) * e[i] for i, x in enumerate(eps))) % en
    digits = tuple(sum(eps[k + 1:]) for k in range(n))
    return LemmaIntResult(a, neg_a, digits)


@dataclass(frozen=True)
class LambdaElement:
    u: int
    s_of_u: int
    u_bar: int
    eps: tuple[int, ...]


def lambda_set(ctx: PrimeContext, exponents: Sequence[int] = ()) -> list[LambdaElement]:
    """All 2^k sums  sum eps_i (e_i (2p^i - 2) + 1)  for the ideal (p^e_0, v_1^e_1, ...).

    Sorted by u, ties broken by the epsilon vector.  All-ones exponents give
    the set attached to the prime ideal I_k.
    """
    exponents = tuple(int(x) for x in exponents)
    k = len(exponents)
    if k > ctx.n:
        raise ValueError(f"ideal length {k} exceeds height n={ctx.n}")
    if any(x < 1 for x in exponents):
        raise ValueError("exponents must be positive")
    weights = [x * (2 * ctx.p**i - 2) + 1 for i, x in enumerate(exponents)]
    out = []
    for mask in range(1 << k):
        eps = tuple((mask >> i) & 1 for i in range(k))
        u = sum(w for w, b in zip(weights, eps) if b)
        s = sum(eps)
        out.append(LambdaElement(u=u, s_of_u=s, u_bar=u - s, eps=eps))
    out.sort(key=lambda el: (el.u, el.eps))
    return out


@dataclass(frozen=True)
class GreekDegree:
    n: int
    s: int
    t: int
    stem: int


def greek_degree(ctx: PrimeContext, s: int) -> GreekDegree:
    """Bidegree of the n-th Greek letter element with suffix s."""
    if s == 0:
        raise ValueError("Greek letter suffix s must be nonzero")
    p, n = ctx.p, ctx.n
    t = 2 * s * (p**n - 1) - 2 * sum(p**k - 1 for k in range(1, n))
    return GreekDegree(n=n, s=s, t=t, stem=t - n)


def moore_dual_shift(ctx: PrimeContext, exponents: Sequence[int]) -> int:
    """Suspension n + sum_{i>=1} |v_i^{e_i}| of the dual generalized Moore spectrum."""
    exponents = tuple(int(x) for x in exponents)
    if len(exponents) != ctx.n:
        raise ValueError(f"need {ctx.n} exponents, got {len(exponents)}")
    if any(x < 1 for x in exponents):
        raise ValueError("exponents must be positive")
    return ctx.n + sum(x * (2 * ctx.p**i - 2) for i, x in enumerate(exponents) if i >= 1)


@dataclass(frozen=True)
class ExtReduction:
    a: int
    b: int
    a_0: int
    eps_0: int
    m: int
    target_s: int


def ext_reduction(ctx: PrimeContext, t: LambdaElement, e: int) -> ExtReduction:
    """Reduce Ext^{m+e, m+t} for t in Lambda_n to a single exterior-complex bidegree.

    Writes t = aq + b, forces m = q - b so that m + t = (a+1)q, and returns
    the cohomological degree q + e - a_0 - eps_0 that the vanishing rests on.
    """
    if e not in (1, 2):
        raise ValueError("e must be 1 or 2")
    if not ctx.collapse_ok:
        raise ValueError(f"(p,n)=({ctx.p},{ctx.n}) violates n <= p-2")
    eps = _check_eps(ctx, t.eps)
    q = ctx.q
    a, b = divmod(t.u, q)
    if b != sum(eps):
        raise ArithmeticError(f"t={t.u}: remainder {b} != s(t)={sum(eps)}")
    if a != sum(x * ctx.e[i] for i, x in enumerate(eps)):
        raise ArithmeticError(f"t={t.u}: quotient {a} != sum eps_i e(i)")
    m = q - b
    if m + t.u != (a + 1) * q:
        raise ArithmeticError(f"t={t.u}: m + t != (a+1)q")
    a_0 = lemma_int_negate(ctx, eps).digits[0]
    if b - a_0 != eps[0]:
        raise ArithmeticError(f"t={t.u}: b - a_0 != eps_0")
    return ExtReduction(a=a, b=b, a_0=a_0, eps_0=eps[0], m=m, target_s=q + e - a_0 - eps[0])
