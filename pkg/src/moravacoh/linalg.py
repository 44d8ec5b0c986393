"""Dense linear algebra over F_p and cohomology of one bidegree slice."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from moravacoh.arithmetic import PrimeContext
from moravacoh.complex import Cochain, Monomial, complex_data

# entries stay below p < 2**16, so a product of two fits int64 before reduction
MAX_PRIME = 1 << 16


class SignConventionError(RuntimeError):
    """d_out . d_in != 0; the differential is not a differential."""


@dataclass(frozen=True)
class FpMatrix:
    p: int
    data: np.ndarray

    def __post_init__(self):
        if not 2 <= self.p < MAX_PRIME:
            raise ValueError(f"prime {self.p} outside supported range")
        arr = np.asarray(self.data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("FpMatrix needs a 2-d array")
        object.__setattr__(self, "data", arr % self.p)

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise ValueError("matrices over different primes")
        return FpMatrix(self.p, (self.data @ other.data) % self.p)

    def is_zero(self) -> bool:
        return not self.data.any()


def rref(a: np.ndarray, p: int, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; pivots searched in the first `ncols` columns."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    ncols = cols if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: FpMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(rref(m.data, m.p)[1])


def kernel_basis(m: FpMatrix) -> list[np.ndarray]:
    """Basis of {v : m v = 0}, one vector per free column, free entry 1."""
    cols = m.cols
    if m.rows == 0:
        return [np.eye(cols, dtype=np.int64)[k] for k in range(cols)]
    r, pivots = rref(m.data, m.p)
    pivot_set = set(pivots)
    out = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -r[i, f] % m.p
        out.append(v)
    return out


@dataclass(frozen=True)
class BidegreeSlice:
    ctx: PrimeContext
    s: int
    t_reduced: int
    basis_in: list[Monomial]
    basis_mid: list[Monomial]
    basis_out: list[Monomial]
    d_in: FpMatrix
    d_out: FpMatrix


def differential_matrix(ctx: PrimeContext, src: Sequence[int], dst: Sequence[int]) -> np.ndarray:
    """Matrix of d from the span of `src` monomials to the span of `dst` (bitmasks)."""
    data = complex_data(ctx)
    where = {b: k for k, b in enumerate(dst)}
    mat = np.zeros((len(dst), len(src)), dtype=np.int64)
    for col, bits in enumerate(src):
        for key, c in data.d_bits(bits).items():
            row = where.get(key)
            if row is None:
                raise SignConventionError(f"d leaves the slice: {Monomial(key, ctx.n)}")
            mat[row, col] = c
    return mat


def _row_bits(ctx: PrimeContext, s: int, t_reduced: int) -> list[int]:
    if s < 0 or s > ctx.num_generators:
        return []
    return complex_data(ctx).basis_bits(s, t_reduced)


def build_slice(ctx: PrimeContext, s: int, t_reduced: int) -> BidegreeSlice:
    if not 0 <= s <= ctx.num_generators:
        raise ValueError(f"s={s} outside 0..{ctx.num_generators}")
    t_reduced %= ctx.en
    rows = [_row_bits(ctx, k, t_reduced) for k in (s - 1, s, s + 1)]
    n, p = ctx.n, ctx.p
    return BidegreeSlice(
        ctx=ctx,
        s=s,
        t_reduced=t_reduced,
        basis_in=[Monomial(b, n) for b in rows[0]],
        basis_mid=[Monomial(b, n) for b in rows[1]],
        basis_out=[Monomial(b, n) for b in rows[2]],
        d_in=FpMatrix(p, differential_matrix(ctx, rows[0], rows[1])),
        d_out=FpMatrix(p, differential_matrix(ctx, rows[1], rows[2])),
    )


@dataclass(frozen=True)
class CohomologyResult:
    dim: int
    representatives: list[Cochain]
    rank_in: int
    dim_ker_out: int


def _vector_to_cochain(sl: BidegreeSlice, basis: Sequence[Monomial], s: int, v: np.ndarray) -> Cochain:
    terms = {m.bits: int(c) for m, c in zip(basis, v) if c}
    return Cochain(sl.ctx, s, sl.t_reduced, terms)


def cohomology(sl: BidegreeSlice) -> CohomologyResult:
    """H at the middle of the slice, with representatives in normalized echelon form.

    Representatives are kernel vectors reduced against the image, then put
    in reduced row echelon form, so they do not depend on elimination order.
    """
    p = sl.ctx.p
    if not (sl.d_out @ sl.d_in).is_zero():
        raise SignConventionError(f"d o d != 0 at s={sl.s}, t={sl.t_reduced}")
    mid = len(sl.basis_mid)
    kernel = kernel_basis(sl.d_out)
    if mid and sl.d_in.cols:
        im, im_piv = rref(sl.d_in.data.T, p)
        im = im[: len(im_piv)]
    else:
        im, im_piv = np.zeros((0, mid), dtype=np.int64), []
    rank_in = len(im_piv)
    reps: list[Cochain] = []
    if kernel:
        reduced = np.array(kernel, dtype=np.int64)
        for row, c in zip(im, im_piv):
            reduced = (reduced - np.outer(reduced[:, c], row)) % p
        echelon, piv = rref(reduced, p)
        reps = [_vector_to_cochain(sl, sl.basis_mid, sl.s, echelon[k]) for k in range(len(piv))]
    dim = len(kernel) - rank_in
    if dim != len(reps):
        raise SignConventionError("image not contained in kernel")
    return CohomologyResult(dim=dim, representatives=reps, rank_in=rank_in, dim_ker_out=len(kernel))


class ImageTest(NamedTuple):
    member: bool
    witness: Cochain | None


def cochain_vector(sl: BidegreeSlice, x: Cochain) -> np.ndarray:
    if x.ctx != sl.ctx or x.s != sl.s or x.t != sl.t_reduced:
        raise ValueError(f"cochain of bidegree ({x.s}, {x.t}) does not live in slice ({sl.s}, {sl.t_reduced})")
    where = {m.bits: k for k, m in enumerate(sl.basis_mid)}
    v = np.zeros(len(sl.basis_mid), dtype=np.int64)
    for bits, c in x.raw_terms.items():
        v[where[bits]] = c
    return v


def in_image(sl: BidegreeSlice, x: Cochain) -> ImageTest:
    """Is x = d(y) for some y in degree s-1?  y is returned when it exists."""
    p = sl.ctx.p
    v = cochain_vector(sl, x)
    ncols = sl.d_in.cols
    if not v.any():
        return ImageTest(True, Cochain(sl.ctx, sl.s - 1, sl.t_reduced))
    if ncols == 0:
        return ImageTest(False, None)
    aug = np.concatenate([sl.d_in.data, v[:, None]], axis=1)
    r, piv = rref(aug, p, ncols=ncols)
    if r[len(piv):, -1].any():
        return ImageTest(False, None)
    y = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(piv):
        y[c] = r[i, -1]
    return ImageTest(True, _vector_to_cochain(sl, sl.basis_in, sl.s - 1, y))


def class_dimensions(ctx: PrimeContext, t_reduced: int, s_values: Sequence[int]) -> dict[int, int]:
    """dim H^{s,t} for each requested s at one reduced internal degree, by ranks only."""
    t_reduced %= ctx.en
    need = sorted({k for s in s_values for k in (s - 1, s, s + 1)})
    rows = {k: _row_bits(ctx, k, t_reduced) for k in need}
    ranks: dict[int, int] = {}

    def d_rank(k: int) -> int:
        if k not in ranks:
            src, dst = rows[k], rows[k + 1]
            ranks[k] = rank(FpMatrix(ctx.p, differential_matrix(ctx, src, dst))) if src and dst else 0
        return ranks[k]

    return {s: len(rows[s]) - d_rank(s) - d_rank(s - 1) for s in s_values}


def cochain_dimension(ctx: PrimeContext, s: int, t_reduced: int) -> int:
    return len(_row_bits(ctx, s, t_reduced))
