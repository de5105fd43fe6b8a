"""Falsification scanner for the generalized wedge-to-hook identity.

For a width parameter M the candidate left side is
Wedge(M-1, Sym(M+N-3)) (x) Wedge(M+N-1, Sym(M+d-1)); the right side is the
hook-shape kernel of

    Wedge(N, Sym(d)) (x) SymPower(M-1, Sym(d))
        -> Wedge(N+1, Sym(d)) (x) SymPower(M-2, Sym(d)),

the map moving each symmetric factor into the wedge in turn, so repeated
factors contribute integer multiplicities (which matters mod p).  M = 2 is
the proven case, reproducing the multiplication map verbatim; M = 1 reads
as the bare wedge power on both sides, the one-dimensional Wedge(0) factor
dropped.  This convention choice is recorded in every report because the
general statement does not pin one down.

The scanner never asserts: it compares graded dimensions over the
rationals (up to the determinant-twist power of q) and unipotent Jordan
types over small prime fields, and reports what it finds.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field

from .characters import hook_schur_polynomial, qchar, qpoly
from .rings import QQ, ConsistencyError, PrimeField, Ring
from .spaces import (
    LinearMap,
    ModuleElement,
    Space,
    Sym,
    SymPower,
    Tensor,
    Wedge,
    basis,
    dim,
    group_action_map,
    identity_map,
    kernel_basis,
    rank_of_vectors,
    wedge_normalize,
)

CONVENTION = (
    "hook(M,1^(N-1)) = ker(Wedge(N,Sym d) x SymPower(M-1,Sym d) -> "
    "Wedge(N+1,Sym d) x SymPower(M-2,Sym d)); M=1 -> Wedge(N,Sym d); "
    "left side drops its Wedge(0) factor at M=1"
)


def lhs_space(M: int, N: int, d: int) -> Space:
    """The wedge tensor product side."""
    _check_mnd(M, N, d)
    if M == 1:
        return Wedge(N, Sym(d))
    return Tensor(
        Wedge(M - 1, Sym(M + N - 3)), Wedge(M + N - 1, Sym(M + d - 1))
    )


def hook_domain(M: int, N: int, d: int) -> Space:
    _check_mnd(M, N, d)
    if M == 1:
        return Wedge(N, Sym(d))
    return Tensor(Wedge(N, Sym(d)), SymPower(M - 1, Sym(d)))


def hook_kernel_map(ring: Ring, M: int, N: int, d: int) -> LinearMap:
    """The defining map of the hook kernel, M >= 2."""
    _check_mnd(M, N, d)
    if M < 2:
        raise ValueError("the kernel map needs M >= 2")
    domain = hook_domain(M, N, d)
    codomain = Tensor(Wedge(N + 1, Sym(d)), SymPower(M - 2, Sym(d)))

    def fn(label):
        w, m = label
        out: dict = {}
        for x in sorted(set(m)):
            norm = wedge_normalize(w + (x,), d)
            if norm is None:
                continue
            lab, sgn = norm
            pos = m.index(x)
            rest = m[:pos] + m[pos + 1 :]
            cnt = m.count(x)
            key = (lab, rest)
            val = ring.add(out.get(key, ring.zero), ring.from_int(cnt * sgn))
            if ring.is_zero(val):
                out.pop(key, None)
            else:
                out[key] = val
        return out

    return LinearMap.from_function(ring, domain, codomain, fn)


def hook_kernel_vectors(ring: Ring, M: int, N: int, d: int) -> list[ModuleElement]:
    """Basis of the hook kernel over a field; the whole wedge space at M=1."""
    if M == 1:
        space = hook_domain(M, N, d)
        return [ModuleElement.basis_vector(space, ring, l) for l in basis(space)]
    return kernel_basis(hook_kernel_map(ring, M, N, d))


def _check_mnd(M: int, N: int, d: int):
    if M < 1 or N < 1 or d < 0:
        raise ValueError(f"bad (M, N, d) = ({M}, {N}, {d})")


# ----------------------------------------------------------------- characters


def kernel_qchar(ring: Ring, M: int, N: int, d: int):
    """Graded dimension of the hook kernel over a field.

    Kernel vectors produced by the elimination are automatically
    Y-homogeneous because columns of different degree never share a pivot
    row."""
    counts: dict[int, int] = {}
    for v in hook_kernel_vectors(ring, M, N, d):
        w = v.homogeneous_ydegree()
        if w is None:
            raise ConsistencyError("kernel vector is not homogeneous")
        counts[w] = counts.get(w, 0) + 1
    if not counts:
        return qpoly(())
    out = [0] * (max(counts) + 1)
    for w, n in counts.items():
        out[w] = n
    return qpoly(out)


def conjecture_qchar(M: int, N: int, d: int) -> dict:
    """Compare graded dimensions of the two sides over the rationals,
    aligned by lowest degree (the determinant twist shifts one side)."""
    lhs = qchar(lhs_space(M, N, d))
    rhs = kernel_qchar(QQ, M, N, d)
    tableaux_poly = hook_schur_polynomial(M, N, d)
    if lhs.is_zero() or rhs.is_zero():
        shift = 0
        equal = lhs == rhs
    else:
        low_l = next(n for n, c in enumerate(lhs.coeffs) if c)
        low_r = next(n for n, c in enumerate(rhs.coeffs) if c)
        shift = low_l - low_r
        equal = shift >= 0 and lhs == rhs.shift(shift)
    return {
        "qchar_equal": equal,
        "qchar_shift": shift,
        "dim_lhs": lhs(1),
        "dim_rhs_char0": rhs(1),
        "kernel_matches_tableaux": rhs == tableaux_poly,
    }


# ----------------------------------------------------------------- fingerprints


def jordan_type_from_ranks(ranks: list[int]) -> tuple[int, ...]:
    """Block sizes from ranks of successive nilpotent powers; ranks[0] is
    the dimension and the list ends at zero."""
    if ranks[-1] != 0:
        raise ValueError("rank sequence must end at zero")
    blocks_ge = [ranks[m - 1] - ranks[m] for m in range(1, len(ranks))]
    if any(a < b for a, b in zip(blocks_ge, blocks_ge[1:])):
        raise ConsistencyError(f"rank sequence {ranks} is not convex")
    parts: list[int] = []
    for m, ge in enumerate(blocks_ge, start=1):
        ge_next = blocks_ge[m] if m < len(blocks_ge) else 0
        parts.extend([m] * (ge - ge_next))
    parts.sort(reverse=True)
    return tuple(parts)


def jordan_fingerprint(p: int, space: Space, vectors=None) -> tuple[int, ...]:
    """Jordan type of the standard unipotent on a space over GF(p), or on
    the span of the given vectors (checked to be invariant)."""
    ring = PrimeField(p)
    U = group_action_map(
        ring, ((ring.one, ring.one), (ring.zero, ring.one)), space
    )
    if vectors is None:
        vectors = [ModuleElement.basis_vector(space, ring, l) for l in basis(space)]
    else:
        for v in vectors:
            if v.space != space or v.ring != ring:
                raise ValueError("vectors do not match the space or field")
    r0 = rank_of_vectors(vectors)
    if r0 != len(vectors):
        raise ValueError("vectors are not linearly independent")
    if vectors and rank_of_vectors(vectors + [U.apply(v) for v in vectors]) != r0:
        raise ConsistencyError("span is not invariant under the unipotent")
    shift = U - identity_map(ring, space)
    ranks = [r0]
    cur = vectors
    while ranks[-1] > 0:
        cur = [shift.apply(v) for v in cur]
        ranks.append(rank_of_vectors(cur))
        if len(ranks) > p + 1:
            raise ConsistencyError("nilpotency degree exceeded the characteristic")
    return jordan_type_from_ranks(ranks)


# ----------------------------------------------------------------------- scan


@dataclass
class PrimeFingerprint:
    p: int
    dim_rhs: int
    jordan_lhs: tuple[int, ...]
    jordan_rhs: tuple[int, ...]

    @property
    def jordan_equal(self) -> bool:
        return self.jordan_lhs == self.jordan_rhs


@dataclass
class ConjectureReport:
    M: int
    N: int
    d: int
    dim_lhs: int
    dim_rhs_char0: int
    qchar_equal: bool
    qchar_shift: int
    kernel_matches_tableaux: bool
    primes: list[PrimeFingerprint] = field(default_factory=list)
    convention: str = CONVENTION

    @property
    def all_equal(self) -> bool:
        return (
            self.qchar_equal
            and self.dim_lhs == self.dim_rhs_char0
            and all(f.jordan_equal for f in self.primes)
        )

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "N": self.N,
            "d": self.d,
            "dim_lhs": self.dim_lhs,
            "dim_rhs_char0": self.dim_rhs_char0,
            "qchar_equal": self.qchar_equal,
            "qchar_shift": self.qchar_shift,
            "kernel_matches_tableaux": self.kernel_matches_tableaux,
            "primes": [
                {
                    "p": f.p,
                    "dim_rhs": f.dim_rhs,
                    "jordan_lhs": list(f.jordan_lhs),
                    "jordan_rhs": list(f.jordan_rhs),
                    "jordan_equal": f.jordan_equal,
                }
                for f in self.primes
            ],
            "all_equal": self.all_equal,
            "convention": self.convention,
        }

    def csv_rows(self) -> list[list]:
        rows = []
        for f in self.primes:
            rows.append(
                [
                    self.M,
                    self.N,
                    self.d,
                    f.p,
                    self.dim_lhs,
                    f.dim_rhs,
                    self.qchar_equal,
                    "+".join(map(str, f.jordan_lhs)) or "0",
                    "+".join(map(str, f.jordan_rhs)) or "0",
                    f.jordan_equal,
                    self.convention,
                ]
            )
        return rows


CSV_HEADER = [
    "M",
    "N",
    "d",
    "p",
    "dim_lhs",
    "dim_rhs",
    "qchar_equal",
    "jordan_lhs",
    "jordan_rhs",
    "jordan_equal",
    "convention",
]


def scan_one(M: int, N: int, d: int, primes: tuple[int, ...]) -> ConjectureReport:
    """Full comparison at one grid point."""
    qc = conjecture_qchar(M, N, d)
    report = ConjectureReport(
        M=M,
        N=N,
        d=d,
        dim_lhs=qc["dim_lhs"],
        dim_rhs_char0=qc["dim_rhs_char0"],
        qchar_equal=qc["qchar_equal"],
        qchar_shift=qc["qchar_shift"],
        kernel_matches_tableaux=qc["kernel_matches_tableaux"],
    )
    left = lhs_space(M, N, d)
    for p in primes:
        ring = PrimeField(p)
        vectors = hook_kernel_vectors(ring, M, N, d)
        report.primes.append(
            PrimeFingerprint(
                p=p,
                dim_rhs=len(vectors),
                jordan_lhs=jordan_fingerprint(p, left),
                jordan_rhs=jordan_fingerprint(p, hook_domain(M, N, d), vectors),
            )
        )
    return report


def _scan_job(args):
    return scan_one(*args)


def scan(
    Ms,
    Ns,
    ds,
    primes,
    dim_cap: int = 5000,
    workers: int = 1,
):
    """Sweep the grid in deterministic order.

    Returns (reports, skipped); a grid point is skipped with a notice when
    either side's ambient dimension exceeds dim_cap.  Grid points are
    independent, so workers > 1 fans them out to processes.
    """
    jobs = []
    skipped = []
    primes = tuple(sorted(set(primes)))
    for p in primes:
        PrimeField(p)  # validate early
    for M in sorted(set(Ms)):
        for N in sorted(set(Ns)):
            for d in sorted(set(ds)):
                _check_mnd(M, N, d)
                sizes = (dim(lhs_space(M, N, d)), dim(hook_domain(M, N, d)))
                if max(sizes) > dim_cap:
                    skipped.append(
                        {
                            "M": M,
                            "N": N,
                            "d": d,
                            "reason": f"dimension {max(sizes)} exceeds cap {dim_cap}",
                        }
                    )
                    continue
                jobs.append((M, N, d, primes))
    if workers > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_scan_job, jobs))
    else:
        reports = [_scan_job(j) for j in jobs]
    return reports, skipped
