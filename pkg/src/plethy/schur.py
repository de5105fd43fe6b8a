"""The hook-shape Schur space: kernel of the multiplication map.

For parameters (N, d) the ambient space is Wedge(N, Sym(d)) (x) Sym(d) and
the multiplication map appends the loose factor to the wedge.  Its kernel
carries a distinguished basis indexed by semistandard pairs: the vector of
a pair (i, j) is the ambient basis vector labeled (i, j), plus the one
labeled by the neighbour pair whenever j does not occur in i.  Both
coefficients are one, so the same labels serve over every ring.

Construction self-verifies: the pair count matches the closed formula, every
basis vector maps to zero exactly over the integers, and rank computations
over the rationals confirm linear independence and spanning.
"""

from __future__ import annotations

from functools import cache

from . import tableaux
from .rings import QQ, ZZ, ConsistencyError, Ring
from .spaces import (
    LinearMap,
    ModuleElement,
    PairCoords,
    Sym,
    Tensor,
    Wedge,
    basis,
    dim,
    multiplication_map,
    rank,
    solve,
)


class HookSchurSpace:
    """Kernel of Wedge(N, Sym(d)) (x) Sym(d) -> Wedge(N+1, Sym(d)) with its
    semistandard-pair basis."""

    def __init__(self, N: int, d: int):
        if N < 1 or d < 0:
            raise ValueError(f"bad (N, d) = ({N}, {d})")
        self.N = N
        self.d = d
        self.ambient = Tensor(Wedge(N, Sym(d)), Sym(d))
        self.coords = PairCoords(N, d)
        self.pairs = basis(self.coords)
        self.pair_index = {p: n for n, p in enumerate(self.pairs)}
        self._verify()

    # ------------------------------------------------------------- vectors

    def canonical_vector(self, ring: Ring, i, j) -> ModuleElement:
        """Ambient basis vector: wedge of the monomials named by i, tensor
        the monomial with Y-exponent j.  (i, j) need not be semistandard."""
        return ModuleElement.basis_vector(self.ambient, ring, (tuple(i), j))

    def kernel_support(self, pair) -> tuple:
        """Ambient labels carrying the pair's kernel basis vector."""
        i, j = pair
        if not tableaux.is_semistandard(i, j):
            raise ValueError(f"pair ({i}, {j}) is not semistandard")
        if j in i:
            return (pair,)
        return (pair, tableaux.neighbour(i, j))

    def kernel_basis_vector(self, ring: Ring, pair) -> ModuleElement:
        coeffs = {label: ring.one for label in self.kernel_support(pair)}
        return ModuleElement(self.ambient, ring, coeffs)

    def basis_matrix(self, ring: Ring) -> LinearMap:
        """Columns are the kernel basis vectors, domain the pair coordinates."""
        return LinearMap.from_function(
            ring,
            self.coords,
            self.ambient,
            lambda pair: self.kernel_basis_vector(ring, pair),
        )

    # --------------------------------------------------------- coordinates

    def coordinates(self, v: ModuleElement) -> ModuleElement:
        """Express an ambient element in the kernel basis.

        Walks each content class: along a chain the basis vectors overlap
        in single canonical labels, so the coordinates fall out of a two-term
        recurrence, with the terminal label acting as a consistency check.
        A failed check means v is outside the kernel; a field ring gets a
        global solve as a second opinion before the error.
        """
        if v.space != self.ambient:
            raise ValueError("element does not live in the ambient space")
        ring = v.ring
        classes: dict = {}
        for (i, j), val in v.coeffs.items():
            classes.setdefault(tableaux.content(i, j), {})[(i, j)] = val
        coords: dict = {}
        for cont, members in sorted(classes.items()):
            if len(set(cont)) != len(cont):
                # one repeated value: the class holds a single fixed pair
                distinct = tuple(sorted(set(cont)))
                rep = next(x for x in set(cont) if cont.count(x) == 2)
                pair = (distinct, rep)
                if set(members) != {pair}:
                    return self._coordinates_fallback(v)
                coords[pair] = members[pair]
                continue
            chain = tableaux.content_chain(cont)
            terminal = (cont[1:], cont[0])
            if not set(members) <= set(chain) | {terminal}:
                return self._coordinates_fallback(v)
            running = ring.zero
            for pair in chain:
                running = ring.sub(members.get(pair, ring.zero), running)
                if not ring.is_zero(running):
                    coords[pair] = running
            if not ring.eq(members.get(terminal, ring.zero), running):
                return self._coordinates_fallback(v)
        return ModuleElement(self.coords, ring, coords)

    def _coordinates_fallback(self, v: ModuleElement) -> ModuleElement:
        if not v.ring.is_field:
            raise ValueError("element is not in the kernel span")
        try:
            return solve(self.basis_matrix(v.ring), v)
        except ValueError:
            raise ValueError("element is not in the kernel span") from None

    # ---------------------------------------------------------------- checks

    def _verify(self):
        n = len(self.pairs)
        if n != tableaux.count_hook_tableaux(self.N, self.d):
            raise ConsistencyError(
                f"pair enumeration at (N={self.N}, d={self.d}) does not match the count formula"
            )
        mu = multiplication_map(ZZ, self.N, self.d)
        for pair in self.pairs:
            if not mu.apply(self.kernel_basis_vector(ZZ, pair)).is_zero():
                raise ConsistencyError(f"basis vector of {pair} is outside the kernel")
        if rank(self.basis_matrix(QQ)) != n:
            raise ConsistencyError("kernel basis vectors are linearly dependent")
        mu_rank = rank(multiplication_map(QQ, self.N, self.d))
        if dim(mu.domain) - mu_rank != n:
            raise ConsistencyError("kernel dimension does not match the pair count")


@cache
def hook_schur_space(N: int, d: int) -> HookSchurSpace:
    """Shared, construction-verified instance for (N, d)."""
    return HookSchurSpace(N, d)
