"""Representation spaces for SL2 with exact scalars.

Spaces are immutable descriptors built from Sym(c) atoms: wedge powers,
symmetric powers, and binary tensors.  A basis vector of Sym(c) is the
monomial X^(c-a) Y^a, labeled by the Y-exponent a.  Wedge and SymPower
labels are strictly or weakly increasing tuples of inner labels; tensor
labels are pairs.  Basis enumeration order is fixed once and for all:
lexicographic tuples, tensor pairs with the left factor outermost.

The two-by-two matrix g = ((g11, g12), (g21, g22)) acts on the left by
g.X = g11 X + g21 Y and g.Y = g12 X + g22 Y, so columns of g are the
images of the basis.  The Lie generators act in characteristic zero by
e = X d/dY and f = Y d/dX.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from .rings import Ring, ZZ, QQ, binomial
from . import tableaux


@dataclass(frozen=True)
class Sym:
    """Sym^c E, dimension c + 1."""

    c: int

    def __post_init__(self):
        if self.c < 0:
            raise ValueError(f"Sym needs c >= 0, got {self.c}")


@dataclass(frozen=True)
class Wedge:
    """Wedge^r of an inner Sym space."""

    r: int
    inner: Sym

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"Wedge needs r >= 0, got {self.r}")
        if not isinstance(self.inner, Sym):
            raise ValueError("Wedge supports Sym atoms only")


@dataclass(frozen=True)
class SymPower:
    """Sym^r of an inner Sym space, basis of weakly increasing tuples."""

    r: int
    inner: Sym

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"SymPower needs r >= 0, got {self.r}")
        if not isinstance(self.inner, Sym):
            raise ValueError("SymPower supports Sym atoms only")


@dataclass(frozen=True)
class Tensor:
    left: "Space"
    right: "Space"


@dataclass(frozen=True)
class PairCoords:
    """Coordinate space whose basis is the sorted semistandard pairs.

    Not itself a polynomial space; it names coordinates with respect to the
    distinguished kernel basis, so kernel-valued maps can be ordinary
    LinearMaps.  Group and Lie actions are undefined on it.
    """

    N: int
    d: int

    def __post_init__(self):
        if self.N < 1 or self.d < 0:
            raise ValueError(f"bad (N, d) = ({self.N}, {self.d})")


Space = Sym | Wedge | SymPower | Tensor | PairCoords


@cache
def basis(space: Space) -> tuple:
    if isinstance(space, Sym):
        return tuple(range(space.c + 1))
    if isinstance(space, Wedge):
        return tuple(itertools.combinations(range(space.inner.c + 1), space.r))
    if isinstance(space, SymPower):
        return tuple(
            itertools.combinations_with_replacement(range(space.inner.c + 1), space.r)
        )
    if isinstance(space, Tensor):
        return tuple(
            (l, r) for l in basis(space.left) for r in basis(space.right)
        )
    if isinstance(space, PairCoords):
        return tuple(tableaux.semistandard_pairs(space.N, space.d))
    raise TypeError(f"not a space: {space!r}")


@cache
def basis_index(space: Space) -> dict:
    return {label: n for n, label in enumerate(basis(space))}


def dim(space: Space) -> int:
    if isinstance(space, Sym):
        return space.c + 1
    if isinstance(space, Wedge):
        return binomial(space.inner.c + 1, space.r)
    if isinstance(space, SymPower):
        return binomial(space.inner.c + space.r, space.r)
    if isinstance(space, Tensor):
        return dim(space.left) * dim(space.right)
    if isinstance(space, PairCoords):
        return tableaux.count_hook_tableaux(space.N, space.d)
    raise TypeError(f"not a space: {space!r}")


def ydegree(space: Space, label) -> int:
    """Total Y-exponent of a basis vector."""
    if isinstance(space, Sym):
        return label
    if isinstance(space, (Wedge, SymPower)):
        return sum(label)
    if isinstance(space, Tensor):
        return ydegree(space.left, label[0]) + ydegree(space.right, label[1])
    if isinstance(space, PairCoords):
        return sum(label[0]) + label[1]
    raise TypeError(f"not a space: {space!r}")


def total_degree(space: Space) -> int:
    """Homogeneous degree in X, Y shared by every basis vector."""
    if isinstance(space, Sym):
        return space.c
    if isinstance(space, (Wedge, SymPower)):
        return space.r * space.inner.c
    if isinstance(space, Tensor):
        return total_degree(space.left) + total_degree(space.right)
    if isinstance(space, PairCoords):
        return (space.N + 1) * space.d
    raise TypeError(f"not a space: {space!r}")


def label_str(space: Space, label) -> str:
    if isinstance(space, Sym):
        return str(label)
    if isinstance(space, (Wedge, SymPower)):
        return "(" + ",".join(map(str, label)) + ")"
    if isinstance(space, Tensor):
        return label_str(space.left, label[0]) + "|" + label_str(space.right, label[1])
    if isinstance(space, PairCoords):
        return "(" + ",".join(map(str, label[0])) + ")|" + str(label[1])
    raise TypeError(f"not a space: {space!r}")


def space_to_json(space: Space):
    if isinstance(space, Sym):
        return {"kind": "sym", "c": space.c}
    if isinstance(space, Wedge):
        return {"kind": "wedge", "r": space.r, "inner": space_to_json(space.inner)}
    if isinstance(space, SymPower):
        return {"kind": "sympower", "r": space.r, "inner": space_to_json(space.inner)}
    if isinstance(space, Tensor):
        return {
            "kind": "tensor",
            "left": space_to_json(space.left),
            "right": space_to_json(space.right),
        }
    if isinstance(space, PairCoords):
        return {"kind": "paircoords", "N": space.N, "d": space.d}
    raise TypeError(f"not a space: {space!r}")


def space_from_json(data) -> Space:
    kind = data["kind"]
    if kind == "sym":
        return Sym(data["c"])
    if kind == "wedge":
        return Wedge(data["r"], space_from_json(data["inner"]))
    if kind == "sympower":
        return SymPower(data["r"], space_from_json(data["inner"]))
    if kind == "tensor":
        return Tensor(space_from_json(data["left"]), space_from_json(data["right"]))
    if kind == "paircoords":
        return PairCoords(data["N"], data["d"])
    raise ValueError(f"unknown space kind {kind!r}")


def label_to_json(space: Space, label):
    if isinstance(space, Sym):
        return label
    if isinstance(space, (Wedge, SymPower)):
        return list(label)
    if isinstance(space, Tensor):
        return [label_to_json(space.left, label[0]), label_to_json(space.right, label[1])]
    if isinstance(space, PairCoords):
        return [list(label[0]), label[1]]
    raise TypeError(f"not a space: {space!r}")


def label_from_json(space: Space, data):
    if isinstance(space, Sym):
        return int(data)
    if isinstance(space, (Wedge, SymPower)):
        return tuple(int(v) for v in data)
    if isinstance(space, Tensor):
        return (
            label_from_json(space.left, data[0]),
            label_from_json(space.right, data[1]),
        )
    if isinstance(space, PairCoords):
        return (tuple(int(v) for v in data[0]), int(data[1]))
    raise TypeError(f"not a space: {space!r}")


def wedge_normalize(factors, top: int):
    """Sort wedge factors, tracking the permutation sign.

    Returns None when a factor repeats, else (sorted tuple, sign).  Factors
    outside {0, ..., top} are a caller bug, not a zero vector, and raise.
    """
    for a in factors:
        if not 0 <= a <= top:
            raise ValueError(f"wedge factor {a} out of range 0..{top}")
    if len(set(factors)) != len(factors):
        return None
    fs = list(factors)
    sign = 1
    # insertion sort; desk-scale tuples are tiny
    for t in range(1, len(fs)):
        u = t
        while u > 0 and fs[u - 1] > fs[u]:
            fs[u - 1], fs[u] = fs[u], fs[u - 1]
            sign = -sign
            u -= 1
    return tuple(fs), sign


class ModuleElement:
    """Sparse vector in a space: nonzero coefficients keyed by basis label."""

    __slots__ = ("space", "ring", "coeffs")

    def __init__(self, space: Space, ring: Ring, coeffs=None):
        cs = {}
        for label, val in (coeffs or {}).items():
            if not ring.is_zero(val):
                cs[label] = val
        self.space = space
        self.ring = ring
        self.coeffs = cs

    @classmethod
    def basis_vector(cls, space: Space, ring: Ring, label) -> "ModuleElement":
        if label not in basis_index(space):
            raise ValueError(f"label {label!r} not in the basis of {space}")
        return cls(space, ring, {label: ring.one})

    @classmethod
    def zero(cls, space: Space, ring: Ring) -> "ModuleElement":
        return cls(space, ring, {})

    def _match(self, other: "ModuleElement"):
        if self.space != other.space or self.ring != other.ring:
            raise ValueError("space or ring mismatch")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._match(other)
        ring = self.ring
        out = dict(self.coeffs)
        for label, val in other.coeffs.items():
            s = ring.add(out.get(label, ring.zero), val)
            if ring.is_zero(s):
                out.pop(label, None)
            else:
                out[label] = s
        return ModuleElement(self.space, ring, out)

    def __neg__(self) -> "ModuleElement":
        ring = self.ring
        return ModuleElement(
            self.space, ring, {l: ring.neg(v) for l, v in self.coeffs.items()}
        )

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, s) -> "ModuleElement":
        ring = self.ring
        return ModuleElement(
            self.space, ring, {l: ring.mul(s, v) for l, v in self.coeffs.items()}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.space == other.space
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def homogeneous_ydegree(self):
        """The common Y-degree of the support, or None if mixed or zero."""
        degs = {ydegree(self.space, l) for l in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        idx = basis_index(self.space)
        parts = [
            f"{self.ring.to_str(v)}*{label_str(self.space, l)}"
            for l, v in sorted(self.coeffs.items(), key=lambda kv: idx[kv[0]])
        ]
        return " + ".join(parts)


class LinearMap:
    """Sparse matrix between two spaces, columns in domain basis order."""

    __slots__ = ("domain", "codomain", "ring", "cols")

    def __init__(self, domain: Space, codomain: Space, ring: Ring, cols):
        if len(cols) != dim(domain):
            raise ValueError("column count does not match the domain dimension")
        self.domain = domain
        self.codomain = codomain
        self.ring = ring
        self.cols = [
            {l: v for l, v in col.items() if not ring.is_zero(v)} for col in cols
        ]

    @classmethod
    def from_function(cls, ring: Ring, domain: Space, codomain: Space, fn) -> "LinearMap":
        """fn maps a domain basis label to a coefficient dict or element."""
        cols = []
        for label in basis(domain):
            img = fn(label)
            if isinstance(img, ModuleElement):
                if img.space != codomain or img.ring != ring:
                    raise ValueError("image space or ring mismatch")
                img = img.coeffs
            cols.append(img)
        return cls(domain, codomain, ring, cols)

    def column(self, label) -> ModuleElement:
        return ModuleElement(
            self.codomain, self.ring, self.cols[basis_index(self.domain)[label]]
        )

    def entry(self, row_label, col_label):
        col = self.cols[basis_index(self.domain)[col_label]]
        return col.get(row_label, self.ring.zero)

    def apply(self, v: ModuleElement) -> ModuleElement:
        if v.space != self.domain or v.ring != self.ring:
            raise ValueError("space or ring mismatch")
        ring = self.ring
        idx = basis_index(self.domain)
        out: dict = {}
        for dl, c in v.coeffs.items():
            for cl, m in self.cols[idx[dl]].items():
                s = ring.add(out.get(cl, ring.zero), ring.mul(c, m))
                if ring.is_zero(s):
                    out.pop(cl, None)
                else:
                    out[cl] = s
        return ModuleElement(self.codomain, ring, out)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.codomain != self.domain or other.ring != self.ring:
            raise ValueError("composition mismatch")
        ring = self.ring
        idx = basis_index(self.domain)
        cols = []
        for col in other.cols:
            out: dict = {}
            for bl, c in col.items():
                for cl, m in self.cols[idx[bl]].items():
                    s = ring.add(out.get(cl, ring.zero), ring.mul(c, m))
                    if ring.is_zero(s):
                        out.pop(cl, None)
                    else:
                        out[cl] = s
            cols.append(out)
        return LinearMap(other.domain, self.codomain, ring, cols)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if (
            other.domain != self.domain
            or other.codomain != self.codomain
            or other.ring != self.ring
        ):
            raise ValueError("map mismatch")
        ring = self.ring
        cols = []
        for a, b in zip(self.cols, other.cols):
            out = dict(a)
            for l, v in b.items():
                s = ring.sub(out.get(l, ring.zero), v)
                if ring.is_zero(s):
                    out.pop(l, None)
                else:
                    out[l] = s
            cols.append(out)
        return LinearMap(self.domain, self.codomain, ring, cols)

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.ring == other.ring
            and self.cols == other.cols
        )

    def map_entries(self, ring2: Ring, fn) -> "LinearMap":
        """Push every entry through fn into ring2 (e.g. reduce mod p)."""
        return LinearMap(
            self.domain,
            self.codomain,
            ring2,
            [{l: fn(v) for l, v in col.items()} for col in self.cols],
        )

    def entry_count(self) -> int:
        return sum(len(col) for col in self.cols)


def identity_map(ring: Ring, space: Space) -> LinearMap:
    return LinearMap(space, space, ring, [{l: ring.one} for l in basis(space)])


# ---------------------------------------------------------------- group action


def _linear_form_power(ring: Ring, s, t, m: int):
    """Coefficients of (s X + t Y)^m by Y-degree, as a dense list."""
    return [
        ring.mul(ring.from_int(binomial(m, u)), ring.mul(ring.pow(s, m - u), ring.pow(t, u)))
        for u in range(m + 1)
    ]


def _sym_action_table(ring: Ring, g, c: int):
    """For each label a of Sym(c), the expansion of g.(X^(c-a) Y^a)."""
    (g11, g12), (g21, g22) = g
    table = []
    for a in range(c + 1):
        xs = _linear_form_power(ring, g11, g21, c - a)
        ys = _linear_form_power(ring, g12, g22, a)
        out: dict = {}
        for u, cu in enumerate(xs):
            if ring.is_zero(cu):
                continue
            for v, cv in enumerate(ys):
                if ring.is_zero(cv):
                    continue
                b = u + v
                s = ring.add(out.get(b, ring.zero), ring.mul(cu, cv))
                if ring.is_zero(s):
                    out.pop(b, None)
                else:
                    out[b] = s
        table.append(out)
    return table


def _product_expand(ring: Ring, factor_dicts, combine):
    """Multiply out a product of sparse single-factor images.

    combine(labels_tuple) returns (label, int_sign) or None; terms with
    None are dropped.
    """
    out: dict = {}
    for combo in itertools.product(*(fd.items() for fd in factor_dicts)):
        labels = tuple(b for b, _ in combo)
        target = combine(labels)
        if target is None:
            continue
        label, sgn = target
        val = ring.from_int(sgn)
        for _, cv in combo:
            val = ring.mul(val, cv)
        s = ring.add(out.get(label, ring.zero), val)
        if ring.is_zero(s):
            out.pop(label, None)
        else:
            out[label] = s
    return out


def _label_action(ring: Ring, g, space: Space, label, sym_tables: dict) -> dict:
    if isinstance(space, Sym):
        if space.c not in sym_tables:
            sym_tables[space.c] = _sym_action_table(ring, g, space.c)
        return sym_tables[space.c][label]
    if isinstance(space, Wedge):
        c = space.inner.c
        if c not in sym_tables:
            sym_tables[c] = _sym_action_table(ring, g, c)
        table = sym_tables[c]
        return _product_expand(
            ring, [table[a] for a in label], lambda ls: wedge_normalize(ls, c)
        )
    if isinstance(space, SymPower):
        c = space.inner.c
        if c not in sym_tables:
            sym_tables[c] = _sym_action_table(ring, g, c)
        table = sym_tables[c]
        return _product_expand(
            ring, [table[a] for a in label], lambda ls: (tuple(sorted(ls)), 1)
        )
    if isinstance(space, Tensor):
        lpart = _label_action(ring, g, space.left, label[0], sym_tables)
        rpart = _label_action(ring, g, space.right, label[1], sym_tables)
        out = {}
        for ll, lv in lpart.items():
            for rl, rv in rpart.items():
                out[(ll, rl)] = ring.mul(lv, rv)
        return out
    raise TypeError(f"not a space: {space!r}")


def _check_matrix(ring: Ring, g):
    if len(g) != 2 or any(len(row) != 2 for row in g):
        raise ValueError("expected a 2x2 matrix")
    return tuple(tuple(row) for row in g)


def act_group(g, v: ModuleElement) -> ModuleElement:
    """Apply a 2x2 matrix with entries in v's ring to an element."""
    g = _check_matrix(v.ring, g)
    ring = v.ring
    sym_tables: dict = {}
    out = ModuleElement.zero(v.space, ring)
    for label, c in v.coeffs.items():
        img = _label_action(ring, g, v.space, label, sym_tables)
        out = out + ModuleElement(v.space, ring, img).scale(c)
    return out


def group_action_map(ring: Ring, g, space: Space) -> LinearMap:
    """The whole action matrix of g on a space."""
    g = _check_matrix(ring, g)
    sym_tables: dict = {}
    cols = [
        _label_action(ring, g, space, label, sym_tables) for label in basis(space)
    ]
    return LinearMap(space, space, ring, cols)


# ------------------------------------------------------------------ Lie action


def _lie_label(ring: Ring, which: str, space: Space, label) -> dict:
    out: dict = {}

    def put(lab, n: int):
        if n == 0:
            return
        s = ring.add(out.get(lab, ring.zero), ring.from_int(n))
        if ring.is_zero(s):
            out.pop(lab, None)
        else:
            out[lab] = s

    if isinstance(space, Sym):
        c, a = space.c, label
        if which == "e":
            if a >= 1:
                put(a - 1, a)
        else:
            if a <= c - 1:
                put(a + 1, c - a)
        return out
    if isinstance(space, (Wedge, SymPower)):
        c = space.inner.c
        strict = isinstance(space, Wedge)
        for idx, a in enumerate(label):
            if which == "e":
                if a < 1:
                    continue
                new = label[:idx] + (a - 1,) + label[idx + 1 :]
                coeff = a
            else:
                if a > c - 1:
                    continue
                new = label[:idx] + (a + 1,) + label[idx + 1 :]
                coeff = c - a
            if strict:
                if any(x == y for x, y in zip(new, new[1:])):
                    continue
            else:
                new = tuple(sorted(new))
            put(new, coeff)
        return out
    if isinstance(space, Tensor):
        for ll, lv in _lie_label(ring, which, space.left, label[0]).items():
            out[(ll, label[1])] = lv
        for rl, rv in _lie_label(ring, which, space.right, label[1]).items():
            key = (label[0], rl)
            s = ring.add(out.get(key, ring.zero), rv)
            if ring.is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
        return out
    raise TypeError(f"not a space: {space!r}")


def _require_char_zero(ring: Ring):
    if ring not in (ZZ, QQ):
        raise ValueError("Lie generators act only over ZZ or QQ")


def act_e(v: ModuleElement) -> ModuleElement:
    """e = X d/dY, the raising generator; lowers the Y-degree by one."""
    return _act_lie("e", v)


def act_f(v: ModuleElement) -> ModuleElement:
    """f = Y d/dX; raises the Y-degree by one."""
    return _act_lie("f", v)


def _act_lie(which: str, v: ModuleElement) -> ModuleElement:
    _require_char_zero(v.ring)
    ring = v.ring
    out = ModuleElement.zero(v.space, ring)
    for label, c in v.coeffs.items():
        img = _lie_label(ring, which, v.space, label)
        out = out + ModuleElement(v.space, ring, img).scale(c)
    return out


def lie_action_map(ring: Ring, which: str, space: Space) -> LinearMap:
    _require_char_zero(ring)
    if which not in ("e", "f"):
        raise ValueError(f"unknown generator {which!r}")
    cols = [_lie_label(ring, which, space, label) for label in basis(space)]
    return LinearMap(space, space, ring, cols)


# ------------------------------------------------------- multiplication map


def multiplication_map(ring: Ring, N: int, d: int) -> LinearMap:
    """Append the loose tensor factor to the wedge:
    Wedge(N, Sym(d)) (x) Sym(d) -> Wedge(N+1, Sym(d))."""
    if N < 1 or d < 0:
        raise ValueError(f"bad (N, d) = ({N}, {d})")
    domain = Tensor(Wedge(N, Sym(d)), Sym(d))
    codomain = Wedge(N + 1, Sym(d))

    def fn(label):
        k, a = label
        norm = wedge_normalize(k + (a,), d)
        if norm is None:
            return {}
        lab, sgn = norm
        return {lab: ring.from_int(sgn)}

    return LinearMap.from_function(ring, domain, codomain, fn)


# ------------------------------------------------------------- linear algebra


def _sub_scaled(target: dict, source: dict, factor, ring: Ring):
    """target -= factor * source, in place, dropping zeros."""
    for k, val in source.items():
        s = ring.sub(target.get(k, ring.zero), ring.mul(factor, val))
        if ring.is_zero(s):
            target.pop(k, None)
        else:
            target[k] = s


def _echelon(cols, ring: Ring, track: bool):
    """Column reduction with deterministic smallest-row pivoting.

    cols: dicts keyed by row index.  Returns (pivots, kernel_combos) where
    pivots maps a row index to (reduced column, combination) and each
    kernel combination expresses 0 as a combination of original columns
    with the trailing coefficient equal to one.
    """
    if not ring.is_field:
        raise ValueError(f"elimination needs a field, not {ring.name}")
    pivots: dict = {}
    kernel = []
    for j, col in enumerate(cols):
        v = dict(col)
        combo = {j: ring.one} if track else None
        while v:
            r = min(v)
            hit = pivots.get(r)
            if hit is None:
                pivots[r] = (v, combo)
                break
            pv, pc = hit
            f = ring.div(v[r], pv[r])
            _sub_scaled(v, pv, f, ring)
            if track:
                _sub_scaled(combo, pc, f, ring)
        else:
            kernel.append(combo)
    return pivots, kernel


def _indexed_cols(A: LinearMap):
    idx = basis_index(A.codomain)
    return [{idx[l]: v for l, v in col.items()} for col in A.cols]


def rank(A: LinearMap) -> int:
    pivots, _ = _echelon(_indexed_cols(A), A.ring, track=False)
    return len(pivots)


def rank_of_vectors(vectors: list[ModuleElement]) -> int:
    """Rank of the span of elements of one space over one field."""
    if not vectors:
        return 0
    space, ring = vectors[0].space, vectors[0].ring
    idx = basis_index(space)
    cols = []
    for v in vectors:
        if v.space != space or v.ring != ring:
            raise ValueError("space or ring mismatch")
        cols.append({idx[l]: c for l, c in v.coeffs.items()})
    pivots, _ = _echelon(cols, ring, track=False)
    return len(pivots)


def kernel_basis(A: LinearMap) -> list[ModuleElement]:
    """A basis of ker A as domain elements, each verified to map to zero."""
    _, combos = _echelon(_indexed_cols(A), A.ring, track=True)
    dom = basis(A.domain)
    out = []
    for combo in combos:
        v = ModuleElement(A.domain, A.ring, {dom[j]: c for j, c in combo.items()})
        if not A.apply(v).is_zero():
            raise AssertionError("kernel vector failed the zero check")
        out.append(v)
    return out


def solve(A: LinearMap, b: ModuleElement) -> ModuleElement:
    """One exact solution x of A x = b, or ValueError if none exists."""
    if b.space != A.codomain or b.ring != A.ring:
        raise ValueError("space or ring mismatch")
    ring = A.ring
    pivots, _ = _echelon(_indexed_cols(A), ring, track=True)
    idx = basis_index(A.codomain)
    v = {idx[l]: c for l, c in b.coeffs.items()}
    x: dict = {}
    while v:
        r = min(v)
        hit = pivots.get(r)
        if hit is None:
            raise ValueError("inconsistent system: no solution")
        pv, pc = hit
        f = ring.div(v[r], pv[r])
        _sub_scaled(v, pv, f, ring)
        for j, c in pc.items():
            s = ring.add(x.get(j, ring.zero), ring.mul(f, c))
            if ring.is_zero(s):
                x.pop(j, None)
            else:
                x[j] = s
    dom = basis(A.domain)
    return ModuleElement(A.domain, ring, {dom[j]: c for j, c in x.items()})
