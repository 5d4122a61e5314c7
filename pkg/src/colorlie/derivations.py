"""Graded endomorphisms, derivation and n-derivation spaces, and the
verification routines for the main equalities on concrete algebras.

An n-derivation D satisfies, on every n-tuple of homogeneous elements,

    D([[..[[x1,x2],x3],..],xn]) =
        sum_i eps(deg D, deg x1 + .. + deg x_{i-1}) *
              [[..[x1, .., D(x_i)], .., xn]

(the i = 1 term has no twist). Because the twist presupposes a degree for
D, spaces are computed as direct sums of homogeneous blocks over all of
the (finite) grading group; the full space is the span of the blocks.

Two independent routes exist on purpose: ``n_derivation_space`` assembles
one linear system per degree and takes its kernel, while
``is_n_derivation`` evaluates the defining identity by brute force on
every basis tuple. They share no assembly code and are cross-checked in
the test suite.

Constraint rows are ordered lexicographically over
(degree, x1..xn, output coordinate); together with canonical echelon
forms this makes every computed space reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import ColorAlgebra
from .errors import (
    AlgebraMismatch,
    BadArity,
    NoSolution,
    PreconditionFailed,
)
from .grading import GroupElement
from .linalg import MatrixExact, Subspace, kernel_from_rows
from .scalars import CycloScalar

DEFAULT_MAX_N = 4


def block_coordinates(a: ColorAlgebra, gamma: GroupElement) -> tuple:
    """Matrix coordinates (k, j) a degree-gamma map may occupy: deg k = gamma + deg j.

    Every (k, j) belongs to exactly one degree, so the blocks partition the
    d*d coordinate space.
    """
    key = ("block_coords", gamma)
    coords = a._cache.get(key)
    if coords is None:
        coords = tuple(
            (k, j)
            for k in range(a.dim)
            for j in range(a.dim)
            if a.degrees[k] == gamma + a.degrees[j]
        )
        a._cache[key] = coords
    return coords


class GradedMap:
    """A homogeneous linear endomorphism: M[k][j] is the e_k coefficient of D(e_j).

    Entries outside the degree block must be exactly zero.
    """

    __slots__ = ("algebra", "degree", "matrix")

    def __init__(self, algebra: ColorAlgebra, degree: GroupElement, matrix):
        matrix = tuple(tuple(row) for row in matrix)
        d = algebra.dim
        if len(matrix) != d or any(len(row) != d for row in matrix):
            raise ValueError(f"matrix must be {d}x{d}")
        for k in range(d):
            for j in range(d):
                if matrix[k][j] and algebra.degrees[k] != degree + algebra.degrees[j]:
                    raise ValueError(
                        f"entry ({k}, {j}) violates the degree-{degree} block support"
                    )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("GradedMap is immutable")

    @staticmethod
    def zero(algebra: ColorAlgebra, degree: GroupElement) -> "GradedMap":
        z = algebra.zero_scalar()
        d = algebra.dim
        return GradedMap(algebra, degree, ((z,) * d,) * d)

    def apply(self, v) -> tuple:
        out = [self.algebra.zero_scalar()] * self.algebra.dim
        for j, vj in enumerate(v):
            if vj:
                for k in range(self.algebra.dim):
                    c = self.matrix[k][j]
                    if c:
                        out[k] = out[k] + c * vj
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other, degree is the sum."""
        if self.algebra != other.algebra:
            raise AlgebraMismatch("composing maps over different algebras")
        d = self.algebra.dim
        z = self.algebra.zero_scalar()
        rows = []
        for k in range(d):
            srow = self.matrix[k]
            row = []
            for j in range(d):
                acc = z
                for l in range(d):
                    a, b = srow[l], other.matrix[l][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMap(self.algebra, self.degree + other.degree, rows)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.algebra != other.algebra:
            raise AlgebraMismatch("adding maps over different algebras")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("adding maps of different degrees")
        deg = other.degree if self.is_zero() else self.degree
        return GradedMap(
            self.algebra,
            deg,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.matrix, other.matrix)
            ],
        )

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + other.scale(-1)

    def scale(self, c) -> "GradedMap":
        c = self.algebra.scalar(c)
        return GradedMap(
            self.algebra, self.degree, [[c * e for e in row] for row in self.matrix]
        )

    def block_vector(self) -> tuple:
        """Entries at this degree's block coordinates, in canonical order."""
        coords = block_coordinates(self.algebra, self.degree)
        return tuple(self.matrix[k][j] for k, j in coords)

    @staticmethod
    def from_block_vector(algebra: ColorAlgebra, degree: GroupElement, vec) -> "GradedMap":
        coords = block_coordinates(algebra, degree)
        if len(vec) != len(coords):
            raise ValueError(f"expected {len(coords)} block entries, got {len(vec)}")
        z = algebra.zero_scalar()
        grid = [[z] * algebra.dim for _ in range(algebra.dim)]
        for (k, j), c in zip(coords, vec):
            grid[k][j] = c
        return GradedMap(algebra, degree, grid)

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.algebra != other.algebra or self.matrix != other.matrix:
            return False
        # the zero map belongs to every degree component
        return self.degree == other.degree or self.is_zero()

    def __repr__(self):
        return f"GradedMap(degree={self.degree}, dim={self.algebra.dim})"


def ad(a: ColorAlgebra, x) -> GradedMap:
    """The inner map y -> [x, y]; requires x homogeneous (NonHomogeneous otherwise)."""
    degree = a.degree_of(x)
    d = a.dim
    z = a.zero_scalar()
    grid = [[z] * d for _ in range(d)]
    for i, xi in enumerate(x):
        if xi:
            for j in range(d):
                for k, c in a._nonzero_constants()[i][j]:
                    grid[k][j] = grid[k][j] + xi * c
    return GradedMap(a, degree, grid)


class DerivationSpace:
    """A per-degree direct sum of graded-map spaces; blocks cover all of the group."""

    __slots__ = ("algebra", "n", "blocks")

    def __init__(self, algebra: ColorAlgebra, n: int, blocks):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", dict(blocks))

    def __setattr__(self, name, value):
        raise AttributeError("DerivationSpace is immutable")

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.blocks.values())

    def block(self, gamma: GroupElement) -> Subspace:
        return self.blocks[gamma]

    def block_dims(self) -> list:
        return [(gamma, s.dim) for gamma, s in self.blocks.items()]

    def basis_maps(self) -> list:
        """Every block-basis vector reassembled as a GradedMap, in canonical order."""
        maps = []
        for gamma, sub in self.blocks.items():
            for row in sub.basis.entries:
                maps.append(GradedMap.from_block_vector(self.algebra, gamma, row))
        return maps

    def contains_map(self, D: GradedMap) -> bool:
        if D.is_zero():
            return True
        if D.algebra != self.algebra:
            raise AlgebraMismatch("map is over a different algebra")
        sub = self.blocks.get(D.degree)
        if sub is None:
            return False
        return sub.contains_vector(D.block_vector())

    def __repr__(self):
        dims = {tuple(g.residues): s.dim for g, s in self.blocks.items()}
        return f"DerivationSpace(n={self.n}, dims={dims}, total={self.total_dim})"


def _basis_bracket_table(a: ColorAlgebra, n: int) -> dict:
    """Left-normed brackets of all basis n-tuples, built by extending prefixes."""
    key = ("bracket_table", n)
    table = a._cache.get(key)
    if table is not None:
        return table
    d = a.dim
    level = {(j,): a.basis_vector(j) for j in range(d)}
    for _ in range(n - 1):
        nxt = {}
        for t, vec in level.items():
            for j in range(d):
                nxt[t + (j,)] = _bracket_with_basis(a, vec, j)
        level = nxt
    a._cache[key] = level
    return level


def _bracket_with_basis(a: ColorAlgebra, v, j: int) -> tuple:
    out = [a.zero_scalar()] * a.dim
    nz = a._nonzero_constants()
    for i, vi in enumerate(v):
        if vi:
            for k, c in nz[i][j]:
                out[k] = out[k] + vi * c
    return tuple(out)


def n_derivation_space(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> DerivationSpace:
    """Kernel, per degree, of the defining identity on all basis n-tuples.

    n = 2 is the ordinary derivation space Der. Cost grows like d^n * d
    rows per degree, so n is capped (default 4); pass a larger max_n to
    override deliberately.
    """
    if n < 2:
        raise BadArity(f"n-derivations need n >= 2, got {n}")
    if n > max_n:
        raise BadArity(
            f"n = {n} exceeds the cost cap max_n = {max_n}; "
            f"override max_n explicitly to proceed"
        )
    key = ("nder", n)
    cached = a._cache.get(key)
    if cached is not None:
        return cached

    d = a.dim
    m = a.conductor
    zero = CycloScalar.zero(m)
    table = _basis_bracket_table(a, n)
    blocks = {}
    for gamma in a.group.elements():
        coords = block_coordinates(a, gamma)
        index = {kj: pos for pos, kj in enumerate(coords)}
        if not coords:
            blocks[gamma] = Subspace.zero(0, m)
            continue
        kset = [
            [k for k in range(d) if (k, j) in index] for j in range(d)
        ]
        eps_by_deg = {g: a.bichar.eps(gamma, g) for g in a.group.elements()}

        def rows():
            ncoords = len(coords)
            for t in product(range(d), repeat=n):
                bt = table[t]
                # twist factors per insertion position
                twists = []
                s = a.group.zero()
                for i in range(n):
                    twists.append(eps_by_deg[s])
                    s = s + a.degrees[t[i]]
                contribs = []
                for i in range(n):
                    ji = t[i]
                    e = twists[i]
                    for k in kset[ji]:
                        vec = bt if k == ji else table[t[:i] + (k,) + t[i + 1:]]
                        contribs.append((index[(k, ji)], e, vec))
                for r in range(d):
                    row = [zero] * ncoords
                    for l in range(d):
                        pos = index.get((r, l))
                        if pos is not None and bt[l]:
                            row[pos] = row[pos] + bt[l]
                    for pos, e, vec in contribs:
                        c = vec[r]
                        if c:
                            row[pos] = row[pos] - e * c
                    yield row

        blocks[gamma] = kernel_from_rows(rows(), len(coords), m)

    space = DerivationSpace(a, n, blocks)
    a._cache[key] = space
    return space


def is_n_derivation(a: ColorAlgebra, D: GradedMap, n: int) -> bool:
    """Brute-force check of the defining identity on every basis n-tuple.

    Deliberately shares no code with the system assembler in
    ``n_derivation_space``: brackets are evaluated by direct bilinear folds.
    """
    if n < 2:
        raise BadArity(f"n-derivations need n >= 2, got {n}")
    if D.algebra != a:
        raise AlgebraMismatch("map is over a different algebra")
    d = a.dim
    basis = [a.basis_vector(i) for i in range(d)]
    gamma = D.degree
    for t in product(range(d), repeat=n):
        xs = [basis[j] for j in t]
        lhs = D.apply(a.left_normed_bracket(xs))
        rhs = [a.zero_scalar()] * d
        s = a.group.zero()
        for i in range(n):
            e = a.bichar.eps(gamma, s)
            ys = list(xs)
            ys[i] = D.apply(ys[i])
            term = a.left_normed_bracket(ys)
            rhs = [acc + e * c for acc, c in zip(rhs, term)]
            s = s + a.degrees[t[i]]
        if tuple(rhs) != lhs:
            return False
    return True


def inner_derivation_space(a: ColorAlgebra) -> DerivationSpace:
    """Image of x -> ad(x), organized per degree; dimension is d - dim Z."""
    cached = a._cache.get("inner")
    if cached is not None:
        return cached
    m = a.conductor
    blocks = {}
    for gamma in a.group.elements():
        coords = block_coordinates(a, gamma)
        rows = [
            ad(a, a.basis_vector(i)).block_vector()
            for i in range(a.dim)
            if a.degrees[i] == gamma
        ]
        blocks[gamma] = Subspace.from_rows(len(coords), rows, m)
    space = DerivationSpace(a, 2, blocks)
    a._cache["inner"] = space
    return space


def map_bracket(d1: GradedMap, d2: GradedMap) -> GradedMap:
    """d1 o d2 - eps(deg d1, deg d2) * d2 o d1, of degree deg d1 + deg d2."""
    if d1.algebra != d2.algebra:
        raise AlgebraMismatch("bracketing maps over different algebras")
    a = d1.algebra
    e = a.bichar.eps(d1.degree, d2.degree)
    left = d1.compose(d2)
    right = d2.compose(d1).scale(e)
    return GradedMap(
        a,
        d1.degree + d2.degree,
        [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(left.matrix, right.matrix)],
    )


def _ad_coefficient_matrix(a: ColorAlgebra) -> MatrixExact:
    # rows indexed by (k, l) row-major, columns by i: entry c[i][l][k]
    cached = a._cache.get("ad_matrix")
    if cached is None:
        d = a.dim
        rows = []
        for k in range(d):
            for l in range(d):
                rows.append([a.constants[i][l][k] for i in range(d)])
        cached = MatrixExact(a.conductor, rows, cols=d)
        a._cache["ad_matrix"] = cached
    return cached


def _solve_ad_preimage(a: ColorAlgebra, target: GradedMap) -> tuple:
    """The unique y with ad(y) = target (unique since the center is zero)."""
    b = [target.matrix[k][l] for k in range(a.dim) for l in range(a.dim)]
    return _ad_coefficient_matrix(a).solve(b)


def delta(a: ColorAlgebra, D: GradedMap, n: int) -> GradedMap:
    """The map with [D, ad x] = ad(delta(x)) for all x, for perfect centerless algebras.

    Computed by solving ad(y) = [D, ad e_j] for each basis vector; the zero
    center makes y unique, so no bracket decomposition of x is ever chosen.
    A failing solve means [D, ad x] escaped the inner space, which the
    inner-ideal property rules out; it is surfaced as NoSolution.
    """
    if n < 2:
        raise BadArity(f"n-derivations need n >= 2, got {n}")
    if not a.is_perfect():
        raise PreconditionFailed("delta needs a perfect algebra")
    if a.center().dim != 0:
        raise PreconditionFailed("delta needs a zero center")
    d = a.dim
    z = a.zero_scalar()
    grid = [[z] * d for _ in range(d)]
    for j in range(d):
        target = map_bracket(D, ad(a, a.basis_vector(j)))
        try:
            y = _solve_ad_preimage(a, target)
        except NoSolution as exc:
            raise NoSolution(
                f"[D, ad e_{j}] fell outside ad(L); inner-ideal consistency broken"
            ) from exc
        for k in range(d):
            grid[k][j] = y[k]
    result = GradedMap(a, D.degree, grid)
    for j in range(d):
        check = ad(a, result.apply(a.basis_vector(j)))
        if check != map_bracket(D, ad(a, a.basis_vector(j))):
            raise NoSolution(f"postcondition [D, ad e_{j}] = ad(delta(e_{j})) failed")
    return result


def derivation_color_algebra(a: ColorAlgebra, space: DerivationSpace) -> ColorAlgebra:
    """The map space as a Lie color algebra under map_bracket.

    Basis: the per-degree block bases of ``space`` in canonical order, each
    carrying its block degree; structure constants come from expressing
    brackets of basis pairs back in the basis. Closure is verified pair by
    pair (NotClosed on the first escape), and the result must pass the
    axiom check.
    """
    from .errors import NotClosed

    maps = space.basis_maps()
    degrees = [mp.degree for mp in maps]
    r = len(maps)
    m = a.conductor
    zero = CycloScalar.zero(m)
    # global index of each block-basis row, per degree
    offsets = {}
    pos = 0
    for gamma, sub in space.blocks.items():
        offsets[gamma] = list(range(pos, pos + sub.dim))
        pos += sub.dim
    grid = [[[zero] * r for _ in range(r)] for _ in range(r)]
    for p in range(r):
        for q in range(r):
            br = map_bracket(maps[p], maps[q])
            gamma = degrees[p] + degrees[q]
            sub = space.blocks.get(gamma)
            if br.is_zero():
                continue
            if sub is None or sub.dim == 0:
                raise NotClosed(
                    f"bracket of basis maps ({p}, {q}) escapes the space", (p, q)
                )
            coeffs = sub.coordinates_of(br.block_vector())
            if coeffs is None:
                raise NotClosed(
                    f"bracket of basis maps ({p}, {q}) escapes the space", (p, q)
                )
            for local, c in enumerate(coeffs):
                grid[p][q][offsets[gamma][local]] = c
    result = ColorAlgebra(
        a.group,
        a.bichar,
        degrees,
        grid,
        names=tuple(f"D{i + 1}" for i in range(r)),
    )
    gate = result.check_axioms()
    if not gate.ok:
        raise RuntimeError(
            "derivation algebra failed the axiom check: " + "; ".join(gate.messages())
        )
    return result


# -- verification reports ----------------------------------------------------


def _degree_key(g: GroupElement) -> list:
    return list(g.residues)


@dataclass
class TheoremPart1Report:
    """Whether the n-derivation space coincides with the derivation space."""

    n: int
    is_perfect: bool
    center_dim: int
    block_dims: list  # (degree residues, der dim, nder dim, equal)
    equal: bool
    der_total: int
    nder_total: int
    delta_fixed_point: bool | None  # only evaluated on theorem instances

    @property
    def preconditions_hold(self) -> bool:
        return self.is_perfect and self.center_dim == 0

    @property
    def passed(self) -> bool:
        if not self.preconditions_hold:
            return False
        return self.equal and self.delta_fixed_point is not False

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "is_perfect": self.is_perfect,
            "center_dim": self.center_dim,
            "preconditions_hold": self.preconditions_hold,
            "blocks": [
                {"degree": deg, "der_dim": dd, "nder_dim": nd, "equal": eq}
                for deg, dd, nd, eq in self.block_dims
            ],
            "equal": self.equal,
            "der_total": self.der_total,
            "nder_total": self.nder_total,
            "delta_fixed_point": self.delta_fixed_point,
        }


def verify_nder_equals_der(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> TheoremPart1Report:
    """Compare nDer and Der per degree; on perfect centerless algebras they must agree.

    When the hypotheses fail the observed relationship is recorded with no
    claim attached. On theorem instances the report also confirms the
    fixed-point property delta(D) = D for every block basis map.
    """
    der = n_derivation_space(a, 2, max_n=max_n)
    nder = n_derivation_space(a, n, max_n=max_n)
    blocks = []
    equal = True
    for gamma in a.group.elements():
        s, t = der.block(gamma), nder.block(gamma)
        eq = s == t
        equal = equal and eq
        blocks.append((_degree_key(gamma), s.dim, t.dim, eq))
    is_perfect = a.is_perfect()
    center_dim = a.center().dim
    fixed = None
    if is_perfect and center_dim == 0:
        fixed = all(
            delta(a, D, n) == D for D in nder.basis_maps()
        )
    return TheoremPart1Report(
        n=n,
        is_perfect=is_perfect,
        center_dim=center_dim,
        block_dims=blocks,
        equal=equal,
        der_total=der.total_dim,
        nder_total=nder.total_dim,
        delta_fixed_point=fixed,
    )


@dataclass
class SecondStatementReport:
    """Whether every n-derivation of the derivation algebra is inner."""

    n: int
    derivation_algebra_dim: int
    block_dims: list  # (degree residues, inner dim, nder dim, equal)
    equal: bool
    inner_total: int
    nder_total: int
    base_der_equals_nder: bool  # cross-check: on the base algebra Der = nDer
    preserves_inner_image: bool
    witness_failures: list
    witnesses: list  # per nDer basis map: matrix of the witness derivation d

    @property
    def passed(self) -> bool:
        return (
            self.equal
            and self.base_der_equals_nder
            and self.preserves_inner_image
            and not self.witness_failures
        )

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "derivation_algebra_dim": self.derivation_algebra_dim,
            "blocks": [
                {"degree": deg, "inner_dim": idim, "nder_dim": nd, "equal": eq}
                for deg, idim, nd, eq in self.block_dims
            ],
            "equal": self.equal,
            "inner_total": self.inner_total,
            "nder_total": self.nder_total,
            "base_der_equals_nder": self.base_der_equals_nder,
            "preserves_inner_image": self.preserves_inner_image,
            "witness_failures": self.witness_failures,
            "witnesses": self.witnesses,
        }


def verify_second_statement(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> SecondStatementReport:
    """Build the derivation algebra A, then check nDer(A) = ad(A) with sub-checks.

    Sub-check one: every basis map of nDer(A) keeps the image of x -> ad(x)
    inside itself. Sub-check two: for each such map D there is a derivation
    d of the base algebra with D(ad x) = ad(d(x)) on all basis x; d is
    solved for and recorded. Requires a perfect algebra with zero center.
    """
    if not a.is_perfect():
        raise PreconditionFailed("second statement needs a perfect algebra")
    if a.center().dim != 0:
        raise PreconditionFailed("second statement needs a zero center")
    der = n_derivation_space(a, 2, max_n=max_n)
    # Der is used as the algebra below; record that it matches nDer on the base
    nder_base = n_derivation_space(a, n, max_n=max_n)
    base_match = all(
        der.block(g) == nder_base.block(g) for g in a.group.elements()
    )
    A = derivation_color_algebra(a, der)
    nder_A = n_derivation_space(A, n, max_n=max_n)
    inner_A = inner_derivation_space(A)

    blocks = []
    equal = True
    for gamma in A.group.elements():
        s, t = inner_A.block(gamma), nder_A.block(gamma)
        eq = s == t
        equal = equal and eq
        blocks.append((_degree_key(gamma), s.dim, t.dim, eq))

    # coordinates of each ad(e_i) of the base algebra inside A
    der_maps = der.basis_maps()
    offsets = {}
    pos = 0
    for gamma, sub in der.blocks.items():
        offsets[gamma] = (pos, sub)
        pos += sub.dim
    z = A.zero_scalar()

    def coords_in_A(mp: GradedMap) -> tuple:
        vec = [z] * A.dim
        if mp.is_zero():
            return tuple(vec)
        start, sub = offsets[mp.degree]
        coeffs = sub.coordinates_of(mp.block_vector())
        if coeffs is None:
            raise NoSolution("an inner map of the base algebra escaped Der")
        for local, c in enumerate(coeffs):
            vec[start + local] = c
        return tuple(vec)

    ad_image_rows = [coords_in_A(ad(a, a.basis_vector(i))) for i in range(a.dim)]
    ad_image = Subspace.from_rows(A.dim, ad_image_rows, A.conductor)

    preserves = True
    witness_failures = []
    witnesses = []
    for idx, D in enumerate(nder_A.basis_maps()):
        for row in ad_image.basis.entries:
            if not ad_image.contains_vector(D.apply(row)):
                preserves = False
        # witness d with D(ad x) = ad(d(x)) on all basis x
        d_grid = [[a.zero_scalar()] * a.dim for _ in range(a.dim)]
        ok = True
        for j in range(a.dim):
            image_coords = D.apply(coords_in_A(ad(a, a.basis_vector(j))))
            target = GradedMap.zero(a, a.group.zero())
            for p, c in enumerate(image_coords):
                if c:
                    target = target + der_maps[p].scale(c)
            try:
                y = _solve_ad_preimage(a, target)
            except NoSolution:
                ok = False
                break
            for k in range(a.dim):
                d_grid[k][j] = y[k]
        if not ok:
            witness_failures.append(idx)
            witnesses.append(None)
            continue
        witnesses.append([[str(c) for c in row] for row in d_grid])
        # the witness must itself be a derivation of the base algebra
        try:
            d_map = GradedMap(a, D.degree, d_grid)
        except ValueError:
            witness_failures.append(idx)
            continue
        if not der.contains_map(d_map):
            witness_failures.append(idx)

    return SecondStatementReport(
        n=n,
        derivation_algebra_dim=A.dim,
        block_dims=blocks,
        equal=equal,
        inner_total=inner_A.total_dim,
        nder_total=nder_A.total_dim,
        base_der_equals_nder=base_match,
        preserves_inner_image=preserves,
        witness_failures=witness_failures,
        witnesses=witnesses,
    )


@dataclass
class ClosureReport:
    """Random bracket-closure trials on homogeneous n-derivation combinations."""

    n: int
    trials: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {"n": self.n, "trials": self.trials, "failures": self.failures}


def verify_closure(a: ColorAlgebra, n: int, trials: int, *, seed: int = 0,
                   max_n: int = DEFAULT_MAX_N) -> ClosureReport:
    """Bracket random pairs of homogeneous nDer elements; results must stay inside."""
    nder = n_derivation_space(a, n, max_n=max_n)
    rng = random.Random(seed)
    populated = [g for g, s in nder.blocks.items() if s.dim > 0]
    report = ClosureReport(n=n, trials=trials)
    if not populated:
        return report
    m = a.conductor

    def random_member():
        gamma = rng.choice(populated)
        sub = nder.block(gamma)
        vec = [CycloScalar.zero(m)] * len(block_coordinates(a, gamma))
        for row in sub.basis.entries:
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        return GradedMap.from_block_vector(a, gamma, vec)

    for trial in range(trials):
        d1, d2 = random_member(), random_member()
        if not nder.contains_map(map_bracket(d1, d2)):
            report.failures.append(trial)
    return report


@dataclass
class InnerIdealReport:
    """Whether [nDer, ad(L)] lands back in ad(L)."""

    n: int
    failures: list = field(default_factory=list)  # (basis map index, basis vector index)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {"n": self.n, "failures": [list(f) for f in self.failures]}


def verify_inner_ideal(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> InnerIdealReport:
    if not a.is_perfect():
        raise PreconditionFailed("inner-ideal check needs a perfect algebra")
    nder = n_derivation_space(a, n, max_n=max_n)
    inner = inner_derivation_space(a)
    report = InnerIdealReport(n=n)
    for p, D in enumerate(nder.basis_maps()):
        for i in range(a.dim):
            br = map_bracket(D, ad(a, a.basis_vector(i)))
            if not inner.contains_map(br):
                report.failures.append((p, i))
    return report


@dataclass
class CentralizerReport:
    """Dimension of the solution space of [D, ad e_j] = 0 inside each nDer block."""

    n: int
    block_dims: list = field(default_factory=list)  # (degree residues, dim)
    total_dim: int = 0

    @property
    def passed(self) -> bool:
        return self.total_dim == 0

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "blocks": [{"degree": deg, "dim": dim} for deg, dim in self.block_dims],
            "total_dim": self.total_dim,
        }


def verify_centralizer_trivial(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> CentralizerReport:
    if not a.is_perfect():
        raise PreconditionFailed("centralizer check needs a perfect algebra")
    nder = n_derivation_space(a, n, max_n=max_n)
    report = CentralizerReport(n=n)
    total = 0
    for gamma, sub in nder.blocks.items():
        r = sub.dim
        if r == 0:
            report.block_dims.append((_degree_key(gamma), 0))
            continue
        basis = [
            GradedMap.from_block_vector(a, gamma, row) for row in sub.basis.entries
        ]
        rows = []
        for j in range(a.dim):
            brackets = [map_bracket(B, ad(a, a.basis_vector(j))) for B in basis]
            for k in range(a.dim):
                for l in range(a.dim):
                    rows.append([B.matrix[k][l] for B in brackets])
        dim = MatrixExact(a.conductor, rows, cols=r).kernel().dim
        report.block_dims.append((_degree_key(gamma), dim))
        total += dim
    report.total_dim = total
    return report


@dataclass
class DeltaMembershipReport:
    """Whether delta of every nDer block basis lies in the (n-1)-derivation space."""

    n: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {"n": self.n, "failures": self.failures}


def verify_delta_membership(a: ColorAlgebra, n: int, *, max_n: int = DEFAULT_MAX_N) -> DeltaMembershipReport:
    if n < 3:
        raise BadArity(f"delta membership needs n >= 3, got {n}")
    if not a.is_perfect() or a.center().dim != 0:
        raise PreconditionFailed("delta membership needs a perfect centerless algebra")
    nder = n_derivation_space(a, n, max_n=max_n)
    report = DeltaMembershipReport(n=n)
    for idx, D in enumerate(nder.basis_maps()):
        if not is_n_derivation(a, delta(a, D, n), n - 1):
            report.failures.append(idx)
    return report


@dataclass
class AdCompatReport:
    """Whether [D, ad x] = ad(D(x)) for every derivation basis map and basis x."""

    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {"failures": [list(f) for f in self.failures]}


def verify_ad_compat(a: ColorAlgebra, *, max_n: int = DEFAULT_MAX_N) -> AdCompatReport:
    der = n_derivation_space(a, 2, max_n=max_n)
    report = AdCompatReport()
    for p, D in enumerate(der.basis_maps()):
        for i in range(a.dim):
            lhs = map_bracket(D, ad(a, a.basis_vector(i)))
            rhs = ad(a, D.apply(a.basis_vector(i)))
            if lhs != rhs:
                report.failures.append((p, i))
    return report
