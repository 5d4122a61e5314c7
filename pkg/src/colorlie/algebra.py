"""Lie color algebras given by structure constants on a homogeneous basis.

An algebra is a grading group, a bicharacter on it, a degree for each of
the d basis vectors, and the full table c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k. Constants are stored for ALL ordered
pairs; antisymmetry is something we validate, not assume, so bad input
files surface instead of being silently symmetrized.

Vectors are plain tuples of CycloScalar of length d. A vector is
homogeneous when its nonzero coordinates all sit at basis indices of one
degree; the zero vector counts as homogeneous of degree 0 by convention.
Degree-dependent operations reject mixed vectors with NonHomogeneous;
``bracket`` itself is bilinear and accepts anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, NonHomogeneous, TooFewArguments, ValidationError
from .grading import Bicharacter, GradingGroup, GroupElement
from .linalg import MatrixExact, Subspace
from .scalars import CycloScalar, parse_scalar


def _coerce_scalar(value, conductor: int) -> CycloScalar:
    if isinstance(value, CycloScalar):
        return value.lift(conductor) if value.conductor != conductor else value
    if isinstance(value, str):
        return parse_scalar(value, conductor)
    return CycloScalar.from_rational(Fraction(value), conductor)


@dataclass
class AxiomReport:
    """Exhaustive axiom check over basis indices; violations listed, never raised."""

    grading: list = field(default_factory=list)      # (i, j, k) with a misplaced constant
    antisymmetry: list = field(default_factory=list)  # (i, j) pairs
    jacobi: list = field(default_factory=list)        # (i, j, k) triples

    @property
    def ok(self) -> bool:
        return not (self.grading or self.antisymmetry or self.jacobi)

    def messages(self) -> list[str]:
        out = []
        for i, j, k in self.grading:
            out.append(f"grading support fails at c[{i}][{j}][{k}]")
        for i, j in self.antisymmetry:
            out.append(f"antisymmetry fails for basis pair ({i}, {j})")
        for i, j, k in self.jacobi:
            out.append(f"Jacobi identity fails for basis triple ({i}, {j}, {k})")
        return out


class ColorAlgebra:
    """Finite-dimensional Lie color algebra held by structure constants.

    Immutable after construction. Names are presentation metadata (used by
    the file format and reports) and do not take part in equality.
    """

    __slots__ = ("group", "bichar", "dim", "degrees", "constants", "names", "_cache")

    def __init__(self, group: GradingGroup, bichar: Bicharacter, degrees, constants,
                 names=None):
        if bichar.group != group:
            raise ValueError("bicharacter is defined on a different group")
        degrees = tuple(degrees)
        d = len(degrees)
        for g in degrees:
            if not isinstance(g, GroupElement) or g.group != group:
                raise ValueError("basis degrees must be elements of the grading group")
        m = group.exponent
        constants = tuple(
            tuple(tuple(_coerce_scalar(c, m) for c in row) for row in plane)
            for plane in constants
        )
        if len(constants) != d or any(
            len(plane) != d or any(len(row) != d for row in plane)
            for plane in constants
        ):
            raise DimensionMismatch(f"structure constants must be {d}x{d}x{d}")
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(d))
        else:
            names = tuple(names)
            if len(names) != d or len(set(names)) != d:
                raise ValueError("basis names must be distinct and match the dimension")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "bichar", bichar)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "constants", constants)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("ColorAlgebra is immutable")

    @property
    def conductor(self) -> int:
        return self.group.exponent

    # -- scalars and vectors ----------------------------------------------

    def scalar(self, value) -> CycloScalar:
        return _coerce_scalar(value, self.conductor)

    def zero_scalar(self) -> CycloScalar:
        return CycloScalar.zero(self.conductor)

    def one_scalar(self) -> CycloScalar:
        return CycloScalar.one(self.conductor)

    def zero_vector(self) -> tuple:
        return (CycloScalar.zero(self.conductor),) * self.dim

    def basis_vector(self, i: int) -> tuple:
        z = CycloScalar.zero(self.conductor)
        o = CycloScalar.one(self.conductor)
        return tuple(o if k == i else z for k in range(self.dim))

    def vector(self, coeffs) -> tuple:
        v = tuple(self.scalar(c) for c in coeffs)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector length {len(v)} != dim {self.dim}")
        return v

    def degree_of(self, v) -> GroupElement:
        """Degree of a homogeneous vector; zero vector counts as degree 0."""
        deg = None
        for i, c in enumerate(v):
            if c:
                if deg is None:
                    deg = self.degrees[i]
                elif deg != self.degrees[i]:
                    raise NonHomogeneous(
                        f"vector mixes degrees {deg} and {self.degrees[i]}"
                    )
        return deg if deg is not None else self.group.zero()

    def is_homogeneous(self, v) -> bool:
        try:
            self.degree_of(v)
            return True
        except NonHomogeneous:
            return False

    # -- brackets -----------------------------------------------------------

    def _nonzero_constants(self):
        # nz[i][j] = tuple of (k, c[i][j][k]) with c nonzero
        nz = self._cache.get("nz")
        if nz is None:
            nz = tuple(
                tuple(
                    tuple((k, c) for k, c in enumerate(row) if c)
                    for row in plane
                )
                for plane in self.constants
            )
            self._cache["nz"] = nz
        return nz

    def bracket_of_basis(self, i: int, j: int) -> tuple:
        """[e_i, e_j] as a coefficient vector."""
        return tuple(self.constants[i][j])

    def bracket(self, u, v) -> tuple:
        """Bilinear extension of the structure constants."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("bracket arguments must have length dim")
        out = [CycloScalar.zero(self.conductor)] * self.dim
        nz = self._nonzero_constants()
        for i, ui in enumerate(u):
            if not ui:
                continue
            nzi = nz[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                uv = ui * vj
                for k, c in nzi[j]:
                    out[k] = out[k] + uv * c
        return tuple(out)

    def left_normed_bracket(self, xs) -> tuple:
        """[[...[[x1,x2],x3],...],xn], folding from the left."""
        xs = list(xs)
        if len(xs) < 2:
            raise TooFewArguments(f"left-normed bracket needs >= 2 arguments, got {len(xs)}")
        acc = self.bracket(xs[0], xs[1])
        for x in xs[2:]:
            acc = self.bracket(acc, x)
        return acc

    # -- axiom checking -------------------------------------------------------

    def check_axioms(self) -> AxiomReport:
        """Exhaustively verify grading support, eps-antisymmetry, eps-Jacobi.

        Every violating index tuple is reported, in index order.
        """
        report = AxiomReport()
        d = self.dim
        eps = self.bichar.eps
        for i in range(d):
            for j in range(d):
                target = self.degrees[i] + self.degrees[j]
                for k in range(d):
                    if self.constants[i][j][k] and self.degrees[k] != target:
                        report.grading.append((i, j, k))
        for i in range(d):
            for j in range(d):
                e = eps(self.degrees[i], self.degrees[j])
                lhs = self.constants[i][j]
                rhs = self.constants[j][i]
                if any(a + e * b for a, b in zip(lhs, rhs)):
                    report.antisymmetry.append((i, j))
        zero = self.zero_vector()
        basis = [self.basis_vector(i) for i in range(d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    x, y, z = basis[i], basis[j], basis[k]
                    t1 = eps(self.degrees[k], self.degrees[i])
                    t2 = eps(self.degrees[i], self.degrees[j])
                    t3 = eps(self.degrees[j], self.degrees[k])
                    total = tuple(
                        t1 * a + t2 * b + t3 * c
                        for a, b, c in zip(
                            self.bracket(x, self.bracket(y, z)),
                            self.bracket(y, self.bracket(z, x)),
                            self.bracket(z, self.bracket(x, y)),
                        )
                    )
                    if total != zero:
                        report.jacobi.append((i, j, k))
        return report

    # -- classical subspaces ---------------------------------------------------

    def derived_subalgebra(self) -> Subspace:
        """Span of all brackets of basis pairs."""
        cached = self._cache.get("derived")
        if cached is None:
            rows = [
                self.bracket_of_basis(i, j)
                for i in range(self.dim)
                for j in range(self.dim)
            ]
            cached = Subspace.from_rows(self.dim, rows, self.conductor)
            self._cache["derived"] = cached
        return cached

    def is_perfect(self) -> bool:
        return self.derived_subalgebra().dim == self.dim

    def center(self) -> Subspace:
        """Kernel of v -> ([v, e_j])_j."""
        cached = self._cache.get("center")
        if cached is None:
            cached = self.centralizer([self.basis_vector(j) for j in range(self.dim)])
            self._cache["center"] = cached
        return cached

    def centralizer(self, vectors) -> Subspace:
        """Kernel of v -> ([v, s])_{s in vectors}; empty set gives the full space."""
        rows = []
        for s in vectors:
            if len(s) != self.dim:
                raise DimensionMismatch("centralizer argument has wrong length")
            # coefficient of v_i in [v, s]_k is sum_j s_j c[i][j][k]
            for k in range(self.dim):
                row = []
                for i in range(self.dim):
                    acc = CycloScalar.zero(self.conductor)
                    for j, sj in enumerate(s):
                        if sj:
                            c = self.constants[i][j][k]
                            if c:
                                acc = acc + sj * c
                    row.append(acc)
                rows.append(row)
        return MatrixExact(self.conductor, rows, cols=self.dim).kernel()

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ColorAlgebra):
            return NotImplemented
        return (
            self.group == other.group
            and self.bichar == other.bichar
            and self.degrees == other.degrees
            and self.constants == other.constants
        )

    def __repr__(self):
        return (
            f"ColorAlgebra(dim={self.dim}, group={list(self.group.orders)}, "
            f"names={list(self.names)})"
        )


def check_color_axioms(a: ColorAlgebra) -> AxiomReport:
    return a.check_axioms()


def structure_constants_from_table(group, bichar, degrees, table, dim):
    """Build the full constants grid from a sparse {(i, j): {k: scalar}} table.

    Only pairs with i < j or i = j need be listed; the complement is filled
    in by eps-antisymmetry. When both orders of a pair are given explicitly,
    the redundant entry is cross-checked and a ValidationError raised on
    disagreement.
    """
    m = group.exponent
    zero = CycloScalar.zero(m)
    grid = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for (i, j), result in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValidationError(f"bracket indices ({i}, {j}) out of range", (i, j))
        if (i, j) in seen:
            raise ValidationError(f"bracket ({i}, {j}) listed twice", (i, j))
        seen.add((i, j))
        for k, c in result.items():
            grid[i][j][k] = _coerce_scalar(c, m)
    for (i, j) in list(seen):
        if (j, i) in seen:
            if i < j:
                e = bichar.eps(degrees[j], degrees[i])
                for k in range(dim):
                    if grid[j][i][k] != -(e * grid[i][j][k]):
                        raise ValidationError(
                            f"brackets ({i},{j}) and ({j},{i}) violate antisymmetry at k={k}",
                            (j, i, k),
                        )
        elif i != j:
            e = bichar.eps(degrees[j], degrees[i])
            for k in range(dim):
                if grid[i][j][k]:
                    grid[j][i][k] = -(e * grid[i][j][k])
    return tuple(tuple(tuple(row) for row in plane) for plane in grid)
