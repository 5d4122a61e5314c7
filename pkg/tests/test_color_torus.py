"""End-to-end coverage with genuine cube-root scalars.

The color commutator of the Z3 x Z3 group algebra, [u_a, u_b] =
(1 - eps(a, b)) u_{a+b}, is a 9-dimensional Lie color algebra whose
structure constants live in Q(zeta_3) properly. Hand-proved facts frozen
below: u_0 is the whole center (for any other element some basis bracket
survives, and the bracket components land at distinct degrees, so they
must vanish one by one), and the derived subalgebra is everything except
the u_0 line.
"""

import random
from fractions import Fraction

import pytest

from colorlie.algebra import ColorAlgebra
from colorlie.derivations import (
    GradedMap,
    block_coordinates,
    inner_derivation_space,
    is_n_derivation,
    n_derivation_space,
)
from colorlie.fileio import parse_algebra, serialize_algebra
from colorlie.grading import Bicharacter, GradingGroup
from colorlie.scalars import CycloScalar


@pytest.fixture(scope="module")
def torus():
    group = GradingGroup([3, 3])
    bichar = Bicharacter(group, [[0, 1], [2, 0]])
    assert bichar.validate().ok
    elements = group.elements()
    index = {g.residues: i for i, g in enumerate(elements)}
    one = CycloScalar.one(3)
    d = len(elements)
    zero = CycloScalar.zero(3)
    constants = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            coeff = one - bichar.eps(a, b)
            if coeff:
                constants[i][j][index[(a + b).residues]] = coeff
    names = tuple(f"u{a.residues[0]}{a.residues[1]}" for a in elements)
    return ColorAlgebra(group, bichar, elements, constants, names=names)


def test_torus_passes_axioms(torus):
    assert torus.check_axioms().ok


def test_torus_constants_are_honestly_cyclotomic(torus):
    # [u_{10}, u_{01}] = (1 - omega) u_{11}, with omega a primitive cube root
    i = torus.names.index("u10")
    j = torus.names.index("u01")
    k = torus.names.index("u11")
    c = torus.constants[i][j][k]
    assert not c.is_rational()
    assert c == CycloScalar.one(3) - CycloScalar.root(3, 1)


def test_torus_center_and_derived(torus):
    center = torus.center()
    assert center.dim == 1
    assert center.contains_vector(torus.basis_vector(torus.names.index("u00")))
    assert torus.derived_subalgebra().dim == 8
    assert not torus.is_perfect()


def test_torus_inner_dimension(torus):
    assert inner_derivation_space(torus).total_dim == 8


def test_torus_oracle_equivalence_n2(torus):
    space = n_derivation_space(torus, 2)
    for D in space.basis_maps():
        assert is_n_derivation(torus, D, 2)
    rng = random.Random(271)
    for _ in range(10):
        gamma = rng.choice(torus.group.elements())
        coords = block_coordinates(torus, gamma)
        vec = [
            torus.scalar(Fraction(rng.randint(-2, 2)))
            * CycloScalar.root(3, rng.randrange(3))
            for _ in coords
        ]
        D = GradedMap.from_block_vector(torus, gamma, vec)
        assert space.contains_map(D) == is_n_derivation(torus, D, 2)


def test_torus_file_round_trip(torus, tmp_path):
    text = serialize_algebra(torus)
    assert "z" in text  # cyclotomic coefficients really serialize as polynomials
    again = parse_algebra(text)
    assert again == torus
    assert serialize_algebra(again) == text


def test_torus_cli_check(torus, tmp_path):
    from colorlie.cli import run

    path = tmp_path / "torus.json"
    path.write_text(serialize_algebra(torus))
    code, out = run(["check", str(path), "--json"])
    assert code == 0
