"""Structure-constant algebras: brackets, adjoint maps, invariant subspaces."""

import random
from fractions import Fraction

from ualie.constructions import build_catalog
from ualie.liecore import StructureConstantAlgebra
from ualie.linalg import vec_add, vec_scale, vector_is_zero, vectors_equal
from ualie.scalars import QQ, PrimeField


def sl2():
    return build_catalog("sl", QQ, n=2)


def rand_vec(rng, F, n, span=4):
    if F.kind == "Q":
        return [Fraction(rng.randint(-span, span)) for _ in range(n)]
    return [F.from_int(rng.randrange(F.order)) for _ in range(n)]


def test_sl2_structure_constants():
    g = sl2()
    assert g.basis_names == ["e", "h", "f"]
    e = [Fraction(1), Fraction(0), Fraction(0)]
    h = [Fraction(0), Fraction(1), Fraction(0)]
    f = [Fraction(0), Fraction(0), Fraction(1)]
    # [e,h] = -2e, [e,f] = h, [h,f] = -2f
    assert g.bracket(e, h) == [Fraction(-2), Fraction(0), Fraction(0)]
    assert g.bracket(e, f) == h
    assert g.bracket(h, f) == [Fraction(0), Fraction(0), Fraction(-2)]
    # antisymmetry on the same pairs
    assert g.bracket(h, e) == [Fraction(2), Fraction(0), Fraction(0)]


def test_bracket_bilinearity_random():
    rng = random.Random(314)
    for g in (sl2(), build_catalog("gl", PrimeField(5), n=2)):
        F = g.field
        for _ in range(50):
            x = rand_vec(rng, F, g.dim)
            y = rand_vec(rng, F, g.dim)
            z = rand_vec(rng, F, g.dim)
            c = F.from_int(rng.randint(-3, 3))
            lhs = g.bracket(vec_add(F, x, vec_scale(F, c, y)), z)
            rhs = vec_add(F, g.bracket(x, z), vec_scale(F, c, g.bracket(y, z)))
            assert vectors_equal(F, lhs, rhs)
            assert vector_is_zero(F, g.bracket(x, x))


def test_jacobi_identity_random():
    rng = random.Random(2718)
    g = build_catalog("example_5_7", QQ)
    F = g.field
    for _ in range(40):
        x, y, z = (rand_vec(rng, F, g.dim, span=3) for _ in range(3))
        total = g.bracket(x, g.bracket(y, z))
        total = vec_add(F, total, g.bracket(y, g.bracket(z, x)))
        total = vec_add(F, total, g.bracket(z, g.bracket(x, y)))
        assert vector_is_zero(F, total)


def test_ad_matrix_matches_bracket():
    rng = random.Random(11)
    g = sl2()
    for _ in range(30):
        x = rand_vec(rng, QQ, 3)
        y = rand_vec(rng, QQ, 3)
        assert vectors_equal(QQ, g.ad_matrix(x).mat_vec(y), g.bracket(x, y))


def test_center_and_derived_dims():
    cases = [
        ("gl", {"n": 2}, 1, 3),
        ("gl", {"n": 3}, 1, 8),
        ("sl", {"n": 2}, 0, 3),
        ("heisenberg", {"k": 1}, 1, 1),
        ("heisenberg", {"k": 2}, 1, 1),
        ("t", {"n": 3}, 1, 3),
        ("n", {"n": 3}, 1, 1),
        ("s2", {}, 0, 1),
        ("abelian", {"d": 4}, 4, 0),
        ("example_4_6", {}, 1, 6),
        ("example_5_7", {}, 0, 4),
    ]
    for name, kw, center_dim, derived_dim in cases:
        g = build_catalog(name, QQ, **kw)
        assert g.center().dim == center_dim, g.name
        assert g.derived_subalgebra().dim == derived_dim, g.name


def test_centralizer_of_center_is_everything():
    g = build_catalog("heisenberg", QQ, k=2)
    z = g.center()
    assert z.dim == 1
    assert g.centralizer(z.basis.row(0)).dim == g.dim


def test_mutual_centralizer_sl2():
    g = sl2()
    e = [Fraction(1), Fraction(0), Fraction(0)]
    f = [Fraction(0), Fraction(0), Fraction(1)]
    # C(e) = span{e}, C(f) = span{f}: they intersect trivially
    assert g.centralizer(e).dim == 1
    assert g.mutual_centralizer_dim(e, f) == 0


def test_series_and_flags():
    t3 = build_catalog("t", QQ, n=3)
    assert t3.is_solvable() and not t3.is_nilpotent()
    assert t3.series("derived").dims == (6, 3, 1, 0)
    assert t3.series("derived").reaches_zero
    assert not t3.series("lower_central").reaches_zero

    n3 = build_catalog("n", QQ, n=3)
    assert n3.is_nilpotent()
    assert n3.series("lower_central").reaches_zero

    assert not sl2().is_solvable()

    e57 = build_catalog("example_5_7", QQ)
    assert e57.is_solvable() and not e57.is_nilpotent()


def test_validate_accepts_catalog_rejects_broken():
    assert build_catalog("gl", QQ, n=3).validate().ok

    broken = StructureConstantAlgebra(
        "broken",
        QQ,
        3,
        None,
        {
            (0, 1): {2: Fraction(1)},
            (0, 2): {2: Fraction(1)},
            (1, 2): {0: Fraction(1)},
        },
    )
    rep = broken.validate()
    assert not rep.ok
    i, j, k, defect = rep.first_failure()
    assert (i, j, k) == (0, 1, 2)
    assert not vector_is_zero(QQ, defect)


def test_json_round_trip_preserves_structure():
    rng = random.Random(6)
    for g in (sl2(), build_catalog("heisenberg", PrimeField(3), k=1)):
        g2 = StructureConstantAlgebra.from_json_dict(g.to_json_dict())
        assert g2.dim == g.dim and g2.name == g.name
        assert g2.field.kind == g.field.kind
        F = g.field
        for _ in range(20):
            x = rand_vec(rng, F, g.dim)
            y = rand_vec(rng, F, g.dim)
            assert vectors_equal(F, g.bracket(x, y), g2.bracket(x, y))
