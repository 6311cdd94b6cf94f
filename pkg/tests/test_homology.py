import random

import pytest

from infsurf.homology import (
    AbelianGroup,
    BadParameter,
    FinitePresentation,
    H1_MAP_TORUS,
    H2_MAP_CLOSED,
    IntegerMatrix,
    OutOfTable,
    TORUS_POWER,
    UnknownPreset,
    WREATH_QUOTIENT,
    abelianize,
    full_twist_image,
    gcd_of_minors,
    h_lookup,
    k_of,
    poincare_series,
    preset,
    prop74_square,
    smith_normal_form,
    torus_power_coefficient,
)
from oracles import partitions_with_max_part


def _random_matrix(rng, rows, cols, lo=-9, hi=9):
    return IntegerMatrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def _check_snf(a: IntegerMatrix):
    res = smith_normal_form(a)
    m, n = a.rows, a.cols
    assert len(res.diagonal) == min(m, n)
    # unimodular transforms that actually diagonalize
    assert abs(res.left.determinant()) == 1
    assert abs(res.right.determinant()) == 1
    product = res.left @ a @ res.right
    for i in range(m):
        for j in range(n):
            want = res.diagonal[i] if i == j else 0
            assert product.entries[i][j] == want
    # non-negative divisibility chain
    prev = None
    for d in res.diagonal:
        assert d >= 0
        if prev not in (None, 0):
            assert d % prev == 0
        if prev == 0:
            assert d == 0
        prev = d
    return res


def test_snf_identity():
    res = smith_normal_form(IntegerMatrix.identity(3))
    assert res.diagonal == (1, 1, 1)


def test_snf_worked_example():
    res = _check_snf(IntegerMatrix.from_rows([[2, 4], [6, 8]]))
    # gcd of entries is 2 and |det| = 8, so the diagonal is forced
    assert res.diagonal == (2, 4)


def test_snf_zero_matrix():
    res = smith_normal_form(IntegerMatrix.zero(2, 3))
    assert res.diagonal == (0, 0)


def test_snf_properties_and_minor_gcds():
    rng = random.Random(101)
    for _ in range(200):
        a = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        res = _check_snf(a)
        running = 1
        for j, d in enumerate(res.diagonal, start=1):
            running *= d
            assert abs(running) == gcd_of_minors(a, j)


def test_snf_is_deterministic():
    a = IntegerMatrix.from_rows([[3, 1, -4], [2, 2, 8], [0, 5, 7]])
    assert smith_normal_form(a) == smith_normal_form(a)


# -- presentations ---------------------------------------------------------------


def test_presentation_validation():
    with pytest.raises(ValueError):
        FinitePresentation(2, ((1, 3),))
    with pytest.raises(ValueError):
        FinitePresentation(2, ((0,),))


def test_braid_presentation_shape():
    b3 = preset("braid", 3)
    assert b3.ngens == 2
    assert b3.relators == ((1, 2, 1, -2, -1, -2),)


@pytest.mark.parametrize(
    "name, n, expected",
    [
        ("sl2z", None, "Z/12"),
        ("spherical_braid", 4, "Z/6"),
        ("symmetric", 5, "Z/2"),
        ("braid", 5, "Z"),
        ("spherical_braid", 2, "Z/2"),
        ("symmetric", 2, "Z/2"),
    ],
)
def test_abelianization_golden_values(name, n, expected):
    assert str(abelianize(preset(name, n))) == expected


def test_spherical_braid_family():
    for n in range(2, 11):
        group = abelianize(preset("spherical_braid", n))
        assert group == AbelianGroup(0, (2 * n - 2,))


def test_preset_errors():
    with pytest.raises(UnknownPreset):
        preset("frieze", 3)
    with pytest.raises(BadParameter):
        preset("braid", 1)
    with pytest.raises(BadParameter):
        preset("sl2z", 4)


def test_abelianize_is_invariant_under_tietze_moves():
    rng = random.Random(103)
    bases = [preset("braid", 4), preset("spherical_braid", 5), preset("symmetric", 3), preset("sl2z")]
    for base in bases:
        want = abelianize(base)
        for _ in range(25):
            move = rng.randrange(2)
            if move == 0 and base.ngens:
                # add a new generator defined by a random word in the old ones
                word = tuple(rng.choice([1, -1]) * rng.randint(1, base.ngens) for _ in range(rng.randint(0, 4)))
                new = FinitePresentation(
                    base.ngens + 1,
                    base.relators + ((base.ngens + 1,) + tuple(-x for x in reversed(word)),),
                )
            else:
                # add a product of conjugates of existing relators
                parts = []
                for _ in range(rng.randint(1, 3)):
                    if not base.relators:
                        continue
                    rel = rng.choice(base.relators)
                    conj = tuple(rng.choice([1, -1]) * rng.randint(1, base.ngens) for _ in range(rng.randint(0, 2)))
                    parts.extend(conj + rel + tuple(-x for x in reversed(conj)))
                new = FinitePresentation(base.ngens, base.relators + (tuple(parts),))
            got = abelianize(new)
            if new.ngens == base.ngens:
                assert got == want
            else:
                # the new generator is killed into the old ones, same group
                assert got == want


def test_abelian_group_formatting():
    assert str(AbelianGroup(0, ())) == "0"
    assert str(AbelianGroup(2, (2, 4))) == "Z + Z + Z/2 + Z/4"
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 2))


# -- witness arithmetic ------------------------------------------------------------


@pytest.mark.parametrize("n, expected", [(4, 0), (5, 4), (2, 0)])
def test_full_twist_image_examples(n, expected):
    assert full_twist_image(n) == expected


def test_full_twist_parity_family():
    for n in range(2, 11):
        want = 0 if n % 2 == 0 else n - 1
        assert full_twist_image(n) == want


@pytest.mark.parametrize(
    "n, k, nonzero",
    [(4, 3, True), (3, 1, False), (7, 3, True), (2, 1, False), (5, 2, True)],
)
def test_square_reports(n, k, nonzero):
    report = prop74_square(n)
    assert report.k == k == k_of(n)
    assert report.element_nonzero is nonzero
    assert report.square_commutes
    assert report.full_twist_residue == 0


# -- lookup table -------------------------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [(2, "Z/2"), (3, "Z + Z/2"), (4, "Z"), (6, "Z")],
)
def test_h2_lookup(g, expected):
    assert str(h_lookup(H2_MAP_CLOSED, g)) == expected


def test_h1_lookup_and_table_bounds():
    assert str(h_lookup(H1_MAP_TORUS, 1)) == "Z/12"
    with pytest.raises(OutOfTable):
        h_lookup(H1_MAP_TORUS, 2)
    with pytest.raises(OutOfTable):
        h_lookup(H2_MAP_CLOSED, 1)


# -- series ---------------------------------------------------------------------------


def test_torus_power_series():
    assert poincare_series(TORUS_POWER, 1, 6) == (1, 0, 1, 0, 1, 0, 1)
    rng = random.Random(107)
    for _ in range(50):
        p = rng.randint(1, 5)
        deg = 2 * rng.randint(0, 12)
        coeffs = poincare_series(TORUS_POWER, p, deg)
        for d in range(deg + 1):
            assert coeffs[d] == torus_power_coefficient(p, d)


def test_wreath_series_counts_bounded_partitions():
    coeffs = poincare_series(WREATH_QUOTIENT, 3, 12)
    assert coeffs[12] == 7 == partitions_with_max_part(6, 3)
    for p in range(1, 7):
        coeffs = poincare_series(WREATH_QUOTIENT, p, 30)
        assert coeffs[0] == 1
        for d in range(0, 31):
            if d % 2:
                assert coeffs[d] == 0
            else:
                assert coeffs[d] == partitions_with_max_part(d // 2, p)
                assert coeffs[d] >= 1


def test_series_parameter_validation():
    with pytest.raises(BadParameter):
        poincare_series(WREATH_QUOTIENT, 0, 10)
    with pytest.raises(BadParameter):
        poincare_series(WREATH_QUOTIENT, 2, 7)
    with pytest.raises(BadParameter):
        poincare_series("other", 2, 8)
