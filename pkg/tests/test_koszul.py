import random
from math import comb

import pytest

from fanov5.bundles import catalog, cohomology, twist
from fanov5.koszul import (
    RestrictionStatus,
    UlrichStatus,
    koszul_page,
    restrict_cohomology,
    ulrich_check,
)

# the eight forced restriction tables: twists -2..1 of U and Qstar
FORCED_TABLES = [
    ("U", 1, {0: 5}),
    ("Qstar", 1, {0: 10}),
    ("U", 0, {}),
    ("U", -1, {}),
    ("Qstar", 0, {}),
    ("Qstar", -1, {}),
    ("U", -2, {3: 5}),
    ("Qstar", -2, {3: 5}),
]


def ambient_euler(bundle, c: int) -> int:
    # independent route to the Euler characteristic of the restriction
    return sum(
        (-1) ** p * comb(c, p) * cohomology(twist(bundle, -p)).euler_characteristic()
        for p in range(c + 1)
    )


class TestKoszulPage:
    def test_u_twisted_up(self):
        page = koszul_page(twist(catalog("U"), 1), 3)
        assert page.as_dict() == {(0, 0): 5}

    def test_u_twisted_down(self):
        page = koszul_page(twist(catalog("U"), -2), 3)
        assert page.as_dict() == {(3, 6): 5}

    def test_structure_sheaf(self):
        assert koszul_page(catalog("O"), 3).as_dict() == {(0, 0): 1}

    def test_binomial_multiplicities(self):
        # O(-3) restricted: twists O(-3..-6); O(-5) appears with binom(3,2)=3
        page = koszul_page(twist(catalog("O"), -3), 3)
        assert page.as_dict() == {(2, 6): 3, (3, 6): 10}

    def test_codim_range(self):
        with pytest.raises(ValueError):
            koszul_page(catalog("O"), 0)
        with pytest.raises(ValueError):
            koszul_page(catalog("O"), 7)


class TestRestriction:
    @pytest.mark.parametrize("name,j,expected", FORCED_TABLES)
    def test_forced_tables_exact(self, name, j, expected):
        res = restrict_cohomology(twist(catalog(name), j), 3)
        assert res.status is RestrictionStatus.EXACT
        assert res.table.dims() == expected

    def test_needs_maps_without_flag(self):
        res = restrict_cohomology(twist(catalog("O"), 1), 3)
        assert res.status is RestrictionStatus.NEEDS_MAPS
        assert res.table is None
        assert res.page.as_dict() == {(0, 0): 10, (1, 0): 3}

    def test_generic_cancellation(self):
        res = restrict_cohomology(twist(catalog("O"), 1), 3, assume_generic=True)
        assert res.status is RestrictionStatus.GENERIC_ASSUMED
        assert res.table.dims() == {0: 7}

    def test_generic_flag_leaves_exact_cases_alone(self):
        for name, j, expected in FORCED_TABLES:
            res = restrict_cohomology(twist(catalog(name), j), 3, assume_generic=True)
            assert res.status is RestrictionStatus.EXACT
            assert res.table.dims() == expected

    def test_euler_consistency(self):
        rng = random.Random(314)
        checked = 0
        for _ in range(200):
            name = rng.choice(("U", "Ustar", "Q", "Qstar", "O", "Sym2Ustar"))
            j = rng.randint(-6, 3)
            c = rng.randint(1, 3)
            b = twist(catalog(name), j)
            res = restrict_cohomology(b, c, assume_generic=True)
            if not res.resolved:
                continue
            checked += 1
            lhs = sum((-1) ** i * d for i, d in res.table.dims().items())
            assert lhs == ambient_euler(b, c) == res.page.euler_characteristic()
        assert checked > 100

    def test_degree_bounds(self):
        rng = random.Random(2024)
        for _ in range(100):
            name = rng.choice(("U", "Qstar", "O"))
            j = rng.randint(-6, 3)
            c = rng.randint(1, 3)
            res = restrict_cohomology(twist(catalog(name), j), c, assume_generic=True)
            if res.table is None:
                continue
            for deg, _ in res.table.entries:
                assert 0 <= deg <= 6 - c

    def test_hyperplane_section_table(self):
        # codimension 1: U(-2) picks up its group one degree lower than on Gr
        res = restrict_cohomology(twist(catalog("U"), -4), 1)
        assert res.status is RestrictionStatus.EXACT
        assert res.table.dims() == {5: 5}


class TestUlrichCheck:
    def test_sym2ustar_ambient(self):
        verdict = ulrich_check(catalog("Sym2Ustar"), 0)
        assert verdict.status is UlrichStatus.ULRICH
        assert verdict.witness is None

    def test_sym2ustar_all_sections(self):
        for c in (1, 2, 3):
            verdict = ulrich_check(catalog("Sym2Ustar"), c)
            assert verdict.status is UlrichStatus.ULRICH, c

    def test_structure_sheaf_fails(self):
        verdict = ulrich_check(catalog("O"), 3)
        assert verdict.status is UlrichStatus.NOT_ULRICH
        # O(-1) vanishes identically on the section; the first failure is
        # h^3 of O(-2), Serre-dual to the single section of O.
        assert verdict.witness == (2, 3)

    def test_u_fails_on_ambient(self):
        verdict = ulrich_check(catalog("U"), 0)
        assert verdict.status is UlrichStatus.NOT_ULRICH
        assert verdict.witness == (5, 6)  # h^6(U(-5)) = 5

    def test_o1_line_bundle_fails(self):
        verdict = ulrich_check(twist(catalog("O"), 1), 3)
        assert verdict.status is UlrichStatus.NOT_ULRICH
        assert verdict.witness == (1, 0)  # sections of O survive the twist

    def test_codim_cap(self):
        with pytest.raises(ValueError):
            ulrich_check(catalog("O"), 4)

    def test_indeterminate_when_every_gauntlet_step_is_ambiguous(self):
        # deep twists put two-term first differentials on every page
        verdict = ulrich_check(twist(catalog("O"), -9), 3)
        assert verdict.status is UlrichStatus.INDETERMINATE
        assert verdict.is_ulrich is None
        assert verdict.witness is None

    def test_definite_failure_beats_indeterminacy(self):
        # O(2): the j=1 page needs maps, but j=2 fails outright, which decides
        verdict = ulrich_check(twist(catalog("O"), 2), 3)
        assert verdict.status is UlrichStatus.NOT_ULRICH
        assert verdict.witness == (2, 0)

    def test_heredity(self):
        # a bundle passing on the ambient space passes every section check
        for name in ("U", "Ustar", "Q", "Qstar", "O", "Sym2Ustar", "wedge2Qstar"):
            for j in range(-3, 3):
                b = twist(catalog(name), j)
                if ulrich_check(b, 0).status is UlrichStatus.ULRICH:
                    for c in (1, 2, 3):
                        assert ulrich_check(b, c).status is UlrichStatus.ULRICH, (name, j, c)
