"""Restriction of cohomology to a codimension-c linear section via Koszul data.

For a bundle E on Gr(k,n) and a generic complete-intersection linear
section of codimension c, the Koszul resolution

    0 -> O(-c) -> ... -> O(-1)^{c choose 1} -> O -> O_section -> 0

tensored with E computes H^*(section, E) by pure bookkeeping on the
hypercohomology page: the term at (p, q) is binom(c,p) * h^q(Gr, E(-p))
and lands in restricted degree q - p.  Page terms in the same degree can
never hit each other with a differential, so when no differential between
nonzero terms is possible at all the table is forced (status ``EXACT``).
Isolated two-term first differentials (adjacent p, equal q) are resolved
by maximal-rank cancellation only when explicitly asked for (status
``GENERIC_ASSUMED``); any other pattern is honestly reported as
``NEEDS_MAPS``, since dimensions alone cannot decide it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Optional

from .bundles import (
    CohomologyEntry,
    CohomologyTable,
    EquivariantBundle,
    cohomology,
    twist,
)


class RestrictionStatus(enum.Enum):
    EXACT = "exact"
    GENERIC_ASSUMED = "generic-assumed"
    NEEDS_MAPS = "needs-maps"


@dataclass(frozen=True)
class KoszulPage:
    """Nonzero first-page terms (p, q) -> binom(c,p) * h^q(Gr, E(-p))."""

    codim: int
    terms: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def euler_characteristic(self) -> int:
        """Alternating sum over restricted degree q-p, an exact identity."""
        return sum((-1) ** (q - p) * d for (p, q), d in self.terms)


@dataclass(frozen=True)
class RestrictionResult:
    status: RestrictionStatus
    page: KoszulPage
    table: Optional[CohomologyTable] = None

    @property
    def resolved(self) -> bool:
        return self.status is not RestrictionStatus.NEEDS_MAPS


def koszul_page(b: EquivariantBundle, c: int) -> KoszulPage:
    """First page for restricting ``b`` across a codimension-c linear section."""
    if not 1 <= c <= b.dim_space:
        raise ValueError(f"codimension {c} out of range 1..{b.dim_space}")
    terms = []
    for p in range(c + 1):
        mult = comb(c, p)
        for q, entry in cohomology(twist(b, -p)).entries:
            terms.append(((p, q), mult * entry.dim))
    return KoszulPage(codim=c, terms=tuple(terms))


def _differential_exists(src: tuple[int, int], dst: tuple[int, int]) -> bool:
    # d_r moves (p, q) -> (p - r, q - r + 1); any r >= 1 raises q - p by one.
    r = src[0] - dst[0]
    return r >= 1 and src[1] - dst[1] == r - 1


def restrict_cohomology(
    b: EquivariantBundle, c: int, assume_generic: bool = False
) -> RestrictionResult:
    """Cohomology of ``b`` restricted to a generic codimension-c linear section.

    Returns the page always; the table only when the collapse is forced
    (EXACT) or when ``assume_generic`` resolves isolated two-term first
    differentials at maximal rank (GENERIC_ASSUMED).
    """
    page = koszul_page(b, c)
    terms = [[p, q, d] for (p, q), d in page.terms]
    dim_section = b.dim_space - c

    pairs = [
        (i, j)
        for i in range(len(terms))
        for j in range(len(terms))
        if i != j and _differential_exists(tuple(terms[i][:2]), tuple(terms[j][:2]))
    ]

    if pairs:
        if not assume_generic:
            return RestrictionResult(status=RestrictionStatus.NEEDS_MAPS, page=page)
        single_d1 = all(terms[i][0] - terms[j][0] == 1 for i, j in pairs)
        touched = [k for pair in pairs for k in pair]
        disjoint = len(touched) == len(set(touched))
        if not (single_d1 and disjoint):
            return RestrictionResult(status=RestrictionStatus.NEEDS_MAPS, page=page)
        for i, j in pairs:
            cancel = min(terms[i][2], terms[j][2])
            terms[i][2] -= cancel
            terms[j][2] -= cancel
        status = RestrictionStatus.GENERIC_ASSUMED
    else:
        status = RestrictionStatus.EXACT

    dims: dict[int, int] = {}
    for p, q, d in terms:
        if d == 0:
            continue
        deg = q - p
        if not 0 <= deg <= dim_section:
            raise ArithmeticError(
                f"surviving page term at (p={p}, q={q}) lands outside degrees "
                f"0..{dim_section}; the page cannot come from an exact Koszul complex"
            )
        dims[deg] = dims.get(deg, 0) + d
    table = CohomologyTable.from_dict({i: CohomologyEntry(dim=d) for i, d in dims.items()})
    return RestrictionResult(status=status, page=page, table=table)


class UlrichStatus(enum.Enum):
    ULRICH = "ulrich"
    NOT_ULRICH = "not-ulrich"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class UlrichVerdict:
    status: UlrichStatus
    witness: Optional[tuple[int, int]] = None  # first failing (twist j, degree i)

    @property
    def is_ulrich(self) -> Optional[bool]:
        if self.status is UlrichStatus.INDETERMINATE:
            return None
        return self.status is UlrichStatus.ULRICH


def ulrich_check(
    b: EquivariantBundle, c: int, assume_generic: bool = False
) -> UlrichVerdict:
    """Test H^*(X, E(-j)) = 0 for j = 1..dim X, X the codim-c section (c=0: ambient).

    A definite nonzero group anywhere defeats the bundle regardless of any
    unresolved twist, so failures win over indeterminacy; the witness is the
    first failing (j, i) in lexicographic order.
    """
    if not 0 <= c <= 3:
        raise ValueError(f"supported codimensions are 0..3, got {c}")
    d = b.dim_space - c
    indeterminate = False
    for j in range(1, d + 1):
        tw = twist(b, -j)
        if c == 0:
            table = cohomology(tw)
        else:
            res = restrict_cohomology(tw, c, assume_generic=assume_generic)
            if not res.resolved:
                indeterminate = True
                continue
            assert res.table is not None
            table = res.table
        if not table.is_zero():
            i = min(deg for deg, _ in table.entries)
            return UlrichVerdict(status=UlrichStatus.NOT_ULRICH, witness=(j, i))
    if indeterminate:
        return UlrichVerdict(status=UlrichStatus.INDETERMINATE)
    return UlrichVerdict(status=UlrichStatus.ULRICH)
