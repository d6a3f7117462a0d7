"""Codimension lower bounds and the singular-locus classification report.

All codimension outputs are lower bounds read off the subalgebra tables,
never exact values; callers should present them with a ">=".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import CharvarError
from .groups import GroupDescriptor, min_simple_rank


def _require_r(r: int) -> None:
    if r < 2:
        raise CharvarError("bounds require free-group rank r >= 2")


def codim_bad_lower(g: GroupDescriptor, r: int) -> int:
    """Lower bound on the complex codimension of the bad locus.

    2(r-1) times the minimum simple-factor rank.  For abelian g the bad
    locus is empty and the whole space's dimension r*dim(G) is returned.
    """
    _require_r(r)
    if g.is_abelian:
        return r * g.torus_rank
    return 2 * (r - 1) * min_simple_rank(g)


def codim_red_lower(g: GroupDescriptor, r: int) -> int:
    """Lower bound on the complex codimension of the reducible locus."""
    _require_r(r)
    return (r - 1) * g.semisimple_rank


def c_pasbon_lower(g: GroupDescriptor, r: int) -> int:
    """Lower bound on the real codimension of the non-good locus."""
    return 2 * min(codim_bad_lower(g, r), codim_red_lower(g, r))


def stable_range(g: GroupDescriptor, r: int) -> int:
    """Largest k for which the good-locus homotopy splitting is proven."""
    return c_pasbon_lower(g, r) - 2


@dataclass(frozen=True)
class CodimReport:
    group: GroupDescriptor
    r: int
    bad_lower: int
    red_lower: int
    c_pasbon_lower: int
    stable_k_max: int


def codim_report(g: GroupDescriptor, r: int) -> CodimReport:
    return CodimReport(
        group=g,
        r=r,
        bad_lower=codim_bad_lower(g, r),
        red_lower=codim_red_lower(g, r),
        c_pasbon_lower=c_pasbon_lower(g, r),
        stable_k_max=stable_range(g, r),
    )


class Verdict(enum.Enum):
    FULL_CLASSIFICATION = "FullClassification"
    UNDETERMINED_R2_RANK1 = "Undetermined_r2_rank1"
    RANK_ONE_FREE_GROUP = "RankOneFreeGroup"
    ABELIAN = "Abelian"


@dataclass(frozen=True)
class SingularLocusReport:
    verdict: Verdict
    statements: tuple[str, ...]


def classify_singular_locus(g: GroupDescriptor, r: int) -> SingularLocusReport:
    """Decide how much of the singular locus is classified for (g, r)."""
    if g.is_abelian:
        return SingularLocusReport(
            Verdict.ABELIAN,
            (
                "the character variety of an abelian group is a torus quotient",
                "every representation class is a smooth point",
            ),
        )
    if r <= 1:
        return SingularLocusReport(
            Verdict.RANK_ONE_FREE_GROUP,
            (
                "for a rank-one free group the variety is the adjoint quotient",
                "the smooth/singular dichotomy below does not apply",
            ),
        )
    if r >= 3 or min_simple_rank(g) >= 2:
        return SingularLocusReport(
            Verdict.FULL_CLASSIFICATION,
            (
                "the singular locus equals the union of the reducible and bad loci",
                "every reducible representation class is a topological singularity",
                "every bad representation class is a topological singularity",
            ),
        )
    return SingularLocusReport(
        Verdict.UNDETERMINED_R2_RANK1,
        (
            "r = 2 with a rank-one simple factor: the classification is open",
            "smooth reducible classes and singular irreducible classes both occur",
        ),
    )
