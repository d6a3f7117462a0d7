"""Local models at quasi-irreducible classes.

Weight profiles of the circle action on the slice, the topological
singularity criterion, and the rational-homology support of the link of
the cone point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharvarError
from .rootsys import SimpleType, all_roots


@dataclass(frozen=True)
class WeightProfile:
    """Nonzero weight multiplicities d_n of the slice representation.

    d_0 is intentionally not computed: it depends on the particular
    representation, and the singularity criterion only reads n >= 1.
    """

    d: dict[int, int]
    simple_type: SimpleType
    node: int
    r: int

    def positive_weight_total(self) -> int:
        return sum(v for n, v in self.d.items() if n >= 1)


def parabolic_weights(t: SimpleType, i: int, r: int) -> WeightProfile:
    """d_n = (r-1) * number of roots with alpha_i-coefficient n, n != 0."""
    if not 1 <= i <= t.rank:
        raise CharvarError(f"node {i} out of range for {t}")
    if r < 2:
        raise CharvarError("weight profiles require free-group rank r >= 2")
    counts: dict[int, int] = {}
    for root in all_roots(t):
        n = root[i - 1]
        if n:
            counts[n] = counts.get(n, 0) + 1
    return WeightProfile({n: (r - 1) * c for n, c in counts.items()}, t, i, r)


def is_topologically_singular(w: WeightProfile) -> bool:
    """The cone point is a topological singularity iff sum_{n>=1} d_n > 1."""
    return w.positive_weight_total() > 1


@dataclass(frozen=True)
class HomologySupport:
    M: int
    dims: frozenset[int]


def homology_support(M: int) -> HomologySupport:
    """Degrees with nonzero rational homology of the link for weight space
    dimension M + 1 on each side: {0, 2, ..., 2M} and {2M+1, 2M+3, ..., 4M+1}.
    """
    if M < 0:
        raise CharvarError("M must be nonnegative")
    dims = set(range(0, 2 * M + 1, 2)) | set(range(2 * M + 1, 4 * M + 2, 2))
    return HomologySupport(M, frozenset(dims))


def is_sphere_like(M: int) -> bool:
    """Whether the link has the rational homology of a sphere (only M = 0)."""
    return len(homology_support(M).dims) == 2
