"""Reductive group descriptors, centers, fundamental groups, CI decision.

A group is described by a central torus rank and a list of simple factors,
each simply connected or adjoint.  Finite abelian invariants are computed
by Smith normal form of Cartan matrices, never by table lookup.
"""

from __future__ import annotations

import enum
import math
import re
from collections import defaultdict
from dataclasses import dataclass

from .errors import CharvarError
from .rootsys import SimpleType, cartan_matrix
from .snf import smith_normal_form


class Isogeny(enum.Enum):
    SIMPLY_CONNECTED = "sc"
    ADJOINT = "ad"


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FgAbelianGroup:
    """Finitely generated abelian group in invariant-factor normal form.

    ``known=False`` is the Unknown marker; it absorbs direct sums.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()
    known: bool = True

    def __post_init__(self) -> None:
        if self.known:
            if self.free_rank < 0:
                raise CharvarError("negative free rank")
            for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
                if b % a:
                    raise CharvarError(f"not a divisibility chain: {self.invariant_factors}")
            if any(d < 2 for d in self.invariant_factors):
                raise CharvarError("invariant factors must be >= 2")

    @classmethod
    def trivial(cls) -> "FgAbelianGroup":
        return cls()

    @classmethod
    def free(cls, n: int) -> "FgAbelianGroup":
        return cls(free_rank=n)

    @classmethod
    def cyclic(cls, m: int) -> "FgAbelianGroup":
        return cls.from_torsion([m])

    @classmethod
    def unknown(cls) -> "FgAbelianGroup":
        return cls(known=False)

    @classmethod
    def from_torsion(cls, moduli, free_rank: int = 0) -> "FgAbelianGroup":
        """Normalize an arbitrary list of cyclic orders to invariant factors."""
        per_prime: dict[int, list[int]] = defaultdict(list)
        for m in moduli:
            if m <= 0:
                raise CharvarError(f"invalid cyclic order {m}")
            for p, e in _factorize(m).items():
                per_prime[p].append(e)
        if not per_prime:
            return cls(free_rank=free_rank)
        width = max(len(v) for v in per_prime.values())
        factors = []
        for slot in range(width):
            d = 1
            for p, exps in per_prime.items():
                exps = sorted(exps, reverse=True)
                if slot < len(exps):
                    d *= p ** exps[slot]
            factors.append(d)
        return cls(free_rank=free_rank, invariant_factors=tuple(reversed(factors)))

    def direct_sum(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        if not (self.known and other.known):
            return FgAbelianGroup.unknown()
        return FgAbelianGroup.from_torsion(
            list(self.invariant_factors) + list(other.invariant_factors),
            free_rank=self.free_rank + other.free_rank,
        )

    def power(self, n: int) -> "FgAbelianGroup":
        if n < 0:
            raise CharvarError("negative power")
        if not self.known:
            return FgAbelianGroup.unknown()
        return FgAbelianGroup.from_torsion(
            list(self.invariant_factors) * n, free_rank=self.free_rank * n
        )

    def order(self) -> int | None:
        """Group order, or None when infinite or unknown."""
        if not self.known or self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    def is_trivial(self) -> bool:
        return self.known and not self.free_rank and not self.invariant_factors

    def __str__(self) -> str:
        if not self.known:
            return "?"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupDescriptor:
    """A connected reductive group: central torus times simple factors."""

    torus_rank: int = 0
    factors: tuple[tuple[SimpleType, Isogeny], ...] = ()

    def __post_init__(self) -> None:
        if self.torus_rank < 0:
            raise CharvarError("negative torus rank")

    @property
    def semisimple_rank(self) -> int:
        """Rank of the derived subgroup DG."""
        return sum(t.rank for t, _ in self.factors)

    @property
    def is_abelian(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        parts = []
        if self.torus_rank:
            parts.append(f"T^{self.torus_rank}")
        parts.extend(f"{t}[{iso.value}]" for t, iso in self.factors)
        return " x ".join(parts) if parts else "T^0"


_FACTOR_RE = re.compile(r"^([A-G])(\d+)(?:\[(sc|ad)\])?$")
_TORUS_RE = re.compile(r"^T\^(\d+)$")


def parse_group(text: str) -> GroupDescriptor:
    """Parse the descriptor grammar `T^k x F1[iso] x F2[iso] ...`.

    iso is `sc` or `ad` and defaults to `sc`; examples: `E8`,
    `T^1 x A3[sc]`, `A1[ad] x D5[sc]`.
    """
    torus = 0
    factors = []
    terms = [term.strip() for term in text.split("x")]
    if terms == [""]:
        raise CharvarError("empty group descriptor")
    for idx, term in enumerate(terms):
        m = _TORUS_RE.match(term)
        if m:
            if idx != 0:
                raise CharvarError("torus term must come first")
            torus = int(m.group(1))
            continue
        m = _FACTOR_RE.match(term)
        if not m:
            raise CharvarError(f"cannot parse factor {term!r}")
        t = SimpleType(m.group(1), int(m.group(2)))
        iso = Isogeny(m.group(3) or "sc")
        factors.append((t, iso))
    return GroupDescriptor(torus, tuple(factors))


def center_group(t: SimpleType) -> FgAbelianGroup:
    """Center of the simply connected form: cokernel of the Cartan matrix."""
    diag = smith_normal_form([list(row) for row in cartan_matrix(t)])
    return FgAbelianGroup.from_torsion([d for d in diag if d > 1])


def pi1(g: GroupDescriptor) -> FgAbelianGroup:
    """Fundamental group: Z^torus plus the centers of the adjoint factors."""
    out = FgAbelianGroup.free(g.torus_rank)
    for t, iso in g.factors:
        if iso is Isogeny.ADJOINT:
            out = out.direct_sum(center_group(t))
    return out


def pi1_adjoint(g: GroupDescriptor) -> FgAbelianGroup:
    """pi_1(PG): centers of all factors, independent of isogeny and torus."""
    out = FgAbelianGroup.trivial()
    for t, _ in g.factors:
        out = out.direct_sum(center_group(t))
    return out


def is_ci(g: GroupDescriptor) -> tuple[bool, str]:
    """Whether every irreducible subgroup has centralizer equal to the center.

    Holds exactly when the derived subgroup is a product of special linear
    groups, i.e. every factor is type A and simply connected.
    """
    for t, iso in g.factors:
        if t.family != "A":
            return False, f"factor {t} is not of type A"
        if iso is not Isogeny.SIMPLY_CONNECTED:
            return False, f"factor {t} is not simply connected"
    return True, "derived subgroup is a product of special linear groups"


def min_simple_rank(g: GroupDescriptor) -> int:
    """Minimum rank over the simple factors."""
    if g.is_abelian:
        raise CharvarError("minimum simple rank is undefined for abelian groups")
    return min(t.rank for t, _ in g.factors)
