"""Fairy-chess (a,b)-leapers on hypercube corners.

A leaper that jumps a units along one axis and b along another realizes,
between corners of {0,1}^k, exactly the change-(a*a+b*b) move. Closed
leaper tours therefore exist iff a+b is odd (an even a+b makes every leap
parity-preserving) and k exceeds a*a+b*b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructor import Feasibility, FeasibilityVerdict

CATALOG: dict[str, tuple[int, int]] = {
    "wazir": (0, 1),
    "ferz": (1, 1),
    "dabbaba": (0, 2),
    "knight": (1, 2),
    "alfil": (2, 2),
    "threeleaper": (0, 3),
    "camel": (1, 3),
    "zebra": (2, 3),
    "tripper": (3, 3),
    "fourleaper": (0, 4),
    "giraffe": (1, 4),
    "stag": (2, 4),
    "antelope": (3, 4),
    "commuter": (4, 4),
}


class UnknownLeaperError(ValueError):
    """Name not in the catalog; the message lists what is."""


@dataclass(frozen=True)
class LeaperSpec:
    """An (a,b) jump pattern, normalized to a <= b; the name is cosmetic."""

    a: int
    b: int
    name: str | None = None

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 1:
            raise ValueError(f"need a >= 0 and b >= 1, got ({self.a},{self.b})")
        if self.a > self.b:
            raise ValueError(
                f"leaper components must satisfy a <= b, got ({self.a},{self.b})"
            )

    def label(self) -> str:
        base = f"(a={self.a}, b={self.b})"
        return f"{self.name} {base}" if self.name else base


@dataclass(frozen=True)
class LeaperVerdict:
    """Which dimensions admit a closed tour: none, or all k >= k_min."""

    k_min: int | None
    reason: str

    @property
    def never(self) -> bool:
        return self.k_min is None


def leaper_by_name(name: str) -> LeaperSpec:
    """Catalog lookup, case-insensitive."""
    key = name.strip().lower()
    if key not in CATALOG:
        known = ", ".join(sorted(CATALOG))
        raise UnknownLeaperError(f"unknown leaper {name!r}; catalog: {known}")
    a, b = CATALOG[key]
    return LeaperSpec(a, b, key)


def leaper_step(spec: LeaperSpec) -> int:
    """Coordinates flipped per jump between corners: a*a + b*b."""
    return spec.a * spec.a + spec.b * spec.b


def min_dimension(spec: LeaperSpec) -> int | None:
    """Smallest k with a closed tour, or None if no dimension works."""
    if (spec.a + spec.b) % 2 == 0:
        return None
    return leaper_step(spec) + 1


def leaper_verdict(spec: LeaperSpec) -> LeaperVerdict:
    k_min = min_dimension(spec)
    if k_min is None:
        return LeaperVerdict(
            None,
            f"{spec.label()} can never tour: a+b is even, so every leap "
            f"preserves vertex parity",
        )
    return LeaperVerdict(
        k_min,
        f"{spec.label()} tours every dimension k >= {k_min}",
    )


def leaper_feasible(spec: LeaperSpec, k: int) -> FeasibilityVerdict:
    """Closed-tour feasibility of this leaper in {0,1}^k.

    The parity obstruction is permanent, so it is reported ahead of the
    k-dependent range obstruction.
    """
    if k < 1:
        raise ValueError(f"dimension must be positive, got {k}")
    h = leaper_step(spec)
    if k < 2:
        return FeasibilityVerdict(
            Feasibility.INFEASIBLE_DIMENSION,
            "dimension 1 has only two vertices and one edge, which a closed "
            "tour would have to reuse",
        )
    if (spec.a + spec.b) % 2 == 0:
        return FeasibilityVerdict(
            Feasibility.INFEASIBLE_PARITY,
            f"{spec.label()} can never tour: a+b is even, so every leap "
            f"preserves vertex parity",
        )
    if k <= h:
        return FeasibilityVerdict(
            Feasibility.INFEASIBLE_RANGE,
            f"{spec.label()} flips {h} coordinates per leap and needs "
            f"k > {h}; k={k} is too small",
        )
    return FeasibilityVerdict(
        Feasibility.FEASIBLE,
        f"{spec.label()} tours dimension {k} (change {h}, k > {h})",
    )
