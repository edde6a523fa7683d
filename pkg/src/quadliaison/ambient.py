"""The two ambient spaces: projective n-space and the smooth quadric threefold."""

from __future__ import annotations

from dataclasses import dataclass

from .hilbert import h0_proj, h0_quadric3


@dataclass(frozen=True)
class Ambient:
    """Either P^n (kind ``"proj"``) or the quadric threefold (kind ``"quadric3"``).

    ``dim`` is the dimension of the space itself, so the quadric threefold
    has dim 3 even though it lives in P^4.
    """

    kind: str
    dim: int

    def __post_init__(self) -> None:
        if self.kind == "proj":
            if self.dim < 2:
                raise ValueError(f"projective ambient needs dim >= 2, got {self.dim}")
        elif self.kind == "quadric3":
            if self.dim != 3:
                raise ValueError("the quadric threefold has dimension 3")
        else:
            raise ValueError(f"unknown ambient kind {self.kind!r}")

    @property
    def is_quadric(self) -> bool:
        return self.kind == "quadric3"

    def h0(self, k: int) -> int:
        """Sections of O(k) on this space."""
        if self.is_quadric:
            return h0_quadric3(k)
        return h0_proj(self.dim, k)

    def label(self) -> str:
        return "quadric3" if self.is_quadric else f"p{self.dim}"

    def __str__(self) -> str:
        return self.label()


def proj_space(n: int) -> Ambient:
    """Projective n-space, n >= 2."""
    return Ambient("proj", n)


P2 = proj_space(2)
P3 = proj_space(3)
P4 = proj_space(4)
QUADRIC3 = Ambient("quadric3", 3)


def parse_ambient(text: str) -> Ambient:
    """Parse an ambient label: ``p3``, ``p4``, ... or ``quadric3``."""
    t = text.strip().lower()
    if t in ("quadric3", "q"):
        return QUADRIC3
    if t.startswith("p") and t[1:].isdigit():
        return proj_space(int(t[1:]))
    raise ValueError(f"unknown ambient {text!r} (expected p<n> or quadric3)")
