"""Size bounds guarding enumerative constructions.

Two regimes: plain constructions (pullbacks, commas, quotients) and
functor-category enumeration, which is exponentially more expensive.
A scalar knob scales both; 0 disables every bounded operation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeBoundError

ENV_VAR = "EXACT2_SIZE_BOUND"

DEFAULT_SCALE = 20


@dataclass(frozen=True)
class SizeBounds:
    construction_objects: int = 20
    construction_morphisms: int = 200
    enum_objects: int = 6
    enum_morphisms: int = 30

    @classmethod
    def scaled(cls, n: int) -> "SizeBounds":
        """Scale all four limits off a single knob; n=20 gives the defaults."""
        if n < 0:
            raise ValueError("size bound must be >= 0")
        return cls(
            construction_objects=n,
            construction_morphisms=10 * n,
            enum_objects=(3 * n) // 10,
            enum_morphisms=(3 * n) // 2,
        )

    @classmethod
    def from_env(cls) -> "SizeBounds":
        raw = os.environ.get(ENV_VAR)
        if raw is None:
            return cls()
        return cls.scaled(int(raw))

    def check_construction(self, what, n_objects, n_morphisms):
        if n_objects > self.construction_objects:
            raise SizeBoundError(what, f"{n_objects} objects", f"{self.construction_objects} objects")
        if n_morphisms > self.construction_morphisms:
            raise SizeBoundError(what, f"{n_morphisms} morphisms", f"{self.construction_morphisms} morphisms")

    def check_enum(self, what, category):
        if category.n_objects > self.enum_objects:
            raise SizeBoundError(what, f"{category.n_objects} objects", f"{self.enum_objects} objects")
        if category.n_morphisms > self.enum_morphisms:
            raise SizeBoundError(what, f"{category.n_morphisms} morphisms", f"{self.enum_morphisms} morphisms")


#: Bounds used when an operation is not handed explicit ones.
def default_bounds() -> SizeBounds:
    return SizeBounds.from_env()


#: A practically-unbounded instance for internal cross-checks and tests.
UNBOUNDED = SizeBounds(10**6, 10**7, 10**3, 10**4)
