"""Coefficient weights defining the weighted Hardy spaces on the unit disk.

A space in this family is determined by a positive sequence omega_k with
omega_0 = 1 and omega_k / omega_{k+1} -> 1; the norm of an analytic
function with Taylor coefficients a_k is (sum |a_k|^2 omega_k)^(1/2).
The named families are powers of (k+1):

    hardy      omega_k = 1
    bergman    omega_k = 1/(k+1)
    dirichlet  omega_k = k+1
    dirichlet_alpha(a)  omega_k = (k+1)^a

Custom sequences are explicit finite lists.  Indexing past the end of a
custom list raises IndexError rather than extrapolating, because the
ratio condition cannot be certified for the unseen tail.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_NAMED_EXPONENTS = {"hardy": 0.0, "bergman": -1.0, "dirichlet": 1.0}

#: Families admitting an exact rational reproducing-kernel formula.
CLOSED_FORM_FAMILIES = ("hardy", "bergman")


@dataclass(frozen=True)
class WeightSequence:
    """An admissible weight sequence, immutable and shareable.

    Use the classmethod constructors; the raw constructor performs no
    validation.  ``warning`` carries a note attached at construction when
    a custom sequence's terminal ratio falls outside the configured
    slack window around 1.
    """

    family: str
    alpha: float | None = None
    entries: tuple[float, ...] | None = None
    warning: str | None = None

    @classmethod
    def hardy(cls) -> "WeightSequence":
        return cls("hardy", alpha=0.0)

    @classmethod
    def bergman(cls) -> "WeightSequence":
        return cls("bergman", alpha=-1.0)

    @classmethod
    def dirichlet(cls) -> "WeightSequence":
        return cls("dirichlet", alpha=1.0)

    @classmethod
    def dirichlet_alpha(cls, alpha: float) -> "WeightSequence":
        return cls("dirichlet_alpha", alpha=float(alpha))

    @classmethod
    def custom(cls, entries, ratio_slack: float = 0.5) -> "WeightSequence":
        """Explicit finite weight list.

        Requires entries[0] == 1 and all entries positive.  If the ratio
        omega_{m-1}/omega_m at the largest provided index m lies outside
        [1 - ratio_slack, 1 + ratio_slack], a warning string is attached
        (the sequence is still usable).
        """
        vals = tuple(float(x) for x in entries)
        if not vals:
            raise ValueError("custom weight list must be nonempty")
        if any(v <= 0 for v in vals):
            raise ValueError("weights must be positive")
        if vals[0] != 1.0:
            raise ValueError("the zeroth weight must equal 1")
        warning = None
        if len(vals) >= 2:
            ratio = vals[-2] / vals[-1]
            if not (1.0 - ratio_slack <= ratio <= 1.0 + ratio_slack):
                warning = (
                    f"terminal weight ratio {ratio:.6g} is outside "
                    f"[{1.0 - ratio_slack:.3g}, {1.0 + ratio_slack:.3g}]; "
                    "the sequence may not define an admissible space"
                )
        return cls("custom", entries=vals, warning=warning)

    @property
    def horizon(self) -> int | None:
        """Largest representable index for custom sequences, else None."""
        if self.entries is not None:
            return len(self.entries) - 1
        return None

    def weight(self, k: int) -> float:
        """omega_k.  IndexError past the horizon of a custom sequence."""
        if k < 0:
            raise IndexError("weight index must be nonnegative")
        if self.entries is not None:
            if k >= len(self.entries):
                raise IndexError(
                    f"index {k} beyond custom weight horizon {self.horizon}"
                )
            return self.entries[k]
        return float(k + 1) ** self.alpha

    def array(self, degree: int) -> np.ndarray:
        """omega_0 .. omega_degree as a float array."""
        if degree < 0:
            raise IndexError("degree must be nonnegative")
        if self.entries is not None:
            if degree >= len(self.entries):
                raise IndexError(
                    f"degree {degree} beyond custom weight horizon {self.horizon}"
                )
            return np.asarray(self.entries[: degree + 1], dtype=float)
        return (np.arange(degree + 1, dtype=float) + 1.0) ** self.alpha

    def tail_ratio_bound(self, degree: int) -> float:
        """Upper bound for omega_k/omega_{k+1} over all k > degree.

        This is the growth ratio of 1/omega_k on the tail; it enters the
        geometric tail estimates of kernel series.  Equals 1 whenever
        1/omega is nonincreasing.
        """
        if self.entries is not None:
            tail = self.entries[degree + 1 :]
            if len(tail) < 2:
                return 1.0
            ratios = [tail[i] / tail[i + 1] for i in range(len(tail) - 1)]
            return max(1.0, max(ratios))
        if self.alpha >= 0:
            return 1.0
        return ((degree + 3) / (degree + 2)) ** (-self.alpha)

    def label(self) -> str:
        """Short human-readable tag used in diagnostics and CSV output."""
        if self.family == "dirichlet_alpha":
            return f"dirichlet_alpha({self.alpha:g})"
        if self.family == "custom":
            return f"custom[{len(self.entries)}]"
        return self.family

    def to_json(self) -> dict:
        if self.family == "custom":
            return {"family": "custom", "weights": list(self.entries)}
        if self.family == "dirichlet_alpha":
            return {"family": "dirichlet_alpha", "alpha": self.alpha}
        return {"family": self.family}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightSequence":
        family = obj["family"]
        if family == "custom":
            return cls.custom(obj["weights"])
        if family == "dirichlet_alpha":
            return cls.dirichlet_alpha(obj["alpha"])
        if family in _NAMED_EXPONENTS:
            return cls(family, alpha=_NAMED_EXPONENTS[family])
        raise ValueError(f"unknown weight family {family!r}")
