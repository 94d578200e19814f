"""Linear forms and factorial-ratio specifications.

Every statement this package checks is built from integer-affine forms
``coeff*n + offset`` of a sweep variable n.  A factorial ratio is a pair
of multisets of such forms, read as

    prod (a_i*n + d_i)!  /  prod (b_j*n + e_j)!

The ratio is degree-balanced when the coefficient sums agree on both
sides; that is the shape required by the step-function integrality
criterion, so it is validated at construction time.  Forms with
``coeff == 0`` (pure constants) are allowed; argument non-negativity is
checked per evaluation, not per construction.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LinearForm:
    """The affine map ``n -> coeff*n + offset`` with ``coeff >= 0``."""

    coeff: int
    offset: int = 0

    def __post_init__(self) -> None:
        if self.coeff < 0:
            raise ValueError(f"linear form requires coeff >= 0, got {self.coeff}")

    def __call__(self, n: int) -> int:
        return self.coeff * n + self.offset

    def __str__(self) -> str:
        if self.coeff == 0:
            return str(self.offset)
        head = "n" if self.coeff == 1 else f"{self.coeff}n"
        return head if self.offset == 0 else f"{head}{self.offset:+d}"


def form(coeff: int, offset: int = 0) -> LinearForm:
    """Shorthand constructor used throughout the registries."""
    return LinearForm(coeff, offset)


@dataclass(frozen=True)
class FactorialRatioSpec:
    """A ratio of factorial products of linear forms."""

    numerator: tuple[LinearForm, ...]
    denominator: tuple[LinearForm, ...]

    def __post_init__(self) -> None:
        num = sum(f.coeff for f in self.numerator)
        den = sum(f.coeff for f in self.denominator)
        if num != den:
            raise ValueError(
                f"unbalanced factorial ratio: coefficient sums {num} != {den}"
            )

    @classmethod
    def from_pairs(
        cls,
        numerator: list[tuple[int, int]] | tuple[tuple[int, int], ...],
        denominator: list[tuple[int, int]] | tuple[tuple[int, int], ...],
    ) -> "FactorialRatioSpec":
        return cls(
            tuple(LinearForm(c, o) for c, o in numerator),
            tuple(LinearForm(c, o) for c, o in denominator),
        )

    def arguments(self, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Factorial arguments at n, validated non-negative."""
        num = tuple(f(n) for f in self.numerator)
        den = tuple(f(n) for f in self.denominator)
        for v in num + den:
            if v < 0:
                raise ValueError(f"negative factorial argument {v} at n={n} in {self}")
        return num, den

    def max_argument(self, n: int) -> int:
        num, den = self.arguments(n)
        return max(num + den, default=0)

    def __str__(self) -> str:
        num = "".join(f"({f})!" for f in self.numerator) or "1"
        den = "".join(f"({f})!" for f in self.denominator) or "1"
        return f"{num}/{den}"
