"""Dense integer polynomials in q: cyclotomics, Gaussian binomials,
and the reciprocal/unimodal/non-negative predicate suite.

Coefficients are arbitrary-precision integers stored ascending; the
canonical form has no trailing zeros, and the zero polynomial is the
empty tuple with degree -1.  All arithmetic is exact; there is no
floating point anywhere in this module.

Factors of the shape 1 - q^j get dedicated O(length) multiply/divide
helpers, since every q-expression in the package is a ratio of products
of such factors.  Division by a general polynomial is schoolbook long
division over Z, refusing to divide when a leading coefficient does not
divide exactly (sufficient here: every divisor is monic up to sign).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InternalCheckError, NotPolynomialError, PreconditionError


class DensePoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):  # trailing zeros trimmed
        cs = tuple(coeffs)
        end = len(cs)
        while end and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "DensePoly":
        return cls(())

    @classmethod
    def one(cls) -> "DensePoly":
        return cls((1,))

    @classmethod
    def one_minus_power(cls, j: int) -> "DensePoly":
        """1 - q^j (j >= 1)."""
        if j < 1:
            raise ValueError(f"need j >= 1, got {j}")
        return cls((1,) + (0,) * (j - 1) + (-1,))

    @classmethod
    def power_minus_one(cls, j: int) -> "DensePoly":
        """q^j - 1 (j >= 1)."""
        if j < 1:
            raise ValueError(f"need j >= 1, got {j}")
        return cls((-1,) + (0,) * (j - 1) + (1,))

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 is the zero polynomial's sentinel."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, DensePoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __repr__(self) -> str:
        return f"DensePoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "q" if i == 1 else f"q^{i}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self) -> "DensePoly":
        return DensePoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "DensePoly") -> "DensePoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(out)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + (-other)

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly.zero()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, c in enumerate(b):
            if c == 0:
                continue
            if c == 1:
                for i, x in enumerate(a):
                    out[i + j] += x
            elif c == -1:
                for i, x in enumerate(a):
                    out[i + j] -= x
            else:
                for i, x in enumerate(a):
                    out[i + j] += c * x
        return DensePoly(out)

    def __divmod__(self, other: "DensePoly") -> tuple["DensePoly", "DensePoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        lead = other.coeffs[-1]
        if len(rem) < dlen:
            return DensePoly.zero(), self
        quot = [0] * (len(rem) - dlen + 1)
        for top in range(len(rem) - 1, dlen - 2, -1):
            c = rem[top]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                # leading term does not divide over Z: stop, leave remainder
                break
            pos = top - dlen + 1
            quot[pos] = q
            for i, d in enumerate(other.coeffs):
                rem[pos + i] -= q * d
        return DensePoly(quot), DensePoly(rem)

    def exact_div(self, other: "DensePoly") -> "DensePoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise NotPolynomialError(f"inexact polynomial division (remainder degree {r.degree})")
        return q

    def mul_one_minus_power(self, j: int) -> "DensePoly":
        """self * (1 - q^j) in O(length)."""
        if self.is_zero():
            return self
        out = list(self.coeffs) + [0] * j
        for i, c in enumerate(self.coeffs):
            out[i + j] -= c
        return DensePoly(out)

    def div_one_minus_power(self, j: int) -> tuple["DensePoly", bool]:
        """(quotient, exact) for division by 1 - q^j, in O(length).

        Coefficient recurrence: q_i = n_i + q_{i-j}; the division is exact
        when the recurrence vanishes beyond the quotient's degree.
        """
        if self.is_zero():
            return self, True
        n = self.coeffs
        qlen = len(n) - j
        if qlen <= 0:
            return DensePoly.zero(), False
        out = [0] * qlen
        exact = True
        for i in range(len(n)):
            val = n[i] + (out[i - j] if i >= j else 0)
            if i < qlen:
                out[i] = val
            elif val != 0:
                exact = False
                break
        return DensePoly(out), exact

    # -- evaluation / serialization ----------------------------------------

    def evaluate(self, x):
        """Value at x by Horner's rule; x may be int or Fraction."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def to_json_coeffs(self) -> list[str]:
        """Ascending coefficients as decimal strings."""
        return [str(c) for c in self.coeffs]


# --------------------------------------------------------------------------
# Cyclotomic polynomials
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(d: int) -> DensePoly:
    """d-th cyclotomic polynomial, by exact division of q^d - 1."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    poly = DensePoly.power_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


def qbinomial(n: int, k: int) -> DensePoly:
    """Gaussian binomial coefficient as a polynomial of degree k(n-k).

    Out-of-range k gives the zero polynomial, matching the defining
    convention.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if k < 0 or k > n:
        return DensePoly.zero()
    k = min(k, n - k)
    poly = DensePoly.one()
    for j in range(n - k + 1, n + 1):
        poly = poly.mul_one_minus_power(j)
    for j in range(1, k + 1):
        poly, exact = poly.div_one_minus_power(j)
        if not exact:
            raise NotPolynomialError(f"Gaussian binomial [{n},{k}] build failed", factor=j)
    return poly


# --------------------------------------------------------------------------
# Coefficient predicates
# --------------------------------------------------------------------------

def is_reciprocal(p: DensePoly) -> bool:
    """p_i == p_{d-i} for all i; vacuously true for the zero polynomial."""
    return p.coeffs == p.coeffs[::-1]


def is_nonnegative(p: DensePoly) -> bool:
    return first_negative_index(p) is None


def first_negative_index(p: DensePoly) -> int | None:
    for i, c in enumerate(p.coeffs):
        if c < 0:
            return i
    return None


def unimodality_witness(p: DensePoly) -> int | None:
    """Index breaking 0 <= p_0 <= ... <= p_r >= ... >= p_d >= 0, else None.

    A negative coefficient breaks the chain immediately (the definition
    requires non-negativity), and its index is the witness.
    """
    neg = first_negative_index(p)
    if neg is not None:
        return neg
    falling = False
    for i in range(1, len(p.coeffs)):
        if p.coeffs[i] > p.coeffs[i - 1]:
            if falling:
                return i
        elif p.coeffs[i] < p.coeffs[i - 1]:
            falling = True
    return None


def is_unimodal(p: DensePoly) -> bool:
    return unimodality_witness(p) is None


# --------------------------------------------------------------------------
# The reciprocal-unimodal quotient filter
# --------------------------------------------------------------------------

def rsw_filter(p: DensePoly, m: int, n: int) -> DensePoly:
    """(1 - q^m)/(1 - q^n) * p for reciprocal unimodal p with m <= n.

    When the division is exact the quotient provably has non-negative
    coefficients, so that conclusion is enforced as a post-condition.
    Inexact division raises NotPolynomialError; precondition violations
    raise PreconditionError.
    """
    if m < 1 or n < 1 or m > n:
        raise PreconditionError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not is_reciprocal(p):
        raise PreconditionError("input polynomial is not reciprocal")
    if not is_unimodal(p):
        raise PreconditionError("input polynomial is not unimodal")
    scaled = p.mul_one_minus_power(m)
    quot, exact = scaled.div_one_minus_power(n)
    if not exact:
        raise NotPolynomialError(f"(1-q^{m})/(1-q^{n}) does not divide", factor=n)
    bad = first_negative_index(quot)
    if bad is not None:
        raise InternalCheckError(
            f"reciprocal-unimodal quotient has negative coefficient at index {bad}"
        )
    return quot


def q_catalan(n: int) -> DensePoly:
    """q-Catalan polynomial (1 - q)/(1 - q^{n+1}) * [2n, n]_q.

    Specializes to the Catalan number C(2n,n)/(n+1) at q = 1.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return DensePoly.one()
    return rsw_filter(qbinomial(2 * n, n), 1, n + 1)
