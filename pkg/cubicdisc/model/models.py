from __future__ import annotations

from typing import Literal, Optional, Tuple

import gmpy2
from pydantic import BaseModel, ConfigDict, Field, model_validator


class _Value(BaseModel):
    """Immutable value object; every subclass re-checks its invariants on construction."""

    model_config = ConfigDict(frozen=True)


# -------- Integer kernel --------
class PrimePower(_Value):
    prime: int = Field(..., ge=2)
    exponent: int = Field(..., ge=1)


class Factorization(_Value):
    n: int
    sign: Literal[1, -1] = 1
    factors: Tuple[PrimePower, ...] = ()

    @model_validator(mode="after")
    def _check(self) -> "Factorization":
        if self.n == 0:
            raise ValueError("zero has no factorization")
        primes = self.primes
        if any(p >= q for p, q in zip(primes, primes[1:])):
            raise ValueError(f"primes must be strictly increasing: {primes}")
        if self.value() != self.n:
            raise ValueError(f"factors multiply to {self.value()}, not {self.n}")
        return self

    @property
    def primes(self) -> list[int]:
        return [f.prime for f in self.factors]

    def value(self) -> int:
        out = self.sign
        for f in self.factors:
            out *= f.prime**f.exponent
        return out

    def exponent_of(self, p: int) -> int:
        for f in self.factors:
            if f.prime == p:
                return f.exponent
        return 0

    def __str__(self) -> str:
        body = " * ".join(f"{f.prime}^{f.exponent}" for f in self.factors)
        if not body:
            return str(self.sign)
        return body if self.sign == 1 else f"-1 * {body}"


# -------- Pell --------
class ContinuedFraction(_Value):
    """Expansion sqrt(D) = [a0; period, period, ...]."""

    D: int = Field(..., gt=0)
    a0: int = Field(..., ge=1)
    period: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "ContinuedFraction":
        if not (self.a0 * self.a0 < self.D < (self.a0 + 1) ** 2):
            raise ValueError(f"a0={self.a0} is not floor(sqrt({self.D})) of a non-square")
        if not self.period or any(q < 1 for q in self.period):
            raise ValueError("period must be a nonempty list of positive partial quotients")
        if self.period[-1] != 2 * self.a0:
            raise ValueError("period must end with 2*a0")
        return self

    @property
    def length(self) -> int:
        return len(self.period)

    def partial_quotient(self, i: int) -> int:
        if i == 0:
            return self.a0
        return self.period[(i - 1) % len(self.period)]


class PellSolution(_Value):
    """A solution of x^2 - D*y^2 = N."""

    x: int
    y: int = Field(..., ge=0)
    D: int
    N: int

    @model_validator(mode="after")
    def _check(self) -> "PellSolution":
        if self.x * self.x - self.D * self.y * self.y != self.N:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2 - {self.D}y^2 = {self.N}")
        return self


# -------- Conditions --------
class ConditionReport(_Value):
    d: int
    star: bool
    star_star: bool
    star_star_star: bool
    cert_factorization: Factorization
    cert_a2_vector: Optional[Tuple[int, int]] = None
    cert_divisor_n: Optional[int] = None
    cert_pell: Optional[Tuple[int, int]] = None

    @model_validator(mode="after")
    def _check(self) -> "ConditionReport":
        d = self.d
        if self.cert_factorization.n != d:
            raise ValueError("factorization certificate is for another number")
        if self.star_star_star and not self.star_star:
            raise ValueError("(***) without (**)")
        # A2 norms are even, so odd d never carries the A2 certificate
        if (self.cert_a2_vector is not None) != (self.star_star and d % 2 == 0):
            raise ValueError("A2 certificate must be present exactly when (**) holds and d is even")
        if (self.cert_divisor_n is not None) != self.star_star:
            raise ValueError("divisor certificate must be present exactly when (**) holds")
        if (self.cert_pell is not None) != self.star_star_star:
            raise ValueError("Pell certificate must be present exactly when (***) holds")

        if self.cert_a2_vector is not None:
            x, y = self.cert_a2_vector
            if 2 * x * x - 2 * x * y + 2 * y * y != d or gmpy2.gcd(x, y) != 1:
                raise ValueError(f"{self.cert_a2_vector} is not a primitive A2 vector of norm {d}")
        if self.cert_divisor_n is not None:
            n = self.cert_divisor_n
            if (2 * n * n + 2 * n + 2) % d:
                raise ValueError(f"{d} does not divide 2n^2+2n+2 at n={n}")
        if self.cert_pell is not None:
            n, a = self.cert_pell
            if a < 1 or d * a * a != 2 * n * n + 2 * n + 2:
                raise ValueError(f"d*a^2 != 2n^2+2n+2 for (n, a) = {self.cert_pell}")
        return self


# -------- Lattice --------
class GramMatrix(_Value):
    """Symmetric integer matrix of a bilinear pairing in a fixed ordered basis."""

    entries: Tuple[Tuple[int, ...], ...]
    even: bool = False

    @model_validator(mode="after")
    def _check(self) -> "GramMatrix":
        r = len(self.entries)
        if not 1 <= r <= 4:
            raise ValueError(f"rank must be between 1 and 4, got {r}")
        if any(len(row) != r for row in self.entries):
            raise ValueError("Gram matrix must be square")
        for i in range(r):
            for j in range(i + 1, r):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"not symmetric at ({i}, {j})")
        if self.even and any(self.entries[i][i] % 2 for i in range(r)):
            raise ValueError("flagged even but has an odd diagonal entry")
        return self

    @classmethod
    def of(cls, rows, even: bool = False) -> "GramMatrix":
        return cls(entries=tuple(tuple(int(v) for v in row) for row in rows), even=even)

    @classmethod
    def from_flat(cls, values, even: bool = False) -> "GramMatrix":
        values = [int(v) for v in values]
        r = next((r for r in range(1, 5) if r * r == len(values)), None)
        if r is None:
            raise ValueError(f"{len(values)} entries do not form a square matrix of rank <= 4")
        return cls.of([values[i * r : (i + 1) * r] for i in range(r)], even=even)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_even(self) -> bool:
        return all(self.entries[i][i] % 2 == 0 for i in range(self.rank))

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def flat(self) -> list[int]:
        return [v for row in self.entries for v in row]


class LatticeVector(_Value):
    coords: Tuple[int, ...]

    @classmethod
    def of(cls, *coords: int) -> "LatticeVector":
        return cls(coords=tuple(int(c) for c in coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def sup_norm(self) -> int:
        return max((abs(c) for c in self.coords), default=0)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        if self.rank != other.rank:
            raise ValueError("vectors of different rank")
        return LatticeVector(coords=tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(coords=tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def normal_shape(k: int, c: int) -> Tuple[Tuple[int, ...], ...]:
    return ((-2, 1, 0), (1, -2, c), (0, c, 2 * k))


class CanonicalForm(_Value):
    """The normal form of a rank-3 lattice containing the -A2 block."""

    gram: GramMatrix
    k: int
    c: Literal[0, 1]
    transform: Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

    @model_validator(mode="after")
    def _check(self) -> "CanonicalForm":
        if self.gram.entries != normal_shape(self.k, self.c):
            raise ValueError(f"gram {self.gram.entries} is not the canonical shape for k={self.k}, c={self.c}")
        return self

    @property
    def discriminant(self) -> int:
        return 6 * self.k + 2 * self.c


# -------- Witness --------
class HilbWitness(_Value):
    d: int
    n: int = Field(..., ge=0)
    a: int = Field(..., ge=1)
    m: int
    case_id: Literal[1, 2, 3]
    coords: LatticeVector
    canonical: CanonicalForm
    chi_l1_w: int
    chi_w_w: int

    @model_validator(mode="after")
    def _check(self) -> "HilbWitness":
        n, a = self.n, self.a
        if self.d * a * a != 2 * n * n + 2 * n + 2:
            raise ValueError("d*a^2 != 2n^2+2n+2")
        if self.case_id != {1: 1, 2: 2, 0: 3}[n % 3]:
            raise ValueError(f"case {self.case_id} does not match n = {n} (mod 3)")
        if self.coords.coords != (self.m, 2 * self.m + 1, a):
            raise ValueError("w must be m*l1 + (2m+1)*l2 + a*tau")
        if (self.chi_l1_w, self.chi_w_w) != (1, 0):
            raise ValueError(f"pairings ({self.chi_l1_w}, {self.chi_w_w}) are not (1, 0)")
        return self


class SpanCheck(_Value):
    """Discriminant data of the span of l1, l2 and a witness."""

    n_span: int
    disc: int
    index: int


# -------- Table --------
class TableRow(_Value):
    d: int
    mark_star_star: bool
    mark_star_star_star: bool

    @model_validator(mode="after")
    def _check(self) -> "TableRow":
        if not (self.d > 6 and self.d % 6 in (0, 2)):
            raise ValueError(f"row {self.d} does not satisfy (*)")
        if self.mark_star_star_star and not self.mark_star_star:
            raise ValueError(f"row {self.d} marks (***) without (**)")
        return self
