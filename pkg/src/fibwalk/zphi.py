"""Exact arithmetic in Z[phi], phi^2 = phi + 1.

Elements are a + b*phi with integer coordinates.  sqrt(5) = 2*phi - 1 lives in
the ring, and so do all the Binet expressions once everything is scaled by 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from fibwalk.errors import ArithmeticInconsistency, DomainError

Scalar = Union[int, "ZPhi"]


@dataclass(frozen=True)
class ZPhi:
    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, x: Scalar) -> ZPhi:
        if isinstance(x, ZPhi):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to ZPhi")

    def __repr__(self) -> str:
        return f"ZPhi({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}φ"

    def __add__(self, other: Scalar) -> ZPhi:
        if not isinstance(other, (int, ZPhi)):
            return NotImplemented
        o = ZPhi.coerce(other)
        return ZPhi(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> ZPhi:
        return ZPhi(-self.a, -self.b)

    def __sub__(self, other: Scalar) -> ZPhi:
        if not isinstance(other, (int, ZPhi)):
            return NotImplemented
        return self + (-ZPhi.coerce(other))

    def __rsub__(self, other: Scalar) -> ZPhi:
        return ZPhi.coerce(other) - self

    def __mul__(self, other: Scalar) -> ZPhi:
        if not isinstance(other, (int, ZPhi)):
            return NotImplemented
        return zphi_mul(self, ZPhi.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ZPhi:
        return zphi_pow(self, e)

    def conjugate(self) -> ZPhi:
        """Image under phi -> 1 - phi."""
        return ZPhi(self.a + self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def inverse(self) -> ZPhi:
        n = self.norm()
        if n not in (1, -1):
            raise DomainError(f"{self!r} is not a unit (norm {n})")
        c = self.conjugate()
        return ZPhi(c.a * n, c.b * n)

    def exact_div(self, d: int) -> ZPhi:
        qa, ra = divmod(self.a, d)
        qb, rb = divmod(self.b, d)
        if ra or rb:
            raise ArithmeticInconsistency(f"{self!r} is not divisible by {d}")
        return ZPhi(qa, qb)

    def div_sqrt5(self) -> ZPhi:
        # x / sqrt5 = x * conj(sqrt5) / norm(sqrt5) = x * (1 - 2 phi) / -5
        return (self * SQRT5.conjugate()).exact_div(SQRT5.norm())

    def as_int(self) -> int:
        if self.b != 0:
            raise ArithmeticInconsistency(f"{self!r} is not a rational integer")
        return self.a


ONE = ZPhi(1, 0)
PHI = ZPhi(0, 1)
PHI_INV = ZPhi(-1, 1)
SQRT5 = ZPhi(-1, 2)


def zphi_mul(x: ZPhi, y: ZPhi) -> ZPhi:
    bb = x.b * y.b
    return ZPhi(x.a * y.a + bb, x.a * y.b + y.a * x.b + bb)


def zphi_pow(x: ZPhi, e: int) -> ZPhi:
    """x**e; negative exponents are allowed for units only."""
    if e < 0:
        x = x.inverse()
        e = -e
    result = ONE
    base = x
    while e:
        if e & 1:
            result = zphi_mul(result, base)
        base = zphi_mul(base, base)
        e >>= 1
    return result


def neg_phi_pow(e: int) -> ZPhi:
    """(-phi)**e as (-1)**e * phi**e."""
    p = zphi_pow(PHI, e)
    return p if e % 2 == 0 else -p


def binet_numerator(n: int) -> ZPhi:
    """phi^n - (-phi)^(-n), which is sqrt5 * F_n."""
    return zphi_pow(PHI, n) - neg_phi_pow(-n)


def binet_exact(n: int) -> int:
    if n < 0:
        raise DomainError(f"Fibonacci index must be non-negative, got {n}")
    return binet_numerator(n).div_sqrt5().as_int()


def eq3_sides() -> tuple[ZPhi, ZPhi]:
    """(phi^4 - 1, sqrt5 * phi^2)."""
    return zphi_pow(PHI, 4) - 1, SQRT5 * zphi_pow(PHI, 2)


def verify_eq3() -> bool:
    lhs, rhs = eq3_sides()
    return lhs == rhs


def lemma4_chain(m: int, k: int) -> list[ZPhi]:
    """Successive forms of 5 * [(F_{k+2} - F_{k-2}) F_m + (-1)^{k+1} F_{m-k}].

    Each F_n is written as B(n)/sqrt5 with B the Binet numerator; multiplying
    through by 5 keeps every stage inside Z[phi].  The stages are: the raw
    Binet substitution, factoring out phi^4 - 1, replacing it by sqrt5 phi^2,
    expanding the product, and finally sqrt5 B(m+k) = 5 F_{m+k}.
    """
    if k < 2 or m < k:
        raise DomainError(f"need m >= k >= 2, got m={m}, k={k}")
    sign = 1 if (k + 1) % 2 == 0 else -1
    tail = sign * (SQRT5 * binet_numerator(m - k))
    bm = binet_numerator(m)

    raw = (binet_numerator(k + 2) - binet_numerator(k - 2)) * bm + tail

    factor = zphi_pow(PHI, k - 2) + neg_phi_pow(-k - 2)
    factored = (zphi_pow(PHI, 4) - 1) * factor * bm + tail

    substituted = SQRT5 * zphi_pow(PHI, 2) * factor * bm + tail

    pm_k = 1 if k % 2 == 0 else -1  # (-1)^k == (-1)^-k
    pm_m = 1 if m % 2 == 0 else -1
    expanded = SQRT5 * (
        zphi_pow(PHI, m + k)
        - neg_phi_pow(-m - k)
        + pm_k * zphi_pow(PHI, m - k)
        - pm_m * zphi_pow(PHI, k - m)
    ) - SQRT5 * (pm_k * zphi_pow(PHI, m - k) - pm_m * zphi_pow(PHI, k - m))

    final = SQRT5 * binet_numerator(m + k)
    return [raw, factored, substituted, expanded, final]


def verify_lemma4_algebraic(m: int, k: int) -> bool:
    chain = lemma4_chain(m, k)
    return all(stage == chain[0] for stage in chain[1:])
