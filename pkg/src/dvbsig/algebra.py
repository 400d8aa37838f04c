"""Arbitrary-precision modular arithmetic: the base field F_p, its quadratic
extension F_p2 (i^2 = -1, valid because every curve modulus here satisfies
p = 3 mod 4), and the scalar ring Z_q.

Values are plain Python integers wrapped in small immutable dataclasses, so a
9-bit toy modulus and a 512-bit production modulus run through the same code.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .errors import DomainError, InversionOfZero, ParamMismatch

# ---------------------------------------------------------------------------
# integer helpers


def byte_width(modulus: int) -> int:
    """Fixed serialization width for residues of the given modulus."""
    return (modulus.bit_length() + 7) // 8


def encode_int(value: int, modulus: int) -> bytes:
    """Big-endian, fixed-width (I2OSP-style) encoding of 0 <= value < modulus."""
    if not 0 <= value < modulus:
        raise ValueError(f"value {value} out of range for modulus {modulus}")
    return value.to_bytes(byte_width(modulus), "big")


def mod_inv(a: int, m: int) -> int:
    """Inverse of a modulo m; raises InversionOfZero on a = 0 (mod m)."""
    a %= m
    if a == 0:
        raise InversionOfZero(f"0 has no inverse mod {m}")
    return pow(a, -1, m)


def legendre(a: int, p: int) -> int:
    """Euler criterion: 1 for nonzero residues, -1 for non-residues, 0 for 0."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """Canonical square root of a modulo a prime p = 3 (mod 4).

    Returns the numerically smaller of the two roots, or None when a is a
    non-residue.  The p = 3 (mod 4) restriction makes a^((p+1)/4) a root
    whenever one exists, so no Tonelli-Shanks machinery is needed.
    """
    if p % 4 != 3:
        raise DomainError(f"modulus {p} is not 3 mod 4")
    a %= p
    if a == 0:
        return 0
    root = pow(a, (p + 1) // 4, p)
    if root * root % p != a:
        return None
    return min(root, p - root)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    The fixed small-prime bases decide every n < 3.3 * 10^24; beyond that,
    48 further bases derived from SHA-256(n) keep the test deterministic with
    error below 4^-48 for an adversarially chosen composite.
    """
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    bases = list(small)
    if n >= 3_317_044_064_679_887_385_961_981:
        nb = n.to_bytes(byte_width(n), "big")
        for i in range(48):
            digest = hashlib.sha256(nb + i.to_bytes(4, "big")).digest()
            bases.append(int.from_bytes(digest, "big") % (n - 3) + 2)
    return not any(witness(a) for a in bases)


# ---------------------------------------------------------------------------
# field elements


@dataclass(frozen=True)
class FpElement:
    """Residue modulo a prime p, normalized to [0, p)."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: FpElement | int) -> FpElement:
        if isinstance(other, int):
            return FpElement(other, self.p)
        if other.p != self.p:
            raise ParamMismatch(f"moduli differ: {self.p} vs {other.p}")
        return other

    def __add__(self, other: FpElement | int) -> FpElement:
        other = self._coerce(other)
        return FpElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: FpElement | int) -> FpElement:
        other = self._coerce(other)
        return FpElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: FpElement | int) -> FpElement:
        other = self._coerce(other)
        return FpElement(self.value * other.value % self.p, self.p)

    def __neg__(self) -> FpElement:
        return FpElement(-self.value % self.p, self.p)

    def __pow__(self, exponent: int) -> FpElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FpElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> FpElement:
        return FpElement(mod_inv(self.value, self.p), self.p)

    def sqrt(self) -> FpElement | None:
        root = sqrt_mod(self.value, self.p)
        return None if root is None else FpElement(root, self.p)

    def is_residue(self) -> bool:
        return legendre(self.value, self.p) >= 0

    def encode(self) -> bytes:
        return encode_int(self.value, self.p)


@dataclass(frozen=True)
class Fp2Element:
    """Element a + b*i of F_p2 with i^2 = -1 (requires p = 3 mod 4)."""

    a: int
    b: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def one(cls, p: int) -> Fp2Element:
        return cls(1, 0, p)

    @classmethod
    def zero(cls, p: int) -> Fp2Element:
        return cls(0, 0, p)

    def _check(self, other: Fp2Element) -> None:
        if self.p != other.p:
            raise ParamMismatch(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: Fp2Element) -> Fp2Element:
        self._check(other)
        return Fp2Element((self.a + other.a) % self.p, (self.b + other.b) % self.p, self.p)

    def __sub__(self, other: Fp2Element) -> Fp2Element:
        self._check(other)
        return Fp2Element((self.a - other.a) % self.p, (self.b - other.b) % self.p, self.p)

    def __mul__(self, other: Fp2Element) -> Fp2Element:
        self._check(other)
        p = self.p
        # (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        return Fp2Element(
            (self.a * other.a - self.b * other.b) % p,
            (self.a * other.b + self.b * other.a) % p,
            p,
        )

    def __neg__(self) -> Fp2Element:
        return Fp2Element(-self.a % self.p, -self.b % self.p, self.p)

    def conjugate(self) -> Fp2Element:
        """a - b*i; equals the Frobenius map x -> x^p on F_p2."""
        return Fp2Element(self.a, -self.b % self.p, self.p)

    def inverse(self) -> Fp2Element:
        # (a + bi)^-1 = (a - bi) / (a^2 + b^2)
        norm = (self.a * self.a + self.b * self.b) % self.p
        if norm == 0:
            raise InversionOfZero("0 in F_p2 has no inverse")
        inv = pow(norm, -1, self.p)
        return Fp2Element(self.a * inv % self.p, -self.b * inv % self.p, self.p)

    def __pow__(self, exponent: int) -> Fp2Element:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Fp2Element.one(self.p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def encode(self) -> bytes:
        return encode_int(self.a, self.p) + encode_int(self.b, self.p)


# ---------------------------------------------------------------------------
# scalar sampling


def sample_unit(rng, q: int) -> int:
    """Uniform draw from Z_q^* = [1, q-1] by rejection from q.bit_length() bits.

    `rng` is anything with next_bytes(n) -> bytes; replaying a seeded source
    replays the draws.
    """
    if q <= 2:
        raise DomainError(f"group order {q} leaves no room for units")
    nbytes = byte_width(q)
    mask = (1 << q.bit_length()) - 1
    while True:
        v = int.from_bytes(rng.next_bytes(nbytes), "big") & mask
        if 1 <= v <= q - 1:
            return v
