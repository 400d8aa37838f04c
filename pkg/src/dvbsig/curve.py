"""The supersingular curve E: y^2 = x^3 + x over F_p, its order-q subgroup,
the distortion map, and the reduced Tate pairing into the order-q subgroup of
F_p2^*.

Parameters are of the Boneh-Franklin shape: p = 12*q*r - 1 prime (so that
q | p + 1 = #E(F_p)) with p = 3 (mod 4).  The pairing of two F_p-rational
points A, B is Miller's algorithm for f_{q,A} evaluated at the distorted
point phi(B) = (-x_B, i*y_B), followed by the final exponentiation to
(p^2 - 1)/q.  With embedding degree 2 all vertical-line contributions lie in
F_p and are erased by the final exponentiation, so they are skipped.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import meter
from .algebra import Fp2Element, byte_width, encode_int, is_prime, sqrt_mod
from .errors import (
    DecodeError,
    HashToPointFailed,
    InvalidPoint,
    ParamMismatch,
    ParamSearchFailed,
)

HASH_TO_POINT_MAX_COUNTER = 1 << 16


@dataclass(frozen=True)
class G1Point:
    """Affine point on y^2 = x^3 + x over F_p; x = y = None is the identity."""

    p: int
    x: int | None
    y: int | None

    @classmethod
    def identity(cls, p: int) -> G1Point:
        return cls(p, None, None)

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __neg__(self) -> G1Point:
        if self.is_identity:
            return self
        return G1Point(self.p, self.x, (-self.y) % self.p)

    def on_curve(self) -> bool:
        if self.is_identity:
            return True
        x, y, p = self.x, self.y, self.p
        return y * y % p == (x * x * x + x) % p

    def encode(self) -> bytes:
        """0x00 for the identity; 0x04 || x || y otherwise (fixed width)."""
        if self.is_identity:
            return b"\x00"
        return b"\x04" + encode_int(self.x, self.p) + encode_int(self.y, self.p)


@dataclass(frozen=True)
class Fp2Point:
    """Point with F_p2 coordinates; only produced by the distortion map."""

    x: Fp2Element | None
    y: Fp2Element | None

    @property
    def is_identity(self) -> bool:
        return self.x is None


@dataclass(frozen=True)
class GTElement:
    """Element of the order-q subgroup of F_p2^* (pairing values)."""

    value: Fp2Element

    def __mul__(self, other: GTElement) -> GTElement:
        return GTElement(self.value * other.value)

    def __pow__(self, exponent: int) -> GTElement:
        return GTElement(self.value**exponent)

    def inverse(self) -> GTElement:
        return GTElement(self.value.inverse())

    @property
    def is_one(self) -> bool:
        return self.value.is_one()

    def encode(self) -> bytes:
        return self.value.encode()


@dataclass(frozen=True)
class CurveParams:
    """Public pairing context: modulus, subgroup order, cofactor, generator."""

    p: int
    q: int
    cofactor: int
    gx: int
    gy: int
    security_label: str = ""

    @property
    def generator(self) -> G1Point:
        return G1Point(self.p, self.gx, self.gy)

    def validate(self) -> None:
        """Check every structural invariant; raises on violation."""
        if not is_prime(self.p):
            raise InvalidPoint(f"p = {self.p} is not prime")
        if not is_prime(self.q):
            raise InvalidPoint(f"q = {self.q} is not prime")
        if self.p % 4 != 3:
            raise InvalidPoint(f"p = {self.p} is not 3 mod 4")
        if self.q * self.cofactor != self.p + 1:
            raise InvalidPoint("q * cofactor != p + 1")
        if self.cofactor % self.q == 0:
            raise InvalidPoint("q divides the cofactor")
        g = self.generator
        if g.is_identity or not g.on_curve():
            raise InvalidPoint("generator is not a curve point")
        if _mul_raw(self.p, self.q, g.x, g.y)[0] is not None:
            raise InvalidPoint("generator does not have order q")


# ---------------------------------------------------------------------------
# raw affine arithmetic (identity encoded as (None, None))


def _add_raw(p, x1, y1, x2, y2):
    if x1 is None:
        return x2, y2
    if x2 is None:
        return x1, y1
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None, None
        lam = (3 * x1 * x1 + 1) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return x3, y3


def _mul_raw(p, k, x, y):
    if k < 0:
        k, y = -k, None if y is None else (-y) % p
    rx, ry = None, None
    ax, ay = x, y
    while k:
        if k & 1:
            rx, ry = _add_raw(p, rx, ry, ax, ay)
        ax, ay = _add_raw(p, ax, ay, ax, ay)
        k >>= 1
    return rx, ry


def _require_on_curve(point: G1Point) -> None:
    if not point.on_curve():
        raise InvalidPoint(f"({point.x}, {point.y}) not on y^2 = x^3 + x mod {point.p}")


def _require_same_p(a: G1Point, b: G1Point) -> None:
    if a.p != b.p:
        raise ParamMismatch(f"points from different fields: {a.p} vs {b.p}")


# ---------------------------------------------------------------------------
# public group operations (these are the instrumented, protocol-level ops)


def point_add(a: G1Point, b: G1Point) -> G1Point:
    """Chord-and-tangent group law; counts as one G1 group operation."""
    _require_same_p(a, b)
    _require_on_curve(a)
    _require_on_curve(b)
    meter.tally(meter.G1_GROUP_OP)
    x, y = _add_raw(a.p, a.x, a.y, b.x, b.y)
    return G1Point(a.p, x, y)


def scalar_mul(k: int, a: G1Point) -> G1Point:
    """Double-and-add k*A; counts as one G1 scalar multiplication."""
    _require_on_curve(a)
    meter.tally(meter.G1_SCALAR_MUL)
    x, y = _mul_raw(a.p, k, a.x, a.y)
    return G1Point(a.p, x, y)


def distortion_map(a: G1Point) -> Fp2Point:
    """(x, y) -> (-x, i*y), an endomorphism of E over F_p2.

    The image is linearly independent of the F_p-rational input, which is
    what makes the pairing of a point with itself non-degenerate.
    """
    if a.is_identity:
        return Fp2Point(None, None)
    _require_on_curve(a)
    p = a.p
    return Fp2Point(Fp2Element(-a.x % p, 0, p), Fp2Element(0, a.y, p))


def tate_pairing(a: G1Point, b: G1Point, params: CurveParams) -> GTElement:
    """Reduced Tate pairing e(A, B) = f_{q,A}(phi(B))^((p^2-1)/q).

    Bilinear and non-degenerate on the order-q subgroup; identity inputs map
    to 1.  Counts as one pairing computation.
    """
    _require_same_p(a, b)
    _require_on_curve(a)
    _require_on_curve(b)
    meter.tally(meter.PAIRING)
    p = params.p
    if a.is_identity or b.is_identity:
        return GTElement(Fp2Element.one(p))
    f = _miller_loop(params.q, p, a.x, a.y, b.x, b.y)
    return GTElement(_final_exponentiation(f, params))


def _miller_loop(q: int, p: int, ax: int, ay: int, bx: int, by: int) -> Fp2Element:
    """Accumulate f_{q,A} evaluated at phi(B) = (-bx, i*by).

    The line through T and T' with F_p slope lam evaluates at phi(B) to
    (lam*(bx + x_T) - y_T) + by*i; vertical lines evaluate inside F_p and are
    dropped (denominator elimination for embedding degree 2).
    """
    fa, fb = 1, 0  # f as fa + fb*i
    tx, ty = ax, ay
    for bit in bin(q)[3:]:
        # f <- f^2 * line_{T,T}(phi(B)); T <- 2T
        fa, fb = (fa * fa - fb * fb) % p, 2 * fa * fb % p
        if tx is not None:
            lam = (3 * tx * tx + 1) * pow(2 * ty, -1, p) % p
            la = (lam * (bx + tx) - ty) % p
            fa, fb = (fa * la - fb * by) % p, (fa * by + fb * la) % p
            x2 = (lam * lam - 2 * tx) % p
            ty = (lam * (tx - x2) - ty) % p
            tx = x2
        if bit == "1":
            # f <- f * line_{T,A}(phi(B)); T <- T + A
            if tx is None:
                tx, ty = ax, ay
            elif tx == ax and (ty + ay) % p == 0:
                tx, ty = None, None  # vertical line, value in F_p: skip
            else:
                lam = (ty - ay) * pow(tx - ax, -1, p) % p
                la = (lam * (bx + tx) - ty) % p
                fa, fb = (fa * la - fb * by) % p, (fa * by + fb * la) % p
                tx, ty = _add_raw(p, tx, ty, ax, ay)
    return Fp2Element(fa, fb, p)


def _final_exponentiation(f: Fp2Element, params: CurveParams) -> Fp2Element:
    # (p^2 - 1)/q = (p - 1) * cofactor; x^(p-1) = conj(x)/x via Frobenius.
    g = f.conjugate() * f.inverse()
    return g**params.cofactor


# ---------------------------------------------------------------------------
# hashing to the subgroup


def _clear_cofactor(params: CurveParams, x: int, y: int) -> G1Point:
    px, py = _mul_raw(params.p, params.cofactor, x, y)
    return G1Point(params.p, px, py)


def _try_and_increment(data: bytes, params: CurveParams) -> G1Point:
    p = params.p
    for counter in range(HASH_TO_POINT_MAX_COUNTER):
        digest = hashlib.sha256(data + counter.to_bytes(4, "big")).digest()
        x = int.from_bytes(digest, "big") % p
        y = sqrt_mod((x * x * x + x) % p, p)
        if y is None:
            continue
        point = _clear_cofactor(params, x, y)
        if not point.is_identity:
            return point
    raise HashToPointFailed(f"no curve point found for {data!r}")


def hash_to_point(id_bytes: bytes, params: CurveParams) -> G1Point:
    """Map-to-point hash: SHA-256 try-and-increment, then cofactor clearing.

    Deterministic; the result is always a non-identity point of order q.
    Counts as one map-to-point execution.
    """
    meter.tally(meter.MAP_TO_POINT)
    return _try_and_increment(id_bytes, params)


# ---------------------------------------------------------------------------
# parameter generation


def _find_prime(bits: int, seed: bytes) -> int:
    """Deterministic prime of exactly `bits` bits from a seeded SHA-256 stream."""
    if bits < 2:
        raise ParamSearchFailed(f"cannot build a {bits}-bit prime")
    blocks = (bits + 255) // 256
    counter = 0
    while True:
        material = b"".join(
            hashlib.sha256(seed + b"|prime|" + (counter + i).to_bytes(8, "big")).digest()
            for i in range(blocks)
        )
        counter += blocks
        candidate = int.from_bytes(material, "big")
        candidate &= (1 << bits) - 1
        candidate |= (1 << (bits - 1)) | 1
        if is_prime(candidate):
            return candidate


def params_for_subgroup_order(
    q: int,
    seed: bytes,
    p_bits: int | None = None,
    r_limit: int = 1 << 22,
    security_label: str = "",
) -> CurveParams:
    """Build curve parameters around a given prime subgroup order q.

    Searches the smallest r with p = 12*q*r - 1 prime, p = 3 (mod 4) and
    q not dividing 12*r.  When p_bits is given, r starts at the least value
    putting p at exactly p_bits bits and the search stays inside that window;
    r_limit then bounds the number of candidates tried, not r itself.
    """
    if not is_prime(q):
        raise ParamSearchFailed(f"subgroup order {q} is not prime")
    if p_bits is None:
        r_start, r_stop = 1, r_limit + 1
    else:
        r_start = ((1 << (p_bits - 1)) + 1 + 12 * q - 1) // (12 * q)
        r_stop = min(((1 << p_bits) + 1) // (12 * q) + 1, r_start + r_limit)
        if r_start >= r_stop:
            raise ParamSearchFailed(f"no {p_bits}-bit p of the form 12*q*r - 1 for this q")
    for r in range(r_start, r_stop):
        p = 12 * q * r - 1
        if p % 4 != 3 or (12 * r) % q == 0:
            continue
        if p_bits is not None and p.bit_length() != p_bits:
            continue
        if is_prime(p):
            params = CurveParams(
                p=p,
                q=q,
                cofactor=12 * r,
                gx=0,
                gy=0,
                security_label=security_label or f"q={q.bit_length()}b,p={p.bit_length()}b",
            )
            generator = _try_and_increment(b"generator|" + seed, params)
            return CurveParams(
                p=p,
                q=q,
                cofactor=12 * r,
                gx=generator.x,
                gy=generator.y,
                security_label=params.security_label,
            )
    raise ParamSearchFailed(f"no prime p = 12*q*r - 1 found for q = {q} within the search bound")


def generate_params(
    q_bits: int,
    seed: bytes,
    p_bits: int | None = None,
    security_label: str = "",
) -> CurveParams:
    """Deterministically derive a full parameter set from a seed.

    Picks a q_bits-bit prime q from the seeded stream, then delegates to
    `params_for_subgroup_order`.
    """
    if q_bits < 4:
        raise ParamSearchFailed("q_bits must be at least 4")
    q = _find_prime(q_bits, seed)
    return params_for_subgroup_order(q, seed, p_bits=p_bits, security_label=security_label)


# ---------------------------------------------------------------------------
# encodings


def decode_point(data: bytes, params: CurveParams, offset: int = 0) -> tuple[G1Point, int]:
    """Parse one point, returning (point, bytes consumed).

    Validates curve and order-q subgroup membership; any malformation raises
    DecodeError carrying the offending byte position.
    """
    if len(data) == 0:
        raise DecodeError("empty point encoding", offset)
    tag = data[0]
    if tag == 0x00:
        return G1Point.identity(params.p), 1
    if tag != 0x04:
        raise DecodeError(f"unknown point tag {tag:#04x}", offset)
    w = byte_width(params.p)
    if len(data) < 1 + 2 * w:
        raise DecodeError("truncated point encoding", offset + len(data))
    x = int.from_bytes(data[1 : 1 + w], "big")
    y = int.from_bytes(data[1 + w : 1 + 2 * w], "big")
    if x >= params.p:
        raise DecodeError("x coordinate out of range", offset + 1)
    if y >= params.p:
        raise DecodeError("y coordinate out of range", offset + 1 + w)
    point = G1Point(params.p, x, y)
    if not point.on_curve():
        raise DecodeError("coordinates not on the curve", offset + 1)
    if _mul_raw(params.p, params.q, x, y)[0] is not None:
        raise DecodeError("point outside the order-q subgroup", offset + 1)
    return point, 1 + 2 * w


def decode_gt(data: bytes, params: CurveParams, offset: int = 0) -> tuple[GTElement, int]:
    """Parse one pairing value (a || b); validates subgroup membership."""
    w = byte_width(params.p)
    if len(data) < 2 * w:
        raise DecodeError("truncated pairing-value encoding", offset + len(data))
    a = int.from_bytes(data[:w], "big")
    b = int.from_bytes(data[w : 2 * w], "big")
    if a >= params.p:
        raise DecodeError("real component out of range", offset)
    if b >= params.p:
        raise DecodeError("imaginary component out of range", offset + w)
    value = Fp2Element(a, b, params.p)
    if value.is_zero() or not (value**params.q).is_one():
        raise DecodeError("value outside the order-q subgroup of F_p2^*", offset)
    return GTElement(value), 2 * w
