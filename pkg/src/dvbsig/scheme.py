"""The five algorithms of the identity-based strong designated verifier blind
signature scheme: PKG setup, identity key extraction, the four-step
interactive signing (commit / blind / respond / unblind), designated
verification, and the verifier-side transcript simulation.

All algorithms are pure functions of their inputs plus an explicit rng
handle.  Group math goes through the instrumented operations in `curve`, so
a measured region sees exactly the protocol-level operation counts.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .algebra import byte_width, encode_int, mod_inv, sample_unit
from .curve import (
    CurveParams,
    G1Point,
    GTElement,
    _mul_raw,
    decode_gt,
    decode_point,
    hash_to_point,
    point_add,
    scalar_mul,
    tate_pairing,
)
from .errors import DecodeError, InvalidPoint

H1_NAME = "sha256-try-increment"
H2_NAME = "sha256-mod-q-star"


@dataclass(frozen=True)
class SystemParams:
    """Public output of setup: pairing context plus the PKG public key."""

    curve: CurveParams
    p_pub: G1Point
    hash_h1: str = H1_NAME
    hash_h2: str = H2_NAME


@dataclass(frozen=True)
class MasterSecret:
    """PKG master key s; p_pub = s * generator."""

    s: int


@dataclass(frozen=True)
class KeyPair:
    """Identity key material: public = H1(identity), secret = s * public."""

    identity: bytes
    public: G1Point
    secret: G1Point


@dataclass(frozen=True)
class Commitment:
    """Signer's first move U = r * Q_signer."""

    point: G1Point


@dataclass(frozen=True)
class SignerState:
    """Signer's per-session secret: the commitment exponent r."""

    r: int
    key: KeyPair


@dataclass(frozen=True)
class BlindedChallenge:
    """User's second move h1 = x^-1 * h + y (mod q)."""

    value: int


@dataclass(frozen=True)
class BlindState:
    """User-side session secrets: blinding pair (x, y), the blinded
    commitment, and the challenge hash they produced."""

    x: int
    y: int
    u_prime: G1Point
    h: int
    message: bytes


@dataclass(frozen=True)
class Response:
    """Signer's third move V = (r + h1) * S_signer."""

    point: G1Point

    @property
    def degenerate(self) -> bool:
        """True when r + h1 = 0 (mod q) collapsed V to the identity."""
        return self.point.is_identity


@dataclass(frozen=True)
class Signature:
    """Final signature (U', sigma) with sigma = e(x*V, Q_verifier)."""

    u_prime: G1Point
    sigma: GTElement


def setup(curve: CurveParams, rng) -> tuple[SystemParams, MasterSecret]:
    """PKG setup: draw the master key s and publish p_pub = s * P."""
    s = sample_unit(rng, curve.q)
    p_pub = scalar_mul(s, curve.generator)
    return SystemParams(curve=curve, p_pub=p_pub), MasterSecret(s=s)


def keygen(system: SystemParams, msk: MasterSecret, identity: bytes) -> KeyPair:
    """Extract the key pair for an identity: Q = H1(id), S = s * Q."""
    public = hash_to_point(identity, system.curve)
    secret = scalar_mul(msk.s, public)
    return KeyPair(identity=identity, public=public, secret=secret)


def h2(message: bytes, u_prime: G1Point, q: int) -> int:
    """Challenge hash into Z_q^*: SHA-256(message || U') mod (q-1), plus 1.

    The mod-(q-1)-plus-1 fold guarantees a nonzero result; its bias is below
    2^-96 once q exceeds 160 bits.
    """
    digest = hashlib.sha256(message + u_prime.encode()).digest()
    return int.from_bytes(digest, "big") % (q - 1) + 1


def sign_commit(system: SystemParams, signer: KeyPair, rng) -> tuple[SignerState, Commitment]:
    """Signer's opening move: r random in Z_q^*, U = r * Q_signer."""
    r = sample_unit(rng, system.curve.q)
    u = scalar_mul(r, signer.public)
    return SignerState(r=r, key=signer), Commitment(point=u)


def blind(
    system: SystemParams,
    message: bytes,
    commitment: Commitment,
    signer_public: G1Point,
    rng,
) -> tuple[BlindState, BlindedChallenge]:
    """User's blinding move.

    Draws blinding factors x, y in Z_q^*, then
        U' = x*U + (x*y)*Q_signer,  h = H2(message, U'),  h1 = x^-1*h + y.
    """
    point = commitment.point
    if not point.on_curve():
        raise InvalidPoint("commitment is not a curve point")
    if not point.is_identity and _mul_raw(point.p, system.curve.q, point.x, point.y)[0] is not None:
        raise InvalidPoint("commitment is outside the order-q subgroup")
    q = system.curve.q
    x = sample_unit(rng, q)
    y = sample_unit(rng, q)
    u_prime = point_add(scalar_mul(x, commitment.point), scalar_mul(x * y % q, signer_public))
    h = h2(message, u_prime, q)
    h1 = (mod_inv(x, q) * h + y) % q
    state = BlindState(x=x, y=y, u_prime=u_prime, h=h, message=message)
    return state, BlindedChallenge(value=h1)


def sign_respond(system: SystemParams, state: SignerState, challenge: BlindedChallenge) -> Response:
    """Signer's closing move V = (r + h1) * S_signer.

    If r + h1 = 0 (mod q) the result is the identity; it is returned as-is
    (flagged via Response.degenerate) and the session layer decides whether
    to rerun the protocol.
    """
    q = system.curve.q
    v = scalar_mul((state.r + challenge.value) % q, state.key.secret)
    return Response(point=v)


def unblind(
    system: SystemParams,
    state: BlindState,
    response: Response,
    verifier_public: G1Point,
) -> Signature:
    """User's unblinding: V' = x * V, sigma = e(V', Q_verifier)."""
    if not response.point.on_curve():
        raise InvalidPoint("response is not a curve point")
    v_prime = scalar_mul(state.x, response.point)
    sigma = tate_pairing(v_prime, verifier_public, system.curve)
    return Signature(u_prime=state.u_prime, sigma=sigma)


def verify(
    system: SystemParams,
    verifier_secret: G1Point,
    signer_public: G1Point,
    message: bytes,
    signature: Signature,
) -> bool:
    """Designated verification: sigma == e(U' + h*Q_signer, S_verifier).

    Only the holder of the designated verifier's private key can evaluate
    the right-hand side.
    """
    h = h2(message, signature.u_prime, system.curve.q)
    lhs = point_add(signature.u_prime, scalar_mul(h, signer_public))
    return tate_pairing(lhs, verifier_secret, system.curve) == signature.sigma


def verify_with_identity(
    system: SystemParams,
    verifier_secret: G1Point,
    signer_identity: bytes,
    message: bytes,
    signature: Signature,
) -> bool:
    """Verification entry point that rederives Q_signer = H1(identity)."""
    signer_public = hash_to_point(signer_identity, system.curve)
    return verify(system, verifier_secret, signer_public, message, signature)


def simulate(
    system: SystemParams,
    signer_public: G1Point,
    verifier_secret: G1Point,
    message: bytes,
    rng,
) -> Signature:
    """Verifier-side transcript simulation.

    Runs the same arithmetic as a real session but with the signer's public
    key in place of the private one, compensating with the verifier's secret
    inside the pairing:  e(x(r+h1) * Q_s, S_v) = e(x(r+h1) * S_s, Q_v).
    Under a matched random tape the output is bit-identical to a real run.
    """
    q = system.curve.q
    r = sample_unit(rng, q)
    x = sample_unit(rng, q)
    y = sample_unit(rng, q)
    u = scalar_mul(r, signer_public)
    u_prime = point_add(scalar_mul(x, u), scalar_mul(x * y % q, signer_public))
    h = h2(message, u_prime, q)
    h1 = (mod_inv(x, q) * h + y) % q
    v = scalar_mul((r + h1) % q, signer_public)
    v_prime = scalar_mul(x, v)
    sigma = tate_pairing(v_prime, verifier_secret, system.curve)
    return Signature(u_prime=u_prime, sigma=sigma)


# ---------------------------------------------------------------------------
# signature serialization


def encode_signature(signature: Signature) -> bytes:
    """Binary form: point encoding of U' followed by the pairing value."""
    return signature.u_prime.encode() + signature.sigma.encode()


def decode_signature(data: bytes, params: CurveParams) -> Signature:
    """Strict inverse of encode_signature; trailing bytes are an error."""
    u_prime, consumed = decode_point(data, params)
    sigma, used = decode_gt(data[consumed:], params, offset=consumed)
    if consumed + used != len(data):
        raise DecodeError("trailing bytes after signature", consumed + used)
    return Signature(u_prime=u_prime, sigma=sigma)


def signature_to_text(signature: Signature) -> str:
    """Key-value text envelope with hex payloads (CLI interchange form)."""
    return (
        f"u_prime = {signature.u_prime.encode().hex()}\n"
        f"sigma = {signature.sigma.encode().hex()}\n"
    )


def signature_from_text(text: str, params: CurveParams) -> Signature:
    fields: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DecodeError(f"malformed envelope line: {line!r}")
        fields[key.strip()] = value.strip()
    try:
        u_hex, s_hex = fields["u_prime"], fields["sigma"]
    except KeyError as exc:
        raise DecodeError(f"envelope missing field {exc}") from exc
    try:
        raw = bytes.fromhex(u_hex) + bytes.fromhex(s_hex)
    except ValueError as exc:
        raise DecodeError(f"bad hex payload: {exc}") from exc
    return decode_signature(raw, params)


def scalar_width(params: CurveParams) -> int:
    """Serialized width of Z_q scalars (protocol challenge values)."""
    return byte_width(params.q)


def encode_scalar(value: int, params: CurveParams) -> bytes:
    return encode_int(value, params.q)
