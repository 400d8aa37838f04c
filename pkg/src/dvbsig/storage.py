"""On-disk workspace: parameter, system, master-key, identity-key and
signature files, plus the session directory layout used by the step-wise CLI.

All public artifacts are key-value text with decimal integers; secrets are
the same format in files chmodded to owner-only (no encryption at rest, by
design: this is a research artifact).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .curve import CurveParams, G1Point, hash_to_point
from .errors import DecodeError
from .scheme import (
    KeyPair,
    MasterSecret,
    Signature,
    SystemParams,
    decode_signature,
    encode_signature,
)


def parse_kv(text: str, path: str = "<text>") -> dict[str, str]:
    """Parse `key = value` lines; blank lines and #-comments are skipped."""
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DecodeError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        fields[key.strip()] = value.strip()
    return fields


def _kv_int(fields: dict[str, str], key: str, path: str) -> int:
    try:
        return int(fields[key])
    except KeyError:
        raise DecodeError(f"{path}: missing field {key!r}") from None
    except ValueError:
        raise DecodeError(f"{path}: field {key!r} is not a decimal integer") from None


def _write_private(path: Path, text: str) -> None:
    path.write_text(text)
    try:
        os.chmod(path, 0o600)
    except OSError:
        pass


# ---------------------------------------------------------------------------
# curve / system parameter files


def save_curve_params(params: CurveParams, path: Path) -> None:
    path.write_text(
        f"p = {params.p}\n"
        f"q = {params.q}\n"
        f"cofactor = {params.cofactor}\n"
        f"Px = {params.gx}\n"
        f"Py = {params.gy}\n"
        f"security_label = {params.security_label}\n"
    )


def load_curve_params(path: Path) -> CurveParams:
    fields = parse_kv(path.read_text(), str(path))
    params = CurveParams(
        p=_kv_int(fields, "p", str(path)),
        q=_kv_int(fields, "q", str(path)),
        cofactor=_kv_int(fields, "cofactor", str(path)),
        gx=_kv_int(fields, "Px", str(path)),
        gy=_kv_int(fields, "Py", str(path)),
        security_label=fields.get("security_label", ""),
    )
    params.validate()
    return params


def save_system_params(system: SystemParams, path: Path) -> None:
    c = system.curve
    path.write_text(
        f"p = {c.p}\n"
        f"q = {c.q}\n"
        f"cofactor = {c.cofactor}\n"
        f"Px = {c.gx}\n"
        f"Py = {c.gy}\n"
        f"security_label = {c.security_label}\n"
        f"Ppubx = {system.p_pub.x}\n"
        f"Ppuby = {system.p_pub.y}\n"
        f"hash_h1 = {system.hash_h1}\n"
        f"hash_h2 = {system.hash_h2}\n"
    )


def load_system_params(path: Path) -> SystemParams:
    fields = parse_kv(path.read_text(), str(path))
    curve = CurveParams(
        p=_kv_int(fields, "p", str(path)),
        q=_kv_int(fields, "q", str(path)),
        cofactor=_kv_int(fields, "cofactor", str(path)),
        gx=_kv_int(fields, "Px", str(path)),
        gy=_kv_int(fields, "Py", str(path)),
        security_label=fields.get("security_label", ""),
    )
    curve.validate()
    p_pub = G1Point(
        curve.p, _kv_int(fields, "Ppubx", str(path)), _kv_int(fields, "Ppuby", str(path))
    )
    if not p_pub.on_curve():
        raise DecodeError(f"{path}: system public key is not on the curve")
    return SystemParams(
        curve=curve,
        p_pub=p_pub,
        hash_h1=fields.get("hash_h1", ""),
        hash_h2=fields.get("hash_h2", ""),
    )


# ---------------------------------------------------------------------------
# key material


def save_master_secret(msk: MasterSecret, path: Path) -> None:
    _write_private(path, f"s = {msk.s}\n")


def load_master_secret(path: Path) -> MasterSecret:
    fields = parse_kv(path.read_text(), str(path))
    return MasterSecret(s=_kv_int(fields, "s", str(path)))


def save_identity_key(key: KeyPair, path: Path) -> None:
    _write_private(
        path,
        f"identity = {key.identity.decode('utf-8')}\n"
        f"Sx = {key.secret.x}\n"
        f"Sy = {key.secret.y}\n",
    )


def load_identity_key(path: Path, system: SystemParams) -> KeyPair:
    fields = parse_kv(path.read_text(), str(path))
    if "identity" not in fields:
        raise DecodeError(f"{path}: missing field 'identity'")
    identity = fields["identity"].encode("utf-8")
    secret = G1Point(
        system.curve.p, _kv_int(fields, "Sx", str(path)), _kv_int(fields, "Sy", str(path))
    )
    if not secret.on_curve():
        raise DecodeError(f"{path}: secret key point is not on the curve")
    public = hash_to_point(identity, system.curve)
    return KeyPair(identity=identity, public=public, secret=secret)


# ---------------------------------------------------------------------------
# signatures


def save_signature(signature: Signature, path: Path, text: bool = False) -> None:
    if text:
        from .scheme import signature_to_text

        path.write_text(signature_to_text(signature))
    else:
        path.write_bytes(encode_signature(signature))


def load_signature(path: Path, system: SystemParams) -> Signature:
    data = path.read_bytes()
    if data[:1] in (b"\x00", b"\x04"):
        return decode_signature(data, system.curve)
    from .scheme import signature_from_text

    return signature_from_text(data.decode("utf-8", errors="strict"), system.curve)


# ---------------------------------------------------------------------------
# workspace layout


@dataclass(frozen=True)
class Workspace:
    """Directory layout for the CLI: public parameters, the master secret,
    per-identity keys, step-wise session directories and the transcript log."""

    root: Path

    @property
    def params_file(self) -> Path:
        return self.root / "params.txt"

    @property
    def system_file(self) -> Path:
        return self.root / "system.txt"

    @property
    def master_file(self) -> Path:
        return self.root / "master.key"

    @property
    def keys_dir(self) -> Path:
        return self.root / "keys"

    @property
    def sessions_dir(self) -> Path:
        return self.root / "sessions"

    @property
    def transcript_log(self) -> Path:
        return self.root / "transcripts.log"

    def key_file(self, identity: str) -> Path:
        return self.keys_dir / f"{identity}.key"

    def session_dir(self, name: str) -> Path:
        return self.sessions_dir / name

    def ensure(self) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        self.keys_dir.mkdir(exist_ok=True)
        self.sessions_dir.mkdir(exist_ok=True)
