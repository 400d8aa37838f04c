"""Command-line driver for the whole lifecycle.

Exit codes: 0 success, 1 verification/property failure, 2 usage error
(bad flags, missing files, out-of-order protocol steps), 3 crypto or
decode error.

All randomness honors --seed: when given, every draw comes from the
SHA-256(seed || counter) stream and timestamps come from a logical clock,
so reruns in a fresh workspace are bit-identical.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import analysis, scheme, session, storage
from .curve import decode_point, generate_params, hash_to_point, params_for_subgroup_order
from .errors import DvbsigError
from .rng import SeededRng, SystemRng
from .scheme import KeyPair
from .session import FileTranscriptStore, LogicalClock, RetryPolicy

IDENTITY_RE = re.compile(r"^[A-Za-z0-9_.-]+$")


class CommandLineError(Exception):
    """Usage-level failure: exits 2."""


def _rng_and_clock(seed: str | None):
    if seed is None:
        return SystemRng(), None
    return SeededRng(seed), LogicalClock()


def _identity(name: str) -> str:
    if not IDENTITY_RE.match(name):
        raise CommandLineError(f"identity {name!r} may only contain [A-Za-z0-9_.-]")
    return name


def _require(path: Path, what: str) -> Path:
    if not path.exists():
        raise CommandLineError(f"{what} not found: {path}")
    return path


def _fresh(path: Path, what: str) -> Path:
    if path.exists():
        raise CommandLineError(f"{what} already exists: {path}")
    return path


def _message_bytes(args) -> bytes:
    if getattr(args, "asset_statement", None) is not None:
        tag, sep, threshold = args.asset_statement.partition(":")
        if not sep or not tag or not threshold:
            raise CommandLineError("--asset-statement must look like <address-tag>:<threshold>")
        return f"POA|v1|{tag}|{threshold}".encode("utf-8")
    if getattr(args, "message_file", None) is not None:
        return Path(_require(Path(args.message_file), "message file")).read_bytes()
    raise CommandLineError("one of --message-file / --asset-statement is required")


def _load_system(ws: storage.Workspace) -> scheme.SystemParams:
    return storage.load_system_params(_require(ws.system_file, "system parameters (run setup)"))


def _load_key(ws: storage.Workspace, system, identity: str) -> KeyPair:
    return storage.load_identity_key(
        _require(ws.key_file(identity), f"key for {identity!r} (run keygen)"), system
    )


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CommandLineError(f"not a rational number: {text!r} ({exc})") from exc


def _fmt(value: Fraction) -> str:
    return f"{value} ({float(value):.4f})"


# ---------------------------------------------------------------------------
# subcommand implementations


def cmd_params_gen(ws: storage.Workspace, args) -> int:
    seed = (args.seed or "dvbsig-params").encode("utf-8")
    if args.q_value is not None:
        params = params_for_subgroup_order(
            int(args.q_value), seed, p_bits=args.p_bits, security_label=args.label or ""
        )
    else:
        if args.q_bits is None:
            raise CommandLineError("one of --q-bits / --q-value is required")
        params = generate_params(
            args.q_bits, seed, p_bits=args.p_bits, security_label=args.label or ""
        )
    ws.ensure()
    out = Path(args.out) if args.out else ws.params_file
    storage.save_curve_params(params, out)
    print(f"wrote {out}")
    print(f"p = {params.p}")
    print(f"q = {params.q}")
    print(f"cofactor = {params.cofactor}")
    return 0


def cmd_setup(ws: storage.Workspace, args) -> int:
    params = storage.load_curve_params(_require(ws.params_file, "params file (run params gen)"))
    rng, _ = _rng_and_clock(args.seed)
    system, msk = scheme.setup(params, rng)
    ws.ensure()
    storage.save_system_params(system, ws.system_file)
    storage.save_master_secret(msk, ws.master_file)
    print(f"wrote {ws.system_file}")
    print(f"wrote {ws.master_file} (keep this file secret; it is stored unencrypted)")
    return 0


def cmd_keygen(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    msk = storage.load_master_secret(_require(ws.master_file, "master secret (run setup)"))
    identity = _identity(args.id)
    key = scheme.keygen(system, msk, identity.encode("utf-8"))
    ws.ensure()
    storage.save_identity_key(key, ws.key_file(identity))
    print(f"wrote {ws.key_file(identity)}")
    return 0


def cmd_sign_run(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    signer = _load_key(ws, system, _identity(args.signer))
    verifier = _identity(args.verifier)
    verifier_public = hash_to_point(verifier.encode("utf-8"), system.curve)
    message = _message_bytes(args)
    rng, clock = _rng_and_clock(args.seed)
    store = FileTranscriptStore(ws.transcript_log, system.curve)
    outcome = session.run_local_session(
        system,
        signer,
        message,
        verifier_public,
        rng,
        policy=RetryPolicy(max_retries=args.max_retries),
        store=store,
        clock=clock,
    )
    if not outcome.ok:
        print(f"ABORT {outcome.abort_reason}", file=sys.stderr)
        return 3
    out = Path(args.out) if args.out else ws.root / "sig.bin"
    storage.save_signature(outcome.signature, out, text=args.format == "text")
    print(f"wrote {out} (retries: {outcome.retries})")
    return 0


def _session_paths(ws: storage.Workspace, name: str):
    sdir = ws.session_dir(_identity(name))
    return sdir, sdir / "commit.frame", sdir / "challenge.frame", sdir / "response.frame"


def cmd_sign_commit(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    signer = _load_key(ws, system, _identity(args.signer))
    sdir, commit_path, _, _ = _session_paths(ws, args.session)
    sdir.mkdir(parents=True, exist_ok=True)
    _fresh(commit_path, "commit artifact")
    rng, clock = _rng_and_clock(args.seed)
    session_id = rng.next_bytes(session.SESSION_ID_BYTES)
    state, commitment = scheme.sign_commit(system, signer, rng)
    commit_path.write_bytes(
        session.encode_message(session.Commit(commitment.point), system.curve)
    )
    started = (clock or session._now_ms)()
    (sdir / "signer.state").write_text(
        f"session_id = {session_id.hex()}\n"
        f"signer = {args.signer}\n"
        f"r = {state.r}\n"
        f"started_ms = {started}\n"
    )
    print(f"wrote {commit_path}")
    return 0


def cmd_sign_blind(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    sdir, commit_path, challenge_path, _ = _session_paths(ws, args.session)
    _require(commit_path, "commit artifact (run sign commit first)")
    _fresh(challenge_path, "challenge artifact")
    message = _message_bytes(args)
    commit = session.decode_message(commit_path.read_bytes(), system.curve)
    if not isinstance(commit, session.Commit):
        raise CommandLineError(f"{commit_path} does not hold a commitment")
    signer_public = hash_to_point(_identity(args.signer).encode("utf-8"), system.curve)
    rng, _ = _rng_and_clock(args.seed)
    state, challenge = scheme.blind(
        system, message, scheme.Commitment(commit.point), signer_public, rng
    )
    challenge_path.write_bytes(
        session.encode_message(session.Challenge(challenge.value), system.curve)
    )
    (sdir / "user.state").write_text(
        f"x = {state.x}\n"
        f"y = {state.y}\n"
        f"h = {state.h}\n"
        f"u_prime = {state.u_prime.encode().hex()}\n"
    )
    print(f"wrote {challenge_path}")
    return 0


def cmd_sign_respond(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    sdir, commit_path, challenge_path, response_path = _session_paths(ws, args.session)
    _require(commit_path, "commit artifact (run sign commit first)")
    _require(challenge_path, "challenge artifact (run sign blind first)")
    _fresh(response_path, "response artifact")
    state_fields = storage.parse_kv((_require(sdir / "signer.state", "signer state")).read_text())
    signer = _load_key(ws, system, _identity(state_fields["signer"]))
    challenge = session.decode_message(challenge_path.read_bytes(), system.curve)
    if not isinstance(challenge, session.Challenge):
        raise CommandLineError(f"{challenge_path} does not hold a challenge")
    commit = session.decode_message(commit_path.read_bytes(), system.curve)
    if not isinstance(commit, session.Commit):
        raise CommandLineError(f"{commit_path} does not hold a commitment")
    response = scheme.sign_respond(
        system,
        scheme.SignerState(r=int(state_fields["r"]), key=signer),
        scheme.BlindedChallenge(challenge.value),
    )
    response_path.write_bytes(
        session.encode_message(session.Respond(response.point), system.curve)
    )
    started = int(state_fields.get("started_ms", "0"))
    finished = started + 1 if args.seed else session._now_ms()
    store = FileTranscriptStore(ws.transcript_log, system.curve)
    store.record(
        session.Transcript(
            session_id=bytes.fromhex(state_fields["session_id"]),
            signer_identity=state_fields["signer"].encode("utf-8"),
            commitment=commit.point,
            challenge=challenge.value,
            response=response.point,
            started_ms=started,
            finished_ms=finished,
        )
    )
    if response.degenerate:
        print(f"wrote {response_path} (degenerate response; rerun the session)")
    else:
        print(f"wrote {response_path}")
    return 0


def cmd_sign_unblind(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    sdir, _, _, response_path = _session_paths(ws, args.session)
    _require(response_path, "response artifact (run sign respond first)")
    state_path = _require(sdir / "user.state", "user state (run sign blind first)")
    fields = storage.parse_kv(state_path.read_text(), str(state_path))
    u_prime, _ = decode_point(bytes.fromhex(fields["u_prime"]), system.curve)
    blind_state = scheme.BlindState(
        x=int(fields["x"]), y=int(fields["y"]), u_prime=u_prime, h=int(fields["h"]), message=b""
    )
    respond = session.decode_message(response_path.read_bytes(), system.curve)
    if not isinstance(respond, session.Respond):
        raise CommandLineError(f"{response_path} does not hold a response")
    if respond.point.is_identity:
        print("ABORT degenerate (response is the identity; rerun the session)", file=sys.stderr)
        return 3
    verifier_public = hash_to_point(_identity(args.verifier).encode("utf-8"), system.curve)
    signature = scheme.unblind(
        system, blind_state, scheme.Response(respond.point), verifier_public
    )
    out = Path(args.out) if args.out else sdir / "sig.bin"
    storage.save_signature(signature, out, text=args.format == "text")
    print(f"wrote {out}")
    return 0


def cmd_verify(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    verifier = _load_key(ws, system, _identity(args.verifier))
    message = _message_bytes(args)
    signature = storage.load_signature(_require(Path(args.sig), "signature file"), system)
    ok = scheme.verify_with_identity(
        system, verifier.secret, _identity(args.signer).encode("utf-8"), message, signature
    )
    if ok:
        print("VALID")
        return 0
    print("INVALID")
    return 1


def cmd_simulate(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    verifier = _load_key(ws, system, _identity(args.verifier))
    signer_public = hash_to_point(_identity(args.signer).encode("utf-8"), system.curve)
    message = _message_bytes(args)
    rng, _ = _rng_and_clock(args.seed)
    signature = scheme.simulate(system, signer_public, verifier.secret, message, rng)
    out = Path(args.out) if args.out else ws.root / "sig.bin"
    storage.save_signature(signature, out, text=args.format == "text")
    print(f"wrote {out}")
    return 0


def cmd_blindness_demo(ws: storage.Workspace, args) -> int:
    system = _load_system(ws)
    if system.curve.q > analysis.DLOG_ORDER_LIMIT:
        raise CommandLineError(
            "blindness-demo needs toy-scale parameters (witness extraction brute-forces"
            f" discrete logs; q = {system.curve.q} is too large)"
        )
    msk = storage.load_master_secret(_require(ws.master_file, "master secret (run setup)"))
    signer = scheme.keygen(system, msk, _identity(args.signer).encode("utf-8"))
    verifier = scheme.keygen(system, msk, _identity(args.verifier).encode("utf-8"))
    rng, clock = _rng_and_clock(args.seed)
    messages = [f"demo message {i}".encode("utf-8") for i in range(args.sessions)]
    records = analysis.run_blind_sessions(
        system, signer, verifier.public, messages, rng, clock=clock
    )
    failures = 0
    for i, rec_t in enumerate(records):
        for j, rec_s in enumerate(records):
            witness = analysis.extract_blinding_witness(
                system,
                rec_t.transcript,
                rec_s.signature,
                rec_s.message,
                signer.public,
                verifier.public,
                verifier.secret,
            )
            if witness is None:
                print(f"pair ({i},{j}): inconsistent")
                failures += 1
            else:
                x, y = witness
                exact = " (true factors)" if (i == j and (x, y) == (rec_s.x, rec_s.y)) else ""
                print(f"pair ({i},{j}): x = {x}, y = {y}{exact}")
    if failures:
        print(f"FAILED: {failures} cross pairs had no blinding witness", file=sys.stderr)
        return 1
    print(
        f"all {len(records) ** 2} transcript x signature pairs admit blinding factors;"
        " the signer cannot link transcripts to signatures"
    )
    return 0


def _load_costs(args) -> analysis.OpCosts:
    if getattr(args, "costs", None) is None:
        return analysis.OpCosts.reference()
    fields = storage.parse_kv(Path(_require(Path(args.costs), "costs file")).read_text(), args.costs)
    known = {f: _fraction(v) for f, v in fields.items()}
    bad = set(known) - {
        "g1_scalar_mul", "g2_scalar_mul", "g1_group_op", "g2_group_op",
        "pairing", "map_to_point", "g2_exp",
    }
    if bad:
        raise CommandLineError(f"unknown cost fields: {sorted(bad)}")
    return analysis.OpCosts(**known)


def cmd_analyze_bounds(ws: storage.Workspace, args) -> int:
    if args.budget_file is not None:
        fields = storage.parse_kv(
            Path(_require(Path(args.budget_file), "budget file")).read_text(), args.budget_file
        )
        budget = analysis.QueryBudget(
            h1_queries=int(fields.get("qh1", 0)),
            h2_queries=int(fields.get("qh2", 0)),
            extract_queries=int(fields.get("qe", 0)),
            sign_queries=int(fields.get("qs", 0)),
            verify_queries=int(fields.get("qv", 0)),
            advantage=_fraction(fields.get("eps", "0")),
            runtime=_fraction(fields.get("t", "0")),
        )
        group_order = int(fields.get("q", args.q))
    else:
        budget = analysis.QueryBudget(
            h1_queries=args.qh1,
            h2_queries=args.qh2,
            extract_queries=args.qe,
            sign_queries=args.qs,
            verify_queries=args.qv,
            advantage=_fraction(args.eps),
            runtime=_fraction(args.t),
        )
        group_order = args.q
    costs = _load_costs(args)
    forge = analysis.unforgeability_bound(budget, costs, group_order)
    dver = analysis.unverifiability_bound(budget, costs, group_order)
    print("problem = computational-bilinear-dh")
    print(f"advantage = {_fmt(forge.advantage)}")
    print(f"runtime_ms = {_fmt(forge.runtime)}")
    print("problem = decisional-bilinear-dh")
    print(f"advantage = {_fmt(dver.advantage)}")
    print(f"runtime_ms = {_fmt(dver.runtime)}")
    return 0


def cmd_analyze_perf(ws: storage.Workspace, args) -> int:
    for entry in analysis.perf_report(_load_costs(args)):
        counts = entry.counts
        parts = [
            f"{n}*{kind}"
            for kind, n in (
                ("g1_scalar_mul", counts.g1_scalar_mul),
                ("map_to_point", counts.map_to_point),
                ("pairing", counts.pairing),
            )
            if n
        ]
        line = (
            f"scheme = {entry.scheme_name} | phase = {entry.phase}"
            f" | counts = {' + '.join(parts)}"
            f" | modeled_ms = {_fmt(entry.modeled_ms)}"
        )
        if entry.stated_ms is not None:
            line += f" | stated_ms = {_fmt(entry.stated_ms)}"
        if entry.discrepancy:
            diff = entry.stated_ms - entry.modeled_ms
            line += f" | DISCREPANCY: stated total exceeds its own counts by {_fmt(diff)}"
        print(line)
    return 0


def cmd_bench(ws: storage.Workspace, args) -> int:
    from .curve import scalar_mul, tate_pairing

    if ws.system_file.exists():
        system = _load_system(ws)
    else:
        params = params_for_subgroup_order(13, b"bench-toy")
        system, _ = scheme.setup(params, SeededRng("bench"))
        print("no workspace system; benchmarking built-in toy parameters")
    rng, _ = _rng_and_clock(args.seed or "bench")
    if ws.master_file.exists():
        msk = storage.load_master_secret(ws.master_file)
    else:
        from .algebra import sample_unit
        from .scheme import MasterSecret

        msk = MasterSecret(sample_unit(rng, system.curve.q))
    signer = scheme.keygen(system, msk, b"bench-signer")
    verifier = scheme.keygen(system, msk, b"bench-verifier")
    n = args.iterations

    def timed(label, fn):
        start = time.perf_counter()
        for _ in range(n):
            fn()
        elapsed = (time.perf_counter() - start) * 1000 / n
        print(f"{label} = {elapsed:.3f} ms")

    point = signer.public
    timed("g1_scalar_mul", lambda: scalar_mul(12345, point))
    timed("pairing", lambda: tate_pairing(point, verifier.public, system.curve))
    counter = iter(range(10**9))
    timed(
        "map_to_point",
        lambda: hash_to_point(f"bench{next(counter)}".encode(), system.curve),
    )
    timed(
        "sign_session",
        lambda: session.run_local_session(
            system, signer, b"bench message", verifier.public, rng
        ),
    )
    outcome = session.run_local_session(system, signer, b"bench message", verifier.public, rng)
    timed(
        "verify",
        lambda: scheme.verify_with_identity(
            system, verifier.secret, b"bench-signer", b"bench message", outcome.signature
        ),
    )
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvbsig",
        description="Identity-based strong designated verifier blind signatures",
    )
    parser.add_argument(
        "-w", "--workspace", default="dvbsig-workspace", help="workspace directory"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="curve parameter management")
    params_sub = p_params.add_subparsers(dest="subcommand", required=True)
    p_gen = params_sub.add_parser("gen", help="generate pairing parameters")
    p_gen.add_argument("--q-bits", type=int, help="bit length of the subgroup order")
    p_gen.add_argument("--q-value", help="explicit decimal subgroup order (overrides --q-bits)")
    p_gen.add_argument("--p-bits", type=int, help="target bit length for the field prime")
    p_gen.add_argument("--seed", help="derivation seed")
    p_gen.add_argument("--label", help="security label stored in the params file")
    p_gen.add_argument("--out", help="output file (default: workspace params.txt)")
    p_gen.set_defaults(func=cmd_params_gen)

    p_setup = sub.add_parser("setup", help="run PKG setup (master key + system params)")
    p_setup.add_argument("--seed")
    p_setup.set_defaults(func=cmd_setup)

    p_keygen = sub.add_parser("keygen", help="issue an identity key")
    p_keygen.add_argument("--id", required=True)
    p_keygen.set_defaults(func=cmd_keygen)

    p_sign = sub.add_parser("sign", help="interactive signing")
    sign_sub = p_sign.add_subparsers(dest="subcommand", required=True)

    def add_message_flags(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--message-file")
        group.add_argument("--asset-statement", help="<address-tag>:<threshold> sugar")

    p_run = sign_sub.add_parser("run", help="run a whole session locally")
    p_run.add_argument("--signer", required=True)
    p_run.add_argument("--verifier", required=True)
    add_message_flags(p_run)
    p_run.add_argument("--seed")
    p_run.add_argument("--out", help="signature output (default: workspace sig.bin)")
    p_run.add_argument("--max-retries", type=int, default=4)
    p_run.add_argument("--format", choices=["binary", "text"], default="binary")
    p_run.set_defaults(func=cmd_sign_run)

    p_commit = sign_sub.add_parser("commit", help="signer step 1: commitment")
    p_commit.add_argument("--signer", required=True)
    p_commit.add_argument("--session", required=True)
    p_commit.add_argument("--seed")
    p_commit.set_defaults(func=cmd_sign_commit)

    p_blind = sign_sub.add_parser("blind", help="user step 2: blinded challenge")
    p_blind.add_argument("--session", required=True)
    p_blind.add_argument("--signer", required=True)
    add_message_flags(p_blind)
    p_blind.add_argument("--seed")
    p_blind.set_defaults(func=cmd_sign_blind)

    p_respond = sign_sub.add_parser("respond", help="signer step 3: response")
    p_respond.add_argument("--session", required=True)
    p_respond.add_argument("--seed")
    p_respond.set_defaults(func=cmd_sign_respond)

    p_unblind = sign_sub.add_parser("unblind", help="user step 4: final signature")
    p_unblind.add_argument("--session", required=True)
    p_unblind.add_argument("--verifier", required=True)
    p_unblind.add_argument("--out")
    p_unblind.add_argument("--format", choices=["binary", "text"], default="binary")
    p_unblind.set_defaults(func=cmd_sign_unblind)

    p_verify = sub.add_parser("verify", help="designated verification")
    p_verify.add_argument("--signer", required=True)
    p_verify.add_argument("--verifier", required=True)
    add_message_flags(p_verify)
    p_verify.add_argument("--sig", required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_sim = sub.add_parser("simulate", help="verifier-side transcript simulation")
    p_sim.add_argument("--signer", required=True)
    p_sim.add_argument("--verifier", required=True)
    add_message_flags(p_sim)
    p_sim.add_argument("--seed")
    p_sim.add_argument("--out", help="signature output (default: workspace sig.bin)")
    p_sim.add_argument("--format", choices=["binary", "text"], default="binary")
    p_sim.set_defaults(func=cmd_simulate)

    p_demo = sub.add_parser("blindness-demo", help="cross-pair witness extraction demo")
    p_demo.add_argument("--sessions", type=int, default=4)
    p_demo.add_argument("--signer", default="demo-signer")
    p_demo.add_argument("--verifier", default="demo-verifier")
    p_demo.add_argument("--seed")
    p_demo.set_defaults(func=cmd_blindness_demo)

    p_analyze = sub.add_parser("analyze", help="reduction bounds and performance model")
    analyze_sub = p_analyze.add_subparsers(dest="subcommand", required=True)

    p_bounds = analyze_sub.add_parser("bounds", help="evaluate the reduction bounds")
    p_bounds.add_argument("--qh1", type=int, default=2)
    p_bounds.add_argument("--qh2", type=int, default=0)
    p_bounds.add_argument("--qe", type=int, default=0)
    p_bounds.add_argument("--qs", type=int, default=0)
    p_bounds.add_argument("--qv", type=int, default=0)
    p_bounds.add_argument("--eps", default="1")
    p_bounds.add_argument("--t", default="0")
    p_bounds.add_argument("--q", type=int, default=2**159 + 2**17 + 1, help="group order")
    p_bounds.add_argument("--budget-file", help="key-value file overriding the flags")
    p_bounds.add_argument("--costs", help="key-value unit-cost file")
    p_bounds.set_defaults(func=cmd_analyze_bounds)

    p_perf = analyze_sub.add_parser("perf", help="per-phase cost model")
    p_perf.add_argument("--costs")
    p_perf.set_defaults(func=cmd_analyze_perf)

    p_bench = sub.add_parser("bench", help="wall-clock micro-benchmarks")
    p_bench.add_argument("--seed")
    p_bench.add_argument("--iterations", type=int, default=20)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    ws = storage.Workspace(Path(args.workspace))
    try:
        return args.func(ws, args)
    except CommandLineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc}", file=sys.stderr)
        return 2
    except DvbsigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
