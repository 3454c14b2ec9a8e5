"""Command line interface.

Four subcommands over a tiny JSON input format:

    pcb analyze   <matrix.json>
    pcb snf       <matrix.json>
    pcb decompose <matrix.json> [--field symbolic|fp:<p>]
    pcb verify    <matrix.json> [--field q|fp:<p>] [--level identities|full]

Input files look like {"n": 4, "L": [[3,-1,-1,-1], ...]}. Output is a JSON
envelope on stdout; --pretty switches to human-readable tables. Exit codes:
0 success, 2 parse error, 3 validation error, 4 bad prime, 5 verification
failure. The PCB_SEED environment variable is reserved for future use; all
current commands are deterministic and ignore it.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Dict, List, Optional, Tuple

from . import __version__
from .core import (
    PcbMatrix,
    PcbValidationError,
    analyze,
    associated_vector,
    generators,
    grading_degree,
    mixedness_witness,
    normalized_snf,
    small_dim_decomposition,
    syzygy_identity_residual,
    syzygy_vectors,
    torsion_profile,
    validate,
    witness_identity_residual,
)
from .decomp import (
    BadPrime,
    HypothesisFailed,
    VerificationFailed,
    binomial_to_polynomial,
    component_count,
    embedded_component,
    enumerate_components,
    hull,
    pcb_ideal,
    realize_over_prime_field,
    socle_monomial,
    unmixedness_test,
    verify_full_decomposition,
)
from .intmat import determinant, lattice_contains, minors_gcd
from .oracle import DEGREVLEX, GF, QQ, Polynomial, colon, intersect, render, saturate


class SchemaError(ValueError):
    """The JSON parsed but does not describe an integer matrix."""


def _load_matrix(path: str) -> Tuple[PcbMatrix, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    doc = json.loads(raw.decode("utf-8"))
    if not isinstance(doc, dict) or "L" not in doc:
        raise SchemaError('input must be an object with an "L" matrix')
    rows = doc["L"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError('"L" must be a list of rows')
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise SchemaError(f"entry ({i + 1},{j + 1}) is not an integer")
    if "n" in doc and doc["n"] != len(rows):
        raise SchemaError(f'"n" is {doc["n"]} but "L" has {len(rows)} rows')
    return validate(rows), digest


def _parse_field(text: str, allow_symbolic: bool) -> Tuple[str, Optional[int]]:
    if allow_symbolic and text == "symbolic":
        return "symbolic", None
    if not allow_symbolic and text == "q":
        return "q", None
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise SchemaError(f"bad field spec {text!r}") from None
        return "fp", p
    raise SchemaError(f"bad field spec {text!r}")


def _cmd_analyze(P: PcbMatrix) -> Dict:
    result = analyze(P)
    tors = torsion_profile(P)
    counts = component_count(P)
    return {
        "n": result.n,
        "m": list(result.m),
        "d": result.d,
        "nu": list(result.nu),
        "invariant_factors": list(result.invariant_factors),
        "syzygy_exponents": [list(b) for b in result.syzygy_exponents],
        "hull_prime": result.hull_prime,
        "counts": {
            "isolated": counts.isolated,
            "embedded": counts.embedded,
            "at_most": counts.at_most,
            "assumption": counts.assumption,
        },
        "torsion": {
            "fitting_zero": tors.fitting_zero,
            "fitting_one": tors.fitting_one,
            "order": tors.order,
            "free_rank": tors.free_rank,
            "cyclic_factors": list(tors.cyclic_factors),
            "is_direct_summand": tors.is_direct_summand,
        },
    }


def _cmd_snf(P: PcbMatrix) -> Dict:
    snf = normalized_snf(P)
    _, _, nu = associated_vector(P)
    closed = small_dim_decomposition(P)
    payload = {
        "P": snf.P.to_rows(),
        "D": snf.D.to_rows(),
        "Q": snf.Q.to_rows(),
        "invariant_factors": list(snf.invariant_factors),
        "nu": list(nu),
        "closed_form": None,
    }
    if closed is not None:
        payload["closed_form"] = {
            "P": closed.P.to_rows(),
            "D": closed.D.to_rows(),
            "Q": closed.Q.to_rows(),
        }
    return payload


def _cmd_decompose(P: PcbMatrix, field_kind: str, p: Optional[int]) -> Dict:
    specs = enumerate_components(P)
    counts = component_count(P)
    payload: Dict = {
        "field": "symbolic" if field_kind == "symbolic" else f"fp:{p}",
        "root_order": specs[0].root_order,
        "counts": {
            "isolated": counts.isolated,
            "embedded": counts.embedded,
            "at_most": counts.at_most,
        },
    }
    components: List[Dict] = []
    if field_kind == "symbolic":
        for s in specs:
            components.append(
                {
                    "lambda_index": list(s.lambda_index),
                    "coeff_exponents": list(s.coeff_exponents),
                    "weights": list(s.weights),
                    "map": list(s.map_strings()),
                }
            )
        payload["components"] = components
        payload["embedded"] = (
            {"monomial": list(syzygy_vectors(P)[P.n - 1])} if P.n >= 4 else None
        )
        return payload
    realization = realize_over_prime_field(P, p)
    payload["p"] = realization.p
    payload["zeta"] = realization.zeta
    for s, kernel in zip(realization.specs, realization.kernels):
        components.append(
            {
                "lambda_index": list(s.lambda_index),
                "coeff_exponents": list(s.coeff_exponents),
                "weights": list(s.weights),
                "map": list(s.map_strings()),
                "kernel": [render(g, DEGREVLEX) for g in kernel.groebner()],
            }
        )
    payload["components"] = components
    if P.n >= 4:
        comp = embedded_component(P, GF(p), check=False)
        payload["embedded"] = {
            "monomial": list(syzygy_vectors(P)[P.n - 1]),
            "generators": [render(g, DEGREVLEX) for g in comp.groebner()],
        }
    else:
        payload["embedded"] = None
    return payload


def _identity_checks(P: PcbMatrix) -> List[Tuple[str, bool]]:
    checks: List[Tuple[str, bool]] = []
    n = P.n
    L = P.signed
    from .intmat import adjugate

    adj = adjugate(L)
    rows_equal = all(adj.row(i) == adj.row(0) for i in range(n))
    positive = all(v > 0 for v in adj.row(0))
    checks.append(("adjugate rows equal and positive", rows_equal and positive))
    m, d, nu = associated_vector(P)
    checks.append(("syzygy identity expands to zero", not syzygy_identity_residual(P)))
    if n >= 4:
        checks.append(("witness identity expands to zero", not witness_identity_residual(P)))
    homogeneous = all(
        grading_degree(nu, f.plus) == grading_degree(nu, f.minus) for f in generators(P)
    )
    checks.append(("generators homogeneous under the weight vector", homogeneous))
    snf = normalized_snf(P)
    checks.append(("transforms reproduce the diagonal", snf.P @ L @ snf.Q == snf.D))
    unimodular = abs(determinant(snf.P)) == 1 and abs(determinant(snf.Q)) == 1
    checks.append(("transforms unimodular", unimodular))
    factors = snf.invariant_factors
    chain = all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1))
    checks.append(("divisibility chain", chain))
    ladder = True
    prev = 1
    for t, ft in enumerate(factors, start=1):
        delta = minors_gcd(L, t)
        if delta != prev * ft:
            ladder = False
            break
        prev = delta
    checks.append(("minor gcds match the invariant factors", ladder))
    checks.append(("last transform row equals the weight vector", snf.P.row(n - 1) == nu))
    product = 1
    for f in factors:
        product *= f
    checks.append(("torsion order equals the weight gcd", product == d))
    closed = small_dim_decomposition(P)
    if closed is not None:
        checks.append(("closed-form diagonal agrees", closed.D == snf.D))
    return checks


def _full_checks(P: PcbMatrix, field) -> List[Tuple[str, bool]]:
    checks: List[Tuple[str, bool]] = []
    n = P.n
    I = pcb_ideal(P, field)
    J = pcb_ideal(P, field, omit_last=True)
    xb = socle_monomial(P, field)
    x1 = Polynomial.variable(field, n, 0)
    s_i = colon(I, xb)
    s_j = colon(J, xb)
    sat, steps = saturate(I, x1)
    checks.append(("colon by x^{b(n)} agrees from I and from J", s_i == s_j))
    checks.append(("saturation by x_1 agrees with the colon", sat == s_i))
    unmixed = unmixedness_test(P, field)
    checks.append(("unmixed exactly when n <= 3", unmixed == (n <= 3)))
    if n >= 4:
        g = binomial_to_polynomial(mixedness_witness(P), field, n)
        checks.append(("witness sits in the colon but not the ideal", s_i.contains(g) and not I.contains(g)))
    m, _, _ = associated_vector(P)
    lattice_ok = True
    for g in s_i.groebner():
        terms = sorted(g.terms.items(), key=lambda t: DEGREVLEX.key(t[0]), reverse=True)
        if len(terms) != 2 or terms[0][1] != field.one or terms[1][1] != field.neg(field.one):
            lattice_ok = False
            break
        u, v = terms[0][0], terms[1][0]
        member, _ = lattice_contains(P.signed, [a - b for a, b in zip(u, v)])
        if not member or g.substitute_powers(m).terms:
            lattice_ok = False
            break
    checks.append(("hull basis is lattice binomials killed by the weights", lattice_ok))
    if n >= 4:
        try:
            comp = embedded_component(P, field, check=True)
            checks.append(("embedded component verified", True))
            checks.append(("hull meets embedded component in the ideal", intersect(s_i, comp) == I))
        except HypothesisFailed:
            checks.append(("embedded component verified", False))
    return checks


def _cmd_verify(P: PcbMatrix, field_kind: str, p: Optional[int], level: str) -> Dict:
    checks = _identity_checks(P)
    if level == "full":
        if field_kind == "fp":
            r = normalized_snf(P).invariant_factors[-1]
            good_char = (p - 1) % r == 0
            if good_char:
                checks.extend(_full_checks(P, GF(p)))
            report = verify_full_decomposition(P, p)  # may raise BadPrime
            for name, ok in report.checks:
                checks.append((name, ok))
            checks.append((f"component count is {report.component_count}", True))
        else:
            checks.extend(_full_checks(P, QQ))
    return {
        "field": "q" if field_kind == "q" else ("fp:%d" % p if field_kind == "fp" else field_kind),
        "level": level,
        "checks": [{"name": name, "ok": ok} for name, ok in checks],
        "ok": all(ok for _, ok in checks),
    }


def _print_pretty(command: str, payload: Dict, digest: str, ms: int) -> None:
    print(f"pcb {command}  (input sha256 {digest[:12]}, {ms} ms)")
    if command == "analyze":
        print(f"  n = {payload['n']}")
        print(f"  m = {payload['m']}   d = {payload['d']}   nu = {payload['nu']}")
        print(f"  invariant factors: {payload['invariant_factors']}")
        print(f"  syzygy exponents: {payload['syzygy_exponents']}")
        print(f"  hull prime: {payload['hull_prime']}")
        c = payload["counts"]
        print(f"  components: {c['isolated']} isolated + {c['embedded']} embedded (at most {c['at_most']} over any field)")
        t = payload["torsion"]
        print(f"  torsion: order {t['order']}, cyclic factors {t['cyclic_factors']}, free rank {t['free_rank']}")
    elif command == "snf":
        for name in ("P", "D", "Q"):
            print(f"  {name}:")
            for row in payload[name]:
                print(f"    {row}")
        print(f"  invariant factors: {payload['invariant_factors']}")
        print(f"  nu: {payload['nu']}")
    elif command == "decompose":
        print(f"  field: {payload['field']}   isolated: {payload['counts']['isolated']}")
        for i, comp in enumerate(payload["components"], start=1):
            line = f"  [{i:>2}] x -> ({', '.join(comp['map'])})"
            print(line)
            if "kernel" in comp:
                for g in comp["kernel"]:
                    print(f"        {g}")
        if payload.get("embedded"):
            print(f"  embedded monomial exponents: {payload['embedded']['monomial']}")
    elif command == "verify":
        for check in payload["checks"]:
            mark = "ok " if check["ok"] else "FAIL"
            print(f"  [{mark}] {check['name']}")
        print(f"  overall: {'ok' if payload['ok'] else 'FAILED'}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcb",
        description="Exact invariants and primary decomposition for PCB matrices.",
        epilog="PCB_SEED is reserved; current commands are deterministic and ignore it.",
    )
    parser.add_argument("--version", action="version", version=f"pcb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "snf", "decompose", "verify"):
        cmd = sub.add_parser(name)
        cmd.add_argument("matrix", help="path to a JSON file with an L matrix")
        cmd.add_argument("--pretty", action="store_true", help="human-readable output")
        if name == "decompose":
            cmd.add_argument("--field", default="symbolic", help="symbolic or fp:<p>")
        if name == "verify":
            cmd.add_argument("--field", default="q", help="q or fp:<p>")
            cmd.add_argument(
                "--level", default="identities", choices=("identities", "full")
            )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.monotonic()
    try:
        P, digest = _load_matrix(args.matrix)
        if args.command == "analyze":
            payload = _cmd_analyze(P)
        elif args.command == "snf":
            payload = _cmd_snf(P)
        elif args.command == "decompose":
            kind, p = _parse_field(args.field, allow_symbolic=True)
            payload = _cmd_decompose(P, kind, p)
        else:
            kind, p = _parse_field(args.field, allow_symbolic=False)
            payload = _cmd_verify(P, kind, p, args.level)
    except json.JSONDecodeError as err:
        print(f"parse error: line {err.lineno}, column {err.colno}: {err.msg}", file=sys.stderr)
        return 2
    except (OSError, SchemaError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except PcbValidationError as err:
        print(f"validation error: {err}", file=sys.stderr)
        return 3
    except BadPrime as err:
        print(f"bad prime: {err}", file=sys.stderr)
        return 4
    except (VerificationFailed, HypothesisFailed) as err:
        print(f"verification failure: {err}", file=sys.stderr)
        return 5
    ms = int((time.monotonic() - t0) * 1000)
    if args.pretty:
        _print_pretty(args.command, payload, digest, ms)
    else:
        envelope = {
            "version": __version__,
            "command": args.command,
            "input": {"sha256": digest, "n": P.n},
            "elapsed_ms": ms,
            "result": payload,
        }
        print(json.dumps(envelope))
    if args.command == "verify" and not payload["ok"]:
        return 5
    return 0


if __name__ == "__main__":
    sys.exit(main())
