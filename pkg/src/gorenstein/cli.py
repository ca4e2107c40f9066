"""Command-line interface.

Subcommands:

* ``check``   — predicates and certificate tags for an h-vector literal,
* ``enum``    — stream SI-sequences for a given codimension and socle degree,
* ``hilbert`` — Hilbert function of an ideal read from a file,
* ``apolar``  — catalecticant h-vectors, annihilators, realization search,
* ``verify``  — the randomized verification suites.

Exit codes: 0 success, 1 deterministic violation (or realization not
found), 2 anomalies only, 64 usage or parse error.  Output is byte-stable:
reruns with the same arguments and seed print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .apolarity import (
    DimensionError,
    DualForm,
    TargetNotSIError,
    annihilator_ideal,
    evaluation_dual,
    hvector_of_dual,
    materialize_dual,
    monomial_dual,
    realization_search,
)
from .enumeration import (
    LABEL_GORENSTEIN,
    LABEL_UNDETERMINED,
    classify_codim4,
    count_si,
    gorenstein_codim4,
    si_sequences,
)
from .gfpoly import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    PolyParseError,
    PrimeField,
    is_prime,
    poly_text,
)
from .idealcalc import NonArtinianError, hilbert, load_ideal, socle_profile
from .seqcomb import (
    HVector,
    guarantees,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
)
from .verify import SUITES, run_suite
from .version import __version__

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_ANOMALY = 2
EXIT_USAGE = 64

PRIME_ENV_VAR = "GORENSTEIN_PRIME"


class UsageError(Exception):
    """Bad arguments or unparsable input; mapped to exit code 64."""


class _Parser(argparse.ArgumentParser):
    """argparse with exit code 64 for usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _resolve_prime(args) -> int:
    if args.prime is not None:
        p = args.prime
    else:
        env = os.environ.get(PRIME_ENV_VAR)
        if env is not None:
            try:
                p = int(env)
            except ValueError:
                raise UsageError(
                    f"{PRIME_ENV_VAR} must be an integer, got {env!r}"
                )
        else:
            p = DEFAULT_PRIME
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _resolve_second(args, first: int) -> int:
    q = args.second_prime if args.second_prime is not None else SECOND_PRIME
    if q == first:
        # Fall back so cross-checking still uses two distinct primes.
        q = SECOND_PRIME if first != SECOND_PRIME else DEFAULT_PRIME
    if not is_prime(q):
        raise UsageError(f"{q} is not prime")
    return q


def _emit_json(args, payload: dict, primes: Sequence[int]) -> None:
    envelope = {
        "version": __version__,
        "seed": args.seed,
        "primes": list(primes),
        **payload,
    }
    print(json.dumps(envelope, indent=2, sort_keys=True))


# -- check -------------------------------------------------------------------


def _cmd_check(args) -> int:
    try:
        h = HVector.parse(args.hvector)
    except ValueError as exc:
        raise UsageError(str(exc))
    tags = sorted(guarantees(h))
    verdicts = {
        "o_sequence": is_o_sequence(list(h)),
        "symmetric": is_symmetric(h),
        "unimodal": is_unimodal(h),
        "si_sequence": is_si_sequence(h),
    }
    if args.format == "json":
        _emit_json(
            args,
            {
                "command": "check",
                "hvector": list(h),
                "socle_degree": h.socle_degree,
                **verdicts,
                "certificates": list(tags),
            },
            primes=(),
        )
    else:
        print(f"h-vector: {h}")
        print(f"socle degree: {h.socle_degree}")
        for key, value in verdicts.items():
            print(f"{key.replace('_', '-')}: {'yes' if value else 'no'}")
        print(
            "certificates: " + (" ".join(tags) if tags else "none")
        )
    return EXIT_OK


# -- enum ----------------------------------------------------------------------


def _enum_label(h: HVector, codim: int) -> str:
    if codim <= 3:
        return LABEL_GORENSTEIN
    if codim == 4:
        return classify_codim4(h)
    return LABEL_UNDETERMINED


def _cmd_enum(args) -> int:
    codim, e = args.codim, args.socle
    if codim < 1 or e < 1:
        raise UsageError("--codim and --socle must be >= 1")
    filtered = codim == 4 and not args.no_quartic_filter
    if args.count:
        if filtered:
            n = sum(1 for _ in gorenstein_codim4(e, quartic_filter=True))
        else:
            n = count_si(codim, e)
        if args.format == "jsonl":
            print(
                json.dumps(
                    {"codim": codim, "count": n, "socle": e}, sort_keys=True
                )
            )
        else:
            print(n)
        return EXIT_OK
    stream = (
        gorenstein_codim4(e, quartic_filter=True)
        if filtered
        else si_sequences(codim, e)
    )
    for h in stream:
        label = _enum_label(h, codim)
        if args.format == "jsonl":
            print(
                json.dumps(
                    {"hvector": list(h), "label": label}, sort_keys=True
                )
            )
        elif args.format == "csv":
            print(f'"{h}",{label}')
        else:
            print(f"{h}\t{label}")
    return EXIT_OK


# -- hilbert ---------------------------------------------------------------------


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _cmd_hilbert(args) -> int:
    text = _read_file(args.file)
    try:
        ideal = load_ideal(text)
    except PolyParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    profile = hilbert(ideal, upto=args.max_degree)
    payload: dict = {
        "command": "hilbert",
        "variables": ideal.r,
        "generator_degrees": ideal.generator_degrees(),
        "values": list(profile.values),
        "truncation": profile.truncation,
        "artinian": profile.artinian_certified,
    }
    if profile.artinian_certified:
        hv = profile.hvector()
        payload["hvector"] = list(hv)
        if args.socle:
            prof = socle_profile(ideal, upto=len(profile.values) - 1)
            payload["socle_profile"] = list(prof)
            payload["gorenstein"] = sum(prof) == 1
    if args.format == "json":
        _emit_json(args, payload, primes=(ideal.field.p,))
    else:
        print(f"variables: {ideal.r}   prime: {ideal.field.p}")
        print(
            "generator degrees: "
            + " ".join(str(d) for d in payload["generator_degrees"])
        )
        print("hilbert: " + " ".join(str(v) for v in profile.values))
        print(f"artinian: {'yes' if profile.artinian_certified else 'not certified'}")
        if "hvector" in payload:
            print(f"h-vector: {profile.hvector()}")
        if "socle_profile" in payload:
            print(
                "socle: "
                + " ".join(str(v) for v in payload["socle_profile"])
            )
            print(f"gorenstein: {'yes' if payload['gorenstein'] else 'no'}")
    return EXIT_OK


# -- apolar -----------------------------------------------------------------------


def _parse_int_tuple(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated integer list, got {text!r}")


def _apolar_source(args, field: PrimeField) -> DualForm:
    import random as _random

    if args.monomial is not None:
        expts = _parse_int_tuple(args.monomial, "--monomial")
        if any(x < 0 for x in expts) or sum(expts) < 1:
            raise UsageError(
                "--monomial needs nonnegative exponents with positive total degree"
            )
        return monomial_dual(expts, field)
    if args.points is not None:
        if args.degree is None:
            raise UsageError("--points requires --degree")
        if args.points < 1 or args.degree < 1 or args.vars < 1:
            raise UsageError("--points, --degree and --vars must be >= 1")
        rng = _random.Random(f"{args.seed}:apolar-points")
        pts = [
            tuple(rng.randrange(1, 1 << 16) for _ in range(args.vars))
            for _ in range(args.points)
        ]
        return evaluation_dual(args.vars, args.degree, pts, field)
    # --file: an ideal-format file whose single polynomial is the dual form.
    text = _read_file(args.file)
    try:
        ideal = load_ideal(text)
    except PolyParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if len(ideal.generators) != 1:
        raise UsageError(
            f"{args.file} must contain exactly one polynomial, "
            f"found {len(ideal.generators)}"
        )
    poly = ideal.generators[0]
    data = {
        "kind": "dense",
        "r": poly.r,
        "degree": poly.degree,
        "ints": list(poly.coeffs),
    }
    return materialize_dual(data, field)


def _cmd_apolar(args) -> int:
    field = PrimeField(_resolve_prime(args))
    second = PrimeField(_resolve_second(args, field.p))

    if args.realize is not None:
        try:
            target = HVector.parse(args.realize)
        except ValueError as exc:
            raise UsageError(str(exc))
        try:
            result = realization_search(
                target,
                args.vars,
                field=field,
                second_field=second,
                seed=args.seed,
                budget=args.budget,
            )
        except (TargetNotSIError, DimensionError) as exc:
            raise UsageError(str(exc))
        if args.format == "json":
            _emit_json(
                args,
                {"command": "apolar", **result.record()},
                primes=result.primes_checked,
            )
        else:
            print(f"target: {result.target}")
            print(f"status: {result.status}")
            print(f"trials: {result.trials}")
            if result.found is not None:
                print(f"strategy: {result.strategy}")
                print(f"witness: {poly_text(result.found.poly)}")
        return EXIT_OK if result.found is not None else EXIT_FAILURE

    form = _apolar_source(args, field)
    hv = hvector_of_dual(form)
    payload: dict = {
        "command": "apolar",
        "variables": form.r,
        "degree": form.degree,
        "kind": form.kind,
        "hvector": list(hv),
    }
    ann_lines = []
    if args.ann:
        ann = annihilator_ideal(form)
        payload["annihilator_degrees"] = ann.generator_degrees()
        ann_lines = [poly_text(g) for g in ann.generators]
        payload["annihilator_generators"] = ann_lines
    if args.format == "json":
        _emit_json(args, payload, primes=(field.p,))
    else:
        print(f"variables: {form.r}   degree: {form.degree}   kind: {form.kind}")
        print(f"h-vector: {hv}")
        if args.ann:
            degs = " ".join(str(d) for d in payload["annihilator_degrees"])
            print(f"annihilator generator degrees: {degs}")
            for line in ann_lines:
                print(f"  {line}")
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def _cmd_verify(args) -> int:
    field = PrimeField(_resolve_prime(args))
    second = PrimeField(_resolve_second(args, field.p))
    report = run_suite(
        args.suite,
        trials=args.trials,
        seed=args.seed,
        field=field,
        second_field=second,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.summary_line())
        print(f"claim: {report.claim}")
        for witness in report.witnesses[:10]:
            print(f"  witness: {json.dumps(witness, sort_keys=True)}")
        if len(report.witnesses) > 10:
            print(f"  ... and {len(report.witnesses) - 10} more witnesses")
        if args.out:
            print(f"report written to {args.out}")
    return report.exit_code


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gorenstein",
        description=(
            "Artinian Gorenstein h-vector toolkit: sequence predicates, "
            "SI-sequence enumeration, degreewise ideal calculations over "
            "Z/p, apolarity, and verification experiments."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--prime",
        type=int,
        default=None,
        help=f"working prime (default {DEFAULT_PRIME}; env {PRIME_ENV_VAR})",
    )
    common.add_argument(
        "--second-prime",
        type=int,
        default=None,
        help=f"cross-check prime (default {SECOND_PRIME})",
    )
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check",
        parents=[common],
        help="predicates and certificate tags for an h-vector literal",
    )
    p_check.add_argument("hvector", help="comma-separated literal, e.g. 1,4,4,1")
    p_check.add_argument(
        "--format", choices=("text", "json"), default="text"
    )
    p_check.set_defaults(func=_cmd_check)

    p_enum = sub.add_parser(
        "enum",
        parents=[common],
        help="stream SI-sequences for a codimension and socle degree",
    )
    p_enum.add_argument("--codim", type=int, default=4)
    p_enum.add_argument(
        "--socle", type=int, required=True, help="socle degree e"
    )
    p_enum.add_argument(
        "--count", action="store_true", help="print only the number of vectors"
    )
    p_enum.add_argument(
        "--no-quartic-filter",
        action="store_true",
        help="with --codim 4, include SI-sequences with h_4 > 33",
    )
    p_enum.add_argument(
        "--format", choices=("text", "csv", "jsonl"), default="text"
    )
    p_enum.set_defaults(func=_cmd_enum)

    p_hilb = sub.add_parser(
        "hilbert",
        parents=[common],
        help="Hilbert function of an ideal from a file",
    )
    p_hilb.add_argument("file", help="ideal file: 'r=<n> p=<prime>' then one polynomial per line")
    p_hilb.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="truncation degree (default: sum of generator degrees)",
    )
    p_hilb.add_argument(
        "--socle",
        action="store_true",
        help="also print the socle profile and a Gorenstein verdict",
    )
    p_hilb.add_argument(
        "--format", choices=("text", "json"), default="text"
    )
    p_hilb.set_defaults(func=_cmd_hilbert)

    p_ap = sub.add_parser(
        "apolar",
        parents=[common],
        help="catalecticant h-vectors, annihilators, realization search",
    )
    source = p_ap.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--file", help="file with 'r=<n> p=<prime>' header and one polynomial"
    )
    source.add_argument(
        "--monomial", help="dual monomial exponents, e.g. 2,1,1,0"
    )
    source.add_argument(
        "--points", type=int, help="random power sum with this many points"
    )
    source.add_argument(
        "--realize", help="h-vector literal to search a witness for"
    )
    p_ap.add_argument("--vars", type=int, default=4, help="number of variables")
    p_ap.add_argument(
        "--degree", type=int, default=None, help="socle degree for --points"
    )
    p_ap.add_argument(
        "--budget",
        type=int,
        default=64,
        help="random trials per strategy for --realize",
    )
    p_ap.add_argument(
        "--ann",
        action="store_true",
        help="also print the annihilator's minimal generators",
    )
    p_ap.add_argument(
        "--format", choices=("text", "json"), default="text"
    )
    p_ap.set_defaults(func=_cmd_apolar)

    p_ver = sub.add_parser(
        "verify",
        parents=[common],
        help="run a verification suite",
    )
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument(
        "--trials",
        type=int,
        default=None,
        help="suite size override (instances, per-branch count, or samples)",
    )
    p_ver.add_argument("--out", default=None, help="also write the JSON report here")
    p_ver.add_argument(
        "--format", choices=("text", "json"), default="text"
    )
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gorenstein: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonArtinianError as exc:
        print(f"gorenstein: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except BrokenPipeError:
        # A downstream head/less closing early is normal for streams.
        try:
            sys.stdout.close()
        except OSError:
            pass
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
