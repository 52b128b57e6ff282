"""Command line front end: ``polystab <command> [options]``.

Configuration hierarchy:
1. Command line arguments (highest priority)
2. --config-file, or the file named by POLYSTAB_CONFIG
3. polystab/configs/defaults.yml
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

import numpy as np

from .config import config_file_path, load_defaults, merge_overrides
from .core.enums import DerivativeScheme, Energy, OracleQuantity, OutputFormat, Source, Suite
from .core.errors import PolystabError, ValidationError
from .exact.rational import format_rational, parse_rational
from .forms import FormRegistry
from .geometry import (
    SpaceForm,
    energy4_density,
    es4_tension_coefficient,
    new_hypersphere,
    solve_proper_radius,
    tau4_closed_form,
    tau4_coefficient,
    tau_hat4_terms,
)
from .index import index_sweep
from .logging import get_logger, set_level
from .oracle import (
    MODES,
    OracleResult,
    build_circle,
    bundle_norms_num,
    first_variation_num,
    qhat_quadrature_m2,
    second_variation_num,
)
from .report import RunConfig, emit
from .spectrum import spectrum_iter, spectrum_levels
from .verify import run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_ERROR = 2


def parse_m_range(text: str) -> list[int]:
    """``"3"``, ``"1..10"`` or ``"1,2,5"``."""

    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValidationError(f"Not a dimension range: {text!r}", context={"value": text}) from exc
    if not values or min(values) < 1:
        raise ValidationError("Dimensions must be positive and non-empty", context={"value": text})
    return values


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None,
                        help="Emission format (default: table)")
    parser.add_argument("--out", type=str, default=None,
                        help="Write the emission here instead of stdout or $POLYSTAB_OUTPUT_DIR")
    parser.add_argument("--config-file", type=str, default=None,
                        help="YAML file with a 'default:' block; defaults to polystab/configs/defaults.yml")
    parser.add_argument("--show-config", action="store_true",
                        help="Display the configuration after overrides and exit")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr")


def _radius(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--a", type=_rational_arg, default=None, help="Radius a as p/q, 0 < a <= 1")
    group.add_argument("--t", type=_rational_arg, default=None, help="t = (1-a^2)/a^2 as p/q")
    parser.add_argument("--sigma", type=int, choices=[-1, 1], default=None, help="Orientation of ν")
    parser.add_argument("--K", type=_rational_arg, default=None, help="Sectional curvature of the target")


def _oracle_knobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid", type=int, default=None, help="Grid points on the circle (even, >= 16)")
    parser.add_argument("--step", type=float, default=None, help="Variation step h")
    parser.add_argument("--modes", type=str, default=None, help="Comma-separated modes j (or m=2 mode names)")
    parser.add_argument("--richardson", action=argparse.BooleanOptionalAction, default=None,
                        help="One Richardson step with h and h/2")
    parser.add_argument("--scheme", choices=[s.value for s in DerivativeScheme], default=None,
                        help="θ-derivative scheme")


def create_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polystab",
        description="Normal stability of small 4-harmonic and ES-4-harmonic hyperspheres",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    polystab spectrum --dim 2 --r2 1/4 --levels 3
    polystab tension --m 4 --solve
    polystab form --energy es4 --m 2 --source general --format json
    polystab index --energy es4 --m 1..10 --expect 1
    polystab verify fixtures
    polystab oracle second-variation --t 3 --grid 4096 --modes 0,1

EXIT CODES:
===========
0  success
1  an --expect or verification check failed
2  usage or domain error
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="Laplace spectrum of S^p(R)")
    p.add_argument("--dim", type=int, required=True, help="Sphere dimension p")
    p.add_argument("--r2", type=_rational_arg, required=True, help="R^2 as p/q")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--levels", type=int, help="First n levels")
    group.add_argument("--cap", type=_rational_arg, help="All levels with λ < cap")
    _common(p)

    p = sub.add_parser("tension", help="4-tension and ES-4 correction of S^m(a)")
    p.add_argument("--m", type=int, required=True)
    _radius(p)
    p.add_argument("--solve", action="store_true", help="Solve τ₄ = 0 for the proper radius")
    _common(p)

    p = sub.add_parser("form", help="Quadratic form of the normal second variation as a λ-polynomial")
    p.add_argument("--energy", choices=[e.value for e in Energy], default=None)
    p.add_argument("--m", type=int, required=True)
    _radius(p)
    p.add_argument("--source", choices=[Source.PRINTED.value, Source.GENERAL.value, Source.SMALL_SPHERE.value],
                   default=None, help="Derivation route")
    p.add_argument("--norms", choices=[Source.COMPOSITION.value, Source.PRINTED.value], default=None,
                   help="Bundle norms for the small-sphere route")
    _common(p)

    p = sub.add_parser("index", help="Normal index over a range of dimensions")
    p.add_argument("--energy", choices=[e.value for e in Energy], default=None)
    p.add_argument("--m", dest="m_range", type=str, default=None, help="3, 1..10 or 1,2,5")
    p.add_argument("--t", type=_rational_arg, default=None, help="t = (1-a^2)/a^2 as p/q")
    p.add_argument("--source", dest="sources", action="append",
                   choices=[Source.PRINTED.value, Source.GENERAL.value, Source.SMALL_SPHERE.value], default=None,
                   help="Derivation route; repeat for several")
    p.add_argument("--norms", choices=[Source.COMPOSITION.value, Source.PRINTED.value], default=None)
    p.add_argument("--expect", type=int, default=None, help="Exit 1 unless every index equals this")
    p.add_argument("--workers", type=int, default=None, help="Threads for the sweep")
    _common(p)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", choices=[s.value for s in Suite])
    _oracle_knobs(p)
    _common(p)

    p = sub.add_parser("oracle", help="Floating point oracle")
    p.add_argument("quantity", choices=[q.value for q in OracleQuantity])
    _radius(p)
    _oracle_knobs(p)
    _common(p)
    return parser


def build_config(args: argparse.Namespace) -> dict[str, Any]:
    config = load_defaults(config_file_path(args.config_file))
    is_m2 = (args.command == "oracle" and args.quantity == OracleQuantity.QHAT_M2.value) or (
        args.command == "verify" and args.suite == Suite.ORACLE_M2.value
    )
    modes = getattr(args, "modes", None)
    oracle_modes = None
    if modes is not None:
        if is_m2:
            oracle_modes = [s.strip() for s in modes.split(",") if s.strip()]
        else:
            try:
                oracle_modes = [int(s) for s in modes.split(",") if s.strip()]
            except ValueError as exc:
                raise ValidationError(f"Modes must be integers: {modes!r}", context={"modes": modes}) from exc

    overrides: dict[str, Any] = {
        "t": format_rational(args.t) if getattr(args, "t", None) is not None else None,
        "sigma": getattr(args, "sigma", None),
        "K": format_rational(args.K) if getattr(args, "K", None) is not None else None,
        "energy": getattr(args, "energy", None),
        "norms": getattr(args, "norms", None),
        "sources": getattr(args, "sources", None),
        "m_range": getattr(args, "m_range", None),
        "workers": getattr(args, "workers", None),
        "oracle": {
            "grid": getattr(args, "grid", None),
            "step": getattr(args, "step", None),
            "richardson": getattr(args, "richardson", None),
            "scheme": getattr(args, "scheme", None),
            "modes": None if is_m2 else oracle_modes,
        },
        "oracle_m2": {"step": getattr(args, "step", None), "modes": oracle_modes if is_m2 else None},
    }
    if getattr(args, "source", None) is not None:
        overrides["sources"] = [args.source]
    if getattr(args, "a", None) is not None:
        overrides["a"] = format_rational(args.a)
        overrides["t"] = None
    config = merge_overrides(config, overrides)
    if getattr(args, "a", None) is not None:
        config.pop("t", None)
    return config


def show_config(config: dict[str, Any]) -> None:
    print("\n" + "=" * 80)
    print("POLYSTAB CONFIGURATION")
    print("=" * 80)
    sections = {
        "Small hypersphere": ["t", "a", "sigma", "K"],
        "Quadratic forms and index": ["energy", "sources", "norms", "m_range", "workers"],
    }
    for section, keys in sections.items():
        print(f"\n{section}:")
        print("-" * len(section))
        for key in keys:
            if key in config:
                print(f"  {key:25}: {config[key]}")
    for section in ("oracle", "oracle_m2", "identities"):
        print(f"\n{section}:")
        print("-" * len(section))
        for key, value in config.get(section, {}).items():
            print(f"  {key:25}: {value}")
    print("=" * 80)


def _hypersphere(m: int, config: dict[str, Any]):
    sigma = int(config.get("sigma", -1))
    if "a" in config:
        return new_hypersphere(m, parse_rational(str(config["a"])), sigma=sigma)
    return new_hypersphere(m, t=parse_rational(str(config.get("t", "3"))), sigma=sigma)


def _run_config(args: argparse.Namespace, config: dict[str, Any], params: dict[str, Any]) -> RunConfig:
    fmt = args.output_format or OutputFormat.TABLE.value
    return RunConfig(args.command, OutputFormat(fmt), params, args.out)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_spectrum(args: argparse.Namespace, config: dict[str, Any]) -> int:
    if args.levels is not None:
        levels = spectrum_levels(args.dim, args.r2, args.levels)
    else:
        levels = spectrum_iter(args.dim, args.r2, args.cap)
    params = {"dim": args.dim, "r2": args.r2, "levels": args.levels, "cap": args.cap}
    rows = [level.to_dict() for level in levels]
    emit("spectrum", _run_config(args, config, params), {"levels": rows}, rows)
    return EXIT_OK


def cmd_tension(args: argparse.Namespace, config: dict[str, Any]) -> int:
    sf = SpaceForm(parse_rational(str(config.get("K", "1"))))
    proper_t = solve_proper_radius(args.m, sf) if args.solve else None
    if proper_t is not None and args.a is None and args.t is None:
        config = {**config, "t": format_rational(proper_t)}
    h = _hypersphere(args.m, config)
    hat = tau_hat4_terms(h, sf)
    row = {
        "m": h.m,
        "t": h.t,
        "sigma": h.sigma,
        "K": sf.K,
        "tau4": str(tau4_coefficient(h, sf)),
        "tau4_closed_form": str(tau4_closed_form(h, sf)),
        "omega0": str(hat.omega0),
        "omega1_trace": str(hat.omega1_trace),
        "xi1": str(hat.xi1),
        "tau_hat4": str(hat.tau_hat),
        "es4": str(es4_tension_coefficient(h, sf)),
        "energy_density": energy4_density(h),
        "proper_t": proper_t,
    }
    payload = {"hypersphere": h.to_dict(), **{k: v for k, v in row.items() if k not in ("m", "t", "sigma")}}
    if proper_t is not None:
        payload["properRadius"] = {"t": proper_t, "a": h.radius() if h.t == proper_t else None}
    emit("tension", _run_config(args, config, {"m": args.m, "solve": args.solve, **_radius_params(config)}), payload, [row])
    return EXIT_OK


def _radius_params(config: dict[str, Any]) -> dict[str, Any]:
    return {k: config[k] for k in ("a", "t", "sigma", "K") if k in config}


def cmd_form(args: argparse.Namespace, config: dict[str, Any]) -> int:
    h = _hypersphere(args.m, config)
    energy = Energy(config.get("energy", "e4"))
    source = Source(args.source or Source.GENERAL.value)
    norms = Source(config.get("norms", "composition"))
    qf = FormRegistry.create(energy, source, h, parse_rational(str(config.get("K", "1"))), norms)
    rows = [
        {**{k: v for k, v in qf.to_dict().items() if k != "coeffs"}, "norms": qf.norms.value if qf.norms else "", "degree": k, "coefficient": c}
        for k, c in enumerate(qf.coefficients())
    ]
    params = {"m": args.m, "energy": energy, "source": source, "norms": norms, **_radius_params(config)}
    emit("form", _run_config(args, config, params), qf.to_dict(), rows)
    return EXIT_OK


def cmd_index(args: argparse.Namespace, config: dict[str, Any]) -> int:
    energy = Energy(config.get("energy", "e4"))
    m_values = parse_m_range(str(config.get("m_range", "1..10")))
    sources = [Source(s) for s in config.get("sources", ["printed", "general", "small-sphere"])]
    if energy == Energy.HAT:
        sources = [s for s in sources if s != Source.SMALL_SPHERE] or [Source.GENERAL]
    reports = index_sweep(
        energy,
        m_values,
        sources,
        norms=Source(config.get("norms", "composition")),
        t=parse_rational(str(config.get("t", "3"))),
        workers=int(config.get("workers", 1)),
    )
    payload: dict[str, Any] = {"reports": [r.to_dict() for r in reports]}
    code = EXIT_OK
    if args.expect is not None:
        diff = [
            {"m": r.m, "source": r.source, "index": r.index, "expected": args.expect} for r in reports if r.index != args.expect
        ]
        payload["expect"] = {"value": args.expect, "differences": diff}
        if diff:
            logger.warning("Index differs from --expect %d in %d case(s): %s", args.expect, len(diff), diff)
            code = EXIT_EXPECTATION
    params = {"energy": energy, "m": m_values, "sources": sources, "expect": args.expect, "t": config.get("t")}
    emit("index", _run_config(args, config, params), payload, [r.to_row() for r in reports])
    return code


def cmd_verify(args: argparse.Namespace, config: dict[str, Any]) -> int:
    outcome = run_suite(Suite(args.suite), config)
    params = {"suite": args.suite, "oracle": config.get("oracle"), "oracle_m2": config.get("oracle_m2"), "identities": config.get("identities")}
    emit("verify", _run_config(args, config, params), outcome.to_dict(), [c.to_row() for c in outcome.checks])
    if not outcome.passed:
        logger.warning("Suite %s failed", args.suite)
        return EXIT_EXPECTATION
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, config: dict[str, Any]) -> int:
    quantity = OracleQuantity(args.quantity)
    knobs = config.get("oracle", {})
    results: list[OracleResult] = []

    if quantity == OracleQuantity.QHAT_M2:
        m2 = config.get("oracle_m2", {})
        for mode in m2.get("modes", ["z"]):
            if mode not in MODES:
                raise ValidationError(f"Unknown m=2 mode '{mode}'", context={"modes": sorted(MODES)})
            results.append(
                qhat_quadrature_m2(
                    parse_rational(str(config.get("t", "3"))),
                    mode,
                    n_lat=int(m2.get("n_lat", 32)),
                    n_lon=int(m2.get("n_lon", 64)),
                    step=float(m2.get("step", 1e-3)),
                    rtol=float(m2.get("rtol", 1e-5)),
                    atol=float(m2.get("atol", 1e-5)),
                )
            )
    else:
        radius = {"a": parse_rational(str(config["a"]))} if "a" in config else {"t": parse_rational(str(config.get("t", "3")))}
        im = build_circle(
            N=int(knobs.get("grid", 256)),
            sigma=int(config.get("sigma", -1)),
            scheme=knobs.get("scheme", "spectral"),
            filter_rtol=float(knobs.get("filter_rtol", 1e-13)),
            **radius,
        )
        step = float(knobs.get("step", 1e-3))
        richardson = bool(knobs.get("richardson", True))
        modes = [int(j) for j in knobs.get("modes", [0, 1, 2, 3])]
        if quantity == OracleQuantity.BUNDLE_NORMS:
            results = [bundle_norms_num(im, j, rtol=float(knobs.get("bundle_rtol", 1e-7))) for j in modes]
        elif quantity == OracleQuantity.SECOND_VARIATION:
            results = [
                second_variation_num(
                    im,
                    j,
                    step,
                    richardson=richardson,
                    rtol=float(knobs.get("second_variation_rtol", 1e-3)),
                    atol=float(knobs.get("second_variation_atol", 1e-4)),
                )
                for j in modes
            ]
        else:
            results = [
                first_variation_num(
                    im,
                    np.cos(j * im.theta),
                    step,
                    richardson=richardson,
                    rtol=float(knobs.get("first_variation_rtol", 1e-4)),
                    atol=float(knobs.get("first_variation_atol", 1e-6)),
                )
                for j in modes
            ]

    params = {"quantity": quantity, "oracle": knobs, "oracle_m2": config.get("oracle_m2"), **_radius_params(config)}
    rows = [row for r in results for row in r.to_rows()]
    emit("oracle", _run_config(args, config, params), {"results": [r.to_dict() for r in results]}, rows)
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "tension": cmd_tension,
    "form": cmd_form,
    "index": cmd_index,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_argument_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG if args.verbose > 1 else logging.INFO)

    try:
        config = build_config(args)
        if args.show_config:
            show_config(config)
            return EXIT_OK
        return COMMANDS[args.command](args, config)
    except PolystabError as exc:
        logger.error("%s: %s %s", type(exc).__name__, exc, exc.context)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
