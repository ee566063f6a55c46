"""Command-line surface: build/export graphs, print metrics and spectra,
run theorem-verification suites, emit Ramsey certificates, drive sweeps.

Exit codes: 0 all claims pass or recorded, 1 any claim failed, 2 usage or
IO error.  Stdout carries only the payload (JSON, DIMACS, or JSON lines);
diagnostics go to stderr.
"""
import argparse
import json
import sys

from .algebra import find_nonsquare
from .certify import (
    SweepConfig,
    _jsonable,
    certificate_to_json,
    ramsey_certificate,
    run_sweep,
    verify_circle_lemma,
    verify_code_graphs,
    verify_degree_formula,
    verify_girth_diameter,
    verify_main_theorem,
    verify_mt1,
)
from .errors import NotTriangleFree
from .exactmetrics import metrics_report
from .graphs import FamilySpec, build_family, export_graph
from .spectral import cayley_spectrum_abelian, dense_spectrum

FAMILIES = ("euclidean", "noneuclidean", "bch", "alon")


def _add_selectors(sub):
    sub.add_argument("--family", choices=FAMILIES, required=True)
    sub.add_argument("--q", type=int, help="field size (odd prime)")
    sub.add_argument("--m", type=int, help="dimension for the euclidean family (default 2)")
    sub.add_argument("--a", type=int, help="quadrance / distance parameter")
    sub.add_argument("--sigma", type=int, help="non-square for the half-plane family "
                     "(default: smallest non-square)")
    sub.add_argument("--k", type=int, help="code-family parameter, 2..8")


def _spec_from_args(args) -> FamilySpec:
    if args.family in ("bch", "alon"):
        if args.k is None:
            raise ValueError(f"--k is required for the {args.family} family")
        return FamilySpec(kind=args.family, k=args.k)
    if args.q is None:
        raise ValueError(f"--q is required for the {args.family} family")
    if args.family == "euclidean":
        return FamilySpec(
            kind="euclidean",
            q=args.q,
            m=args.m if args.m is not None else 2,
            a=args.a if args.a is not None else 1,
        )
    sigma = args.sigma if args.sigma is not None else find_nonsquare(args.q)
    return FamilySpec(
        kind="noneuclidean",
        q=args.q,
        sigma=sigma,
        a=args.a if args.a is not None else 1,
    )


def _print_json(payload) -> None:
    print(json.dumps(_jsonable(payload), indent=2))


def _cmd_build(args) -> int:
    graph = build_family(_spec_from_args(args))
    data = export_graph(graph, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"wrote {len(data)} bytes to {args.out}", file=sys.stderr)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return 0


def _cmd_stats(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    met = metrics_report(graph)
    _print_json(
        {
            "family": spec.to_dict(),
            "n": met.n,
            "degree": met.degree,
            "girth": met.girth,
            "diameter": met.diameter,
            "triangles": met.triangles,
            "components": met.components,
            "is_vertex_transitive_assumed": met.is_vertex_transitive_assumed,
        }
    )
    return 0


def _cmd_spectrum(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    method = args.method
    if method == "auto":
        method = "dense" if spec.kind == "noneuclidean" else "character"
    if method == "dense":
        summary = dense_spectrum(graph)
    else:
        summary = cayley_spectrum_abelian(graph)
    _print_json(
        {
            "family": spec.to_dict(),
            "n": summary.n,
            "d": summary.d,
            "method": summary.method,
            "lambda": summary.lam,
            "theta2": summary.theta2,
            "theta_n": summary.theta_n,
            "eigenvalues": [float(v) for v in summary.eigenvalues],
        }
    )
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "circles":
        _require(args.q is not None, "--q is required for the circles suite")
        cert = verify_circle_lemma(args.q)
    elif args.suite == "girth-diameter":
        _require(args.q is not None, "--q is required for the girth-diameter suite")
        cert = verify_girth_diameter(args.q, args.family or "euclidean")
    elif args.suite == "degree":
        _require(args.q is not None, "--q is required for the degree suite")
        cert = verify_degree_formula(args.q, args.m if args.m is not None else 2)
    elif args.suite == "main":
        _require(args.q is not None, "--q is required for the main suite")
        cert = verify_main_theorem(args.q)
    elif args.suite == "mt1":
        _require(args.q is not None, "--q is required for the mt1 suite")
        cert = verify_mt1(args.q)
    else:
        _require(args.k is not None, "--k is required for the code suite")
        cert = verify_code_graphs(args.k)
    print(certificate_to_json(cert))
    return 0 if cert.overall == "pass" else 1


def _cmd_certify_ramsey(args) -> int:
    graph = build_family(_spec_from_args(args))
    cert = ramsey_certificate(graph)
    print(certificate_to_json(cert))
    return 0 if cert.overall == "pass" else 1


def _cmd_sweep(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if args.threads is not None:
        raw["threads"] = args.threads
    if args.out_dir is not None:
        raw["out_dir"] = args.out_dir
    config = SweepConfig.from_dict(raw)
    result = run_sweep(config)
    _print_json(result)
    bad = [s for s in result["statuses"] if s not in ("pass", "recorded")]
    if bad:
        print(f"{len(bad)} of {result['rows']} rows did not pass", file=sys.stderr)
        return 1
    return 0


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseyforge",
        description="finite-geometry graph families, exact oracles, spectral "
        "bounds, and Ramsey lower-bound certificates",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="build a graph and export its edge list")
    _add_selectors(p)
    p.add_argument("--format", choices=("dimacs", "edge-jsonl"), default="dimacs")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_build)

    p = subs.add_parser("stats", help="print exact metrics as JSON")
    _add_selectors(p)
    p.set_defaults(func=_cmd_stats)

    p = subs.add_parser("spectrum", help="print the adjacency spectrum as JSON")
    _add_selectors(p)
    p.add_argument("--method", choices=("dense", "character", "auto"), default="auto")
    p.set_defaults(func=_cmd_spectrum)

    p = subs.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument(
        "--suite",
        choices=("circles", "girth-diameter", "degree", "main", "mt1", "code"),
        required=True,
    )
    p.add_argument("--family", choices=("euclidean", "noneuclidean"))
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("certify-ramsey", help="emit an R(3,t) > n certificate")
    _add_selectors(p)
    p.set_defaults(func=_cmd_certify_ramsey)

    p = subs.add_parser("sweep", help="run verifiers over a parameter range")
    p.add_argument("--config", required=True, help="JSON file in the SweepConfig schema")
    p.add_argument("--threads", type=int, help="worker pool size override")
    p.add_argument("--out-dir", help="output directory override")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotTriangleFree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
