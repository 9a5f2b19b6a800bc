"""Run Vinberg's algorithm on an integral Lorentzian form.

    vinberg --form "-1,1,1" --facet-cap 50 --out report.json --dot diagram.dot

Exit codes: 0 finite volume, 10 facet bound exceeded, 11 budget exhausted,
2 input error.
"""
import argparse
import json
import logging
import os
import sys

from vinberg import __version__
from vinberg.bounds import ConstantsRegistry, MissingConstant, default_registry, load_registry
from vinberg.engine import EngineError, RunConfig, Status, initial_state, run
from vinberg.forms import ControlVector, FormError, QuadraticForm, require_admissible
from vinberg.report import (CacheError, build_report, canonical_json, restore_session,
                            save_session, write_dot, write_report)

EXIT_CODES = {
    Status.FINITE_VOLUME: 0,
    Status.FACET_BOUND_EXCEEDED: 10,
    Status.BUDGET_EXHAUSTED: 11,
}
EXIT_INPUT = 2

# options whose values may legitimately start with "-"
_VALUE_FLAGS = ("--form", "--control")


def parse_form(text):
    """Read a form from a JSON file, inline JSON, or a comma-separated diagonal."""
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return QuadraticForm.from_json(json.load(fh))
    if text.lstrip().startswith("{"):
        try:
            return QuadraticForm.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormError(f"malformed form JSON: {exc}") from exc
    try:
        return QuadraticForm.diagonal([int(x) for x in text.split(",")])
    except ValueError as exc:
        raise FormError(f"malformed form {text!r}: {exc}") from exc


def default_control(form):
    if not form.is_diagonal:
        raise FormError("--control is required for non-diagonal forms")
    negatives = [i for i in range(form.dim + 1) if form.gram[i][i] < 0]
    if len(negatives) != 1:
        raise FormError("cannot pick a default control vector; pass --control")
    return tuple(int(i == negatives[0]) for i in range(form.dim + 1))


def _parse_override(text):
    name, _, value = text.partition("=")
    if not value:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    if name == "dobrowolski":
        # DEG:VALUE[,DEG:VALUE...]
        value = dict(item.split(":", 1) for item in value.split(","))
    return name, value


def build_parser():
    p = argparse.ArgumentParser(prog="vinberg", description=__doc__.split("\n\n")[0])
    p.add_argument("--form", help="JSON file, inline JSON, or comma-separated diagonal")
    p.add_argument("--control", help="control vector c0,...,cn (default: negative basis vector)")
    p.add_argument("--facet-cap", default=None, help="integer cap or 'auto' (default: none)")
    p.add_argument("--budget", type=int, default=None, help="distance keys to examine")
    p.add_argument("--config", help="run configuration JSON file")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--dot", help="write the Coxeter diagram (DOT) here")
    p.add_argument("--registry", help="constants registry JSON")
    p.add_argument("--set-constant", action="append", default=[], type=_parse_override,
                   metavar="NAME=VALUE", help="override a registry entry")
    p.add_argument("--list-constants", action="store_true", help="print the registry and exit")
    p.add_argument("--degree", type=int, default=1, help="degree of the field of definition")
    p.add_argument("--resume", help="session cache: restored if present, saved on exit")
    p.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")
    p.add_argument("--quiet", action="store_true", help="no summary on stdout")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def _normalize_argv(argv):
    out, it = [], iter(argv)
    for arg in it:
        if arg in _VALUE_FLAGS:
            out.append(f"{arg}={next(it, '')}")
        else:
            out.append(arg)
    return out


def _registry(args, n):
    reg = None
    if args.registry:
        reg = load_registry(args.registry)
    elif args.set_constant or args.list_constants or args.facet_cap == "auto":
        try:
            reg = default_registry(n)
        except KeyError:
            reg = ConstantsRegistry(n, {}, "empty")
    if args.set_constant:
        reg = reg.with_overrides(**dict(args.set_constant))
    return reg


def summary(report):
    lines = [f"status: {report['status']}", f"  {report['message']}"]
    for r in report["accepted"]:
        tag = "chamber" if r["chamber"] else f"key {r['distance_key']}"
        lines.append(f"  root ({', '.join(r['e'])})  norm {r['norm']}  {tag}")
    if report["vertex_counts"]:
        c = report["vertex_counts"]
        lines.append(f"  rays: {c['proper']} proper, {c['ideal']} ideal, {c['spacelike']} spacelike")
    if report["area_over_pi"] is not None:
        lines.append(f"  area: {report['area_over_pi']} * pi")
    s = report["stats"]
    lines.append(f"  {s['facets']} facets, {s['keys_examined']} keys, "
                 f"{s['candidates_examined']} candidates")
    return "\n".join(lines)


def cli_run(argv=None):
    args = build_parser().parse_args(_normalize_argv(sys.argv[1:] if argv is None else argv))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.list_constants:
            n = parse_form(args.form).dim if args.form else 2
            sys.stdout.write(canonical_json(_registry(args, n).to_json()))
            return 0
        if not args.form:
            raise FormError("--form is required")
        form = parse_form(args.form)
        require_admissible(form)
        coords = ([int(x) for x in args.control.split(",")] if args.control
                  else default_control(form))
        u0 = ControlVector.make(form, coords)

        config = RunConfig()
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                config = RunConfig.from_json(json.load(fh))
        if args.facet_cap is not None:
            config.facet_cap = "auto" if args.facet_cap == "auto" else int(args.facet_cap)
        if args.budget is not None:
            config.batch_budget = args.budget
        config.threads = max(1, args.threads)
        config.degree = args.degree
        registry = _registry(args, form.dim)
        config.registry = registry

        if args.resume and os.path.exists(args.resume):
            state = restore_session(args.resume, form, u0)
        else:
            state = initial_state(form, u0)
        try:
            verdict = run(form, u0, config, state)
        finally:
            if args.resume:
                save_session(state, args.resume)
    except (FormError, EngineError, CacheError, MissingConstant, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    report = build_report(form, u0, config, verdict, registry)
    if args.out:
        write_report(report, args.out)
    if args.dot:
        write_dot(form, verdict.roots, args.dot)
    if not args.quiet:
        print(summary(report))
    return EXIT_CODES[verdict.status]


def main():
    sys.exit(cli_run())
