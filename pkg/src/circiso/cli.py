"""Command-line interface.

Usage:
    circiso reduce --n 32 --set 9,2,23,25,30,7
    circiso orbit --n 32 --set 1,2,15
    circiso theta --n 32 --m 2 --t 4 --set 1,2,15
    circiso classify --n 32 --r 1,2,15 --s 2,7,9
    circiso enumerate --n 32 --m 2 --json -
    circiso family --p 3 --family-n 1 --x 1 --y 0
    circiso verify-fixtures

Exit codes: 0 success, 1 domain error, 2 usage error, 3 fixture mismatch.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from . import __version__
from .adam import orbit as adam_orbit
from .circulant import ConnectionSet
from .classify import Identical, NotIsomorphicByTheseMethods, Type1, Type2, classify_pair
from .enumeration import SCOPES, enumerate_type2
from .errors import DomainError
from .families import FamilyParams, family_verify
from .fixtures import (
    packaged_errata_path,
    packaged_fixture_paths,
    parse_errata_file,
    parse_fixture_file,
    verify_rows,
)
from .modring import reflexive_reduce
from .theta import ThetaParams, apply as theta_apply

SCHEMA_VERSION = 1


def _emit_json(target: str, command: str, params: dict, result: dict) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "result": result,
    }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if target == "-":
        click.echo(text)
    else:
        Path(target).write_text(text + "\n")


def _jumps(text: str) -> str:
    return text


@click.group()
@click.version_option(version=__version__)
def main() -> None:
    """Circulant-graph isomorphism toolkit."""


def _domain_guard(fn):
    """Map DomainError to exit code 1 with a clean message."""
    import functools

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@main.command()
@click.option("--n", "n", type=int, required=True, help="Graph order.")
@click.option("--set", "values", type=str, required=True, help="Comma-separated integers.")
@click.option("--json", "json_target", type=str, default=None, help="Write JSON to PATH or '-'.")
@_domain_guard
def reduce(n: int, values: str, json_target: str | None) -> None:
    """Reflexively reduce a list of integers modulo N."""
    try:
        ints = [int(p) for p in values.replace(" ", "").split(",") if p]
    except ValueError:
        raise DomainError(f"bad integer list {values!r}")
    reduced = sorted(reflexive_reduce(n, ints))
    click.echo(",".join(str(v) for v in reduced))
    if 0 in reduced:
        click.echo("note: 0 marks a self-loop jump", err=True)
    if json_target:
        _emit_json(json_target, "reduce", {"n": n, "set": ints}, {"reduced": reduced})


@main.command()
@click.option("--n", "n", type=int, required=True, help="Graph order.")
@click.option("--set", "values", type=str, required=True, help="Jump set, e.g. 1,2,15.")
@click.option("--json", "json_target", type=str, default=None)
@_domain_guard
def orbit(n: int, values: str, json_target: str | None) -> None:
    """Unit-multiplication orbit of a connection set."""
    cs = ConnectionSet.parse(n, values)
    orb = adam_orbit(cs)
    members = sorted(orb.members, key=lambda c: c.jumps)
    for member in members:
        click.echo(f"x={orb.witness[member]}: {member}")
    if json_target:
        _emit_json(
            json_target,
            "orbit",
            {"n": n, "set": list(cs.jumps)},
            {
                "members": [
                    {"jumps": list(m.jumps), "x": orb.witness[m]} for m in members
                ]
            },
        )


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--set", "values", type=str, required=True)
@click.option("--json", "json_target", type=str, default=None)
@_domain_guard
def theta(n: int, m: int, t: int, values: str, json_target: str | None) -> None:
    """Apply the residue-class rotation map and report the image."""
    cs = ConnectionSet.parse(n, values)
    image = theta_apply(ThetaParams(n, m, t), cs)
    if image.circulant_result is not None:
        click.echo(str(image.circulant_result))
    else:
        click.echo("not circulant")
    if json_target:
        result = {
            "circulant": image.circulant_result is not None,
            "jumps": list(image.circulant_result.jumps) if image.circulant_result else None,
            "edge_count": len(image.image_edges.edges),
        }
        _emit_json(
            json_target,
            "theta",
            {"n": n, "m": m, "t": t, "set": list(cs.jumps)},
            result,
        )


@main.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r_text", type=str, required=True)
@click.option("--s", "s_text", type=str, required=True)
@click.option("--json", "json_target", type=str, default=None)
@_domain_guard
def classify(n: int, r_text: str, s_text: str, json_target: str | None) -> None:
    """Classify a pair: Identical, Type1, Type2, or neither mechanism."""
    a = ConnectionSet.parse(n, r_text)
    b = ConnectionSet.parse(n, s_text)
    verdict = classify_pair(a, b)
    if isinstance(verdict, Identical):
        line, result = "Identical", {"kind": "identical"}
    elif isinstance(verdict, Type1):
        line = f"Type1 x={verdict.witness_x}"
        result = {"kind": "type1", "x": verdict.witness_x}
    elif isinstance(verdict, Type2):
        line = f"Type2 m={verdict.m} t={verdict.witness_t}"
        result = {
            "kind": "type2",
            "m": verdict.m,
            "t": verdict.witness_t,
            "reverse": verdict.reverse,
        }
    else:
        line, result = "NotIsomorphicByTheseMethods", {"kind": "none"}
    click.echo(line)
    if json_target:
        _emit_json(
            json_target,
            "classify",
            {"n": n, "r": list(a.jumps), "s": list(b.jumps)},
            result,
        )


@main.command(name="enumerate")
@click.option("--n", "n", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--min-size", type=int, default=3, show_default=True)
@click.option(
    "--scope",
    type=click.Choice(SCOPES),
    default="seeded",
    show_default=True,
    help="seeded: pairs extending minimum-size seeds (the tabulated scope); full: every pair found.",
)
@click.option("--workers", type=int, default=None, help="Parallel scan workers.")
@click.option("--json", "json_target", type=str, default=None, help="Write JSON to PATH or '-'.")
@click.option("--csv", "csv_target", type=str, default=None, help="Write pair CSV to PATH.")
@_domain_guard
def cmd_enumerate(
    n: int,
    m: int,
    min_size: int,
    scope: str,
    workers: int | None,
    json_target: str | None,
    csv_target: str | None,
) -> None:
    """Exhaustively enumerate Type-2 pairs and classes for (N, M)."""
    report = enumerate_type2(n, m, min_size=min_size, scope=scope, workers=workers)
    click.echo(f"pair_count: {report.pair_count}")
    click.echo(f"classes: {len(report.classes)}")
    if scope == "seeded" and report.full_pair_count != report.pair_count:
        click.echo(
            f"note: full scan holds {report.full_pair_count} pairs; "
            f"{report.full_pair_count - report.pair_count} lie in fused families "
            "beyond the seeded scope (--scope full to list them)"
        )
    sizes = sorted({len(c) for c in report.classes})
    if sizes:
        click.echo(f"class sizes: {sizes}")
    if json_target:
        _emit_json(
            json_target,
            "enumerate",
            {"n": n, "m": m, "min_size": min_size, "scope": scope},
            report.to_dict(),
        )
    if csv_target:
        with open(csv_target, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "m", "R", "S", "t_witness"])
            for rec in report.pairs:
                writer.writerow(
                    [n, m, ",".join(map(str, rec.r)), ",".join(map(str, rec.s)), rec.t]
                )


@main.command()
@click.option("--p", "p", type=int, required=True, help="Odd prime.")
@click.option("--family-n", "family_n", type=int, required=True, help="Multiplier n of the order n*p^3.")
@click.option("--x", "x", type=int, required=True)
@click.option("--y", "y", type=int, required=True)
@click.option("--json", "json_target", type=str, default=None)
@_domain_guard
def family(p: int, family_n: int, x: int, y: int, json_target: str | None) -> None:
    """Generate and verify one parametric Type-2 family."""
    check = family_verify(FamilyParams(p=p, n=family_n, x=x, y=y))
    for i, member in enumerate(check.members, start=1):
        click.echo(f"member {i}: {member}")
    click.echo(f"rotations verified: {all(ok for *_, ok in check.rotation_table)}")
    click.echo(f"unit-free: {check.unit_free}")
    click.echo(f"passed: {check.passed}")
    if json_target:
        _emit_json(
            json_target,
            "family",
            {"p": p, "n": family_n, "x": x, "y": y},
            {
                "order": check.params.order,
                "members": [list(m.jumps) for m in check.members],
                "rotation_table": [list(row) for row in check.rotation_table],
                "unit_free": check.unit_free,
                "passed": check.passed,
            },
        )
    if not check.passed:
        sys.exit(1)


@main.command(name="verify-fixtures")
@click.argument("paths", nargs=-1, type=click.Path(exists=True))
@click.option("--errata", "errata_path", type=click.Path(exists=True), default=None)
@click.option("--json", "json_target", type=str, default=None)
@_domain_guard
def verify_fixtures(paths: tuple[str, ...], errata_path: str | None, json_target: str | None) -> None:
    """Re-classify fixture rows; exit 0 only when all non-errata rows match."""
    files = [Path(p) for p in paths] if paths else packaged_fixture_paths()
    errata = parse_errata_file(errata_path or packaged_errata_path())
    rows = []
    for path in files:
        rows.extend(parse_fixture_file(path))
    if not rows:
        click.echo("warning: no fixture rows found", err=True)
        click.echo("0 mismatches")
        return
    report = verify_rows(rows, errata)
    click.echo(f"rows: {report.rows}  matches: {report.matches}")
    click.echo(f"errata applied: {len(report.errata_applied)}")
    for outcome in report.mismatches:
        row = outcome.row
        click.echo(
            f"MISMATCH {row.source}: label {row.label} but classified "
            f"{outcome.actual} {outcome.witness}".rstrip()
        )
    for outcome in report.errata_failures:
        click.echo(f"BAD ERRATUM {outcome.row.source}: {outcome.detail}")
    for source in report.stale_errata:
        click.echo(f"STALE ERRATUM {source}: no fixture row used it")
    click.echo(f"{len(report.mismatches)} mismatches")
    if json_target:
        _emit_json(
            json_target,
            "verify-fixtures",
            {"paths": [str(p) for p in files]},
            {
                "rows": report.rows,
                "matches": report.matches,
                "mismatches": [o.row.source for o in report.mismatches],
                "errata_applied": [o.row.source for o in report.errata_applied],
                "errata_failures": [o.row.source for o in report.errata_failures],
                "stale_errata": list(report.stale_errata),
                "ok": report.ok,
            },
        )
    if not report.ok:
        sys.exit(3)


if __name__ == "__main__":
    main()
