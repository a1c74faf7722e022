"""Fixture verification: re-classify tabulated pairs and reconcile errata.

Fixture files are TSV with columns ``n  R  S  label  source`` where R and S
use the comma-separated jump syntax and label is T1 or T2.  Lines starting
with ``#`` and blank lines are ignored.  The shipped fixtures are verbatim
transcriptions of the published tabulation; the handful of rows whose
printed sets contain typographical slips are listed in an errata file,
each with a corrected image that must re-verify against an explicit
witness before the override is accepted.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .circulant import ConnectionSet
from .classify import Identical, NotIsomorphicByTheseMethods, Type1, Type2, classify_pair
from .errors import DomainError

LABELS = ("T1", "T2")
ERRATA_ISSUES = ("size-mismatch", "image-typo")


class FixtureFormatError(DomainError):
    """Raised when a fixture or errata file cannot be parsed; the message
    lists the offending line numbers."""


@dataclass(frozen=True)
class FixtureRow:
    n: int
    r: tuple[int, ...]
    s: tuple[int, ...]
    label: str
    source: str
    line: int


@dataclass(frozen=True)
class Erratum:
    source: str
    issue: str
    corrected_s: tuple[int, ...]
    note: str


@dataclass(frozen=True)
class RowOutcome:
    row: FixtureRow
    actual: str
    witness: str
    status: str  # "match" | "mismatch" | "errata-ok" | "errata-bad"
    detail: str = ""


@dataclass(frozen=True)
class FixtureReport:
    outcomes: tuple[RowOutcome, ...]
    rows: int
    matches: int
    mismatches: tuple[RowOutcome, ...]
    errata_applied: tuple[RowOutcome, ...]
    errata_failures: tuple[RowOutcome, ...]
    stale_errata: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.errata_failures and not self.stale_errata


def _parse_jumps(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p)


def parse_fixture_file(path: str | Path) -> list[FixtureRow]:
    rows: list[FixtureRow] = []
    bad: list[int] = []
    with open(path, newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 5:
                bad.append(lineno)
                continue
            try:
                n = int(parts[0])
                r = _parse_jumps(parts[1])
                s = _parse_jumps(parts[2])
                label = parts[3].strip()
                if label not in LABELS:
                    raise ValueError(label)
            except ValueError:
                bad.append(lineno)
                continue
            rows.append(FixtureRow(n, r, s, label, parts[4].strip(), lineno))
    if bad:
        raise FixtureFormatError(f"{path}: unparseable fixture lines {bad}")
    return rows


def parse_errata_file(path: str | Path) -> dict[str, Erratum]:
    out: dict[str, Erratum] = {}
    bad: list[int] = []
    with open(path, newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4 or parts[1] not in ERRATA_ISSUES:
                bad.append(lineno)
                continue
            try:
                corrected = _parse_jumps(parts[2])
            except ValueError:
                bad.append(lineno)
                continue
            out[parts[0].strip()] = Erratum(parts[0].strip(), parts[1], corrected, parts[3])
    if bad:
        raise FixtureFormatError(f"{path}: unparseable errata lines {bad}")
    return out


def _classify_label(n: int, r: tuple[int, ...], s: tuple[int, ...]) -> tuple[str, str]:
    """(label, witness description) for a fixture row, via full classification."""
    try:
        a = ConnectionSet.from_values(n, r)
        b = ConnectionSet.from_values(n, s)
    except DomainError as exc:
        return "invalid", str(exc)
    verdict = classify_pair(a, b)
    if isinstance(verdict, Identical):
        return "identical", ""
    if isinstance(verdict, Type1):
        return "T1", f"x={verdict.witness_x}"
    if isinstance(verdict, Type2):
        direction = "s->r" if verdict.reverse else "r->s"
        return "T2", f"m={verdict.m} t={verdict.witness_t} {direction}"
    assert isinstance(verdict, NotIsomorphicByTheseMethods)
    return "none", ""


def verify_rows(rows: list[FixtureRow], errata: dict[str, Erratum]) -> FixtureReport:
    """Re-classify every row; errata rows must mismatch for their documented
    reason and their corrected pair must verify with the fixture's label."""
    outcomes: list[RowOutcome] = []
    used_errata: set[str] = set()
    for row in rows:
        actual, witness = _classify_label(row.n, row.r, row.s)
        erratum = errata.get(row.source)
        if actual == row.label:
            if erratum is not None:
                outcomes.append(
                    RowOutcome(row, actual, witness, "errata-bad", "erratum listed but row matches")
                )
                used_errata.add(row.source)
            else:
                outcomes.append(RowOutcome(row, actual, witness, "match"))
            continue
        if erratum is None:
            outcomes.append(RowOutcome(row, actual, witness, "mismatch"))
            continue
        used_errata.add(row.source)
        issue_ok = (
            len(set(row.r)) != len(set(row.s))
            if erratum.issue == "size-mismatch"
            else len(set(row.r)) == len(set(row.s))
        )
        fixed_label, fixed_witness = _classify_label(row.n, row.r, erratum.corrected_s)
        if issue_ok and fixed_label == row.label:
            outcomes.append(
                RowOutcome(row, actual, witness, "errata-ok", f"corrected: {fixed_witness}")
            )
        else:
            outcomes.append(
                RowOutcome(
                    row,
                    actual,
                    witness,
                    "errata-bad",
                    f"correction classifies {fixed_label} ({fixed_witness})",
                )
            )
    stale = tuple(sorted(set(errata) - used_errata))
    return FixtureReport(
        outcomes=tuple(outcomes),
        rows=len(rows),
        matches=sum(1 for o in outcomes if o.status == "match"),
        mismatches=tuple(o for o in outcomes if o.status == "mismatch"),
        errata_applied=tuple(o for o in outcomes if o.status == "errata-ok"),
        errata_failures=tuple(o for o in outcomes if o.status == "errata-bad"),
        stale_errata=stale,
    )


def packaged_fixture_paths() -> list[Path]:
    """The shipped fixture files, in verification order."""
    root = resources.files("circiso").joinpath("data")
    names = [
        "seed_pairs_order32.tsv",
        "unit_pairs_order32.tsv",
        "extension_tables_a.tsv",
        "extension_tables_b.tsv",
    ]
    return [Path(str(root.joinpath(name))) for name in names]


def packaged_errata_path() -> Path:
    return Path(str(resources.files("circiso").joinpath("data", "errata.tsv")))
