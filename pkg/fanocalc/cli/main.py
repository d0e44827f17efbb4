import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Literal, cast

from pydantic import BaseModel, field_validator

from fanocalc.__version__ import __version__
from fanocalc.catalog import (
    DEFAULT_MAX_WEIGHT,
    MIN_MAX_WEIGHT,
    Catalog,
    enumerate_families,
    family,
)
from fanocalc.core.exceptions import (
    AnchorMismatchError,
    CountMismatchError,
    FanoCalcError,
    UnknownIdError,
)
from fanocalc.core.rational import format_rational
from fanocalc.core.schema import validate_report
from fanocalc.inequalities.engine import check_certificate, fm_feasibility
from fanocalc.inequalities.golden import GOLDEN_SYSTEMS
from fanocalc.inequalities.parser import parse_system
from fanocalc.inequalities.system import Feasible, LinearSystem
from fanocalc.io.export import export
from fanocalc.ledger.claims import ClaimStatus
from fanocalc.ledger.report import verify_all
from fanocalc.utils.hashing import digest_text

_STATUS_MARK = {
    ClaimStatus.MATCH: "✅",
    ClaimStatus.ANOMALY_MATCH: "⚠️ ",
    ClaimStatus.MISMATCH: "❌",
    ClaimStatus.INFORMATIONAL: "ℹ️ ",
}


class CliConfig(BaseModel):
    """Validated flag set of one invocation."""

    command: str
    max_weight: int = DEFAULT_MAX_WEIGHT
    workers: int = 1
    output: Path | None = None
    format: Literal["json", "csv", "text"] = "json"
    verbosity: int = 0

    @field_validator("max_weight")
    @classmethod
    def validate_max_weight(cls, v: int) -> int:
        if v < MIN_MAX_WEIGHT:
            raise ValueError(f"--max-weight must be at least {MIN_MAX_WEIGHT}")
        return v

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("--workers must be at least 1")
        return v

    @field_validator("verbosity")
    @classmethod
    def validate_verbosity(cls, v: int) -> int:
        return max(0, min(v, 2))

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            command=args.cmd,
            max_weight=getattr(args, "max_weight", DEFAULT_MAX_WEIGHT),
            workers=getattr(args, "workers", 1),
            output=getattr(args, "out", None) or getattr(args, "report", None),
            format=getattr(args, "format", "json"),
            verbosity=args.verbose,
        )


def _error(message: str) -> None:
    print(f"❌ {message}", file=sys.stderr)


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _catalog(config: CliConfig) -> Catalog:
    return enumerate_families(config.max_weight, workers=config.workers)


def cmd_version(_args: argparse.Namespace) -> int:
    print(__version__)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = CliConfig.from_args(args)
    catalog = _catalog(config)
    if config.format == "text":
        text = "\n".join(record.render() for record in catalog) + "\n"
    else:
        text = export(catalog, "csv" if config.format == "csv" else "json")

    if config.output is None:
        sys.stdout.write(text)
        return 0
    config.output.parent.mkdir(parents=True, exist_ok=True)
    config.output.write_text(text, encoding="utf-8")
    print(f"✅ {len(catalog)} families written to {config.output} ({digest_text(text)})")
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    config = CliConfig.from_args(args)
    record = family(_catalog(config), args.gimel)
    if args.json:
        print(json.dumps(record.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(record.render())
    return 0


def cmd_ledger_verify(args: argparse.Namespace) -> int:
    config = CliConfig.from_args(args)
    report = verify_all(_catalog(config))

    for claim in report.claims:
        # Soft claims never fail the run.
        mark = _STATUS_MARK[ClaimStatus.INFORMATIONAL if claim.soft else claim.status]
        line = f"{mark} {claim.id}: {claim.status.value}"
        if claim.convention:
            line += f" [{claim.convention}]"
        if claim.expected_count is not None:
            line += f" count={len(claim.computed)} stated={claim.expected_count}"
        if claim.missing or claim.extra:
            line += f" missing={claim.missing} extra={claim.extra}"
        print(line)
    for outcome in report.fm:
        mark = "✅" if outcome.verdict is outcome.expected else "⚠️ "
        detail = f"stated {outcome.expected.value}"
        if outcome.certificate_ok is not None:
            detail += f", certificate ok: {outcome.certificate_ok}"
        print(f"{mark} {outcome.id}: {outcome.verdict.value} ({detail})")
    print(f"{len(report.discrepancies)} discrepancy records")
    print(f"Overall: {report.status.value}")

    if config.output is not None:
        payload = report.to_json()
        validate_report(json.loads(payload))
        config.output.parent.mkdir(parents=True, exist_ok=True)
        config.output.write_text(payload, encoding="utf-8")
        print(f"📝 Report: {config.output}")
    return 0 if report.passed else 1


def _load_system(source: str) -> tuple[LinearSystem, str | None]:
    if source in GOLDEN_SYSTEMS:
        entry = GOLDEN_SYSTEMS[source]
        return entry.system, entry.expected.value
    path = Path(source)
    if not path.is_file():
        known = ", ".join(GOLDEN_SYSTEMS)
        raise UnknownIdError(f"'{source}' is neither a known system ({known}) nor a file")
    return parse_system(path.read_text(encoding="utf-8")), None


def cmd_lp_check(args: argparse.Namespace) -> int:
    system, stated = _load_system(args.source)
    outcome = fm_feasibility(system)
    print(outcome.verdict.value.upper())
    if stated is not None and stated != outcome.verdict.value:
        print(f"⚠️  stated verdict: {stated}")
    if isinstance(outcome, Feasible):
        for name, value in outcome.witness.items():
            print(f"  {name} = {format_rational(value)}")
        return 0
    if args.certificate:
        for constraint, multiplier in zip(system.constraints, outcome.certificate.multipliers):
            if multiplier != 0:
                print(f"  {format_rational(multiplier)} × [{constraint.render(system.variables)}]")
        ok = check_certificate(system, outcome.certificate)
        print(f"{'✅' if ok else '❌'} certificate {'valid' if ok else 'INVALID'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanocalc", description="Weighted Fano hypersurface calculator"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (repeatable)"
    )
    sub = parser.add_subparsers(dest="cmd")

    def add_catalog_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
        p.add_argument("--workers", type=int, default=1, help="Threads used for enumeration")

    # fanocalc version
    p_version = sub.add_parser("version", help="Print version")
    p_version.set_defaults(func=cmd_version)

    # fanocalc enumerate
    p_enum = sub.add_parser("enumerate", help="Enumerate the families and export them")
    add_catalog_flags(p_enum)
    p_enum.add_argument("--out", type=Path, help="Write to this file instead of stdout")
    p_enum.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    # fanocalc family
    p_family = sub.add_parser("family", help="Show one family")
    p_family.add_argument("gimel", type=int)
    p_family.add_argument("--json", action="store_true", help="Print the JSON record")
    add_catalog_flags(p_family)
    p_family.set_defaults(func=cmd_family)

    # fanocalc ledger verify
    p_ledger = sub.add_parser("ledger", help="Claims about the catalog")
    ledger_sub = p_ledger.add_subparsers(dest="ledger_cmd", required=True)
    p_verify = ledger_sub.add_parser("verify", help="Evaluate every claim and golden system")
    p_verify.add_argument("--report", type=Path, help="Write the JSON report here")
    add_catalog_flags(p_verify)
    p_verify.set_defaults(func=cmd_ledger_verify)

    # fanocalc lp check
    p_lp = sub.add_parser("lp", help="Linear inequality systems")
    lp_sub = p_lp.add_subparsers(dest="lp_cmd", required=True)
    p_check = lp_sub.add_parser("check", help="Decide a golden system or a text file")
    p_check.add_argument("source", help="Golden id (e.g. SYS-23) or path to a system file")
    p_check.add_argument("--certificate", action="store_true", help="Print the certificate")
    p_check.set_defaults(func=cmd_lp_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func = getattr(args, "func", None)
    if func is None:
        parser.print_help(sys.stderr)
        return 2
    _configure_logging(args.verbose)
    handler = cast(Callable[[argparse.Namespace], int], func)
    try:
        return handler(args)
    except (CountMismatchError, AnchorMismatchError) as exc:
        _error(str(exc))
        return 1
    except (FanoCalcError, ValueError, OSError) as exc:
        _error(str(exc))
        return 2
