"""
Command-line entry point.

    ginarl gin ideals/two_squares.ideal
    ginarl arl ideals/not_arl_four_variables.ideal --json
    ginarl froberg --n 3 --degrees 2,2,2

Exit codes: 0 success or property true, 1 property false, 2 input error,
3 computation failure.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Annotated, Any, Callable, Optional, Sequence

import typer
from rich.console import Console
from rich.logging import RichHandler

from .config import OutputFormat, RunConfig
from .gin import GinResult, compute_gin, oracle_compare, random_coordinate_change, trial_rng
from .groebner import buchberger_reduced, initial_ideal
from .ideal_file import IdealFile, parse_ideal_file
from .lefschetz import AnalysisReport, arl_check_direct, mainthm_analyze, slp_check, ssp_check
from .monomial_ideal import MonomialIdeal, hilbert_function, minimalize
from .profile import f_profile
from .report import (
    analysis_doc,
    arl_direct_doc,
    build_report,
    certificate_doc,
    hilbert_doc,
    ideal_doc,
    profile_doc,
    property_doc,
    render_report,
)
from .series import froberg_series
from .validators import ComputationError, GinArlError, ValidationError

logger = logging.getLogger(__name__)

MODULE = "cli-io"

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_COMPUTATION_ERROR = 3


class Command(str, Enum):
    GIN = "gin"
    ARL = "arl"
    SLP = "slp"
    SSP = "ssp"
    HILBERT = "hilbert"
    FROBERG = "froberg"
    MAINTHM = "mainthm"
    ORACLE_COMPARE = "oracle-compare"


@dataclass(frozen=True)
class CommandOutcome:
    text: str
    document: dict[str, Any]
    exit_code: int

    def render(self, output_format: OutputFormat) -> str:
        if output_format is OutputFormat.STRUCTURED:
            return render_report(self.document)
        return self.text if self.text.endswith("\n") else self.text + "\n"


@dataclass
class _Answer:
    text: str
    exit_code: int = EXIT_OK
    result: Optional[dict[str, Any]] = None
    witnesses: dict[str, Any] = field(default_factory=dict)
    certificate: Optional[dict[str, Any]] = None
    timing: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class _Request:
    command: Command
    ideal: Optional[IdealFile]
    config: RunConfig
    n: Optional[int]
    degrees: Optional[tuple[int, ...]]


# ── Formatting helpers ───────────────────────────────────────────


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _tuple_text(alpha: Optional[Sequence[int]]) -> str:
    return "(" + ", ".join(str(a) for a in alpha or ()) + ")"


def _ideal_text(ideal: MonomialIdeal) -> str:
    return ", ".join(ideal.generator_strings())


def _certificate_text(result: GinResult) -> str:
    cert = result.certificate
    return (
        f"certificate: strongly_stable={_flag(cert.strongly_stable)} "
        f"trials_agreeing={cert.trials_agreeing} coefficient_bound={cert.coefficient_bound} "
        f"seed={cert.seed} trials_used={result.trials_used}"
    )


def _analysis_text(report: AnalysisReport) -> str:
    ctx = report.ideal.ctx
    lines = [f"arl: {_flag(report.arl)}"]
    if not report.arl:
        lines[0] += (
            f"; witness generator {ctx.format_monomial(report.arl_direct.generator)}, "
            f"monomial {ctx.format_monomial(report.arl_direct.monomial)}"
        )
    prof = report.arl_profile
    if prof.holds:
        lines.append("arl_profile: true")
    else:
        detail = f"condition {prof.condition} at i={prof.index}, alpha {_tuple_text(prof.alpha)}"
        if prof.beta is not None:
            detail += f", beta {_tuple_text(prof.beta)}"
        lines.append(f"arl_profile: false ({detail})")
    lines.append(f"slp: {_flag(report.slp.holds)}")
    lines.append(f"ssp: {_flag(report.ssp.holds)}")
    cond1 = ", ".join(f"i={r.index} {_flag(r.holds)}" for r in report.condition1) or "none"
    lines.append(f"condition1: {cond1}")
    parts = []
    for r in report.condition2:
        item = f"i={r.index} {_flag(r.holds)}"
        if not r.holds:
            item += f" (alpha {_tuple_text(r.alpha)}, beta {_tuple_text(r.beta)})"
        parts.append(item)
    lines.append(f"condition2: {', '.join(parts) or 'none'}")
    return "\n".join(lines)


def _property_text(holds: bool, witness: Optional[Sequence[int]]) -> str:
    if holds:
        return "true"
    return f"false; witness alpha {_tuple_text(witness)}"


# ── Command handlers ─────────────────────────────────────────────


def _require_ideal(req: _Request) -> IdealFile:
    if req.ideal is None:
        raise ValidationError(f"Command '{req.command.value}' needs an ideal file.", module=MODULE)
    return req.ideal


def _analysed_ideal(req: _Request) -> tuple[MonomialIdeal, Optional[GinResult], list[str]]:
    """Monomial files are analysed as given; anything else is replaced by its gin."""
    ideal = _require_ideal(req)
    if ideal.is_monomial():
        return minimalize(ideal.ctx, ideal.monomials()), None, []
    result = compute_gin(ideal.generators, req.config.to_gin_config())
    return result.gin, result, ["input is not monomial; analysed gin(I) computed internally"]


def _with_gin(answer: _Answer, gin_result: Optional[GinResult], notes: list[str]) -> _Answer:
    answer.notes.extend(notes)
    if gin_result is not None:
        answer.certificate = certificate_doc(gin_result)
        answer.timing.update(gin_result.work_counters())
    return answer


def _run_gin(req: _Request) -> _Answer:
    ideal = _require_ideal(req)
    result = compute_gin(ideal.generators, req.config.to_gin_config())
    return _Answer(
        text=_ideal_text(result.gin) + "\n" + _certificate_text(result),
        result={**ideal_doc(result.gin), "trials_used": result.trials_used},
        certificate=certificate_doc(result),
        timing=result.work_counters(),
    )


def _run_arl(req: _Request) -> _Answer:
    ideal, gin_result, notes = _analysed_ideal(req)
    check = arl_check_direct(ideal)
    if check.holds:
        text = "true"
    else:
        text = (
            f"false; witness generator {ideal.ctx.format_monomial(check.generator)}, "
            f"monomial {ideal.ctx.format_monomial(check.monomial)}"
        )
    doc = arl_direct_doc(ideal.ctx, check)
    answer = _Answer(
        text=text,
        exit_code=EXIT_OK if check.holds else EXIT_PROPERTY_FALSE,
        result={**ideal_doc(ideal), "holds": check.holds},
        witnesses={k: v for k, v in doc.items() if k != "holds"},
    )
    return _with_gin(answer, gin_result, notes)


def _property_command(check: Callable) -> Callable[[_Request], _Answer]:
    def run(req: _Request) -> _Answer:
        ideal, gin_result, notes = _analysed_ideal(req)
        profile = f_profile(ideal)
        outcome = check(profile)
        doc = property_doc(outcome)
        answer = _Answer(
            text=_property_text(outcome.holds, outcome.witness),
            exit_code=EXIT_OK if outcome.holds else EXIT_PROPERTY_FALSE,
            result={**ideal_doc(ideal), "holds": outcome.holds, "profile": profile_doc(profile)},
            witnesses={} if outcome.holds else {"alpha": doc["alpha"]},
        )
        return _with_gin(answer, gin_result, notes)

    return run


def _run_hilbert(req: _Request) -> _Answer:
    ideal = _require_ideal(req)
    timing: dict[str, Any] = {}
    if ideal.is_monomial():
        monomial = minimalize(ideal.ctx, ideal.monomials())
    else:
        gb = buchberger_reduced(ideal.generators, degree_cap=req.config.max_degree)
        monomial = initial_ideal(gb)
        timing = gb.stats.as_dict()
        if gb.truncated and monomial.is_artinian():
            raise ComputationError(
                f"Groebner basis computation reached the degree ceiling {req.config.max_degree}.",
                module=MODULE,
            )
    h = hilbert_function(monomial)
    return _Answer(
        text=", ".join(str(v) for v in h),
        result={"hilbert_function": hilbert_doc(h), "socle_degree": h.socle_degree},
        timing=timing,
    )


def _run_froberg(req: _Request) -> _Answer:
    if req.n is None or not req.degrees:
        raise ValidationError("froberg needs --n and --degrees.", module=MODULE)
    series = froberg_series(req.n, req.degrees)
    return _Answer(text=str(series), result={"series": list(series.coeffs)})


def _run_mainthm(req: _Request) -> _Answer:
    ideal, gin_result, notes = _analysed_ideal(req)
    report = mainthm_analyze(ideal)
    doc = analysis_doc(report)
    answer = _Answer(
        text=_analysis_text(report),
        exit_code=EXIT_OK if report.arl else EXIT_PROPERTY_FALSE,
        result={**ideal_doc(ideal), "arl": report.arl},
        witnesses={k: v for k, v in doc.items() if k != "arl"},
    )
    return _with_gin(answer, gin_result, notes)


def _run_oracle_compare(req: _Request) -> _Answer:
    ideal = _require_ideal(req)
    gin_config = req.config.to_gin_config()
    result = compute_gin(ideal.generators, gin_config)
    # A draw index past every acceptance trial gives a fresh coordinate change.
    g, _ = random_coordinate_change(
        ideal.ctx, trial_rng(gin_config.seed, gin_config.max_trials), gin_config.coeff_bound
    )
    mismatch = oracle_compare(ideal.generators, result.gin, g, prescreen=gin_config.modular_prescreen)
    ctx = ideal.ctx
    if mismatch is None:
        text = "agree"
        witnesses: dict[str, Any] = {}
    else:
        expected = [ctx.format_monomial(m) for m in mismatch.expected]
        found = [ctx.format_monomial(m) for m in mismatch.found]
        text = (
            f"mismatch at degree {mismatch.degree}: buchberger [{', '.join(expected)}] "
            f"pivots [{', '.join(found)}]"
        )
        witnesses = {"degree": mismatch.degree, "buchberger": expected, "pivots": found}
    return _Answer(
        text=text,
        exit_code=EXIT_OK if mismatch is None else EXIT_PROPERTY_FALSE,
        result={**ideal_doc(result.gin), "agree": mismatch is None},
        witnesses=witnesses,
        certificate=certificate_doc(result),
        timing=result.work_counters(),
    )


_HANDLERS: dict[Command, Callable[[_Request], _Answer]] = {
    Command.GIN: _run_gin,
    Command.ARL: _run_arl,
    Command.SLP: _property_command(slp_check),
    Command.SSP: _property_command(ssp_check),
    Command.HILBERT: _run_hilbert,
    Command.FROBERG: _run_froberg,
    Command.MAINTHM: _run_mainthm,
    Command.ORACLE_COMPARE: _run_oracle_compare,
}


# ── Dispatch ─────────────────────────────────────────────────────


def _inputs_doc(
    ideal: Optional[IdealFile], config: RunConfig, n: Optional[int], degrees: Optional[Sequence[int]]
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "config": config.model_dump(mode="json", exclude={"output_format", "wall_clock"}),
    }
    if ideal is not None:
        doc.update(
            ring=list(ideal.ctx.names),
            generators=[p.to_string() for p in ideal.generators],
            metadata=dict(ideal.metadata),
        )
    if n is not None:
        doc["n"] = n
    if degrees is not None:
        doc["degrees"] = list(degrees)
    return doc


def error_outcome(command: Command, inputs: dict[str, Any], err: GinArlError) -> CommandOutcome:
    code = EXIT_INPUT_ERROR if isinstance(err, ValidationError) else EXIT_COMPUTATION_ERROR
    document = build_report(
        command.value,
        inputs,
        result=None,
        error={"module": err.module, "message": err.message, "kind": type(err).__name__},
    )
    return CommandOutcome(text=str(err), document=document, exit_code=code)


def run_command(
    command: Command | str,
    ideal: Optional[IdealFile] = None,
    config: Optional[RunConfig] = None,
    n: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> CommandOutcome:
    """Run one subcommand; errors become outcomes with exit codes 2 or 3."""
    command = Command(command)
    config = config or RunConfig()
    inputs = _inputs_doc(ideal, config, n, degrees)
    request = _Request(command, ideal, config, n, tuple(degrees) if degrees is not None else None)

    started = time.perf_counter()
    try:
        answer = _HANDLERS[command](request)
    except GinArlError as err:
        logger.debug("%s failed: %s", command.value, err)
        return error_outcome(command, inputs, err)

    timing = dict(answer.timing)
    if config.wall_clock:
        timing["wall_clock_seconds"] = round(time.perf_counter() - started, 6)
    document = build_report(
        command.value,
        inputs,
        result=answer.result,
        witnesses=answer.witnesses,
        certificate=answer.certificate,
        timing=timing,
        notes=answer.notes,
    )
    text = answer.text
    if answer.notes:
        text = "\n".join(f"note: {note}" for note in answer.notes) + "\n" + text
    return CommandOutcome(text=text, document=document, exit_code=answer.exit_code)


# ── Typer application ────────────────────────────────────────────

app = typer.Typer(add_completion=False, help="Generic initial ideals and Lefschetz-type properties.")

IdealPath = Annotated[Path, typer.Argument(help="Ideal file: 'ring: x, y, ...' then one generator per line.")]
SeedOpt = Annotated[int, typer.Option("--seed", help="Seed for the random coordinate changes.")]
CoeffBoundOpt = Annotated[int, typer.Option("--coeff-bound", help="Matrix entries are drawn from [-b, b].")]
MaxTrialsOpt = Annotated[int, typer.Option("--max-trials", help="Coordinate changes tried before giving up.")]
MaxDegreeOpt = Annotated[int, typer.Option("--max-degree", help="Degree ceiling for Groebner computations.")]
JsonOpt = Annotated[bool, typer.Option("--json", help="Print the structured JSON report.")]
WallClockOpt = Annotated[bool, typer.Option("--wall-clock", help="Add elapsed seconds to the report timing.")]

_HELP = {
    Command.GIN: "Compute gin(I) with its acceptance certificate.",
    Command.ARL: "Is the (generic initial) ideal almost reverse lexicographic?",
    Command.SLP: "Strong Lefschetz property of R/gin(I), read from the generator profile.",
    Command.SSP: "Strong Stanley property of R/gin(I), read from the generator profile.",
    Command.HILBERT: "Hilbert function of R/I.",
    Command.MAINTHM: "Full ARL analysis: both checks, SLP/SSP and the per-restriction conditions.",
    Command.ORACLE_COMPARE: "Cross-check gin(I) degree by degree against the pivot oracle.",
}


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback()
def main(
    verbose: Annotated[int, typer.Option("--verbose", "-v", count=True, help="-v for info, -vv for debug.")] = 0,
) -> None:
    configure_logging(verbose)


def _read_ideal(path: Path) -> IdealFile:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e.strerror or e}", module=MODULE) from e
    return parse_ideal_file(text)


def _emit(outcome: CommandOutcome, output_format: OutputFormat) -> None:
    failed = outcome.exit_code in (EXIT_INPUT_ERROR, EXIT_COMPUTATION_ERROR)
    err = failed and output_format is OutputFormat.TEXT
    typer.echo(outcome.render(output_format), nl=False, err=err)
    raise typer.Exit(code=outcome.exit_code)


def _dispatch(
    command: Command,
    path: Optional[Path],
    *,
    seed: int,
    coeff_bound: int,
    max_trials: int,
    max_degree: int,
    json_output: bool,
    wall_clock: bool,
    n: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> None:
    output_format = OutputFormat.STRUCTURED if json_output else OutputFormat.TEXT
    try:
        config = RunConfig.build(
            seed=seed,
            coeff_bound=coeff_bound,
            max_trials=max_trials,
            max_degree=max_degree,
            output_format=output_format,
            wall_clock=wall_clock,
        )
        ideal = _read_ideal(path) if path is not None else None
    except ValidationError as err:
        fallback = RunConfig.model_construct(
            seed=seed, coeff_bound=coeff_bound, max_trials=max_trials, max_degree=max_degree
        )
        inputs = _inputs_doc(None, fallback, n, degrees)
        _emit(error_outcome(command, inputs, err), output_format)
        return
    _emit(run_command(command, ideal, config, n=n, degrees=degrees), output_format)


def _register(command: Command) -> None:
    def handler(
        path: IdealPath,
        seed: SeedOpt = 1,
        coeff_bound: CoeffBoundOpt = 1000,
        max_trials: MaxTrialsOpt = 8,
        max_degree: MaxDegreeOpt = 40,
        json_output: JsonOpt = False,
        wall_clock: WallClockOpt = False,
    ) -> None:
        _dispatch(
            command,
            path,
            seed=seed,
            coeff_bound=coeff_bound,
            max_trials=max_trials,
            max_degree=max_degree,
            json_output=json_output,
            wall_clock=wall_clock,
        )

    handler.__doc__ = _HELP[command]
    app.command(name=command.value)(handler)


for _command in (
    Command.GIN,
    Command.ARL,
    Command.SLP,
    Command.SSP,
    Command.HILBERT,
    Command.MAINTHM,
    Command.ORACLE_COMPARE,
):
    _register(_command)


def _parse_degrees(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise ValidationError(f"--degrees must be comma-separated integers (got {raw!r}).", module=MODULE) from e


@app.command(name=Command.FROBERG.value)
def froberg(
    n: Annotated[int, typer.Option("--n", help="Number of variables.")],
    degrees: Annotated[
        str, typer.Option("--degrees", help="Comma-separated form degrees, at least n of them, e.g. 2,2,2.")
    ],
    json_output: JsonOpt = False,
) -> None:
    """
    Truncated series |prod(1 - z^d_i) / (1 - z)^n|.

    Needs at least n degrees; fewer exit with code 2.
    """
    output_format = OutputFormat.STRUCTURED if json_output else OutputFormat.TEXT
    config = RunConfig(output_format=output_format)
    try:
        parsed = _parse_degrees(degrees)
    except ValidationError as err:
        _emit(error_outcome(Command.FROBERG, _inputs_doc(None, config, n, None), err), output_format)
        return
    _emit(run_command(Command.FROBERG, None, config, n=n, degrees=parsed), output_format)


if __name__ == "__main__":
    app()
