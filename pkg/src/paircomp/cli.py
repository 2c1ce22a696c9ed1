"""Batch command-line front end.

Commands: analyze, fixtures, orderability, transform (log/exp), complete.
Strict mode is the default everywhere; --research must be passed to admit
negative or complex carriers. Exit codes: 0 success/orderable, 1 validation
failure, 2 parse or lookup failure, 3 not orderable.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .additive import AdditiveMatrix, additive_is_consistent, additive_is_reciprocal, exp_map, log_map
from .errors import (
    ComplexEntries,
    NoRealRoot,
    NotOrderable,
    NotPositive,
    PaircompError,
    ParseError,
    UndefinedForGroup,
    UnknownGroup,
)
from .fixtures import FIXTURE_NAMES, run_all_reports, run_report
from .groups import POSITIVE_REALS, check_orderability, group_by_name
from .matrix import Mode, PcMatrix, complete_from_tree
from .scalars import format_scalar, parse_scalar, round_sig, scalar_to_json
from .serialize import judgments_from_json, load_matrix, matrix_to_json
from .weights import eigen_weights, geometric_mean_weights, rank_entities

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_NOT_ORDERABLE = 3


def _fail(code: str, message: str, exit_code: int, output_format: str) -> None:
    if output_format == "json":
        click.echo(json.dumps({"code": code, "message": message}), err=True)
    else:
        click.echo(f"{code}: {message}", err=True)
    sys.exit(exit_code)


def _emit(doc: dict, output_format: str, render) -> None:
    if output_format == "json":
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(render(doc))


format_option = click.option(
    "--format", "output_format", type=click.Choice(["text", "json"]), default="text",
    help="output rendering; json is the canonical form",
)


@click.group()
def main() -> None:
    """Pairwise-comparison matrices over orderable carriers."""


# -- analyze -------------------------------------------------------------------


def _weights_to_json(values) -> list:
    return [
        round_sig(float(v.real)) if v.imag == 0 else scalar_to_json(complex(v))
        for v in values
    ]


def _analysis_doc(m: PcMatrix, tol: float) -> dict:
    doc: dict = {
        "valid": True,
        "n": m.n,
        "group": m.group.name,
        "mode": m.mode.value,
        "labels": list(m.labels) if m.labels else None,
        "consistent": m.is_consistent(tol),
        "kii": None,
        "worst_triad": None,
        "gm_weights": None,
        "eigen_weights": None,
        "eigenvalue": None,
        "ranking": None,
        "notes": [],
    }

    try:
        report = m.kii()
        doc["kii"] = round_sig(report.kii)
        if report.worst_triad is not None:
            t = report.worst_triad
            doc["worst_triad"] = {
                "i": t.i, "k": t.k, "j": t.j,
                "x": round_sig(float(t.x.real)),
                "y": round_sig(float(t.y.real)),
                "z": round_sig(float(t.z.real)),
            }
    except UndefinedForGroup as exc:
        doc["notes"].append(f"kii: {exc.code}: {exc}")

    weights = None
    try:
        weights = geometric_mean_weights(m)
        doc["gm_weights"] = _weights_to_json(weights.values)
    except (NoRealRoot, ComplexEntries) as exc:
        doc["notes"].append(f"gm_weights: {exc.code}: {exc}")

    try:
        ev, eigenvalue = eigen_weights(m)
        doc["eigen_weights"] = _weights_to_json(ev.values)
        doc["eigenvalue"] = round_sig(eigenvalue)
    except NotPositive as exc:
        doc["notes"].append(f"eigen_weights: {exc.code}: {exc}")

    if weights is not None:
        try:
            doc["ranking"] = [
                {"label": label, "weight": round_sig(weight)}
                for label, weight in rank_entities(weights)
            ]
        except NotOrderable as exc:
            doc["notes"].append(f"ranking: {exc.code}: {exc}")
    return doc


def _render_analysis(doc: dict) -> str:
    lines = [
        f"valid {doc['mode']} matrix over {doc['group']}, n={doc['n']}",
        f"consistent: {str(doc['consistent']).lower()}",
    ]
    if doc["kii"] is not None:
        lines.append(f"kii: {doc['kii']:.12g}")
    if doc["worst_triad"] is not None:
        t = doc["worst_triad"]
        lines.append(
            f"worst triad ({t['i']},{t['k']},{t['j']}): "
            f"x={t['x']:.12g} y={t['y']:.12g} z={t['z']:.12g}"
        )
    if doc["gm_weights"] is not None:
        rendered = ", ".join(
            v if isinstance(v, str) else f"{v:.12g}" for v in doc["gm_weights"]
        )
        lines.append(f"geometric-mean weights: [{rendered}]")
    if doc["eigen_weights"] is not None:
        rendered = ", ".join(f"{v:.12g}" for v in doc["eigen_weights"])
        lines.append(f"eigenvector weights: [{rendered}] (eigenvalue {doc['eigenvalue']:.12g})")
    if doc["ranking"] is not None:
        lines.append(
            "ranking: " + " > ".join(entry["label"] for entry in doc["ranking"])
        )
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


@main.command()
@click.argument("path", type=click.Path())
@click.option("--research", is_flag=True, help="admit the matrix's declared research carrier")
@click.option("--tol", type=float, default=1e-9, show_default=True, help="consistency tolerance")
@format_option
def analyze(path: str, research: bool, tol: float, output_format: str) -> None:
    """Validate a matrix file and derive consistency, weights and ranking."""
    try:
        m = load_matrix(path)
    except (ParseError, UnknownGroup) as exc:
        _fail(exc.code, str(exc), EXIT_PARSE, output_format)
    except PaircompError as exc:
        _fail(exc.code, str(exc), EXIT_VALIDATION, output_format)
    if isinstance(m, AdditiveMatrix):
        _fail("ParseError", "analyze expects a multiplicative matrix", EXIT_PARSE, output_format)
    if not research and m.mode is not Mode.STRICT:
        try:
            m = PcMatrix.from_entries(m.entries, POSITIVE_REALS, Mode.STRICT, labels=m.labels)
        except PaircompError as exc:
            _fail(exc.code, str(exc), EXIT_VALIDATION, output_format)
    _emit(_analysis_doc(m, tol), output_format, _render_analysis)


# -- fixtures --------------------------------------------------------------------


@main.command()
@click.argument("name", default="all")
@format_option
def fixtures(name: str, output_format: str) -> None:
    """Reproduce the packaged counterexample findings (NAME or "all")."""
    try:
        reports = run_all_reports() if name == "all" else [run_report(name)]
    except PaircompError as exc:
        _fail(exc.code, str(exc), EXIT_PARSE, output_format)
    if output_format == "json":
        click.echo(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        click.echo("\n".join(r.to_text() for r in reports))
    sys.exit(EXIT_OK if all(r.passed for r in reports) else EXIT_VALIDATION)


# -- orderability -----------------------------------------------------------------


@main.command()
@click.argument("group_name")
@format_option
def orderability(group_name: str, output_format: str) -> None:
    """Decide whether GROUP_NAME admits a linear order (exit 3 when it does not)."""
    try:
        group = group_by_name(group_name)
    except UnknownGroup as exc:
        _fail(exc.code, str(exc), EXIT_PARSE, output_format)
    verdict = check_orderability(group)
    doc = {
        "group": group.name,
        "orderable": verdict.orderable,
        "reason": verdict.reason,
        "witness": None
        if verdict.witness is None
        else {
            "element": scalar_to_json(verdict.witness.element),
            "order": verdict.witness.order,
        },
    }

    def render(d: dict) -> str:
        lines = [f"{d['group']}: {'orderable' if d['orderable'] else 'not orderable'} ({d['reason']})"]
        if d["witness"] is not None:
            shown = format_scalar(parse_scalar(d["witness"]["element"]))
            lines.append(f"witness: {shown} of order {d['witness']['order']}")
        return "\n".join(lines)

    _emit(doc, output_format, render)
    sys.exit(EXIT_OK if verdict.orderable else EXIT_NOT_ORDERABLE)


# -- transform --------------------------------------------------------------------


def _render_matrix_doc(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if key == "matrix":
            continue
        lines.append(f"{key}: {value}")
    envelope = doc["matrix"]
    for row in envelope["entries"]:
        lines.append(
            "  ".join(
                format_scalar(complex(x)) if isinstance(x, str) else f"{x:.12g}"
                for x in row
            )
        )
    return "\n".join(lines)


@main.command()
@click.argument("direction", type=click.Choice(["log", "exp"]))
@click.argument("path", type=click.Path())
@click.option("--group", "group_name", default="PositiveReals", show_default=True,
              help="target carrier for exp")
@click.option("--research", is_flag=True, help="validate the exp image in research mode")
@format_option
def transform(direction: str, path: str, group_name: str, research: bool, output_format: str) -> None:
    """Map a matrix file through the principal-branch log, or back through exp."""
    try:
        m = load_matrix(path)
    except (ParseError, UnknownGroup) as exc:
        _fail(exc.code, str(exc), EXIT_PARSE, output_format)
    except PaircompError as exc:
        _fail(exc.code, str(exc), EXIT_VALIDATION, output_format)

    if direction == "log":
        if isinstance(m, AdditiveMatrix):
            _fail("ParseError", "log expects a multiplicative matrix", EXIT_PARSE, output_format)
        try:
            image = log_map(m)
        except PaircompError as exc:
            _fail(exc.code, str(exc), EXIT_VALIDATION, output_format)
        doc = {
            "additive_consistent": additive_is_consistent(image),
            "additive_reciprocal": additive_is_reciprocal(image),
            "matrix": matrix_to_json(image),
        }
    else:
        if not isinstance(m, AdditiveMatrix):
            _fail("ParseError", "exp expects an additive matrix", EXIT_PARSE, output_format)
        try:
            group = group_by_name(group_name)
        except UnknownGroup as exc:
            _fail(exc.code, str(exc), EXIT_PARSE, output_format)
        try:
            result = exp_map(m, group, Mode.RESEARCH if research else Mode.STRICT)
        except PaircompError as exc:
            _fail(exc.code, str(exc), EXIT_VALIDATION, output_format)
        doc = {
            "consistent": result.is_consistent(),
            "matrix": matrix_to_json(result),
        }
    _emit(doc, output_format, _render_matrix_doc)


# -- complete ----------------------------------------------------------------------


@main.command()
@click.argument("path", type=click.Path())
@click.option("--n", "n_entities", type=int, default=None,
              help="entity count (default: max judged index + 1)")
@click.option("--labels", default=None, help="comma-separated entity labels")
@format_option
def complete(path: str, n_entities: Optional[int], labels: Optional[str], output_format: str) -> None:
    """Complete a spanning tree of judgments (JSON list of {i, j, value}) to a full matrix."""
    try:
        text = open(path).read()
        judgments = judgments_from_json(text)
    except OSError as exc:
        _fail("ParseError", str(exc), EXIT_PARSE, output_format)
    except PaircompError as exc:
        _fail(exc.code, str(exc), EXIT_PARSE, output_format)
    if not judgments:
        _fail("NotATree", "no judgments given", EXIT_VALIDATION, output_format)
    n = n_entities if n_entities is not None else max(max(j.i, j.j) for j in judgments) + 1
    label_tuple = tuple(x.strip() for x in labels.split(",")) if labels else None
    try:
        m = complete_from_tree(n, judgments, labels=label_tuple)
    except (PaircompError, ValueError) as exc:
        code = exc.code if isinstance(exc, PaircompError) else "ValidationError"
        _fail(code, str(exc), EXIT_VALIDATION, output_format)
    doc = {"consistent": m.is_consistent(), "matrix": matrix_to_json(m)}
    _emit(doc, output_format, _render_matrix_doc)


if __name__ == "__main__":
    main()
