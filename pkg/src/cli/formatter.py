"""Plain-text rendering of report documents."""

from typing import Any

from src.cli.serialization import ReportDocument

CLASS_ORDER = ["mixed", "hausdorff", "indiscrete", "zero"]


def _model_lines(label: str, model: dict[str, Any] | None, indent: str = "  ") -> list[str]:
    if model is None:
        return []
    lines = [f"{indent}{label}: {model['spectrum']['display']} on {model['convergence']['display']}"]
    pieces = model["pieces"]
    if len(pieces) > 1:
        for piece in pieces:
            lines.append(f"{indent}  piece {piece['box']} converges on {piece['convergence']['display']}")
    return lines


def _format_pair(name: str, pair: dict[str, Any]) -> str:
    text = f"### Pair {name}: ({pair['inner']['display']}, {pair['outer']['display']})\n"
    text += f"Classification: {pair['tag']}\n"
    text += f"Rule: {pair['witness_rule']}\n"
    if pair["reason"]:
        text += f"Reason: {pair['reason']}\n"
    for line in _model_lines("Complement", pair["complement"], indent=""):
        text += line + "\n"
    for line in _model_lines("Closure of restriction", pair["closure_of_restriction"], indent=""):
        text += line + "\n"
    if pair["intermediate"]:
        text += f"Intermediate domain: {pair['intermediate']['display']}\n"
    return text + "\n"


def _format_cohomology(report: dict[str, Any]) -> str:
    p, q = report["bidegree"]
    text = f"### H^{{{p},{q}}}: {report['class']}"
    if report["informational"]:
        text += " (informational)"
    text += "\n"
    text += f"Cardinality: {report['cardinality']}, multiplicity {report['multiplicity']}\n"
    if report["class"] in ("hausdorff", "mixed"):
        text += "\n".join(_model_lines("Reduced", report["reduced"], indent="")) + "\n"
    if report["indiscrete"]:
        text += "\n".join(_model_lines("Indiscrete numerator", report["indiscrete"]["numerator"], indent="")) + "\n"
        for model in report["indiscrete"]["denominators"]:
            text += "\n".join(_model_lines("Dense subspace", model, indent="")) + "\n"
    for note in report["notes"]:
        text += f"Note: {note}\n"
    text += "Justification:\n"
    for entry in report["justification"]:
        text += f"  - [{entry['rule']}] {entry['anchor']}: {entry['statement']}\n"
    return text + "\n"


def _format_summary(reports: list[dict[str, Any]]) -> str:
    """One line per class, most structured first."""
    groups: dict[str, list[str]] = {c: [] for c in CLASS_ORDER}
    for report in reports:
        p, q = report["bidegree"]
        groups[report["class"]].append(f"({p},{q})")
    text = ""
    for cls in CLASS_ORDER:
        if groups[cls]:
            text += f"{cls.title()} ({len(groups[cls])}): {', '.join(groups[cls])}\n"
    return text


def _format_certificate(certificate: dict[str, Any]) -> str:
    text = "### Envelope\n"
    text += f"Stein: {'yes' if certificate['is_stein'] else 'no'}\n"
    text += f"Extension point |z|: ({', '.join(certificate['extension_point'])})\n"
    text += f"Log point: ({', '.join(str(x) for x in certificate['log_point'])})\n"
    if certificate["envelope"]:
        text += f"Envelope of holomorphy: {certificate['envelope']['display']}\n"
    else:
        text += f"Log-convex hull is not a box; bounding box {certificate['bounding_box']['display']}\n"
    for h in certificate["hull"]["halfplanes"]:
        text += f"  {h['normal']} · x <= {h['offset']}\n"
    return text + "\n"


def _format_checks(sections: dict[str, Any]) -> str:
    text = ""
    oracle = sections.get("oracle")
    if oracle:
        verdict = "agrees" if oracle["agrees"] else "DISAGREES"
        text += f"Oracle (window {oracle['window']}): {verdict}, {oracle['oracle_points']} points\n"
    for check in sections.get("numeric", []):
        text += f"{'pass' if check['passed'] else 'FAIL'}  {check['name']}\n"
    return f"### Checks\n{text}\n" if text else ""


def format_text(document: ReportDocument) -> str:
    """Render a document for terminals."""
    sections = document.sections
    text = f"## {document.command}: {document.input}\n\n"

    if "domain" in sections:
        text += f"Domain: {sections['domain']['display']}\n"
    if "spectrum" in sections:
        text += f"Spectrum: {sections['spectrum']['display']}\n"
    for name in ("U1", "U2", "U12"):
        cover = sections.get("cover", {}).get(name)
        if cover:
            text += f"{name} = {cover['domain']['display']}: {cover['spectrum']['display']}\n"
    if "domain" in sections or "cover" in sections:
        text += "\n"

    for name, pair in sections.get("pairs", {}).items():
        text += _format_pair(name, pair)

    reports = sections.get("cohomology", [])
    if len(reports) > 1:
        text += "### Summary\n" + _format_summary(reports) + "\n"
    for report in reports:
        text += _format_cohomology(report)

    if "envelope" in sections:
        text += _format_certificate(sections["envelope"])
    elif "envelope_error" in sections:
        text += f"### Envelope\nNot computed: {sections['envelope_error']}\n\n"

    text += _format_checks(sections)
    if "error" in sections:
        text += f"Error: {sections['error']}\n"
    return text.rstrip("\n") + "\n"
