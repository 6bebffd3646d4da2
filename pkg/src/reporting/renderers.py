"""Plain-text rendering of reports"""

from typing import List

from .models import (
    AssignmentModel,
    CheckReport,
    CountermodelModel,
    FuzzReport,
    HilbertReport,
    ProofReport,
    TableauModel,
)

CLOSED_MARK = "✕"
OPEN_MARK = "○"


def render_tableau(tableau: TableauModel) -> List[str]:
    """
    Indented tree, one node per line.

    A chain of single children stays at one indentation level; each branch of a split is
    indented one level further.
    """
    lines = [f"{tableau.start}  [{tableau.outcome}, {tableau.stages} stages]"]
    if not tableau.nodes:
        return lines
    stack = [(0, 1)]
    while stack:
        node_id, depth = stack.pop()
        node = tableau.nodes[node_id]
        text = f"{node.sign}:{node.formula}"
        if node.mark is not None:
            text += f":[{node.mark}]"
        if node.rule:
            text += f"  ({node.rule})"
        if node.closed:
            text += f"  {CLOSED_MARK}"
        elif node.finished:
            text += f"  {OPEN_MARK}"
        lines.append("  " * depth + text)
        child_depth = depth if len(node.children) == 1 else depth + 1
        for child in reversed(node.children):
            stack.append((child, child_depth))
    return lines


def render_assignment(assignment: AssignmentModel) -> List[str]:
    return [f"  v({formula}) = {value}" for formula, value in assignment.values.items()]


def render_countermodel(countermodel: CountermodelModel) -> List[str]:
    lines = [f"  domain: {{{', '.join(countermodel.domain)}}}"]
    for name, element in countermodel.constants.items():
        lines.append(f"  {name} -> {element}")
    for name, table in countermodel.predicates.items():
        cells = ", ".join(f"({cell})={value}" for cell, value in table.items())
        lines.append(f"  {name}: {cells}")
    lines.extend(f"  v({sentence}) = {value}" for sentence, value in countermodel.valuation.items())
    return lines


def render_proof_report(report: ProofReport, show_tableaux: bool = True) -> str:
    lines = [f"{report.logic}: {report.target}", f"verdict: {report.status}"]
    if show_tableaux:
        for tableau in report.tableaux:
            lines.append("")
            lines.extend(render_tableau(tableau))
    if report.assignment is not None:
        lines.extend(["", "counter-assignment:"])
        lines.extend(render_assignment(report.assignment))
    if report.countermodel is not None:
        lines.extend(["", "countermodel:"])
        lines.extend(render_countermodel(report.countermodel))
    return "\n".join(lines)


def render_check_report(report: CheckReport) -> str:
    if report.valid_up_to is not None:
        verdict = f"valid up to domain size {report.valid_up_to}"
    else:
        verdict = "valid" if report.valid else "invalid"
    lines = [f"{report.logic}: {report.formula}", f"verdict: {verdict}"]
    if report.assignment is not None:
        lines.append("witness:")
        lines.extend(render_assignment(report.assignment))
    if report.countermodel is not None:
        lines.append("countermodel:")
        lines.extend(render_countermodel(report.countermodel))
    return "\n".join(lines)


def render_hilbert_report(report: HilbertReport) -> str:
    if report.accepted:
        return f"{report.logic}: accepted, concludes {report.conclusion}"
    return f"{report.logic}: rejected at step {report.step} ({report.reason}): {report.detail}"


def render_fuzz_report(report: FuzzReport) -> str:
    lines = [f"{report.formulas} formulas, logics {', '.join(report.logics)}"]
    for logic, counts in report.counts.items():
        lines.append(f"  {logic}: {counts.get('valid', 0)} valid, {counts.get('invalid', 0)} invalid")
    lines.append(f"mismatches: {len(report.mismatches)}")
    for mismatch in report.mismatches:
        lines.append(
            f"  #{mismatch.index} {mismatch.logic}: {mismatch.formula}"
            f" (tableau {mismatch.tableau}, oracle {mismatch.oracle})"
        )
    return "\n".join(lines)
