"""Report models, builders and text renderers for the command line"""

from .builders import (
    assignment_model,
    canonical_text,
    countermodel_model,
    proof_report,
    tableau_model,
)
from .models import (
    AssignmentModel,
    CheckReport,
    CountermodelModel,
    FuzzMismatch,
    FuzzReport,
    HilbertReport,
    ProofNodeModel,
    ProofReport,
    TableauModel,
)
from .renderers import (
    render_check_report,
    render_fuzz_report,
    render_hilbert_report,
    render_proof_report,
    render_tableau,
)

__all__ = [
    "AssignmentModel",
    "CheckReport",
    "CountermodelModel",
    "FuzzMismatch",
    "FuzzReport",
    "HilbertReport",
    "ProofNodeModel",
    "ProofReport",
    "TableauModel",
    "assignment_model",
    "canonical_text",
    "countermodel_model",
    "proof_report",
    "render_check_report",
    "render_fuzz_report",
    "render_hilbert_report",
    "render_proof_report",
    "render_tableau",
]
