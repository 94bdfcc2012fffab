"""File formats for structures, perturbations and reports."""

from symdeform.storage.structure import (
    StructureParser,
    load_perturbation,
    load_structure,
    write_report,
)

__all__ = ["StructureParser", "load_structure", "load_perturbation", "write_report"]
