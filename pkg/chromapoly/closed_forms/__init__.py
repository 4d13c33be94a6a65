from .formulas import (
    INTERLOCKING_VARIANT,
    chrom_broken_wheel,
    chrom_complete,
    chrom_cycle,
    chrom_edgeless,
    chrom_interlocking,
    chrom_path,
    chrom_tree,
    chrom_wheel,
    closed_form,
    interlocking_formula,
)
from .recognize import recognize

__all__ = [
    "INTERLOCKING_VARIANT",
    "chrom_broken_wheel",
    "chrom_complete",
    "chrom_cycle",
    "chrom_edgeless",
    "chrom_interlocking",
    "chrom_path",
    "chrom_tree",
    "chrom_wheel",
    "closed_form",
    "interlocking_formula",
    "recognize",
]
