from .oracles import brute_force_count, naive_chromatic, partition_chromatic
from .structure import chromatic_number, chromatically_equivalent, verify_structure

__all__ = [
    "brute_force_count",
    "chromatic_number",
    "chromatically_equivalent",
    "naive_chromatic",
    "partition_chromatic",
    "verify_structure",
]
