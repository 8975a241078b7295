from .cache import code_version, load_components
from .diff import diff_a22, diff_a3, diff_a4, diff_block
from .reference import TABLE_A22, TABLE_A3, TABLE_A4, a22_rows, a3_rows, format_label, parse_sketch

__all__ = [
    "TABLE_A22", "TABLE_A3", "TABLE_A4", "a22_rows", "a3_rows", "code_version",
    "diff_a22", "diff_a3", "diff_a4", "diff_block", "format_label", "load_components",
    "parse_sketch",
]
