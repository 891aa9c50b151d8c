"""Immersed-curve modules over the pillowcase algebra and their pairings."""

try:
    from . import _pillowcase as _ext  # installed next to this package
except ImportError:
    import _pillowcase as _ext  # built in-tree, found via PYTHONPATH

DD = _ext.DD
Module = _ext.Module
Pairing = _ext.Pairing
build_bar = _ext.build_bar
builtin_bar_r = _ext.builtin_bar_r
compile_curve = _ext.compile_curve
direct_sum = _ext.direct_sum
intersection_number = _ext.intersection_number
load = _ext.load
pair_rank = _ext.pair_rank
pairing = _ext.pairing
parse_dd = _ext.parse_dd
parse_module = _ext.parse_module
reduce_dd = _ext.reduce_dd
reduce_dd_seeded = _ext.reduce_dd_seeded
validate = _ext.validate

__all__ = [
    "DD",
    "Module",
    "Pairing",
    "build_bar",
    "builtin_bar_r",
    "compile_curve",
    "direct_sum",
    "intersection_number",
    "load",
    "pair_rank",
    "pairing",
    "parse_dd",
    "parse_module",
    "reduce_dd",
    "reduce_dd_seeded",
    "validate",
]
