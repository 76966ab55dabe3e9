"""Exact-arithmetic analysis of pencils of plane cubics with a single
ninefold base point: contact constructions, classification, singular members,
blow-up bookkeeping and elliptic-fibration labels.
"""

from .exactfield import AlgNum, NumberField, QQ, Rat, field_from_label, nf_cyclotomic
from .polyforms import (Form3, MPoly, ProjMap, TruncSeries, format_form,
                        hessian_det, parse_algnum, parse_form, resultant_uni,
                        series_branch, squarefree_profile, substitute_linear)

__all__ = [
    "AlgNum", "NumberField", "QQ", "Rat", "field_from_label", "nf_cyclotomic",
    "Form3", "MPoly", "ProjMap", "TruncSeries", "format_form", "hessian_det",
    "parse_algnum", "parse_form", "resultant_uni", "series_branch",
    "squarefree_profile", "substitute_linear",
]
