"""Deciding tau-tilting finiteness of group algebras kG for G = P x| H, P abelian.

Specs, quivers and representations are passed as dicts (or JSON text) in the
same formats the ``tautilt`` command-line tool reads and writes.
"""

import json

from . import _core
from ._core import InternalError, InvalidInput, SearchSpaceTooLarge

__all__ = [
    "InternalError",
    "InvalidInput",
    "SearchSpaceTooLarge",
    "check_certificate",
    "check_rep",
    "count_bricks",
    "decide",
    "hyperfocal",
    "quiver",
    "table_arrow_counts",
    "zigzag_cycles",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def decide(spec, mode=None, max_cycle_len=None):
    """Verdict document for a group spec."""
    return json.loads(_core.decide(_text(spec), mode, max_cycle_len))


def quiver(spec, reduced=False):
    return json.loads(_core.quiver(_text(spec), reduced))


def hyperfocal(spec):
    return json.loads(_core.hyperfocal(_text(spec)))


def zigzag_cycles(quiver_doc, max_cycle_len=None):
    return json.loads(_core.zigzag_cycles(_text(quiver_doc), max_cycle_len))


def check_certificate(quiver_doc, arrows):
    return _core.check_certificate(_text(quiver_doc), list(arrows))


def check_rep(quiver_doc, rep):
    return _core.check_rep(_text(quiver_doc), _text(rep))


def count_bricks(quiver_doc, dims, field_q=2):
    return _core.count_bricks(_text(quiver_doc), list(dims), field_q)


def table_arrow_counts(table):
    return _core.table_arrow_counts(_text(table))
