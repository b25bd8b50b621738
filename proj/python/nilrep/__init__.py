"""Exact irreducibility test for free step-two nilpotent Lie algebras.

Rationals cross the boundary as strings ("3/2"); JSON results come back as dicts.
"""

import json

from . import _nilrep
from ._nilrep import (
    ConsistencyError,
    DegenerateError,
    GridError,
    apply_rep,
    commutator_phase,
    m5_closed_forms,
    pfaffian,
    rep_checks,
    run_cli,
)

__all__ = [
    "ConsistencyError",
    "DegenerateError",
    "GridError",
    "apply_rep",
    "commutator_phase",
    "construct",
    "criterion",
    "m5_closed_forms",
    "pfaffian",
    "rep_checks",
    "run_cli",
    "stabilizer",
    "sweep",
]


def _values(values):
    if values is None:
        return None
    return {name: str(v) for name, v in values.items()}


def construct(m):
    return json.loads(_nilrep.construct_json(m))


def stabilizer(m, values=None):
    """Stabilizer of lambda; values maps names like "l12" to rationals, None means generic."""
    return json.loads(_nilrep.stabilizer_json(m, _values(values)))


def criterion(m, values=None, require_generic=False):
    return json.loads(_nilrep.criterion_json(m, _values(values), require_generic))


def sweep(m_from, m_to):
    return json.loads(_nilrep.sweep_json(m_from, m_to))
