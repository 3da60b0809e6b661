"""Exact arithmetic for extremal rational elliptic fibrations and Gorenstein
del Pezzo surfaces: Weierstrass fibre analysis, diagonal prime-order actions,
Picard-lattice blow-up programs and the Picard-rank-one classification table.

Thin dict-level wrappers around the compiled ``_core`` module, which bridges
every operation as a JSON document. All arithmetic is exact (GMP rationals).
"""

import json as _json

from . import _core

__version__ = _core.__version__

__all__ = [
    "analyze",
    "verify_action",
    "blowup",
    "classify",
    "check_chain",
    "propagate_chain",
    "classification_table",
    "extremal_fibrations",
    "validate_classification_table",
]


def _dumps(obj):
    return _json.dumps(obj)


def _sections_doc(sections):
    if sections is None:
        return ""
    if isinstance(sections, dict):
        return _dumps(sections)
    return _dumps({"sections": list(sections)})


def analyze(model, extremal_table=None):
    """Fibre configuration, J-invariant and torsion hint of a Weierstrass model.

    ``model`` is a dict ``{"A": [...], "B": [...]}`` with coefficient strings
    by ascending degree. ``extremal_table`` optionally replaces the built-in
    extremal fibration table for the torsion hint.
    """
    table = "" if extremal_table is None else _dumps(extremal_table)
    return _json.loads(_core.analyze(_dumps(model), table))


def verify_action(model, action, sections=None):
    """Check a diagonal action on a model: equation invariance, induced base
    action, and stability of each given section.

    ``sections`` may be a list of section dicts or a ``{"sections": [...]}``
    document. The report's ``"ok"`` is true iff the equation is invariant and
    every section is stable.
    """
    return _json.loads(
        _core.verify_action(_dumps(model), _dumps(action), _sections_doc(sections))
    )


def blowup(program):
    """Run a blow-up program: curve classes, dual graph, contraction of the
    (-2)-curves, and an anticanonical decomposition per (-1)-curve."""
    return _json.loads(_core.blowup(_dumps(program)))


def classify(sing, disambiguator=None, table=None):
    """Classification record for a singularity type such as ``"A7"`` or
    ``"2A3+A1"``.

    The degree-one types E8, E7+A1 and E6+A2 each have two isomorphism
    classes; pass ``disambiguator="exactly two"`` or ``"three or more"``
    (the number of singular members in the anticanonical pencil) to pick one.
    """
    return _json.loads(
        _core.classify(sing, disambiguator, "" if table is None else _dumps(table))
    )


def check_chain(chain):
    """Verdict on junction weights ``{"n": ..., "pairs": [[a, b], ...]}``
    along a chain of (-2)-curves, with the first violation on failure."""
    return _json.loads(_core.check_chain(_dumps(chain)))


def propagate_chain(a0, b0, n, length):
    """The unique admissible chain of the given length extending (a0, b0)
    mod n; its output always passes :func:`check_chain`."""
    return _json.loads(_core.propagate_chain(a0, b0, n, length))


def classification_table():
    """The built-in classification table as ``{"version": 1, "records": [...]}``."""
    return _json.loads(_core.classification_table())


def extremal_fibrations():
    """The built-in extremal fibration table."""
    return _json.loads(_core.extremal_fibrations())


def validate_classification_table(table=None):
    """Cross-check a classification table (the built-in one when omitted);
    returns ``{"ok": ..., "violations": [...]}``."""
    return _json.loads(
        _core.validate_classification_table("" if table is None else _dumps(table))
    )
