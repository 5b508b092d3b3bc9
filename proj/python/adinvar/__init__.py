"""Exact workbench for naturally reductive metric Lie algebras G(d).

Documents are plain dicts in the same layout as the JSON files used by the
``adinvar`` command-line tool; rationals are strings such as ``"-3/4"``.
"""

try:
    from . import _adinvar
except ImportError:  # in-tree build: the extension sits next to the package
    import _adinvar

from fractions import Fraction

AdinvarError = _adinvar.AdinvarError
corpus_list = _adinvar.corpus_list
corpus_report = _adinvar.corpus_report
corpus_builder = _adinvar.corpus_builder
check = _adinvar.check
extend = _adinvar.extend
gd = _adinvar.gd
geometry = _adinvar.geometry
verify_as = _adinvar.verify_as
series = _adinvar.series
derivations = _adinvar.derivations
run_cli = _adinvar.run_cli


def rational(text):
    """Parse a serialized rational ("p/q" or integer) into a Fraction."""
    return Fraction(text)


def failed_checks(report):
    """Names of the failing checks in a report dict."""
    return [c["name"] for c in report["checks"] if not c["pass"]]


__all__ = [
    "AdinvarError",
    "check",
    "corpus_builder",
    "corpus_list",
    "corpus_report",
    "derivations",
    "extend",
    "failed_checks",
    "gd",
    "geometry",
    "rational",
    "run_cli",
    "series",
    "verify_as",
]
