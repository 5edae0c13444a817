"""Python front end for the qlab exact verification core."""

import json

from ._qlab import (
    CertificationError,
    ParseError,
    QlabError,
    __version__,
    normalize_scalar,
)
from . import _qlab

SUITES = ("certify", "decompose", "mrea", "bracket", "sl", "pbw", "all")


def flip(n):
    return {"kind": "flip", "n": n}


def super_flip(m, n):
    return {"kind": "super_flip", "m": m, "n": n}


def standard_a_series(n):
    return {"kind": "standard_a_series", "n": n}


def explicit(n, entries):
    return {"kind": "explicit", "n": n, "entries": entries}


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def run_suite(spec, suite="all", k=0, degree=-1, timings=False, artifacts=False):
    """Run a suite and return the report as a dict."""
    return json.loads(_qlab.run_suite_json(_text(spec), suite, k, degree, timings, artifacts))


def certify(spec):
    return run_suite(spec, "certify")


def to_markdown(report):
    return _qlab.markdown_from_json(json.dumps(report))


def exit_code(report):
    return _qlab.exit_code_from_json(json.dumps(report))


def decompose(spec, k):
    """List of (partition, a, dim) for V^(x)k."""
    return [(tuple(p), a, d) for p, a, d in _qlab.decompose(_text(spec), k)]


def filtered_dims(spec, degree=3, hbar="1"):
    return list(_qlab.filtered_dims(_text(spec), degree, hbar))


def braiding_matrix(spec):
    """Entries as canonical strings."""
    return json.loads(_qlab.braiding_matrix_json(_text(spec)))


__all__ = [
    "CertificationError",
    "ParseError",
    "QlabError",
    "SUITES",
    "__version__",
    "braiding_matrix",
    "certify",
    "decompose",
    "exit_code",
    "explicit",
    "filtered_dims",
    "flip",
    "normalize_scalar",
    "run_suite",
    "standard_a_series",
    "super_flip",
    "to_markdown",
]
