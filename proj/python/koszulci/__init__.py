"""Support varieties over Koszul complexes and complete intersection witnesses."""

import json

from ._core import KciError, __version__, canonical_job, commands, exit_status
from ._core import run as _run

__all__ = [
    "KciError",
    "__version__",
    "canonical_job",
    "commands",
    "exit_status",
    "job_text",
    "run",
    "ci_check",
    "ext_kk",
    "ext_module",
    "support_variety",
    "c_tilde_variety",
    "proxy_witness",
    "verify_witness",
]


def job_text(vars, relations=(), degs=None, p=32003, matrix=None, row_twists=None, col_twists=None, N=None,
             smax=None, g=()):
    """Builds the text of a job file. matrix is a list of rows of polynomial strings."""
    lines = ["[ring]", f"p = {p}", "vars = " + ", ".join(vars)]
    if degs is not None:
        lines.append("degs = " + ", ".join(map(str, degs)))
    lines.append("relations = " + ", ".join(relations))
    if matrix is not None or row_twists is not None:
        lines.append("[module]")
        lines.append("matrix = " + "; ".join(", ".join(row) for row in (matrix or [])))
        if row_twists is not None:
            lines.append("row_twists = " + ", ".join(map(str, row_twists)))
        if col_twists is not None:
            lines.append("col_twists = " + ", ".join(map(str, col_twists)))
    params = []
    if N is not None:
        params.append(f"N = {N}")
    if smax is not None:
        params.append(f"smax = {smax}")
    if g:
        params.append("g = " + ", ".join(g))
    if params:
        lines += ["[params]"] + params
    return "\n".join(lines) + "\n"


def run(command, text, N=None, smax=None):
    """Runs a command on job text and returns the report as a dict."""
    return json.loads(_run(command, text, N, smax))


def _result(command, **job):
    return run(command, job_text(**job))["result"]


def ci_check(vars, relations, **kw):
    return _result("ci-check", vars=vars, relations=relations, **kw)


def ext_kk(vars, relations, **kw):
    return _result("ext-kk", vars=vars, relations=relations, **kw)


def ext_module(vars, relations, **kw):
    return _result("ext-module", vars=vars, relations=relations, **kw)


def support_variety(vars, relations, **kw):
    return _result("support-variety", vars=vars, relations=relations, **kw)


def c_tilde_variety(vars, relations, g, **kw):
    return _result("c-tilde-variety", vars=vars, relations=relations, g=g, **kw)


def proxy_witness(vars, relations, **kw):
    return _result("proxy-witness", vars=vars, relations=relations, **kw)


def verify_witness(vars, relations, **kw):
    return _result("verify-witness", vars=vars, relations=relations, **kw)
