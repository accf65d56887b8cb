"""Monomorphism categories over finite fields.

Thin wrapper over the C++ core: each call returns ``(report, status)`` where
``report`` is the decoded JSON report and ``status`` the CLI exit code
(0 pass, 1 fail, 2 inconclusive, 3 input error).
"""

import json

from . import _core

SUITES = list(_core.SUITES)
PASS, FAIL, INCONCLUSIVE, INPUT_ERROR = 0, 1, 2, 3


def _decode(result):
    text, status = result
    return json.loads(text), status


def enumerate(what="s", algebra="loop:2", subcat="all", p=2, bound=9):
    return _decode(_core.enumerate(what, algebra, subcat, p, bound))


def verify(suite, algebra="loop:2", subcat="all", p=2, bound=9, kinds=()):
    return _decode(_core.verify(suite, algebra, subcat, p, bound, list(kinds)))


def replay(payload, algebra="loop:2", subcat="all", p=2, bound=9):
    if not isinstance(payload, str):
        payload = json.dumps(payload)
    return _decode(_core.replay(payload, algebra, subcat, p, bound))


def algebra(spec, p=2):
    return json.loads(_core.algebra(spec, p))


__all__ = ["SUITES", "PASS", "FAIL", "INCONCLUSIVE", "INPUT_ERROR", "enumerate", "verify", "replay", "algebra"]
