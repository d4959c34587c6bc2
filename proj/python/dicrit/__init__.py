"""Python front end over the native dicrit engine.

Every call takes and returns plain JSON-compatible values, in the same
formats the ``dicrit`` command-line tool uses.
"""

import json

from . import _dicrit

__version__ = _dicrit.__version__


class DicritError(Exception):
    """Domain error raised by the engine; ``kind`` names the failure."""

    def __init__(self, payload):
        self.payload = payload
        self.kind = payload.get("kind")
        super().__init__(payload.get("message") or payload.get("reason") or self.kind)


class DicritParseError(DicritError, ValueError):
    pass


def run(command, action="", input=None, *, seed=0, max_depth=24, bound=None, extend=True):
    """Runs one command, e.g. ``run("mono", "normal", {"vars": 2, "gens": [[2, 0], [0, 2]]})``."""
    raw = _dicrit.run(command, action, json.dumps(input if input is not None else {}),
                      seed, max_depth, bound, extend)
    out = json.loads(raw)
    if "error" in out:
        err = out["error"]
        cls = DicritParseError if err.get("kind") == "ParseError" else DicritError
        raise cls(err)
    return out["result"]


def commands():
    return {name: list(actions) for name, actions in _dicrit.commands()}


def acceptance(corpus_dir=""):
    """Runs the acceptance criteria; returns one dict per criterion."""
    return _dicrit.acceptance(corpus_dir)


__all__ = ["run", "commands", "acceptance", "DicritError", "DicritParseError", "__version__"]
