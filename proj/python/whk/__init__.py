"""Exact checks for weak Hopf algebras, groupoid algebras and their actions.

The heavy lifting lives in the compiled extension; this package adds a thin
convenience layer returning parsed reports.
"""

import json as _json

from ._whk import Workspace, WhkError, WhkParseError, commands, corpus_files

__all__ = [
    "Workspace",
    "WhkError",
    "WhkParseError",
    "commands",
    "corpus_files",
    "run",
]


def run(path, command, **kwargs):
    """Run one CLI command against a definition file.

    Returns (exit_code, report) with the report as a parsed dict.
    """
    code, text = Workspace(path).run(command, **kwargs)
    return code, _json.loads(text)
