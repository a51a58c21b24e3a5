"""Python access to the tvbkit commands.

Every command returns the same report dictionary the CLI prints with --json,
plus the plain text rendering under "text". Exact numbers stay decimal strings.
"""

import json
import os

from ._tvbkit import (
    SCHEMA,
    CertificateMissing,
    InvalidInput,
    ParseError,
    commands,
    normalize,
)
from . import _tvbkit

__all__ = [
    "SCHEMA",
    "CertificateMissing",
    "InvalidInput",
    "ParseError",
    "commands",
    "normalize",
    "read",
    "run",
]


def read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def run(command, document, *, force=False, cls=None, flag=None, with_path=None):
    """Run a command on document text, or on a path when one exists.

    cls is "a1,...,ak;beta"; flag is a list of ground elements.
    """
    if os.path.exists(document):
        document = read(document)
    if flag is not None:
        flag = [int(x) for x in flag]
    out = _tvbkit.report(command, document, force, cls, flag, os.fspath(with_path) if with_path else "")
    return json.loads(out)
