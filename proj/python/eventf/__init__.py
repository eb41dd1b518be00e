"""Event descriptions as situations, descriptions and concepts.

Parse and write ``.f.ttl`` files, build the six event patterns, validate
them and reason over parts, causes, correlations and interpretations.
"""

from ._eventf import (
    Error,
    LoadError,
    ParseError,
    Store,
    allen_relation,
    parse,
    rule_catalog,
    serialize,
)

__all__ = [
    "Error",
    "LoadError",
    "ParseError",
    "Store",
    "allen_relation",
    "load",
    "parse",
    "rule_catalog",
    "serialize",
]


def load(path):
    """Parse the file at ``path``."""
    with open(path, "rb") as f:
        return parse(f.read())
