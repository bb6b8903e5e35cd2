"""Exact verification of a two-variable family of q-series identities.

The arithmetic lives in the compiled extension; this package re-exports its
stable surface.
"""

from ._core import __version__, list_identities, series_table, verify, verify_all

__all__ = [
    "__version__",
    "list_identities",
    "series_table",
    "verify",
    "verify_all",
]
