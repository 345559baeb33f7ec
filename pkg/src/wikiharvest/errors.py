"""Shared exception base for the package.

Module-specific exceptions subclass :class:`WikiHarvestError` next to the
code that raises them; the CLI maps any of them to exit status 1.
"""


class WikiHarvestError(Exception):
    """Base class for all errors raised by wikiharvest."""
