"""wikiharvest: build a domain-specific text corpus from Wikipedia.

Given one requirements specification, the package extracts domain
keywords, retrieves matching Wikipedia articles, expands them through
the category graph to a configurable depth, persists the result as a
corpus directory, and scores how semantically related the corpus is to
held-out specifications.
"""

__version__ = "0.1.0"

from .errors import WikiHarvestError  # noqa: E402,F401
