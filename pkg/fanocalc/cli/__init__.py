"""fanocalc CLI package.

Kept empty so that ``fanocalc.cli.main`` stays the module, not the function
the console script points at.
"""

__all__: list[str] = []
