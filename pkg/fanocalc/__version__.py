"""Version information for fanocalc."""

__version__ = "0.1.0"
