"""Utility functions for fanocalc."""

from fanocalc.utils.hashing import digest_text, verify_digest

__all__ = [
    "digest_text",
    "verify_digest",
]
