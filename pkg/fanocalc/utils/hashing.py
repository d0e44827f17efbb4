"""Digest helpers for catalog exports."""

from __future__ import annotations

import hashlib

DIGEST_PREFIX = "sha256:"


def digest_text(text: str) -> str:
    """Return a namespaced SHA-256 digest of an export.

    Args:
        text: Export contents, hashed as UTF-8.

    Returns:
        A string of the form ``sha256:<hex>``.
    """
    return DIGEST_PREFIX + hashlib.sha256(text.encode("utf-8")).hexdigest()


def verify_digest(text: str, digest: str) -> bool:
    """Check ``text`` against a digest produced by :func:`digest_text`.

    Raises:
        ValueError: If ``digest`` does not use the ``sha256:`` prefix.
    """
    if not digest.startswith(DIGEST_PREFIX):
        raise ValueError("Digest must start with 'sha256:'.")
    return digest_text(text) == digest


__all__ = ["DIGEST_PREFIX", "digest_text", "verify_digest"]
