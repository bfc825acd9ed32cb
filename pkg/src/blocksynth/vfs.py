"""Sandboxed in-memory filesystem for orchestra, score, and binary assets.

Paths are flat keys with "/" separators; there are no directory objects.
Nothing touches the host disk.
"""
from __future__ import annotations

from .errors import InvalidPathError, VfsNotFoundError

__all__ = ["normalize_path", "VirtualFileSystem"]


def normalize_path(path: str) -> str:
    """Normalize a sandbox path: collapse "." and repeated "/", reject
    empties, escapes ("..", leading "/") and backslashes."""
    if not isinstance(path, str) or not path:
        raise InvalidPathError("path must be a non-empty string")
    if "\\" in path:
        raise InvalidPathError(f"backslash in path: {path!r}")
    if path.startswith("/"):
        raise InvalidPathError(f"absolute path not allowed: {path!r}")
    parts = [p for p in path.split("/") if p not in ("", ".")]
    if not parts:
        raise InvalidPathError(f"path has no name: {path!r}")
    if ".." in parts:
        raise InvalidPathError(f"path escapes the sandbox: {path!r}")
    return "/".join(parts)


class VirtualFileSystem:
    """Byte-exact in-memory file store with prefix listing."""

    def __init__(self) -> None:
        self._files: dict[str, bytes] = {}

    def write(self, path: str, data: bytes) -> str:
        """Create or overwrite a file; returns the normalized path."""
        norm = normalize_path(path)
        self._files[norm] = bytes(data)
        return norm

    def read(self, path: str) -> bytes:
        norm = normalize_path(path)
        try:
            return self._files[norm]
        except KeyError:
            raise VfsNotFoundError(norm) from None

    def list(self, prefix: str = "") -> list[tuple[str, int]]:
        """(path, size) entries whose path starts with prefix, sorted."""
        return sorted(
            (path, len(data))
            for path, data in self._files.items()
            if path.startswith(prefix)
        )

    def exists(self, path: str) -> bool:
        return normalize_path(path) in self._files

    def __len__(self) -> int:
        return len(self._files)
