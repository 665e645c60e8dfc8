"""URL canonicalization and registrable-domain lookups.

Registrable domains come from a bundled public-suffix snapshot (trimmed to
common suffixes); unknown TLDs fall back to the standard default rule where
the TLD itself is the suffix.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

from .config import DATA_DIR
from .errors import MalformedUrl

PSL_SNAPSHOT_PATH = DATA_DIR / "public_suffix_snapshot.txt"

_TRACKING_PARAMS_EXACT = frozenset({"fbclid"})
_TRACKING_PREFIX = "utm_"


class PublicSuffixes:
    """Longest-match lookup over a public suffix rule list."""

    def __init__(self, rules: set[str], wildcards: set[str]):
        self.rules = rules
        self.wildcards = wildcards  # parents of "*.x" rules

    @classmethod
    def from_file(cls, path: str | Path) -> "PublicSuffixes":
        rules: set[str] = set()
        wildcards: set[str] = set()
        for line in Path(path).read_text("utf-8").splitlines():
            line = line.strip().lower()
            if not line or line.startswith("//"):
                continue
            if line.startswith("*."):
                wildcards.add(line[2:])
            else:
                rules.add(line)
        return cls(rules, wildcards)

    def suffix_length(self, labels: list[str]) -> int:
        """Number of labels in the public suffix of a host (default rule: 1)."""
        best = 1
        for take in range(1, len(labels) + 1):
            candidate = ".".join(labels[-take:])
            if candidate in self.rules and take > best:
                best = take
            if take < len(labels) and candidate in self.wildcards and take + 1 > best:
                best = take + 1
        return best

    def registrable_domain(self, host: str) -> str:
        """registrable domain = public suffix plus one label, or the host itself
        when the host is not deeper than the suffix."""
        host = host.lower().rstrip(".")
        labels = [label for label in host.split(".") if label]
        if not labels:
            return host
        suffix_len = self.suffix_length(labels)
        take = min(len(labels), suffix_len + 1)
        return ".".join(labels[-take:])


@lru_cache(maxsize=1)
def default_suffixes() -> PublicSuffixes:
    return PublicSuffixes.from_file(PSL_SNAPSHOT_PATH)


def registrable_domain(host: str, suffixes: PublicSuffixes | None = None) -> str:
    return (suffixes or default_suffixes()).registrable_domain(host)


def host_of(url: str) -> str:
    """Lowercased host without port, userinfo, or trailing dot."""
    parts = urlsplit(url)
    if parts.scheme not in ("http", "https") or not parts.netloc:
        raise MalformedUrl(f"not an absolute http(s) URL: {url!r}")
    host = parts.hostname or ""
    return host.lower().rstrip(".")


def canonical_url(url: str) -> str:
    """Canonical form for deduplication.

    https scheme, lowercase host, trailing slash stripped, utm_* and fbclid
    query parameters removed; everything else is preserved.
    """
    parts = urlsplit(url)
    if parts.scheme not in ("http", "https") or not parts.netloc:
        raise MalformedUrl(f"not an absolute http(s) URL: {url!r}")
    host = (parts.hostname or "").lower().rstrip(".")
    if parts.port is not None and parts.port not in (80, 443):
        host = f"{host}:{parts.port}"
    path = parts.path.rstrip("/")
    kept = [
        (key, value)
        for key, value in parse_qsl(parts.query, keep_blank_values=True)
        if key not in _TRACKING_PARAMS_EXACT and not key.lower().startswith(_TRACKING_PREFIX)
    ]
    query = urlencode(kept)
    return urlunsplit(("https", host, path, query, parts.fragment))
