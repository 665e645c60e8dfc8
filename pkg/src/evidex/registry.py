"""Curated source registry: outlet tiers, credibility links, denylist.

Registries are versioned JSON snapshots, not code. Loading validates hard:
exactly ten entries per tier, no duplicate domains, every entry carrying a
credibility link. Classification precedence is tier match, then denylist,
then General, so a curated outlet can never be denied by a stale denylist
snapshot.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import urlsplit

from .errors import MalformedUrl, RegistryError
from .urls import PublicSuffixes, default_suffixes

TIER_MAINSTREAM = "Mainstream"
TIER_SCIENTIFIC = "Scientific"
TIER_SIZE = 10

KIND_MAINSTREAM = "Mainstream"
KIND_SCIENTIFIC = "Scientific"
KIND_GENERAL = "General"
KIND_DENIED = "Denied"


@dataclass(frozen=True)
class SourceEntry:
    domain: str              # host form, lowercase, no scheme, no www
    display_name: str
    tier: str
    mbfc_url: str
    path_prefix: str = ""


@dataclass(frozen=True)
class Denylist:
    domains: frozenset[str]  # registrable domains, lowercase
    snapshot_date: dt.date

    @classmethod
    def load(cls, path: str | Path) -> "Denylist":
        raw = _read_json(path)
        if not isinstance(raw, dict) or "domains" not in raw or "snapshot_date" not in raw:
            raise RegistryError(f"denylist {path}: expected snapshot_date + domains")
        try:
            snapshot = dt.date.fromisoformat(raw["snapshot_date"])
        except (TypeError, ValueError) as exc:
            raise RegistryError(f"denylist {path}: bad snapshot_date") from exc
        domains = set()
        for item in raw["domains"]:
            if not isinstance(item, str) or not item.strip():
                raise RegistryError(f"denylist {path}: bad domain entry {item!r}")
            domains.add(item.strip().lower())
        return cls(domains=frozenset(domains), snapshot_date=snapshot)


@dataclass(frozen=True)
class SourceClass:
    """classify_source result: which bucket, and the registry entry if curated."""

    kind: str
    entry: SourceEntry | None = None


def _read_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise RegistryError(f"cannot read registry file {path}: {exc}") from exc


def _normalize_domain(raw: str) -> tuple[str, str]:
    """Split a configured domain string into (host, path_prefix).

    Accepts the snapshot forms: bare hosts, www-prefixed hosts, and hosts
    with a path suffix such as pbs.com/newshour.
    """
    value = raw.strip().lower()
    if "://" in value:
        raise RegistryError(f"registry domain must not carry a scheme: {raw!r}")
    host, _, path = value.partition("/")
    if host.startswith("www."):
        host = host[4:]
    if not host or "." not in host:
        raise RegistryError(f"bad registry domain: {raw!r}")
    prefix = "/" + path if path else ""
    return host, prefix.rstrip("/")


def _load_tier(path: str | Path, tier: str) -> list[SourceEntry]:
    raw = _read_json(path)
    if not isinstance(raw, list):
        raise RegistryError(f"{path}: expected a JSON array of source entries")
    entries: list[SourceEntry] = []
    seen: set[str] = set()
    for item in raw:
        if not isinstance(item, dict):
            raise RegistryError(f"{path}: entry is not an object: {item!r}")
        fields = {k: v for k, v in item.items() if not k.startswith("_")}
        missing = {"domain", "display_name", "tier", "mbfc_url"} - fields.keys()
        if missing:
            raise RegistryError(f"{path}: entry missing fields {sorted(missing)}")
        if fields["tier"] != tier:
            raise RegistryError(
                f"{path}: entry {fields['domain']!r} has tier {fields['tier']!r}, expected {tier!r}"
            )
        if not str(fields["mbfc_url"]).startswith("http"):
            raise RegistryError(f"{path}: entry {fields['domain']!r} has no mbfc_url")
        host, prefix = _normalize_domain(str(fields["domain"]))
        explicit_prefix = str(fields.get("path_prefix", "")).rstrip("/")
        key = host + (explicit_prefix or prefix)
        if key in seen:
            raise RegistryError(f"{path}: duplicate domain {key!r}")
        seen.add(key)
        entries.append(SourceEntry(
            domain=host,
            display_name=str(fields["display_name"]),
            tier=tier,
            mbfc_url=str(fields["mbfc_url"]),
            path_prefix=explicit_prefix or prefix,
        ))
    if len(entries) != TIER_SIZE:
        raise RegistryError(f"{path}: tier {tier} has {len(entries)} entries, expected {TIER_SIZE}")
    return entries


class SourceRegistry:
    """Immutable snapshot of both outlet tiers plus the denylist."""

    def __init__(
        self,
        mainstream: list[SourceEntry],
        scientific: list[SourceEntry],
        denylist: Denylist,
        suffixes: PublicSuffixes | None = None,
    ):
        self.mainstream = list(mainstream)
        self.scientific = list(scientific)
        self.denylist = denylist
        self.suffixes = suffixes or default_suffixes()

    @classmethod
    def load(
        cls,
        mainstream_path: str | Path,
        scientific_path: str | Path,
        denylist_path: str | Path,
    ) -> "SourceRegistry":
        return cls(
            mainstream=_load_tier(mainstream_path, TIER_MAINSTREAM),
            scientific=_load_tier(scientific_path, TIER_SCIENTIFIC),
            denylist=Denylist.load(denylist_path),
        )

    def entries(self) -> list[SourceEntry]:
        return self.mainstream + self.scientific

    def classify_source(self, url: str) -> SourceClass:
        """Four-way bucket for a URL: tier match beats denylist beats General."""
        parts = urlsplit(url)
        if parts.scheme not in ("http", "https") or not parts.hostname:
            raise MalformedUrl(f"not an absolute http(s) URL: {url!r}")
        host = parts.hostname.lower().rstrip(".")
        if host.startswith("www."):
            host = host[4:]
        path = parts.path or "/"

        for entry in self.entries():
            if host != entry.domain and not host.endswith("." + entry.domain):
                continue
            if entry.path_prefix and not path.startswith(entry.path_prefix):
                continue
            kind = KIND_MAINSTREAM if entry.tier == TIER_MAINSTREAM else KIND_SCIENTIFIC
            return SourceClass(kind=kind, entry=entry)

        if self.suffixes.registrable_domain(host) in self.denylist.domains:
            return SourceClass(kind=KIND_DENIED)
        return SourceClass(kind=KIND_GENERAL)


def mbfc_link(entry: SourceEntry) -> str:
    """Credibility rating page for a curated outlet."""
    return entry.mbfc_url
