"""Runtime configuration for the pipeline, service and CLI.

Everything here has a sane offline default; live search credentials come
from EVIDEX_* environment variables and are only required in live mode.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"

DEFAULT_USER_AGENT = "evidex/0.1 (fact-checking evidence engine)"

# Fetch / engine modes.
MODE_LIVE = "live"
MODE_REPLAY = "replay"
MODE_RECORD = "record"


@dataclass(frozen=True)
class EvidexConfig:
    # live | replay | record
    mode: str = MODE_LIVE
    fixtures_dir: Path | None = None
    user_agent: str = DEFAULT_USER_AGENT
    timeout: float = 15.0
    max_body_bytes: int = 5 * 1024 * 1024
    min_article_chars: int = 280
    max_per_tier: int = 10
    max_publications: int = 20
    summary_sentences: int = 5
    max_concurrent_requests: int = 4

    # bundled data snapshots; override to swap registries
    mainstream_registry_path: Path = DATA_DIR / "sources_mainstream.json"
    scientific_registry_path: Path = DATA_DIR / "sources_scientific.json"
    denylist_path: Path = DATA_DIR / "denylist.json"
    lexicons_path: Path = DATA_DIR / "lexicons.json"
    gazetteer_path: Path | None = DATA_DIR / "gazetteer_sample.txt"

    # outlets whose articles are researcher-authored and get a summary card
    summary_outlet_domains: tuple[str, ...] = ("theconversation.com",)

    # profile registries in merge-precedence order
    profile_registry_order: tuple[str, ...] = ("scopus", "orcid")

    # live search credentials
    search_key: str = ""
    cx_mainstream: str = ""
    cx_scientific: str = ""
    cx_general: str = ""
    scholar_key: str = ""

    # service
    session_ttl: float = 3600.0
    cors_origins: tuple[str, ...] = ("*",)

    @classmethod
    def from_env(cls, **overrides) -> "EvidexConfig":
        env = os.environ
        cfg = cls(
            user_agent=env.get("EVIDEX_UA", DEFAULT_USER_AGENT),
            search_key=env.get("EVIDEX_SEARCH_KEY", ""),
            cx_mainstream=env.get("EVIDEX_SEARCH_CX_MAINSTREAM", ""),
            cx_scientific=env.get("EVIDEX_SEARCH_CX_SCIENTIFIC", ""),
            cx_general=env.get("EVIDEX_SEARCH_CX_GENERAL", ""),
            scholar_key=env.get("EVIDEX_SCHOLAR_KEY", ""),
        )
        if overrides:
            cfg = replace(cfg, **overrides)
        return cfg

    def with_(self, **overrides) -> "EvidexConfig":
        return replace(self, **overrides)
