import json
import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
CORPUS_DIR = DATA_DIR / "corpus"
FIXTURES_DIR = DATA_DIR / "fixtures"

sys.path.insert(0, str(TESTS_DIR))

from evidex.config import EvidexConfig
from evidex.ingest import ArticleDocument
from evidex.registry import SourceRegistry

SUBJECT_URL = "https://health-desk-fixture.test/checks/booster-exhaustion-claim"


def make_doc(paragraphs: list[str], url: str = "https://example.test/article",
             title: str = "Fixture article") -> ArticleDocument:
    body = "\n\n".join(paragraphs)
    return ArticleDocument(
        url=url, title=title, authors=[], published_at=None,
        body_text=body, paragraphs=list(paragraphs),
    )


@pytest.fixture(scope="session")
def corpus() -> list[dict]:
    articles = []
    for path in sorted(CORPUS_DIR.glob("article_*.json")):
        payload = json.loads(path.read_text("utf-8"))
        payload["name"] = path.name
        articles.append(payload)
    assert len(articles) == 10
    return articles


@pytest.fixture(scope="session")
def corpus_labels() -> dict:
    return json.loads((CORPUS_DIR / "labels.json").read_text("utf-8"))


@pytest.fixture(scope="session")
def registry() -> SourceRegistry:
    cfg = EvidexConfig()
    return SourceRegistry.load(
        cfg.mainstream_registry_path,
        cfg.scientific_registry_path,
        cfg.denylist_path,
    )


@pytest.fixture()
def replay_config() -> EvidexConfig:
    return EvidexConfig(mode="replay", fixtures_dir=FIXTURES_DIR)


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].replace("test_", "", 1)
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\nACCEPTANCE {name}: {outcome}")
