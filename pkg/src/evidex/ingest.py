"""Fetch a news page and reduce it to a structured article.

The extractor is readability-style: score text-dense candidate containers,
pick the best one, and keep its paragraph blocks. Metadata comes from the
usual meta tags with fixed fallbacks (og:title, else first h1; publish date
from article:published_time or nothing; authors from author metas or
nothing).
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import urlsplit

import requests

from .config import MODE_LIVE, MODE_RECORD, MODE_REPLAY, EvidexConfig
from .errors import (
    ExtractionError,
    FixtureMiss,
    HttpError,
    MalformedUrl,
    NetworkError,
    TooLarge,
)
from .htmldom import NON_CONTENT_TAGS, Node, parse_html
from .textproc import content_words, is_word, normalize_text, split_paragraphs, split_sentences, tokenize

logger = logging.getLogger(__name__)

CANDIDATE_TAGS = frozenset({"article", "main", "section", "div", "td", "body"})
CONTENT_BLOCK_TAGS = ("p", "blockquote", "pre")
SKIP_ANCESTOR_TAGS = frozenset({"aside", "nav", "footer", "header", "figure"})

_NEGATIVE_HINT_RE = re.compile(
    r"sidebar|comment|footer|footnote|nav|menu|advert|banner|promo|related"
    r"|share|social|widget|breadcrumb|masthead|sponsor|popup|cookie|leaderboard",
    re.I,
)
_POSITIVE_HINT_RE = re.compile(r"article|content|entry|main|story|post|text|body", re.I)


def validate_article_url(url: str) -> str:
    parts = urlsplit(url)
    if parts.scheme not in ("http", "https") or not parts.netloc:
        raise MalformedUrl(f"not an absolute http(s) URL: {url!r}")
    return url


@dataclass(frozen=True)
class ArticleDocument:
    """Parsed news article: metadata plus ordered body paragraphs."""

    url: str
    title: str
    authors: list[str]
    published_at: dt.date | None
    body_text: str
    paragraphs: list[str]
    language: str = "en"

    def __post_init__(self):
        validate_article_url(self.url)
        if "\n\n".join(self.paragraphs) != self.body_text:
            raise ValueError("body_text must equal paragraphs joined by blank lines")
        if any(not p.strip() for p in self.paragraphs):
            raise ValueError("paragraphs must be non-empty")

    def sentences(self) -> list[str]:
        """Sentences per paragraph, flattened in document order."""
        out: list[str] = []
        for paragraph in self.paragraphs:
            out.extend(split_sentences(paragraph))
        return out


@dataclass(frozen=True)
class Summary:
    sentences: list[str]
    source_url: str


@dataclass(frozen=True)
class FetchResult:
    content: bytes
    final_url: str
    status: int = 200


class PageFetcher:
    """HTTP GET with record/replay support and a response size cap.

    Replay mode maps sha256(url) to <hash>.html plus <hash>.meta.json
    (original url, final url after redirects, status) under
    fixtures_dir/articles/. Record mode performs the live fetch and writes
    the same files.
    """

    def __init__(self, config: EvidexConfig, session: requests.Session | None = None):
        self.config = config
        self.session = session or requests.Session()

    def fetch(self, url: str, timeout: float | None = None) -> FetchResult:
        validate_article_url(url)
        timeout = timeout if timeout is not None else self.config.timeout
        if self.config.mode == MODE_REPLAY:
            return self._replay(url)
        result = self._live(url, timeout)
        if self.config.mode == MODE_RECORD:
            self._record(url, result)
        return result

    # -- fixture layout --

    def _paths(self, url: str) -> tuple[Path, Path]:
        if not self.config.fixtures_dir:
            raise FixtureMiss("no fixtures directory configured")
        digest = hashlib.sha256(url.encode("utf-8")).hexdigest()
        base = Path(self.config.fixtures_dir) / "articles"
        return base / f"{digest}.html", base / f"{digest}.meta.json"

    def _replay(self, url: str) -> FetchResult:
        body_path, meta_path = self._paths(url)
        if not body_path.exists() or not meta_path.exists():
            raise FixtureMiss(f"no recorded page for {url}")
        meta = json.loads(meta_path.read_text("utf-8"))
        status = int(meta.get("status", 200))
        if not 200 <= status < 300:
            raise HttpError(status, url)
        return FetchResult(
            content=body_path.read_bytes(),
            final_url=meta.get("final_url", url),
            status=status,
        )

    def _record(self, url: str, result: FetchResult) -> None:
        body_path, meta_path = self._paths(url)
        body_path.parent.mkdir(parents=True, exist_ok=True)
        body_path.write_bytes(result.content)
        meta_path.write_text(
            json.dumps(
                {"url": url, "final_url": result.final_url, "status": result.status},
                indent=2,
            )
            + "\n",
            "utf-8",
        )

    def _live(self, url: str, timeout: float) -> FetchResult:
        cap = self.config.max_body_bytes
        try:
            resp = self.session.get(
                url,
                timeout=timeout,
                headers={"User-Agent": self.config.user_agent},
                stream=True,
                allow_redirects=True,
            )
        except requests.Timeout as exc:
            raise NetworkError(f"timeout fetching {url}") from exc
        except requests.RequestException as exc:
            raise NetworkError(f"cannot fetch {url}: {exc}") from exc
        with resp:
            if not 200 <= resp.status_code < 300:
                raise HttpError(resp.status_code, url)
            declared = resp.headers.get("Content-Length")
            if declared and declared.isdigit() and int(declared) > cap:
                raise TooLarge(f"declared size {declared} exceeds cap {cap}")
            chunks: list[bytes] = []
            size = 0
            for chunk in resp.iter_content(chunk_size=65536):
                size += len(chunk)
                if size > cap:
                    raise TooLarge(f"body exceeds cap of {cap} bytes")
                chunks.append(chunk)
            return FetchResult(b"".join(chunks), resp.url, resp.status_code)


def fetch_html(url: str, timeout: float, config: EvidexConfig | None = None) -> FetchResult:
    """One-shot fetch; see PageFetcher for the record/replay contract."""
    return PageFetcher(config or EvidexConfig(mode=MODE_LIVE)).fetch(url, timeout)


# --- extraction ---

def extract_article(html: bytes | str, url: str, min_chars: int = 280) -> ArticleDocument:
    """Isolate the main article text of a page and collect its metadata.

    Raises ExtractionError when no candidate block yields at least
    `min_chars` characters of text.
    """
    validate_article_url(url)
    if isinstance(html, bytes):
        html = html.decode("utf-8", errors="replace")
    root = parse_html(html)

    # metadata first: pruning drops <head>
    title = _extract_title(root)
    authors = _extract_authors(root)
    published_at = _extract_published(root)
    language = _extract_language(root)

    _prune(root)
    paragraphs = _best_paragraphs(root)
    body_text = "\n\n".join(paragraphs)
    if len(body_text) < min_chars:
        raise ExtractionError(
            f"no article block of at least {min_chars} characters found at {url}"
        )
    # re-split so the join/split round-trip invariant holds exactly
    paragraphs = split_paragraphs(body_text)
    body_text = "\n\n".join(paragraphs)

    return ArticleDocument(
        url=url,
        title=title,
        authors=authors,
        published_at=published_at,
        body_text=body_text,
        paragraphs=paragraphs,
        language=language,
    )


def _prune(root: Node) -> None:
    """Drop non-content subtrees in place."""
    for node in list(root.iter_nodes()):
        node.children = [
            c for c in node.children
            if not (isinstance(c, Node) and c.tag in NON_CONTENT_TAGS)
        ]


def _hint(node: Node) -> str:
    return f"{node.attr('class')} {node.attr('id')}"


def _is_skippable(node: Node, stop: Node | None = None) -> bool:
    """True when node sits under boilerplate (nav, aside, negative class)."""
    current: Node | None = node
    while current is not None and current is not stop:
        if current.tag in SKIP_ANCESTOR_TAGS:
            return True
        hint = _hint(current)
        if _NEGATIVE_HINT_RE.search(hint) and not _POSITIVE_HINT_RE.search(hint):
            return True
        current = current.parent
    return False


def _link_density(node: Node) -> float:
    total = len(node.text())
    if total == 0:
        return 0.0
    linked = sum(len(a.text()) for a in node.find_all("a"))
    return min(1.0, linked / total)


def _nearest_candidate(node: Node) -> Node | None:
    for ancestor in node.ancestors():
        if ancestor.tag in CANDIDATE_TAGS:
            return ancestor
    return None


def _block_text(block: Node) -> str:
    return normalize_text(block.text()).strip()


def _best_paragraphs(root: Node) -> list[str]:
    blocks = [b for b in root.find_all(*CONTENT_BLOCK_TAGS) if not _is_skippable(b)]
    by_candidate: dict[int, tuple[Node, list[Node]]] = {}
    for block in blocks:
        candidate = _nearest_candidate(block)
        if candidate is None or _is_skippable(candidate):
            continue
        by_candidate.setdefault(id(candidate), (candidate, []))[1].append(block)

    best: tuple[float, Node, list[Node]] | None = None
    order = {id(n): i for i, n in enumerate(root.iter_nodes())}
    for candidate, cand_blocks in sorted(
        by_candidate.values(), key=lambda pair: order[id(pair[0])]
    ):
        score = 0.0
        for block in cand_blocks:
            text = _block_text(block)
            if len(text) < 25:
                continue
            score += len(text) * (1.0 - _link_density(block))
        if _POSITIVE_HINT_RE.search(_hint(candidate)):
            score *= 1.25
        if score > 0 and (best is None or score > best[0]):
            best = (score, candidate, cand_blocks)

    if best is not None:
        texts = [_block_text(b) for b in best[2] if _link_density(b) < 0.5]
        return [t for t in texts if t]

    # no paragraph markup at all: fall back to raw block-level text
    body = root.find_first("body") or root
    return split_paragraphs(normalize_text(body.text()))


def _find_meta(root: Node, **match: str) -> str:
    for meta in root.find_all("meta"):
        if all(meta.attr(k).lower() == v for k, v in match.items()):
            content = meta.attr("content").strip()
            if content:
                return content
    return ""


def _extract_title(root: Node) -> str:
    title = _find_meta(root, property="og:title")
    if title:
        return normalize_text(title).strip()
    h1 = root.find_first("h1")
    if h1 is not None:
        return " ".join(h1.text().split())
    return ""


def _extract_published(root: Node) -> dt.date | None:
    raw = _find_meta(root, property="article:published_time")
    if not raw:
        return None
    try:
        return dt.date.fromisoformat(raw[:10])
    except ValueError:
        logger.debug("unparseable publish date %r", raw)
        return None


def _extract_authors(root: Node) -> list[str]:
    authors: list[str] = []
    for meta in root.find_all("meta"):
        if meta.attr("name").lower() == "author" or meta.attr("property").lower() == "article:author":
            content = " ".join(meta.attr("content").split())
            if content and content not in authors:
                authors.append(content)
    return authors


def _extract_language(root: Node) -> str:
    html = root.find_first("html")
    if html is not None:
        lang = html.attr("lang")[:2].lower()
        if len(lang) == 2 and lang.isalpha():
            return lang
    return "en"


# --- extractive summary ---

def extractive_summary(doc: ArticleDocument, k: int) -> Summary:
    """Top-k sentences by average body-wide content-word frequency.

    score(sentence) = sum of body frequencies of the sentence's content
    words, divided by the sentence's word count. Ties break toward the
    earlier sentence; the chosen sentences come back in article order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    sentences = doc.sentences()
    if len(sentences) <= k:
        return Summary(sentences=list(sentences), source_url=doc.url)

    freq: dict[str, int] = {}
    for word in content_words(tokenize(doc.body_text)):
        freq[word] = freq.get(word, 0) + 1

    scored: list[tuple[float, int]] = []
    for index, sentence in enumerate(sentences):
        tokens = tokenize(sentence)
        words = [t for t in tokens if is_word(t)]
        if not words:
            scored.append((0.0, index))
            continue
        total = sum(freq.get(w, 0) for w in content_words(tokens))
        scored.append((total / len(words), index))

    top = sorted(scored, key=lambda pair: (-pair[0], pair[1]))[:k]
    chosen = sorted(index for _, index in top)
    return Summary(sentences=[sentences[i] for i in chosen], source_url=doc.url)
