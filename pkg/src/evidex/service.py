"""Session-oriented HTTP orchestration of the whole pipeline.

Flow: POST a URL to get candidate keywords, POST the confirmed selection to
kick off the search fan-out, poll GET bundle until ready. Sessions live in
memory with a TTL and move strictly along
Created -> CandidatesReady -> Searching -> (BundleReady | Failed).
"""

from __future__ import annotations

import logging
import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .config import EvidexConfig
from .errors import (
    EmptySelection,
    EvidexError,
    MalformedUrl,
    UnknownCandidate,
)
from .ingest import ArticleDocument
from .keywords import KeywordCandidate, KeywordSelection, apply_selection, candidates_to_json
from .pipeline import BundleResult, EvidencePipeline
from .serialize import bundle_to_dict

logger = logging.getLogger(__name__)

STATE_CREATED = "Created"
STATE_CANDIDATES_READY = "CandidatesReady"
STATE_SEARCHING = "Searching"
STATE_BUNDLE_READY = "BundleReady"
STATE_FAILED = "Failed"

_ALLOWED_TRANSITIONS = {
    STATE_CREATED: {STATE_CANDIDATES_READY, STATE_FAILED},
    STATE_CANDIDATES_READY: {STATE_SEARCHING},
    STATE_SEARCHING: {STATE_BUNDLE_READY, STATE_FAILED},
    STATE_BUNDLE_READY: set(),
    STATE_FAILED: set(),
}


@dataclass
class Session:
    id: str
    state: str = STATE_CREATED
    article: ArticleDocument | None = None
    candidates: list[KeywordCandidate] | None = None
    selection: KeywordSelection | None = None
    result: BundleResult | None = None
    failure_reason: str = ""
    warnings: list[str] = field(default_factory=list)
    created_at: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def transition(self, new_state: str, reason: str = "") -> None:
        if new_state not in _ALLOWED_TRANSITIONS[self.state]:
            raise RuntimeError(f"illegal transition {self.state} -> {new_state}")
        self.state = new_state
        if new_state == STATE_FAILED:
            self.failure_reason = reason


class SessionStore:
    """In-memory sessions with lazy TTL expiry."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self) -> Session:
        session = Session(id=uuid.uuid4().hex)
        with self._lock:
            self._purge()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            self._purge()
            return self._sessions.get(session_id)

    def _purge(self) -> None:
        deadline = time.monotonic() - self.ttl
        expired = [sid for sid, s in self._sessions.items() if s.created_at < deadline]
        for sid in expired:
            del self._sessions[sid]


def _error(status: int, error: str, reason: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "reason": reason})


async def _json_body(request: Request) -> dict | None:
    try:
        body = await request.json()
    except Exception:
        return None
    return body if isinstance(body, dict) else None


def create_app(config: EvidexConfig | None = None,
               pipeline: EvidencePipeline | None = None) -> FastAPI:
    config = config or EvidexConfig.from_env()
    pipeline = pipeline or EvidencePipeline(config)
    store = SessionStore(ttl=config.session_ttl)
    executor = ThreadPoolExecutor(max_workers=4, thread_name_prefix="evidex-search")

    app = FastAPI(title="evidex", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    app.state.store = store
    app.state.pipeline = pipeline

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/sessions")
    async def create_session(request: Request):
        body = await _json_body(request)
        url = body.get("url") if body else None
        if not isinstance(url, str) or not url:
            return _error(400, "bad_request", "body must be a JSON object with a url")

        session = store.create()
        with session.lock:
            try:
                article = pipeline.ingest(url)
                candidates = pipeline.candidates(article)
            except MalformedUrl as exc:
                session.transition(STATE_FAILED, str(exc))
                return _error(400, "malformed_url", str(exc))
            except EvidexError as exc:
                session.transition(STATE_FAILED, str(exc))
                return _error(422, "ingest_failed", str(exc))
            session.article = article
            session.candidates = candidates
            session.transition(STATE_CANDIDATES_READY)
        return JSONResponse(status_code=201, content={
            "session_id": session.id,
            "state": session.state,
            "candidates": candidates_to_json(candidates),
        })

    @app.post("/v1/sessions/{session_id}/selection")
    async def submit_selection(session_id: str, request: Request):
        session = store.get(session_id)
        if session is None:
            return _error(404, "unknown_session", "no such session (or it expired)")
        body = await _json_body(request)
        if body is None:
            return _error(400, "bad_request", "body must be a JSON object")
        selected = body.get("selected", [])
        custom = body.get("custom", [])

        with session.lock:
            if session.state != STATE_CANDIDATES_READY:
                return _error(409, "wrong_state",
                              f"selection requires CandidatesReady, session is {session.state}")
            try:
                selection = apply_selection(session.candidates or [], selected, custom)
            except (UnknownCandidate, EmptySelection) as exc:
                return _error(422, type(exc).__name__, str(exc))
            session.selection = selection
            session.transition(STATE_SEARCHING)

        def run_search():
            try:
                result = pipeline.build_bundle(selection)
            except Exception as exc:  # any pipeline failure ends the session
                logger.exception("search fan-out failed for session %s", session_id)
                with session.lock:
                    session.transition(STATE_FAILED, str(exc))
                return
            with session.lock:
                session.result = result
                session.warnings = result.warnings
                session.transition(STATE_BUNDLE_READY)

        executor.submit(run_search)
        return JSONResponse(status_code=202, content={
            "session_id": session.id,
            "state": STATE_SEARCHING,
        })

    @app.get("/v1/sessions/{session_id}/bundle")
    def get_bundle(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, "unknown_session", "no such session (or it expired)")
        with session.lock:
            state = session.state
            result = session.result
            reason = session.failure_reason
        if state == STATE_BUNDLE_READY and result is not None:
            return JSONResponse(status_code=200,
                                content=bundle_to_dict(result.bundle, result.warnings))
        if state == STATE_FAILED:
            return _error(422, "pipeline_failed", reason)
        return JSONResponse(status_code=202, content={"state": state})

    return app
