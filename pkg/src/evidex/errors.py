"""Exception types shared across the evidex pipeline."""


class EvidexError(Exception):
    """Base class for every error raised by this package."""


# --- fetching / ingest ---

class NetworkError(EvidexError):
    """Target unreachable, DNS failure, or timeout."""


class HttpError(EvidexError):
    """Non-2xx HTTP response."""

    def __init__(self, status: int, url: str = ""):
        self.status = status
        self.url = url
        super().__init__(f"HTTP {status}" + (f" for {url}" if url else ""))


class TooLarge(EvidexError):
    """Response body exceeded the configured size cap."""


class ExtractionError(EvidexError):
    """No usable article text could be isolated from the page."""


class MalformedUrl(EvidexError):
    """URL is not absolute http(s)."""


# --- keywords ---

class NoCandidates(EvidexError):
    """No token span matched the noun-phrase pattern."""


class UnknownCandidate(EvidexError):
    """A chosen phrase is not among the offered candidates."""


class EmptySelection(EvidexError):
    """Selection contains no phrases at all."""


# --- registry ---

class RegistryError(EvidexError):
    """Registry or denylist file failed validation at load time."""


# --- search gateway ---

class EngineError(EvidexError):
    """Search engine call failed (bad status, unconfigured engine, ...)."""

    def __init__(self, message: str, status: int | None = None):
        self.status = status
        super().__init__(message)


class QuotaExceeded(EngineError):
    """Provider signalled quota exhaustion (HTTP 429)."""

    def __init__(self, message: str = "search quota exceeded"):
        super().__init__(message, status=429)


class FixtureMiss(NetworkError):
    """Replay mode has no recorded response for this request.

    Subclasses NetworkError so article fetches in replay mode fail with the
    fetch contract's error family while gateway callers can still catch the
    specific miss.
    """


class ProfileNotFound(EvidexError):
    """Author id unknown to every profile registry."""


# --- evaluation kit ---

class AllNA(EvidexError):
    """Every cell of the rating matrix is N/A."""


class UnevenRatings(EvidexError):
    """Items carry differing numbers of non-NA ratings."""

    def __init__(self, items: list[str]):
        self.items = list(items)
        super().__init__(f"uneven rating counts for items: {', '.join(self.items)}")
