"""Needs-Met rating arithmetic: mean ratings and Fleiss' kappa.

Ratings use the five-level search-quality scale (Fully Meets ... Fails to
Meet) plus N/A for items a rater could not judge. The numeric mapping is
FullyM=5 down to FailsM=1, so a rising mean is an improvement.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import AllNA, UnevenRatings

LABELS = ("FullyM", "HM", "MM", "SM", "FailsM")
NA = "NA"

LABEL_VALUES = {"FullyM": 5, "HM": 4, "MM": 3, "SM": 2, "FailsM": 1}

_CANONICAL = {label.lower(): label for label in LABELS}
_CANONICAL.update({"na": NA, "n/a": NA})


def canonical_label(raw: str) -> str:
    label = _CANONICAL.get(raw.strip().lower())
    if label is None:
        raise ValueError(f"unknown rating label: {raw!r}")
    return label


@dataclass(frozen=True)
class RatingMatrix:
    """Complete items x raters grid of rating labels."""

    items: list[str]
    raters: list[str]
    ratings: list[list[str]]  # ratings[i][j] = label of rater j on item i

    def __post_init__(self):
        if len(self.raters) < 2:
            raise ValueError("need at least 2 raters")
        if not self.items:
            raise ValueError("need at least 1 item")
        if len(self.ratings) != len(self.items):
            raise ValueError("one rating row per item required")
        for item, row in zip(self.items, self.ratings):
            if len(row) != len(self.raters):
                raise ValueError(f"item {item!r}: expected {len(self.raters)} ratings")
            for cell in row:
                if cell not in LABEL_VALUES and cell != NA:
                    raise ValueError(f"item {item!r}: bad label {cell!r}")

    @classmethod
    def from_csv(cls, source: str | Path) -> "RatingMatrix":
        """CSV with header item,rater_1,...,rater_k; labels case-insensitive."""
        if isinstance(source, Path) or "\n" not in str(source):
            text = Path(source).read_text("utf-8")
        else:
            text = str(source)
        rows = list(csv.reader(io.StringIO(text)))
        rows = [row for row in rows if any(cell.strip() for cell in row)]
        if len(rows) < 2:
            raise ValueError("CSV needs a header and at least one item row")
        header = [cell.strip() for cell in rows[0]]
        if len(header) < 3 or header[0].lower() != "item":
            raise ValueError("header must be item,rater_1,...,rater_k")
        raters = header[1:]
        items: list[str] = []
        ratings: list[list[str]] = []
        for row in rows[1:]:
            if len(row) != len(header):
                raise ValueError(f"row for {row[0]!r} has {len(row)} cells, expected {len(header)}")
            items.append(row[0].strip())
            ratings.append([canonical_label(cell) for cell in row[1:]])
        return cls(items=items, raters=raters, ratings=ratings)


def mean_rating(m: RatingMatrix) -> float:
    """Arithmetic mean of the numeric ratings, N/A cells excluded."""
    values = [
        LABEL_VALUES[cell]
        for row in m.ratings
        for cell in row
        if cell != NA
    ]
    if not values:
        raise AllNA("every cell is N/A")
    return sum(values) / len(values)


def drop_na_items(m: RatingMatrix) -> RatingMatrix:
    """Drop items containing any N/A cell, keeping the rating count constant.

    This is the preprocessing step before fleiss_kappa when raters were
    allowed to skip items.
    """
    kept = [(item, row) for item, row in zip(m.items, m.ratings) if NA not in row]
    if not kept:
        raise AllNA("no item has a complete set of ratings")
    return RatingMatrix(
        items=[item for item, _ in kept],
        raters=list(m.raters),
        ratings=[list(row) for _, row in kept],
    )


def _counts_table(m: RatingMatrix) -> tuple[np.ndarray, list[str]]:
    table = np.zeros((len(m.items), len(LABELS)), dtype=np.int64)
    col = {label: k for k, label in enumerate(LABELS)}
    uneven: list[str] = []
    per_item = [sum(1 for cell in row if cell != NA) for row in m.ratings]
    # expected panel size = modal count, ties resolved toward the larger
    # count so under-rated items are the ones reported
    frequency = Counter(per_item)
    expected = max(frequency, key=lambda count: (frequency[count], count))
    for item, row, count in zip(m.items, m.ratings, per_item):
        if count != expected or count < 2:
            uneven.append(item)
    if uneven:
        raise UnevenRatings(uneven)
    for i, row in enumerate(m.ratings):
        for cell in row:
            if cell != NA:
                table[i, col[cell]] += 1
    return table, list(LABELS)


def fleiss_kappa(m: RatingMatrix) -> float:
    """Chance-corrected multi-rater agreement over the five rating levels.

    Per-item agreement P_i = (sum_j n_ij^2 - n) / (n (n - 1)); expected
    agreement is the sum of squared category proportions. The all-one-
    category edge (expected agreement 1) is defined as kappa 1.0.

    Raises UnevenRatings when items carry differing numbers of non-NA
    ratings; use drop_na_items first if raters may skip items.
    """
    table, _ = _counts_table(m)
    n = int(table.sum(axis=1)[0])
    table = table.astype(np.float64)

    p_item = (np.square(table).sum(axis=1) - n) / (n * (n - 1))
    p_mean = float(p_item.mean())

    proportions = table.sum(axis=0) / table.sum()
    p_expected = float(np.square(proportions).sum())

    if abs(1.0 - p_expected) < 1e-15:
        # every rating in a single category: perfect agreement by definition
        return 1.0
    return (p_mean - p_expected) / (1.0 - p_expected)


def is_degenerate(m: RatingMatrix) -> bool:
    """True when all non-NA ratings fall in one category (kappa pinned to 1)."""
    used = {cell for row in m.ratings for cell in row if cell != NA}
    return len(used) == 1
