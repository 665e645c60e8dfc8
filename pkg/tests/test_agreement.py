import random

import pytest

from evidex.agreement import (
    LABELS,
    RatingMatrix,
    canonical_label,
    drop_na_items,
    fleiss_kappa,
    is_degenerate,
    mean_rating,
)
from evidex.errors import AllNA, UnevenRatings

from oracles import oracle_fleiss, oracle_mean


def matrix(rows, raters=None):
    raters = raters or [f"rater_{j+1}" for j in range(len(rows[0]))]
    return RatingMatrix(
        items=[f"item_{i+1}" for i in range(len(rows))],
        raters=raters,
        ratings=[list(r) for r in rows],
    )


def random_matrix(rng, n_items=None, n_raters=None, labels=LABELS):
    n_items = n_items or rng.randint(2, 12)
    n_raters = n_raters or rng.randint(2, 8)
    return matrix([[rng.choice(labels) for _ in range(n_raters)] for _ in range(n_items)])


# the classic 10-subject, 14-rater worked example; row counts per category
WORKED_COUNTS = [
    [0, 0, 0, 0, 14],
    [0, 2, 6, 4, 2],
    [0, 0, 3, 5, 6],
    [0, 3, 9, 2, 0],
    [2, 2, 8, 1, 1],
    [7, 7, 0, 0, 0],
    [3, 2, 6, 3, 0],
    [2, 5, 3, 2, 2],
    [6, 5, 2, 1, 0],
    [0, 2, 2, 3, 7],
]


def worked_matrix():
    rows = []
    for counts in WORKED_COUNTS:
        row = []
        for label, count in zip(LABELS, counts):
            row.extend([label] * count)
        rows.append(row)
    return matrix(rows)


class TestMeanRating:
    def test_constant_matrix(self):
        assert mean_rating(matrix([["FullyM"] * 3] * 4)) == 5.0

    def test_synthetic_3x20_matches_oracle(self):
        rng = random.Random(99)
        m = random_matrix(rng, n_items=20, n_raters=3)
        assert mean_rating(m) == pytest.approx(oracle_mean(m.ratings))

    def test_na_excluded(self):
        m = matrix([["FullyM", "NA"], ["FailsM", "NA"]])
        assert mean_rating(m) == 3.0

    def test_all_na(self):
        with pytest.raises(AllNA):
            mean_rating(matrix([["NA", "NA"]]))

    def test_range(self):
        rng = random.Random(3)
        for _ in range(50):
            m = random_matrix(rng)
            assert 1.0 <= mean_rating(m) <= 5.0


class TestFleissKappa:
    def test_perfect_agreement_multiple_categories(self):
        m = matrix([["FullyM"] * 3, ["HM"] * 3, ["MM"] * 3])
        assert fleiss_kappa(m) == pytest.approx(1.0, abs=1e-12)

    def test_single_category_defined_as_one(self):
        m = matrix([["HM"] * 4] * 3)
        assert is_degenerate(m)
        assert fleiss_kappa(m) == 1.0

    def test_worked_example_against_oracle(self):
        m = worked_matrix()
        mine = fleiss_kappa(m)
        reference = oracle_fleiss(m.ratings)
        assert mine == pytest.approx(reference, abs=1e-9)
        # the published value for this table
        assert mine == pytest.approx(0.2099, abs=5e-4)

    def test_uneven_ratings_rejected(self):
        m = matrix([["FullyM", "HM", "NA"], ["FullyM", "HM", "MM"]])
        with pytest.raises(UnevenRatings) as err:
            fleiss_kappa(m)
        assert "item_1" in err.value.items

    def test_even_na_counts_allowed(self):
        m = matrix([["FullyM", "HM", "NA"], ["FullyM", "NA", "MM"]])
        value = fleiss_kappa(m)
        rows = [[c for c in row if c != "NA"] for row in m.ratings]
        assert value == pytest.approx(oracle_fleiss(rows), abs=1e-12)

    def test_random_matrices_match_oracle(self):
        rng = random.Random(20240601)
        for _ in range(100):
            m = random_matrix(rng)
            assert fleiss_kappa(m) == pytest.approx(oracle_fleiss(m.ratings), abs=1e-9)

    def test_range_bound(self):
        rng = random.Random(8)
        for _ in range(100):
            m = random_matrix(rng)
            assert -1.0 <= fleiss_kappa(m) <= 1.0

    def test_permutation_invariance(self):
        rng = random.Random(5)
        m = random_matrix(rng, n_items=8, n_raters=5)
        base = fleiss_kappa(m)
        base_mean = mean_rating(m)
        for _ in range(20):
            rows = [list(r) for r in m.ratings]
            rng.shuffle(rows)
            for row in rows:
                rng.shuffle(row)
            shuffled = matrix(rows)
            assert fleiss_kappa(shuffled) == pytest.approx(base, abs=1e-9)
            assert mean_rating(shuffled) == pytest.approx(base_mean, abs=1e-12)

    def test_category_relabeling_invariance(self):
        rng = random.Random(6)
        m = random_matrix(rng, n_items=6, n_raters=4)
        base = fleiss_kappa(m)
        mapping = dict(zip(LABELS, ("SM", "FailsM", "FullyM", "MM", "HM")))
        relabeled = matrix([[mapping[c] for c in row] for row in m.ratings])
        assert fleiss_kappa(relabeled) == pytest.approx(base, abs=1e-9)


class TestDropNaItems:
    def test_drops_items_with_any_na(self):
        m = matrix([["FullyM", "NA"], ["HM", "MM"]])
        kept = drop_na_items(m)
        assert kept.items == ["item_2"]

    def test_all_items_have_na(self):
        with pytest.raises(AllNA):
            drop_na_items(matrix([["FullyM", "NA"], ["NA", "MM"]]))


class TestCsv:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "ratings.csv"
        path.write_text(
            "item,rater_1,rater_2,rater_3\n"
            "a1,FullyM,hm,MM\n"
            "a2,n/a,SM,failsm\n"
        )
        m = RatingMatrix.from_csv(path)
        assert m.raters == ["rater_1", "rater_2", "rater_3"]
        assert m.ratings[0] == ["FullyM", "HM", "MM"]
        assert m.ratings[1] == ["NA", "SM", "FailsM"]

    def test_ragged_rows_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("item,rater_1,rater_2\na1,FullyM\n")
        with pytest.raises(ValueError):
            RatingMatrix.from_csv(path)

    def test_unknown_label_rejected(self, tmp_path):
        path = tmp_path / "bad2.csv"
        path.write_text("item,rater_1,rater_2\na1,FullyM,Great\n")
        with pytest.raises(ValueError):
            RatingMatrix.from_csv(path)

    def test_canonical_label(self):
        assert canonical_label(" fullym ") == "FullyM"
        assert canonical_label("N/A") == "NA"
