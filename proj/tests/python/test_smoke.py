"""Smoke tests for the compiled lsasumm module."""

import math

import pytest

import lsasumm


TEXT = (
    "The research vessel left the harbor before dawn. "
    "Its crew mapped the cold seafloor ridge for three weeks. "
    "Sonar arrays swept the dark water in long arcs. "
    "Early returns showed fresh lava fields on the ridge crest. "
    "The vessel returns with terabytes of sonar data."
)


def test_split_and_tokenize():
    assert lsasumm.split_sentences("A. B? C!") == ["A", "B", "C"]
    assert lsasumm.tokenize("a b  c,") == ["a", "b", "c"]


def test_experiment_code_round_trip():
    code = lsasumm.parse_experiment_code("RAWEFPOS4ADJ")
    assert code.morphology == lsasumm.Morphology.ROOT
    assert code.pos
    assert str(code) == "RAWEFPOS4ADJ"
    with pytest.raises(lsasumm.InvalidCodeError):
        lsasumm.parse_experiment_code("XXYY")


def test_budget():
    assert lsasumm.budget_for(10, ratio=0.3) == 3
    assert lsasumm.budget_for(5, sentences=9) == 5


def test_summarize_pipeline():
    summary = lsasumm.summarize(TEXT, experiment="WAWEF4ADJ", sentences=2)
    assert len(summary) == 2
    assert summary.sentence_indices == sorted(summary.sentence_indices)
    assert all(0 <= i < 5 for i in summary.sentence_indices)
    assert summary.rendered


def test_decompose_matches_numpy():
    np = pytest.importorskip("numpy")
    doc = lsasumm.build_document("d", TEXT)
    matrix = lsasumm.build_matrix(doc)
    u, e, vt = lsasumm.decompose(matrix)
    rebuilt = u @ np.diag(e) @ vt
    assert np.linalg.norm(matrix - rebuilt) <= 1e-8 * max(1.0, np.linalg.norm(matrix))
    assert all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    sigma = lsasumm.filter_sigma(e, 0.5)
    thresholds = lsasumm.topic_thresholds(sigma, doc.sentence_count)
    assert math.isclose(sum(thresholds), doc.sentence_count, abs_tol=1e-12)

    picked = lsasumm.ess_lsa_select(u, e, vt, doc, 2)
    assert len(picked) == 2


def test_selectors_agree_on_budget_zero():
    doc = lsasumm.build_document("d", TEXT)
    assert lsasumm.lead_select(doc, 0).sentence_indices == []


def test_rouge_exact_values():
    scores = lsasumm.rouge_n("a b c", ["a b d"])
    assert scores[0].recall == pytest.approx(2 / 3, abs=1e-15)
    assert scores[1].recall == 0.5
    with pytest.raises(lsasumm.NoReferencesError):
        lsasumm.rouge_n("a", [])


def test_arabic_morphology():
    assert lsasumm.extract_root("مكتبة") == "كتب"
    assert lsasumm.light_stem("الكتاب") == "كتاب"
    assert lsasumm.normalize_term("word", lsasumm.Morphology.STEM) == "word"


def test_bundled_stopwords():
    words = lsasumm.default_stopwords("en")
    assert "the" in words
    summary = lsasumm.summarize(TEXT, sentences=1, stopwords=words)
    assert len(summary) == 1
