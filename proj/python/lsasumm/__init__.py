"""Extractive text summarization with enhanced latent semantic analysis.

The heavy lifting lives in the compiled ``_lsasumm`` module: sentence
splitting and morphology, term-by-sentence weighting with adjacent-sentence
context, SVD topic extraction, the per-topic sentence selector plus
baselines, and ROUGE-N scoring.
"""

from pathlib import Path

from ._lsasumm import (
    Adjacency,
    CorpusError,
    DegenerateSpectrumError,
    Document,
    EmptyCorpusError,
    EmptyDocumentError,
    EmptyVocabularyError,
    ExperimentCode,
    FilteredSigma,
    GlobalScheme,
    InvalidCodeError,
    LocalScheme,
    MissingTagsError,
    Morphology,
    NoReferencesError,
    NumericalFailureError,
    RougeScore,
    Sentence,
    Summary,
    budget_for,
    build_document,
    build_matrix,
    decompose,
    ess_lsa_select,
    experiment_code_string,
    extract_root,
    filter_sigma,
    gong_liu_select,
    lead_select,
    light_stem,
    load_stopwords,
    normalize_term,
    parse_experiment_code,
    rouge_n,
    split_sentences,
    steinberger_select,
    summarize,
    tokenize,
    topic_thresholds,
)

__version__ = "0.1.0"

_DATA_DIR = Path(__file__).resolve().parent / "data"


def stopwords_path(language: str = "ar") -> Path:
    """Path to a bundled stop-word list ("ar" or "en")."""
    path = _DATA_DIR / f"stopwords_{language}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled stop-word list for {language!r}")
    return path


def default_stopwords(language: str = "ar") -> set:
    """Bundled stop-word list as a set, ready for build_document/summarize."""
    return set(load_stopwords(str(stopwords_path(language))))


__all__ = [
    "Adjacency",
    "CorpusError",
    "DegenerateSpectrumError",
    "Document",
    "EmptyCorpusError",
    "EmptyDocumentError",
    "EmptyVocabularyError",
    "ExperimentCode",
    "FilteredSigma",
    "GlobalScheme",
    "InvalidCodeError",
    "LocalScheme",
    "MissingTagsError",
    "Morphology",
    "NoReferencesError",
    "NumericalFailureError",
    "RougeScore",
    "Sentence",
    "Summary",
    "budget_for",
    "build_document",
    "build_matrix",
    "decompose",
    "default_stopwords",
    "ess_lsa_select",
    "experiment_code_string",
    "extract_root",
    "filter_sigma",
    "gong_liu_select",
    "lead_select",
    "light_stem",
    "load_stopwords",
    "normalize_term",
    "parse_experiment_code",
    "rouge_n",
    "split_sentences",
    "steinberger_select",
    "stopwords_path",
    "summarize",
    "tokenize",
    "topic_thresholds",
]
