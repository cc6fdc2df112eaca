#pragma once

#include <stdexcept>
#include <string>

namespace lsasumm {

// Base class for all lsasumm error conditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Document text produced no sentences after splitting.
class EmptyDocumentError : public Error {
 public:
  using Error::Error;
};

// Every term was filtered away; the term-sentence matrix would have no rows.
class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

// The SVD routine failed to converge or produced non-finite values.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

// All singular values were filtered to zero; no topic structure remains.
class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

// An experiment code string did not match the code grammar.
class InvalidCodeError : public Error {
 public:
  using Error::Error;
};

// A corpus manifest referenced no documents.
class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// POS filtering was requested but the input carries no token/TAG annotations.
class MissingTagsError : public Error {
 public:
  using Error::Error;
};

// ROUGE evaluation was invoked without any usable reference summary.
class NoReferencesError : public Error {
 public:
  using Error::Error;
};

// Manifest or corpus files are missing or unreadable.
class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsasumm
