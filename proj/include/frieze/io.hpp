#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frieze/extend.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

/// Input text is not a well-formed document (bad JSON, wrong structure,
/// or a malformed number string).
struct ParseError : Error {
  size_t position;
  ParseError(size_t position_, const std::string& reason)
      : Error("parse error at byte " + std::to_string(position_) + ": " + reason),
        position(position_) {}
};

/// Document is well-formed but its content fails validation (shape,
/// positivity, an exchange relation, or a broken internal reference).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Requested output format is not one of the supported ones.
struct UnsupportedFormat : Error {
  explicit UnsupportedFormat(const std::string& what) : Error(what) {}
};

/// Reads the label table of an "fwc-v1" document without checking the
/// exchange relations (shape and number syntax are still enforced).
std::pair<int, std::vector<std::vector<Int>>> parse_frieze_table(const std::string& text);

/// Parses and fully validates an "fwc-v1" document.
Frieze parse_frieze(const std::string& text);

/// Canonical "fwc-v1" serialization: fixed key order, single spaces after
/// separators, no other whitespace.  parse(serialize(f)) == f and
/// serialize(parse(d)) == d for canonical d.
std::string serialize_frieze(const Frieze& f);

/// Parses and validates a "tri-v1" document.
Triangulation parse_triangulation(const std::string& text);

/// Canonical "tri-v1" serialization under the same whitespace policy.
std::string serialize_triangulation(const Triangulation& t);

/// Parses a "choices-v1" document: the scripted per-step data (edge and,
/// per prime, the vertex i_p and residue) consumed by embed().
EmbedPolicy parse_choices(const std::string& text);

/// One recorded extension step of an "embedding-v1" document.
struct EmbeddingStep {
  struct PrimeChoice {
    Int p;
    int ell = 0;
    int m = 0;
    int ip = -1;
    Int residue;

    bool operator==(const PrimeChoice&) const = default;
  };
  std::pair<int, int> edge{-1, -1};
  std::vector<PrimeChoice> primes;
  Int y0;
  std::vector<Int> y;

  bool operator==(const EmbeddingStep&) const = default;
};

/// Result document of an embedding run: the input frieze, the frieze with
/// all boundary edges 1 that contains it, that frieze's triangulation, the
/// vertex map, and the per-step traces.
struct EmbeddingDocument {
  Frieze input;
  Frieze cc;
  Triangulation tri;
  std::vector<int> vertex_map;
  std::vector<EmbeddingStep> steps;

  bool operator==(const EmbeddingDocument&) const = default;
};

/// Flattens an embed() result into its document form.
EmbeddingDocument embedding_document(const Frieze& input, const Embedding& emb);

/// Parses an "embedding-v1" document and re-validates it: both friezes, the
/// triangulation, and the restriction of cc along vertex_map must check out.
EmbeddingDocument parse_embedding(const std::string& text);

/// Canonical "embedding-v1" serialization.
std::string serialize_embedding(const EmbeddingDocument& doc);

/// Static diagram of a frieze: vertices on a circle, every edge and
/// diagonal drawn and labeled, label-1 diagonals stroked heavier.
/// `format` is "svg" or "dot"; anything else throws UnsupportedFormat.
std::string render(const Frieze& f, const std::string& format);

/// Renders the frieze attached to a triangulation.
std::string render(const Triangulation& t, const std::string& format);

}  // namespace frieze
