#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cooc {

struct Token {
  std::string surface;
  std::string normalized;  // case-folded, no leading/trailing punctuation
  std::size_t sentence_index = 0;
  std::size_t position = 0;  // position within the sentence
};

using Sentence = std::vector<Token>;

/// Ordered sentences plus the identifiers of the documents they came from.
/// Sentences are never empty and each token's sentence_index matches the
/// sentence's position in `sentences`.
struct Corpus {
  std::vector<Sentence> sentences;
  std::vector<std::string> sources;

  /// Appends another corpus, re-indexing its sentences.
  void append(const Corpus& other);
  std::size_t token_count() const noexcept;
  bool empty() const noexcept { return sentences.empty(); }
};

struct NormalizationConfig {
  /// Apply Unicode simple case folding to the normalized form.
  bool case_fold = true;
  /// Keep apostrophes and hyphens that sit between two letters or digits
  /// ("don't", "e-mail") instead of splitting on them.
  bool keep_inner_joiners = true;
};

/// Splits UTF-8 text into sentences of tokens.
///
/// A sentence ends at a run of `.`, `!`, `?` or `…` (optionally followed by
/// closing quotes or brackets) that is followed by whitespace or the end of
/// the text. Tokens are delimited by whitespace and punctuation. Tokens that
/// normalize to nothing and sentences left empty are dropped.
///
/// Throws IngestError naming the byte offset of invalid UTF-8.
std::vector<Sentence> tokenize(std::string_view text, const NormalizationConfig& rules = {});

/// Normalizes a single word with the same rules the tokenizer uses:
/// case fold, strip leading and trailing punctuation. Returns an empty string
/// when nothing is left, or when the word would split into several tokens.
std::string normalize_word(std::string_view word, const NormalizationConfig& rules = {});

/// Tokenizes one document and tags it with `source`.
Corpus make_corpus(std::string_view text, std::string source, const NormalizationConfig& rules = {});

/// Reads and tokenizes a UTF-8 file. Throws IoError if unreadable.
Corpus load_document(const std::filesystem::path& path, const NormalizationConfig& rules = {});

/// Reads the files in order and concatenates them into one corpus.
Corpus load_corpus(std::span<const std::filesystem::path> paths, const NormalizationConfig& rules = {});

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::span<const std::string> words);

  /// Normalizes and inserts. Returns false if the word normalized to nothing
  /// or was already present.
  bool insert(std::string_view word);
  bool contains(std::string_view normalized) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Entries in lexicographic order.
  std::vector<std::string> sorted_entries() const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string, Hash, std::equal_to<>> entries_;
};

struct StopwordLoad {
  StopwordList list;
  std::size_t lines_read = 0;
  std::size_t skipped = 0;  // non-comment lines that normalized to nothing
};

/// One form per line; blank lines and `#` comment lines are ignored.
StopwordLoad parse_stopwords(std::istream& in);
StopwordLoad load_stopwords(const std::filesystem::path& path);

/// Removes stopword tokens before any windowing happens, so formerly
/// separated words become adjacent. Positions are re-indexed and sentences
/// that become empty are dropped.
Corpus filter_stopwords(const Corpus& corpus, const StopwordList& stops);

struct CorpusStats {
  std::size_t word_count = 0;
  std::size_t unique_words = 0;
  std::size_t stopwords_present = 0;  // distinct stopword types seen
};

CorpusStats corpus_stats(const Corpus& corpus, const StopwordList& stops);

}  // namespace cooc
