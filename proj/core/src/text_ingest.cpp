#include "cooc/text_ingest.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "cooc/error.hpp"

namespace cooc {
namespace {

struct Decoded {
  UChar32 cp;
  std::size_t next;
};

bool is_space(UChar32 c) {
  return u_isUWhiteSpace(c) || u_iscntrl(c) || u_charType(c) == U_FORMAT_CHAR;
}

bool is_sentence_terminal(UChar32 c) {
  return c == U'.' || c == U'!' || c == U'?' || c == 0x2026;
}

bool is_closing(UChar32 c) {
  if (c == U'"' || c == U'\'') return true;
  const auto type = u_charType(c);
  return type == U_END_PUNCTUATION || type == U_FINAL_PUNCTUATION ||
         type == U_INITIAL_PUNCTUATION;
}

bool is_joiner(UChar32 c) {
  return c == U'\'' || c == 0x2019 || c == U'-' || c == 0x2010 || c == 0x2011;
}

bool is_word_char(UChar32 c) { return u_isalnum(c) != 0; }

class Tokenizer {
 public:
  Tokenizer(std::string_view text, const NormalizationConfig& rules)
      : text_(text), rules_(rules) {}

  std::vector<Sentence> run() {
    std::size_t i = 0;
    const std::size_t n = text_.size();
    while (i < n) {
      const auto [c, next] = decode(i);
      if (is_space(c)) {
        flush_token();
        i = next;
      } else if (is_sentence_terminal(c)) {
        std::size_t j = next;
        while (j < text_.size()) {
          const auto d = decode(j);
          if (!is_sentence_terminal(d.cp) && !is_closing(d.cp)) break;
          j = d.next;
        }
        flush_token();
        if (j == n || is_space(decode(j).cp)) flush_sentence();
        i = j;
      } else if (u_ispunct(c)) {
        if (rules_.keep_inner_joiners && is_joiner(c) && !surface_.empty() &&
            is_word_char(last_) && next < n && is_word_char(decode(next).cp)) {
          append(c, i, next);
        } else {
          flush_token();
        }
        i = next;
      } else {
        append(c, i, next);
        i = next;
      }
    }
    flush_token();
    flush_sentence();
    return std::move(sentences_);
  }

 private:
  Decoded decode(std::size_t offset) const {
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(text_.data());
    const auto length = static_cast<std::int32_t>(text_.size());
    auto pos = static_cast<std::int32_t>(offset);
    UChar32 c = 0;
    U8_NEXT(bytes, pos, length, c);
    if (c < 0) throw IngestError("invalid UTF-8 sequence", offset);
    return {c, static_cast<std::size_t>(pos)};
  }

  void append(UChar32 c, std::size_t begin, std::size_t end) {
    surface_.append(text_.substr(begin, end - begin));
    last_ = c;
  }

  void flush_token() {
    if (surface_.empty()) return;
    Token token;
    token.normalized = fold(surface_);
    token.surface = std::move(surface_);
    token.sentence_index = sentences_.size();
    token.position = current_.size();
    current_.push_back(std::move(token));
    surface_.clear();
    last_ = 0;
  }

  void flush_sentence() {
    if (current_.empty()) return;
    sentences_.push_back(std::move(current_));
    current_.clear();
  }

  std::string fold(std::string_view word) const {
    if (!rules_.case_fold) return std::string(word);
    std::string out;
    out.reserve(word.size());
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(word.data());
    const auto length = static_cast<std::int32_t>(word.size());
    std::int32_t pos = 0;
    while (pos < length) {
      UChar32 c = 0;
      U8_NEXT(bytes, pos, length, c);
      const UChar32 folded = u_foldCase(c, U_FOLD_CASE_DEFAULT);
      std::uint8_t buf[U8_MAX_LENGTH];
      std::int32_t written = 0;
      U8_APPEND_UNSAFE(buf, written, folded);
      out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(written));
    }
    return out;
  }

  std::string_view text_;
  const NormalizationConfig& rules_;
  std::vector<Sentence> sentences_;
  Sentence current_;
  std::string surface_;
  UChar32 last_ = 0;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return std::move(buffer).str();
}

}  // namespace

void Corpus::append(const Corpus& other) {
  sentences.reserve(sentences.size() + other.sentences.size());
  for (const auto& sentence : other.sentences) {
    auto& copy = sentences.emplace_back(sentence);
    for (auto& token : copy) token.sentence_index = sentences.size() - 1;
  }
  sources.insert(sources.end(), other.sources.begin(), other.sources.end());
}

std::size_t Corpus::token_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : sentences) total += s.size();
  return total;
}

std::vector<Sentence> tokenize(std::string_view text, const NormalizationConfig& rules) {
  return Tokenizer(text, rules).run();
}

std::string normalize_word(std::string_view word, const NormalizationConfig& rules) {
  auto sentences = tokenize(word, rules);
  if (sentences.size() != 1 || sentences.front().size() != 1) return {};
  return std::move(sentences.front().front().normalized);
}

Corpus make_corpus(std::string_view text, std::string source, const NormalizationConfig& rules) {
  Corpus corpus;
  corpus.sentences = tokenize(text, rules);
  corpus.sources.push_back(std::move(source));
  return corpus;
}

Corpus load_document(const std::filesystem::path& path, const NormalizationConfig& rules) {
  const std::string text = read_file(path);
  try {
    return make_corpus(text, path.string(), rules);
  } catch (const IngestError& e) {
    throw IngestError(path.string() + ": invalid UTF-8 sequence", e.byte_offset());
  }
}

Corpus load_corpus(std::span<const std::filesystem::path> paths, const NormalizationConfig& rules) {
  Corpus corpus;
  for (const auto& path : paths) corpus.append(load_document(path, rules));
  return corpus;
}

StopwordList::StopwordList(std::span<const std::string> words) {
  for (const auto& w : words) insert(w);
}

bool StopwordList::insert(std::string_view word) {
  std::string normalized = normalize_word(word);
  if (normalized.empty()) return false;
  return entries_.insert(std::move(normalized)).second;
}

bool StopwordList::contains(std::string_view normalized) const {
  return entries_.find(normalized) != entries_.end();
}

std::vector<std::string> StopwordList::sorted_entries() const {
  std::vector<std::string> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end());
  return out;
}

StopwordLoad parse_stopwords(std::istream& in) {
  StopwordLoad load;
  std::string line;
  while (std::getline(in, line)) {
    ++load.lines_read;
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || line[first] == '#') continue;
    if (normalize_word(line).empty()) {
      ++load.skipped;
      continue;
    }
    load.list.insert(line);
  }
  return load;
}

StopwordLoad load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stopword file " + path.string());
  return parse_stopwords(in);
}

Corpus filter_stopwords(const Corpus& corpus, const StopwordList& stops) {
  Corpus out;
  out.sources = corpus.sources;
  out.sentences.reserve(corpus.sentences.size());
  for (const auto& sentence : corpus.sentences) {
    Sentence kept;
    kept.reserve(sentence.size());
    for (const auto& token : sentence) {
      if (stops.contains(token.normalized)) continue;
      auto& t = kept.emplace_back(token);
      t.sentence_index = out.sentences.size();
      t.position = kept.size() - 1;
    }
    if (!kept.empty()) out.sentences.push_back(std::move(kept));
  }
  return out;
}

CorpusStats corpus_stats(const Corpus& corpus, const StopwordList& stops) {
  std::unordered_set<std::string_view> unique;
  CorpusStats stats;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& token : sentence) {
      ++stats.word_count;
      if (unique.insert(token.normalized).second && stops.contains(token.normalized)) {
        ++stats.stopwords_present;
      }
    }
  }
  stats.unique_words = unique.size();
  return stats;
}

}  // namespace cooc
