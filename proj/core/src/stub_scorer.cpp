#include "lexsimp/stub_scorer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

UnigramStubScorer UnigramStubScorer::load(std::istream& in,
                                          const std::string& source_name) {
  UnigramStubScorer scorer;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(source_name, line_no, "expected word\\tcount");
    std::string word = normalize(line.substr(0, tab));
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError(source_name, line_no, "bad count field");
    }
    if (word.empty())
      throw ParseError(source_name, line_no, "empty word field");
    auto [it, inserted] = scorer.counts_.emplace(word, count);
    if (!inserted) it->second += count;
    scorer.total_ += count;
  }
  if (scorer.counts_.empty())
    throw LoadError(source_name + ": empty frequency lexicon");

  scorer.by_frequency_.reserve(scorer.counts_.size());
  for (const auto& [word, count] : scorer.counts_)
    scorer.by_frequency_.push_back(word);
  std::sort(scorer.by_frequency_.begin(), scorer.by_frequency_.end(),
            [&](const std::string& a, const std::string& b) {
              auto ca = scorer.counts_.at(a), cb = scorer.counts_.at(b);
              if (ca != cb) return ca > cb;
              return a < b;
            });
  return scorer;
}

UnigramStubScorer UnigramStubScorer::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open frequency lexicon: " + path);
  return load(in, path);
}

double UnigramStubScorer::stub_score(std::string_view text) const {
  const double denom =
      static_cast<double>(total_) + static_cast<double>(counts_.size());
  double sum = 0.0;
  std::size_t i = 0;
  bool any = false;
  while (i <= text.size()) {
    std::size_t j = text.find(' ', i);
    if (j == std::string_view::npos) j = text.size();
    if (j > i) {
      std::string token = normalize(text.substr(i, j - i));
      std::uint64_t count = 0;
      auto it = counts_.find(token);
      if (it != counts_.end()) count = it->second;
      sum += std::log((static_cast<double>(count) + 1.0) / denom);
      any = true;
    }
    i = j + 1;
  }
  // empty text scores as one unknown token
  return any ? sum : std::log(1.0 / denom);
}

std::vector<ScoredText> UnigramStubScorer::generate(const MaskedContext&,
                                                    int top_n) const {
  std::vector<ScoredText> out;
  if (top_n <= 0) return out;
  const std::size_t n =
      std::min<std::size_t>(static_cast<std::size_t>(top_n), by_frequency_.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({by_frequency_[i], stub_score(by_frequency_[i])});
  return out;
}

std::vector<ScoredText> UnigramStubScorer::score(
    const MaskedContext&, const std::vector<std::string>& texts) const {
  std::vector<ScoredText> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back({text, stub_score(text)});
  return out;
}

}  // namespace lexsimp
