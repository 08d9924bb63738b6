#include "bubblepat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace bubblepat {

Permutation::Permutation(Word values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n) throw OutOfRange(v, n);
    if (seen[static_cast<std::size_t>(v)]) throw DuplicateValue(v);
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (values_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::string Permutation::str() const { return word_str(values_); }

std::string Permutation::display() const {
  if (size() > 9) return str();
  std::string out;
  for (int v : values_) out.push_back(static_cast<char>('0' + v));
  return out;
}

namespace {

struct Token {
  int value;
  std::size_t position;
};

// Splits on whitespace and commas; rejects anything that is not a digit.
std::vector<Token> lex_integers(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw EmptyTokenStream(std::string("unexpected character '") + ch + "'", i);
    }
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
    if (ec != std::errc() || ptr != text.data() + i) {
      throw EmptyTokenStream("unreadable number", start);
    }
    tokens.push_back({value, start});
  }
  return tokens;
}

Permutation build_checked(const std::vector<Token>& tokens) {
  const int n = static_cast<int>(tokens.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  Word values;
  values.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.value < 1 || t.value > n) throw OutOfRange(t.value, n, t.position);
    if (seen[static_cast<std::size_t>(t.value)]) {
      throw DuplicateValue(t.value, t.position);
    }
    seen[static_cast<std::size_t>(t.value)] = 1;
    values.push_back(t.value);
  }
  return Permutation(std::move(values));
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<Token> tokens = lex_integers(text);
  if (tokens.empty()) throw EmptyTokenStream("no permutation values in input", 0);

  // A single multi-digit token is read digit by digit: "231" means 2 3 1,
  // not the number 231.
  if (tokens.size() == 1 && tokens[0].value > 9) {
    const std::size_t start = tokens[0].position;
    std::size_t len = 0;
    while (start + len < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[start + len]))) {
      ++len;
    }
    std::vector<Token> digits;
    for (std::size_t i = 0; i < len; ++i) {
      digits.push_back({text[start + i] - '0', start + i});
    }
    return build_checked(digits);
  }
  return build_checked(tokens);
}

PermutationSet parse_permutation_set(std::string_view text) {
  PermutationSet out;
  std::size_t begin = 0;
  bool saw_field = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string_view field = text.substr(begin, i - begin);
      std::size_t first = field.find_first_not_of(" \t\n\r");
      if (first == std::string_view::npos) {
        if (saw_field || i < text.size()) {
          throw EmptyTokenStream("empty permutation in set", begin);
        }
      } else {
        Permutation p = parse_permutation(field);
        out.insert(std::move(p));
        saw_field = true;
      }
      begin = i + 1;
    }
  }
  if (out.empty()) throw EmptyTokenStream("no permutations in input", 0);
  return out;
}

Permutation standardize(const Word& word) {
  const std::size_t n = word.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)]; });
  for (std::size_t r = 1; r < n; ++r) {
    if (word[static_cast<std::size_t>(order[r])] == word[static_cast<std::size_t>(order[r - 1])]) {
      throw DuplicateValue(word[static_cast<std::size_t>(order[r])]);
    }
  }
  Word out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

namespace {

bool contains_rec(const int* hay, int n, const int* pat, int k, int j, int start,
                  int* match) {
  if (j == k) return true;
  for (int i = start; i <= n - (k - j); ++i) {
    const int v = hay[i];
    bool ok = true;
    for (int t = 0; t < j; ++t) {
      if ((pat[t] < pat[j]) != (match[t] < v)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      match[j] = v;
      if (contains_rec(hay, n, pat, k, j + 1, i + 1, match)) return true;
    }
  }
  return false;
}

}  // namespace

bool contains_pattern(std::span<const int> haystack, std::span<const int> pattern) {
  const int k = static_cast<int>(pattern.size());
  const int n = static_cast<int>(haystack.size());
  if (k == 0) return true;
  if (k > n) return false;
  int local[24];
  std::vector<int> spill;
  int* match = local;
  if (k > 24) {
    spill.resize(static_cast<std::size_t>(k));
    match = spill.data();
  }
  return contains_rec(haystack.data(), n, pattern.data(), k, 0, 0, match);
}

bool contains(const Permutation& haystack, const Permutation& pattern) {
  return contains_pattern(haystack.values(), pattern.values());
}

LrDecomposition lr_decompose(const Permutation& p) {
  if (p.empty()) throw EmptyPermutation();
  LrDecomposition d;
  int best = 0;
  for (int i = 0; i < p.size(); ++i) {
    const int v = p[i];
    if (v > best) {
      d.maxima.push_back(v);
      d.positions.push_back(i + 1);
      d.gaps.emplace_back();
      best = v;
    } else {
      d.gaps.back().push_back(v);
    }
  }
  return d;
}

void standardized_deletion(std::span<const int> src, int index, std::vector<int>& out) {
  out.clear();
  const int removed = src[static_cast<std::size_t>(index)];
  for (int i = 0; i < static_cast<int>(src.size()); ++i) {
    if (i == index) continue;
    const int v = src[static_cast<std::size_t>(i)];
    out.push_back(v > removed ? v - 1 : v);
  }
}

PermutationSet one_point_deletions(const Permutation& p) {
  PermutationSet out;
  Word buf;
  for (int i = 0; i < p.size(); ++i) {
    standardized_deletion(p.values(), i, buf);
    out.insert(Permutation(buf));
  }
  return out;
}

PermutationSet minimal_elements(const PermutationSet& ps) {
  PermutationSet out;
  for (const Permutation& q : ps) {
    bool minimal = true;
    for (const Permutation& r : ps) {
      if (r.size() >= q.size()) continue;  // proper containment needs fewer entries
      if (contains(q, r)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(q);
  }
  return out;
}

bool is_increasing(std::span<const int> word) {
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i] < word[i - 1]) return false;
  }
  return true;
}

std::string word_str(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace bubblepat
