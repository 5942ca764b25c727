#include "schubert/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

// Roots are sign-coherent, so the first nonzero coordinate decides.
bool column_negative(const std::vector<int>& m, int rank, int col) {
  for (int row = 0; row < rank; ++row) {
    const int v = m[static_cast<std::size_t>(row * rank + col)];
    if (v != 0) return v < 0;
  }
  return false;
}

void check_letter(const DynkinDiagram& d, int letter) {
  if (letter < 1 || letter > d.rank())
    throw InvalidArgument("letter " + std::to_string(letter) + " out of range 1.." +
                          std::to_string(d.rank()) + " for " + d.name());
}

}  // namespace

WeylElement WeylElement::identity(DiagramPtr diagram) {
  const int n = diagram->rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return WeylElement(std::move(diagram), std::move(m), 0);
}

WeylElement WeylElement::from_word(DiagramPtr diagram, const Word& word) {
  WeylElement w = identity(std::move(diagram));
  for (int letter : word) w = w.times_simple(letter);
  return w;
}

int WeylElement::count_inversions(const DynkinDiagram& d, const std::vector<int>& m) {
  const int n = d.rank();
  int count = 0;
  for (const auto& r : d.positive_roots()) {
    for (int row = 0; row < n; ++row) {
      int v = 0;
      for (int col = 0; col < n; ++col)
        v += m[static_cast<std::size_t>(row * n + col)] * r.coords[static_cast<std::size_t>(col)];
      if (v != 0) {
        if (v < 0) ++count;
        break;
      }
    }
  }
  return count;
}

RootVector WeylElement::apply(const RootVector& r) const {
  const int n = rank();
  if (static_cast<int>(r.coords.size()) != n) throw InvalidArgument("root vector length does not match rank");
  RootVector out{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int row = 0; row < n; ++row) {
    int v = 0;
    for (int col = 0; col < n; ++col)
      v += matrix_[static_cast<std::size_t>(row * n + col)] * r.coords[static_cast<std::size_t>(col)];
    out.coords[static_cast<std::size_t>(row)] = v;
  }
  return out;
}

RootVector WeylElement::image_of_simple(int j) const {
  check_letter(*diagram_, j);
  const int n = rank();
  RootVector out{std::vector<int>(static_cast<std::size_t>(n))};
  for (int row = 0; row < n; ++row)
    out.coords[static_cast<std::size_t>(row)] = matrix_[static_cast<std::size_t>(row * n + (j - 1))];
  return out;
}

bool WeylElement::is_right_descent(int i) const {
  check_letter(*diagram_, i);
  return column_negative(matrix_, rank(), i - 1);
}

WeylElement WeylElement::times_simple(int i) const {
  check_letter(*diagram_, i);
  const int n = rank();
  const int col_i = i - 1;
  const bool descent = column_negative(matrix_, n, col_i);
  std::vector<int> m = matrix_;
  // (w s_i) alpha_b = w alpha_b - cartan(i, b) w alpha_i
  for (int b = 1; b <= n; ++b) {
    const int c = diagram_->cartan(i, b);
    if (c == 0) continue;
    for (int row = 0; row < n; ++row)
      m[static_cast<std::size_t>(row * n + (b - 1))] -= c * matrix_[static_cast<std::size_t>(row * n + col_i)];
  }
  return WeylElement(diagram_, std::move(m), length_ + (descent ? -1 : 1));
}

WeylElement WeylElement::simple_times(int i) const {
  check_letter(*diagram_, i);
  const int n = rank();
  std::vector<int> m = matrix_;
  // Only row i changes: new_row_i = row_i - sum_a cartan(i, a) row_a.
  for (int col = 0; col < n; ++col) {
    int v = matrix_[static_cast<std::size_t>((i - 1) * n + col)];
    for (int a = 1; a <= n; ++a) {
      const int c = diagram_->cartan(i, a);
      if (c != 0) v -= c * matrix_[static_cast<std::size_t>((a - 1) * n + col)];
    }
    m[static_cast<std::size_t>((i - 1) * n + col)] = v;
  }
  const int len = count_inversions(*diagram_, m);
  return WeylElement(diagram_, std::move(m), len);
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (!same_group(other)) throw DiagramMismatch("cannot multiply elements of different Weyl groups");
  const int n = rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int a = matrix_[static_cast<std::size_t>(r * n + k)];
      if (a == 0) continue;
      for (int c = 0; c < n; ++c)
        m[static_cast<std::size_t>(r * n + c)] += a * other.matrix_[static_cast<std::size_t>(k * n + c)];
    }
  const int len = count_inversions(*diagram_, m);
  return WeylElement(diagram_, std::move(m), len);
}

WeylElement WeylElement::inverse() const {
  Word word = canonical_reduced_word();
  std::reverse(word.begin(), word.end());
  return from_word(diagram_, word);
}

Word WeylElement::canonical_reduced_word() const {
  Word collected;
  collected.reserve(static_cast<std::size_t>(length_));
  WeylElement cur = *this;
  while (!cur.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= rank(); ++i) {
      if (column_negative(cur.matrix_, rank(), i - 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) throw ConsistencyError("element of positive length without a right descent");
    collected.push_back(descent);
    cur = cur.times_simple(descent);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(rank());
  for (int v : matrix_) {
    h ^= static_cast<std::size_t>(v + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

bool WeylElement::same_group(const WeylElement& other) const {
  return diagram_ == other.diagram_ || *diagram_ == *other.diagram_;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.length_ == b.length_ && a.matrix_ == b.matrix_ && a.same_group(b);
}

bool canonical_less(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.canonical_reduced_word() < b.canonical_reduced_word();
}

std::vector<WeylElement> sorted(const ElementSet& set) {
  std::vector<std::pair<Word, const WeylElement*>> keyed;
  keyed.reserve(set.size());
  for (const auto& w : set) keyed.emplace_back(w.canonical_reduced_word(), &w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(keyed.size());
  for (const auto& [_, w] : keyed) out.push_back(*w);
  return out;
}

bool is_reduced_word(const WeylElement& w, const Word& word) {
  if (static_cast<int>(word.size()) != w.length()) return false;
  return WeylElement::from_word(w.diagram_ptr(), word) == w;
}

ElementSet lower_interval_set(const WeylElement& w, const Word& reduced_word_of_w) {
  if (!is_reduced_word(w, reduced_word_of_w)) throw NotReduced("seed word is not a reduced word of w");
  ElementSet below{WeylElement::identity(w.diagram_ptr())};
  for (int letter : reduced_word_of_w) {
    std::vector<WeylElement> added;
    for (const auto& u : below)
      if (!u.is_right_descent(letter)) added.push_back(u.times_simple(letter));
    for (auto& u : added) below.insert(std::move(u));
  }
  return below;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w, const Word& reduced_word_of_w) {
  if (!v.same_group(w)) throw DiagramMismatch("bruhat_leq: elements of different Weyl groups");
  if (v.length() > w.length()) return false;
  return lower_interval_set(w, reduced_word_of_w).contains(v);
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (!v.same_group(w)) throw DiagramMismatch("bruhat_leq: elements of different Weyl groups");
  if (v.length() > w.length()) return false;
  return bruhat_leq(v, w, w.canonical_reduced_word());
}

std::vector<WeylElement> lower_interval(const WeylElement& w) {
  return sorted(lower_interval_set(w, w.canonical_reduced_word()));
}

std::vector<WeylElement> length_sphere(const DiagramPtr& d, int k) {
  if (k < 0) throw InvalidArgument("length must be nonnegative");
  ElementSet level{WeylElement::identity(d)};
  for (int step = 0; step < k && !level.empty(); ++step) {
    ElementSet next;
    for (const auto& u : level)
      for (int i = 1; i <= d->rank(); ++i)
        if (!u.is_right_descent(i)) next.insert(u.times_simple(i));
    level = std::move(next);
  }
  return sorted(level);
}

std::vector<WeylElement> all_elements(const DiagramPtr& d) {
  std::vector<WeylElement> out;
  ElementSet level{WeylElement::identity(d)};
  while (!level.empty()) {
    auto part = sorted(level);
    out.insert(out.end(), part.begin(), part.end());
    ElementSet next;
    for (const auto& u : level)
      for (int i = 1; i <= d->rank(); ++i)
        if (!u.is_right_descent(i)) next.insert(u.times_simple(i));
    level = std::move(next);
  }
  return out;
}

std::vector<Word> all_reduced_words(const WeylElement& w) {
  ElementMap<std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const WeylElement&)> go =
      [&](const WeylElement& x) -> const std::vector<Word>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::vector<Word> words;
    if (x.is_identity()) {
      words.push_back({});
    } else {
      for (int i = 1; i <= x.rank(); ++i) {
        if (!x.is_right_descent(i)) continue;
        for (Word prefix : go(x.times_simple(i))) {
          prefix.push_back(i);
          words.push_back(std::move(prefix));
        }
      }
    }
    return memo.emplace(x, std::move(words)).first->second;
  };
  std::vector<Word> out = go(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> to_permutation(const WeylElement& w) {
  if (w.diagram().family() != Family::A)
    throw InvalidArgument("one-line notation is only defined in type A");
  std::vector<int> perm(static_cast<std::size_t>(w.rank() + 1));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i) + 1;
  // pi o s_a swaps the entries in positions a and a+1.
  for (int a : w.canonical_reduced_word())
    std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(a)]);
  return perm;
}

WeylElement from_permutation(const DiagramPtr& d, const std::vector<int>& one_line) {
  if (d->family() != Family::A) throw InvalidArgument("one-line notation is only defined in type A");
  const auto n = static_cast<std::size_t>(d->rank() + 1);
  if (one_line.size() != n) throw InvalidArgument("permutation must have rank+1 entries");
  std::vector<bool> seen(n + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > static_cast<int>(n) || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("not a permutation of 1..rank+1");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> p = one_line;
  Word collected;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        collected.push_back(static_cast<int>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  std::reverse(collected.begin(), collected.end());
  return WeylElement::from_word(d, collected);
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty() || text == "e" || text == "id") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int letter = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw InvalidArgument("bad letter '" + std::string(token) + "' in word '" + std::string(text) + "'");
    out.push_back(letter);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

WeylElement parse_element(const DiagramPtr& d, std::string_view text) {
  const bool digits_only =
      !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (d->family() == Family::A && digits_only && static_cast<int>(text.size()) == d->rank() + 1) {
    std::vector<int> perm;
    for (char c : text) perm.push_back(c - '0');
    std::vector<int> s = perm;
    std::sort(s.begin(), s.end());
    bool is_perm = true;
    for (std::size_t i = 0; i < s.size(); ++i) is_perm = is_perm && s[i] == static_cast<int>(i) + 1;
    if (is_perm) return from_permutation(d, perm);
  }
  const Word word = parse_word(text);
  for (int letter : word) check_letter(*d, letter);
  return WeylElement::from_word(d, word);
}

std::string to_string(const Word& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  return os.str();
}

}  // namespace schubert
