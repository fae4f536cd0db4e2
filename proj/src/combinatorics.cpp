#include "cellforms/combinatorics.hpp"

#include "cellforms/errors.hpp"

#include <algorithm>
#include <charconv>

namespace cellforms {

Label Label::var(int index) {
  if (index < 1) throw DomainError("variable index must be positive, got " + std::to_string(index));
  return Label(LabelKind::Var, index);
}

Label Label::from_code(int code, int n) {
  if (code < 0 || code >= n) throw DomainError("label code out of range");
  if (code == 0) return zero();
  if (code == 1) return one();
  if (code == n - 1) return infinity();
  return var(code - 1);
}

int Label::code(int n) const {
  switch (kind_) {
    case LabelKind::Zero: return 0;
    case LabelKind::One: return 1;
    case LabelKind::Var: return 1 + index_;
    case LabelKind::Infinity: return n - 1;
  }
  return -1;
}

int Label::cell_position(int n) const {
  switch (kind_) {
    case LabelKind::Zero: return 0;
    case LabelKind::Var: return index_;
    case LabelKind::One: return n - 2;
    case LabelKind::Infinity: return n - 1;
  }
  return -1;
}

bool Label::valid_for(int n) const { return !is_var() || (index_ >= 1 && index_ <= n - 3); }

std::string Label::str() const {
  switch (kind_) {
    case LabelKind::Zero: return "0";
    case LabelKind::One: return "1";
    case LabelKind::Infinity: return "inf";
    case LabelKind::Var: return "t" + std::to_string(index_);
  }
  return "?";
}

Label parse_label(std::string_view text) {
  if (text == "0") return Label::zero();
  if (text == "1") return Label::one();
  if (text == "inf" || text == "\xE2\x88\x9E") return Label::infinity();
  if (text.size() >= 2 && text.front() == 't') {
    int index = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec == std::errc() && ptr == last && index >= 1 && text[1] != '0') return Label::var(index);
  }
  throw DomainError("malformed label: '" + std::string(text) + "'");
}

std::vector<Label> all_labels(int n) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) out.push_back(Label::from_code(c, n));
  return out;
}

std::vector<Label> finite_labels_cell_order(int n) {
  std::vector<Label> out{Label::zero()};
  for (int i = 1; i <= n - 3; ++i) out.push_back(Label::var(i));
  out.push_back(Label::one());
  return out;
}

std::string to_string(std::span<const Label> word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += word[i].str();
  }
  return out + ")";
}

bool Polygon::is_01() const {
  for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
    if (order_[i] == Label::zero()) return order_[i + 1] == Label::one();
  }
  return false;
}

namespace {

void check_permutation_of_labels(std::span<const Label> raw, int n) {
  if (n < 4) throw MalformedPolygonError("polygon needs at least 4 marked points, got " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Label& l : raw) {
    if (!l.valid_for(n)) {
      throw MalformedPolygonError("label " + l.str() + " out of range for n=" + std::to_string(n));
    }
    auto slot = seen[static_cast<std::size_t>(l.code(n))];
    if (slot) throw MalformedPolygonError("duplicate label " + l.str() + " in " + to_string(raw));
    slot = true;
  }
}

}  // namespace

Polygon canonicalize(std::span<const Label> raw_order) {
  const int n = static_cast<int>(raw_order.size());
  check_permutation_of_labels(raw_order, n);
  const auto inf = std::find(raw_order.begin(), raw_order.end(), Label::infinity());
  Word order;
  order.reserve(raw_order.size());
  order.insert(order.end(), inf + 1, raw_order.end());
  order.insert(order.end(), raw_order.begin(), inf + 1);
  return Polygon(std::move(order));
}

Polygon canonicalize(std::initializer_list<Label> raw_order) {
  return canonicalize(std::span<const Label>(raw_order.begin(), raw_order.size()));
}

std::vector<Polygon> enumerate_polygons(int n) {
  if (n < 4) throw DomainError("enumerate_polygons needs n >= 4, got " + std::to_string(n));
  auto finite = all_labels(n);
  finite.pop_back();
  std::vector<Polygon> out;
  do {
    Word w = finite;
    w.push_back(Label::infinity());
    out.push_back(canonicalize(w));
  } while (std::next_permutation(finite.begin(), finite.end()));
  return out;
}

namespace {

void shuffle_into(std::span<const Label> a, std::span<const Label> b, Word& prefix, std::vector<Word>& out) {
  if (a.empty() || b.empty()) {
    Word w = prefix;
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    out.push_back(std::move(w));
    return;
  }
  prefix.push_back(a.front());
  shuffle_into(a.subspan(1), b, prefix, out);
  prefix.back() = b.front();
  shuffle_into(a, b.subspan(1), prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<Word> shuffle(std::span<const Label> a, std::span<const Label> b) {
  std::set<Label> seen;
  for (const Label& l : a) {
    if (!seen.insert(l).second) throw DomainError("repeated label " + l.str() + " in shuffle factor");
  }
  for (const Label& l : b) {
    if (!seen.insert(l).second) throw DomainError("shuffle factors overlap or repeat at " + l.str());
  }
  std::vector<Word> out;
  Word prefix;
  shuffle_into(a, b, prefix, out);
  return out;
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_images(int n, std::vector<int> image_codes) {
  if (static_cast<int>(image_codes.size()) != n) throw DomainError("permutation has wrong size");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int c : image_codes) {
    if (c < 0 || c >= n || hit[static_cast<std::size_t>(c)]) throw DomainError("not a bijection of the marked points");
    hit[static_cast<std::size_t>(c)] = true;
  }
  return Permutation(std::move(image_codes));
}

Permutation Permutation::from_map(int n, const std::map<Label, Label>& mapping) {
  // unmapped points stay fixed
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  for (const auto& [from, to] : mapping) {
    if (!from.valid_for(n) || !to.valid_for(n)) throw DomainError("permutation label out of range");
    image[static_cast<std::size_t>(from.code(n))] = to.code(n);
  }
  return from_images(n, std::move(image));
}

Label Permutation::operator()(const Label& x) const {
  return Label::from_code(image_[static_cast<std::size_t>(x.code(n()))], n());
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n() != n()) throw DomainError("composing permutations of different size");
  std::vector<int> image(image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = image_[static_cast<std::size_t>(other.image_[i])];
  return Permutation(std::move(image));
}

Polygon act(const Permutation& sigma, const Polygon& p) {
  if (sigma.n() != p.n()) throw DomainError("permutation and polygon sizes differ");
  Word w;
  w.reserve(p.order().size());
  for (const Label& l : p.order()) w.push_back(sigma(l));
  return canonicalize(w);
}

Polygon reverse(const Polygon& p) {
  Word w(p.order().rbegin(), p.order().rend());
  return canonicalize(w);
}

PolygonSum::PolygonSum(const Polygon& p, Rational coeff) : n_(p.n()) {
  if (coeff != 0) terms_.emplace(p, std::move(coeff));
}

void PolygonSum::add(const Polygon& p, const Rational& coeff) {
  if (n_ == 0) n_ = p.n();
  if (p.n() != n_) throw DomainError("polygon sum mixes n=" + std::to_string(n_) + " and n=" + std::to_string(p.n()));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PolygonSum& PolygonSum::operator+=(const PolygonSum& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  if (n_ == 0) n_ = other.n_;
  return *this;
}

PolygonSum PolygonSum::operator*(const Rational& scalar) const {
  PolygonSum out;
  out.n_ = n_;
  if (scalar == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * scalar);
  return out;
}

PolygonSum act(const Permutation& sigma, const PolygonSum& s) {
  PolygonSum out;
  for (const auto& [p, c] : s.terms()) out.add(act(sigma, p), c);
  return out;
}

Chord::Chord(std::span<const Label> side, int n) : n_(n) {
  std::vector<Label> a(side.begin(), side.end());
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw DomainError("chord side repeats a label");
  for (const Label& l : a) {
    if (!l.valid_for(n)) throw DomainError("chord label out of range");
  }
  std::vector<Label> b;
  for (const Label& l : all_labels(n)) {
    if (!std::binary_search(a.begin(), a.end(), l)) b.push_back(l);
  }
  if (a.size() < 2 || b.size() < 2) throw DomainError("chord sides need at least two points each");
  const bool a_has_inf = a.back().is_infinity();
  if (a.size() < b.size() || (a.size() == b.size() && !a_has_inf)) {
    side_ = std::move(a);
  } else {
    side_ = std::move(b);
  }
}

std::vector<Label> Chord::complement() const {
  std::vector<Label> out;
  for (const Label& l : all_labels(n_)) {
    if (!std::binary_search(side_.begin(), side_.end(), l)) out.push_back(l);
  }
  return out;
}

std::vector<Label> Chord::finite_side() const {
  auto out = side_.back().is_infinity() ? complement() : side_;
  std::sort(out.begin(), out.end(),
            [n = n_](const Label& x, const Label& y) { return x.cell_position(n) < y.cell_position(n); });
  return out;
}

std::set<Chord> chords(const Polygon& p) {
  const int n = p.n();
  std::set<Chord> out;
  std::vector<Label> arc;
  for (int start = 0; start < n; ++start) {
    arc.clear();
    for (int len = 1; len <= n - 2; ++len) {
      arc.push_back(p[static_cast<std::size_t>((start + len - 1) % n)]);
      if (len >= 2) out.emplace(arc, n);
    }
  }
  return out;
}

std::set<Chord> common_chords(const Polygon& p, const Polygon& q) {
  if (p.n() != q.n()) throw DomainError("common_chords on polygons of different size");
  const auto a = chords(p);
  const auto b = chords(q);
  std::set<Chord> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace cellforms
