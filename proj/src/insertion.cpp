#include "cellforms/insertion.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace cellforms {

namespace {

std::string render(const std::vector<InsertionEntry>& entries);

std::string render(const InsertionEntry& e) {
  if (const auto* l = std::get_if<Label>(&e.value)) return l->str();
  const auto& block = std::get<ShuffleBlock>(e.value);
  std::string out = "(" + render(block.a);
  if (!block.b.empty()) out += " \xD1\x88 " + render(block.b);
  return out + ")";
}

std::string render(const std::vector<InsertionEntry>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += render(entries[i]);
  }
  return out;
}

std::vector<Word> block_words(const ShuffleBlock& block) {
  std::vector<Word> out;
  const auto as = expand_words(block.a);
  const auto bs = expand_words(block.b);
  for (const auto& wa : as) {
    for (const auto& wb : bs) {
      for (auto& w : shuffle(wa, wb)) out.push_back(std::move(w));
    }
  }
  return out;
}

// Calls visit(factor) for both factors of every block, outermost first.
template <typename Visit>
void for_each_factor(const std::vector<InsertionEntry>& entries, Visit&& visit) {
  for (const auto& e : entries) {
    if (const auto* block = std::get_if<ShuffleBlock>(&e.value)) {
      visit(block->a);
      visit(block->b);
      for_each_factor(block->a, visit);
      for_each_factor(block->b, visit);
    }
  }
}

template <typename Map>
void map_vars(std::vector<InsertionEntry>& entries, Map&& map) {
  for (auto& e : entries) {
    if (auto* l = std::get_if<Label>(&e.value)) {
      if (l->is_var()) *l = Label::var(map(l->index()));
    } else {
      auto& block = std::get<ShuffleBlock>(e.value);
      map_vars(block.a, map);
      map_vars(block.b, map);
    }
  }
}

void collect_vars(const std::vector<InsertionEntry>& entries, std::vector<int>& out) {
  for (const auto& e : entries) {
    if (const auto* l = std::get_if<Label>(&e.value)) {
      if (l->is_var()) out.push_back(l->index());
    } else {
      const auto& block = std::get<ShuffleBlock>(e.value);
      collect_vars(block.a, out);
      collect_vars(block.b, out);
    }
  }
}

// Relabels variables to t1, t2, ... in order of first appearance.
void renumber(InsertionSpec& spec) {
  std::vector<int> order;
  collect_vars(spec.host, order);
  std::map<int, int> to;
  for (int v : order) to.emplace(v, static_cast<int>(to.size()) + 1);
  map_vars(spec.host, [&](int i) { return to.at(i); });
}

// Replaces the leaf-th variable (depth-first) by `replacement`.
bool replace_var_leaf(std::vector<InsertionEntry>& entries, int& leaf, const InsertionEntry& replacement) {
  for (auto& e : entries) {
    if (auto* l = std::get_if<Label>(&e.value)) {
      if (l->is_var() && leaf-- == 0) {
        e = replacement;
        return true;
      }
    } else {
      auto& block = std::get<ShuffleBlock>(e.value);
      if (replace_var_leaf(block.a, leaf, replacement) || replace_var_leaf(block.b, leaf, replacement)) return true;
    }
  }
  return false;
}

InsertionEntry fresh_block(int p, int q, int& next_index) {
  ShuffleBlock block;
  for (int i = 0; i < p; ++i) block.a.push_back({Label::var(next_index++)});
  for (int i = 0; i < q; ++i) block.b.push_back({Label::var(next_index++)});
  return {std::move(block)};
}

constexpr int kFreshBase = 1000;

std::set<Chord> delta_chords(int n) { return delta(n).chords(); }

bool factor_is_chord_free(const std::vector<InsertionEntry>& factor, int n, const std::set<Chord>& forbidden) {
  for (const auto& w : expand_words(factor)) {
    for (std::size_t start = 0; start < w.size(); ++start) {
      for (std::size_t len = 2; start + len <= w.size() && len <= static_cast<std::size_t>(n - 2); ++len) {
        const Chord c(std::span<const Label>(w.data() + start, len), n);
        if (forbidden.count(c)) return false;
      }
    }
  }
  return true;
}

// Expansion without the convergence test. nullopt when a factor contains a
// standard-cell chord or a term is not a 01-polygon.
std::optional<PolygonSum> expand_checked(const InsertionSpec& spec, const std::set<Chord>& forbidden) {
  bool chord_free = true;
  for_each_factor(spec.host, [&](const std::vector<InsertionEntry>& factor) {
    if (chord_free && !factor_is_chord_free(factor, spec.n, forbidden)) chord_free = false;
  });
  if (!chord_free) return std::nullopt;
  PolygonSum sum;
  for (const auto& w : expand_words(spec.host)) {
    if (static_cast<int>(w.size()) != spec.n) throw DomainError("insertion expands to words of the wrong length");
    const Polygon p = canonicalize(w);
    if (!p.is_01()) return std::nullopt;
    sum.add(p, 1);
  }
  return sum;
}

void validate_blocks(const std::vector<InsertionEntry>& entries) {
  for (const auto& e : entries) {
    if (const auto* block = std::get_if<ShuffleBlock>(&e.value)) {
      if (block->a.empty()) throw DomainError("shuffle block needs a nonempty first factor");
      validate_blocks(block->a);
      validate_blocks(block->b);
    }
  }
}

std::vector<InsertionSpec> depth1_shapes(int n) {
  std::vector<InsertionSpec> out;
  for (int host_n = 5; host_n < n; ++host_n) {
    const int k = n - host_n + 1;
    for (const Polygon& host : convergent_01_polygons(host_n)) {
      for (std::size_t slot = 0; slot < host.order().size(); ++slot) {
        if (!host[slot].is_var()) continue;
        for (int q = 1; 2 * q <= k; ++q) {
          InsertionSpec spec{n, {}};
          int next = kFreshBase;
          for (std::size_t i = 0; i < host.order().size(); ++i) {
            if (i == slot) {
              spec.host.push_back(fresh_block(k - q, q, next));
            } else {
              spec.host.push_back({host[i]});
            }
          }
          renumber(spec);
          out.push_back(std::move(spec));
        }
      }
    }
  }
  return out;
}

std::vector<InsertionSpec> depth2_shapes(int n) {
  std::vector<InsertionSpec> out;
  for (int k = 2; n - k + 1 >= 6; ++k) {
    for (const auto& base : depth1_shapes(n - k + 1)) {
      const int leaves = base.n - 3;
      for (int leaf = 0; leaf < leaves; ++leaf) {
        for (int q = 1; 2 * q <= k; ++q) {
          InsertionSpec spec{n, base.host};
          int next = kFreshBase;
          int target = leaf;
          replace_var_leaf(spec.host, target, fresh_block(k - q, q, next));
          renumber(spec);
          out.push_back(std::move(spec));
        }
      }
    }
  }
  return out;
}

std::vector<Rational> evaluation_vector(const FormSum& f, const std::vector<Point>& points) {
  std::vector<Rational> v(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) v[i] = evaluate(f, points[i]);
  return v;
}

}  // namespace

std::string InsertionSpec::str() const { return "[" + render(host) + "]"; }

std::vector<Word> expand_words(const std::vector<InsertionEntry>& entries) {
  std::vector<Word> result{Word{}};
  for (const auto& e : entries) {
    std::vector<Word> options;
    if (const auto* l = std::get_if<Label>(&e.value)) {
      options.push_back(Word{*l});
    } else {
      options = block_words(std::get<ShuffleBlock>(e.value));
    }
    std::vector<Word> next;
    next.reserve(result.size() * options.size());
    for (const auto& prefix : result) {
      for (const auto& o : options) {
        Word w = prefix;
        w.insert(w.end(), o.begin(), o.end());
        next.push_back(std::move(w));
      }
    }
    result = std::move(next);
  }
  return result;
}

InsertionForm expand_insertion(const InsertionSpec& spec, std::uint64_t seed) {
  if (spec.n < 4) throw DomainError("insertion spec needs n >= 4");
  validate_blocks(spec.host);
  auto sum = expand_checked(spec, delta_chords(spec.n));
  if (!sum) {
    throw DivergentInsertionError("insertion " + spec.str() +
                                  " is not admissible: a factor contains a chord of the standard cell or a term is not a 01-polygon");
  }
  FormSum form = to_forms(*sum);
  if (!converges_on_delta(form, seed)) {
    throw DivergentInsertionError("insertion " + spec.str() + " does not converge on the standard cell");
  }
  return {spec, std::move(*sum), std::move(form)};
}

std::vector<Polygon> convergent_01_polygons(int n) {
  std::vector<Polygon> out;
  for (auto& p : basis01(n)) {
    if (converges_01(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<InsertionForm> insertion_forms(int n, std::uint64_t seed) {
  if (n < 5 || n > 7) throw DomainError("insertion_forms supports n in 5..7, got " + std::to_string(n));
  const int m = n - 3;
  const auto forbidden = delta_chords(n);

  auto shapes = depth1_shapes(n);
  for (auto& s : depth2_shapes(n)) shapes.push_back(std::move(s));

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<Polygon>> seen;
  std::vector<InsertionForm> candidates;
  for (const auto& shape : shapes) {
    std::sort(perm.begin(), perm.end());
    do {
      InsertionSpec spec = shape;
      map_vars(spec.host, [&](int i) { return perm[static_cast<std::size_t>(i - 1)]; });
      auto sum = expand_checked(spec, forbidden);
      if (!sum || sum->size() < 2) continue;
      std::vector<Polygon> key;
      for (const auto& [p, c] : sum->terms()) key.push_back(p);
      if (!seen.insert(key).second) continue;
      FormSum form = to_forms(*sum);
      if (!converges_on_delta(form, seed)) continue;
      candidates.push_back({std::move(spec), std::move(*sum), std::move(form)});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto key = [](const InsertionForm& f) {
    std::vector<Polygon> polys;
    for (const auto& [p, c] : f.polygons.terms()) polys.push_back(p);
    return std::make_pair(f.polygons.size(), polys);
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const InsertionForm& x, const InsertionForm& y) { return key(x) < key(y); });

  std::size_t dim = 1;
  for (int i = 2; i <= n - 2; ++i) dim *= static_cast<std::size_t>(i);
  const auto points = random_points(n, dim + 8, derive_seed(seed, 0x6EED));
  RowSpace span(points.size());
  for (const auto& p : convergent_01_polygons(n)) span.insert(evaluation_vector(FormSum(cell_form(p)), points));

  std::vector<InsertionForm> out;
  for (auto& c : candidates) {
    if (span.insert(evaluation_vector(c.form, points))) out.push_back(std::move(c));
  }
  return out;
}

DeltaBasis delta_basis(int n, std::uint64_t seed) {
  if (n < 4 || n > 7) throw DomainError("delta_basis supports n in 4..7, got " + std::to_string(n));
  DeltaBasis out;
  for (const auto& p : convergent_01_polygons(n)) {
    out.elements.push_back({"01-form " + p.str(), PolygonSum(p), FormSum(cell_form(p))});
  }
  out.report.convergent_01 = out.elements.size();
  if (n >= 5) {
    for (auto& f : insertion_forms(n, seed)) {
      out.elements.push_back({"insertion " + f.spec.str(), std::move(f.polygons), std::move(f.form)});
      ++out.report.insertion;
    }
  }
  out.report.n = n;

  std::vector<FormSum> forms;
  for (const auto& e : out.elements) forms.push_back(e.form);
  out.report.rank = rank(forms, derive_seed(seed, 0xDE17A));

  const auto subspace = convergent_subspace(n, derive_seed(seed, 0x5B5));
  out.report.subspace_dimension = subspace.dimension();
  if (subspace.forms.empty()) {
    out.report.contained = forms.empty();
  } else {
    const SpanSolver solver(subspace.forms, derive_seed(seed, 0xC0A7));
    out.report.contained = std::all_of(forms.begin(), forms.end(),
                                       [&](const FormSum& f) { return solver.express(f).has_value(); });
  }
  return out;
}

}  // namespace cellforms
