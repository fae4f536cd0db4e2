#ifndef CELLFORMS_INSERTION_HPP
#define CELLFORMS_INSERTION_HPP

// Insertion forms: convergent shuffles inserted into convergent 01-polygons,
// and the resulting basis of forms convergent on the standard cell.

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cellforms {

struct InsertionEntry;

// Shuffle of two factor sequences placed in one slot of a host word. Factors
// may themselves contain blocks.
struct ShuffleBlock {
  std::vector<InsertionEntry> a;
  std::vector<InsertionEntry> b;
};

struct InsertionEntry {
  std::variant<Label, ShuffleBlock> value;
};

// A host word (infinity included, any rotation) some of whose entries are
// shuffle blocks. Expands to a sum of polygons with coefficient 1 each.
struct InsertionSpec {
  int n = 0;
  std::vector<InsertionEntry> host;

  std::string str() const;
};

struct InsertionForm {
  InsertionSpec spec;
  PolygonSum polygons;
  FormSum form;
};

// All words of the expansion (one per shuffle choice).
std::vector<Word> expand_words(const std::vector<InsertionEntry>& entries);

// Expands the spec and checks it: every term a 01-polygon, every shuffle
// factor free of standard-cell chords, and the sum convergent on the standard
// cell. Throws DivergentInsertionError (or DomainError for malformed specs).
InsertionForm expand_insertion(const InsertionSpec& spec, std::uint64_t seed);

// Bounded-depth (<= 2) enumeration of insertion forms, filtered for
// convergence and greedily chosen to extend the convergent 01-forms to an
// independent set. n in 5..7.
std::vector<InsertionForm> insertion_forms(int n, std::uint64_t seed);

// Convergent 01-polygons in enumeration order.
std::vector<Polygon> convergent_01_polygons(int n);

struct DeltaBasisElement {
  std::string origin;  // "01-form" or the insertion spec
  PolygonSum polygons;
  FormSum form;
};

struct DeltaBasisReport {
  int n = 0;
  std::size_t convergent_01 = 0;
  std::size_t insertion = 0;
  std::size_t rank = 0;
  std::size_t subspace_dimension = 0;
  bool contained = false;  // every element lies in the independently computed subspace
  bool match() const { return rank == subspace_dimension && rank == convergent_01 + insertion && contained; }
  bool sound() const { return rank <= subspace_dimension && contained; }
  std::string status() const { return match() ? "MATCH" : "MISMATCH"; }
};

struct DeltaBasis {
  std::vector<DeltaBasisElement> elements;
  DeltaBasisReport report;
};

DeltaBasis delta_basis(int n, std::uint64_t seed);

}  // namespace cellforms

#endif  // CELLFORMS_INSERTION_HPP
