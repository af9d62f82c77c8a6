#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "choiceproc/catalog.hpp"
#include "choiceproc/errors.hpp"
#include "choiceproc/value.hpp"

namespace choiceproc {

/// Threshold comparison of an atomic filter. Ge is canonically ordered
/// before Le wherever the two appear on the same attribute.
enum class CmpOp { Ge, Le };

inline const char* opText(CmpOp op) { return op == CmpOp::Ge ? ">=" : "<="; }

/// One threshold predicate `attr >= bound` or `attr <= bound`.
struct AtomicPredicate {
  std::string attr;
  CmpOp op = CmpOp::Ge;
  Value bound;
};

/// A finite boolean tree over atomic predicates with And/Or connectives.
/// There is no negation node. And/Or nodes always have at least two
/// children; single-child connectives collapse to the child.
struct FilterExpr {
  enum class Kind { Atom, And, Or };

  Kind kind = Kind::Atom;
  AtomicPredicate pred;             // Atom only
  std::vector<FilterExpr> children; // And/Or only

  static FilterExpr atom(AtomicPredicate p) {
    FilterExpr e;
    e.kind = Kind::Atom;
    e.pred = std::move(p);
    return e;
  }
  static FilterExpr atom(std::string attr, CmpOp op, Value bound) {
    return atom(AtomicPredicate{std::move(attr), op, std::move(bound)});
  }
  static FilterExpr allOf(std::vector<FilterExpr> children) {
    if (children.size() == 1) return std::move(children.front());
    FilterExpr e;
    e.kind = Kind::And;
    e.children = std::move(children);
    return e;
  }
  static FilterExpr anyOf(std::vector<FilterExpr> children) {
    if (children.size() == 1) return std::move(children.front());
    FilterExpr e;
    e.kind = Kind::Or;
    e.children = std::move(children);
    return e;
  }

  /// True when the tree contains no Or node, i.e. it denotes a pure
  /// conjunction of atoms.
  bool isConjunctive() const {
    if (kind == Kind::Atom) return true;
    if (kind == Kind::Or) return false;
    for (const auto& c : children)
      if (!c.isConjunctive()) return false;
    return true;
  }

  /// Flattens a conjunctive tree into its atoms, in tree order. Throws
  /// NotSimpleError when an Or node is present.
  void collectConjunctiveAtoms(std::vector<AtomicPredicate>& out) const {
    switch (kind) {
      case Kind::Atom:
        out.push_back(pred);
        return;
      case Kind::And:
        for (const auto& c : children) c.collectConjunctiveAtoms(out);
        return;
      case Kind::Or:
        throw NotSimpleError("disjunctive filter in a simple-mode operation; use the general forms");
    }
  }

  /// Every atom of the tree, in tree order.
  void collectAtoms(std::vector<AtomicPredicate>& out) const {
    if (kind == Kind::Atom) {
      out.push_back(pred);
      return;
    }
    for (const auto& c : children) c.collectAtoms(out);
  }
};

inline bool operator==(const AtomicPredicate& a, const AtomicPredicate& b) {
  return a.attr == b.attr && a.op == b.op && a.bound == b.bound;
}

inline bool operator==(const FilterExpr& a, const FilterExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == FilterExpr::Kind::Atom) return a.pred == b.pred;
  return a.children == b.children;
}

enum class SortDir { Asc, Desc };

inline const char* dirText(SortDir d) { return d == SortDir::Asc ? "asc" : "desc"; }

/// One sorting criterion: a direction and an attribute. Used both as a
/// pipeline stage and as a lexicographic ordering key.
struct SortKey {
  SortDir dir = SortDir::Asc;
  std::string attr;

  friend bool operator==(const SortKey&, const SortKey&) = default;
};

/// A pipeline stage is either a filter (by a boolean predicate tree) or a
/// stable sort.
using Stage = std::variant<FilterExpr, SortKey>;

inline Stage filterStage(FilterExpr e) { return Stage{std::move(e)}; }
inline Stage sortStage(SortDir dir, std::string attr) { return Stage{SortKey{dir, std::move(attr)}}; }

/// A decision procedure: stages in application order (front applied first),
/// optionally terminated by a `first` projection. Note the reversal versus
/// composition notation: the composition g ∘ f stores [f, g].
struct Procedure {
  std::vector<Stage> stages;
  bool takeFirst = false;

  /// Stage count, filters and sorts only. `first` is not counted.
  std::size_t length() const { return stages.size(); }
};

/// Declarative counterpart of a procedure: a definable property (absent
/// means "always true", the empty conjunction) plus a lexicographic
/// ordering, highest-priority key first.
struct PreferenceSpec {
  std::optional<FilterExpr> property;
  std::vector<SortKey> ordering;

  /// Validates the distinct-ordering-attributes invariant.
  static PreferenceSpec make(std::optional<FilterExpr> property, std::vector<SortKey> ordering) {
    std::set<std::string> seen;
    for (const auto& key : ordering)
      if (!seen.insert(key.attr).second)
        throw SchemaError("duplicate attribute \"" + key.attr + "\" in ordering");
    return PreferenceSpec{std::move(property), std::move(ordering)};
  }

  /// Simple mode: the property is a pure conjunction of atoms (or absent).
  bool isSimple() const { return !property || property->isConjunctive(); }
};

namespace detail {

inline void validateAtom(const AtomicPredicate& atom, const Catalog& catalog,
                         std::vector<std::string>& errors) {
  const AttributeDecl* decl = catalog.findAttr(atom.attr);
  if (!decl) {
    errors.push_back("undeclared attribute \"" + atom.attr + "\"");
    return;
  }
  if (decl->kind == AttrKind::Numeric) {
    if (atom.bound.kind() != Value::Kind::Decimal)
      errors.push_back("attribute \"" + atom.attr + "\" is numeric but the bound is a label");
  } else {
    if (atom.bound.kind() == Value::Kind::Decimal) {
      errors.push_back("attribute \"" + atom.attr + "\" is ordinal but the bound is a decimal");
    } else {
      try {
        (void)atom.bound.resolve(decl->order);
      } catch (const SchemaError& e) {
        errors.push_back(std::string(e.what()));
      }
    }
  }
}

inline void validateExpr(const FilterExpr& e, const Catalog& catalog,
                         std::vector<std::string>& errors) {
  if (e.kind == FilterExpr::Kind::Atom) {
    validateAtom(e.pred, catalog, errors);
    return;
  }
  if (e.children.empty()) errors.push_back("empty connective in filter expression");
  for (const auto& c : e.children) validateExpr(c, catalog, errors);
}

}  // namespace detail

/// Checks every attribute reference of a procedure against a catalog
/// schema. Returns the full list of violations; an empty list means the
/// procedure is well formed. Never throws.
inline std::vector<std::string> validateProcedure(const Procedure& p, const Catalog& catalog) {
  std::vector<std::string> errors;
  for (const auto& stage : p.stages) {
    if (const auto* filter = std::get_if<FilterExpr>(&stage)) {
      detail::validateExpr(*filter, catalog, errors);
    } else {
      const auto& key = std::get<SortKey>(stage);
      if (!catalog.findAttr(key.attr))
        errors.push_back("undeclared attribute \"" + key.attr + "\"");
    }
  }
  return errors;
}

inline std::vector<std::string> validateSpec(const PreferenceSpec& spec, const Catalog& catalog) {
  std::vector<std::string> errors;
  if (spec.property) detail::validateExpr(*spec.property, catalog, errors);
  for (const auto& key : spec.ordering)
    if (!catalog.findAttr(key.attr))
      errors.push_back("undeclared attribute \"" + key.attr + "\"");
  return errors;
}

/// Distinct attributes referenced by a procedure's filters and sorts, the
/// N of the length bound.
inline std::set<std::string> attributesUsed(const Procedure& p) {
  std::set<std::string> attrs;
  std::vector<AtomicPredicate> atoms;
  for (const auto& stage : p.stages) {
    if (const auto* filter = std::get_if<FilterExpr>(&stage)) {
      atoms.clear();
      filter->collectAtoms(atoms);
      for (const auto& a : atoms) attrs.insert(a.attr);
    } else {
      attrs.insert(std::get<SortKey>(stage).attr);
    }
  }
  return attrs;
}

}  // namespace choiceproc
