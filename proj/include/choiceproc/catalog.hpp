#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "choiceproc/errors.hpp"
#include "choiceproc/value.hpp"

namespace choiceproc {

enum class AttrKind { Numeric, Ordinal };

/// A declared attribute of a catalog: a name plus a value kind. Ordinal
/// attributes carry their total order of labels, lowest first.
struct AttributeDecl {
  std::string name;
  AttrKind kind = AttrKind::Numeric;
  LabelOrderPtr order;  // set iff kind == Ordinal

  static AttributeDecl numeric(std::string name) {
    return {std::move(name), AttrKind::Numeric, nullptr};
  }
  static AttributeDecl ordinal(std::string name, LabelOrder order) {
    return {std::move(name), AttrKind::Ordinal,
            std::make_shared<const LabelOrder>(std::move(order))};
  }
};

/// Index of an item within its catalog.
using ItemRef = std::uint32_t;

/// An ordered list of catalog items, duplicates permitted. This is a list,
/// not a set: procedures operate on presentation order.
using RankedList = std::vector<ItemRef>;

struct Item {
  std::string id;
  std::vector<Value> values;  // aligned with the catalog schema
};

/// The universe of alternatives: a schema of attributes plus items that
/// assign a value of the declared kind to every attribute. Immutable after
/// construction; construction validates totality, kinds and uniqueness.
class Catalog {
public:
  Catalog(std::vector<AttributeDecl> schema, std::vector<Item> items)
      : schema_(std::move(schema)), items_(std::move(items)) {
    for (std::size_t i = 0; i < schema_.size(); ++i) {
      const auto& decl = schema_[i];
      if (decl.name.empty()) throw SchemaError("attribute names must be nonempty");
      if (!attrIndex_.emplace(decl.name, i).second)
        throw SchemaError("duplicate attribute \"" + decl.name + "\"");
      if (decl.kind == AttrKind::Ordinal) {
        if (!decl.order || decl.order->empty())
          throw SchemaError("ordinal attribute \"" + decl.name + "\" has no declared order");
        std::map<std::string, int> seen;
        for (const auto& label : *decl.order)
          if (++seen[label] > 1)
            throw SchemaError("duplicate label \"" + label + "\" in order of \"" + decl.name + "\"");
      }
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const auto& item = items_[i];
      if (!idIndex_.emplace(item.id, static_cast<ItemRef>(i)).second)
        throw SchemaError("duplicate item id \"" + item.id + "\"");
      if (item.values.size() != schema_.size())
        throw SchemaError("item \"" + item.id + "\" does not assign a value to every attribute");
      for (std::size_t a = 0; a < schema_.size(); ++a) checkKind(item.id, schema_[a], item.values[a]);
    }
  }

  /// Builds a catalog from raw value literals: decimal text for numeric
  /// attributes, a label for ordinal ones.
  static Catalog make(std::vector<AttributeDecl> schema,
                      const std::vector<std::pair<std::string, std::vector<std::string>>>& rawItems) {
    std::vector<Item> items;
    items.reserve(rawItems.size());
    for (const auto& [id, raw] : rawItems) {
      if (raw.size() != schema.size())
        throw SchemaError("item \"" + id + "\" does not assign a value to every attribute");
      Item item{id, {}};
      for (std::size_t a = 0; a < schema.size(); ++a) {
        if (schema[a].kind == AttrKind::Numeric)
          item.values.push_back(Value::decimal(raw[a]));
        else
          item.values.push_back(Value::label(raw[a]).resolve(schema[a].order));
      }
      items.push_back(std::move(item));
    }
    return Catalog(std::move(schema), std::move(items));
  }

  const std::vector<AttributeDecl>& schema() const { return schema_; }
  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

  const AttributeDecl* findAttr(const std::string& name) const {
    auto it = attrIndex_.find(name);
    return it == attrIndex_.end() ? nullptr : &schema_[it->second];
  }

  std::size_t attrIndex(const std::string& name) const {
    auto it = attrIndex_.find(name);
    if (it == attrIndex_.end()) throw SchemaError("undeclared attribute \"" + name + "\"");
    return it->second;
  }

  ItemRef itemIndex(const std::string& id) const {
    auto it = idIndex_.find(id);
    if (it == idIndex_.end()) throw SchemaError("unknown item id \"" + id + "\"");
    return it->second;
  }

  const Value& value(ItemRef item, std::size_t attr) const { return items_[item].values[attr]; }
  const Value& value(ItemRef item, const std::string& attr) const {
    return items_[item].values[attrIndex(attr)];
  }
  const std::string& idOf(ItemRef item) const { return items_[item].id; }

  /// All items in catalog order, the default presentation list.
  RankedList allItems() const {
    RankedList l(items_.size());
    std::iota(l.begin(), l.end(), 0);
    return l;
  }

  /// Every attribute name, for A-equivalence over the full schema.
  std::vector<std::string> attributeNames() const {
    std::vector<std::string> names;
    names.reserve(schema_.size());
    for (const auto& decl : schema_) names.push_back(decl.name);
    return names;
  }

private:
  static void checkKind(const std::string& id, const AttributeDecl& decl, const Value& v) {
    if (decl.kind == AttrKind::Numeric) {
      if (v.kind() != Value::Kind::Decimal)
        throw SchemaError("item \"" + id + "\": attribute \"" + decl.name + "\" expects a decimal value");
    } else {
      if (v.kind() != Value::Kind::Ordinal || (v.order() != decl.order && *v.order() != *decl.order))
        throw SchemaError("item \"" + id + "\": attribute \"" + decl.name +
                          "\" expects a label from its declared order");
    }
  }

  std::vector<AttributeDecl> schema_;
  std::vector<Item> items_;
  std::map<std::string, std::size_t> attrIndex_;
  std::map<std::string, ItemRef> idIndex_;
};

}  // namespace choiceproc
