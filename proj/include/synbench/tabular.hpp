/*
 * Copyright 2026 The Synbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Core data model: typed rectangular datasets and DAGs over their columns.
// Datasets are immutable after construction and store categorical cells as
// level indices; continuous cells are 64-bit floats compared bit-exactly by
// the memorisation check.

#ifndef SYNBENCH_TABULAR_HPP
#define SYNBENCH_TABULAR_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "synbench/errors.hpp"

namespace synbench {

enum class ColumnType { Continuous, Binary, Ordinal, Nominal };

struct ColumnKind {
  ColumnType type = ColumnType::Continuous;
  std::vector<std::string> levels;  // empty for Continuous; {"false","true"} for Binary

  static ColumnKind continuous() { return {ColumnType::Continuous, {}}; }
  static ColumnKind binary() { return {ColumnType::Binary, {"false", "true"}}; }
  static ColumnKind ordinal(std::vector<std::string> lv) {
    ColumnKind k{ColumnType::Ordinal, std::move(lv)};
    k.validate();
    return k;
  }
  static ColumnKind nominal(std::vector<std::string> lv) {
    ColumnKind k{ColumnType::Nominal, std::move(lv)};
    k.validate();
    return k;
  }

  bool is_categorical() const { return type != ColumnType::Continuous; }
  std::size_t cardinality() const { return levels.size(); }

  void validate() const {
    if (type == ColumnType::Continuous) {
      if (!levels.empty()) throw InvalidParams("continuous column cannot declare levels");
      return;
    }
    if (levels.empty()) throw InvalidParams("categorical column needs a non-empty level list");
    if (type == ColumnType::Binary && levels.size() != 2)
      throw InvalidParams("binary column must have exactly two levels");
    std::unordered_set<std::string> seen;
    for (const auto& l : levels) {
      if (!seen.insert(l).second) throw InvalidParams("duplicate level '" + l + "'");
    }
  }
};

struct TableSchema {
  struct Column {
    std::string name;
    ColumnKind kind;
  };
  std::vector<Column> columns;

  TableSchema() = default;
  explicit TableSchema(std::vector<Column> cols) : columns(std::move(cols)) {
    std::unordered_set<std::string> seen;
    for (const auto& c : columns) {
      c.kind.validate();
      if (!seen.insert(c.name).second) throw InvalidParams("duplicate column name '" + c.name + "'");
    }
  }

  std::size_t size() const { return columns.size(); }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].name == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw InvalidParams("unknown column '" + name + "'");
    return *i;
  }

  bool operator==(const TableSchema& other) const {
    if (columns.size() != other.columns.size()) return false;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& a = columns[i];
      const auto& b = other.columns[i];
      if (a.name != b.name || a.kind.type != b.kind.type || a.kind.levels != b.kind.levels)
        return false;
    }
    return true;
  }
};

// Columnar storage: per column either doubles or level indices. Rectangular
// and in-domain by construction.
class Dataset {
 public:
  Dataset(TableSchema schema, std::vector<std::vector<double>> continuous,
          std::vector<std::vector<std::int32_t>> categorical)
      : schema_(std::move(schema)),
        continuous_(std::move(continuous)),
        categorical_(std::move(categorical)) {
    const std::size_t p = schema_.size();
    if (continuous_.size() != p || categorical_.size() != p)
      throw InvalidParams("column array count does not match schema");
    rows_ = 0;
    bool first = true;
    for (std::size_t j = 0; j < p; ++j) {
      const auto& kind = schema_.columns[j].kind;
      const std::size_t len = kind.is_categorical() ? categorical_[j].size() : continuous_[j].size();
      if (kind.is_categorical() && !continuous_[j].empty())
        throw InvalidParams("categorical column carries continuous cells");
      if (!kind.is_categorical() && !categorical_[j].empty())
        throw InvalidParams("continuous column carries categorical cells");
      if (first) {
        rows_ = len;
        first = false;
      } else if (len != rows_) {
        throw InvalidParams("ragged dataset: column '" + schema_.columns[j].name + "'");
      }
      if (kind.is_categorical()) {
        const auto card = static_cast<std::int32_t>(kind.cardinality());
        for (auto v : categorical_[j]) {
          if (v < 0 || v >= card)
            throw InvalidParams("level index out of range in '" + schema_.columns[j].name + "'");
        }
      } else {
        for (auto v : continuous_[j]) {
          if (!std::isfinite(v))
            throw InvalidParams("non-finite value in '" + schema_.columns[j].name + "'");
        }
      }
    }
  }

  const TableSchema& schema() const { return schema_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return schema_.size(); }

  const std::vector<double>& continuous(std::size_t j) const {
    if (schema_.columns[j].kind.is_categorical())
      throw InvalidParams("column '" + schema_.columns[j].name + "' is categorical");
    return continuous_[j];
  }
  const std::vector<std::int32_t>& categorical(std::size_t j) const {
    if (!schema_.columns[j].kind.is_categorical())
      throw InvalidParams("column '" + schema_.columns[j].name + "' is continuous");
    return categorical_[j];
  }
  const std::vector<double>& continuous(const std::string& name) const {
    return continuous(schema_.index_of(name));
  }
  const std::vector<std::int32_t>& categorical(const std::string& name) const {
    return categorical(schema_.index_of(name));
  }

 private:
  TableSchema schema_;
  std::vector<std::vector<double>> continuous_;
  std::vector<std::vector<std::int32_t>> categorical_;
  std::size_t rows_ = 0;
};

// Row-appending builder; validation happens when build() constructs the Dataset.
class DatasetBuilder {
 public:
  explicit DatasetBuilder(TableSchema schema, std::size_t reserve_rows = 0)
      : schema_(std::move(schema)),
        continuous_(schema_.size()),
        categorical_(schema_.size()) {
    for (std::size_t j = 0; j < schema_.size(); ++j) {
      if (schema_.columns[j].kind.is_categorical()) {
        categorical_[j].reserve(reserve_rows);
      } else {
        continuous_[j].reserve(reserve_rows);
      }
    }
  }

  const TableSchema& schema() const { return schema_; }

  void push_continuous(std::size_t j, double v) { continuous_[j].push_back(v); }
  void push_categorical(std::size_t j, std::int32_t level) { categorical_[j].push_back(level); }

  Dataset build() && {
    return Dataset(std::move(schema_), std::move(continuous_), std::move(categorical_));
  }

 private:
  TableSchema schema_;
  std::vector<std::vector<double>> continuous_;
  std::vector<std::vector<std::int32_t>> categorical_;
};

struct Dag {
  std::vector<std::string> nodes;  // schema order
  std::vector<std::pair<std::string, std::string>> edges;  // (parent, child)

  std::vector<std::string> parents_of(const std::string& child) const {
    std::vector<std::string> out;
    for (const auto& [u, v] : edges) {
      if (v == child) out.push_back(u);
    }
    return out;
  }
};

// Layered Kahn: peel the whole zero-indegree frontier each round, each layer
// in node-list (= schema) order. Parents always precede children and ties are
// deterministic.
inline std::vector<std::string> topological_order(const Dag& dag) {
  const std::size_t p = dag.nodes.size();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < p; ++i) {
    if (!pos.emplace(dag.nodes[i], i).second) throw InvalidParams("duplicate DAG node");
  }
  std::vector<std::size_t> indegree(p, 0);
  std::vector<std::vector<std::size_t>> children(p);
  for (const auto& [u, v] : dag.edges) {
    auto iu = pos.find(u);
    auto iv = pos.find(v);
    if (iu == pos.end() || iv == pos.end()) throw InvalidParams("DAG edge references unknown node");
    children[iu->second].push_back(iv->second);
    ++indegree[iv->second];
  }
  std::vector<std::string> order;
  order.reserve(p);
  std::vector<bool> done(p, false);
  std::size_t emitted = 0;
  while (emitted < p) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < p; ++i) {
      if (!done[i] && indegree[i] == 0) layer.push_back(i);
    }
    if (layer.empty()) throw CycleError("DAG contains a cycle");
    for (std::size_t i : layer) {
      done[i] = true;
      order.push_back(dag.nodes[i]);
      ++emitted;
    }
    for (std::size_t i : layer) {
      for (std::size_t c : children[i]) --indegree[c];
    }
  }
  return order;
}

namespace detail {

struct RowHash {
  const Dataset* data;
  std::uint64_t operator()(std::size_t row) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto fold = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ULL;
    };
    const auto& schema = data->schema();
    for (std::size_t j = 0; j < schema.size(); ++j) {
      if (schema.columns[j].kind.is_categorical()) {
        fold(static_cast<std::uint64_t>(static_cast<std::uint32_t>(data->categorical(j)[row])));
      } else {
        fold(std::bit_cast<std::uint64_t>(data->continuous(j)[row]));
      }
    }
    return h;
  }
};

inline bool rows_equal(const Dataset& a, std::size_t i, const Dataset& b, std::size_t j) {
  const auto& schema = a.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (schema.columns[c].kind.is_categorical()) {
      if (a.categorical(c)[i] != b.categorical(c)[j]) return false;
    } else {
      // bit-exact comparison, matching the "exact copies" notion
      if (std::bit_cast<std::uint64_t>(a.continuous(c)[i]) !=
          std::bit_cast<std::uint64_t>(b.continuous(c)[j]))
        return false;
    }
  }
  return true;
}

}  // namespace detail

// Number of synthetic rows that are bit-exact copies of some original row.
inline std::size_t exact_copy_count(const Dataset& original, const Dataset& synthetic) {
  if (!(original.schema() == synthetic.schema()))
    throw SchemaMismatch("exact_copy_count: schemas differ");
  detail::RowHash orig_hash{&original};
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  index.reserve(original.rows() * 2);
  for (std::size_t i = 0; i < original.rows(); ++i) index.emplace(orig_hash(i), i);
  detail::RowHash syn_hash{&synthetic};
  std::size_t count = 0;
  for (std::size_t i = 0; i < synthetic.rows(); ++i) {
    auto [lo, hi] = index.equal_range(syn_hash(i));
    for (auto it = lo; it != hi; ++it) {
      if (detail::rows_equal(original, it->second, synthetic, i)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace synbench

#endif  // SYNBENCH_TABULAR_HPP
