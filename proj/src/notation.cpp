// Copyright 2026 The odprof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "odprof/notation.hpp"

#include <algorithm>
#include <cctype>

#include "odprof/error.hpp"

namespace odprof {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Strips one pair of enclosing brackets if present.
std::string_view unwrap(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == open && s.back() == close) {
    return trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::vector<std::string_view> split_names(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view name = trim(s.substr(start, comma - start));
    if (name.empty()) throw ParseError("empty attribute name in '" + std::string(s) + "'");
    out.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<std::string_view, std::string_view> split_once(std::string_view text,
                                                         std::string_view op) {
  const std::size_t at = text.find(op);
  if (at == std::string_view::npos) {
    throw ParseError("expected '" + std::string(op) + "' in '" + std::string(text) + "'");
  }
  return {text.substr(0, at), text.substr(at + op.size())};
}

Attribute single(const Table& table, std::string_view text) {
  const AttributeList list = parse_list(table, text);
  if (list.size() != 1) {
    throw ParseError("expected exactly one attribute in '" + std::string(trim(text)) + "'");
  }
  return list[0];
}

std::string joined(const Table& table, std::span<const Attribute> attrs) {
  std::string out;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i > 0) out += ',';
    out += table.attribute_name(attrs[i]);
  }
  return out;
}

}  // namespace

std::string render(const Table& table, const AttributeList& list) {
  if (list.empty()) return "[]";
  return joined(table, list.view());
}

std::string render(const Table& table, AttributeSet set) {
  const std::vector<Attribute> members = set.members();
  return "{" + joined(table, members) + "}";
}

std::string render(const Table& table, const ListOD& od) {
  std::string_view op;
  switch (od.kind()) {
    case ListOD::Kind::kOrders:
      op = " -> ";
      break;
    case ListOD::Kind::kOrderEquivalent:
      op = " <-> ";
      break;
    case ListOD::Kind::kOrderCompatible:
      op = " ~ ";
      break;
  }
  return render(table, od.lhs()) + std::string(op) + render(table, od.rhs());
}

std::string render(const Table& table, const CanonicalDependency& d) {
  std::string out = render(table, d.context()) + ": ";
  if (d.is_constant()) return out + "[] -> " + table.attribute_name(d.first());
  return out + table.attribute_name(d.first()) + " ~ " + table.attribute_name(d.second());
}

std::string render(const Table& table, const Statement& s) {
  return std::visit([&](const auto& v) { return render(table, v); }, s);
}

AttributeList parse_list(const Table& table, std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') body = unwrap(body, '[', ']');
  else if (!body.empty() && body.front() == '<') body = unwrap(body, '<', '>');
  AttributeList out;
  for (std::string_view name : split_names(body)) out.push_back(table.attribute(name));
  return out;
}

ListOD parse_od(const Table& table, std::string_view text) {
  if (text.find("<->") != std::string_view::npos) {
    throw ParseError("expected an OD 'X -> Y', got an equivalence");
  }
  const auto [lhs, rhs] = split_once(text, "->");
  return ListOD::orders(parse_list(table, lhs), parse_list(table, rhs));
}

ListOD parse_ocd(const Table& table, std::string_view text) {
  const auto [lhs, rhs] = split_once(text, "~");
  return ListOD::compatible(parse_list(table, lhs), parse_list(table, rhs));
}

CanonicalDependency parse_canonical(const Table& table, std::string_view text) {
  const auto [context_text, body] = split_once(text, ":");
  const AttributeList context_list = parse_list(table, unwrap(context_text, '{', '}'));
  const AttributeSet context(context_list);
  try {
    if (body.find("->") != std::string_view::npos) {
      const auto [empty, attr] = split_once(body, "->");
      if (!parse_list(table, empty).empty()) {
        throw ParseError("constant form is 'CTX: [] -> A'");
      }
      return CanonicalDependency::constant(context, single(table, attr));
    }
    const auto [a, b] = split_once(body, "~");
    return CanonicalDependency::compatible(context, single(table, a), single(table, b));
  } catch (const std::invalid_argument& e) {
    throw ParseError("trivial canonical statement '" + std::string(trim(text)) + "': " + e.what());
  }
}

Statement parse_statement(const Table& table, std::string_view text) {
  if (text.find(':') != std::string_view::npos) return parse_canonical(table, text);
  if (text.find("<->") != std::string_view::npos) {
    const auto [lhs, rhs] = split_once(text, "<->");
    return ListOD::equivalent(parse_list(table, lhs), parse_list(table, rhs));
  }
  if (text.find("->") != std::string_view::npos) return parse_od(table, text);
  if (text.find('~') != std::string_view::npos) return parse_ocd(table, text);
  throw ParseError("unrecognized dependency '" + std::string(trim(text)) + "'");
}

Table schema_from_statement(std::string_view od_text) {
  std::string spaced(od_text);
  for (char& c : spaced) {
    if (c == ',' || c == ':' || c == '~' || c == '{' || c == '}' || c == '[' || c == ']' ||
        c == '<' || c == '>') {
      c = ' ';
    }
  }
  std::vector<Column> columns;
  std::size_t i = 0;
  while (i < spaced.size()) {
    while (i < spaced.size() && std::isspace(static_cast<unsigned char>(spaced[i]))) ++i;
    std::size_t j = i;
    while (j < spaced.size() && !std::isspace(static_cast<unsigned char>(spaced[j]))) ++j;
    std::string name = spaced.substr(i, j - i);
    // Arrows leave a bare '-' behind.
    if (!name.empty() && name != "-") {
      if (name.back() == '-') name.pop_back();
      const bool seen = std::any_of(columns.begin(), columns.end(),
                                    [&](const Column& c) { return c.name == name; });
      if (!name.empty() && !seen) columns.push_back({name, ValueType::kText});
    }
    i = j;
  }
  return Table("statement", std::move(columns), {});
}

}  // namespace odprof
