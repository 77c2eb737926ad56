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

#include "odprof/dependency.hpp"

#include <stdexcept>

namespace odprof {

ListOD ListOD::as_equivalence() const {
  if (kind_ != Kind::kOrderCompatible) return *this;
  return equivalent(lhs_.concat(rhs_), rhs_.concat(lhs_));
}

CanonicalDependency CanonicalDependency::constant(AttributeSet context, Attribute a) {
  if (context.contains(a)) {
    throw std::invalid_argument("constant attribute lies inside its context");
  }
  return trivial_constant(context, a);
}

CanonicalDependency CanonicalDependency::compatible(AttributeSet context, Attribute a,
                                                    Attribute b) {
  if (a == b) throw std::invalid_argument("an attribute is always compatible with itself");
  if (context.contains(a) || context.contains(b)) {
    throw std::invalid_argument("compatible attribute lies inside its context");
  }
  return trivial_compatible(context, a, b);
}

CanonicalDependency CanonicalDependency::trivial_constant(AttributeSet context, Attribute a) {
  return CanonicalDependency(Kind::kConstant, context, a, a);
}

CanonicalDependency CanonicalDependency::trivial_compatible(AttributeSet context, Attribute a,
                                                            Attribute b) {
  if (b < a) std::swap(a, b);
  return CanonicalDependency(Kind::kCompatible, context, a, b);
}

bool CanonicalDependency::is_trivial() const {
  if (kind_ == Kind::kConstant) return context_.contains(first_);
  return first_ == second_ || context_.contains(first_) || context_.contains(second_);
}

CanonicalDependency CanonicalDependency::in_context(AttributeSet context) const {
  CanonicalDependency out = *this;
  out.context_ = context;
  return out;
}

std::strong_ordering operator<=>(const CanonicalDependency& a, const CanonicalDependency& b) {
  if (auto c = compare_sets(a.context_, b.context_); c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.first_ <=> b.first_; c != 0) return c;
  return a.second_ <=> b.second_;
}

ListOD fd_as_od(const AttributeList& lhs, const AttributeList& rhs) {
  return ListOD::orders(lhs, lhs.concat(rhs));
}

DependencySet map_fd_to_canonical(AttributeSet context, const AttributeList& rhs) {
  DependencySet out;
  for (Attribute a : rhs) {
    if (!context.contains(a)) out.insert(CanonicalDependency::constant(context, a));
  }
  return out;
}

DependencySet map_ocd_to_canonical(const AttributeList& lhs, const AttributeList& rhs) {
  DependencySet out;
  AttributeSet lhs_prefix;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    AttributeSet context = lhs_prefix;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      const Attribute a = lhs[i];
      const Attribute b = rhs[j];
      if (a != b && !context.contains(a) && !context.contains(b)) {
        out.insert(CanonicalDependency::compatible(context, a, b));
      }
      context = context.with(b);
    }
    lhs_prefix = lhs_prefix.with(lhs[i]);
  }
  return out;
}

DependencySet map_od_to_canonical(const AttributeList& lhs, const AttributeList& rhs) {
  DependencySet out = map_fd_to_canonical(AttributeSet(lhs), rhs);
  out.merge(map_ocd_to_canonical(lhs, rhs));
  return out;
}

}  // namespace odprof
