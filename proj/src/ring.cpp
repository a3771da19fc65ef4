#include "corelab/ring.hpp"

#include <algorithm>
#include <set>

namespace corelab {

PolyRing::PolyRing(std::vector<std::string> vars, FieldPtr field,
                   MonomialOrder order)
    : vars_(std::move(vars)), field_(std::move(field)), order_(order) {}

RingPtr PolyRing::make(std::vector<std::string> vars, FieldPtr field,
                       MonomialOrder order) {
  if (vars.empty()) throw Error("ring needs at least one variable");
  if (vars.size() > kMaxVars)
    throw Error("ring arity " + std::to_string(vars.size()) +
                " exceeds the supported maximum " + std::to_string(kMaxVars));
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (!field) throw Error("ring needs a coefficient field");
  if (order.kind == OrderKind::kBlock && order.block > vars.size())
    throw Error("elimination block larger than ring arity");
  return RingPtr(new PolyRing(std::move(vars), std::move(field), order));
}

std::optional<unsigned> PolyRing::var_index(const std::string& name) const {
  for (unsigned i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(vars_, field_, order);
}

std::string PolyRing::fresh_name(const std::string& base) const {
  std::string candidate = base;
  while (var_index(candidate).has_value()) candidate += "_";
  return candidate;
}

}  // namespace corelab
