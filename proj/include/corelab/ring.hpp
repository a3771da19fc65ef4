#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corelab/field.hpp"
#include "corelab/monomial.hpp"

namespace corelab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring: named variables over a finite field, with a default
// monomial order.  Immutable; shared by value types built over it.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars, FieldPtr field,
                      MonomialOrder order = MonomialOrder::grevlex());

  unsigned arity() const { return static_cast<unsigned>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(unsigned i) const { return vars_[i]; }
  std::optional<unsigned> var_index(const std::string& name) const;
  const FieldPtr& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  // Same variables and field; the order may differ.
  bool compatible(const PolyRing& o) const {
    return field_.get() == o.field_.get() && vars_ == o.vars_;
  }
  bool same(const PolyRing& o) const {
    return compatible(o) && order_ == o.order_;
  }

  // This ring with another default order (same variables and field).
  RingPtr with_order(MonomialOrder order) const;

  // A variable name built from `base` that does not collide with any
  // existing variable.
  std::string fresh_name(const std::string& base) const;

 private:
  PolyRing(std::vector<std::string> vars, FieldPtr field, MonomialOrder order);

  std::vector<std::string> vars_;
  FieldPtr field_;
  MonomialOrder order_;
};

}  // namespace corelab
