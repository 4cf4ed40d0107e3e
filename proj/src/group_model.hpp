#pragma once

#include <string>
#include <vector>

#include "hsp/group.hpp"

namespace hsp::detail {

class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual std::size_t order() const = 0;
  virtual Element compose(Element x, Element y) const = 0;
  virtual Element inverse(Element x) const = 0;
  virtual std::string format(Element x) const = 0;
  virtual std::vector<Element> generators() const = 0;
  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
};

}  // namespace hsp::detail
