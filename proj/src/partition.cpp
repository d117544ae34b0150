#include "stonework/partition.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace stonework {

  Partition::Partition(std::vector<std::size_t> labels) : _id(std::move(labels)) {
    std::map<std::size_t, std::size_t> renumber;
    for (auto& l : _id) {
      auto [it, inserted] = renumber.emplace(l, renumber.size());
      l                   = it->second;
    }
    _count = renumber.size();
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> id(n);
    for (std::size_t x = 0; x < n; ++x) {
      id[x] = x;
    }
    return Partition(std::move(id));
  }

  Partition Partition::indiscrete(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  Partition Partition::from_classes(
      std::size_t                                  n,
      std::vector<std::vector<std::size_t>> const& classes) {
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(n, unset);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) {
        throw InvalidArgument("partition class " + std::to_string(c)
                              + " is empty");
      }
      for (std::size_t x : classes[c]) {
        if (x >= n) {
          throw InvalidArgument("partition point " + std::to_string(x)
                                + " out of range");
        }
        if (id[x] != unset) {
          throw InvalidArgument("point " + std::to_string(x)
                                + " lies in two classes");
        }
        id[x] = c;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (id[x] == unset) {
        throw InvalidArgument("point " + std::to_string(x)
                              + " lies in no class");
      }
    }
    return Partition(std::move(id));
  }

  std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> out(_count);
    for (std::size_t x = 0; x < _id.size(); ++x) {
      out[_id[x]].push_back(x);
    }
    return out;
  }

  bool Partition::refines(Partition const& coarser) const {
    if (coarser.carrier_size() != carrier_size()) {
      throw CarrierMismatch("partitions on different carriers");
    }
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image(_count, unset);
    for (std::size_t x = 0; x < _id.size(); ++x) {
      auto& slot = image[_id[x]];
      if (slot == unset) {
        slot = coarser._id[x];
      } else if (slot != coarser._id[x]) {
        return false;
      }
    }
    return true;
  }

  Partition meet(Partition const& a, Partition const& b) {
    if (a.carrier_size() != b.carrier_size()) {
      throw CarrierMismatch("meet of partitions on different carriers");
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_id;
    std::vector<std::size_t> id(a.carrier_size());
    for (std::size_t x = 0; x < id.size(); ++x) {
      auto key            = std::make_pair(a.class_of(x), b.class_of(x));
      auto [it, inserted] = pair_id.emplace(key, pair_id.size());
      id[x]               = it->second;
    }
    return Partition(std::move(id));
  }

}  // namespace stonework
