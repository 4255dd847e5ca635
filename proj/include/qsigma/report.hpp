#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qsigma {

/// Outcome of an exhaustive verification: one entry per checked instance.
struct Report
{
  struct Entry
  {
    std::string name;
    bool ok = true;
    std::string detail;
  };

  std::string title;
  std::vector<Entry> entries;

  void add(std::string name, bool ok, std::string detail = {});
  void merge(Report const &other);

  bool ok() const { return failures() == 0; }
  std::size_t failures() const;
  std::size_t size() const { return entries.size(); }

  /// Summary line plus every failing entry; `verbose` lists all entries.
  void print(std::ostream &os, bool verbose = false) const;
  nlohmann::json to_json() const;
};

} // namespace qsigma
