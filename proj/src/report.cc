#include "qsigma/report.hpp"

namespace qsigma {

void Report::add(std::string name, bool ok, std::string detail)
{
  entries.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(Report const &other)
{
  for (auto const &e : other.entries)
    entries.push_back({other.title.empty() ? e.name : other.title + ": " + e.name,
                       e.ok, e.detail});
}

std::size_t Report::failures() const
{
  std::size_t n = 0;
  for (auto const &e : entries)
    n += e.ok ? 0 : 1;
  return n;
}

void Report::print(std::ostream &os, bool verbose) const
{
  os << title << ": " << size() << " checked, " << failures() << " failed\n";
  for (auto const &e : entries) {
    if (e.ok && !verbose)
      continue;
    os << "  " << (e.ok ? "ok   " : "FAIL ") << e.name;
    if (!e.detail.empty())
      os << "  [" << e.detail << "]";
    os << '\n';
  }
}

nlohmann::json Report::to_json() const
{
  nlohmann::json items = nlohmann::json::array();
  for (auto const &e : entries)
    items.push_back({{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
  return {{"title", title},
          {"checked", size()},
          {"failed", failures()},
          {"ok", ok()},
          {"entries", std::move(items)}};
}

} // namespace qsigma
