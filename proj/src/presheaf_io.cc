#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qsigma/errors.hpp"
#include "qsigma/presheaf.hpp"

namespace qsigma {

namespace {

[[noreturn]] void parse_error(int line, std::string const &what)
{
  throw InputError(InputError::Kind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string const &s)
{
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

int parse_int(std::string const &s, int line)
{
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size())
      parse_error(line, "expected an integer, got '" + s + "'");
    return v;
  } catch (std::logic_error const &) {
    parse_error(line, "expected an integer, got '" + s + "'");
  }
}

// Shared by the text and JSON readers: names per level and the action of
// each generator given by section names.
PresheafPtr assemble(Site site, int top, bool truncated,
                     std::vector<std::vector<std::string>> names,
                     std::map<std::string, std::map<std::string, std::string>> const &actions)
{
  if (top < 0)
    throw InputError(InputError::Kind::BadDimension, "negative truncation");
  if (static_cast<int>(names.size()) != top + 1)
    throw InputError(InputError::Kind::InvalidPresheaf,
                     "expected levels 0.." + std::to_string(top) + ", got " +
                         std::to_string(names.size()) + " level(s)");
  std::vector<std::unordered_map<std::string, int>> index(top + 1);
  for (int l = 0; l <= top; ++l)
    for (std::size_t k = 0; k < names[l].size(); ++k)
      index[l].emplace(names[l][k], static_cast<int>(k));
  auto gens = generators(site, top);
  std::vector<std::vector<int>> tables;
  for (auto const &g : gens) {
    auto it = actions.find(g.name());
    if (it == actions.end() && !names[g.target()].empty())
      throw InputError(InputError::Kind::InvalidPresheaf, "no action given for " + g.name());
    auto &t = tables.emplace_back();
    for (auto const &x : names[g.target()]) {
      auto e = it->second.find(x);
      if (e == it->second.end())
        throw InputError(InputError::Kind::InvalidPresheaf,
                         g.name() + " has no value on " + x);
      auto v = index[g.source()].find(e->second);
      if (v == index[g.source()].end())
        throw InputError(InputError::Kind::InvalidPresheaf,
                         g.name() + " sends " + x + " to " + e->second + ", not a section of level " +
                             std::to_string(g.source()));
      t.push_back(v->second);
    }
  }
  std::set<std::string> known;
  for (auto const &g : gens)
    known.insert(g.name());
  for (auto const &[gname, entries] : actions)
    if (!known.count(gname))
      throw InputError(InputError::Kind::InvalidPresheaf,
                       gname + " is not a generator between stored levels");
  auto x = std::make_shared<Presheaf>(site, top, std::move(names), std::move(tables), truncated);
  auto report = x->audit();
  for (auto const &e : report.entries)
    if (!e.ok)
      throw InputError(InputError::Kind::InvalidPresheaf,
                       "relation " + e.name + " fails: " + e.detail);
  return x;
}

} // namespace

std::string to_text(Presheaf const &x)
{
  std::ostringstream out;
  out << "site: " << to_string(x.site()) << "\n";
  out << "truncation: " << x.top() << "\n";
  out << "truncated: " << (x.truncated() ? "yes" : "no") << "\n";
  for (int l = 0; l <= x.top(); ++l) {
    out << "level " << l << ":";
    for (auto const &n : x.names(l))
      out << " " << n;
    out << "\n";
  }
  auto const &gens = x.gens();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out << gens[k].name() << ":\n";
    for (int u = 0; u < x.size(gens[k].target()); ++u)
      out << "  " << x.name(gens[k].target(), u) << " -> "
          << x.name(gens[k].source(), x.tables()[k][u]) << "\n";
  }
  return out.str();
}

PresheafPtr parse_presheaf(std::string_view text)
{
  std::optional<Site> site;
  int top = -1;
  bool truncated = false;
  std::map<int, std::vector<std::string>> levels;
  std::map<std::string, std::map<std::string, std::string>> actions;
  std::string current;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto hash = raw.find('#');
    auto line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty())
      continue;
    auto arrow = line.find("->");
    if (arrow != std::string::npos) {
      if (current.empty())
        parse_error(lineno, "action entry outside a generator block");
      auto from = trim(std::string_view(line).substr(0, arrow));
      auto to = trim(std::string_view(line).substr(arrow + 2));
      if (from.empty() || to.empty())
        parse_error(lineno, "expected 'section -> section'");
      if (!actions[current].emplace(from, to).second)
        parse_error(lineno, current + " is given twice on " + from);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      parse_error(lineno, "expected 'key: value' or 'section -> section'");
    auto key = trim(std::string_view(line).substr(0, colon));
    auto value = trim(std::string_view(line).substr(colon + 1));
    current.clear();
    if (key == "site") {
      site = parse_site(value);
    } else if (key == "truncation") {
      top = parse_int(value, lineno);
    } else if (key == "truncated") {
      if (value != "yes" && value != "no")
        parse_error(lineno, "truncated must be yes or no");
      truncated = value == "yes";
    } else if (key.rfind("level", 0) == 0) {
      int l = parse_int(trim(std::string_view(key).substr(5)), lineno);
      if (!levels.emplace(l, words(value)).second)
        parse_error(lineno, "level " + std::to_string(l) + " listed twice");
    } else {
      if (!value.empty())
        parse_error(lineno, "unexpected text after " + key + ":");
      try {
        current = Generator::parse(key).name();
      } catch (InputError const &e) {
        parse_error(lineno, e.what());
      }
      actions[current];
    }
  }
  if (!site)
    throw InputError(InputError::Kind::Parse, "missing 'site:' header");
  if (top < 0)
    throw InputError(InputError::Kind::Parse, "missing 'truncation:' header");
  std::vector<std::vector<std::string>> names(top + 1);
  for (auto &[l, ns] : levels) {
    if (l < 0 || l > top)
      throw InputError(InputError::Kind::InvalidPresheaf,
                       "level " + std::to_string(l) + " lies above the truncation");
    names[l] = std::move(ns);
  }
  return assemble(*site, top, truncated, std::move(names), actions);
}

nlohmann::json to_json(Presheaf const &x)
{
  nlohmann::json j;
  j["site"] = std::string(to_string(x.site()));
  j["truncation"] = x.top();
  j["truncated"] = x.truncated();
  j["levels"] = nlohmann::json::array();
  for (int l = 0; l <= x.top(); ++l)
    j["levels"].push_back(x.names(l));
  auto &acts = j["actions"] = nlohmann::json::object();
  auto const &gens = x.gens();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto &a = acts[gens[k].name()] = nlohmann::json::object();
    for (int u = 0; u < x.size(gens[k].target()); ++u)
      a[x.name(gens[k].target(), u)] = x.name(gens[k].source(), x.tables()[k][u]);
  }
  return j;
}

PresheafPtr presheaf_from_json(nlohmann::json const &j)
{
  try {
    Site site = parse_site(j.at("site").get<std::string>());
    int top = j.at("truncation").get<int>();
    bool truncated = j.value("truncated", false);
    auto names = j.at("levels").get<std::vector<std::vector<std::string>>>();
    std::map<std::string, std::map<std::string, std::string>> actions;
    for (auto const &[g, entries] : j.at("actions").items())
      actions[Generator::parse(g).name()] = entries.get<std::map<std::string, std::string>>();
    return assemble(site, top, truncated, std::move(names), actions);
  } catch (nlohmann::json::exception const &e) {
    throw InputError(InputError::Kind::Parse, std::string("presheaf JSON: ") + e.what());
  }
}

PresheafPtr load_presheaf(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError(InputError::Kind::Parse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const &e) {
      throw InputError(InputError::Kind::Parse, path + ": " + e.what());
    }
    return presheaf_from_json(j);
  }
  return parse_presheaf(text);
}

} // namespace qsigma
