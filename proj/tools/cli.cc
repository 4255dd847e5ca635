#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsigma/errors.hpp"
#include "qsigma/homotopy.hpp"
#include "qsigma/monoidal.hpp"
#include "qsigma/realize.hpp"

namespace qsigma::cli {

namespace {

using nlohmann::json;

InputError usage(std::string const &what)
{
  return InputError(InputError::Kind::Parse, what);
}

struct Context
{
  std::string site_name = "QSigma";
  int dim = -1;
  std::size_t limit = 1'000'000;
  bool json = false;
  bool verbose = false;
  std::string file;
  std::vector<std::string> args;
  int face = -1;
  int eps = -1;
  int up_to = -1;
  std::vector<std::string> perms;
  std::string from, to;
  std::ostream *out = nullptr;

  Site site() const { return parse_site(site_name); }

  int dim_or(int fallback) const { return dim >= 0 ? dim : fallback; }

  int required_dim() const
  {
    if (dim < 0)
      throw usage("--dim is required");
    return dim;
  }

  PresheafPtr input() const
  {
    if (file.empty())
      throw usage("--file is required");
    return load_presheaf(file);
  }

  std::vector<Morphism> morphisms(std::size_t at_least) const
  {
    if (args.size() < at_least)
      throw usage("expected at least " + std::to_string(at_least) + " morphisms");
    std::vector<Morphism> out;
    for (auto const &a : args)
      out.push_back(Morphism::parse(a));
    return out;
  }

  int integer(std::size_t k) const
  {
    if (k >= args.size())
      throw usage("missing integer argument");
    try {
      std::size_t used = 0;
      int v = std::stoi(args[k], &used);
      if (used != args[k].size() || v < 0)
        throw std::invalid_argument(args[k]);
      return v;
    } catch (std::logic_error const &) {
      throw usage("not a non-negative integer: " + args[k]);
    }
  }

  int emit(Morphism const &f) const
  {
    if (json)
      *out << json::object({{"morphism", f.str()}}).dump(2) << '\n';
    else
      *out << f.str() << '\n';
    return Ok;
  }

  int emit(Presheaf const &x) const
  {
    if (json)
      *out << to_json(x).dump(2) << '\n';
    else
      *out << to_text(x);
    return Ok;
  }

  int emit(std::vector<Report> const &reports) const
  {
    bool ok = true;
    auto arr = json::array();
    for (auto const &r : reports) {
      ok = ok && r.ok();
      if (json)
        arr.push_back(r.to_json());
      else
        r.print(*out, verbose);
    }
    if (json)
      *out << json::object({{"ok", ok}, {"reports", arr}}).dump(2) << '\n';
    return ok ? Ok : VerificationFailed;
  }
};

std::vector<PresheafPtr> pushout_corpus()
{
  return {representable(2, Site::QSigma),
          quotient_by_group(representable(2, Site::QSigma), {Permutation({2, 1})}).dst,
          boundary(3, Site::QSigma).src, representable(2, Site::Q), boundary(3, Site::Q).src};
}

std::vector<Report> skeletal_pushouts(std::vector<PresheafPtr> const &corpus, int up_to)
{
  std::vector<Report> out;
  for (auto const &x : corpus)
    for (int k = 0; k <= up_to; ++k) {
      auto r = verify_skeletal_pushout(x, k);
      r.title = "skeletal pushout, " + std::string(to_string(x->site())) + " presheaf of sizes " +
                json(x->sizes()).dump() + ", k=" + std::to_string(k);
      out.push_back(std::move(r));
    }
  return out;
}

Report extension_methods(int up_to)
{
  Report r;
  r.title = "extension by colimit against extension by EZ decomposition";
  std::vector<PresheafPtr> corpus = {representable(1, Site::QSigma), boundary(2, Site::QSigma).src,
                                     representable(1, Site::Q), cap(2, 1, 0).src,
                                     symmetrize(cap(2, 2, 1).src)};
  for (auto const &x : corpus)
    for (int n = x->top() + 1; n <= up_to; ++n) {
      auto c = compare_extension_methods(*x, n);
      r.add(std::string(to_string(x->site())) + " sizes " + json(x->sizes()).dump() +
                " at level " + std::to_string(n),
            c.bijective && c.colimit_count == c.ez_count,
            std::to_string(c.colimit_count) + " sections" +
                (c.detail.empty() ? "" : ", " + c.detail));
    }
  return r;
}

Report spheres(int up_to)
{
  Report r;
  r.title = "homology of cube boundaries";
  for (auto site : {Site::Q, Site::QSigma})
    for (int n = 1; n <= up_to; ++n) {
      auto h = homology(*boundary(n, site).src);
      bool ok = h.groups.size() == static_cast<std::size_t>(n + 1);
      for (int k = 0; ok && k <= n; ++k) {
        std::size_t rank = (k == 0) + (k == n - 1);
        if (n == 1 && k == 0)
          rank = 2;
        ok = h.groups[k].rank == rank && h.groups[k].torsion.empty();
      }
      std::string shown;
      for (auto const &g : h.groups)
        shown += (shown.empty() ? "" : ", ") + g.str();
      r.add(std::string(to_string(site)) + " boundary of the " + std::to_string(n) + "-cube", ok,
            shown);
    }
  return r;
}

using Handler = std::function<int(Context &)>;

std::map<std::string, Handler> handlers()
{
  std::map<std::string, Handler> h;

  h["compose"] = [](Context &c) { return c.emit(compose_all(c.morphisms(2))); };

  h["tensor"] = [](Context &c) {
    auto ms = c.morphisms(2);
    auto t = ms[0];
    for (std::size_t k = 1; k < ms.size(); ++k)
      t = tensor(t, ms[k]);
    return c.emit(t);
  };

  h["factor"] = [](Context &c) {
    if (c.args.size() != 1)
      throw usage("factor takes one morphism");
    auto f = Morphism::parse(c.args[0]);
    auto fz = factor(f);
    if (!c.json) {
      *c.out << fz.str() << '\n';
      return Ok;
    }
    auto faces = json::array();
    for (auto [i, e] : fz.faces)
      faces.push_back({i, e});
    *c.out << json::object({{"morphism", f.str()},
                            {"normal_form", fz.str()},
                            {"faces", faces},
                            {"conjunctions", fz.conjs},
                            {"permutation", fz.perm.one_line()},
                            {"permutation_cycles", fz.perm.str_cycles()},
                            {"degeneracies", fz.degens}})
                  .dump(2)
           << '\n';
    return Ok;
  };

  h["enum-hom"] = [](Context &c) {
    auto hs = enumerate_hom(c.integer(0), c.integer(1), c.site(), c.limit);
    if (c.json) {
      auto arr = json::array();
      for (auto const &f : hs)
        arr.push_back(f.str());
      *c.out << json::object({{"count", hs.size()}, {"morphisms", arr}}).dump(2) << '\n';
    } else {
      for (auto const &f : hs)
        *c.out << f.str() << '\n';
      *c.out << "total " << hs.size() << '\n';
    }
    return Ok;
  };

  h["verify-relations"] = [](Context &c) { return c.emit({verify_relations(c.dim_or(4))}); };

  h["verify-ez"] = [](Context &c) {
    int d = c.dim_or(3);
    return c.emit({verify_ez1(d), verify_ez2(d), verify_ez3(d + 1)});
  };

  h["verify-pushouts"] = [](Context &c) {
    if (c.file.empty())
      return c.emit(skeletal_pushouts(pushout_corpus(), c.dim_or(3)));
    auto x = c.input();
    return c.emit(skeletal_pushouts({x}, c.dim_or(x->top())));
  };

  h["convolve"] = [](Context &c) {
    if (c.args.size() != 2)
      throw usage("convolve takes two presheaf files");
    return c.emit(*convolve(load_presheaf(c.args[0]), load_presheaf(c.args[1])).product());
  };

  h["symmetrize"] = [](Context &c) { return c.emit(*symmetrize(c.input())); };

  h["restrict"] = [](Context &c) {
    auto y = c.input();
    return c.emit(*restriction(y, c.dim_or(y->top())));
  };

  h["skeleton"] = [](Context &c) { return c.emit(*skeleton(c.input(), c.required_dim()).src); };

  h["coskeleton"] = [](Context &c) {
    int k = c.required_dim();
    int up_to = c.up_to >= 0 ? c.up_to : k + 1;
    return c.emit(*coskeleton(c.input(), k, up_to, c.limit));
  };

  h["quotient"] = [](Context &c) {
    int n = c.required_dim();
    if (c.perms.empty())
      throw usage("--perm is required");
    std::vector<Permutation> gens;
    for (auto const &p : c.perms)
      gens.push_back(Permutation::parse(p, n));
    return c.emit(*quotient_by_group(representable(n, Site::QSigma), gens).dst);
  };

  h["cube"] = [](Context &c) { return c.emit(*representable(c.required_dim(), c.site())); };

  h["boundary"] = [](Context &c) { return c.emit(*boundary(c.required_dim(), c.site()).src); };

  h["cap"] = [](Context &c) {
    if (c.face < 1 || c.eps < 0)
      throw usage("cap needs --face and --eps");
    auto q = cap(c.required_dim(), c.face, c.eps).src;
    return c.emit(c.site() == Site::Q ? *q : *symmetrize(q));
  };

  h["realize"] = [](Context &c) {
    auto s = realize(*c.input());
    std::vector<std::size_t> nondeg;
    for (int k = 0; k <= s.top; ++k)
      nondeg.push_back(s.nondegenerate(k).size());
    if (c.json) {
      *c.out << json::object({{"simplices", s.sizes}, {"nondegenerate", nondeg}}).dump(2)
             << '\n';
    } else {
      for (int k = 0; k <= s.top; ++k)
        *c.out << "level " << k << ": " << s.sizes[k] << " simplices, " << nondeg[k]
               << " nondegenerate\n";
    }
    return Ok;
  };

  h["homology"] = [](Context &c) {
    auto h = homology(*c.input());
    if (c.json)
      *c.out << h.to_json().dump(2) << '\n';
    else
      h.print(*c.out);
    return Ok;
  };

  h["lift"] = [](Context &c) {
    auto x = c.input();
    int n = c.required_dim();
    if (n < 1)
      throw usage("lift needs --dim >= 1");
    bool horn = c.face >= 1;
    auto incl = horn ? symmetrize_map(cap(n, c.face, std::max(c.eps, 0)))
                     : boundary(n, Site::QSigma);
    int cell = incl.dst->find_label(Morphism::identity(n));
    HomSearchOptions opts;
    opts.limit = c.limit;
    auto fillers = json::array();
    std::size_t filled = 0, total = 0;
    for (auto const &u : hom_presheaf(incl.src, x, opts)) {
      auto h = solve_lifting({incl, to_point(u.dst), u, to_point(incl.dst)}, c.limit);
      if (h) {
        ++filled;
        fillers.push_back(h->dst->name(n, (*h)(n, cell)));
      } else {
        fillers.push_back(nullptr);
      }
      if (!c.json)
        *c.out << "map " << total << ": "
               << (h ? "filled by " + h->dst->name(n, (*h)(n, cell)) : std::string("no filler"))
               << '\n';
      ++total;
    }
    if (c.json)
      *c.out << json::object({{"maps", total}, {"filled", filled}, {"fillers", fillers}}).dump(2)
             << '\n';
    else
      *c.out << filled << " of " << total << " maps extend\n";
    return Ok;
  };

  h["fibrant"] = [](Context &c) { return c.emit({is_fibrant(c.input(), c.dim_or(2), c.limit)}); };

  h["homotopic"] = [](Context &c) {
    auto y = c.input();
    int a = y->find(0, c.from), b = y->find(0, c.to);
    if (a < 0 || b < 0)
      throw usage("--from and --to must name vertices");
    int n = c.dim_or(1);
    auto h = find_homotopy(vertex_map(y, a), vertex_map(y, b), n, c.limit);
    if (c.json)
      *c.out << json::object({{"homotopic", h.has_value()}, {"dimension", n}}).dump(2) << '\n';
    else
      *c.out << (h ? "homotopic" : "not homotopic") << '\n';
    return h ? Ok : VerificationFailed;
  };

  h["verify-all"] = [](Context &c) {
    int d = c.dim_or(3);
    std::vector<Report> rs = {verify_category_laws(std::min(d, 2)),
                              verify_relations(d + 1),
                              verify_normal_form(d),
                              verify_thickening(d),
                              verify_ez1(d),
                              verify_ez2(d),
                              verify_ez3(d + 1),
                              extension_methods(d),
                              verify_cubical_monoid_delta1(d),
                              spheres(d)};
    for (int n = 1; n <= d + 1; ++n)
      rs.push_back(verify_contraction(n));
    for (auto &r : skeletal_pushouts(pushout_corpus(), d))
      rs.push_back(std::move(r));
    return c.emit(rs);
  };

  return h;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  Context c;
  c.out = &out;
  CLI::App app{"Exact computation in the cube categories Q and Q_Sigma"};
  app.name("qsigma");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--site", c.site_name, "Q or QSigma")->check(CLI::IsMember({"Q", "QSigma"}));
  app.add_option("--dim", c.dim, "dimension or bound");
  app.add_option("--limit", c.limit, "resource bound on enumerations and searches");
  app.add_flag("--json", c.json, "machine-readable output");
  app.add_flag("--verbose", c.verbose, "list passing report entries too");
  app.add_option("--file", c.file, "presheaf file (text or JSON)");

  auto table = handlers();
  std::map<std::string, std::string> help = {
      {"compose", "compose morphisms, leftmost applied last"},
      {"tensor", "monoidal sum of morphisms"},
      {"factor", "normal form of a morphism"},
      {"enum-hom", "list Hom([m], [n])"},
      {"verify-relations", "check every generator relation"},
      {"verify-ez", "check the Eilenberg-Zilber axioms"},
      {"verify-pushouts", "check the skeletal pushout squares"},
      {"convolve", "Day convolution of two presheaf files"},
      {"symmetrize", "left Kan extension from Q to Q_Sigma"},
      {"restrict", "restriction from Q_Sigma to Q"},
      {"skeleton", "k-skeleton"},
      {"coskeleton", "k-coskeleton"},
      {"quotient", "quotient of a cube by permutations of its coordinates"},
      {"cube", "the representable n-cube"},
      {"boundary", "boundary of the n-cube"},
      {"cap", "the n-cube without its open (face, eps) face"},
      {"realize", "simplex counts of the realization"},
      {"homology", "integral homology of the realization"},
      {"lift", "extend every map from a boundary or cap over the cube"},
      {"fibrant", "cap-filling report"},
      {"homotopic", "search for a cube homotopy between two vertices"},
      {"verify-all", "every exhaustive suite"}};
  for (auto const &[name, text] : help) {
    auto *sub = app.add_subcommand(name, text);
    sub->add_option("args", c.args, "arguments");
    if (name == "cap" || name == "lift") {
      sub->add_option("--face", c.face, "coordinate of the missing face");
      sub->add_option("--eps", c.eps, "side of the missing face")->check(CLI::Range(0, 1));
    }
    if (name == "coskeleton")
      sub->add_option("--up-to", c.up_to, "highest level computed");
    if (name == "quotient")
      sub->add_option("--perm", c.perms, "a generating permutation, e.g. \"(1 2)\"");
    if (name == "homotopic") {
      sub->add_option("--from", c.from, "first vertex")->required();
      sub->add_option("--to", c.to, "second vertex")->required();
    }
  }

  std::vector<std::string> argv_s = {"qsigma"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char const *> argv;
  for (auto const &a : argv_s)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const &e) {
    app.exit(e, out, err);
    return Ok;
  } catch (CLI::CallForAllHelp const &e) {
    app.exit(e, out, err);
    return Ok;
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return BadInput;
  }

  auto name = app.get_subcommands().front()->get_name();
  try {
    return table.at(name)(c);
  } catch (ResourceBound const &e) {
    err << "resource bound: " << e.what() << '\n';
    return TooLarge;
  } catch (InputError const &e) {
    err << "input error: " << e.what() << '\n';
    return BadInput;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  }
}

} // namespace qsigma::cli
