#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "qsigma/permutation.hpp"
#include "qsigma/report.hpp"
#include "qsigma/site.hpp"

namespace qsigma {

class Presheaf;
using PresheafPtr = std::shared_ptr<Presheaf const>;

/// A finite presheaf on Q or Q_Sigma, stored as its levels 0..top() and the
/// action of every generator between those levels.
///
/// Unless truncated() is set the stored data denotes its own skeletal
/// extension: the value at a level above top() is the left Kan extension of
/// the stored part. A truncated presheaf says nothing above top().
class Presheaf
{
public:
  using Labels = std::vector<std::vector<std::optional<Morphism>>>;

  /// tables[g] lists, for generator g = generators(site, top)[g] acting
  /// X_target -> X_source, the image of every section. Shapes are checked;
  /// functoriality is not (see audit()).
  Presheaf(Site site, int top, std::vector<std::vector<std::string>> names,
           std::vector<std::vector<int>> tables, bool truncated = false, Labels labels = {});

  Site site() const { return _site; }
  int top() const { return _top; }
  bool truncated() const { return _truncated; }

  int size(int level) const;
  std::vector<std::size_t> sizes() const;
  std::size_t total_size() const;

  std::string const &name(int level, int id) const { return _names[level][id]; }
  std::vector<std::string> const &names(int level) const { return _names[level]; }
  /// Index of the named section at the level, or -1.
  int find(int level, std::string_view name) const;

  bool has_labels() const { return !_labels.empty(); }
  std::optional<Morphism> const &label(int level, int id) const;
  /// Index of the section labelled f, or -1.
  int find_label(Morphism const &f) const;

  std::vector<Generator> const &gens() const { return _gens; }
  /// Index of g in gens(), or -1.
  int gen_index(Generator const &g) const;
  std::vector<std::vector<int>> const &tables() const { return _tables; }

  int act(Generator const &g, int x) const;
  /// f^*: X_{f.dst()} -> X_{f.src()}.
  int act(Morphism const &f, int x) const;

  /// Every relation instance of the site between stored levels, and
  /// f^* g^* = (g f)^* for every generator g and morphism f between stored
  /// levels. The latter makes the induced action a functor.
  Report audit() const;

  /// Same site, levels, names and tables.
  friend bool operator==(Presheaf const &a, Presheaf const &b);

  /// Flag as truncated without changing data.
  PresheafPtr as_truncated() const;

private:
  Site _site;
  int _top;
  bool _truncated;
  std::vector<std::vector<std::string>> _names;
  std::vector<std::unordered_map<std::string, int>> _name_index;
  Labels _labels;
  std::unordered_map<Morphism, std::pair<int, int>, MorphismHash> _label_index;
  std::vector<Generator> _gens;
  std::map<Generator, int> _gen_index;
  std::vector<std::vector<int>> _tables;
};

/// A levelwise map between two presheaves stored to the same top level.
struct PresheafMap
{
  PresheafPtr src;
  PresheafPtr dst;
  std::vector<std::vector<int>> at;

  int operator()(int level, int x) const { return at[level][x]; }

  /// Commutes with every generator.
  Report check() const;
  bool natural() const { return check().ok(); }
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
};

PresheafMap identity_map(PresheafPtr const &x);
/// g after f.
PresheafMap compose(PresheafMap const &g, PresheafMap const &f);
bool operator==(PresheafMap const &a, PresheafMap const &b);

// ------------------------------------------------------------- builders

/// Presheaf whose sections are morphisms into [n], acted on by
/// precomposition and then normalised by canon. labels[m] must be closed
/// under the action after canonicalisation.
PresheafPtr presheaf_of_labels(Site site, int n, int top,
                               std::vector<std::vector<Morphism>> const &labels,
                               std::function<Morphism(Morphism const &)> const &canon = {});

PresheafPtr representable(int n, Site site, int top = -1);
/// The empty presheaf stored to level top.
PresheafPtr empty_presheaf(Site site, int top);
/// The terminal presheaf (= representable(0)) stored to level top.
PresheafPtr point(Site site, int top = 0);

/// Sections admitting a factorization through a lower cube; as a subobject
/// of representable(n). n = 0 gives the empty presheaf. top defaults to n.
PresheafMap boundary(int n, Site site, int top = -1);
/// The union of all codimension-one faces except the (i, eps) face, over Q.
PresheafMap cap(int n, int i, int eps, int top = -1);

/// The subpresheaf on the marked sections, which must be closed under the
/// action, with its inclusion.
PresheafMap subpresheaf(PresheafPtr const &x, std::vector<std::vector<bool>> const &keep);
/// Image of a map as a subpresheaf of the target.
PresheafMap image(PresheafMap const &f);

// ------------------------------------------------- degeneracy and skeleta

/// Epimorphisms [r] -> [r-1] of the site.
std::vector<Morphism> const &codim_one_epis(int r, Site site);

bool is_degenerate(Presheaf const &x, int level, int id);
std::vector<int> nondegenerate_sections(Presheaf const &x, int level);

struct EZDecomposition
{
  Morphism epi;
  int level = 0;
  int id = 0;
};

/// x = epi^* y with y nondegenerate.
EZDecomposition ez_decompose_section(Presheaf const &x, int level, int id);

/// Subpresheaf of sections whose nondegenerate part lies in degree <= k.
PresheafMap skeleton(PresheafPtr const &x, int k);

/// Levels 0..k only, flagged truncated when k < top().
PresheafPtr truncate(PresheafPtr const &x, int k);

/// Right Kan extension along the degree <= k inclusion, computed at levels
/// 0..up_to as Hom(sk_k cube(r), X). Truncated.
PresheafPtr coskeleton(PresheafPtr const &x, int k, int up_to, std::size_t limit = 1'000'000);

// ------------------------------------------------------------ extension

/// The same (skeletal) presheaf stored to a higher level; x itself when
/// top <= x->top(). Throws TruncationMismatch for truncated input.
PresheafPtr extend(PresheafPtr const &x, int top);
/// Extend a map along the extension of its source and target.
PresheafMap extend_map(PresheafMap const &f, int top);

struct ExtensionComparison
{
  std::size_t colimit_count = 0;   // union-find over naturality relations
  std::size_t ez_count = 0;        // (epi, nondegenerate) pairs modulo Aut
  bool bijective = false;
  std::string detail;
};

/// Compute level n > top() by the colimit quotient and by EZ
/// classification and compare them through an explicit bijection.
ExtensionComparison compare_extension_methods(Presheaf const &x, int n);

// ------------------------------------------------------------ hom-sets

struct HomSearchOptions
{
  /// Fixed values: forced[level][x] >= 0 pins the image of x.
  std::vector<std::vector<int>> forced;
  /// Optional filter on candidate images.
  std::function<bool(int level, int x, int y)> allowed;
  std::size_t limit = 1'000'000;
  /// Stop after the first solution.
  bool first_only = false;
};

/// All natural transformations X -> Y in canonical order. The one stored
/// to the lower level is extended first, so the maps share a top level.
/// Throws ResourceBound past options.limit solutions.
std::vector<PresheafMap> hom_presheaf(PresheafPtr const &x, PresheafPtr const &y,
                                      HomSearchOptions const &options = {});

// ----------------------------------------------------------- colimits

struct Pushout
{
  PresheafPtr object;
  PresheafMap from_b;
  PresheafMap from_c;
};

/// Levelwise pushout of B <- A -> C.
Pushout pushout(PresheafMap const &f, PresheafMap const &g);

struct Coproduct
{
  PresheafPtr object;
  std::vector<PresheafMap> injections;
};

Coproduct coproduct(std::vector<PresheafPtr> const &parts, Site site, int top);

/// The unique map into the terminal presheaf.
PresheafMap to_point(PresheafPtr const &x);

// ------------------------------------------------------- group actions

/// Orbits of a labelled presheaf (sections morphisms into [n], closed under
/// f -> pi_h f) under a subgroup of Sigma_n, with the quotient map.
PresheafMap quotient_by_group(PresheafPtr const &x, std::vector<Permutation> const &generators);
/// The permutations p of the level with pi_p^* x = x.
std::vector<Permutation> stabilizer(Presheaf const &x, int level, int id);

/// Checks that sk_k X is the pushout of sk_{k-1} X along the coproduct of
/// Stab(f)\boundary -> Stab(f)\cube over isomorphism classes of
/// nondegenerate k-sections.
Report verify_skeletal_pushout(PresheafPtr const &x, int k);

// ----------------------------------------------------------------- io

/// Text format, see the README.
std::string to_text(Presheaf const &x);
PresheafPtr parse_presheaf(std::string_view text);
nlohmann::json to_json(Presheaf const &x);
PresheafPtr presheaf_from_json(nlohmann::json const &j);
/// Text or JSON, chosen by the first non-blank character.
PresheafPtr load_presheaf(std::string const &path);

} // namespace qsigma
