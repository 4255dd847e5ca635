#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsigma/permutation.hpp"
#include "qsigma/report.hpp"

namespace qsigma {

/// The box category Q, or the symmetric cubical category Q_Sigma.
enum class Site { Q, QSigma };

std::string_view to_string(Site site);
Site parse_site(std::string_view text);

/// One coordinate of a formal cubical product: the numeral 0 or 1, or an
/// ordered conjunction of distinct symbols x_i (stored as the indices i).
class Entry
{
public:
  static Entry constant(int bit);
  static Entry conj(std::vector<int> symbols);

  bool is_constant() const { return _bit >= 0; }
  int bit() const { return _bit; }
  std::vector<int> const &symbols() const { return _symbols; }

  std::string str() const;

  friend bool operator==(Entry const &, Entry const &) = default;
  /// Const 0 < Const 1 < every conjunction; conjunctions lexicographically.
  friend std::strong_ordering operator<=>(Entry const &a, Entry const &b);

private:
  int _bit = -1;
  std::vector<int> _symbols;
};

/// A formal cubical (m,n)-product, i.e. an arrow [m] -> [n] of Q_Sigma.
class Morphism
{
public:
  Morphism() = default;
  /// Validates: symbols in 1..src, no symbol repeated across all entries,
  /// conjunctions nonempty.
  Morphism(int src, std::vector<Entry> entries);

  static Morphism identity(int n);
  /// Accepts "(x3, 1, x1^x5^x2, 0) : 5 -> 4"; whitespace is insignificant.
  static Morphism parse(std::string_view text);

  int src() const { return _src; }
  int dst() const { return static_cast<int>(_entries.size()); }
  std::vector<Entry> const &entries() const { return _entries; }
  Entry const &operator[](int k) const { return _entries[k]; }

  /// Canonical text "(x3,1,x1^x5^x2,0):5->4".
  std::string str() const;
  /// Just the tuple, "(x3,1,x1^x5^x2,0)".
  std::string tuple_str() const;

  bool is_identity() const;

  friend bool operator==(Morphism const &, Morphism const &) = default;
  friend std::strong_ordering operator<=>(Morphism const &a, Morphism const &b);

private:
  int _src = 0;
  std::vector<Entry> _entries;
};

struct MorphismHash
{
  std::size_t operator()(Morphism const &f) const noexcept;
};

/// g o f: substitute the entries of f for the symbols of g, drop 1s inside
/// conjunctions, collapse conjunctions containing 0.
Morphism compose(Morphism const &g, Morphism const &f);
/// Composite of a word read as written: compose_all({a, b, c}) = a o b o c.
Morphism compose_all(std::vector<Morphism> const &word);

/// The monoidal product: shift the symbols of g by f.src() and concatenate.
Morphism tensor(Morphism const &f, Morphism const &g);
/// The symmetry [m] + [n] -> [n] + [m].
Morphism symmetry(int m, int n);

/// delta^{i,eps}_n : [n] -> [n+1], inserts eps at position i.
Morphism coface(int n, int i, int eps);
/// sigma^i_n : [n+1] -> [n], omits x_i.
Morphism codegeneracy(int n, int i);
/// gamma^i_n : [n+1] -> [n], conjoins x_i ^ x_{i+1}.
Morphism conjunction(int n, int i);
/// pi_p : [n] -> [n], the tuple (x_{p^-1(1)}, ..., x_{p^-1(n)}).
Morphism cosymmetry(Permutation const &p);
/// The vertex (eps, ..., eps) : [0] -> [n].
Morphism constant_vertex(int n, int eps);

/// A generating arrow of the sites, named by the paper-style subscript n
/// (faces go [n] -> [n+1]; degeneracies and conjunctions [n+1] -> [n];
/// transpositions [n] -> [n]).
struct Generator
{
  enum class Kind { Face, Degeneracy, Conjunction, Transposition };

  Kind kind = Kind::Face;
  int n = 0;
  int i = 1;
  int eps = 0;

  static Generator face(int n, int i, int eps) { return {Kind::Face, n, i, eps}; }
  static Generator degeneracy(int n, int i) { return {Kind::Degeneracy, n, i, 0}; }
  static Generator conj(int n, int i) { return {Kind::Conjunction, n, i, 0}; }
  static Generator transposition(int n, int i) { return {Kind::Transposition, n, i, 0}; }

  int source() const;
  int target() const;
  Morphism morphism() const;

  /// "delta[2,0]_1", "sigma[1]_0", "gamma[1]_1", "swap[1]_2".
  std::string name() const;
  static Generator parse(std::string_view text);

  friend bool operator==(Generator const &, Generator const &) = default;
  friend auto operator<=>(Generator const &, Generator const &) = default;
};

/// Every generator of the site whose source and target lie in 0..max_dim,
/// in a fixed canonical order.
std::vector<Generator> generators(Site site, int max_dim);

/// True iff f is an arrow of the box category: no conjunction of length
/// >= 2 and symbols strictly increasing left to right.
bool in_box_category(Morphism const &f);

/// The unique normal form  delta...delta gamma...gamma pi sigma...sigma.
struct Factorization
{
  int src = 0;
  int dst = 0;
  /// (i, eps), i strictly decreasing, leftmost first.
  std::vector<std::pair<int, int>> faces;
  /// Strictly increasing.
  std::vector<int> conjs;
  Permutation perm;
  /// Strictly increasing.
  std::vector<int> degens;

  /// The object between the degeneracies and the permutation.
  int middle() const { return src - static_cast<int>(degens.size()); }

  bool well_formed() const;
  /// The generators in composition order (leftmost applied last); the
  /// permutation is expanded into adjacent transpositions.
  std::vector<Generator> word() const;
  Morphism evaluate() const;
  std::string str() const;

  friend bool operator==(Factorization const &, Factorization const &) = default;
};

Factorization factor(Morphism const &f);
/// Every well-formed factorization with the given source and target.
std::vector<Factorization> enumerate_factorizations(int m, int n);

/// Complete, duplicate-free, canonically ordered Hom([m],[n]).
/// Throws ResourceBound when more than `limit` elements would be produced.
std::vector<Morphism> enumerate_hom(int m, int n, Site site,
                                    std::size_t limit = 1'000'000);

/// A cached enumeration of a hom-set with an index.
class HomSet
{
public:
  HomSet(int m, int n, Site site, std::size_t limit);

  int src() const { return _m; }
  int dst() const { return _n; }
  std::size_t size() const { return _elements.size(); }
  Morphism const &operator[](std::size_t k) const { return _elements[k]; }
  std::vector<Morphism> const &elements() const { return _elements; }
  /// Position of f in the canonical order, or -1.
  int index(Morphism const &f) const;

private:
  int _m, _n;
  std::vector<Morphism> _elements;
  std::unordered_map<Morphism, int, MorphismHash> _index;
};

/// Shared, thread-safe cache of hom-sets.
HomSet const &hom_set(int m, int n, Site site);

struct Classification
{
  bool in_Q = false;
  bool in_plus = false;
  bool in_minus = false;
  bool is_mono = false;
  bool is_epi = false;
  bool is_iso = false;
};

Classification classify(Morphism const &f);

/// Image of every vertex {0,1}^m under f; vertices are indexed by the
/// integer whose bit (m-k) is coordinate k.
std::vector<std::vector<int>> vertices_action(Morphism const &f);

/// Split epimorphism followed by monomorphism; mono o epi = f.
struct EpiMono
{
  Morphism epi;
  Morphism mono;
};

EpiMono ez_factor(Morphism const &f);

/// A section of the epimorphism e, i.e. s with e o s = id.
Morphism epi_section(Morphism const &e);

/// A commuting square  top: A -> B, left: A -> C, right: B -> P,
/// bottom: C -> P  with section data d0: P -> B, d1: C -> A, d2': B -> A.
struct SplitPushout
{
  Morphism top, left, right, bottom;
  Morphism d0, d1, d2prime;
  /// True when top is the second epimorphism handed to split_pushout.
  bool transposed = false;
  /// Which construction produced the witness.
  std::string rule;

  /// d1' = d2' d0 p2.
  Morphism d1prime() const;
  /// The commuting square and the six split-pushout identities, by name.
  std::vector<std::pair<std::string, bool>> check() const;
  bool valid() const;

  /// The cocone legs out of the targets of the first and second input.
  Morphism const &tau_first() const { return transposed ? bottom : right; }
  Morphism const &tau_second() const { return transposed ? right : bottom; }
};

/// An absolute pushout of two epimorphisms with a common source. Single
/// generator pairs use the case tables for sigma/gamma squares; other pairs
/// fall back to a bounded witness search. Throws NotEpi.
SplitPushout split_pushout(Morphism const &e1, Morphism const &e2);

/// Whether the commuting square top: A -> B, left: A -> C, right: B -> P,
/// bottom: C -> P is an absolute pushout. Decided by the representable
/// Hom(P, -): the square is absolute iff that functor carries it to a
/// pushout of sets.
bool is_absolute_pushout(Morphism const &top, Morphism const &left, Morphism const &right,
                         Morphism const &bottom);

/// Cocone legs (tau_first, tau_second) of an absolute pushout of two
/// epimorphisms with split-epi legs, or nothing if none exists.
std::optional<std::pair<Morphism, Morphism>> absolute_pushout(Morphism const &e1,
                                                              Morphism const &e2);

/// Classification of all ordered pairs of epimorphisms out of [n], n <= n_max.
struct PushoutSurvey
{
  std::size_t pairs = 0;
  std::size_t split = 0;
  std::size_t absolute_only = 0;
  /// Spans with no absolute pushout at all.
  std::vector<std::pair<Morphism, Morphism>> no_absolute;
};

PushoutSurvey survey_epi_pushouts(int n_max);

/// One instance of a defining relation between generators.
struct RelationInstance
{
  std::string label;
  int src = 0;
  std::vector<Generator> lhs;
  std::vector<Generator> rhs;
};

/// All instances of the cocubical and conjunction relations whose objects
/// are at most n_max. With site Q only the cocubical ones.
std::vector<RelationInstance> relation_instances(int n_max, Site site = Site::QSigma);
Morphism evaluate_word(std::vector<Generator> const &word, int src);

Report verify_relations(int n_max);

/// Associativity, identity laws, interchange and symmetry naturality over
/// all objects <= n_max.
Report verify_category_laws(int n_max);
/// factor round-trips and is a bijection onto well-formed factorizations.
Report verify_normal_form(int n_max);
/// Aut([m]) x Q+(m,n) -> Q_Sigma+(m,n), (p, d) -> d o p, is a bijection.
Report verify_thickening(int n_max);
/// Monomorphisms raise degree; an equal-degree mono is an isomorphism.
Report verify_ez1(int n_max);
/// Epi-mono factorizations exist and any two are related by exactly one
/// cosymmetry.
Report verify_ez2(int n_max);
/// Split pushouts for every ordered pair of epi generators out of [n].
Report verify_ez3(int n_max);

} // namespace qsigma
