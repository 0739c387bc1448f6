#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eqk/torsion.hpp"
#include "eqk/weight.hpp"

namespace eqk {

inline constexpr std::size_t kDefaultWeylCap = 2000;
/// Element cap used when none is passed explicitly; starts at kDefaultWeylCap.
std::size_t default_weyl_cap();
void set_default_weyl_cap(std::size_t cap);

/// Element of a Weyl group, as its matrix on the character lattice Z^r.
/// The inverse is carried along so torsion points can be moved without
/// inverting integer matrices.
struct WeylElement {
  IntMatrix matrix;
  IntMatrix inverse;

  static WeylElement identity(std::size_t rank);

  std::size_t rank() const { return matrix.rows(); }
  bool is_identity() const { return matrix == IntMatrix::identity(rank()); }
  Weight apply(const Weight& lambda) const { return matrix.apply(lambda); }
  /// w.h, characterised by lambda(w.h) = (w^{-1} lambda)(h).
  TorsionPoint apply(const TorsionPoint& q) const { return q.transform(inverse); }
  /// +1 or -1.
  long sign() const { return matrix.determinant(); }
  WeylElement inv() const { return {inverse, matrix}; }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return {a.matrix * b.matrix, b.inverse * a.inverse};
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.matrix <=> b.matrix; }
};

using WeylGroup = std::vector<WeylElement>;

/// A connected reductive group, given combinatorially on the character lattice
/// Z^r with the standard pairing. Construction validates every axiom and throws
/// PreconditionError listing all violations.
class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(std::string name, std::size_t rank, std::vector<Weight> roots,
            std::vector<Weight> coroots, std::vector<std::size_t> simple_indices);

  /// Every violated axiom, in human-readable form; empty when the data is valid.
  static std::vector<std::string> check_axioms(std::size_t rank, const std::vector<Weight>& roots,
                                               const std::vector<Weight>& coroots,
                                               const std::vector<std::size_t>& simple_indices);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& coroots() const { return coroots_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  std::size_t semisimple_rank() const { return simple_.size(); }

  bool is_positive(std::size_t root) const { return positive_[root]; }
  /// Coefficients of a root on the simple roots (in simple_indices order).
  const std::vector<int>& simple_coordinates(std::size_t root) const { return simple_coords_[root]; }
  std::optional<std::size_t> find_root(const Weight& alpha) const;
  std::vector<std::size_t> positive_roots() const;
  /// Height of the highest root (0 for a torus).
  int max_root_height() const;

  /// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha.
  WeylElement reflection(std::size_t root) const;
  /// Matrix whose rows are the simple coroots.
  IntMatrix simple_coroot_matrix() const;

  /// pi_1 = cocharacters / coroot lattice is torsion-free; equivalently the
  /// commutator subgroup is simply connected.
  bool simply_connected_commutator() const;

  /// An integral rho' with <rho', alpha_i^vee> = 1 on every simple coroot, if one exists.
  std::optional<Weight> integral_rho() const;
  /// Integral weights omega_i with <omega_i, alpha_j^vee> = delta_ij, if they exist.
  std::optional<std::vector<Weight>> fundamental_weights() const;
  /// Z-basis of the weights orthogonal to every coroot (the characters of G/G').
  std::vector<Weight> central_characters() const;

  bool is_dominant(const Weight& lambda) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_ &&
           a.simple_ == b.simple_;
  }

 private:
  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Weight> roots_;
  std::vector<Weight> coroots_;
  std::vector<std::size_t> simple_;
  std::vector<bool> positive_;
  std::vector<std::vector<int>> simple_coords_;
};

/// Labels accepted by datum_from_preset.
const std::vector<std::string>& preset_labels();
/// One of A1, A2, B2, G2, A1xA1, GL2, GL3, SL2, SL3, Sp4.
RootDatum datum_from_preset(const std::string& label);
/// Simply connected semisimple datum in fundamental-weight coordinates.
RootDatum datum_from_cartan(const std::string& name, const std::vector<std::vector<int>>& cartan);

/// Closure of the given generators under multiplication, identity first,
/// breadth-first. Throws ResourceError beyond `cap` elements.
WeylGroup generate_group(const std::vector<WeylElement>& generators, std::size_t rank,
                         std::size_t cap = default_weyl_cap());
/// Group generated by the simple reflections.
WeylGroup weyl_elements(const RootDatum& datum, std::size_t cap = default_weyl_cap());

enum class SubKind { full, levi, centralizer, torus };
std::string to_string(SubKind k);

/// An equal-rank subgroup H of G, described by its roots (indices into the
/// parent's roots) and its Weyl group W_1.
struct SubDatum {
  RootDatum parent;
  std::vector<std::size_t> roots;
  WeylGroup weyl;
  SubKind kind = SubKind::full;
  /// Simple roots of the parent spanning `roots` when the subgroup is a standard Levi.
  std::optional<std::vector<std::size_t>> levi_simple;
  bool simply_connected_commutator = true;

  std::size_t rank() const { return parent.rank(); }
  bool contains_root(std::size_t root) const;
  /// The subgroup's own root datum (name suffixed with the kind).
  RootDatum as_datum() const;
  bool is_standard_levi() const { return levi_simple.has_value(); }
  std::string describe() const;
};

SubDatum full_subdatum(const RootDatum& datum, std::size_t cap = default_weyl_cap());
SubDatum torus_subdatum(const RootDatum& datum);
/// Standard Levi spanned by the simple roots at the given positions of simple_indices().
SubDatum levi_subdatum(const RootDatum& datum, const std::vector<std::size_t>& simple_positions,
                       std::size_t cap = default_weyl_cap());
/// Centralizer of h: roots with alpha(h) = 1 and the reflection group they generate.
SubDatum centralizer_subdatum(const RootDatum& datum, const TorsionPoint& q,
                              std::size_t cap = default_weyl_cap());

struct OrbitStabilizer {
  std::vector<TorsionPoint> orbit;
  WeylGroup stabilizer;
  /// Parent has simply connected commutator, so the stabilizer must equal W(Z).
  bool lemma_applies = false;
  /// Stabilizer equals the reflection group of the centralizer.
  bool stabilizer_is_reflection_group = false;
};

/// Orbit of q under W and its stabilizer. When the parent has simply connected
/// commutator, a stabilizer larger than W(Z) is a StructuralError.
OrbitStabilizer orbit_and_stabilizer(const RootDatum& datum, const TorsionPoint& q,
                                     std::size_t cap = default_weyl_cap());

/// One representative per left coset w W1, identity first.
WeylGroup coset_representatives(const WeylGroup& w, const WeylGroup& w1);

bool contains(const WeylGroup& group, const WeylElement& w);
bool same_group(const WeylGroup& a, const WeylGroup& b);

}  // namespace eqk
