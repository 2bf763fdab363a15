#pragma once

// Divisor-class lattices of the projective plane, the Hirzebruch surfaces
// F_e, and their iterated blow-ups at (possibly infinitely near) points.
//
// Classes are written in the total-transform basis: the pullback of the base
// generators (L on the plane, C0 and the fibre G on F_e) followed by one
// class E_i* per blow-up center, where E_i* is the full pullback of the
// point blown up at step i. In that basis the pairing is diagonal on the
// exceptional part, E_i*.E_j* = -delta_ij, and pullback to a larger model
// is just zero-padding.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace duval {

struct CenterId {
  std::string value;

  friend auto operator<=>(const CenterId&, const CenterId&) = default;
};

class SurfaceKind {
 public:
  static SurfaceKind plane() noexcept { return SurfaceKind(true, 0); }
  static SurfaceKind hirzebruch(int e) noexcept { return SurfaceKind(false, e); }

  bool is_plane() const noexcept { return plane_; }
  bool is_hirzebruch() const noexcept { return !plane_; }
  /// Self-intersection of the negative section is -e. Zero on the plane.
  int e() const noexcept { return e_; }

  std::string to_string() const;

  friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;

 private:
  SurfaceKind(bool plane, int e) noexcept : plane_(plane), e_(e) {}

  bool plane_;
  int e_;
};

struct BlowUpCenter {
  CenterId id;
  /// Unset for a point of the base surface; otherwise the center whose
  /// exceptional curve carries this point.
  std::optional<CenterId> parent;

  friend bool operator==(const BlowUpCenter&, const BlowUpCenter&) = default;
};

class SurfaceModel;
using ModelPtr = std::shared_ptr<const SurfaceModel>;
struct BlowUp;

/// A base surface together with an ordered list of blow-up centers. Once
/// built a model never changes; blowing up returns a new model.
class SurfaceModel {
 public:
  const SurfaceKind& kind() const noexcept { return kind_; }
  const std::vector<BlowUpCenter>& centers() const noexcept { return centers_; }

  std::size_t base_rank() const noexcept { return kind_.is_plane() ? 1 : 2; }
  std::size_t rank() const noexcept { return base_rank() + centers_.size(); }

  bool has_center(const CenterId& id) const noexcept;
  const BlowUpCenter& center(const CenterId& id) const;
  /// Position of E* for `id` in a coefficient vector.
  std::size_t basis_index(const CenterId& id) const;

  /// Gram matrix entry for basis elements i and j.
  std::int64_t gram(std::size_t i, std::size_t j) const;
  std::string basis_label(std::size_t i) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  SurfaceModel(SurfaceKind kind, std::vector<BlowUpCenter> centers)
      : kind_(kind), centers_(std::move(centers)) {}

  friend ModelPtr make_surface(SurfaceKind kind);
  friend BlowUp blow_up(const ModelPtr& surface, std::optional<CenterId> parent,
                        std::optional<CenterId> id);

  SurfaceKind kind_;
  std::vector<BlowUpCenter> centers_;
};

ModelPtr make_surface(SurfaceKind kind);

struct BlowUp {
  ModelPtr model;
  CenterId center;
};

/// Blows up a point of `surface`: a point of the base when `parent` is unset,
/// otherwise a point on the exceptional curve of `parent`. A fresh id is
/// generated when none is supplied.
BlowUp blow_up(const ModelPtr& surface, std::optional<CenterId> parent,
               std::optional<CenterId> id = std::nullopt);

/// Builds base + centers by repeated blow_up, validating each step.
ModelPtr make_model(SurfaceKind kind, const std::vector<BlowUpCenter>& centers);

/// True when both models describe the same lattice (same base, same forest
/// in the same order).
bool same_lattice(const SurfaceModel& a, const SurfaceModel& b) noexcept;

class DivisorClass {
 public:
  DivisorClass(ModelPtr owner, std::vector<std::int64_t> coeffs);

  const ModelPtr& owner() const noexcept { return owner_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Coefficient of E* for the given center.
  std::int64_t coefficient(const CenterId& id) const;

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  /// Human-readable form such as "14L - 6E[gamma] - 4E[p1]".
  std::string to_string() const;

 private:
  ModelPtr owner_;
  std::vector<std::int64_t> coeffs_;
};

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

DivisorClass zero_class(const ModelPtr& model);
DivisorClass basis_class(const ModelPtr& model, std::size_t index);
/// Pullback of a line; plane-based models only.
DivisorClass line_class(const ModelPtr& model);
/// Pullback of C0; Hirzebruch-based models only.
DivisorClass negative_section_class(const ModelPtr& model);
/// Pullback of a fibre; Hirzebruch-based models only.
DivisorClass fibre_class(const ModelPtr& model);
/// Total transform E* of the point blown up at `id`.
DivisorClass exceptional_class(const ModelPtr& model, const CenterId& id);

/// K = pullback(K_base) + sum of all E*.
DivisorClass canonical_class(const ModelPtr& model);

/// Total transform to a model whose forest contains every center of the
/// class's owner (matched by id, with the same parents).
DivisorClass pullback(const DivisorClass& cls, const ModelPtr& target);

/// Recovers the class on `target` whose pairings with the target basis
/// elements are `pairings`. The target Gram matrix is unimodular, so the
/// result is integral.
DivisorClass from_pairings(const ModelPtr& target, std::span<const std::int64_t> pairings);

}  // namespace duval
