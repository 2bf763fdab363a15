#include "duval/picard_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "duval/error.hpp"

namespace duval {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::string SurfaceKind::to_string() const {
  return plane_ ? std::string("P2") : "F" + std::to_string(e_);
}

bool SurfaceModel::has_center(const CenterId& id) const noexcept {
  return std::any_of(centers_.begin(), centers_.end(),
                     [&](const BlowUpCenter& c) { return c.id == id; });
}

const BlowUpCenter& SurfaceModel::center(const CenterId& id) const {
  auto it = std::find_if(centers_.begin(), centers_.end(),
                         [&](const BlowUpCenter& c) { return c.id == id; });
  if (it == centers_.end()) throw Error(ErrorCode::InvalidCenter, "unknown center '" + id.value + "'");
  return *it;
}

std::size_t SurfaceModel::basis_index(const CenterId& id) const {
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    if (centers_[i].id == id) return base_rank() + i;
  }
  throw Error(ErrorCode::InvalidCenter, "unknown center '" + id.value + "'");
}

std::int64_t SurfaceModel::gram(std::size_t i, std::size_t j) const {
  const std::size_t base = base_rank();
  if (i >= rank() || j >= rank()) throw Error(ErrorCode::InvalidParameter, "basis index out of range");
  if (i >= base || j >= base) return (i == j) ? -1 : 0;
  if (kind_.is_plane()) return 1;
  // (C0, G): C0^2 = -e, C0.G = 1, G^2 = 0.
  if (i == 0 && j == 0) return -kind_.e();
  if (i == 1 && j == 1) return 0;
  return 1;
}

std::string SurfaceModel::basis_label(std::size_t i) const {
  const std::size_t base = base_rank();
  if (i < base) {
    if (kind_.is_plane()) return "L";
    return i == 0 ? "C0" : "G";
  }
  return "E[" + centers_.at(i - base).id.value + "]";
}

ModelPtr make_surface(SurfaceKind kind) {
  if (kind.is_hirzebruch() && kind.e() < 0) {
    throw Error(ErrorCode::InvalidParameter,
                "Hirzebruch parameter must be non-negative, got " + std::to_string(kind.e()));
  }
  return ModelPtr(new SurfaceModel(kind, {}));
}

BlowUp blow_up(const ModelPtr& surface, std::optional<CenterId> parent, std::optional<CenterId> id) {
  if (!surface) throw Error(ErrorCode::InvalidParameter, "null surface");
  if (parent && !surface->has_center(*parent)) {
    throw Error(ErrorCode::InvalidCenter, "parent center '" + parent->value + "' does not exist");
  }
  CenterId new_id;
  if (id) {
    if (id->value.empty()) throw Error(ErrorCode::InvalidCenter, "empty center id");
    if (surface->has_center(*id)) throw Error(ErrorCode::InvalidCenter, "duplicate center id '" + id->value + "'");
    new_id = *id;
  } else {
    std::size_t k = surface->centers().size() + 1;
    do {
      new_id = CenterId{"e" + std::to_string(k++)};
    } while (surface->has_center(new_id));
  }
  auto centers = surface->centers();
  centers.push_back(BlowUpCenter{new_id, std::move(parent)});
  return BlowUp{ModelPtr(new SurfaceModel(surface->kind(), std::move(centers))), new_id};
}

ModelPtr make_model(SurfaceKind kind, const std::vector<BlowUpCenter>& centers) {
  ModelPtr model = make_surface(kind);
  for (const auto& c : centers) model = blow_up(model, c.parent, c.id).model;
  return model;
}

bool same_lattice(const SurfaceModel& a, const SurfaceModel& b) noexcept {
  return &a == &b || a == b;
}

namespace {

void require_same_owner(const DivisorClass& a, const DivisorClass& b) {
  if (!same_lattice(*a.owner(), *b.owner())) {
    throw Error(ErrorCode::LatticeMismatch, "classes live on different surface models");
  }
}

}  // namespace

DivisorClass::DivisorClass(ModelPtr owner, std::vector<std::int64_t> coeffs)
    : owner_(std::move(owner)), coeffs_(std::move(coeffs)) {
  if (!owner_) throw Error(ErrorCode::InvalidParameter, "divisor class without owner");
  if (coeffs_.size() != owner_->rank()) {
    throw Error(ErrorCode::LatticeMismatch, "coefficient vector has length " + std::to_string(coeffs_.size()) +
                                                ", model rank is " + std::to_string(owner_->rank()));
  }
}

std::int64_t DivisorClass::coefficient(const CenterId& id) const {
  return coeffs_[owner_->basis_index(id)];
}

DivisorClass DivisorClass::operator-() const { return (-1) * *this; }

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_owner(a, b);
  std::vector<std::int64_t> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
  return DivisorClass(a.owner_, std::move(out));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_owner(a, b);
  std::vector<std::int64_t> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(a.coeffs_[i], b.coeffs_[i]);
  return DivisorClass(a.owner_, std::move(out));
}

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
  std::vector<std::int64_t> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(k, a.coeffs_[i]);
  return DivisorClass(a.owner_, std::move(out));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return same_lattice(*a.owner_, *b.owner_) && a.coeffs_ == b.coeffs_;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << owner_->basis_label(i);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_owner(a, b);
  const SurfaceModel& m = *a.owner();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::int64_t sum = 0;
  if (m.kind().is_plane()) {
    sum = checked_mul(ca[0], cb[0]);
  } else {
    const std::int64_t e = m.kind().e();
    sum = checked_mul(-e, checked_mul(ca[0], cb[0]));
    sum = checked_add(sum, checked_mul(ca[0], cb[1]));
    sum = checked_add(sum, checked_mul(ca[1], cb[0]));
  }
  for (std::size_t i = m.base_rank(); i < m.rank(); ++i) sum = checked_sub(sum, checked_mul(ca[i], cb[i]));
  return sum;
}

DivisorClass zero_class(const ModelPtr& model) {
  return DivisorClass(model, std::vector<std::int64_t>(model->rank(), 0));
}

DivisorClass basis_class(const ModelPtr& model, std::size_t index) {
  std::vector<std::int64_t> c(model->rank(), 0);
  c.at(index) = 1;
  return DivisorClass(model, std::move(c));
}

DivisorClass line_class(const ModelPtr& model) {
  if (!model->kind().is_plane()) throw Error(ErrorCode::InvalidParameter, "line class requested on a ruled model");
  return basis_class(model, 0);
}

DivisorClass negative_section_class(const ModelPtr& model) {
  if (!model->kind().is_hirzebruch()) throw Error(ErrorCode::InvalidParameter, "C0 requested on a plane model");
  return basis_class(model, 0);
}

DivisorClass fibre_class(const ModelPtr& model) {
  if (!model->kind().is_hirzebruch()) throw Error(ErrorCode::InvalidParameter, "fibre requested on a plane model");
  return basis_class(model, 1);
}

DivisorClass exceptional_class(const ModelPtr& model, const CenterId& id) {
  return basis_class(model, model->basis_index(id));
}

DivisorClass canonical_class(const ModelPtr& model) {
  std::vector<std::int64_t> c(model->rank(), 1);
  if (model->kind().is_plane()) {
    c[0] = -3;
  } else {
    c[0] = -2;
    c[1] = -(static_cast<std::int64_t>(model->kind().e()) + 2);
  }
  return DivisorClass(model, std::move(c));
}

DivisorClass pullback(const DivisorClass& cls, const ModelPtr& target) {
  const SurfaceModel& source = *cls.owner();
  if (!(source.kind() == target->kind())) {
    throw Error(ErrorCode::LatticeMismatch, "pullback between different base surfaces");
  }
  std::vector<std::int64_t> out(target->rank(), 0);
  for (std::size_t i = 0; i < source.base_rank(); ++i) out[i] = cls[i];
  for (std::size_t i = 0; i < source.centers().size(); ++i) {
    const BlowUpCenter& c = source.centers()[i];
    if (!target->has_center(c.id) || !(target->center(c.id) == c)) {
      throw Error(ErrorCode::LatticeMismatch, "target model does not contain center '" + c.id.value + "'");
    }
    out[target->basis_index(c.id)] = cls[source.base_rank() + i];
  }
  return DivisorClass(target, std::move(out));
}

DivisorClass from_pairings(const ModelPtr& target, std::span<const std::int64_t> pairings) {
  if (pairings.size() != target->rank()) throw Error(ErrorCode::LatticeMismatch, "pairing vector has wrong length");
  std::vector<std::int64_t> out(target->rank(), 0);
  if (target->kind().is_plane()) {
    out[0] = pairings[0];
  } else {
    // Inverse of [[-e, 1], [1, 0]] is [[0, 1], [1, e]].
    out[0] = pairings[1];
    out[1] = checked_add(pairings[0], checked_mul(target->kind().e(), pairings[1]));
  }
  for (std::size_t i = target->base_rank(); i < target->rank(); ++i) out[i] = -pairings[i];
  return DivisorClass(target, std::move(out));
}

}  // namespace duval
