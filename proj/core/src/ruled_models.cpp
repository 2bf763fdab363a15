#include "duval/ruled_models.hpp"

#include <algorithm>

#include "duval/error.hpp"

namespace duval {

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::SI: return "S_I";
    case ShapeKind::SII: return "S_II";
    case ShapeKind::Eliminated: return "Eliminated";
    case ShapeKind::NotInList: return "NotInList";
  }
  return "?";
}

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::ElementaryOnSection: return "elementary_on_section";
    case TransformKind::ElementaryOffSection: return "elementary_off_section";
    case TransformKind::ContractNegativeSection: return "contract_negative_section";
    case TransformKind::CremonaQuadratic: return "cremona_quadratic";
  }
  return "?";
}

namespace {

int count_of(const std::vector<std::pair<int, int>>& pairs, int key) {
  int total = 0;
  for (const auto& [k, c] : pairs) {
    if (k == key) total += c;
  }
  return total;
}

}  // namespace

ShapeVerdict shape_admissible(const RuledBranchShape& s) {
  if (s.xi < 8) return {ShapeKind::NotInList, std::nullopt, "xi < 8 is the standard case"};
  if (s.e < 0) return {ShapeKind::NotInList, std::nullopt, "negative e"};
  if ((s.xi * s.e) % 2 != 0) return {ShapeKind::NotInList, std::nullopt, "xi*e/2 + zeta is not an integer"};

  if (s.xi == 8 && s.zeta == 6) return {ShapeKind::SI, std::nullopt, "xi = 8, zeta = 6"};
  if (s.xi == 8 && s.zeta > 8 && s.zeta % 2 == 0) {
    const int i = (s.zeta - 8) / 2;
    if (i > 5) return {ShapeKind::NotInList, std::nullopt, "zeta = 8 + 2i needs i <= 5"};
    if (count_of(s.rr_points, 5) != i + 1) {
      return {ShapeKind::NotInList, std::nullopt,
              "zeta = 8 + 2i needs exactly " + std::to_string(i + 1) + " [5,5]-points"};
    }
    if (4 * s.e > 7 + i) return {ShapeKind::NotInList, std::nullopt, "e exceeds (7 + i)/4"};
    return {ShapeKind::SII, i, "xi = 8, zeta = 8 + 2i"};
  }
  if (s.xi == 12 && s.zeta == 14 && count_of(s.rr_points, 7) == 3) {
    return {ShapeKind::Eliminated, std::nullopt, "three [7,7]-points: ruled out by a rational pencil"};
  }
  if (s.xi == 16 && s.zeta == 18 && count_of(s.rr_points, 9) == 3 && count_of(s.extra, 8) >= 1) {
    return {ShapeKind::Eliminated, std::nullopt,
            "three [9,9]-points and an 8-tuple point: ruled out by a rational pencil"};
  }
  return {ShapeKind::NotInList, std::nullopt, "not one of the four shapes"};
}

BranchModel xiao_branch(XiaoCase which) {
  const ModelPtr w0 = make_model(SurfaceKind::plane(), {{CenterId{"p0"}, std::nullopt}});
  const DivisorClass l = line_class(w0);
  const DivisorClass e0 = exceptional_class(w0, CenterId{"p0"});
  // aC0 + bG = aE0 + b(L - E0)
  const bool iii = which == XiaoCase::III;
  const std::int64_t a = iii ? 12 : 16;
  const std::int64_t b = iii ? 20 : 26;
  const int r = iii ? 7 : 9;
  BranchModel out{w0, b * l + (a - b) * e0, {}};
  for (int i = 1; i <= 3; ++i) {
    const std::string p = "p" + std::to_string(i);
    out.singularities.push_back(RRpoint{CenterId{p}, CenterId{p + "'"}, r, std::nullopt});
  }
  if (!iii) out.singularities.push_back(Mtuple{CenterId{"s"}, 8, std::nullopt});
  return out;
}

EliminationCertificate eliminate_xiao_case(XiaoCase which) {
  const BranchModel branch = xiao_branch(which);
  const ResolvedCover cover = resolve(branch);
  const ModelPtr& w = cover.model;
  const CenterId p0{"p0"};

  DivisorClass d = 5 * line_class(w) - exceptional_class(w, p0);
  for (int i = 1; i <= 3; ++i) {
    const std::string p = "p" + std::to_string(i);
    d = d - 2 * exceptional_class(w, CenterId{p}) - 2 * exceptional_class(w, CenterId{p + "'"});
  }

  EliminationCertificate cert;
  cert.which = which;
  const DivisorClass fibre = line_class(w) - exceptional_class(w, p0);
  const DivisorClass b0 = pullback(branch.branch_class, w);
  cert.xi = intersect(fibre, b0);
  cert.d_squared = intersect(d, d);
  cert.d_dot_k = intersect(d, canonical_class(w));
  cert.d_dot_e0 = intersect(d, exceptional_class(w, p0));
  cert.d_dot_base_branch = intersect(d, b0);
  cert.d_dot_branch = intersect(d, cover.smooth_class);
  // C0 + G = L on the plane model.
  cert.section_dot_branch = intersect(line_class(w), b0);
  cert.section_bound = 3 * (which == XiaoCase::III ? 7 : 9);
  cert.assumptions = {
      "p1, p2, p3 lie on distinct fibres",
      "p1, p2, p3 are not on one section in |C0 + G|",
      "p0 is a point of C0 off the fibres through p1, p2, p3",
      "the quintics of D through p0 and the [r,r]-pairs form a pencil",
  };
  if (which == XiaoCase::IV) cert.assumptions.push_back("the 8-tuple point is not a base point of |D|");
  return cert;
}

DivisorClass TransformStep::apply(const DivisorClass& cls) const {
  if (!same_lattice(*cls.owner(), *source)) {
    throw Error(ErrorCode::LatticeMismatch, "class is not on the transform's source model");
  }
  std::vector<std::int64_t> pairings;
  pairings.reserve(basis_images.size());
  for (const auto& img : basis_images) pairings.push_back(intersect(cls, img));
  return from_pairings(target, pairings);
}

DivisorClass TransformStep::apply_inverse(const DivisorClass& cls) const {
  if (!same_lattice(*cls.owner(), *target)) {
    throw Error(ErrorCode::LatticeMismatch, "class is not on the transform's target model");
  }
  DivisorClass out = zero_class(source);
  for (std::size_t i = 0; i < basis_images.size(); ++i) out = out + cls[i] * basis_images[i];
  return out;
}

bool TransformStep::is_isometry() const {
  if (basis_images.size() != target->rank() || source->rank() != target->rank()) return false;
  for (std::size_t i = 0; i < basis_images.size(); ++i) {
    for (std::size_t j = 0; j < basis_images.size(); ++j) {
      if (intersect(basis_images[i], basis_images[j]) != target->gram(i, j)) return false;
    }
  }
  return true;
}

namespace {

void require_bare_hirzebruch(const BranchModel& branch, const char* what) {
  if (!branch.ambient || !branch.ambient->kind().is_hirzebruch() || !branch.ambient->centers().empty()) {
    throw Error(ErrorCode::InvalidTransform, std::string(what) + " needs a branch on a Hirzebruch surface");
  }
}

// Drops the assignment sitting at `p` and turns points infinitely near p
// into plain points of the new surface.
std::vector<SingularityAssignment> transport_past(const std::vector<SingularityAssignment>& in, const CenterId& p) {
  std::vector<SingularityAssignment> out;
  for (const auto& s : in) {
    if (const auto* mt = std::get_if<Mtuple>(&s)) {
      if (mt->center == p) continue;
      Mtuple copy = *mt;
      if (copy.parent == p) copy.parent.reset();
      out.push_back(copy);
    } else {
      const auto& rr = std::get<RRpoint>(s);
      if (rr.p == p) {
        out.push_back(Mtuple{rr.p_prime, rr.r + rr.r % 2, std::nullopt});
        continue;
      }
      RRpoint copy = rr;
      if (copy.parent == p) copy.parent.reset();
      out.push_back(copy);
    }
  }
  return out;
}

std::vector<std::int64_t> base_part(const DivisorClass& cls) {
  const auto c = cls.coeffs();
  return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cls.owner()->base_rank())};
}

}  // namespace

ElementaryResult elementary_transform(const BranchModel& branch, const ElementaryCenter& center) {
  require_bare_hirzebruch(branch, "elementary transformation");
  if (center.multiplicity < 0) throw Error(ErrorCode::InvalidParameter, "negative multiplicity");
  const int e = branch.ambient->kind().e();
  const int e_new = center.on_negative_section ? e + 1 : e - 1;
  if (e_new < 0) {
    throw Error(ErrorCode::InvalidTransform, "elm at a point off C0 on F0 would give e = -1");
  }
  const CenterId q = center.new_point.value_or(CenterId{center.point.value + "~"});

  const ModelPtr w = blow_up(branch.ambient, std::nullopt, center.point).model;
  const ModelPtr w_new = make_model(SurfaceKind::hirzebruch(e_new), {{q, std::nullopt}});
  const DivisorClass c0 = negative_section_class(w);
  const DivisorClass g = fibre_class(w);
  const DivisorClass ep = exceptional_class(w, center.point);

  TransformStep step{center.on_negative_section ? TransformKind::ElementaryOnSection
                                                : TransformKind::ElementaryOffSection,
                     w,
                     w_new,
                     {center.on_negative_section ? c0 - ep : c0 + g - ep, g, g - ep}};

  const int a = center.multiplicity / 2;
  const DivisorClass x = pullback(branch.branch_class, w) - (2 * a) * ep;
  const DivisorClass y = step.apply(x);
  const std::int64_t c = -y.coefficient(q);

  const ModelPtr f_new = make_surface(SurfaceKind::hirzebruch(e_new));
  ElementaryResult out{BranchModel{f_new, DivisorClass(f_new, base_part(y)),
                                   transport_past(branch.singularities, center.point)},
                       step, q, static_cast<int>(c + (center.fibre_in_branch ? 1 : 0)),
                       center.multiplicity % 2 != 0};
  if (out.new_multiplicity >= 2) out.branch.singularities.push_back(Mtuple{q, out.new_multiplicity, std::nullopt});
  return out;
}

ContractionResult contract_negative_section(const BranchModel& branch, bool c0_in_branch, const CenterId& image_point) {
  require_bare_hirzebruch(branch, "contracting C0");
  if (branch.ambient->kind().e() != 1) {
    throw Error(ErrorCode::InvalidTransform,
                "C0 contracts to a smooth point only on F1, got e = " + std::to_string(branch.ambient->kind().e()));
  }
  const ModelPtr& f1 = branch.ambient;
  const ModelPtr plane_model = make_model(SurfaceKind::plane(), {{image_point, std::nullopt}});
  const DivisorClass c0 = negative_section_class(f1);
  const DivisorClass g = fibre_class(f1);
  TransformStep step{TransformKind::ContractNegativeSection, f1, plane_model, {c0 + g, c0}};

  const DivisorClass y = step.apply(branch.branch_class);
  const ModelPtr plane = make_surface(SurfaceKind::plane());
  const std::int64_t mult = intersect(branch.branch_class, c0) + (c0_in_branch ? 1 : 0);
  ContractionResult out{BranchModel{plane, DivisorClass(plane, {y[0]}), branch.singularities}, step, image_point,
                        static_cast<int>(mult)};
  if (mult >= 2) out.branch.singularities.push_back(Mtuple{image_point, out.image_multiplicity, std::nullopt});
  return out;
}

TransformStep cremona_quadratic(const ModelPtr& model, const std::array<CenterId, 3>& centers,
                                std::optional<std::array<CenterId, 3>> new_ids) {
  if (!model || !model->kind().is_plane()) {
    throw Error(ErrorCode::InvalidTransform, "quadratic transformation needs a plane model");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!model->has_center(centers[i])) {
      throw Error(ErrorCode::InvalidTransform, "center '" + centers[i].value + "' is not blown up");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (centers[i] == centers[j]) throw Error(ErrorCode::InvalidTransform, "quadratic transformation needs 3 distinct centers");
    }
  }
  std::array<CenterId, 3> ids;
  for (std::size_t i = 0; i < 3; ++i) ids[i] = new_ids ? (*new_ids)[i] : CenterId{centers[i].value + "^"};

  auto slot = [&](const CenterId& id) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < 3; ++i) {
      if (centers[i] == id) return i;
    }
    return std::nullopt;
  };

  std::vector<BlowUpCenter> target_centers;
  for (const auto& c : model->centers()) {
    BlowUpCenter t = c;
    if (auto s = slot(c.id)) t.id = ids[*s];
    if (c.parent) {
      if (auto s = slot(*c.parent)) {
        // Inside the triple the infinitely-near relation carries over;
        // points hanging off a center become plain points.
        if (slot(c.id)) t.parent = ids[*s];
        else t.parent.reset();
      }
    }
    target_centers.push_back(t);
  }
  const ModelPtr target = make_model(SurfaceKind::plane(), target_centers);

  const DivisorClass l = line_class(model);
  std::array<DivisorClass, 3> e{exceptional_class(model, centers[0]), exceptional_class(model, centers[1]),
                                exceptional_class(model, centers[2])};
  std::vector<DivisorClass> images{2 * l - e[0] - e[1] - e[2]};
  for (const auto& c : model->centers()) {
    if (auto s = slot(c.id)) {
      images.push_back(l - e[(*s + 1) % 3] - e[(*s + 2) % 3]);
    } else {
      images.push_back(exceptional_class(model, c.id));
    }
  }
  return TransformStep{TransformKind::CremonaQuadratic, model, target, std::move(images)};
}

PlaneCurveData cremona_numbers(const PlaneCurveData& c) {
  using detail::checked_sub;
  using detail::checked_mul;
  const auto& m = c.multiplicities;
  PlaneCurveData out;
  out.degree = checked_sub(checked_sub(checked_sub(checked_mul(2, c.degree), m[0]), m[1]), m[2]);
  for (std::size_t i = 0; i < 3; ++i) {
    out.multiplicities[i] = checked_sub(checked_sub(c.degree, m[(i + 1) % 3]), m[(i + 2) % 3]);
  }
  return out;
}

}  // namespace duval
