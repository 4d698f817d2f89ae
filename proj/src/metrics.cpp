#include "fitts3d/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fitts3d/error.hpp"

namespace fitts3d {

namespace {

constexpr std::string_view kFittsLayout[] = {"id_fitts"};
constexpr std::string_view kHoffmannLayout[] = {"id_hoffmann"};
constexpr std::string_view kWelfordLayout[] = {"id_welford"};
constexpr std::string_view kShannonLayout[] = {"id_shannon"};
constexpr std::string_view kMurataLayout[] = {"id_shannon", "sin_phi"};
constexpr std::string_view kChaMyungLayout[] = {"theta1", "sin_theta2", "id_hoffmann"};
constexpr std::string_view kFinalLayout[] = {"id_t", "id_r"};

IdValue checked(double bits, IdKind kind, const char* what) {
  if (!std::isfinite(bits)) {
    throw DomainError(std::string(what) + ": non-finite index of difficulty");
  }
  return {bits, kind};
}

// The translation ID of a single-ID prior model. Murata and Cha-Myung reuse
// Shannon and Hoffmann respectively.
IdValue translation_id(ModelKind kind, const TaskSpec& t) {
  switch (kind) {
  case ModelKind::Fitts:
    return id_fitts(t.separation, t.target_width);
  case ModelKind::Hoffmann:
  case ModelKind::ChaMyung:
    return id_hoffmann(t.separation, t.target_width, t.object_size);
  case ModelKind::Welford:
    return id_welford(t.separation, t.target_width);
  case ModelKind::Shannon:
  case ModelKind::MurataIwase:
    return id_shannon(t.separation, t.target_width);
  case ModelKind::FinalModel:
    return id_t_final(t.separation, t.target_width, t.object_size);
  }
  throw DomainError("unknown model kind");
}

double summed_id(ModelKind kind, const TaskSpec& t, RotationHandling rotation) {
  const bool use_rotation = rotation == RotationHandling::Adapted && t.has_rotation();
  const bool use_translation = t.has_translation() || !use_rotation;
  double bits = 0.0;
  if (use_translation) {
    bits += translation_id(kind, t).bits;
  }
  if (use_rotation) {
    bits += id_rot_adapted(kind, t.rotation, t.tolerance).bits;
  }
  return bits;
}

} // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
  case ModelKind::Fitts:
    return "fitts";
  case ModelKind::Hoffmann:
    return "hoffmann";
  case ModelKind::Welford:
    return "welford";
  case ModelKind::Shannon:
    return "shannon";
  case ModelKind::MurataIwase:
    return "murata-iwase";
  case ModelKind::ChaMyung:
    return "cha-myung";
  case ModelKind::FinalModel:
    return "final";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view text) noexcept {
  for (ModelKind kind : kAllModels) {
    if (to_string(kind) == text) {
      return kind;
    }
  }
  if (text == "murata") {
    return ModelKind::MurataIwase;
  }
  return std::nullopt;
}

std::span<const std::string_view> predictor_layout(ModelKind kind) noexcept {
  switch (kind) {
  case ModelKind::Fitts:
    return kFittsLayout;
  case ModelKind::Hoffmann:
    return kHoffmannLayout;
  case ModelKind::Welford:
    return kWelfordLayout;
  case ModelKind::Shannon:
    return kShannonLayout;
  case ModelKind::MurataIwase:
    return kMurataLayout;
  case ModelKind::ChaMyung:
    return kChaMyungLayout;
  case ModelKind::FinalModel:
    return kFinalLayout;
  }
  return {};
}

PredictorVector::PredictorVector(
    std::initializer_list<std::pair<std::string_view, double>> entries) {
  for (const auto& [name, value] : entries) {
    push_back(name, value);
  }
}

void PredictorVector::push_back(std::string_view name, double value) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
    throw std::invalid_argument("duplicate predictor name: " + std::string(name));
  }
  names_.emplace_back(name);
  values_.push_back(value);
}

double sin_degrees(double angle) noexcept {
  double r = std::fmod(angle, 360.0);
  if (r < 0.0) {
    r += 360.0;
  }
  if (r == 0.0 || r == 180.0) {
    return 0.0;
  }
  if (r == 90.0) {
    return 1.0;
  }
  if (r == 270.0) {
    return -1.0;
  }
  return std::sin(r * std::numbers::pi / 180.0);
}

IdValue id_fitts(double separation, double width) {
  if (!(separation > 0.0) || !(width > 0.0)) {
    throw DomainError("fitts: requires A > 0 and W > 0");
  }
  return checked(std::log2(2.0 * separation / width), IdKind::Translation, "fitts");
}

IdValue id_hoffmann(double separation, double width, double object_size) {
  if (!(separation > 0.0) || !(width + object_size > 0.0)) {
    throw DomainError("hoffmann: requires A > 0 and W + F > 0");
  }
  return checked(std::log2(2.0 * separation / (width + object_size)), IdKind::Translation,
                 "hoffmann");
}

IdValue id_welford(double separation, double width) {
  if (!(separation >= 0.0) || !(width > 0.0)) {
    throw DomainError("welford: requires A >= 0 and W > 0");
  }
  return checked(std::log2(separation / width + 0.5), IdKind::Translation, "welford");
}

IdValue id_shannon(double separation, double width) {
  if (!(separation >= 0.0) || !(width > 0.0)) {
    throw DomainError("shannon: requires A >= 0 and W > 0");
  }
  return checked(std::log2(separation / width + 1.0), IdKind::Translation, "shannon");
}

PredictorVector predictors_murata(double separation, double width, double direction_deg) {
  return {{"id_shannon", id_shannon(separation, width).bits},
          {"sin_phi", sin_degrees(direction_deg)}};
}

PredictorVector predictors_cha_myung(double separation, double width, double object_size,
                                     double inclination_deg, double direction_deg) {
  return {{"theta1", inclination_deg},
          {"sin_theta2", sin_degrees(direction_deg)},
          {"id_hoffmann", id_hoffmann(separation, width, object_size).bits}};
}

IdValue id_t_final(double separation, double width, double object_size) {
  if (!(separation >= 0.0) || !(width + object_size > 0.0)) {
    throw DomainError("final translation: requires A >= 0 and W + F > 0");
  }
  return checked(std::log2(2.0 * separation / (object_size + width) + 1.0), IdKind::Translation,
                 "final translation");
}

IdValue id_r_final(double rotation_deg, double tolerance_deg) {
  if (!(rotation_deg >= 0.0) || !(tolerance_deg > 0.0)) {
    throw DomainError("final rotation: requires alpha >= 0 and omega > 0");
  }
  return checked(std::log2(2.0 * rotation_deg / (tolerance_deg * tolerance_deg) + 1.0),
                 IdKind::Rotation, "final rotation");
}

IdValue id_rot_adapted(ModelKind kind, double rotation_deg, double tolerance_deg) {
  IdValue id;
  switch (kind) {
  case ModelKind::Fitts:
  case ModelKind::Hoffmann:
  case ModelKind::ChaMyung:
    id = id_fitts(rotation_deg, tolerance_deg);
    break;
  case ModelKind::Welford:
    id = id_welford(rotation_deg, tolerance_deg);
    break;
  case ModelKind::Shannon:
  case ModelKind::MurataIwase:
    id = id_shannon(rotation_deg, tolerance_deg);
    break;
  case ModelKind::FinalModel:
    id = id_r_final(rotation_deg, tolerance_deg);
    break;
  }
  id.kind = IdKind::Rotation;
  return id;
}

PredictorVector predictors_for(ModelKind kind, const TaskSpec& task, RotationHandling rotation) {
  switch (kind) {
  case ModelKind::Fitts:
  case ModelKind::Hoffmann:
  case ModelKind::Welford:
  case ModelKind::Shannon:
    return {{predictor_layout(kind)[0], summed_id(kind, task, rotation)}};
  case ModelKind::MurataIwase:
    return {{"id_shannon", summed_id(kind, task, rotation)},
            {"sin_phi", sin_degrees(task.direction)}};
  case ModelKind::ChaMyung:
    return {{"theta1", task.inclination},
            {"sin_theta2", sin_degrees(task.direction)},
            {"id_hoffmann", summed_id(kind, task, rotation)}};
  case ModelKind::FinalModel: {
    const double id_t = id_t_final(task.separation, task.target_width, task.object_size).bits;
    const double id_r = task.has_rotation() ? id_r_final(task.rotation, task.tolerance).bits : 0.0;
    return {{"id_t", id_t}, {"id_r", id_r}};
  }
  }
  throw DomainError("unknown model kind");
}

} // namespace fitts3d
