#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitts3d/task.hpp"

namespace fitts3d {

// Declaration order is the tie-break order used when ranking models.
enum class ModelKind { Fitts, Hoffmann, Welford, Shannon, MurataIwase, ChaMyung, FinalModel };

inline constexpr std::array<ModelKind, 7> kAllModels = {
    ModelKind::Fitts,       ModelKind::Hoffmann, ModelKind::Welford,   ModelKind::Shannon,
    ModelKind::MurataIwase, ModelKind::ChaMyung, ModelKind::FinalModel};

std::string_view to_string(ModelKind kind) noexcept;
// Accepts the names produced by to_string ("fitts", "cha-myung", "final", ...).
std::optional<ModelKind> parse_model(std::string_view text) noexcept;

// Regressor names, in column order, that predictors_for produces for `kind`.
std::span<const std::string_view> predictor_layout(ModelKind kind) noexcept;

enum class IdKind { Translation, Rotation, Combined };

struct IdValue {
  double bits = 0.0;
  IdKind kind = IdKind::Translation;
};

// Ordered, uniquely named regressors for one observation.
class PredictorVector {
public:
  PredictorVector() = default;
  PredictorVector(std::initializer_list<std::pair<std::string_view, double>> entries);

  void push_back(std::string_view name, double value);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_.at(i); }

private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

// sin of an angle in degrees; exact at multiples of 90.
double sin_degrees(double angle) noexcept;

// Translation IDs, bits. Negative values are legal where the formula allows them.
IdValue id_fitts(double separation, double width);
IdValue id_hoffmann(double separation, double width, double object_size);
IdValue id_welford(double separation, double width);
IdValue id_shannon(double separation, double width);

PredictorVector predictors_murata(double separation, double width, double direction_deg);
PredictorVector predictors_cha_myung(double separation, double width, double object_size,
                                     double inclination_deg, double direction_deg);

// Combined-model terms. Rotation uses degrees for both alpha and omega, so omega²
// is in degrees².
IdValue id_t_final(double separation, double width, double object_size);
IdValue id_r_final(double rotation_deg, double tolerance_deg);

// A prior model's translation ID with A -> alpha and W -> omega. Models that
// carry an object-size term drop it: there is no rotational analogue of F.
IdValue id_rot_adapted(ModelKind kind, double rotation_deg, double tolerance_deg);

enum class RotationHandling {
  Adapted,        // prior models add their adapted rotation ID
  TranslationOnly // prior models see translation terms only
};

PredictorVector predictors_for(ModelKind kind, const TaskSpec& task,
                               RotationHandling rotation = RotationHandling::Adapted);

} // namespace fitts3d
