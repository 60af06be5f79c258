#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace boneage::core {

/// Error categories raised across the pipeline. Each maps to one failure
/// contract of a public operation.
enum class Err {
  kMissingColumn,
  kUnparsableRow,
  kDuplicateId,
  kMissingLabel,
  kInvalidSpec,
  kIoError,
  kShapeMismatch,
  kDegenerateDataset,
  kWrongStage,
  kEmptyMask,
  kConstantRegion,
  kIncompleteTruth,
  kBoxDegenerate,
  kZonesNotPartition,
  kUnknownLayer,
  kHashMismatch,
  kNotFound,
  kLengthMismatch,
  kEmpty,
  kEmptyManifest,
  kInvalidArgument,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string message, std::string stage = {})
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        code_(code),
        stage_(std::move(stage)) {}

  Err code() const { return code_; }
  /// Pipeline stage tag ("segment", "detect", ...); empty outside the
  /// orchestrated pipeline.
  const std::string& stage() const { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  Err code_;
  std::string stage_;
};

enum class Sex { kFemale = 0, kMale = 1 };

/// Gender scalar fused into the regression heads: MALE = 1.0, FEMALE = 0.0.
inline double sex_scalar(Sex s) { return s == Sex::kMale ? 1.0 : 0.0; }
const char* sex_name(Sex s);
Sex sex_from_name(const std::string& name);

/// The five hand regions fed to the estimation ensemble, in stable ordinal
/// order.
enum class Region {
  kWholeHand = 0,
  kWristCarpal = 1,
  kThumb = 2,
  kMiddleFingerTop = 3,
  kMiddleFingerProximal = 4,
};

inline constexpr int kRegionCount = 5;
inline constexpr std::array<Region, kRegionCount> kAllRegions = {
    Region::kWholeHand, Region::kWristCarpal, Region::kThumb,
    Region::kMiddleFingerTop, Region::kMiddleFingerProximal};

const char* region_name(Region r);
Region region_from_name(const std::string& name);

inline constexpr double kMaxAgeMonths = 240.0;

/// Inclusive age interval in months.
struct AgeRangeMonths {
  double lo = 0.0;
  double hi = kMaxAgeMonths;

  bool contains(double months) const { return months >= lo && months <= hi; }
  void validate() const;
};

/// Row-major grayscale grid with intensities in [0, 1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> px;

  Image() = default;
  Image(int h, int w, float fill = 0.0f)
      : height(h), width(w), px(static_cast<size_t>(h) * w, fill) {}

  float& at(int y, int x) { return px[static_cast<size_t>(y) * width + x]; }
  float at(int y, int x) const { return px[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return px.size(); }
  bool same_shape(const Image& other) const {
    return height == other.height && width == other.width;
  }
};

/// One radiograph record: pixels plus identity, sex and the optional
/// ground-truth bone age label in months.
struct Radiograph {
  std::string id;
  Image image;
  Sex sex = Sex::kFemale;
  std::optional<double> bone_age_months;

  void validate() const;
};

inline constexpr int kMinImageSide = 32;

}  // namespace boneage::core
