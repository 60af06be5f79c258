#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boneage/core/types.hpp"

namespace boneage::core {

enum class Split { kTrain, kValidation, kTest };
const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct ManifestEntry {
  std::string id;
  std::string image_path;  // absolute or relative to the images dir
  std::optional<double> bone_age_months;
  Sex sex = Sex::kFemale;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  Split split = Split::kTrain;

  size_t size() const { return entries.size(); }
};

struct ManifestOptions {
  /// Directory the `image_path` entries resolve against. Empty means
  /// `<manifest dir>/images`.
  std::string images_dir;
  /// When true every image path must exist on disk at load time.
  bool require_images = true;
};

/// Reads an RSNA-style CSV (`id,boneage,male` header; `male` is the literal
/// True/False). An empty boneage field yields an unlabeled entry.
DatasetManifest load_manifest(const std::string& csv_path, Split split,
                              const ManifestOptions& opts = {});
void save_manifest(const DatasetManifest& manifest, const std::string& csv_path);

/// Keeps entries with lo <= age <= hi, order preserved.
DatasetManifest filter_age_range(const DatasetManifest& manifest, const AgeRangeMonths& range);

struct HistogramBin {
  int bin_index = 0;
  int male = 0;
  int female = 0;
  int total() const { return male + female; }
};

/// Per-sex counts in floor(age / bin_months) bins, sorted by bin index.
std::vector<HistogramBin> age_histogram(const DatasetManifest& manifest, int bin_months);

}  // namespace boneage::core
