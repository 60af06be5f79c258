#include "boneage/core/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace boneage::core {

namespace fs = std::filesystem;

const char* split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "TRAIN";
    case Split::kValidation: return "VALIDATION";
    case Split::kTest: return "TEST";
  }
  return "UNKNOWN";
}

Split split_from_name(const std::string& name) {
  if (name == "TRAIN" || name == "train") return Split::kTrain;
  if (name == "VALIDATION" || name == "validation") return Split::kValidation;
  if (name == "TEST" || name == "test") return Split::kTest;
  throw Error(Err::kInvalidArgument, "unknown split '" + name + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim whitespace and a possible trailing \r
    size_t b = field.find_first_not_of(" \t\r");
    size_t e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

DatasetManifest load_manifest(const std::string& csv_path, Split split,
                              const ManifestOptions& opts) {
  std::ifstream in(csv_path);
  if (!in) throw Error(Err::kIoError, "cannot open manifest '" + csv_path + "'");

  std::string header;
  if (!std::getline(in, header)) {
    throw Error(Err::kMissingColumn, "manifest '" + csv_path + "' has no header row");
  }
  auto cols = split_csv_line(header);
  int id_col = -1, age_col = -1, male_col = -1;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "id") id_col = static_cast<int>(i);
    if (cols[i] == "boneage") age_col = static_cast<int>(i);
    if (cols[i] == "male") male_col = static_cast<int>(i);
  }
  if (id_col < 0) throw Error(Err::kMissingColumn, "manifest lacks 'id' column");
  if (age_col < 0) throw Error(Err::kMissingColumn, "manifest lacks 'boneage' column");
  if (male_col < 0) throw Error(Err::kMissingColumn, "manifest lacks 'male' column");

  fs::path images_dir = opts.images_dir.empty()
                            ? fs::path(csv_path).parent_path() / "images"
                            : fs::path(opts.images_dir);

  DatasetManifest manifest;
  manifest.split = split;
  std::set<std::string> seen;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    const int needed = std::max({id_col, age_col, male_col});
    if (static_cast<int>(fields.size()) <= needed) {
      throw Error(Err::kUnparsableRow, "line " + std::to_string(line_no) + ": too few fields");
    }
    ManifestEntry entry;
    entry.id = fields[id_col];
    if (entry.id.empty()) {
      throw Error(Err::kUnparsableRow, "line " + std::to_string(line_no) + ": empty id");
    }
    if (!seen.insert(entry.id).second) {
      throw Error(Err::kDuplicateId, "id '" + entry.id + "'");
    }
    const std::string& age_str = fields[age_col];
    if (!age_str.empty()) {
      double age;
      try {
        size_t pos = 0;
        age = std::stod(age_str, &pos);
        if (pos != age_str.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(Err::kUnparsableRow,
                    "line " + std::to_string(line_no) + ": boneage '" + age_str + "'");
      }
      if (!(age >= 0.0 && age <= kMaxAgeMonths) || !std::isfinite(age)) {
        throw Error(Err::kUnparsableRow, "line " + std::to_string(line_no) +
                                             ": boneage out of [0,240] months");
      }
      entry.bone_age_months = age;
    }
    const std::string& male_str = fields[male_col];
    if (male_str == "True") {
      entry.sex = Sex::kMale;
    } else if (male_str == "False") {
      entry.sex = Sex::kFemale;
    } else {
      throw Error(Err::kUnparsableRow,
                  "line " + std::to_string(line_no) + ": male '" + male_str + "'");
    }
    entry.image_path = (images_dir / (entry.id + ".png")).string();
    if (opts.require_images && !fs::exists(entry.image_path)) {
      throw Error(Err::kIoError, "image for id '" + entry.id + "' not found at '" +
                                     entry.image_path + "'");
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

void save_manifest(const DatasetManifest& manifest, const std::string& csv_path) {
  std::ofstream out(csv_path);
  if (!out) throw Error(Err::kIoError, "cannot write manifest '" + csv_path + "'");
  out << "id,boneage,male\n";
  for (const auto& e : manifest.entries) {
    out << e.id << ",";
    if (e.bone_age_months) {
      std::ostringstream age;
      age << *e.bone_age_months;
      out << age.str();
    }
    out << "," << (e.sex == Sex::kMale ? "True" : "False") << "\n";
  }
}

DatasetManifest filter_age_range(const DatasetManifest& manifest, const AgeRangeMonths& range) {
  range.validate();
  DatasetManifest out;
  out.split = manifest.split;
  for (const auto& e : manifest.entries) {
    if (!e.bone_age_months) {
      throw Error(Err::kMissingLabel, "entry '" + e.id + "' lacks a bone age label");
    }
    if (range.contains(*e.bone_age_months)) out.entries.push_back(e);
  }
  return out;
}

std::vector<HistogramBin> age_histogram(const DatasetManifest& manifest, int bin_months) {
  if (bin_months <= 0) throw Error(Err::kInvalidArgument, "bin_months must be positive");
  std::map<int, HistogramBin> bins;
  for (const auto& e : manifest.entries) {
    if (!e.bone_age_months) {
      throw Error(Err::kMissingLabel, "entry '" + e.id + "' lacks a bone age label");
    }
    const int idx = static_cast<int>(std::floor(*e.bone_age_months / bin_months));
    auto& bin = bins[idx];
    bin.bin_index = idx;
    (e.sex == Sex::kMale ? bin.male : bin.female) += 1;
  }
  std::vector<HistogramBin> out;
  out.reserve(bins.size());
  for (auto& [_, bin] : bins) out.push_back(bin);
  return out;
}

}  // namespace boneage::core
