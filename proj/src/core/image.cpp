#include "boneage/core/image.hpp"

#include <algorithm>
#include <cmath>

namespace boneage::core {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* err_name(Err code) {
  switch (code) {
    case Err::kMissingColumn: return "MissingColumn";
    case Err::kUnparsableRow: return "UnparsableRow";
    case Err::kDuplicateId: return "DuplicateId";
    case Err::kMissingLabel: return "MissingLabel";
    case Err::kInvalidSpec: return "InvalidSpec";
    case Err::kIoError: return "IoError";
    case Err::kShapeMismatch: return "ShapeMismatch";
    case Err::kDegenerateDataset: return "DegenerateDataset";
    case Err::kWrongStage: return "WrongStage";
    case Err::kEmptyMask: return "EmptyMask";
    case Err::kConstantRegion: return "ConstantRegion";
    case Err::kIncompleteTruth: return "IncompleteTruth";
    case Err::kBoxDegenerate: return "BoxDegenerate";
    case Err::kZonesNotPartition: return "ZonesNotPartition";
    case Err::kUnknownLayer: return "UnknownLayer";
    case Err::kHashMismatch: return "HashMismatch";
    case Err::kNotFound: return "NotFound";
    case Err::kLengthMismatch: return "LengthMismatch";
    case Err::kEmpty: return "Empty";
    case Err::kEmptyManifest: return "EmptyManifest";
    case Err::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* sex_name(Sex s) { return s == Sex::kMale ? "male" : "female"; }

Sex sex_from_name(const std::string& name) {
  if (name == "male" || name == "MALE" || name == "M") return Sex::kMale;
  if (name == "female" || name == "FEMALE" || name == "F") return Sex::kFemale;
  throw Error(Err::kInvalidArgument, "unknown sex '" + name + "'");
}

const char* region_name(Region r) {
  switch (r) {
    case Region::kWholeHand: return "WHOLE_HAND";
    case Region::kWristCarpal: return "WRIST_CARPAL";
    case Region::kThumb: return "THUMB";
    case Region::kMiddleFingerTop: return "MIDDLE_FINGER_TOP";
    case Region::kMiddleFingerProximal: return "MIDDLE_FINGER_PROXIMAL";
  }
  return "UNKNOWN";
}

Region region_from_name(const std::string& name) {
  for (Region r : kAllRegions) {
    if (name == region_name(r)) return r;
  }
  throw Error(Err::kInvalidArgument, "unknown region '" + name + "'");
}

void AgeRangeMonths::validate() const {
  if (!(lo >= 0.0 && lo < hi && hi <= kMaxAgeMonths)) {
    throw Error(Err::kInvalidArgument, "age range must satisfy 0 <= lo < hi <= 240");
  }
}

void Radiograph::validate() const {
  if (image.height < kMinImageSide || image.width < kMinImageSide) {
    throw Error(Err::kInvalidArgument, "radiograph '" + id + "' smaller than 32x32");
  }
  for (float v : image.px) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw Error(Err::kInvalidArgument, "radiograph '" + id + "' has intensity outside [0,1]");
    }
  }
  if (bone_age_months && !(*bone_age_months >= 0.0 && *bone_age_months <= kMaxAgeMonths)) {
    throw Error(Err::kInvalidArgument, "radiograph '" + id + "' age outside [0,240] months");
  }
}

float sample_bilinear(const Image& img, double x, double y, float fill) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  auto read = [&](int yy, int xx) -> double {
    if (yy < 0 || yy >= img.height || xx < 0 || xx >= img.width) return fill;
    return img.at(yy, xx);
  };
  const double top = read(y0, x0) * (1.0 - fx) + read(y0, x0 + 1) * fx;
  const double bot = read(y0 + 1, x0) * (1.0 - fx) + read(y0 + 1, x0 + 1) * fx;
  return static_cast<float>(top * (1.0 - fy) + bot * fy);
}

Image resize_bilinear(const Image& img, int out_h, int out_w) {
  Image out(out_h, out_w);
  const double sy = static_cast<double>(img.height) / out_h;
  const double sx = static_cast<double>(img.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_w; ++x) {
      const double src_x = (x + 0.5) * sx - 0.5;
      out.at(y, x) = sample_bilinear(img, src_x, src_y);
    }
  }
  return out;
}

Image resize_nearest(const Image& img, int out_h, int out_w) {
  Image out(out_h, out_w);
  const double sy = static_cast<double>(img.height) / out_h;
  const double sx = static_cast<double>(img.width) / out_w;
  for (int y = 0; y < out_h; ++y) {
    int src_y = std::min(img.height - 1, static_cast<int>((y + 0.5) * sy));
    for (int x = 0; x < out_w; ++x) {
      int src_x = std::min(img.width - 1, static_cast<int>((x + 0.5) * sx));
      out.at(y, x) = img.at(src_y, src_x);
    }
  }
  return out;
}

Image mirror_horizontal(const Image& img) {
  Image out(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      out.at(y, x) = img.at(y, img.width - 1 - x);
    }
  }
  return out;
}

Image rotate(const Image& img, double angle_deg, bool pad) {
  if (angle_deg == 0.0 && !pad) return img;
  const double rad = angle_deg * kPi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  int out_h = img.height;
  int out_w = img.width;
  if (pad) {
    out_w = static_cast<int>(std::ceil(std::abs(c) * img.width + std::abs(s) * img.height - 1e-9));
    out_h = static_cast<int>(std::ceil(std::abs(c) * img.height + std::abs(s) * img.width - 1e-9));
  }
  if (angle_deg == 0.0 && out_h == img.height && out_w == img.width) return img;
  Image out(out_h, out_w);
  const double cx_src = (img.width - 1) * 0.5;
  const double cy_src = (img.height - 1) * 0.5;
  const double cx_dst = (out_w - 1) * 0.5;
  const double cy_dst = (out_h - 1) * 0.5;
  // Clockwise rotation of content by angle: destination -> source uses the
  // inverse (counterclockwise) map.
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const double dx = x - cx_dst;
      const double dy = y - cy_dst;
      const double sx = c * dx - s * dy + cx_src;
      const double sy = s * dx + c * dy + cy_src;
      out.at(y, x) = sample_bilinear(img, sx, sy);
    }
  }
  return out;
}

Image crop(const Image& img, int y0, int x0, int h, int w) {
  Image out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int sy = y0 + y;
      const int sx = x0 + x;
      if (sy >= 0 && sy < img.height && sx >= 0 && sx < img.width) {
        out.at(y, x) = img.at(sy, sx);
      }
    }
  }
  return out;
}

Image pad_to_square(const Image& img) {
  const int side = std::max(img.height, img.width);
  if (side == img.height && side == img.width) return img;
  Image out(side, side);
  const int oy = (side - img.height) / 2;
  const int ox = (side - img.width) / 2;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      out.at(y + oy, x + ox) = img.at(y, x);
    }
  }
  return out;
}

Homography Homography::identity() {
  return Homography{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
}

void Homography::apply(double x, double y, double* sx, double* sy) const {
  const double w = m[6] * x + m[7] * y + m[8];
  *sx = (m[0] * x + m[1] * y + m[2]) / w;
  *sy = (m[3] * x + m[4] * y + m[5]) / w;
}

Homography homography_from_quads(const double dst[4][2], const double src[4][2]) {
  // 8x8 linear system for the standard 4-point DLT, Gaussian elimination.
  double a[8][9] = {};
  for (int i = 0; i < 4; ++i) {
    const double x = dst[i][0], y = dst[i][1];
    const double u = src[i][0], v = src[i][1];
    double* r0 = a[2 * i];
    double* r1 = a[2 * i + 1];
    r0[0] = x; r0[1] = y; r0[2] = 1; r0[6] = -x * u; r0[7] = -y * u; r0[8] = u;
    r1[3] = x; r1[4] = y; r1[5] = 1; r1[6] = -x * v; r1[7] = -y * v; r1[8] = v;
  }
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    for (int r = col + 1; r < 8; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    const double d = a[col][col];
    if (std::abs(d) < 1e-12) {
      throw Error(Err::kInvalidArgument, "degenerate quad for homography");
    }
    for (int r = 0; r < 8; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / d;
      for (int cidx = col; cidx < 9; ++cidx) a[r][cidx] -= f * a[col][cidx];
    }
  }
  Homography h{};
  for (int i = 0; i < 8; ++i) h.m[i] = a[i][8] / a[i][i];
  h.m[8] = 1.0;
  return h;
}

void DisplacementGrid::sample(int w, int h, double x, double y, double* ox, double* oy) const {
  if (cells <= 0) {
    *ox = 0.0;
    *oy = 0.0;
    return;
  }
  const int n = cells;
  double gx = x / std::max(1, w - 1) * n;
  double gy = y / std::max(1, h - 1) * n;
  gx = std::clamp(gx, 0.0, static_cast<double>(n));
  gy = std::clamp(gy, 0.0, static_cast<double>(n));
  const int ix = std::min(n - 1, static_cast<int>(gx));
  const int iy = std::min(n - 1, static_cast<int>(gy));
  const double fx = gx - ix;
  const double fy = gy - iy;
  auto lerp2 = [&](const std::vector<float>& g) {
    const int stride = n + 1;
    const double top = g[iy * stride + ix] * (1 - fx) + g[iy * stride + ix + 1] * fx;
    const double bot = g[(iy + 1) * stride + ix] * (1 - fx) + g[(iy + 1) * stride + ix + 1] * fx;
    return top * (1 - fy) + bot * fy;
  };
  *ox = lerp2(dx);
  *oy = lerp2(dy);
}

Image warp(const Image& img, const Homography& h, const DisplacementGrid* disp) {
  Image out(img.height, img.width);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double sx, sy;
      h.apply(x, y, &sx, &sy);
      if (disp) {
        double ox, oy;
        disp->sample(img.width, img.height, x, y, &ox, &oy);
        sx += ox;
        sy += oy;
      }
      out.at(y, x) = sample_bilinear(img, sx, sy);
    }
  }
  return out;
}

double mean_abs_diff(const Image& a, const Image& b) {
  if (!a.same_shape(b)) {
    throw Error(Err::kShapeMismatch, "mean_abs_diff shape mismatch");
  }
  double acc = 0.0;
  for (size_t i = 0; i < a.px.size(); ++i) acc += std::abs(a.px[i] - b.px[i]);
  return a.px.empty() ? 0.0 : acc / a.px.size();
}

int count_nonzero(const Image& img, float thresh) {
  int n = 0;
  for (float v : img.px) {
    if (v > thresh) ++n;
  }
  return n;
}

}  // namespace boneage::core
