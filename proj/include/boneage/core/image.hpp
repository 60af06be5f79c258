#pragma once

#include <cstdint>

#include "boneage/core/types.hpp"

namespace boneage::core {

/// Bilinear sample at continuous pixel coordinates (x, y); coordinates are
/// pixel centers, out-of-range contributions read as `fill`.
float sample_bilinear(const Image& img, double x, double y, float fill = 0.0f);

Image resize_bilinear(const Image& img, int out_h, int out_w);
Image resize_nearest(const Image& img, int out_h, int out_w);
Image mirror_horizontal(const Image& img);

/// Rotate clockwise by `angle_deg` about the image center. When `pad` is
/// true the canvas grows to the rotated bounding box so no source pixel is
/// lost; otherwise the canvas is kept. Background fills with 0.
Image rotate(const Image& img, double angle_deg, bool pad);

Image crop(const Image& img, int y0, int x0, int h, int w);

/// Centers the image on a square canvas of side max(h, w), fill 0.
Image pad_to_square(const Image& img);

/// 3x3 row-major homography mapping destination pixel coords to source.
struct Homography {
  double m[9];
  static Homography identity();
  void apply(double x, double y, double* sx, double* sy) const;
};

/// Least-squares-free exact DLT for 4 point pairs (dst -> src).
Homography homography_from_quads(const double dst[4][2], const double src[4][2]);

/// Dense displacement field added to warp lookups, bilinearly interpolated
/// from a coarse (cells+1)^2 lattice of offsets given in pixels.
struct DisplacementGrid {
  int cells = 0;
  std::vector<float> dx;  // (cells+1)^2
  std::vector<float> dy;
  void sample(int w, int h, double x, double y, double* ox, double* oy) const;
};

/// out(p) = bilinear(img, H(p) + D(p)); D optional.
Image warp(const Image& img, const Homography& h, const DisplacementGrid* disp);

double mean_abs_diff(const Image& a, const Image& b);
int count_nonzero(const Image& img, float thresh = 0.0f);

}  // namespace boneage::core
