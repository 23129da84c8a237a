#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "orbitx/convolution.hpp"

namespace orbitx {

/// Grayscale raster, row major, intensities in [0, 1].
struct Image {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// PGM reader: binary P5 and ASCII P2, 8-bit (maxval 255). Throws
/// std::runtime_error on malformed headers, truncation, other magic
/// numbers or unsupported maxval.
Image load_image(const std::string& path);
Image read_pgm(std::istream& in);

/// Writes binary P5, 8 bit, round-half-up quantization after clamping.
void save_image(const Image& img, const std::string& path);
void write_pgm(const Image& img, std::ostream& out);

/// White flat-topped regular hexagon (circumradius 0.4*size) on black.
Image make_hexagon_test_image(int size);

/// One half of a square image resampled onto the fundamental domain F.
/// corners are the pixel positions of the F vertices (0, w1-check/m1,
/// w2-check/m2) and define the affine pixel <-> domain bijection.
struct TriangleSampling {
  DiscreteFunction fn;
  std::array<std::array<double, 2>, 3> corners;
  bool upper = false;

  std::array<double, 2> domain_to_pixel(const PointCoords& x) const;
  PointCoords pixel_to_domain(double px, double py) const;
};

/// Splits along the main diagonal and samples each half on F_M by bilinear
/// interpolation. Throws on non-square input; warns on stderr when the grid
/// is coarser than the pixel raster.
std::pair<TriangleSampling, TriangleSampling> split_square(const Image& img, AlgebraId algebra,
                                                           std::int64_t M);

/// How reassemble evaluates a triangle sampling between grid points.
enum class Interp {
  Barycentric,  // linear on the folded lattice triangulation
  Spectral,     // inverse orbit transform at the exact point (slow)
};

/// Paints every pixel from the owning triangle's sampling; output clamped
/// to [0, 1].
Image reassemble(const TriangleSampling& lower, const TriangleSampling& upper, int width,
                 int height, Interp interp = Interp::Barycentric);

/// split -> per-triangle spectral orbit convolution with the named builtin
/// kernel -> reassemble.
Image filter_image(const Image& img, const std::string& kernel_name, AlgebraId algebra,
                   std::int64_t M);

/// Plain 3x3 convolution with the reference kernels (mean, sharpen, edge,
/// identity), replicate border extension, clamped output.
Image baseline_r2_filter(const Image& img, const std::string& kernel_name);

}  // namespace orbitx
