#include "orbitx/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orbitx/parallel.hpp"

namespace orbitx {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

int next_header_token(std::istream& in) {
  // PGM headers allow '#' comments up to end of line between tokens.
  for (;;) {
    const int c = in.peek();
    if (c == EOF) return EOF;
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    return c;
  }
}

long read_header_int(std::istream& in, const char* what) {
  if (next_header_token(in) == EOF)
    throw std::runtime_error(std::string("pgm: truncated header before ") + what);
  long v = -1;
  in >> v;
  if (!in || v < 0) throw std::runtime_error(std::string("pgm: bad ") + what);
  return v;
}

double bilinear(const Image& img, double x, double y) {
  const int i0 = std::clamp(static_cast<int>(std::floor(x)), 0, img.width - 2);
  const int j0 = std::clamp(static_cast<int>(std::floor(y)), 0, img.height - 2);
  const double fx = std::clamp(x - i0, 0.0, 1.0);
  const double fy = std::clamp(y - j0, 0.0, 1.0);
  return (1 - fx) * (1 - fy) * img.at(i0, j0) + fx * (1 - fy) * img.at(i0 + 1, j0) +
         (1 - fx) * fy * img.at(i0, j0 + 1) + fx * fy * img.at(i0 + 1, j0 + 1);
}

// Linear interpolation of grid values at an arbitrary point, using the
// affine-Weyl invariant extension: the cell corners are lattice points of
// (1/M) P-check and fold onto grid points exactly.
double grid_interp(const Plan& plan, const std::vector<Complex>& values, const PointCoords& x) {
  const double X1 = x.x1 * plan.m(), X2 = x.x2 * plan.m();
  const std::int64_t i0 = static_cast<std::int64_t>(std::floor(X1));
  const std::int64_t j0 = static_cast<std::int64_t>(std::floor(X2));
  const double fx = X1 - i0, fy = X2 - j0;
  auto value = [&](std::int64_t a, std::int64_t b) {
    return values[plan.fold_index({a, b})].real();
  };
  if (fx + fy <= 1.0)
    return (1 - fx - fy) * value(i0, j0) + fx * value(i0 + 1, j0) + fy * value(i0, j0 + 1);
  return (fx + fy - 1) * value(i0 + 1, j0 + 1) + (1 - fx) * value(i0, j0 + 1) +
         (1 - fy) * value(i0 + 1, j0);
}

const std::array<std::array<double, 9>, 4>& r2_kernels() {
  static const std::array<std::array<double, 9>, 4> k = {{
      {1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0, 1 / 9.0},
      {0, -1, 0, -1, 5, -1, 0, -1, 0},
      {0, 0, -1, -1, 3, 0, 0, 0, -1},
      {0, 0, 0, 0, 1, 0, 0, 0, 0},
  }};
  return k;
}

int r2_kernel_index(const std::string& name) {
  if (name == "mean") return 0;
  if (name == "sharpen") return 1;
  if (name == "edge") return 2;
  if (name == "identity") return 3;
  throw std::invalid_argument("baseline_r2_filter: unknown kernel '" + name + "'");
}

}  // namespace

Image read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '2')) {
    if (in && magic[0] == 'P')
      throw std::runtime_error("pgm: unsupported format P" + std::string(1, magic[1]) +
                               " (only grayscale P2/P5)");
    throw std::runtime_error("pgm: not a PGM file");
  }
  const bool binary = magic[1] == '5';
  const long w = read_header_int(in, "width");
  const long h = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (w <= 0 || h <= 0) throw std::runtime_error("pgm: bad dimensions");
  if (maxval != 255) throw std::runtime_error("pgm: unsupported maxval (must be 255)");

  Image img{static_cast<int>(w), static_cast<int>(h), {}};
  img.pixels.resize(static_cast<std::size_t>(w) * h);
  if (binary) {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> raw(img.pixels.size());
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
      throw std::runtime_error("pgm: truncated pixel payload");
    for (std::size_t i = 0; i < raw.size(); ++i) img.pixels[i] = raw[i] / 255.0;
  } else {
    for (auto& p : img.pixels) {
      long v = -1;
      in >> v;
      if (!in || v < 0 || v > 255) throw std::runtime_error("pgm: bad or missing ASCII sample");
      p = v / 255.0;
    }
  }
  return img;
}

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open image file: " + path);
  return read_pgm(in);
}

void write_pgm(const Image& img, std::ostream& out) {
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> raw(img.pixels.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    raw[i] = static_cast<unsigned char>(std::floor(clamp01(img.pixels[i]) * 255.0 + 0.5));
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

void save_image(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open image file for writing: " + path);
  write_pgm(img, out);
  if (!out) throw std::runtime_error("failed writing image: " + path);
}

Image make_hexagon_test_image(int size) {
  if (size < 32) throw std::invalid_argument("make_hexagon_test_image: size must be >= 32");
  Image img{size, size, std::vector<double>(static_cast<std::size_t>(size) * size, 0.0)};
  const double cx = (size - 1) / 2.0, cy = (size - 1) / 2.0;
  const double apothem = 0.4 * size * std::cos(std::numbers::pi / 6.0);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x - cx, dy = y - cy;
      bool inside = true;
      for (int k = 0; k < 3 && inside; ++k) {
        const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
        inside = std::fabs(dx * std::cos(a) + dy * std::sin(a)) <= apothem;
      }
      if (inside) img.at(x, y) = 1.0;
    }
  }
  return img;
}

std::array<double, 2> TriangleSampling::domain_to_pixel(const PointCoords& x) const {
  const AlgebraData& d = algebra_data(fn.algebra);
  const double b1 = x.x1 * d.marks[0];
  const double b2 = x.x2 * d.marks[1];
  const double b0 = 1.0 - b1 - b2;
  return {b0 * corners[0][0] + b1 * corners[1][0] + b2 * corners[2][0],
          b0 * corners[0][1] + b1 * corners[1][1] + b2 * corners[2][1]};
}

PointCoords TriangleSampling::pixel_to_domain(double px, double py) const {
  const double e1x = corners[1][0] - corners[0][0], e1y = corners[1][1] - corners[0][1];
  const double e2x = corners[2][0] - corners[0][0], e2y = corners[2][1] - corners[0][1];
  const double det = e1x * e2y - e2x * e1y;
  const double rx = px - corners[0][0], ry = py - corners[0][1];
  const double b1 = (rx * e2y - ry * e2x) / det;
  const double b2 = (e1x * ry - e1y * rx) / det;
  const AlgebraData& d = algebra_data(fn.algebra);
  return {b1 / d.marks[0], b2 / d.marks[1]};
}

std::pair<TriangleSampling, TriangleSampling> split_square(const Image& img, AlgebraId algebra,
                                                           std::int64_t M) {
  if (img.width != img.height) throw std::invalid_argument("split_square: image must be square");
  if (img.width < 2) throw std::invalid_argument("split_square: image too small");
  if (M < img.width - 1)
    std::cerr << "orbitx: warning: grid density M=" << M << " is below the pixel density of a "
              << img.width << "x" << img.height << " image; resampling will lose detail\n";

  const double n = img.width - 1;
  // Both triangles share the diagonal edge (0,0)-(n,n), which is mapped to
  // the F edge from the origin vertex to w1-check/m1 in both; the samplings
  // therefore agree exactly on the shared diagonal.
  TriangleSampling lower{DiscreteFunction{algebra, M, GridKind::C, {}},
                         {{{0, 0}, {n, n}, {0, n}}},
                         false};
  TriangleSampling upper{DiscreteFunction{algebra, M, GridKind::C, {}},
                         {{{0, 0}, {n, n}, {n, 0}}},
                         true};
  const auto pts = enumerate_points(algebra, M);
  for (auto* tri : {&lower, &upper}) {
    tri->fn.values.reserve(pts.size());
    for (const auto& p : pts) {
      const auto px = tri->domain_to_pixel(p.point_coords());
      tri->fn.values.push_back(bilinear(img, px[0], px[1]));
    }
  }
  return {lower, upper};
}

Image reassemble(const TriangleSampling& lower, const TriangleSampling& upper, int width,
                 int height, Interp interp) {
  if (lower.fn.algebra != upper.fn.algebra || lower.fn.M != upper.fn.M)
    throw std::invalid_argument("reassemble: incompatible triangle samplings");
  if (lower.upper || !upper.upper)
    throw std::invalid_argument("reassemble: expected a (lower, upper) pair");
  const auto plan = Plan::get(lower.fn.algebra, lower.fn.M, GridKind::C);
  plan->check(lower.fn);
  plan->check(upper.fn);

  Spectrum ls, us;
  if (interp == Interp::Spectral) {
    ls = plan->forward(lower.fn);
    us = plan->forward(upper.fn);
  }

  Image img{width, height, std::vector<double>(static_cast<std::size_t>(width) * height)};
  parallel_for(static_cast<std::size_t>(height), [&](std::size_t begin, std::size_t end) {
    for (std::size_t y = begin; y < end; ++y) {
      for (int x = 0; x < width; ++x) {
        const bool in_lower = static_cast<double>(y) >= static_cast<double>(x);
        const TriangleSampling& tri = in_lower ? lower : upper;
        const PointCoords p = tri.pixel_to_domain(x, static_cast<double>(y));
        double v;
        if (interp == Interp::Spectral) {
          v = plan->inverse_at(in_lower ? ls : us, p).real();
        } else {
          v = grid_interp(*plan, tri.fn.values, p);
        }
        img.at(x, static_cast<int>(y)) = clamp01(v);
      }
    }
  });
  return img;
}

Image filter_image(const Image& img, const std::string& kernel_name, AlgebraId algebra,
                   std::int64_t M) {
  auto [lower, upper] = split_square(img, algebra, M);
  const Kernel kernel = builtin_kernel(kernel_name, algebra, M);
  lower.fn = convolve_spectral(lower.fn, kernel.fn);
  upper.fn = convolve_spectral(upper.fn, kernel.fn);
  return reassemble(lower, upper, img.width, img.height);
}

Image baseline_r2_filter(const Image& img, const std::string& kernel_name) {
  const auto& a = r2_kernels()[r2_kernel_index(kernel_name)];
  Image out{img.width, img.height,
            std::vector<double>(static_cast<std::size_t>(img.width) * img.height)};
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      double acc = 0.0;
      for (int i = -1; i <= 1; ++i) {
        const int rr = std::clamp(r + i, 0, img.height - 1);
        for (int j = -1; j <= 1; ++j) {
          const int cc = std::clamp(c + j, 0, img.width - 1);
          acc += img.at(cc, rr) * a[(i + 1) * 3 + (j + 1)];
        }
      }
      out.at(c, r) = clamp01(acc);
    }
  }
  return out;
}

}  // namespace orbitx
