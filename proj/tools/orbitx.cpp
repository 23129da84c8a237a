#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitx/imaging.hpp"
#include "orbitx/io.hpp"

namespace {

using namespace orbitx;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return in;
}

/// Writes through a stringstream so outputs are all-or-nothing and stdout
/// ("-") works uniformly.
void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ostringstream buf;
  writer(buf);
  if (path.empty() || path == "-") {
    std::cout << buf.str();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << buf.str();
  if (!out) throw std::runtime_error("failed writing: " + path);
}

struct CommonFlags {
  std::string algebra = "a2";
  std::int64_t m = 4;
  std::string kind = "c";
};

void add_common(CLI::App* cmd, CommonFlags& fl, bool with_kind = true) {
  cmd->add_option("--algebra", fl.algebra, "algebra: a2, c2 or g2")
      ->check(CLI::IsMember({"a2", "c2", "g2"}));
  cmd->add_option("--m", fl.m, "grid density M (>= 1)")->check(CLI::PositiveNumber);
  if (with_kind)
    cmd->add_option("--kind", fl.kind, "orbit-function family: c or e")
        ->check(CLI::IsMember({"c", "e"}));
}

int run_verify(const CommonFlags& fl) {
  const auto rep =
      verify_orthogonality(algebra_from_string(fl.algebra), fl.m, kind_from_string(fl.kind));
  std::cout << "orthogonality " << fl.algebra << " M=" << fl.m << " kind=" << fl.kind << "\n"
            << "  max |off-diagonal|    " << rep.max_offdiag << "   (bound " << rep.offdiag_bound
            << ")\n"
            << "  max diag rel. error   " << rep.max_diag_rel_err << "   (bound "
            << rep.diag_rel_bound << ")\n"
            << (rep.pass() ? "  PASS\n" : "  FAIL\n");
  return rep.pass() ? kExitOk : kExitVerify;
}

int run_demo(const std::string& out_dir, int size, std::int64_t m) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto path = [&](const std::string& name) { return (fs::path(out_dir) / name).string(); };

  const Image hex = make_hexagon_test_image(size);
  save_image(hex, path("hexagon.pgm"));

  // Mirrors the paper-style demo: blur the original, sharpen the blurred
  // image, detect edges on the original; once per convolution flavor.
  const Image blur_r2 = baseline_r2_filter(hex, "mean");
  save_image(blur_r2, path("mean_r2.pgm"));
  save_image(baseline_r2_filter(blur_r2, "sharpen"), path("sharpen_r2.pgm"));
  save_image(baseline_r2_filter(hex, "edge"), path("edge_r2.pgm"));

  const Image blur_orbit = filter_image(hex, "mean", AlgebraId::A2, m);
  save_image(blur_orbit, path("mean_orbit.pgm"));
  save_image(filter_image(blur_orbit, "sharpen", AlgebraId::A2, m), path("sharpen_orbit.pgm"));
  save_image(filter_image(hex, "edge", AlgebraId::A2, m), path("edge_orbit.pgm"));

  std::cerr << "demo: wrote hexagon.pgm and 6 filtered images to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete C-/E- Weyl orbit-function transforms, convolutions and image filters "
               "on the fundamental domains of A2, C2 and G2"};
  app.require_subcommand(1);

  CommonFlags fl;
  std::string in_path, in2_path, out_path, format = "csv", kernel, method = "orbit", at;
  std::string out_dir = "demo-out";
  bool labels = false, spatial = false;
  int size = 64;

  auto* grid = app.add_subcommand("grid-info", "list grid points (or labels) with weights as CSV");
  add_common(grid, fl);
  grid->add_flag("--labels", labels, "list the label grid instead of the point grid");
  grid->add_option("--out", out_path, "output file (default stdout)");

  auto* tr = app.add_subcommand("transform", "forward orbit transform of a sampled function");
  tr->add_option("--in", in_path, "input function (csv or json)")->required();
  tr->add_option("--out", out_path, "output spectrum file (default stdout)");
  tr->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* itr = app.add_subcommand("inv-transform", "inverse orbit transform of a spectrum");
  itr->add_option("--in", in_path, "input spectrum (csv or json)")->required();
  itr->add_option("--out", out_path, "output function file (default stdout)");
  itr->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  itr->add_option("--at", at, "evaluate the interpolation at \"x1,x2\" instead of on the grid");

  auto* conv = app.add_subcommand("convolve", "orbit convolution of two functions");
  conv->add_option("--in", in_path, "first operand (csv or json)")->required();
  conv->add_option("--with", in2_path, "second operand (function/kernel file)");
  conv->add_option("--kernel", kernel, "builtin kernel: mean, sharpen, edge or identity");
  conv->add_flag("--spatial", spatial, "use the definition sum instead of the spectral path");
  conv->add_option("--out", out_path, "output function file (default stdout)");
  conv->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* ver = app.add_subcommand("verify", "check discrete orthogonality at the spec tolerances");
  add_common(ver, fl);

  auto* fimg = app.add_subcommand("filter-image", "spatially filter a square PGM image");
  add_common(fimg, fl, false);
  fimg->add_option("--kernel", kernel, "mean, sharpen, edge or identity")->required();
  fimg->add_option("--in", in_path, "input PGM (P2/P5)")->required();
  fimg->add_option("--out", out_path, "output PGM (P5)")->required();
  fimg->add_option("--method", method, "orbit convolution or plain R^2 baseline")
      ->check(CLI::IsMember({"orbit", "r2"}));

  auto* demo = app.add_subcommand("demo", "hexagon test image + all six filtered outputs");
  demo->add_option("--out-dir", out_dir, "output directory");
  demo->add_option("--size", size, "image size in pixels")->check(CLI::Range(32, 4096));
  demo->add_option("--m", fl.m, "grid density for the orbit filters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (grid->parsed()) {
      emit(out_path, [&](std::ostream& os) {
        write_grid_csv(os, algebra_from_string(fl.algebra), fl.m, kind_from_string(fl.kind),
                       labels);
      });
      return kExitOk;
    }
    if (tr->parsed()) {
      auto in = open_in(in_path);
      const Spectrum s = forward(read_function_any(in));
      emit(out_path, [&](std::ostream& os) {
        format == "json" ? write_spectrum_json(os, s) : write_spectrum_csv(os, s);
      });
      return kExitOk;
    }
    if (itr->parsed()) {
      auto in = open_in(in_path);
      const Spectrum s = read_spectrum_any(in);
      if (!at.empty()) {
        double x1 = 0, x2 = 0;
        char comma = 0;
        std::istringstream ss(at);
        if (!(ss >> x1 >> comma >> x2) || comma != ',')
          throw CLI::ValidationError("--at", "expected \"x1,x2\"");
        const Complex v = inverse_at(s, {x1, x2});
        std::cout << std::setprecision(17) << v.real() << " " << v.imag() << "\n";
        return kExitOk;
      }
      const DiscreteFunction f = inverse_on_grid(s);
      emit(out_path, [&](std::ostream& os) {
        format == "json" ? write_function_json(os, f) : write_function_csv(os, f);
      });
      return kExitOk;
    }
    if (conv->parsed()) {
      if (in2_path.empty() == kernel.empty())
        throw CLI::ValidationError("convolve", "pass exactly one of --with / --kernel");
      auto in = open_in(in_path);
      const DiscreteFunction f = read_function_any(in);
      DiscreteFunction g;
      if (!kernel.empty()) {
        g = builtin_kernel(kernel, f.algebra, f.M, f.kind).fn;
      } else {
        auto in2 = open_in(in2_path);
        g = read_function_any(in2);
      }
      const DiscreteFunction h = spatial ? convolve_spatial(f, g) : convolve_spectral(f, g);
      emit(out_path, [&](std::ostream& os) {
        format == "json" ? write_function_json(os, h) : write_function_csv(os, h);
      });
      return kExitOk;
    }
    if (ver->parsed()) return run_verify(fl);
    if (fimg->parsed()) {
      const Image img = load_image(in_path);
      const Image out = method == "r2" ? baseline_r2_filter(img, kernel)
                                       : filter_image(img, kernel, algebra_from_string(fl.algebra),
                                                      fl.m);
      save_image(out, out_path);
      return kExitOk;
    }
    if (demo->parsed()) return run_demo(out_dir, size, demo->count("--m") ? fl.m : size);
  } catch (const CLI::Error& e) {
    std::cerr << "orbitx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "orbitx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "orbitx: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
