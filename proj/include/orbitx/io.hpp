#pragma once

#include <iosfwd>
#include <string>

#include "orbitx/convolution.hpp"

namespace orbitx {

std::string to_string(AlgebraId id);          // "a2" / "c2" / "g2"
std::string to_string(GridKind kind);         // "c" / "e"
std::string to_string(KernelNorm mode);       // "sum-preserving" / "none"
AlgebraId algebra_from_string(const std::string& s);
GridKind kind_from_string(const std::string& s);
KernelNorm norm_from_string(const std::string& s);

/// CSV layout: one `# orbitx <type> algebra=.. m=.. kind=..` metadata line,
/// a column header, then one row per grid entry in enumeration order.
/// C-kind rows are (s0,s1,s2,re,im) / (t0,t1,t2,re,im); E-kind rows carry an
/// extra `sector` column (f = fundamental domain, r = reflected copy).
void write_function_csv(std::ostream& out, const DiscreteFunction& f);
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
void write_kernel_csv(std::ostream& out, const Kernel& k);
DiscreteFunction read_function_csv(std::istream& in);
Spectrum read_spectrum_csv(std::istream& in);
Kernel read_kernel_csv(std::istream& in);

void write_function_json(std::ostream& out, const DiscreteFunction& f);
void write_spectrum_json(std::ostream& out, const Spectrum& s);
DiscreteFunction read_function_json(std::istream& in);
Spectrum read_spectrum_json(std::istream& in);

/// Grid listing for the CLI: points (epsilon + coordinates) or labels
/// (h value + coordinates), C or even variants.
void write_grid_csv(std::ostream& out, AlgebraId algebra, std::int64_t M, GridKind kind,
                    bool labels);

/// Reads either CSV or JSON, sniffing the leading character.
DiscreteFunction read_function_any(std::istream& in);
Spectrum read_spectrum_any(std::istream& in);

}  // namespace orbitx
