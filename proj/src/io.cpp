#include "orbitx/io.hpp"

#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace orbitx {

namespace {

using nlohmann::json;

struct Meta {
  std::string type;
  AlgebraId algebra{};
  std::int64_t M = 0;
  GridKind kind = GridKind::C;
  std::string name;
  KernelNorm mode = KernelNorm::SumPreserving;
};

void write_meta(std::ostream& out, const std::string& type, AlgebraId a, std::int64_t M,
                GridKind k, const Kernel* kernel = nullptr) {
  out << "# orbitx " << type << " algebra=" << to_string(a) << " m=" << M
      << " kind=" << to_string(k);
  if (kernel) out << " name=" << kernel->name << " mode=" << to_string(kernel->mode);
  out << "\n";
}

Meta parse_meta(const std::string& line) {
  std::istringstream ss(line);
  std::string hash, tag;
  ss >> hash >> tag;
  if (hash != "#" || tag != "orbitx")
    throw std::runtime_error("csv: missing '# orbitx ...' metadata line");
  Meta m;
  ss >> m.type;
  std::string kv;
  std::map<std::string, std::string> fields;
  while (ss >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::runtime_error("csv: bad metadata token " + kv);
    fields[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (!fields.count("algebra") || !fields.count("m") || !fields.count("kind"))
    throw std::runtime_error("csv: metadata must carry algebra, m and kind");
  m.algebra = algebra_from_string(fields["algebra"]);
  m.M = std::stoll(fields["m"]);
  m.kind = kind_from_string(fields["kind"]);
  if (fields.count("name")) m.name = fields["name"];
  if (fields.count("mode")) m.mode = norm_from_string(fields["mode"]);
  return m;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void write_rows(std::ostream& out, GridKind kind, const auto& entries,
                const std::vector<Complex>& vals, auto triple_of, const char* c0) {
  out << c0 << (kind == GridKind::E ? ",sector,re,im\n" : ",re,im\n");
  out << std::setprecision(17);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& tr = triple_of(entries[i]);
    out << tr[0] << ',' << tr[1] << ',' << tr[2];
    if (kind == GridKind::E) out << ',' << (entries[i].reflected ? 'r' : 'f');
    out << ',' << vals[i].real() << ',' << vals[i].imag() << "\n";
  }
}

std::vector<Complex> read_rows(std::istream& in, const Meta& meta, bool labels) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("csv: missing column header");
  const auto plan = Plan::get(meta.algebra, meta.M, meta.kind);
  const std::size_t n = plan->size();
  std::vector<Complex> vals(n);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (row >= n) throw std::runtime_error("csv: more rows than grid entries");
    const auto cells = split_csv(line);
    const std::size_t expect = meta.kind == GridKind::E ? 6 : 5;
    if (cells.size() != expect) throw std::runtime_error("csv: wrong column count in data row");
    std::array<std::int64_t, 3> tr{std::stoll(cells[0]), std::stoll(cells[1]),
                                   std::stoll(cells[2])};
    bool reflected = false;
    std::size_t vi = 3;
    if (meta.kind == GridKind::E) {
      if (cells[3] != "f" && cells[3] != "r") throw std::runtime_error("csv: bad sector flag");
      reflected = cells[3] == "r";
      vi = 4;
    }
    const auto& exp_triple =
        labels ? plan->labels()[row].base.t : plan->points()[row].base.s;
    const bool exp_reflected =
        labels ? plan->labels()[row].reflected : plan->points()[row].reflected;
    if (tr != exp_triple || reflected != exp_reflected)
      throw std::runtime_error("csv: rows are not in grid enumeration order");
    vals[row] = {std::stod(cells[vi]), std::stod(cells[vi + 1])};
    ++row;
  }
  if (row != n) throw std::runtime_error("csv: fewer rows than grid entries");
  return vals;
}

json meta_json(const std::string& type, AlgebraId a, std::int64_t M, GridKind k) {
  return json{{"type", type}, {"algebra", to_string(a)}, {"m", M}, {"kind", to_string(k)}};
}

json rows_json(GridKind kind, const auto& entries, const std::vector<Complex>& vals,
               auto triple_of) {
  json rows = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& tr = triple_of(entries[i]);
    json row{{"triple", {tr[0], tr[1], tr[2]}}, {"re", vals[i].real()}, {"im", vals[i].imag()}};
    if (kind == GridKind::E) row["sector"] = entries[i].reflected ? "r" : "f";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Complex> values_from_json(const json& j, const Meta& meta, bool labels) {
  const auto plan = Plan::get(meta.algebra, meta.M, meta.kind);
  const auto& rows = j.at("rows");
  if (rows.size() != plan->size()) throw std::runtime_error("json: wrong row count");
  std::vector<Complex> vals(plan->size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto& row = rows[i];
    const auto tr = row.at("triple");
    std::array<std::int64_t, 3> triple{tr.at(0).get<std::int64_t>(),
                                       tr.at(1).get<std::int64_t>(),
                                       tr.at(2).get<std::int64_t>()};
    const bool reflected = row.value("sector", "f") == std::string("r");
    const auto& exp_triple = labels ? plan->labels()[i].base.t : plan->points()[i].base.s;
    const bool exp_reflected = labels ? plan->labels()[i].reflected : plan->points()[i].reflected;
    if (triple != exp_triple || reflected != exp_reflected)
      throw std::runtime_error("json: rows are not in grid enumeration order");
    vals[i] = {row.at("re").get<double>(), row.at("im").get<double>()};
  }
  return vals;
}

json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
}

Meta meta_from_json(const json& j) {
  Meta m;
  m.type = j.at("type").get<std::string>();
  m.algebra = algebra_from_string(j.at("algebra").get<std::string>());
  m.M = j.at("m").get<std::int64_t>();
  m.kind = kind_from_string(j.at("kind").get<std::string>());
  return m;
}

}  // namespace

std::string to_string(AlgebraId id) {
  switch (id) {
    case AlgebraId::A2: return "a2";
    case AlgebraId::C2: return "c2";
    case AlgebraId::G2: return "g2";
  }
  return "?";
}

std::string to_string(GridKind kind) { return kind == GridKind::C ? "c" : "e"; }

std::string to_string(KernelNorm mode) {
  return mode == KernelNorm::SumPreserving ? "sum-preserving" : "none";
}

AlgebraId algebra_from_string(const std::string& s) {
  if (s == "a2" || s == "A2") return AlgebraId::A2;
  if (s == "c2" || s == "C2") return AlgebraId::C2;
  if (s == "g2" || s == "G2") return AlgebraId::G2;
  throw std::runtime_error("unknown algebra '" + s + "' (expected a2, c2 or g2)");
}

GridKind kind_from_string(const std::string& s) {
  if (s == "c" || s == "C") return GridKind::C;
  if (s == "e" || s == "E") return GridKind::E;
  throw std::runtime_error("unknown kind '" + s + "' (expected c or e)");
}

KernelNorm norm_from_string(const std::string& s) {
  if (s == "sum-preserving") return KernelNorm::SumPreserving;
  if (s == "none") return KernelNorm::None;
  throw std::runtime_error("unknown normalization mode '" + s + "'");
}

void write_function_csv(std::ostream& out, const DiscreteFunction& f) {
  const auto plan = Plan::get(f.algebra, f.M, f.kind);
  plan->check(f);
  write_meta(out, "function", f.algebra, f.M, f.kind);
  write_rows(out, f.kind, plan->points(), f.values,
             [](const EvenGridPoint& p) { return p.base.s; }, "s0,s1,s2");
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  const auto plan = Plan::get(s.algebra, s.M, s.kind);
  plan->check(s);
  write_meta(out, "spectrum", s.algebra, s.M, s.kind);
  write_rows(out, s.kind, plan->labels(), s.coeffs,
             [](const EvenLabelPoint& l) { return l.base.t; }, "t0,t1,t2");
}

void write_kernel_csv(std::ostream& out, const Kernel& k) {
  const auto plan = Plan::get(k.fn.algebra, k.fn.M, k.fn.kind);
  plan->check(k.fn);
  write_meta(out, "kernel", k.fn.algebra, k.fn.M, k.fn.kind, &k);
  write_rows(out, k.fn.kind, plan->points(), k.fn.values,
             [](const EvenGridPoint& p) { return p.base.s; }, "s0,s1,s2");
}

DiscreteFunction read_function_csv(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw std::runtime_error("csv: empty input");
  const Meta meta = parse_meta(first);
  if (meta.type != "function" && meta.type != "kernel")
    throw std::runtime_error("csv: expected a function file, got " + meta.type);
  return {meta.algebra, meta.M, meta.kind, read_rows(in, meta, false)};
}

Spectrum read_spectrum_csv(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw std::runtime_error("csv: empty input");
  const Meta meta = parse_meta(first);
  if (meta.type != "spectrum")
    throw std::runtime_error("csv: expected a spectrum file, got " + meta.type);
  return {meta.algebra, meta.M, meta.kind, read_rows(in, meta, true)};
}

Kernel read_kernel_csv(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw std::runtime_error("csv: empty input");
  const Meta meta = parse_meta(first);
  if (meta.type != "kernel") throw std::runtime_error("csv: expected a kernel file");
  Kernel k{{meta.algebra, meta.M, meta.kind, read_rows(in, meta, false)}, meta.name, meta.mode};
  return k;
}

void write_function_json(std::ostream& out, const DiscreteFunction& f) {
  const auto plan = Plan::get(f.algebra, f.M, f.kind);
  plan->check(f);
  json j = meta_json("function", f.algebra, f.M, f.kind);
  j["rows"] = rows_json(f.kind, plan->points(), f.values,
                        [](const EvenGridPoint& p) { return p.base.s; });
  out << j.dump(2) << "\n";
}

void write_spectrum_json(std::ostream& out, const Spectrum& s) {
  const auto plan = Plan::get(s.algebra, s.M, s.kind);
  plan->check(s);
  json j = meta_json("spectrum", s.algebra, s.M, s.kind);
  j["rows"] = rows_json(s.kind, plan->labels(), s.coeffs,
                        [](const EvenLabelPoint& l) { return l.base.t; });
  out << j.dump(2) << "\n";
}

DiscreteFunction read_function_json(std::istream& in) {
  const json j = parse_json(in);
  const Meta meta = meta_from_json(j);
  if (meta.type != "function" && meta.type != "kernel")
    throw std::runtime_error("json: expected a function document");
  return {meta.algebra, meta.M, meta.kind, values_from_json(j, meta, false)};
}

Spectrum read_spectrum_json(std::istream& in) {
  const json j = parse_json(in);
  const Meta meta = meta_from_json(j);
  if (meta.type != "spectrum") throw std::runtime_error("json: expected a spectrum document");
  return {meta.algebra, meta.M, meta.kind, values_from_json(j, meta, true)};
}

void write_grid_csv(std::ostream& out, AlgebraId algebra, std::int64_t M, GridKind kind,
                    bool labels) {
  out << std::setprecision(17);
  if (labels) {
    out << "algebra,m,kind,t0,t1,t2,sector,h_dual,l1,l2\n";
    const auto ls = kind == GridKind::C
                        ? [](AlgebraId a, std::int64_t m) {
                            std::vector<EvenLabelPoint> v;
                            for (const auto& l : enumerate_labels(a, m)) v.push_back({l, false, 1});
                            return v;
                          }(algebra, M)
                        : enumerate_labels_even(algebra, M);
    for (const auto& l : ls) {
      const auto c = l.label_coords();
      out << to_string(algebra) << ',' << M << ',' << to_string(kind) << ',' << l.base.t[0]
          << ',' << l.base.t[1] << ',' << l.base.t[2] << ',' << (l.reflected ? 'r' : 'f') << ','
          << (kind == GridKind::C ? h_dual(l.base) : h_dual_even(l)) << ',' << c.l1 << ','
          << c.l2 << "\n";
    }
  } else {
    out << "algebra,m,kind,s0,s1,s2,sector,epsilon,x1,x2\n";
    const auto ps = kind == GridKind::C
                        ? [](AlgebraId a, std::int64_t m) {
                            std::vector<EvenGridPoint> v;
                            for (const auto& p : enumerate_points(a, m)) v.push_back({p, false, 1});
                            return v;
                          }(algebra, M)
                        : enumerate_points_even(algebra, M);
    for (const auto& p : ps) {
      const auto c = p.point_coords();
      out << to_string(algebra) << ',' << M << ',' << to_string(kind) << ',' << p.base.s[0]
          << ',' << p.base.s[1] << ',' << p.base.s[2] << ',' << (p.reflected ? 'r' : 'f') << ','
          << (kind == GridKind::C ? epsilon(p.base) : epsilon_even(p)) << ',' << c.x1 << ','
          << c.x2 << "\n";
    }
  }
}

DiscreteFunction read_function_any(std::istream& in) {
  if (in.peek() == '{') return read_function_json(in);
  return read_function_csv(in);
}

Spectrum read_spectrum_any(std::istream& in) {
  if (in.peek() == '{') return read_spectrum_json(in);
  return read_spectrum_csv(in);
}

}  // namespace orbitx
