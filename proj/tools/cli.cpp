#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ahatom/atomkit.hpp"
#include "ahatom/error.hpp"
#include "ahatom/matrix_elements.hpp"
#include "ahatom/reference_data.hpp"
#include "ahatom/units.hpp"

namespace ahatom::cli {

using nlohmann::json;

namespace {

enum class Format { text, csv, json };

// Shortest representation that parses back to the same double.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct ParamOptions {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> intra;

  ScreeningParams resolve() const {
    ScreeningParams p;
    if (alpha) p.alpha = *alpha;
    if (beta) p.beta = *beta;
    if (intra) p.intra_factor = *intra;
    p.validate();
    return p;
  }
};

struct OutputOptions {
  bool json = false;
  bool csv = false;

  Format format() const {
    if (json && csv) throw InvalidArgument("--json and --csv are exclusive");
    return json ? Format::json : csv ? Format::csv : Format::text;
  }
};

// Options shared by the commands that act on one atom or ion.
struct AtomOptions {
  int z = 0;
  std::optional<int> electrons;
  std::string config;
  bool reference = false;
  int n_cap = 7;
  int l_max = 4;
  bool local = false;
};

void add_params(CLI::App* cmd, ParamOptions& p) {
  cmd->add_option("--alpha", p.alpha, "Inter-shell constant alpha");
  cmd->add_option("--beta", p.beta, "Angular constant beta");
  cmd->add_option("--intra", p.intra, "Same-shell screening factor");
}

void add_output(CLI::App* cmd, OutputOptions& o, bool csv = true) {
  cmd->add_flag("--json", o.json, "JSON output");
  if (csv) cmd->add_flag("--csv", o.csv, "CSV output");
}

void add_atom(CLI::App* cmd, AtomOptions& a, bool with_config = true) {
  cmd->add_option("Z", a.z, "Nuclear charge")->required();
  cmd->add_option("--electrons", a.electrons, "Electron count (default Z)");
  if (with_config) {
    cmd->add_option("--config", a.config, "Configuration, e.g. \"[Ne] 3s2 3p1\"");
    cmd->add_flag("--reference", a.reference,
                  "Use the tabulated reference configuration");
  }
  cmd->add_option("--ncap", a.n_cap, "Largest principal quantum number searched");
  cmd->add_option("--lmax", a.l_max, "Largest angular momentum searched");
  cmd->add_flag("--local", a.local, "Local search instead of exhaustive");
}

void warn_beyond_table(int z, std::ostream& err) {
  if (z > kMaxTabulatedZ) {
    err << "warning: Z=" << z << " lies beyond Z=" << kMaxTabulatedZ
        << "; relativistic effects are not modelled\n";
  }
}

SearchSpec search_spec(const AtomOptions& a) {
  SearchSpec spec;
  spec.z_nuclear = a.z;
  spec.n_electrons = a.electrons.value_or(a.z);
  spec.n_cap = a.n_cap;
  spec.l_max = a.l_max;
  spec.mode = a.local ? SearchMode::local : SearchMode::exhaustive;
  return spec;
}

// Builds the atom from --config, --reference or the ground-state search.
SearchResult resolve_atom(const AtomOptions& a, const ScreeningParams& p,
                          std::ostream& err) {
  if (a.z < 1) throw InvalidArgument("Z must be a positive integer");
  warn_beyond_table(a.z, err);
  if (!a.config.empty() && a.reference) {
    throw InvalidArgument("--config and --reference are exclusive");
  }
  std::optional<Configuration> config;
  if (!a.config.empty()) config = Configuration::parse(a.config);
  if (a.reference) config = reference_configuration(a.z);
  if (config) {
    if (a.electrons && *a.electrons != config->total_electrons()) {
      throw InvalidArgument("--electrons disagrees with the configuration");
    }
    return SearchResult{make_atom(a.z, *config, p), {}};
  }
  return search_ground_state(search_spec(a), p);
}

json params_to_json(const ScreeningParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"intra_factor", p.intra_factor}};
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, Format f) {
  if (f == Format::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string cell(double v, Format f, int digits) {
  return f == Format::csv ? num(v) : fixed(v, digits);
}

// Subcommand bodies ---------------------------------------------------------

void cmd_energy(const AtomOptions& a, const ParamOptions& po, Format f,
                std::ostream& out, std::ostream& err) {
  const auto res = resolve_atom(a, po.resolve(), err);
  const AtomModel& atom = res.atom;
  if (f == Format::json) {
    out << atom_to_json(atom).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, g] : atom.config) {
    rows.push_back({key.label(), std::to_string(g), cell(atom.charges.at(key).value, f, 6),
                    cell(atom.energy.per_subshell.at(key), f, 6)});
  }
  if (f == Format::text) {
    out << "Z = " << a.z << ", " << atom.n_electrons() << " electrons: "
        << atom.config.to_string() << '\n'
        << "binding energy: " << fixed(atom.energy.binding, 6) << " hartree ("
        << fixed(atom.energy.binding * units::hartree_ev, 4) << " eV)\n";
    if (!atom.energy.unbound.empty()) out << "warning: configuration has unbound subshells\n";
  }
  print_table(out, {"subshell", "occupancy", "z_eff", "energy_hartree"}, rows, f);
}

void cmd_charges(const AtomOptions& a, const ParamOptions& po, Format f,
                 std::ostream& out, std::ostream& err) {
  const auto res = resolve_atom(a, po.resolve(), err);
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& [key, q] : res.atom.charges) {
      arr.push_back({{"subshell", key.label()}, {"z_eff", q.value}, {"unbound", q.unbound}});
    }
    out << json{{"Z", a.z}, {"configuration", res.atom.config.to_string()},
                {"charges", arr}}.dump(2)
        << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, q] : res.atom.charges) {
    rows.push_back({key.label(), std::to_string(res.atom.config.occupancy(key)),
                    cell(q.value, f, 6), q.unbound ? "1" : "0"});
  }
  print_table(out, {"subshell", "occupancy", "z_eff", "unbound"}, rows, f);
}

void cmd_search(const AtomOptions& a, const ParamOptions& po, Format f,
                std::ostream& out, std::ostream& err) {
  AtomOptions opts = a;
  opts.config.clear();
  opts.reference = false;
  const auto res = resolve_atom(opts, po.resolve(), err);
  const auto& atom = res.atom;
  if (f == Format::json) {
    json j = atom_to_json(atom);
    j["mode"] = a.local ? "local" : "exhaustive";
    j["ties"] = json::array();
    for (const auto& t : res.ties) j["ties"].push_back(t.to_string());
    out << j.dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    out << "Z,electrons,configuration,binding_hartree,ties\n"
        << a.z << ',' << atom.n_electrons() << ',' << atom.config.to_string() << ','
        << num(atom.energy.binding) << ',' << res.ties.size() << '\n';
    return;
  }
  out << "ground state (" << (a.local ? "local" : "exhaustive") << "): "
      << atom.config.to_string() << '\n'
      << "binding energy: " << fixed(atom.energy.binding, 6) << " hartree\n";
  for (const auto& t : res.ties) out << "degenerate: " << t.to_string() << '\n';
}

void cmd_ip(const AtomOptions& a, const ParamOptions& po,
            const std::vector<std::string>& shells, bool relax, Format f,
            std::ostream& out, std::ostream& err) {
  const ScreeningParams p = po.resolve();
  const auto res = resolve_atom(a, p, err);
  std::vector<SubshellKey> keys;
  for (const auto& s : shells) keys.push_back(SubshellKey::parse(s));
  if (keys.empty()) {
    for (const auto& [key, g] : res.atom.config) keys.push_back(key);
  }
  std::vector<IonizationRecord> recs;
  for (const auto& key : keys) {
    recs.push_back(ionization_potential(a.z, res.atom.config, key, p, relax));
  }
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& r : recs) {
      arr.push_back({{"shell", r.shell.label()}, {"ip_hartree", r.ip_hartree},
                     {"ip_ev", r.ip_ev}});
    }
    out << json{{"Z", a.z}, {"configuration", res.atom.config.to_string()},
                {"relaxed_ion", relax}, {"ionization_potentials", arr}}.dump(2)
        << '\n';
    return;
  }
  if (f == Format::text) out << "configuration: " << res.atom.config.to_string() << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : recs) {
    rows.push_back({r.shell.label(), cell(r.ip_hartree, f, 6), cell(r.ip_ev, f, 4)});
  }
  print_table(out, {"shell", "ip_hartree", "ip_ev"}, rows, f);
}

void cmd_density(const AtomOptions& a, const ParamOptions& po, double r_min,
                 double r_max, int points, Format f, std::ostream& out,
                 std::ostream& err) {
  const auto res = resolve_atom(a, po.resolve(), err);
  const auto grid = log_grid(r_min, r_max, points);
  const auto prof = density_profile(res.atom, grid);
  if (f == Format::json) {
    out << json{{"Z", a.z},
                {"configuration", res.atom.config.to_string()},
                {"r_bohr", prof.grid},
                {"rho", prof.rho},
                {"D", prof.d_radial},
                {"radial_maxima", count_radial_maxima(prof)},
                {"integrated_electrons", integrated_electrons(res.atom)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "r_bohr,rho,D\n";
  for (std::size_t i = 0; i < prof.grid.size(); ++i) {
    out << num(prof.grid[i]) << ',' << num(prof.rho[i]) << ',' << num(prof.d_radial[i])
        << '\n';
  }
}

void cmd_formfactor(const AtomOptions& a, const ParamOptions& po, double s_min,
                    double s_max, int points, Format f, std::ostream& out,
                    std::ostream& err) {
  if (points < 1 || s_min < 0.0 || s_max < s_min) {
    throw InvalidArgument("need 0 <= smin <= smax and points >= 1");
  }
  const auto res = resolve_atom(a, po.resolve(), err);
  std::vector<double> s_grid;
  for (int i = 0; i < points; ++i) {
    s_grid.push_back(points == 1 ? s_min : s_min + (s_max - s_min) * i / (points - 1));
  }
  const auto curve = form_factor_curve(res.atom, s_grid);
  if (f == Format::json) {
    json xi = json::object();
    for (const auto& [key, v] : curve.xi) xi[key.label()] = v;
    out << json{{"Z", a.z}, {"configuration", res.atom.config.to_string()},
                {"s_inv_angstrom", curve.s_grid}, {"q_inv_bohr", curve.q_grid},
                {"f", curve.f}, {"xi", xi}}.dump(2)
        << '\n';
    return;
  }
  out << "s_inv_angstrom,q_inv_bohr,f\n";
  for (std::size_t i = 0; i < curve.s_grid.size(); ++i) {
    out << num(curve.s_grid[i]) << ',' << num(curve.q_grid[i]) << ',' << num(curve.f[i])
        << '\n';
  }
}

void cmd_rho0(int z_min, int z_max, bool reference, const ParamOptions& po,
              Format f, std::ostream& out, std::ostream& err) {
  if (z_min < 1) throw InvalidArgument("Z must be a positive integer");
  const ScreeningParams p = po.resolve();
  json arr = json::array();
  if (f != Format::json) out << "Z,rho0\n";
  for (int z = z_min; z <= z_max; ++z) {
    AtomOptions a;
    a.z = z;
    a.reference = reference;
    const auto res = resolve_atom(a, p, err);
    const double rho0 = rho_at_nucleus(res.atom);
    if (f == Format::json) {
      arr.push_back({{"Z", z}, {"configuration", res.atom.config.to_string()},
                     {"rho0", rho0}});
    } else {
      out << z << ',' << num(rho0) << '\n';
    }
  }
  if (f == Format::json) out << arr.dump(2) << '\n';
}

void cmd_table1(int n_max, bool long_form, const ParamOptions& po, Format f,
                std::ostream& out) {
  if (n_max < 1) throw InvalidArgument("nmax must be >= 1");
  const auto grid = difference_grid(n_max, po.resolve());
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& r : grid) {
      arr.push_back({{"a", r.pair.a.label()}, {"b", r.pair.b.label()},
                     {"exact", r.exact}, {"approx", r.approx}, {"diff", r.diff}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (long_form) {
    out << "a,b,exact,approx,diff\n";
    for (const auto& r : grid) {
      out << r.pair.a.label() << ',' << r.pair.b.label() << ',' << num(r.exact) << ','
          << num(r.approx) << ',' << num(r.diff) << '\n';
    }
    return;
  }
  std::vector<SubshellKey> keys;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) keys.emplace_back(n, l);
  }
  std::map<PairKey, double> diff;
  for (const auto& r : grid) diff.emplace(r.pair, r.diff);
  out << "nl";
  for (const auto& k : keys) out << ',' << k.label();
  out << '\n';
  for (const auto& a : keys) {
    out << a.label();
    for (const auto& b : keys) out << ',' << num(diff.at(PairKey(a, b)));
    out << '\n';
  }
}

void cmd_table2(int z_min, int z_max, const std::string& ref_path, bool search,
                const ParamOptions& po, Format f, std::ostream& out,
                std::ostream& err) {
  if (z_min < 1 || z_max > kMaxTabulatedZ) {
    throw InvalidArgument("table2 covers 1 <= Z <= " + std::to_string(kMaxTabulatedZ));
  }
  const ScreeningParams p = po.resolve();
  const ReferenceDataset loaded =
      ref_path.empty() ? ReferenceDataset{} : ReferenceDataset::load(ref_path);
  const ReferenceDataset& ref = ref_path.empty() ? ReferenceDataset::bundled() : loaded;

  int missing = 0;
  const auto lookup = [&](int z, const std::string& label) {
    auto v = ref.find(z, label);
    if (!v) ++missing;
    return v;
  };
  const auto opt_cell = [](const std::optional<double>& v) {
    return v ? num(*v) : std::string();
  };

  json arr = json::array();
  if (f != Format::json) {
    out << "Z,configuration,E_AH,E_ref,rel_err_percent";
    for (int i = 1; i <= 3; ++i) {
      out << ",shell" << i << ",IP" << i << "_eV,IP" << i << "_ref_eV";
    }
    out << '\n';
  }
  for (int z = z_min; z <= z_max; ++z) {
    AtomOptions a;
    a.z = z;
    a.reference = !search;
    const auto res = resolve_atom(a, p, err);
    const double e_ah = res.atom.energy.binding;
    const auto e_ref = lookup(z, "E_HF");
    std::optional<double> rel;
    if (e_ref) rel = 100.0 * (e_ah - *e_ref) / *e_ref;

    json row{{"Z", z}, {"configuration", res.atom.config.to_string()}, {"E_AH", e_ah}};
    row["E_ref"] = e_ref ? json(*e_ref) : json(nullptr);
    row["rel_err_percent"] = rel ? json(*rel) : json(nullptr);
    row["ionization_potentials"] = json::array();
    std::ostringstream line;
    line << z << ',' << res.atom.config.to_string() << ',' << num(e_ah) << ','
         << opt_cell(e_ref) << ',' << opt_cell(rel);
    const auto& shells = ip_shells(z);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i >= shells.size()) {
        line << ",,,";
        continue;
      }
      const SubshellKey& key = shells[i];
      std::optional<double> ip;
      if (res.atom.config.occupied(key)) {
        ip = ionization_potential(z, res.atom.config, key, p).ip_ev;
      }
      const auto ip_ref = lookup(z, "IP_HF:" + key.label());
      line << ',' << key.label() << ',' << opt_cell(ip) << ',' << opt_cell(ip_ref);
      row["ionization_potentials"].push_back(
          {{"shell", key.label()},
           {"ip_ev", ip ? json(*ip) : json(nullptr)},
           {"ip_ref_ev", ip_ref ? json(*ip_ref) : json(nullptr)}});
    }
    if (f == Format::json) {
      arr.push_back(std::move(row));
    } else {
      out << line.str() << '\n';
    }
  }
  if (f == Format::json) out << arr.dump(2) << '\n';
  if (missing > 0) {
    err << "warning: " << missing << " reference values missing; columns left blank\n";
  }
}

void cmd_asymptote(std::optional<double> beta, bool scan, const ParamOptions& po,
                   Format f, std::ostream& out, std::ostream& err) {
  ScreeningParams p = po.resolve();
  if (beta) p.beta = *beta;
  p.validate();
  const double c_small = screening_integral_coefficient(p.beta);
  const double c_big = asymptotic_binding_coefficient(p.beta);
  if (scan) {
    if (f == Format::json) throw InvalidArgument("--scan writes CSV only");
    out << "Z,binding_hartree,binding_over_z73\n";
    for (int z = 1; z <= kMaxTabulatedZ; ++z) {
      AtomOptions a;
      a.z = z;
      a.reference = true;
      const double b = resolve_atom(a, p, err).atom.energy.binding;
      out << z << ',' << num(b) << ',' << num(b / std::pow(z, 7.0 / 3.0)) << '\n';
    }
    return;
  }
  if (f == Format::json) {
    out << json{{"beta", p.beta},
                {"screening_coefficient", c_small},
                {"binding_coefficient", c_big},
                {"thomas_fermi", kThomasFermiCoefficient}}
               .dump(2)
        << '\n';
    return;
  }
  if (f == Format::csv) {
    out << "beta,screening_coefficient,binding_coefficient,thomas_fermi\n"
        << num(p.beta) << ',' << num(c_small) << ',' << num(c_big) << ','
        << num(kThomasFermiCoefficient) << '\n';
    return;
  }
  out << "beta = " << p.beta << '\n'
      << "Z_n = Z - c n^3,    c = " << fixed(c_small, 6) << '\n'
      << "E  = -C Z^(7/3),   C = " << fixed(c_big, 6) << '\n'
      << "Thomas-Fermi       C = " << fixed(kThomasFermiCoefficient, 6) << '\n';
}

void cmd_calibrate(double target, Format f, std::ostream& out) {
  const double alpha = calibrate_alpha();
  const double intra = calibrate_intra_factor();
  const double beta = calibrate_beta(target);
  if (f == Format::json) {
    out << json{{"alpha", alpha}, {"intra_factor", intra}, {"beta", beta},
                {"target", target}}.dump(2)
        << '\n';
    return;
  }
  if (f == Format::csv) {
    out << "alpha,intra_factor,beta,target\n"
        << num(alpha) << ',' << num(intra) << ',' << num(beta) << ',' << num(target)
        << '\n';
    return;
  }
  out << "alpha        = " << fixed(alpha, 10) << "  (26/81 = " << fixed(26.0 / 81.0, 10)
      << ")\n"
      << "intra factor = " << fixed(intra, 10) << "  (5/16)\n"
      << "beta         = " << fixed(beta, 6) << "  for C = " << target << '\n';
}

}  // namespace

json atom_to_json(const AtomModel& atom) {
  json shells = json::array();
  for (const auto& [key, g] : atom.config) {
    const auto& q = atom.charges.at(key);
    shells.push_back({{"subshell", key.label()},
                      {"occupancy", g},
                      {"z_eff", q.value},
                      {"unbound", q.unbound},
                      {"energy_hartree", atom.energy.per_subshell.at(key)}});
  }
  return {{"Z", atom.z_nuclear},
          {"configuration", atom.config.to_string()},
          {"params", params_to_json(atom.params)},
          {"binding_hartree", atom.energy.binding},
          {"binding_ev", atom.energy.binding * units::hartree_ev},
          {"total_hartree", atom.energy.total},
          {"subshells", shells}};
}

AtomModel atom_from_json(const json& j) {
  try {
    ScreeningParams p;
    const auto& pj = j.at("params");
    p.alpha = pj.at("alpha").get<double>();
    p.beta = pj.at("beta").get<double>();
    p.intra_factor = pj.at("intra_factor").get<double>();
    p.validate();
    return make_atom(j.at("Z").get<double>(),
                     Configuration::parse(j.at("configuration").get<std::string>()), p);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed atom JSON: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Effective-charge atomic model: energies, ionization potentials, "
               "densities and scattering factors"};
  app.name("ahatom");
  app.require_subcommand(1);

  ParamOptions po;
  OutputOptions oo;
  AtomOptions ao;
  std::vector<std::string> shells;
  bool relax = false;
  double r_min = 1e-4, r_max = 50.0, s_min = 0.0, s_max = 1.5;
  int points = 400, s_points = 31;
  int z_min = 1, z_max = kMaxTabulatedZ;
  bool reference = false, search = false, long_form = false, scan = false;
  int n_max = 3;
  std::string ref_path;
  std::optional<double> beta_arg;
  double target = kThomasFermiCoefficient;

  auto* energy = app.add_subcommand("energy", "Binding energy and per-subshell terms");
  add_atom(energy, ao);
  add_params(energy, po);
  add_output(energy, oo);

  auto* charges = app.add_subcommand("charges", "Effective charges per subshell");
  add_atom(charges, ao);
  add_params(charges, po);
  add_output(charges, oo);

  auto* search_cmd = app.add_subcommand("search", "Ground-state configuration search");
  add_atom(search_cmd, ao, false);
  add_params(search_cmd, po);
  add_output(search_cmd, oo);

  auto* ip = app.add_subcommand("ip", "Partial ionization potentials");
  add_atom(ip, ao);
  add_params(ip, po);
  add_output(ip, oo);
  ip->add_option("--shell", shells, "Shells to ionize (default: all occupied)");
  ip->add_flag("--relax", relax, "Re-minimize the ion configuration");

  auto* dens = app.add_subcommand("density", "Radial electron density, CSV r,rho,D");
  add_atom(dens, ao);
  add_params(dens, po);
  add_output(dens, oo, false);
  dens->add_option("--rmin", r_min, "Smallest radius, bohr");
  dens->add_option("--rmax", r_max, "Largest radius, bohr");
  dens->add_option("--points", points, "Number of log-spaced radii");

  auto* ff = app.add_subcommand("formfactor", "Scattering factor, CSV s,q,f");
  add_atom(ff, ao);
  add_params(ff, po);
  add_output(ff, oo, false);
  ff->add_option("--smin", s_min, "Smallest sin(theta)/lambda, 1/angstrom");
  ff->add_option("--smax", s_max, "Largest sin(theta)/lambda, 1/angstrom");
  ff->add_option("--points", s_points, "Number of s values");

  auto* rho0 = app.add_subcommand("rho0", "Electron density at the nucleus, CSV Z,rho0");
  rho0->add_option("--zmin", z_min, "First Z");
  rho0->add_option("--zmax", z_max, "Last Z");
  rho0->add_flag("--reference", reference, "Use tabulated reference configurations");
  add_params(rho0, po);
  add_output(rho0, oo, false);

  auto* table1 = app.add_subcommand("table1", "Exact minus approximate Coulomb elements");
  table1->add_option("--nmax", n_max, "Largest principal quantum number");
  table1->add_flag("--long", long_form, "One row per pair with exact and approx");
  add_params(table1, po);
  add_output(table1, oo, false);

  auto* table2 = app.add_subcommand("table2", "Binding energies and ionization potentials");
  table2->add_option("--zmin", z_min, "First Z");
  table2->add_option("--zmax", z_max, "Last Z");
  table2->add_option("--ref", ref_path, "Reference CSV (Z,label,value,unit)");
  table2->add_flag("--search", search,
                   "Use search minimizers instead of reference configurations");
  add_params(table2, po);
  add_output(table2, oo, false);

  auto* asym = app.add_subcommand("asymptote", "Large-Z energy coefficients");
  asym->add_option("--beta", beta_arg, "Angular constant beta");
  asym->add_flag("--scan", scan, "Binding / Z^(7/3) for Z = 1..60");
  asym->add_option("--alpha", po.alpha, "Inter-shell constant alpha");
  add_output(asym, oo);

  auto* calib = app.add_subcommand("calibrate", "Recover alpha, 5/16 and beta");
  calib->add_option("--target", target, "Asymptotic coefficient to match");
  add_output(calib, oo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format f = oo.format();
    if (energy->parsed()) cmd_energy(ao, po, f, out, err);
    if (charges->parsed()) cmd_charges(ao, po, f, out, err);
    if (search_cmd->parsed()) cmd_search(ao, po, f, out, err);
    if (ip->parsed()) cmd_ip(ao, po, shells, relax, f, out, err);
    if (dens->parsed()) cmd_density(ao, po, r_min, r_max, points, f, out, err);
    if (ff->parsed()) cmd_formfactor(ao, po, s_min, s_max, s_points, f, out, err);
    if (rho0->parsed()) cmd_rho0(z_min, z_max, reference, po, f, out, err);
    if (table1->parsed()) cmd_table1(n_max, long_form, po, f, out);
    if (table2->parsed()) cmd_table2(z_min, z_max, ref_path, search, po, f, out, err);
    if (asym->parsed()) cmd_asymptote(beta_arg, scan, po, f, out, err);
    if (calib->parsed()) cmd_calibrate(target, f, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace ahatom::cli
