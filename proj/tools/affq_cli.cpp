// Command-line front end: file I/O, inventory caching, and reports for the
// library operations.  Identical inputs and seed produce byte-identical
// output; see README for schemas and exit codes.

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "affq/hallalg.hpp"
#include "affq/jsonio.hpp"

namespace affq {
namespace {

struct Config {
  std::string field_spec = "5";
  std::uint64_t seed = kDefaultSeed;
  std::string cache_dir;
  std::string format = "table";
  std::int64_t cap = kDefaultHallCap;
};

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "rational") return Field::rational();
  try {
    std::size_t used = 0;
    const long long p = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return Field::prime(p);
  } catch (const std::invalid_argument&) {
    throw ParseError("--field expects a prime or 'Q', got '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("--field expects a prime or 'Q', got '" + s + "'");
  }
}

DimVec parse_dims(const std::string& s, const Quiver& q) {
  DimVec out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("dimension vector entry '" + part + "' is not an integer");
    }
    if (out.back() < 0) throw ParseError("dimension vector entries must be nonnegative");
  }
  if (static_cast<int>(out.size()) != q.n())
    throw ParseError("dimension vector has " + std::to_string(out.size()) + " entries, quiver has " +
                     std::to_string(q.n()) + " vertices (order matches the quiver file)");
  return out;
}

void emit(const Config& cfg, const Json& report, const std::string& table) {
  if (cfg.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << table;
}

std::string join_dims(const DimVec& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? " " : "") + std::to_string(d[i]);
  return out;
}

Representation load_rep_for(const std::string& quiver_file, const std::string& rep_file) {
  const Quiver q = quiver_from_json(load_json_file(quiver_file));
  Representation m = rep_from_json(load_json_file(rep_file));
  if (m.quiver != q)
    throw ParseError(rep_file + ": representation is over a different quiver than " + quiver_file);
  return m;
}

// ---------------------------------------------------------------------------
// inventory cache

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_key(const Quiver& q, const Field& f, const DimVec& bound, std::uint64_t seed) {
  std::string s = quiver_to_json(q).dump() + "|" + field_to_json(f).dump() + "|";
  for (std::int64_t b : bound) s += std::to_string(b) + ",";
  s += "|" + std::to_string(seed) + "|v1";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return buf;
}

void cache_store(const std::string& path, const Json& payload) {
  const std::string lock = path + ".lock";
  const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) return;  // another writer holds the lock; reads stay consistent
  {
    std::ofstream out(path + ".tmp");
    out << payload.dump(2) << "\n";
  }
  std::filesystem::rename(path + ".tmp", path);
  ::close(fd);
  std::filesystem::remove(lock);
}

IndecomposableInventory cached_inventory(const Config& cfg, const Quiver& q, const Field& f,
                                         const DimVec& bound) {
  if (cfg.cache_dir.empty()) return build_inventory(q, f, bound, cfg.seed);
  std::filesystem::create_directories(cfg.cache_dir);
  const std::string path =
      cfg.cache_dir + "/inv-" + cache_key(q, f, bound, cfg.seed) + ".json";
  if (std::filesystem::exists(path)) {
    try {
      const Json j = load_json_file(path);
      IndecomposableInventory inv = inventory_from_json(j);
      if (inv.quiver != q || inv.field != f || inv.bound != bound ||
          j.at("seed").get<std::uint64_t>() != cfg.seed)
        throw ParseError("cache key mismatch");
      return inv;
    } catch (const std::exception& e) {
      std::cerr << "warning: rebuilding corrupt cache file " << path << " (" << e.what() << ")\n";
    }
  }
  IndecomposableInventory inv = build_inventory(q, f, bound, cfg.seed);
  cache_store(path, inventory_to_json(inv, cfg.seed));
  return inv;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_info(const Config& cfg, const std::string& file) {
  const Quiver q = quiver_from_json(load_json_file(file));
  const AffineClass ac = classify_graph(q);
  const auto cartan = cartan_matrix(q);

  Json report{{"family", ac.to_string()},
              {"vertices", q.vertices},
              {"delta", ac.delta},
              {"cartan", cartan}};
  std::ostringstream t;
  t << "family: " << ac.to_string() << "\n";
  t << "vertices: ";
  for (int i = 0; i < q.n(); ++i) t << (i ? " " : "") << q.vertices[i];
  t << "\ndelta: " << join_dims(ac.delta) << "\ncartan:\n";
  for (const auto& row : cartan) {
    for (std::int64_t c : row) t << ' ' << (c < 0 ? "" : " ") << c;
    t << "\n";
  }

  if (q.is_acyclic()) {
    Json order = Json::array();
    std::string order_text;
    for (int i : admissible_sink_sequence(q)) {
      order.push_back(q.vertices[i]);
      order_text += (order_text.empty() ? "" : " ") + q.vertices[i];
    }
    report["admissible_order"] = order;
    t << "admissible order: " << order_text << "\n";

    Json defects = Json::object();
    std::string defect_text;
    for (int i = 0; i < q.n(); ++i) {
      DimVec e(q.n(), 0);
      e[i] = 1;
      const std::int64_t d = defect(q, e);
      defects[q.vertices[i]] = d;
      defect_text += (i ? " " : "") + q.vertices[i] + ":" + std::to_string(d);
    }
    report["defect"] = defects;
    t << "unit defects: " << defect_text << "\n";
  } else {
    report["admissible_order"] = nullptr;
    report["defect"] = nullptr;
    t << "admissible order: none (no admissible order on an oriented cycle)\n";
    t << "unit defects: none (cyclic orientation)\n";
  }
  emit(cfg, report, t.str());
  return 0;
}

int cmd_classify(const Config& cfg, const std::string& quiver_file, const std::string& rep_file) {
  const Representation m = load_rep_for(quiver_file, rep_file);
  const Quiver& q = m.quiver;
  const std::vector<Representation> parts = indecompose(m, cfg.seed);

  struct Row {
    Representation rep;
    ClassifiedModule cls;
    int mult = 1;
    bool projective = false, injective = false;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool merged = false;
    for (Row& r : rows)
      if (dim_vector(r.rep) == dim_vector(parts[i]) &&
          is_isomorphic(r.rep, parts[i], Rng(cfg.seed).fork(0x0c1a + i).seed())) {
        ++r.mult;
        merged = true;
        break;
      }
    if (merged) continue;
    Row r;
    r.rep = parts[i];
    r.cls = classify(parts[i], cfg.seed);
    for (int v = 0; v < q.n(); ++v) {
      if (r.cls.cls == ModuleClass::preprojective &&
          dim_vector(parts[i]) == dim_vector(projective_rep(q, m.field, v)) &&
          is_isomorphic(parts[i], projective_rep(q, m.field, v), cfg.seed))
        r.projective = true;
      if (r.cls.cls == ModuleClass::preinjective &&
          dim_vector(parts[i]) == dim_vector(injective_rep(q, m.field, v)) &&
          is_isomorphic(parts[i], injective_rep(q, m.field, v), cfg.seed))
        r.injective = true;
    }
    rows.push_back(r);
  }

  Json summands = Json::array();
  std::ostringstream t;
  if (rows.empty()) t << "zero representation\n";
  for (const Row& r : rows) {
    summands.push_back({{"dims", dim_vector(r.rep)},
                        {"class", module_class_name(r.cls.cls)},
                        {"defect", r.cls.defect_value},
                        {"period", r.cls.period},
                        {"multiplicity", r.mult},
                        {"projective", r.projective},
                        {"injective", r.injective}});
    t << r.mult << " x dims (" << join_dims(dim_vector(r.rep)) << ") "
      << module_class_name(r.cls.cls);
    if (r.projective) t << " (projective)";
    if (r.injective) t << " (injective)";
    if (r.cls.cls == ModuleClass::preprojective || r.cls.cls == ModuleClass::preinjective)
      t << " defect " << r.cls.defect_value;
    else
      t << " period " << r.cls.period;
    t << "\n";
  }
  emit(cfg, Json{{"total_dims", dim_vector(m)}, {"summands", summands}}, t.str());
  return 0;
}

int cmd_reflect(const Config& cfg, const std::string& quiver_file, const std::string& rep_file,
                const std::string& vertex) {
  const Representation m = load_rep_for(quiver_file, rep_file);
  const int i = m.quiver.vertex_index(vertex);
  std::string direction;
  Representation out = m;
  if (m.quiver.is_sink(i)) {
    direction = "plus";
    out = reflection_plus(m, i);
  } else if (m.quiver.is_source(i)) {
    direction = "minus";
    out = reflection_minus(m, i);
  } else {
    throw ParseError("vertex '" + vertex + "' is neither a sink nor a source");
  }
  std::ostringstream t;
  t << "reflection_" << direction << " at " << vertex << "\n"
    << "dims: (" << join_dims(dim_vector(m)) << ") -> (" << join_dims(dim_vector(out)) << ")\n";
  emit(cfg, Json{{"vertex", vertex}, {"direction", direction}, {"result", rep_to_json(out)}},
       t.str());
  return 0;
}

int cmd_coxeter(const Config& cfg, const std::string& quiver_file, const std::string& rep_file,
                int power) {
  const Representation m = load_rep_for(quiver_file, rep_file);
  Representation out = m;
  for (int k = 0; k < power; ++k) out = coxeter_plus(out);
  for (int k = 0; k > power; --k) out = coxeter_minus(out);
  std::ostringstream t;
  t << "coxeter power " << power << "\n"
    << "dims: (" << join_dims(dim_vector(m)) << ") -> (" << join_dims(dim_vector(out)) << ")\n";
  emit(cfg, Json{{"power", power}, {"result", rep_to_json(out)}}, t.str());
  return 0;
}

int cmd_tubes(const Config& cfg, const std::string& quiver_file) {
  const Quiver q = quiver_from_json(load_json_file(quiver_file));
  const Field f = parse_field(cfg.field_spec);
  std::vector<Tube> tubes = find_tubes(q, f, cfg.seed);
  for (Tube& t : tubes) t = extension_maps(std::move(t));

  Json periods = Json::array();
  Json tube_reports = Json::array();
  std::ostringstream t;
  t << tubes.size() << " tubes, periods [";
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    periods.push_back(tubes[i].period);
    tube_reports.push_back(tube_to_json(tubes[i]));
    t << (i ? "," : "") << tubes[i].period;
  }
  t << "]\n";
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    t << "tube " << i << ": period " << tubes[i].period << "\n";
    for (int z = 0; z < tubes[i].period; ++z)
      t << "  simple z=" << z << " dims: (" << join_dims(dim_vector(tubes[i].simples[z])) << ")\n";
  }
  emit(cfg,
       Json{{"count", tubes.size()}, {"periods", periods}, {"tubes", tube_reports}},
       t.str());
  return 0;
}

int cmd_hall_apply(const Config& cfg, const std::string& quiver_file, int tube_index,
                   const std::vector<std::string>& parts) {
  const Quiver q = quiver_from_json(load_json_file(quiver_file));
  const Field f = parse_field(cfg.field_spec);
  std::vector<Tube> tubes = find_tubes(q, f, cfg.seed);
  if (tube_index < 0 || tube_index >= static_cast<int>(tubes.size()))
    throw ParseError("tube index " + std::to_string(tube_index) + " out of range; " +
                     std::to_string(tubes.size()) + " tubes found");
  const Tube t = extension_maps(std::move(tubes[tube_index]));

  CyclicRep m = cyclic_zero(t.period, f);
  Json part_list = Json::array();
  for (const std::string& token : parts) {
    const auto colon = token.find(':');
    if (colon == std::string::npos)
      throw ParseError("--part expects z:length, got '" + token + "'");
    int z = 0, len = 0;
    try {
      z = std::stoi(token.substr(0, colon));
      len = std::stoi(token.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("--part expects z:length, got '" + token + "'");
    }
    if (z < 0 || z >= t.period) throw ParseError("--part socle class must lie in [0, period)");
    if (len < 1) throw ParseError("--part length must be >= 1");
    m = cyclic_direct_sum(m, cyclic_indec(t.period, z, len, f));
    part_list.push_back({{"z", z}, {"length", len}});
  }
  if (part_list.empty()) throw ParseError("at least one --part z:length is required");

  const Representation out = hall_apply(t, m);
  std::ostringstream text;
  text << "tube " << tube_index << " (period " << t.period << "), cyclic dims ("
       << join_dims(dim_vector(m.rep)) << ")\n"
       << "image dims: (" << join_dims(dim_vector(out)) << ")\n";
  emit(cfg,
       Json{{"tube", tube_index},
            {"period", t.period},
            {"parts", part_list},
            {"result", rep_to_json(out)}},
       text.str());
  return 0;
}

int cmd_basis(const Config& cfg, const std::string& quiver_file, const std::string& nu_spec,
              bool with_oracle, bool with_strata) {
  const Quiver q = quiver_from_json(load_json_file(quiver_file));
  const Field f = parse_field(cfg.field_spec);
  if (!f.is_prime()) throw ParseError("basis enumeration needs a prime field (--field p)");
  const DimVec nu = parse_dims(nu_spec, q);

  const IndecomposableInventory inv = cached_inventory(cfg, q, f, nu);
  const std::vector<CanonicalParam> elems = enumerate_delta(inv, nu);

  for (const CanonicalParam& p : elems) {
    if (cfg.format == "json") {
      Json line = param_to_json(p);
      if (with_strata) line["stratum_dim"] = stratum_dim(inv, p);
      std::cout << line.dump() << "\n";
    } else {
      std::cout << p.to_string();
      if (with_strata) std::cout << " dim " << stratum_dim(inv, p);
      std::cout << "\n";
    }
  }

  if (with_oracle) {
    const std::int64_t want = weight_dim_oracle(q, nu);
    const bool match = want == static_cast<std::int64_t>(elems.size());
    if (cfg.format == "json")
      std::cout << Json{{"count", elems.size()}, {"oracle", want}, {"match", match}}.dump()
                << "\n";
    else
      std::cout << "count " << elems.size() << ", oracle " << want
                << (match ? " PASS" : " FAIL") << "\n";
    if (!match) return 5;
  } else if (cfg.format != "json") {
    std::cout << "count " << elems.size() << "\n";
  }
  return 0;
}

int cmd_serre(const Config& cfg, const std::string& quiver_file, const std::string& vi,
              const std::string& vj, std::int64_t prime) {
  const Quiver q = quiver_from_json(load_json_file(quiver_file));
  const Field f = Field::prime(prime);
  const int i = q.vertex_index(vi);
  const int j = q.vertex_index(vj);
  if (i == j) throw ParseError("serre needs two distinct vertices");

  const std::int64_t c = cartan_matrix(q)[i][j];
  const int nrel = static_cast<int>(1 - c);
  const HallElement fi = hall_generator(q, f, i);
  const HallElement fj = hall_generator(q, f, j);
  std::vector<HallElement> fi_pow{hall_unit(q, f)};
  for (int k = 1; k <= nrel; ++k)
    fi_pow.push_back(hall_product(fi_pow.back(), fi, cfg.seed, cfg.cap));

  HallElement sum = hall_zero(q, f);
  for (int p = 0; p <= nrel; ++p) {
    HallElement term = hall_product(fi_pow[p], hall_product(fj, fi_pow[nrel - p], cfg.seed, cfg.cap),
                                    cfg.seed, cfg.cap);
    QuadraticScalar coeff = eval_at_sqrt(gaussian(nrel, p), prime);
    if (p % 2 == 1) coeff = -coeff;
    sum = hall_add(std::move(sum), hall_scale(coeff, std::move(term)), cfg.seed);
  }
  const bool holds = hall_is_zero(sum);

  std::ostringstream t;
  t << (holds ? "PASS" : "FAIL") << ": Serre relation for vertices " << vi << ", " << vj
    << " over F_" << prime << "\n";
  if (!holds)
    for (const HallTerm& term : sum.terms)
      t << "  " << term.coeff.to_string() << " * u(" << join_dims(dim_vector(term.rep)) << ")\n";
  emit(cfg,
       Json{{"relation_holds", holds},
            {"i", vi},
            {"j", vj},
            {"prime", prime},
            {"residual", hall_element_to_json(sum)}},
       t.str());
  return holds ? 0 : 5;
}

int cmd_hall_num(const Config& cfg, const std::string& top_file, const std::string& sub_file,
                 const std::string& total_file) {
  const Representation top = rep_from_json(load_json_file(top_file));
  const Representation sub = rep_from_json(load_json_file(sub_file));
  const Representation total = rep_from_json(load_json_file(total_file));
  if (sub.quiver != top.quiver || total.quiver != top.quiver)
    throw ParseError("hall-num needs all three representations over one quiver");
  if (sub.field != top.field || total.field != top.field)
    throw ParseError("hall-num needs all three representations over one field");
  const std::int64_t g = hall_number(top, sub, total, cfg.cap, cfg.seed);
  emit(cfg, Json{{"hall_number", g}}, "g = " + std::to_string(g) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------

int fail(const std::string& code, int exit_code, const std::string& message, bool json_mode) {
  if (json_mode)
    std::cout << Json{{"error", code}, {"exit", exit_code}, {"message", message}}.dump() << "\n";
  else
    std::cerr << "error (" << code << "): " << message << "\n";
  return exit_code;
}

int run(int argc, char** argv, bool json_mode) {
  Config cfg;
  CLI::App app{"exact computations with representations of affine quivers"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--field", cfg.field_spec, "coefficient field: a prime p or Q")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all randomized searches")->capture_default_str();
  app.add_option("--cache", cfg.cache_dir, "inventory cache directory");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "enumeration explosion cap")->capture_default_str();

  std::string quiver_file, rep_file, vertex, nu_spec, vi, vj;
  std::string top_file, sub_file, total_file;
  int power = 1, tube_index = 0;
  std::int64_t prime = 2;
  bool with_oracle = false, with_strata = false;
  std::vector<std::string> parts;

  CLI::App* info = app.add_subcommand("info", "affine family, delta, Cartan data of a quiver");
  info->add_option("quiver", quiver_file, "quiver JSON file")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Krull-Schmidt decomposition with classes and defects");
  classify_cmd->add_option("quiver", quiver_file)->required();
  classify_cmd->add_option("rep", rep_file, "representation JSON file")->required();

  CLI::App* reflect = app.add_subcommand("reflect", "reflection functor at a sink or source");
  reflect->add_option("quiver", quiver_file)->required();
  reflect->add_option("rep", rep_file)->required();
  reflect->add_option("vertex", vertex, "vertex id")->required();

  CLI::App* coxeter = app.add_subcommand("coxeter", "Coxeter functor powers");
  coxeter->add_option("quiver", quiver_file)->required();
  coxeter->add_option("rep", rep_file)->required();
  coxeter->add_option("--power", power, "positive: plus, negative: minus")
      ->capture_default_str();

  CLI::App* tubes = app.add_subcommand("tubes", "inhomogeneous tubes and their simples");
  tubes->add_option("quiver", quiver_file)->required();

  CLI::App* hall_apply =
      app.add_subcommand("hall-apply", "apply the tube embedding functor to a cyclic module");
  hall_apply->add_option("quiver", quiver_file)->required();
  hall_apply->add_option("--tube", tube_index, "tube index from the tubes listing")
      ->capture_default_str();
  hall_apply->add_option("--part", parts, "serial summand z:length; repeatable")->required();

  CLI::App* basis = app.add_subcommand("basis", "canonical basis parameters of weight nu");
  basis->add_option("quiver", quiver_file)->required();
  basis->add_option("--nu", nu_spec, "dimension vector, comma list in quiver vertex order")
      ->required();
  basis->add_flag("--oracle", with_oracle, "compare the count against the weight-space oracle");
  basis->add_flag("--strata", with_strata, "include stratum dimensions");

  CLI::App* serre = app.add_subcommand("serre", "check a quantum Serre relation exactly");
  serre->add_option("quiver", quiver_file)->required();
  serre->add_option("i", vi, "first vertex id")->required();
  serre->add_option("j", vj, "second vertex id")->required();
  serre->add_option("q", prime, "field characteristic")->required();

  CLI::App* hall_num = app.add_subcommand("hall-num", "one Hall number from three representations");
  hall_num->add_option("top", top_file, "quotient representation JSON")->required();
  hall_num->add_option("sub", sub_file, "subobject representation JSON")->required();
  hall_num->add_option("total", total_file, "ambient representation JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", 2, e.what(), json_mode);
  }

  if (*info) return cmd_info(cfg, quiver_file);
  if (*classify_cmd) return cmd_classify(cfg, quiver_file, rep_file);
  if (*reflect) return cmd_reflect(cfg, quiver_file, rep_file, vertex);
  if (*coxeter) return cmd_coxeter(cfg, quiver_file, rep_file, power);
  if (*tubes) return cmd_tubes(cfg, quiver_file);
  if (*hall_apply) return cmd_hall_apply(cfg, quiver_file, tube_index, parts);
  if (*basis) return cmd_basis(cfg, quiver_file, nu_spec, with_oracle, with_strata);
  if (*serre) return cmd_serre(cfg, quiver_file, vi, vj, prime);
  if (*hall_num) return cmd_hall_num(cfg, top_file, sub_file, total_file);
  return 1;
}

}  // namespace
}  // namespace affq

int main(int argc, char** argv) {
  using namespace affq;
  bool json_mode = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--format" && i + 1 < argc) json_mode = std::string(argv[i + 1]) == "json";
    if (a == "--format=json") json_mode = true;
  }
  try {
    return run(argc, argv, json_mode);
  } catch (const ParseError& e) {
    return fail("parse", 2, e.what(), json_mode);
  } catch (const NotAffine& e) {
    return fail("not-affine", 2, e.what(), json_mode);
  } catch (const NeedsLargerField& e) {
    return fail("field-too-small", 3,
                std::string(e.what()) + "; retry with a larger --field prime or another --seed",
                json_mode);
  } catch (const CombinatorialExplosion& e) {
    return fail("explosion", 4, e.what(), json_mode);
  } catch (const std::exception& e) {
    return fail("internal", 1, e.what(), json_mode);
  }
}
