// Command-line front end.  Reports go to stdout, progress to stderr.
// Exit codes: 0 success, 1 usage or input error, 2 internal contradiction.

#include "negcurve/json_io.hpp"
#include "negcurve/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace negcurve;

namespace {

struct Config {
  std::uint64_t characteristic = 0;
  std::string format = "json";
  unsigned jobs = 1;
  bool long_running = false;
  std::uint64_t seed = 1;
};

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const Config& cfg) {
  if (cfg.format == "text") {
    print_text(j, "", std::cout);
  } else {
    std::cout << j.dump() << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A JSON object (polynomial or polygon) or a polynomial expression.
Json read_input(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
  }
  return Json{{"expression", text}};
}

LaurentPoly read_polynomial(const Json& j, std::uint64_t characteristic) {
  if (j.contains("expression")) return parse_laurent(j.at("expression").get<std::string>(), characteristic);
  LaurentPoly f = laurent_from_json(j);
  if (f.characteristic() == characteristic) return f;
  if (f.characteristic() == 0) return f.reduce_mod(characteristic);
  throw CharacteristicMismatch("file is over F_" + std::to_string(f.characteristic()) + " but --char is " +
                               std::to_string(characteristic));
}

std::vector<LatticePoint> parse_rays(const std::string& text) {
  std::vector<LatticePoint> rays;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& r : Json::parse(text)) rays.emplace_back(r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>());
    return rays;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::int64_t x = 0, y = 0;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> x >> comma >> y) || comma != ',') throw PreconditionError("rays look like \"2,-1;-2,-1;0,1\"");
    rays.emplace_back(x, y);
  }
  return rays;
}

Json herzog_payload(std::int64_t a, std::int64_t b, std::int64_t c) {
  const HerzogData h = herzog_data(a, b, c);
  const RationalPolygon tri = triangle(h);
  const HerzogFan fan = herzog_fan(h);
  Json divisors = Json::array();
  for (auto d : fan.divisors) divisors.push_back(d);
  const std::string err = check_invariants(h);
  return {{"herzog", to_json(h)},
          {"invariants", err.empty() ? "ok" : err},
          {"triangle", to_json(tri)},
          {"area2", to_json(area2(tri))},
          {"fan", to_json(fan.fan)},
          {"ray_divisors", divisors}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negcurve: negative curves on blow-ups of weighted projective planes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  cfg.jobs = default_jobs();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads (default NEGCURVE_JOBS or all cores)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for the randomized prefilter");

  const auto char_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          check_characteristic(std::stoull(s));
        } catch (const std::exception&) {
          return "characteristic must be 0 or a prime below 2^32";
        }
        return "";
      },
      "0|PRIME");

  std::int64_t a = 0, b = 0, c = 0, r = 0, rmax = 0, dilate_by = 1, truncation = 8;
  std::vector<std::int64_t> degrees;
  std::string file, rays;
  bool experimental = false;

  auto* herzog = app.add_subcommand("herzog", "Presentation data and triangle for weights A B C");
  herzog->add_option("A", a)->required();
  herzog->add_option("B", b)->required();
  herzog->add_option("C", c)->required();

  auto* search = app.add_subcommand("search", "Scan (r, d) cells for negative curves");
  search->add_option("A", a)->required();
  search->add_option("B", b)->required();
  search->add_option("C", c)->required();
  search->add_option("--char", cfg.characteristic)->check(char_check);
  search->add_option("--rmax", rmax)->required()->check(CLI::PositiveNumber);
  search->add_option("--d", degrees, "Only these degrees");
  search->add_flag("--long", cfg.long_running, "Allow long-running scans (r > 12)");

  auto* check = app.add_subcommand("check-nct", "Check a polynomial against the nct conditions");
  check->add_option("FILE", file)->required();
  check->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  check->add_option("--char", cfg.characteristic)->check(char_check);

  auto* thm36 = app.add_subcommand("thm36", "Condition report for a polynomial or polygon");
  thm36->add_option("FILE", file)->required();
  thm36->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  thm36->add_option("--char", cfg.characteristic)->check(char_check);

  auto* classify_cmd = app.add_subcommand("classify", "Classify r-ncts up to equivalence");
  classify_cmd->add_option("--r", r)->required()->check(CLI::Range(1, 3));
  classify_cmd->add_option("--char", cfg.characteristic)->check(char_check);
  classify_cmd->add_flag("--experimental", experimental, "Enable r = 3");

  auto* ggk = app.add_subcommand("ggk", "Member of the tetragon family");
  ggk->add_option("--r", r)->required()->check(CLI::Range(3, 64));
  ggk->add_option("--char", cfg.characteristic)->check(char_check);

  auto* ehrhart = app.add_subcommand("ehrhart", "Lattice counts, Ehrhart polynomial, Hilbert numerator");
  ehrhart->add_option("FILE", file)->required();
  ehrhart->add_option("--dilate", dilate_by)->check(CLI::PositiveNumber);
  ehrhart->add_option("--truncation", truncation, "Terms used for the Hilbert numerator")->check(CLI::Range(3, 1000));

  auto* classgroup = app.add_subcommand("classgroup", "Class group of the toric surface of a fan");
  classgroup->add_option("RAYS", rays, "\"x,y;x,y;...\" or a JSON list of pairs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*herzog) {
      emit(herzog_payload(a, b, c), cfg);
    } else if (*search) {
      if (rmax > 12 && !cfg.long_running) throw PreconditionError("r_max above 12 needs --long");
      SearchOptions opts;
      opts.seed = cfg.seed;
      opts.jobs = cfg.jobs;
      if (cfg.long_running) opts.progress = [](const std::string& s) { std::cerr << s << std::endl; };
      const auto found = scan(a, b, c, cfg.characteristic, rmax, degrees, opts);
      Json list = Json::array();
      for (const auto& rep : found) list.push_back(to_json(rep));
      emit({{"weights", {a, b, c}}, {"char", cfg.characteristic}, {"rmax", rmax}, {"found", list}}, cfg);
    } else if (*check) {
      const LaurentPoly f = read_polynomial(read_input(file), cfg.characteristic);
      const NctReport rep = is_nct(f, r);
      Json j = to_json(rep);
      j["input"] = to_text(f);
      if (rep.plausible()) j["canonical_form"] = to_text(canonical_form(f, r));
      emit(j, cfg);
    } else if (*thm36) {
      const Json in = read_input(file);
      Thm36Report rep;
      if (in.contains("vertices")) {
        rep = thm36_report(to_integral(polygon_from_json(in)), r, cfg.characteristic);
      } else {
        rep = thm36_report(read_polynomial(in, cfg.characteristic), r);
      }
      emit(to_json(rep), cfg);
    } else if (*classify_cmd) {
      emit(to_json(classify(r, cfg.characteristic, experimental, cfg.jobs)), cfg);
    } else if (*ggk) {
      const auto ur = static_cast<unsigned>(r);
      const LaurentPoly f = ggk_prime_family(ur, cfg.characteristic);
      const IntegralPolygon p = ggk_tetragon(ur);
      emit({{"r", r},
            {"char", cfg.characteristic},
            {"polygon", to_json(p)},
            {"area2", to_json(area2(p))},
            {"counts", to_json(lattice_counts(p))},
            {"phi", to_json(f)},
            {"phi_text", to_text(f)}},
           cfg);
    } else if (*ehrhart) {
      const RationalPolygon p = polygon_from_json(read_input(file));
      const RationalPolygon dp = dilate(p, dilate_by);
      Json j{{"polygon", to_json(dp)}, {"area2", to_json(area2(dp))}, {"counts", to_json(lattice_counts(dp))}};
      bool integral = true;
      for (const auto& v : dp.vertices)
        if (denominator(v.x()) != 1 || denominator(v.y()) != 1) integral = false;
      if (integral && dp.dimension() == 2) {
        const IntegralPolygon ip = to_integral(dp);
        j["ehrhart"] = to_json(ehrhart_polynomial(ip));
        Json h = Json::array();
        for (const auto& x : hilbert_numerator(ip, truncation)) h.push_back(to_json(x));
        j["hilbert_numerator"] = h;
      }
      emit(j, cfg);
    } else if (*classgroup) {
      const auto rs = parse_rays(rays);
      IntMatrix m(static_cast<Eigen::Index>(rs.size()), 2);
      for (std::size_t i = 0; i < rs.size(); ++i) {
        m(static_cast<Eigen::Index>(i), 0) = rs[i].x();
        m(static_cast<Eigen::Index>(i), 1) = rs[i].y();
      }
      Json j{{"class_group", to_json(class_group(m))}};
      try {
        const Fan2D fan = make_fan(rs);
        const IntersectionTable t = intersection_numbers(fan);
        Json self = Json::array(), adj = Json::array();
        for (const auto& x : t.self) self.push_back(to_json(x));
        for (const auto& x : t.adjacent) adj.push_back(to_json(x));
        j["fan"] = to_json(fan);
        j["intersections"] = {{"self", self}, {"adjacent", adj}, {"K^2", to_json(t.canonical_square)}};
      } catch (const PreconditionError&) {
        j["fan"] = nullptr;  // rays do not form a complete fan
      }
      emit(j, cfg);
    }
  } catch (const DiagramContradiction& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
