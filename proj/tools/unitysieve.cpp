// Command-line front end: proof runs, generic solving, triangle geometry
// checks with SVG output, and small number-theory utilities.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "unitysieve/geometry.hpp"
#include "unitysieve/report.hpp"

namespace {

unsigned resolve_jobs(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("UNITY_SIEVE_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring invalid UNITY_SIEVE_JOBS value '" << env << "'\n";
  }
  return usv::default_jobs();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--output", "cannot open " + path);
  out << content;
}

std::string read_all_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

int emit_report(const usv::ProofReport& rep, const std::string& output, bool verbose) {
  write_output(output, usv::to_json(rep).dump(2) + "\n");
  if (verbose)
    for (const auto& a : rep.assertions)
      std::cerr << (a.pass ? "[pass] " : "[FAIL] ") << a.name
                << (a.detail.empty() ? "" : ": " + a.detail) << "\n";
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search for triangles with unit-root tangency data"};
  app.require_subcommand(1);

  std::string route = "main", output, svg_dir, poly_text;
  unsigned jobs = 0;
  long precision = 64;
  long modulus_override = 0;
  bool verbose = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "write the JSON report here ('-' = stdout)");
    cmd->add_option("-j,--jobs", jobs, "worker threads (default: UNITY_SIEVE_JOBS or all cores)");
    cmd->add_flag("-v,--verbose", verbose, "log per-assertion results to stderr");
  };

  CLI::App* prove = app.add_subcommand("prove", "run the full proof and emit the report");
  prove->add_option("--route", route, "main or alternative")
      ->check(CLI::IsMember({"main", "alternative"}));
  prove->add_option("--modulus-override", modulus_override,
                    "enumerate at this modulus instead of the scanned one")
      ->check(CLI::Range(1L, 100000L));
  add_common(prove);

  CLI::App* solve = app.add_subcommand("solve", "solve f(x,y)=0 over roots of unity");
  solve->add_option("poly", poly_text, "polynomial, e.g. '1 + x + y' (default: stdin)");
  solve->add_option("--modulus-override", modulus_override,
                    "enumerate at this modulus instead of the scanned one")
      ->check(CLI::Range(1L, 100000L));
  add_common(solve);

  CLI::App* geometry =
      app.add_subcommand("geometry", "verify the named triangles' length and angle claims");
  geometry->add_option("--svg", svg_dir, "directory for one SVG figure per triangle");
  geometry->add_option("--precision", precision, "target certification precision in bits")
      ->check(CLI::Range(16L, 4096L));
  add_common(geometry);

  std::vector<long> nk;
  CLI::App* ram = app.add_subcommand("ramanujan", "print c_N(k)");
  ram->add_option("N_and_k", nk, "modulus N followed by one or more k")->expected(2, -1);

  long arg_n = 0;
  CLI::App* mob = app.add_subcommand("mobius", "print mu(N)");
  mob->add_option("N", arg_n)->required()->check(CLI::PositiveNumber);

  CLI::App* cyc = app.add_subcommand("cyclotomic", "print the N-th cyclotomic polynomial");
  cyc->add_option("N", arg_n)->required()->check(CLI::PositiveNumber);

  CLI::App* res = app.add_subcommand(
      "resultant", "resultant of two univariate polynomials (one per stdin line)");
  add_common(res);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 2;
  }

  try {
    if (*prove) {
      usv::Route r = route == "main" ? usv::Route::main : usv::Route::alternative;
      std::optional<long> ov;
      if (modulus_override > 0) ov = modulus_override;
      return emit_report(usv::prove(r, resolve_jobs(jobs), ov), output, verbose);
    }
    if (*solve) {
      std::string text = poly_text.empty() ? read_all_stdin() : poly_text;
      usv::BiLaurent f;
      try {
        f = usv::parse_bilaurent(text);
      } catch (const usv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      std::optional<long> ov;
      if (modulus_override > 0) ov = modulus_override;
      return emit_report(usv::solve_generic(f, resolve_jobs(jobs), ov), output, verbose);
    }
    if (*geometry) {
      double target = std::ldexp(1.0, static_cast<int>(-precision));
      nlohmann::ordered_json j;
      bool all_ok = true;
      for (auto which : {usv::NamedTriangle::heptagonal,
                         usv::NamedTriangle::pentadecagonal_first,
                         usv::NamedTriangle::pentadecagonal_second}) {
        nlohmann::ordered_json entry;
        auto tri = usv::triangle_from_tangency(usv::named_tangency(which));
        nlohmann::ordered_json claims = nlohmann::ordered_json::array();
        for (const auto& c : usv::verify_named_triangle(which)) {
          claims.push_back({{"segments", c.lhs + " = " + c.rhs},
                            {"status", c.holds ? "pass" : "fail"}});
          all_ok = all_ok && c.holds;
        }
        entry["claims"] = claims;
        auto expect = usv::named_angles(which);
        const usv::CycloElem* corners[3][3] = {{&tri.A, &tri.B, &tri.C},
                                               {&tri.B, &tri.A, &tri.C},
                                               {&tri.C, &tri.A, &tri.B}};
        nlohmann::ordered_json ja = nlohmann::ordered_json::array();
        for (int i = 0; i < 3; ++i) {
          auto a = usv::certified_angle(*corners[i][0], *corners[i][1], *corners[i][2],
                                        target);
          bool ok = usv::angle_is(a, expect[i].first, expect[i].second);
          ja.push_back({{"vertex", std::string(1, "ABC"[i])},
                        {"value", a.mid()},
                        {"expected", std::to_string(expect[i].first) + "*pi/" +
                                         std::to_string(expect[i].second)},
                        {"status", ok ? "pass" : "fail"}});
          all_ok = all_ok && ok;
        }
        entry["angles"] = ja;
        entry["window"] = [&] {
          switch (usv::sharygin_angle_window(tri)) {
            case usv::WindowCheck::in_window: return "in_window";
            case usv::WindowCheck::outside_window: return "outside_window";
            default: return "not_applicable";
          }
        }();
        if (!svg_dir.empty()) {
          std::string path = svg_dir + "/" + usv::triangle_name(which) + ".svg";
          std::ofstream svg(path);
          if (!svg) throw CLI::ValidationError("--svg", "cannot open " + path);
          svg << usv::figure_svg(which);
          entry["svg"] = path;
        }
        j[usv::triangle_name(which)] = entry;
      }
      j["condition_identity"] =
          usv::condition_identity_lhs() == usv::sharygin_polynomial() ? "pass" : "fail";
      all_ok = all_ok && j["condition_identity"] == "pass";
      write_output(output, j.dump(2) + "\n");
      return all_ok ? 0 : 1;
    }
    if (*ram) {
      long n = nk[0];
      for (std::size_t i = 1; i < nk.size(); ++i)
        std::cout << "c_" << n << "(" << nk[i] << ") = " << usv::ramanujan_sum(n, nk[i])
                  << "\n";
      return 0;
    }
    if (*mob) {
      std::cout << usv::moebius(arg_n) << "\n";
      return 0;
    }
    if (*cyc) {
      std::cout << usv::to_string(usv::cyclotomic_poly(arg_n)) << "\n";
      return 0;
    }
    if (*res) {
      std::string line1, line2;
      if (!std::getline(std::cin, line1) || !std::getline(std::cin, line2)) {
        std::cerr << "error: expected two polynomials, one per line\n";
        return 2;
      }
      usv::IntPoly a, b;
      try {
        a = usv::parse_intpoly(line1);
        b = usv::parse_intpoly(line2);
      } catch (const usv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      std::cout << usv::resultant(a, b).get_str() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
