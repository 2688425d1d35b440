// Command-line front end.  Deliberately thin: every operation goes
// through the C API of libcomptri, and files are shuttled around as
// opaque JSON strings.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "comptri/comptri.h"

namespace {

int fail(comptri_status st) {
  std::cerr << "error: " << comptri_last_error() << "\n";
  return static_cast<int>(st);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(1);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
  out << data << "\n";
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { comptri_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct OwnedAlgebra {
  comptri_algebra* p = nullptr;
  ~OwnedAlgebra() { comptri_algebra_free(p); }
};

struct SessionHandle {
  comptri_session* p = nullptr;
  ~SessionHandle() { comptri_session_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact composition algebras and triality on k^8"};
  app.require_subcommand(1);
  // --h is a documented option; keep only the long help flag.
  app.set_help_flag("--help", "print help");

  std::string field = "fp:3";
  std::string pfister;  // defaults to the construction params / 1,1,1
  std::string out_path;
  uint64_t seed = 0;
  app.add_option("--field", field, "coefficient field: fp:<p> or q");
  app.add_option("--pfister", pfister, "session Pfister parameters a,b,c");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--out", out_path, "output file (default stdout)");

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->set_help_flag("--help", "print help");
    c->fallthrough();
    return c;
  };

  auto* cmd_new = sub("new", "construct an algebra");
  std::string new_kind, new_params = "", new_file = "-";
  cmd_new->add_option("kind", new_kind, "cayley-dickson | zorn | from-file")
      ->required();
  cmd_new->add_option("params", new_params,
                      "a,b,c for cayley-dickson (default: session pfister)");
  cmd_new->add_option("--in", new_file, "input file for from-file");

  auto add_in = [](CLI::App* cmd, std::string& var) {
    cmd->add_option("--in", var, "algebra JSON file ('-' = stdin)");
  };

  std::string in_a = "-";
  auto* cmd_check = sub("check", "composition certificate");
  add_in(cmd_check, in_a);
  auto* cmd_unit = sub("unitalize", "Kaplansky unitalization");
  add_in(cmd_unit, in_a);
  auto* cmd_para = sub("para", "para-Hurwitz algebra");
  add_in(cmd_para, in_a);
  auto* cmd_sym =
      sub("symmetric-decomp", "symmetric decomposition");
  add_in(cmd_sym, in_a);
  auto* cmd_fun = sub("functor", "marked automorphism pair");
  add_in(cmd_fun, in_a);
  auto* cmd_ds = sub("double-sign", "double sign invariant");
  add_in(cmd_ds, in_a);

  auto* cmd_tri = sub("triality", "triality components");
  std::string tri_h, tri_in;
  cmd_tri->add_option("--h", tri_h, "similarity matrix JSON file")->required();
  cmd_tri->add_option("--in", tri_in,
                      "algebra JSON file (default: session S0)");

  auto* cmd_ic = sub("iso-check", "isomorphism criterion");
  std::string ic_a, ic_b, ic_h;
  cmd_ic->add_option("--a", ic_a, "first algebra")->required();
  cmd_ic->add_option("--b", ic_b, "second algebra")->required();
  cmd_ic->add_option("--h", ic_h, "candidate map")->required();

  auto* cmd_is = sub("iso-search", "budgeted isomorphism search");
  std::string is_a, is_b;
  uint64_t is_budget = 64;
  cmd_is->add_option("--a", is_a, "first algebra")->required();
  cmd_is->add_option("--b", is_b, "second algebra")->required();
  cmd_is->add_option("--budget", is_budget, "candidate budget");

  auto* cmd_norm = sub("normalize", "GO-to-O normalization");
  std::string norm_f, norm_g;
  cmd_norm->add_option("--F", norm_f, "similarity JSON file")->required();
  cmd_norm->add_option("--G", norm_g, "similarity JSON file")->required();

  auto* cmd_census = sub("census", "random isotope census");
  uint64_t census_samples = 200;
  std::string census_csv_path;
  cmd_census->add_option("--samples", census_samples, "sample count");
  cmd_census->add_option("--csv", census_csv_path, "also write a CSV");

  auto* cmd_self = sub("selftest", "deterministic self test");

  CLI11_PARSE(app, argc, argv);

  // The session Pfister parameters: explicit flag wins; a cayley-dickson
  // positional may set them; otherwise 1,1,1.
  std::string params = pfister;
  if (cmd_new->parsed() && new_kind == "cayley-dickson" && !new_params.empty()) {
    if (!params.empty() && params != new_params) {
      std::cerr << "error: --pfister disagrees with construction parameters\n";
      return 1;
    }
    params = new_params;
  }
  if (params.empty()) params = "1,1,1";

  SessionHandle session;
  if (auto st = comptri_session_new(field.c_str(), params.c_str(), seed,
                                    &session.p))
    return fail(st);

  auto load_algebra = [&](const std::string& path, OwnedAlgebra& alg) {
    std::string text = read_input(path);
    return comptri_algebra_from_json(session.p, text.c_str(), &alg.p);
  };

  if (cmd_new->parsed()) {
    OwnedAlgebra alg;
    comptri_status st;
    if (new_kind == "cayley-dickson")
      st = comptri_algebra_cayley_dickson(session.p, &alg.p);
    else if (new_kind == "zorn")
      st = comptri_algebra_zorn(session.p, &alg.p);
    else if (new_kind == "from-file")
      st = load_algebra(new_file, alg);
    else {
      std::cerr << "error: unknown construction '" << new_kind << "'\n";
      return 1;
    }
    if (st) return fail(st);
    OwnedString out;
    if ((st = comptri_algebra_to_json(alg.p, &out.p))) return fail(st);
    write_output(out_path, out.str());
    return 0;
  }

  if (cmd_check->parsed() || cmd_unit->parsed() || cmd_para->parsed() ||
      cmd_sym->parsed() || cmd_fun->parsed() || cmd_ds->parsed()) {
    OwnedAlgebra alg;
    if (auto st = load_algebra(in_a, alg)) return fail(st);
    OwnedString out;
    comptri_status st = COMPTRI_OK;
    if (cmd_check->parsed()) st = comptri_check(alg.p, &out.p);
    if (cmd_unit->parsed()) st = comptri_unitalize(alg.p, &out.p);
    if (cmd_sym->parsed()) st = comptri_symmetric_decomposition(alg.p, &out.p);
    if (cmd_fun->parsed()) st = comptri_functor_image(alg.p, &out.p);
    if (cmd_para->parsed()) {
      OwnedAlgebra para;
      if ((st = comptri_para(alg.p, &para.p))) return fail(st);
      st = comptri_algebra_to_json(para.p, &out.p);
    }
    if (cmd_ds->parsed()) {
      int l = 0, r = 0;
      if ((st = comptri_double_sign(alg.p, &l, &r))) return fail(st);
      out.p = nullptr;
      write_output(out_path, std::string("{\"double_sign\":[") +
                                 std::to_string(l) + "," + std::to_string(r) +
                                 "]}");
      return 0;
    }
    if (st) return fail(st);
    write_output(out_path, out.str());
    return 0;
  }

  if (cmd_tri->parsed()) {
    OwnedAlgebra alg;
    bool have_alg = !tri_in.empty();
    if (have_alg)
      if (auto st = load_algebra(tri_in, alg)) return fail(st);
    std::string h = read_input(tri_h);
    OwnedString out;
    if (auto st = comptri_triality(session.p, have_alg ? alg.p : nullptr,
                                   h.c_str(), &out.p))
      return fail(st);
    write_output(out_path, out.str());
    return 0;
  }

  if (cmd_ic->parsed()) {
    OwnedAlgebra a, b;
    if (auto st = load_algebra(ic_a, a)) return fail(st);
    if (auto st = load_algebra(ic_b, b)) return fail(st);
    std::string h = read_input(ic_h);
    int verdict = 0;
    if (auto st = comptri_iso_check(a.p, b.p, h.c_str(), &verdict))
      return fail(st);
    write_output(out_path, std::string("{\"isomorphism\":") +
                               (verdict ? "true" : "false") + "}");
    return 0;
  }

  if (cmd_is->parsed()) {
    OwnedAlgebra a, b;
    if (auto st = load_algebra(is_a, a)) return fail(st);
    if (auto st = load_algebra(is_b, b)) return fail(st);
    OwnedString out;
    comptri_status st = comptri_iso_search(a.p, b.p, is_budget, &out.p);
    if (out.p) write_output(out_path, out.str());
    if (st) {
      std::cerr << "error: " << comptri_last_error() << "\n";
      return static_cast<int>(st);
    }
    return 0;
  }

  if (cmd_norm->parsed()) {
    std::string fj = read_input(norm_f);
    std::string gj = read_input(norm_g);
    OwnedString out;
    if (auto st = comptri_normalize(session.p, fj.c_str(), gj.c_str(), &out.p))
      return fail(st);
    write_output(out_path, out.str());
    return 0;
  }

  if (cmd_census->parsed()) {
    OwnedString report, csv;
    if (auto st = comptri_census(session.p, census_samples, &report.p,
                                 census_csv_path.empty() ? nullptr : &csv.p))
      return fail(st);
    if (!census_csv_path.empty()) write_output(census_csv_path, csv.str());
    write_output(out_path, report.str());
    return 0;
  }

  if (cmd_self->parsed()) {
    OwnedString report;
    comptri_status st = comptri_selftest(session.p, &report.p);
    if (report.p) write_output(out_path, report.str());
    if (st) {
      std::cerr << "error: " << comptri_last_error() << "\n";
      return static_cast<int>(st);
    }
    return 0;
  }

  return 1;
}
