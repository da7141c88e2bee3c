// Command-line front end; talks to the library only through lcz.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcz/lcz.h"

namespace {

constexpr int kExitOk = 0, kExitInternal = 1, kExitContract = 2, kExitAmbiguous = 3;

struct Algebra {
  lcz_algebra* p = nullptr;
  ~Algebra() { lcz_algebra_free(p); }
};

int report(lcz_status s) {
  std::cerr << "lcz: " << lcz_status_name(s) << ": " << lcz_last_error() << "\n";
  if (s == LCZ_DEFECTIVE_AMBIGUITY) return kExitAmbiguous;
  if (s == LCZ_INTERNAL) return kExitInternal;
  return kExitContract;
}

// "-" reads standard input.
bool slurp(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "lcz: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Takes ownership of s.
int print(char* s) {
  std::cout << s;
  lcz_string_free(s);
  return kExitOk;
}

int load(const std::string& path, const std::string& mode, Algebra& g) {
  std::string text;
  if (!slurp(path, text)) return kExitContract;
  lcz_status s = lcz_algebra_parse(text.c_str(), mode.empty() ? nullptr : mode.c_str(), &g.p);
  return s == LCZ_OK ? kExitOk : report(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-invariant geometry of pseudo-Euclidean Lie algebras"};
  app.require_subcommand(1);

  std::string file, opfile, mode, format = "text", formulation = "both", family, outfile;
  double tol = 0;
  std::string alpha, sign;
  int epsilon = 0, k = 0, dim = 0;
  std::vector<std::string> extra;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--tol", tol, "relative tolerance for float comparisons")->check(CLI::PositiveNumber);
    c->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
  };

  auto* analyze = app.add_subcommand("analyze", "full report for a definition file");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  add_common(analyze);

  auto* classify = app.add_subcommand("classify", "canonical type of a self-adjoint operator");
  classify->add_option("FILE", file)->required();
  classify->add_option("--operator", opfile)->required();
  classify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  add_common(classify);

  auto* codazzi = app.add_subcommand("codazzi", "Codazzi test for an operator");
  codazzi->add_option("FILE", file)->required();
  codazzi->add_option("--operator", opfile)->required();
  codazzi->add_option("--formulation", formulation)
      ->check(CLI::IsMember({"defining", "prop22", "bracket", "both"}));
  codazzi->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  add_common(codazzi);

  auto* fam = app.add_subcommand("family", "emit a definition file for a family member");
  fam->add_option("NAME", family)->required()->check(
      CLI::IsMember({"sl2", "zzcore", "zzprod", "a2", "a3", "ex5d", "ex6d"}));
  fam->add_option("PARAMS", extra, "extra key=value parameters");
  fam->add_option("--alpha", alpha, "Einstein constant / metric parameter");
  fam->add_option("--epsilon", epsilon, "zzcore sign parameter");
  fam->add_option("--sign", sign, "root choice, + or -");
  fam->add_option("--k", k, "dimension of the hyperbolic factor minus one");
  fam->add_option("--dim", dim, "a3: dimension of h (2 or 3)");
  fam->add_option("-o,--output", outfile, "write to FILE instead of standard output");

  auto* self = app.add_subcommand("selftest", "run the built-in invariant suites");
  self->add_option("--tol", tol)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  const lcz_format fmt = format == "kv" ? LCZ_FORMAT_KV : LCZ_FORMAT_TEXT;

  char* out = nullptr;
  if (*analyze) {
    Algebra g;
    if (int rc = load(file, mode, g)) return rc;
    lcz_status s = lcz_analyze(g.p, tol, fmt, &out);
    return s == LCZ_OK ? print(out) : report(s);
  }
  if (*classify || *codazzi) {
    Algebra g;
    if (int rc = load(file, mode, g)) return rc;
    std::string op;
    if (!slurp(opfile, op)) return kExitContract;
    lcz_status s;
    if (*classify) {
      s = lcz_classify(g.p, op.c_str(), tol, fmt, &out);
    } else {
      lcz_formulation w = formulation == "defining" ? LCZ_CODAZZI_DEFINING
                          : formulation == "both"   ? LCZ_CODAZZI_BOTH
                                                    : LCZ_CODAZZI_BRACKET;
      s = lcz_codazzi(g.p, op.c_str(), w, tol, fmt, &out);
    }
    return s == LCZ_OK ? print(out) : report(s);
  }
  if (*fam) {
    std::string params;
    for (const auto& e : extra) params += e + " ";
    if (!alpha.empty()) params += "alpha=" + alpha + " ";
    if (!sign.empty()) params += "sign=" + sign + " ";
    if (fam->count("--epsilon")) params += "epsilon=" + std::to_string(epsilon) + " ";
    if (fam->count("--k")) params += "k=" + std::to_string(k) + " ";
    if (fam->count("--dim")) params += "dim=" + std::to_string(dim) + " ";
    lcz_status s = lcz_family(family.c_str(), params.c_str(), &out);
    if (s != LCZ_OK) return report(s);
    if (outfile.empty()) return print(out);
    std::ofstream f(outfile, std::ios::binary);
    f << out;
    lcz_string_free(out);
    if (!f) {
      std::cerr << "lcz: cannot write " << outfile << "\n";
      return kExitContract;
    }
    return kExitOk;
  }
  if (*self) {
    std::size_t failures = 0;
    lcz_status s = lcz_selftest(tol, &out, &failures);
    if (s != LCZ_OK) return report(s);
    print(out);
    return failures ? kExitInternal : kExitOk;
  }
  return kExitInternal;
}
