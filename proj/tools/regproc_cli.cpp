// Command-line front end. Talks to the library only through regproc.h.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage, parse or
// format error, 3 state limit exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "regproc/regproc.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStateLimit = 3;

struct Failure {
  int code;
};

[[noreturn]] void fail(rp_status st) {
  std::cerr << "error: " << rp_status_name(st) << ": " << rp_last_error() << "\n";
  throw Failure{st == RP_ERR_STATE_LIMIT ? kExitStateLimit : kExitUsage};
}

[[noreturn]] void fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw Failure{kExitUsage};
}

void check(rp_status st) {
  if (st != RP_OK) fail(st);
}

// RAII wrappers for handles and returned strings.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Expr = Handle<rp_expr, rp_expr_free>;
using Gamma = Handle<rp_gamma, rp_gamma_free>;
using Aut = Handle<rp_automaton, rp_automaton_free>;
using Enc = Handle<rp_encoding, rp_encoding_free>;

struct Text {
  char* p = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { rp_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail("cannot write '" + path.string() + "'");
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

// Expression given inline with -e or read from a file with -f.
struct ExprSource {
  std::string inline_text;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("-e,--expr", inline_text, "expression");
    auto* f = cmd->add_option("-f,--file", file, "file containing an expression")->check(CLI::ExistingFile);
    e->excludes(f);
    f->excludes(e);
  }

  void load(Expr& out) const {
    std::string text;
    if (!file.empty())
      text = trim(read_file(file));
    else if (!inline_text.empty())
      text = inline_text;
    else
      fail("an expression is required (-e EXPR or -f FILE)");
    check(rp_expr_parse(text.c_str(), out.out()));
  }
};

void load_automaton(const std::string& path, Aut& out) {
  check(rp_automaton_from_json(read_file(path).c_str(), out.out()));
}

void load_gamma(const std::string& path, Gamma& out) {
  check(rp_gamma_parse(read_file(path).c_str(), out.out()));
  int assoc = 0;
  check(rp_gamma_validate(out.get(), &assoc, nullptr, nullptr));
  if (!assoc) fail("communication function in '" + path + "' is not associative");
}

rp_format format_of(bool json) { return json ? RP_FORMAT_JSON : RP_FORMAT_TEXT; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regproc: regular process expressions and their transition systems"};
  app.require_subcommand(1);

  ExprSource lts_src, oc_src, classify_src;
  std::string gamma_file, format = "json";
  std::size_t max_states = RP_DEFAULT_MAX_STATES;
  auto* lts = app.add_subcommand("lts", "derive the transition system of an expression");
  lts_src.attach(lts);
  lts->add_option("--gamma", gamma_file, "communication function file")->check(CLI::ExistingFile);
  lts->add_option("--max-states", max_states, "state limit")->check(CLI::PositiveNumber);
  lts->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));

  std::string bisim_a, bisim_b;
  bool bisim_json = false;
  auto* bisim = app.add_subcommand("bisim", "decide bisimilarity of two automata");
  bisim->add_option("A", bisim_a)->required()->check(CLI::ExistingFile);
  bisim->add_option("B", bisim_b)->required()->check(CLI::ExistingFile);
  bisim->add_flag("--json", bisim_json, "machine-readable output");

  std::string min_file;
  auto* minimize = app.add_subcommand("minimize", "quotient an automaton by bisimilarity");
  minimize->add_option("A", min_file)->required()->check(CLI::ExistingFile);

  std::string scc_file;
  bool scc_json = false;
  auto* scc = app.add_subcommand("scc", "strongly connected components");
  scc->add_option("A", scc_file)->required()->check(CLI::ExistingFile);
  scc->add_flag("--json", scc_json, "machine-readable output");

  std::string check_file, property;
  bool check_json = false;
  auto* chk = app.add_subcommand("check", "check the exit-state property of an automaton");
  chk->add_option("--property", property, "bpa or pa")->required()->check(CLI::IsMember({"bpa", "pa"}));
  chk->add_option("A", check_file)->required()->check(CLI::ExistingFile);
  chk->add_flag("--json", check_json, "machine-readable output");

  auto* oc = app.add_subcommand("oc", "OC measure of an expression");
  oc_src.attach(oc);

  auto* classify = app.add_subcommand("classify", "smallest theory containing an expression");
  classify_src.attach(classify);

  std::string enc_file, enc_dir;
  auto* encode = app.add_subcommand("encode", "encode a finite automaton as an expression");
  encode->add_option("F", enc_file)->required()->check(CLI::ExistingFile);
  encode->add_option("-o,--output", enc_dir, "output directory")->required();

  std::string ver_file;
  std::size_t ver_max = RP_DEFAULT_MAX_STATES;
  bool ver_json = false;
  auto* verify = app.add_subcommand("verify-encoding", "check that an encoding derives back to its automaton");
  verify->add_option("F", ver_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--max-states", ver_max, "state limit")->check(CLI::PositiveNumber);
  verify->add_flag("--json", ver_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lts) {
      Expr e;
      lts_src.load(e);
      Gamma g;
      if (!gamma_file.empty()) load_gamma(gamma_file, g);
      Aut a;
      check(rp_automaton_derive(e.get(), g.get(), max_states, a.out()));
      Text t;
      check(format == "dot" ? rp_automaton_to_dot(a.get(), t.out()) : rp_automaton_to_json(a.get(), t.out()));
      std::cout << t.str();
      return 0;
    }
    if (*bisim) {
      Aut a, b;
      load_automaton(bisim_a, a);
      load_automaton(bisim_b, b);
      int yes = 0;
      Text t;
      check(rp_bisimilar(a.get(), b.get(), format_of(bisim_json), &yes, t.out()));
      std::cout << t.str();
      return yes ? 0 : kExitFalse;
    }
    if (*minimize) {
      Aut a, m;
      load_automaton(min_file, a);
      check(rp_minimize(a.get(), m.out()));
      Text t;
      check(rp_automaton_to_json(m.get(), t.out()));
      std::cout << t.str();
      return 0;
    }
    if (*scc) {
      Aut a;
      load_automaton(scc_file, a);
      Text t;
      check(rp_scc(a.get(), format_of(scc_json), t.out()));
      std::cout << t.str();
      return 0;
    }
    if (*chk) {
      Aut a;
      load_automaton(check_file, a);
      int holds = 0;
      Text t;
      check(rp_check_property(a.get(), property == "bpa" ? RP_PROPERTY_BPA : RP_PROPERTY_PA,
                              format_of(check_json), &holds, t.out()));
      std::cout << t.str();
      return holds ? 0 : kExitFalse;
    }
    if (*oc) {
      Expr e;
      oc_src.load(e);
      std::size_t n = 0;
      check(rp_expr_oc(e.get(), &n));
      std::cout << n << "\n";
      return 0;
    }
    if (*classify) {
      Expr e;
      classify_src.load(e);
      rp_theory th{};
      check(rp_expr_classify(e.get(), &th));
      std::cout << (th == RP_THEORY_BPA ? "BPA" : th == RP_THEORY_PA ? "PA" : "ACP") << "\n";
      return 0;
    }
    if (*encode) {
      Aut a;
      load_automaton(enc_file, a);
      Enc enc;
      check(rp_encode(a.get(), enc.out()));
      Text expr, gamma, manifest;
      check(rp_encoding_expression(enc.get(), expr.out()));
      check(rp_encoding_gamma(enc.get(), gamma.out()));
      check(rp_encoding_manifest(enc.get(), manifest.out()));
      std::error_code ec;
      std::filesystem::create_directories(enc_dir, ec);
      if (ec) fail("cannot create '" + enc_dir + "': " + ec.message());
      const std::filesystem::path dir(enc_dir);
      write_file(dir / "expression.txt", expr.str() + "\n");
      write_file(dir / "gamma.txt", gamma.str());
      write_file(dir / "manifest.json", manifest.str());
      return 0;
    }
    if (*verify) {
      Aut a;
      load_automaton(ver_file, a);
      int iso = 0;
      Text t;
      check(rp_verify_encoding(a.get(), ver_max, format_of(ver_json), &iso, t.out()));
      std::cout << t.str();
      return iso ? 0 : kExitFalse;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
