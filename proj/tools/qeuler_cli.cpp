#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <qeuler/verify.hpp>

namespace {

using namespace qeuler;

enum ExitCode {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitInsufficientPrecision = 3,
};

struct OutputOptions {
  std::string format = "table";
  std::string out;
};

void write_text(const OutputOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + opts.out);
  f << text;
}

std::string render_reports(const std::vector<CongruenceReport>& reports,
                           const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    // JSON-lines: one report object per line
    for (const auto& r : reports) os << r.json() << "\n";
  } else if (format == "csv") {
    os << CongruenceReport::csv_header() << "\n";
    for (const auto& r : reports) os << r.csv_row() << "\n";
  } else {
    for (const auto& r : reports) {
      os << std::left << std::setw(15) << to_string(r.claim);
      std::ostringstream ps;
      for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) ps << " ";
        ps << r.params[i].first << "=" << r.params[i].second;
      }
      os << std::setw(48) << ps.str() << " required=" << r.required_val
         << " achieved=";
      if (!r.achieved_val)
        os << "inf";
      else
        os << (r.achieved_is_lower_bound ? ">=" : "") << *r.achieved_val;
      os << " " << to_string(r.verdict);
      if (!r.note.empty()) os << "  (" << r.note << ")";
      os << "\n";
    }
  }
  return os.str();
}

int verdict_exit_code(const std::vector<CongruenceReport>& reports,
                      bool allow_uncertified) {
  bool any_fail = false, any_insufficient = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::FAIL || r.verdict == Verdict::ERROR)
      any_fail = true;
    if (r.verdict == Verdict::INSUFFICIENT_PRECISION) any_insufficient = true;
  }
  if (any_fail) return kExitFail;
  if (any_insufficient && !allow_uncertified)
    return kExitInsufficientPrecision;
  return kExitPass;
}

Rational parse_q(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--q", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Euler numbers, generalized q-Euler numbers and p-adic "
               "q-L-function congruence verification"};
  app.require_subcommand(1);

  std::string q_text = "1";
  unsigned long p = 3;
  int precision = 40;
  std::string chi_name = "1:0";
  std::string s_text = "0";
  int n_max = 10;
  int k = 1;
  int kprime = -1;
  int level = 3;
  int rho_max = 8;
  int target_prec = 4;
  bool allow_uncertified = false;
  OutputOptions output;
  unsigned long d = 1;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", output.out, "Write output to file");
  };

  // numbers
  auto* numbers = app.add_subcommand(
      "numbers", "q-Euler numbers E_{0,q}..E_{n,q}, exact rationals");
  numbers->add_option("--q", q_text, "Base q as a rational \"a/b\"")
      ->capture_default_str();
  numbers->add_option("--n-max", n_max, "Largest index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_flags(numbers);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Verify a congruence claim on a parameter grid");
  std::string claim;
  verify
      ->add_option("claim", claim,
                   "One of: theorem1, corollary2, eq13, integrality, "
                   "stability, witt, kummer, eq26, interpolation, eq4")
      ->required()
      ->check(CLI::IsMember({"theorem1", "corollary2", "eq13", "integrality",
                             "stability", "witt", "kummer", "eq26",
                             "interpolation", "eq4"}));
  verify->add_option("--p", p, "Odd prime p")->capture_default_str();
  verify->add_option("--q", q_text, "Base q as a rational \"a/b\"")
      ->required();
  verify->add_option("--prec", precision, "Working precision (p-adic digits)")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest degree n (or m for eq4)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--n", k,
                     "Congruence strength n for kummer (mod p^n(p-1))");
  verify->add_option("--k", k, "Index k (witt/stability/kummer/interpolation)")
      ->capture_default_str();
  verify->add_option("--kprime", kprime,
                     "Second index for kummer; default k + p^n(p-1)");
  verify->add_option("--level", level, "Ladder level (stability/witt/eq4)")
      ->capture_default_str();
  verify->add_option("--chi", chi_name, "Character \"d:index\"")
      ->capture_default_str();
  verify->add_option("--rho-max", rho_max, "Max Riemann-sum level (eq25)")
      ->capture_default_str();
  verify
      ->add_option("--target-prec", target_prec,
                   "Certified digits requested from the L-value")
      ->capture_default_str();
  verify->add_flag("--allow-uncertified", allow_uncertified,
                   "Exit 0 even when precision could not be certified");
  add_output_flags(verify);

  // lvalue
  auto* lvalue =
      app.add_subcommand("lvalue", "p-adic q-L-function value L_{p,q,E}(s, chi)");
  lvalue->add_option("--p", p, "Odd prime p")->capture_default_str();
  lvalue->add_option("--q", q_text, "Base q as a rational \"a/b\"")
      ->required();
  lvalue->add_option("--s", s_text, "Evaluation point, an integer")
      ->capture_default_str();
  lvalue->add_option("--chi", chi_name, "Character \"d:index\"")
      ->capture_default_str();
  lvalue->add_option("--prec", precision, "Working precision")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  lvalue->add_option("--target-prec", target_prec, "Certified digits requested")
      ->capture_default_str();
  lvalue->add_option("--rho-max", rho_max, "Max Riemann-sum level")
      ->capture_default_str();
  lvalue->add_flag("--allow-uncertified", allow_uncertified,
                   "Exit 0 even when convergence is not certified");
  add_output_flags(lvalue);

  // chars
  auto* chars =
      app.add_subcommand("chars", "Enumerate Dirichlet characters mod d");
  chars->add_option("--d", d, "Odd modulus")->required();
  add_output_flags(chars);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*numbers) {
      Rational q = parse_q(q_text);
      auto table = cached_q_euler_table(q, n_max);
      std::ostringstream os;
      if (output.format == "json") {
        os << "{\"q\": \"" << q.str() << "\", \"values\": [";
        for (int n = 0; n <= n_max; ++n) {
          if (n) os << ", ";
          os << "\"" << table->at(n).str() << "\"";
        }
        os << "]}\n";
      } else if (output.format == "csv") {
        os << "n,value\n";
        for (int n = 0; n <= n_max; ++n)
          os << n << "," << table->at(n).str() << "\n";
      } else {
        for (int n = 0; n <= n_max; ++n)
          os << "E_{" << n << "," << q.str() << "} = " << table->at(n).str()
             << "\n";
      }
      write_text(output, os.str());
      return kExitPass;
    }

    if (*verify) {
      Rational q = parse_q(q_text);
      PadicContext ctx(p, precision);
      bool needs_disc = claim != "eq26" || q != Rational(1L);
      if (needs_disc) {
        try {
          require_in_disc(q, ctx);
        } catch (const std::domain_error& e) {
          std::cerr << "error: " << e.what() << "\n";
          return kExitUsage;
        }
      }
      std::vector<GridPoint> grid;
      auto base = [&] {
        GridPoint pt;
        pt.p = p;
        pt.q = q;
        pt.chi = chi_name;
        pt.level = level;
        pt.rho_max = rho_max;
        pt.target_abs_precision = target_prec;
        return pt;
      };
      if (claim == "theorem1" || claim == "corollary2" ||
          claim == "integrality" || claim == "eq26") {
        ClaimId id = claim == "theorem1"      ? ClaimId::THM1
                     : claim == "corollary2"  ? ClaimId::COR2
                     : claim == "integrality" ? ClaimId::COR3
                                              : ClaimId::EQ26;
        for (int n = 0; n <= n_max; ++n) {
          GridPoint pt = base();
          pt.claim = id;
          pt.n = n;
          grid.push_back(pt);
        }
      } else if (claim == "eq13") {
        GridPoint pt = base();
        pt.claim = ClaimId::EQ13;
        grid.push_back(pt);
      } else if (claim == "stability" || claim == "witt") {
        for (int n = 0; n <= n_max; ++n)
          for (int kk = 1; kk <= k; ++kk) {
            GridPoint pt = base();
            pt.claim = claim == "stability" ? ClaimId::EQ16 : ClaimId::WITT;
            pt.n = n;
            pt.k = kk;
            grid.push_back(pt);
          }
      } else if (claim == "kummer") {
        GridPoint pt = base();
        pt.claim = ClaimId::KUMMER;
        int strength = verify->count("--n") ? k : 1;
        pt.n = strength;
        pt.k = k;
        pt.kprime = kprime;
        grid.push_back(pt);
      } else if (claim == "interpolation") {
        GridPoint pt = base();
        pt.claim = ClaimId::EQ25;
        pt.k = k;
        grid.push_back(pt);
      } else {  // eq4
        for (int m = 0; m <= n_max; ++m)
          for (int lv = 1; lv <= level; ++lv) {
            GridPoint pt = base();
            pt.claim = ClaimId::EQ4;
            pt.n = m;
            pt.level = lv;
            grid.push_back(pt);
          }
      }
      auto reports = run_grid(grid, precision);
      write_text(output, render_reports(reports, output.format));
      return verdict_exit_code(reports, allow_uncertified);
    }

    if (*lvalue) {
      Rational q = parse_q(q_text);
      PadicContext ctx(p, precision);
      try {
        require_in_disc(q, ctx);
      } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      DirichletCharacter chi = parse_character(chi_name);
      long s = std::stol(s_text);
      LSeriesQuery query{s, chi, q, ctx, target_prec, rho_max};
      LValueResult res = l_value(query);
      std::ostringstream os;
      if (output.format == "csv") {
        os << "value,rho_used,certified_abs_precision,certified\n"
           << res.value.str() << "," << res.rho_used << ","
           << res.certified_abs_precision << ","
           << (res.certified ? "true" : "false") << "\n";
      } else if (output.format == "json") {
        os << "{\"value\": " << res.value.json() << ", \"rho_used\": \""
           << res.rho_used << "\", \"certified_abs_precision\": \""
           << res.certified_abs_precision << "\", \"certified\": "
           << (res.certified ? "true" : "false") << "}\n";
      } else {
        os << "L_{" << p << "," << q.str() << ",E}(" << s << ", "
           << chi.name() << ") = " << res.value.str() << "\n"
           << "rho_used = " << res.rho_used
           << ", certified_abs_precision = " << res.certified_abs_precision
           << ", certified = " << (res.certified ? "true" : "false") << "\n";
      }
      write_text(output, os.str());
      if (!res.certified && !allow_uncertified)
        return kExitInsufficientPrecision;
      return kExitPass;
    }

    // chars
    auto all = enumerate_characters(d);
    std::ostringstream os;
    if (output.format == "json") {
      os << "{\"d\": \"" << d << "\", \"characters\": [";
      for (size_t i = 0; i < all.size(); ++i) {
        if (i) os << ", ";
        os << "{\"name\": \"" << all[i].name() << "\", \"order\": \""
           << all[i].order() << "\", \"conductor\": \"" << all[i].conductor()
           << "\", \"parity\": \"" << all[i].parity() << "\"}";
      }
      os << "]}\n";
    } else if (output.format == "csv") {
      os << "name,order,conductor,parity\n";
      for (const auto& c : all)
        os << c.name() << "," << c.order() << "," << c.conductor() << ","
           << c.parity() << "\n";
    } else {
      for (const auto& c : all)
        os << std::left << std::setw(10) << c.name()
           << " order=" << c.order() << " conductor=" << c.conductor()
           << " parity=" << (c.parity() > 0 ? "+1" : "-1") << "\n";
    }
    write_text(output, os.str());
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
