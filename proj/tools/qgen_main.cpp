// Command-line front end: exact sequence/table generation, identity
// verification, and linear-functional evaluation. Results go to stdout,
// diagnostics to stderr. Exit codes: 0 ok, 1 verification failure, 2 usage.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgen/export.hpp"
#include "qgen/render.hpp"
#include "qgen/verify.hpp"

namespace {

constexpr long kMaxClassicalSeq = 200;
constexpr long kMaxQSeq = 60;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_table(const qgen::TableExport& e, const std::string& fmt) {
  if (fmt == "json") return qgen::to_json(e).dump(2) + "\n";
  if (fmt == "csv") return qgen::to_csv(e);
  if (fmt == "latex") return qgen::to_latex(e);
  return qgen::to_text(e);
}

std::string format_sequence(const qgen::SequenceExport& e,
                            const std::string& fmt) {
  if (fmt == "json") return qgen::to_json(e).dump(2) + "\n";
  if (fmt == "csv") return qgen::to_csv(e);
  if (fmt == "latex") return qgen::to_latex(e);
  return qgen::to_text(e);
}

void check_bound(long n, bool q_variant, const char* what) {
  long cap = q_variant ? kMaxQSeq : kMaxClassicalSeq;
  if (n < 1 || n > cap)
    throw UsageError(std::string(what) + " must lie in [1, " +
                     std::to_string(cap) + "]" + (q_variant ? " with --q" : ""));
}

int run_gen(const std::string& kind, long n, long rows, bool q_variant,
            bool inv_q, const std::string& fmt) {
  using namespace qgen;
  if (inv_q && !q_variant) throw UsageError("--inv-q requires --q");
  if (inv_q && kind != "fib") throw UsageError("--inv-q only applies to fib");
  if (q_variant && (kind == "bernoulli" || kind == "a-matrix"))
    throw UsageError("no q-variant of " + kind);

  if (kind == "genocchi") {
    check_bound(n, q_variant, "--n");
    if (q_variant) {
      auto e = make_sequence_export("q_genocchi", "Z[q,q^-1]", 2, 2,
                                    q_genocchi(static_cast<int>(n)));
      std::cout << format_sequence(e, fmt);
    } else {
      auto e = make_sequence_export("genocchi", "Z", 2, 2,
                                    genocchi(static_cast<int>(n)));
      std::cout << format_sequence(e, fmt);
    }
    return 0;
  }
  if (kind == "bernoulli") {
    if (n < 0 || n > kMaxClassicalSeq)
      throw UsageError("--n must lie in [0, 200]");
    auto e = make_sequence_export("bernoulli", "Q", 0, 1,
                                  bernoulli(static_cast<int>(n)));
    std::cout << format_sequence(e, fmt);
    return 0;
  }
  if (kind == "median") {
    check_bound(n, q_variant, "--n");
    if (q_variant) {
      auto e = make_sequence_export("q_median_genocchi", "Z[q,q^-1]", 1, 2,
                                    q_median_genocchi(static_cast<int>(n)));
      std::cout << format_sequence(e, fmt);
    } else {
      auto e = make_sequence_export("median_genocchi", "Z", 1, 2,
                                    median_genocchi(static_cast<int>(n)));
      std::cout << format_sequence(e, fmt);
    }
    return 0;
  }
  if (kind == "triangle") {
    long cap = q_variant ? 2 * kMaxQSeq : 2 * kMaxClassicalSeq;
    if (rows < 1 || rows > cap)
      throw UsageError("--rows must lie in [1, " + std::to_string(cap) + "]");
    if (q_variant) {
      auto e = make_triangle_export("q_seidel_triangle", "Z[q,q^-1]",
                                    q_seidel_triangle(static_cast<int>(rows)));
      std::cout << format_table(e, fmt);
    } else {
      auto e = make_triangle_export("seidel_triangle", "Z",
                                    seidel_triangle(static_cast<int>(rows)));
      std::cout << format_table(e, fmt);
    }
    return 0;
  }
  if (kind == "fib") {
    long cap = q_variant ? 2 * kMaxQSeq : 2 * kMaxClassicalSeq;
    if (n < -1 || n > cap)
      throw UsageError("--n must lie in [-1, " + std::to_string(cap) + "]");
    std::string value;
    std::string ring = q_variant ? "Z[q,q^-1]" : "Q";
    if (!q_variant)
      value = render(fib_poly(static_cast<int>(n)));
    else if (inv_q)
      value = render(q_fib_poly_inv(static_cast<int>(n)));
    else
      value = render(q_fib_poly(static_cast<int>(n)));
    if (fmt == "json") {
      nlohmann::ordered_json j;
      j["kind"] = inv_q ? "fib_q_inverse" : (q_variant ? "fib_q" : "fib");
      j["coefficient_ring"] = ring;
      j["n"] = n;
      j["value"] = value;
      std::cout << j.dump(2) << "\n";
    } else if (fmt == "latex") {
      std::cout << "$" << value << "$\n";
    } else if (fmt == "csv") {
      std::cout << "n,value\n" << n << "," << value << "\n";
    } else {
      std::cout << value << "\n";
    }
    return 0;
  }
  if (kind == "a-matrix") {
    if (n < 1 || n > kMaxClassicalSeq)
      throw UsageError("--n must lie in [1, 200]");
    auto e = make_matrix_export("a_matrix", "Q", a_matrix(static_cast<int>(n)));
    std::cout << format_table(e, fmt);
    return 0;
  }
  throw UsageError("unknown kind '" + kind + "'");
}

int run_verify(bool all, const std::string& id, const std::string& profile_name,
               std::optional<long> n, std::optional<long> max_n,
               std::optional<long> m, std::optional<long> order,
               const std::string& fmt) {
  using namespace qgen;
  if (all == !id.empty())
    throw UsageError("pass exactly one of --all or --id");
  Profile prof =
      profile_name == "full" ? Profile::full() : Profile::quick();
  RunOverrides ov{n, m, max_n, order};
  if (!all) {
    // Enlarge the relevant sweep dimension for explicit requests.
    bool is_q = id.rfind("I4", 0) == 0 || id.rfind("I5", 0) == 0;
    long want = std::max(n.value_or(0), max_n.value_or(0));
    if (want > 0) {
      if (is_q)
        prof.q_max = static_cast<int>(std::max<long>(prof.q_max, want));
      else
        prof.classical_max =
            static_cast<int>(std::max<long>(prof.classical_max, want));
    }
    if (order) {
      // Series checks read number tables up to half the order.
      long lift = (*order + 1) / 2;
      if (is_q) {
        prof.q_series_order =
            static_cast<int>(std::max<long>(prof.q_series_order, *order));
        prof.q_max = static_cast<int>(std::max<long>(prof.q_max, lift));
      } else {
        prof.series_order =
            static_cast<int>(std::max<long>(prof.series_order, *order));
        prof.classical_max =
            static_cast<int>(std::max<long>(prof.classical_max, lift));
      }
    }
  }
  // Validate the id before paying for the context.
  if (!all) {
    bool known = false;
    for (const auto& known_id : registry_ids()) known |= (known_id == id);
    if (!known) throw UnknownIdentity("unknown identity '" + id + "'");
  }
  Context cx = Context::make(prof);
  VerificationReport rep;
  if (all) {
    rep = verify_all(cx);
  } else {
    auto t0 = std::chrono::steady_clock::now();
    rep.suite = prof.name;
    rep.cases.push_back(verify_identity(cx, id, ov));
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  }
  if (fmt == "json")
    std::cout << report_json(rep).dump(2) << "\n";
  else
    std::cout << report_text(rep);
  return rep.count(CaseStatus::fail) > 0 ? 1 : 0;
}

int run_functional(const std::string& name, const std::string& poly,
                   std::optional<long> poly_fib, std::optional<long> table_size) {
  using namespace qgen;
  if (poly.empty() == !poly_fib.has_value())
    throw UsageError("pass exactly one of --poly or --poly-fib");
  if (poly_fib && *poly_fib < -1)
    throw UsageError("--poly-fib index must be >= -1");

  auto size_for = [&](int deg) {
    long def = std::max(deg, 0);
    long n = table_size.value_or(def);
    if (n < deg)
      throw UsageError("polynomial degree " + std::to_string(deg) +
                       " exceeds --table-size " + std::to_string(n) +
                       "; pass a larger --table-size");
    if (n > 200) throw UsageError("--table-size must be <= 200");
    return static_cast<int>(n);
  };

  if (name == "L" || name == "M" || name == "V") {
    SLaurent<Rational> p = poly_fib ? fib_poly(static_cast<int>(*poly_fib))
                                    : parse_spoly_rational(poly);
    int N = size_for(p.degree());
    LinearFunctional<Rational> f =
        name == "L" ? make_L(N)
                    : (name == "M" ? make_M(N)
                                   : make_V(bernoulli(std::max(N, 1))));
    std::cout << render(f(p)) << "\n";
    return 0;
  }
  if (name == "Lq") {
    SLaurent<QLaurent> p = poly_fib ? q_fib_poly_inv(static_cast<int>(*poly_fib))
                                    : parse_spoly_qlaurent(poly);
    LinearFunctional<QLaurent> f = make_Lq(size_for(p.degree()));
    std::cout << render(f(p)) << "\n";
    return 0;
  }
  if (name == "Mq") {
    SLaurent<QLaurent> p = poly_fib ? q_fib_poly(static_cast<int>(*poly_fib))
                                    : parse_spoly_qlaurent(poly);
    LinearFunctional<QRatFn> f = make_Mq(size_for(p.degree()));
    std::cout << render(f(p)) << "\n";
    return 0;
  }
  throw UsageError("unknown functional '" + name + "' (L, M, V, Lq, Mq)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Genocchi/Bernoulli/Fibonacci-polynomial toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate sequences and tables");
  std::string kind;
  gen->add_option("kind", kind,
                  "genocchi|bernoulli|median|triangle|fib|a-matrix")
      ->required();
  long n = 8, rows = 8;
  bool q_variant = false, inv_q = false;
  std::string gen_fmt = "text";
  gen->add_option("--n", n, "sequence length / index");
  gen->add_option("--rows", rows, "triangle rows");
  gen->add_flag("--q", q_variant, "q-analogue");
  gen->add_flag("--inv-q", inv_q, "q -> 1/q variant (fib only)");
  gen->add_option("--format", gen_fmt, "text|json|csv|latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run identity checks");
  bool all = false;
  std::string id, profile_name = "quick", verify_fmt = "text";
  std::optional<long> ov_n, ov_max_n, ov_m, ov_order;
  verify->add_flag("--all", all, "run the whole registry");
  verify->add_option("--id", id, "single identity key");
  verify->add_option("--profile", profile_name, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--n", ov_n, "run one parameter value (with --id)");
  verify->add_option("--max-n", ov_max_n, "sweep cap (with --id)");
  verify->add_option("--m", ov_m, "extra parameter (with --id)");
  verify->add_option("--order", ov_order, "series order (with --id)");
  verify->add_option("--format", verify_fmt, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // functional
  auto* fn = app.add_subcommand("functional", "evaluate a linear functional");
  std::string fn_name, fn_poly;
  std::optional<long> fn_fib, fn_table;
  fn->add_option("--name", fn_name, "L|M|V|Lq|Mq")->required();
  fn->add_option("--poly", fn_poly, "polynomial in the canonical grammar");
  fn->add_option("--poly-fib", fn_fib,
                 "apply to the functional's Fibonacci family member");
  fn->add_option("--table-size", fn_table, "monomial table size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      bool rows_given = gen->count("--rows") > 0;
      return run_gen(kind, n, rows_given ? rows : n, q_variant, inv_q, gen_fmt);
    }
    if (verify->parsed()) {
      if ((ov_n || ov_max_n || ov_m || ov_order) && all)
        throw UsageError("--n/--max-n/--m/--order require --id");
      return run_verify(all, id, profile_name, ov_n, ov_max_n, ov_m, ov_order,
                        verify_fmt);
    }
    if (fn->parsed())
      return run_functional(fn_name, fn_poly, fn_fib, fn_table);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qgen::UnknownIdentity& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qgen::ParamOutOfRange& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qgen::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qgen::DegreeExceedsTable& e) {
    std::cerr << "usage error: " << e.what()
              << " (pass a larger --table-size)\n";
    return 2;
  } catch (const qgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
