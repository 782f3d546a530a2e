// Command-line front end: builders, transforms, and verification suites
// over exact Pascal matrices on multi-index sets.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 infinite set, 4 monomial condition violated.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvpascal/errors.hpp"
#include "mvpascal/expr.hpp"
#include "mvpascal/io.hpp"
#include "mvpascal/pascal.hpp"
#include "mvpascal/pointset.hpp"
#include "mvpascal/riordan.hpp"
#include "mvpascal/series.hpp"
#include "mvpascal/stirling.hpp"

namespace {

using namespace mvpascal;

// Arguments starting with '[' or '{' are inline JSON; anything else is a
// file path.
json load_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '[' || arg[0] == '{'))
        return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open file: " + arg);
    return json::parse(in);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text << '\n';
}

// Resolves the per-command default and rejects formats a command cannot
// render.
std::string pick_format(const std::string& requested, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
    std::string f = requested.empty() ? fallback : requested;
    for (const char* a : allowed)
        if (f == a) return f;
    throw ParseError("format '" + f + "' is not valid for this command");
}

template <class T>
std::string render_matrix(const Matrix<T>& m, const PointSet& index,
                          std::optional<unsigned> int_cols,
                          const std::string& format) {
    if (format == "json") return matrix_to_json(m, index, int_cols).dump();
    if (format == "csv") return matrix_to_csv(m, index, int_cols);
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += entry_str(m(i, j));
        }
        if (i + 1 < m.rows()) out += '\n';
    }
    return out;
}

struct StdArgs {
    int n = 0;
    std::string gens;
    int bound = -1;  // negative means unbounded
};

int cmd_std(const StdArgs& a, const std::string& format,
            const std::string& out_path) {
    std::string f = pick_format(format, "json", {"json", "text"});
    json j = load_json_arg(a.gens);
    MonomialIdeal ideal =
        j.is_object() ? ideal_from_json(j)
                      : MonomialIdeal::of(a.n, pointset_from_json(j, a.n).points());
    if (j.is_object() && ideal.n != a.n)
        throw DimensionError("ideal file dimension disagrees with --n");
    PointSet r = a.bound < 0 ? standard_monomials(ideal)
                             : standard_monomials(ideal, a.bound);
    if (f == "json") {
        emit(pointset_to_json(r).dump(), out_path);
    } else {
        std::string out;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += '\n';
            out += r[i].str();
        }
        emit(out, out_path);
    }
    return 0;
}

struct MatrixArgs {
    std::string kind;
    std::string set;
    long power = 1;
    bool power_given = false;
};

int cmd_matrix(const MatrixArgs& a, const std::string& format,
               const std::string& out_path) {
    std::string f = pick_format(format, "json", {"json", "csv", "text"});
    if (a.power_given && a.kind != "L")
        throw ParseError("--power applies only to --kind L");
    PointSet r = pointset_from_json(load_json_arg(a.set));
    Matrix<Int> m(0, 0);
    if (a.kind == "L")
        m = a.power_given ? build_L_power(r, a.power) : build_L(r);
    else if (a.kind == "U")
        m = build_U(r);
    else if (a.kind == "S")
        m = build_S(r);
    else
        m = build_A(r);
    emit(render_matrix(m, r, std::nullopt, f), out_path);
    return 0;
}

struct StirlingArgs {
    std::string k;
    std::string set;
    unsigned ell = 0;
};

int cmd_stirling(const StirlingArgs& a, const std::string& format,
                 const std::string& out_path) {
    if (a.k.empty() == a.set.empty())
        throw ParseError("pass exactly one of --k and --set");
    if (!a.k.empty()) {
        std::string f = pick_format(format, "text", {"json", "text"});
        Polynomial p = stirling_poly(MultiIndex::parse(a.k), a.ell);
        emit(f == "json" ? json(p.str()).dump() : p.str(), out_path);
        return 0;
    }
    std::string f = pick_format(format, "json", {"json", "csv", "text"});
    PointSet r = pointset_from_json(load_json_arg(a.set));
    Matrix<Polynomial> m = build_stirling_matrix(r, a.ell);
    emit(render_matrix(m, r, a.ell + 1, f), out_path);
    return 0;
}

struct TransformArgs {
    std::string set;
    std::string input;
    bool inverse = false;
};

int cmd_transform(const TransformArgs& a, const std::string& format,
                  const std::string& out_path) {
    std::string f = pick_format(format, "json", {"json", "text"});
    PointSet w = pointset_from_json(load_json_arg(a.set));
    Sequence seq = sequence_from_json(load_json_arg(a.input));
    if (seq.n != w.n())
        throw DimensionError("sequence dimension disagrees with the set");
    std::vector<Rat> aligned = align_sequence(seq, w);
    std::vector<Rat> b = binomial_transform(w, aligned, a.inverse);
    if (f == "json") {
        emit(sequence_to_json(w, b).dump(), out_path);
    } else {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += '\n';
            out += w[i].str() + ": " + entry_str(b[i]);
        }
        emit(out, out_path);
    }
    return 0;
}

struct RiordanArgs {
    std::string g;
    std::vector<std::string> x;
    int degree = 0;
    int cap = -1;  // negative means "same as degree"
};

int cmd_riordan(const RiordanArgs& a, const std::string& format,
                const std::string& out_path) {
    std::string f = pick_format(format, "json", {"json", "csv", "text"});
    int n = static_cast<int>(a.x.size());
    int cap = a.cap < 0 ? a.degree : a.cap;
    TruncatedSeries g = parse_rational_expr(a.g, n, cap);
    std::vector<TruncatedSeries> x;
    for (const auto& e : a.x) x.push_back(parse_rational_expr(e, n, cap));
    RiordanBasis basis(std::move(g), std::move(x));
    PointSet w = PointSet::degree_window(n, a.degree);
    emit(render_matrix(riordan_matrix(basis, w), w, std::nullopt, f), out_path);
    return 0;
}

// One verification suite run over one index set accumulates pass/fail
// counts; the first failure keeps a counterexample payload.
struct SuiteReport {
    long checks = 0;
    long failures = 0;
    json counterexample;

    void tally(bool ok, const std::function<json()>& payload) {
        ++checks;
        if (ok) return;
        ++failures;
        if (counterexample.is_null()) counterexample = payload();
    }
};

json set_payload(const PointSet& r) { return pointset_to_json(r); }

void suite_lu(const PointSet& r, SuiteReport& rep) {
    Matrix<Int> L = build_L(r);
    Matrix<Int> U = build_U(r);
    Matrix<Int> S = build_S(r);
    Matrix<Int> LU = mat_mul(L, U);
    rep.tally(LU == S, [&] {
        return json{{"check", "factorization"},
                    {"set", set_payload(r)},
                    {"S", matrix_to_json(S, r)["entries"]},
                    {"LU", matrix_to_json(LU, r)["entries"]}};
    });
    Int det = det_bareiss(S);
    rep.tally(det == 1, [&] {
        return json{{"check", "symmetric_determinant"},
                    {"set", set_payload(r)},
                    {"det", entry_str(det)}};
    });
    rep.tally(det_triangular(L) == 1 && det_triangular(U) == 1, [&] {
        return json{{"check", "triangular_determinant"}, {"set", set_payload(r)}};
    });
}

void suite_inverse(const PointSet& r, SuiteReport& rep) {
    Matrix<Int> L = build_L(r);
    Matrix<Int> U = build_U(r);
    Matrix<Int> D = build_D(r);
    Matrix<Int> I = make_identity<Int>(r.size());
    Matrix<Int> linv = mat_mul(D, mat_mul(L, D));
    rep.tally(mat_mul(L, linv) == I, [&] {
        return json{{"check", "lower_inverse"},
                    {"set", set_payload(r)},
                    {"candidate", matrix_to_json(linv, r)["entries"]}};
    });
    rep.tally(mat_mul(U, mat_mul(D, mat_mul(U, D))) == I, [&] {
        return json{{"check", "upper_inverse"}, {"set", set_payload(r)}};
    });
    // S = LU inverts to D U L D.
    Matrix<Int> sinv = mat_mul(D, mat_mul(U, mat_mul(L, D)));
    rep.tally(mat_mul(build_S(r), sinv) == I, [&] {
        return json{{"check", "symmetric_inverse"}, {"set", set_payload(r)}};
    });
}

void suite_powers(const PointSet& r, std::vector<long> ps, SuiteReport& rep) {
    Matrix<Int> L = build_L(r);
    rep.tally(build_L_power(r, 0) == make_identity<Int>(r.size()),
              [&] { return json{{"check", "zeroth_power"}, {"set", set_payload(r)}}; });
    rep.tally(build_L_power(r, 1) == L,
              [&] { return json{{"check", "first_power"}, {"set", set_payload(r)}}; });
    rep.tally(build_L_power(r, 3) == mat_pow(L, 3), [&] {
        return json{{"check", "iterated_product"}, {"set", set_payload(r)}};
    });
    for (long p : ps) {
        Matrix<Int> m = build_L_power(r, p);
        bool divisible = true;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (m(i, j) % p != 0) divisible = false;
        rep.tally(divisible, [&] {
            return json{{"check", "off_diagonal_divisibility"},
                        {"set", set_payload(r)},
                        {"p", p}};
        });
        for (long q : ps)
            rep.tally(mat_mul(m, build_L_power(r, q)) == build_L_power(r, p + q),
                      [&] {
                          return json{{"check", "power_addition"},
                                      {"set", set_payload(r)},
                                      {"p", p},
                                      {"q", q}};
                      });
    }
}

void suite_exp(const PointSet& r, std::vector<long> ps, SuiteReport& rep) {
    Matrix<Int> A = build_A(r);
    int maxdeg = 0;
    for (const auto& k : r.points()) maxdeg = std::max(maxdeg, k.total());
    Matrix<Int> power = make_identity<Int>(r.size());
    for (int m = 0; m <= maxdeg; ++m) power = mat_mul(power, A);
    rep.tally(is_zero_matrix(power), [&] {
        return json{{"check", "nilpotency_order"},
                    {"set", set_payload(r)},
                    {"bound", maxdeg + 1}};
    });
    for (long p : ps) {
        bool ok = false;
        std::string reason = "mismatch";
        try {
            ok = matrix_exponential_nilpotent(A, p) == build_L_power(r, p);
        } catch (const NonNilpotentError& e) {
            reason = e.what();
        } catch (const NonIntegralEntryError& e) {
            reason = e.what();
        }
        rep.tally(ok, [&] {
            return json{{"check", "exponential"},
                        {"set", set_payload(r)},
                        {"p", p},
                        {"reason", reason}};
        });
    }
}

void suite_transform(const PointSet& r, std::mt19937_64& rng, SuiteReport& rep) {
    std::vector<Int> ones(r.size(), Int(1));
    std::vector<Int> doubled = binomial_transform(r, ones, false);
    bool pow2 = true;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (doubled[i] != int_pow(2, static_cast<unsigned long>(r[i].total())))
            pow2 = false;
    rep.tally(pow2, [&] {
        return json{{"check", "all_ones_transform"}, {"set", set_payload(r)}};
    });
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Int> a;
        for (std::size_t i = 0; i < r.size(); ++i)
            a.push_back(static_cast<long>(rng() % 41) - 20);
        bool ok =
            binomial_transform(r, binomial_transform(r, a, false), true) == a &&
            binomial_transform(r, binomial_transform(r, a, true), false) == a;
        rep.tally(ok, [&] {
            return json{{"check", "round_trip"}, {"set", set_payload(r)}};
        });
    }
    rep.tally(binomial_transform(r, monomial_vector(r), false) ==
                  shifted_monomial_vector(r, 1),
              [&] {
                  return json{{"check", "monomial_action"},
                              {"set", set_payload(r)}};
              });
}

void suite_decomp(const PointSet& r, unsigned ell, SuiteReport& rep) {
    for (unsigned l = 0; l <= ell; ++l)
        rep.tally(verify_decomposition(r, l), [&] {
            return json{{"check", "stirling_decomposition"},
                        {"set", set_payload(r)},
                        {"ell", l}};
        });
}

void suite_riordan(int n, int degree, long p, SuiteReport& rep) {
    PointSet w = PointSet::degree_window(n, degree);
    RiordanBasis basis = pascal_basis(n, p, degree);
    rep.tally(riordan_matrix(basis, w) == to_rat(build_L_power(w, p)), [&] {
        return json{{"check", "pascal_window"},
                    {"n", n},
                    {"degree", degree},
                    {"p", p}};
    });
    RiordanBasis opposite = pascal_basis(n, -p, degree);
    rep.tally(riordan_matrix(riordan_product(basis, opposite), w) ==
                  make_identity<Rat>(w.size()),
              [&] {
                  return json{{"check", "opposite_product"},
                              {"n", n},
                              {"degree", degree},
                              {"p", p}};
              });
    // Substituted series invert to z_i / (1 + p*z_i) componentwise.
    RiordanBasis inv = riordan_inverse(basis);
    for (int i = 0; i < n; ++i) {
        TruncatedSeries z = TruncatedSeries::variable(n, degree, i);
        TruncatedSeries denom = TruncatedSeries::one(n, degree);
        denom.add_coeff(MultiIndex::unit(n, i), Rat(static_cast<long>(p)));
        bool ok = inv.x()[static_cast<std::size_t>(i)] == ts_mul(z, ts_recip(denom));
        rep.tally(ok, [&] {
            return json{{"check", "substitution_inverse"},
                        {"n", n},
                        {"p", p},
                        {"component", i + 1}};
        });
    }
}

struct VerifyArgs {
    std::string suite;
    std::string set;
    int n = 0;
    int degree = 3;
    long p = 1;
    long q = 0;
    bool pq_given = false;
    unsigned ell = 3;
    unsigned long seed = 0;
    int trials = 20;
};

int cmd_verify(const VerifyArgs& a, const std::string& out_path) {
    SuiteReport rep;
    std::mt19937_64 rng(a.seed);
    if (a.suite == "riordan") {
        if (a.n <= 0) throw ParseError("--suite riordan needs --n");
        suite_riordan(a.n, a.degree, a.p, rep);
    } else {
        std::vector<PointSet> sets;
        if (!a.set.empty()) {
            sets.push_back(pointset_from_json(load_json_arg(a.set)));
        } else {
            if (a.n <= 0) throw ParseError("pass --set or --n");
            for (int t = 0; t < a.trials; ++t)
                sets.push_back(random_downward_closed(rng, a.n, 40));
        }
        std::vector<long> ps;
        if (a.pq_given) {
            ps = {a.p};
            if (a.q != 0) ps.push_back(a.q);
        } else {
            for (long v = -3; v <= 3; ++v)
                if (v != 0) ps.push_back(v);
        }
        std::vector<long> small_ps = {-2, -1, 1, 2};
        for (const auto& r : sets) {
            if (a.suite == "lu")
                suite_lu(r, rep);
            else if (a.suite == "inverse")
                suite_inverse(r, rep);
            else if (a.suite == "powers")
                suite_powers(r, ps, rep);
            else if (a.suite == "exp")
                suite_exp(r, a.pq_given ? ps : small_ps, rep);
            else if (a.suite == "transform")
                suite_transform(r, rng, rep);
            else
                suite_decomp(r, a.ell, rep);
        }
    }
    json report{{"suite", a.suite},
                {"checks", rep.checks},
                {"failures", rep.failures}};
    if (rep.failures > 0) report["counterexample"] = rep.counterexample;
    emit(report.dump(), out_path);
    return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pascal matrices, Stirling polynomials, and the "
                 "Riordan group over multi-index sets"};
    app.require_subcommand(1);
    // --format and --out live on the top-level app; let subcommands hand
    // them back up instead of rejecting them.
    app.fallthrough();
    std::string format;
    std::string out_path;
    app.add_option("--format", format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    StdArgs std_args;
    CLI::App* cmd_std_p = app.add_subcommand(
        "std", "List the monomials outside an ideal, in graded order");
    cmd_std_p->add_option("--n", std_args.n, "Ambient dimension")->required();
    cmd_std_p
        ->add_option("--gens", std_args.gens,
                     "Generators: inline JSON array or an ideal file")
        ->required();
    cmd_std_p->add_option("--bound", std_args.bound,
                          "Total-degree bound for infinite complements");

    MatrixArgs matrix_args;
    CLI::App* cmd_matrix_p =
        app.add_subcommand("matrix", "Emit one of the matrices L, U, S, A");
    cmd_matrix_p->add_option("--kind", matrix_args.kind, "Matrix family")
        ->required()
        ->check(CLI::IsMember({"L", "U", "S", "A"}));
    cmd_matrix_p
        ->add_option("--set", matrix_args.set, "Index set: inline JSON or a file")
        ->required();
    CLI::Option* power_opt = cmd_matrix_p->add_option(
        "--power", matrix_args.power, "Integer power of L (needs --kind L)");

    StirlingArgs stirling_args;
    CLI::App* cmd_stirling_p = app.add_subcommand(
        "stirling", "Stirling polynomial for one index, or the matrix on a set");
    cmd_stirling_p->add_option("--k", stirling_args.k,
                               "Multi-index, e.g. \"0,1\"");
    cmd_stirling_p->add_option("--set", stirling_args.set,
                               "Index set: inline JSON or a file");
    cmd_stirling_p->add_option("--ell", stirling_args.ell, "Polynomial order")
        ->required();

    TransformArgs transform_args;
    CLI::App* cmd_transform_p = app.add_subcommand(
        "transform", "Binomial transform of a sequence over a closed set");
    cmd_transform_p
        ->add_option("--set", transform_args.set, "Index set: inline JSON or a file")
        ->required();
    cmd_transform_p
        ->add_option("--input", transform_args.input,
                     "Sequence: inline JSON or a file")
        ->required();
    cmd_transform_p->add_flag("--inverse", transform_args.inverse,
                              "Apply the inverse transform");

    RiordanArgs riordan_args;
    CLI::App* cmd_riordan_p = app.add_subcommand(
        "riordan", "Matrix of a Riordan basis on a total-degree window");
    cmd_riordan_p->add_option("--g", riordan_args.g, "Unit series expression")
        ->required();
    cmd_riordan_p
        ->add_option("--x", riordan_args.x,
                     "Substituted series expression, once per variable")
        ->required();
    cmd_riordan_p->add_option("--degree", riordan_args.degree, "Window degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_riordan_p->add_option("--cap", riordan_args.cap,
                              "Truncation cap (default: the window degree)");

    VerifyArgs verify_args;
    CLI::App* cmd_verify_p =
        app.add_subcommand("verify", "Run one verification suite");
    cmd_verify_p->add_option("--suite", verify_args.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(
            {"lu", "inverse", "powers", "exp", "transform", "decomp", "riordan"}));
    cmd_verify_p->add_option("--set", verify_args.set,
                             "Index set: inline JSON or a file");
    cmd_verify_p->add_option("--n", verify_args.n,
                             "Dimension for sampled sets or windows");
    cmd_verify_p->add_option("--degree", verify_args.degree,
                             "Window degree for --suite riordan");
    CLI::Option* p_opt =
        cmd_verify_p->add_option("--p", verify_args.p, "Power parameter");
    CLI::Option* q_opt =
        cmd_verify_p->add_option("--q", verify_args.q, "Second power parameter");
    cmd_verify_p->add_option("--ell", verify_args.ell,
                             "Order bound for --suite decomp");
    cmd_verify_p->add_option("--seed", verify_args.seed,
                             "Seed for sampled sets and sequences");
    cmd_verify_p->add_option("--trials", verify_args.trials,
                             "Number of sampled sets when --set is absent")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    matrix_args.power_given = power_opt->count() > 0;
    verify_args.pq_given = p_opt->count() > 0 || q_opt->count() > 0;

    try {
        if (cmd_std_p->parsed()) return cmd_std(std_args, format, out_path);
        if (cmd_matrix_p->parsed()) return cmd_matrix(matrix_args, format, out_path);
        if (cmd_stirling_p->parsed())
            return cmd_stirling(stirling_args, format, out_path);
        if (cmd_transform_p->parsed())
            return cmd_transform(transform_args, format, out_path);
        if (cmd_riordan_p->parsed())
            return cmd_riordan(riordan_args, format, out_path);
        return cmd_verify(verify_args, out_path);
    } catch (const InfiniteSetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const MonomialConditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
