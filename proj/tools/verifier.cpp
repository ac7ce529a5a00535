#include "verifier.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fraclog/errors.hpp"
#include "fraclog/identities.hpp"
#include "fraclog/logistic.hpp"
#include "fraclog/mittag_leffler.hpp"
#include "table.hpp"

namespace fraclog::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
    std::vector<double> alphas;
    double k = 1.0;
    double u0 = 0.8;
    double t_max = 5.0;
    std::size_t steps = 500;
    std::string out;
    bool svg = false;
    double beta = 1.0;
    std::vector<double> z;
    std::size_t n = 4;
    std::optional<double> s;
    std::string identity = "squared";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string alpha_tag(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

std::ofstream open_file(const fs::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw IoError("cannot open " + p.string() + " for writing");
    return f;
}

void finish(std::ofstream& f, const fs::path& p) {
    f.flush();
    if (!f) throw IoError("write failed: " + p.string());
}

fs::path ensure_dir(const std::string& out) {
    const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

// Single-table commands: --out FILE, or stdout when empty / "-". SVG goes next to the file.
void emit(const Options& o, const Table& t, std::ostream& out, const std::string& title,
          const std::vector<Curve>& curves) {
    if (o.out.empty() || o.out == "-") {
        write_csv(out, t);
        if (o.svg) throw UsageError("--svg needs --out FILE");
        return;
    }
    const fs::path p(o.out);
    auto f = open_file(p);
    write_csv(f, t);
    finish(f, p);
    if (o.svg) {
        fs::path svg = p;
        svg.replace_extension(".svg");
        auto g = open_file(svg);
        write_svg(g, title, curves);
        finish(g, svg);
    }
}

const std::vector<double>& alphas_or(Options& o, std::vector<double> dflt) {
    if (o.alphas.empty()) o.alphas = std::move(dflt);
    return o.alphas;
}

double single_alpha(Options& o) {
    alphas_or(o, {0.5});
    if (o.alphas.size() != 1) throw UsageError("this command takes exactly one --alpha");
    return o.alphas.front();
}

UniformGrid time_grid(const Options& o) { return UniformGrid::over(o.t_max, o.steps); }

int cmd_ml_eval(Options& o, std::ostream& out, std::ostream&) {
    alphas_or(o, {0.5});
    if (o.z.empty()) throw UsageError("ml-eval needs at least one --z");
    Table t{{"alpha", "beta", "z", "value"}, {}};
    for (double a : o.alphas)
        for (double z : o.z) t.add_row({a, o.beta, z, ml_eval(MLParams{a, o.beta}, z)});
    emit(o, t, out, "E_{alpha,beta}(z)", {});
    return kOk;
}

int cmd_coeff_check(Options& o, std::ostream& out, std::ostream& err) {
    if (o.alphas.empty()) {
        if (o.steps < 2) throw UsageError("coeff-check needs an alpha grid of at least 2 points");
        for (std::size_t i = 1; i <= o.steps; ++i) o.alphas.push_back(static_cast<double>(i) / static_cast<double>(o.steps));
    } else if (o.alphas.size() < 2) {
        throw UsageError("coeff-check needs an alpha grid of at least 2 points");
    }
    Table t{{"alpha", "ratio", "deficit"}, {}};
    double min_deficit = std::numeric_limits<double>::infinity(), min_at = NAN;
    std::optional<double> at_one;
    for (double a : o.alphas) {
        const double r = coeff_ratio(a);
        const double d = 0.5 - r;
        t.add_row({a, r, d});
        if (a == 1.0) at_one = d;
        if (a > 0.0 && a < 1.0 && d < min_deficit) min_deficit = d, min_at = a;
    }
    if (std::isfinite(min_deficit))
        err << "min deficit on (0,1): " << fmt(min_deficit) << " at alpha=" << fmt(min_at) << "\n";
    if (at_one) err << "deficit at alpha=1: " << fmt(*at_one) << "\n";
    const Curve c{"ratio", t.column("alpha"), t.column("ratio"), false};
    emit(o, t, out, "Gamma(2a+1) / (4 Gamma(a+1)^2)", {c});
    return kOk;
}

// One CSV per alpha in the output directory, plus one SVG with lhs (solid) and rhs (dashed) per alpha.
int scan_to_dir(Options& o, std::ostream& err, Identity which, const std::string& stem) {
    const fs::path dir = ensure_dir(o.out);
    const auto grid = time_grid(o);
    std::vector<Curve> curves;
    for (double a : o.alphas) {
        const auto r = scan_gap({a, o.k, which, o.s}, grid);
        const auto t = gap_table(r);
        const fs::path p = dir / (stem + "_alpha_" + alpha_tag(a) + ".csv");
        auto f = open_file(p);
        write_csv(f, t);
        finish(f, p);
        err << stem << " alpha=" << fmt(a) << " sup_gap=" << fmt(r.sup_gap) << " at t=" << fmt(r.argmax_t) << " -> "
            << p.string() << "\n";
        const auto ts = t.column("t");
        curves.push_back({"alpha=" + alpha_tag(a) + " lhs", ts, t.column("lhs"), false});
        curves.push_back({"alpha=" + alpha_tag(a) + " rhs", ts, t.column("rhs"), true});
    }
    if (o.svg) {
        const fs::path p = dir / (stem + ".svg");
        auto f = open_file(p);
        write_svg(f, std::string(to_string(which)) + " identity, lhs solid / rhs dashed", curves);
        finish(f, p);
    }
    return kOk;
}

int cmd_figure1(Options& o, std::ostream&, std::ostream& err) {
    alphas_or(o, {0.9, 0.75, 0.5, 0.25});
    return scan_to_dir(o, err, Identity::squared, "figure1");
}

int cmd_identity_check(Options& o, std::ostream&, std::ostream& err) {
    alphas_or(o, {0.5});
    const auto id = parse_identity(o.identity);
    if (!id) throw UsageError("unknown --identity '" + o.identity + "' (squared, derivative, semigroup)");
    return scan_to_dir(o, err, *id, std::string(to_string(*id)));
}

int cmd_semigroup_check(Options& o, std::ostream&, std::ostream& err) {
    alphas_or(o, {0.5});
    return scan_to_dir(o, err, Identity::semigroup, "semigroup");
}

int cmd_lemma_check(Options& o, std::ostream& out, std::ostream& err) {
    alphas_or(o, {0.5});
    const auto grid = time_grid(o);
    Table t{{"alpha", "n", "sup_residual", "argmax_t"}, {}};
    for (double a : o.alphas) {
        for (std::size_t n = 0; n <= o.n; ++n) {
            double sup = 0.0, at = grid.t(0);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double r = std::abs(product_sum_residual(n, a, o.k, grid.t(i)));
                if (r > sup) sup = r, at = grid.t(i);
            }
            t.add_row({a, static_cast<double>(n), sup, at});
        }
        err << "alpha=" << fmt(a) << " orders 0.." << o.n << " checked on " << grid.size() << " points\n";
    }
    emit(o, t, out, "product-sum residual", {});
    return kOk;
}

int cmd_solve_logistic(Options& o, std::ostream& out, std::ostream& err) {
    const LogisticProblem p(single_alpha(o), o.k, o.u0);
    const auto grid = time_grid(o);
    const bool with_west = p.u0 > 0.5;
    Table t{{"t", "u_fabm"}, {}};
    std::vector<Curve> curves;
    if (with_west) {
        t.columns = {"t", "u_fabm", "u_west", "diff"};
        const auto r = compare_west_vs_reference(p, grid);
        for (const auto& s : r.samples) t.add_row({s.t, s.rhs, s.lhs, s.gap});
        err << "max |u_west - u_fabm| = " << fmt(r.sup_gap) << " at t=" << fmt(r.argmax_t) << "\n";
        curves.push_back({"u_fabm", t.column("t"), t.column("u_fabm"), false});
        curves.push_back({"u_west", t.column("t"), t.column("u_west"), true});
    } else {
        const auto u = fabm_solve(p, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) t.add_row({grid.t(i), u[i]});
        err << "u0 <= 1/2: series columns omitted\n";
        curves.push_back({"u_fabm", t.column("t"), t.column("u_fabm"), false});
    }
    emit(o, t, out, "fractional logistic, alpha=" + alpha_tag(p.alpha), curves);
    return kOk;
}

int cmd_west_residual(Options& o, std::ostream& out, std::ostream& err) {
    const LogisticProblem p(single_alpha(o), o.k, o.u0);
    const auto r = west_residual(p, time_grid(o));
    err << "sup_residual = " << fmt(r.sup_residual) << " at t=" << fmt(r.argmax_t) << "\n";
    const auto t = residual_table(r);
    emit(o, t, out, "series residual, alpha=" + alpha_tag(p.alpha), {{"residual", t.column("t"), t.column("residual"), false}});
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for Mittag-Leffler identities and the fractional logistic equation"};
    app.require_subcommand(1, 1);
    Options o;

    auto alpha = [&](CLI::App* s) { s->add_option("--alpha", o.alphas, "order(s); repeatable")->check(CLI::PositiveNumber); };
    auto grid = [&](CLI::App* s) {
        s->add_option("--k", o.k, "rate k")->capture_default_str();
        s->add_option("--t-max", o.t_max, "end of the time grid")->capture_default_str()->check(CLI::PositiveNumber);
        s->add_option("--steps", o.steps, "number of grid steps")->capture_default_str()->check(CLI::PositiveNumber);
    };
    auto output = [&](CLI::App* s, const char* what) {
        s->add_option("--out", o.out, what);
        s->add_flag("--svg", o.svg, "also write an SVG plot");
    };

    struct Entry {
        CLI::App* app;
        int (*fn)(Options&, std::ostream&, std::ostream&);
    };
    std::vector<Entry> cmds;

    auto* ml = app.add_subcommand("ml-eval", "evaluate E_{alpha,beta}(z)");
    alpha(ml);
    ml->add_option("--beta", o.beta)->capture_default_str();
    ml->add_option("--z", o.z, "argument(s); repeatable");
    output(ml, "CSV file (default stdout)");
    cmds.push_back({ml, cmd_ml_eval});

    auto* coeff = app.add_subcommand("coeff-check", "second-order coefficient ratio over an alpha grid");
    alpha(coeff);
    coeff->add_option("--steps", o.steps, "alpha grid i/steps, i=1..steps")->capture_default_str();
    output(coeff, "CSV file (default stdout)");
    cmds.push_back({coeff, cmd_coeff_check});

    auto* ident = app.add_subcommand("identity-check", "scan one identity over t");
    alpha(ident);
    grid(ident);
    ident->add_option("--identity", o.identity, "squared | derivative | semigroup")->capture_default_str();
    ident->add_option("--s", o.s, "fixed s for the semigroup identity (default s = t)");
    output(ident, "output directory");
    cmds.push_back({ident, cmd_identity_check});

    auto* lemma = app.add_subcommand("lemma-check", "product-sum residuals for orders 0..n");
    alpha(lemma);
    grid(lemma);
    lemma->add_option("--n", o.n, "highest order")->capture_default_str();
    output(lemma, "CSV file (default stdout)");
    cmds.push_back({lemma, cmd_lemma_check});

    auto* semi = app.add_subcommand("semigroup-check", "E(a(t+s)^alpha) vs E(at^alpha)E(as^alpha), a = -k^alpha");
    alpha(semi);
    grid(semi);
    semi->add_option("--s", o.s, "fixed s (default s = t)");
    output(semi, "output directory");
    cmds.push_back({semi, cmd_semigroup_check});

    auto* solve = app.add_subcommand("solve-logistic", "predictor-corrector solution, with the series when u0 > 1/2");
    alpha(solve);
    grid(solve);
    solve->add_option("--u0", o.u0)->capture_default_str();
    output(solve, "CSV file (default stdout)");
    cmds.push_back({solve, cmd_solve_logistic});

    auto* west = app.add_subcommand("west-residual", "residual of the series in the fractional equation");
    alpha(west);
    grid(west);
    west->add_option("--u0", o.u0)->capture_default_str();
    output(west, "CSV file (default stdout)");
    cmds.push_back({west, cmd_west_residual});

    auto* fig = app.add_subcommand("figure1", "E(-2x) vs E(-x)^2 for several alpha, one CSV each");
    alpha(fig);
    grid(fig);
    output(fig, "output directory (default .)");
    cmds.push_back({fig, cmd_figure1});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        for (const auto& c : cmds)
            if (c.app->parsed()) return c.fn(o, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return kDomain;
    } catch (const AccuracyError& e) {
        err << "accuracy failure: " << e.what() << " (achieved bound " << fmt(e.achieved_bound()) << ")\n";
        return kDomain;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}

}  // namespace fraclog::cli
