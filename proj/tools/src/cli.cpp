#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "novikov/series.hpp"

namespace novikov::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, tsv };

// Thrown for inconsistent flag combinations that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result of a finished command: one rendering per format, plus the exit code.
struct Output {
    std::string text;
    json data;
    std::string tsv;
    int code = kExitOk;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- quotient selection shared by dim, decompose, distributive, implies

struct PointFlags {
    std::optional<long> alpha, beta, gamma, delta;

    void add(CLI::App* app, bool ab = true, bool gd = true) {
        if (ab) {
            app->add_option("--alpha", alpha, "first coordinate of (alpha:beta)");
            app->add_option("--beta", beta, "second coordinate of (alpha:beta)");
        }
        if (gd) {
            app->add_option("--gamma", gamma, "first coordinate of (gamma:delta)");
            app->add_option("--delta", delta, "second coordinate of (gamma:delta)");
        }
    }

    static std::optional<ProjectivePoint> pair(const std::optional<long>& x, const std::optional<long>& y,
                                               const char* what, bool needed) {
        if (!x && !y) {
            if (needed) throw UsageError(std::string("missing ") + what);
            return std::nullopt;
        }
        if (!x || !y) throw UsageError(std::string("give both coordinates of ") + what);
        if (!needed) throw UsageError(std::string(what) + " is not used here");
        return ProjectivePoint(Rational(*x), Rational(*y));
    }

    ParamPoint point(std::pair<bool, bool> needs) const {
        return {pair(alpha, beta, "(alpha:beta)", needs.first), pair(gamma, delta, "(gamma:delta)", needs.second)};
    }
};

struct QuotientFlags {
    std::string family;
    PointFlags point;
    std::vector<std::string> identities;
    std::vector<std::string> differentials;
    std::string identities_file;

    void add(CLI::App* app) {
        app->add_option("--family", family, "P, Q, O, S or T");
        point.add(app);
        // One value per flag; otherwise CLI11 reads a bracketed value such as "[[a,b],c]" as a list.
        app->add_option("--identity", identities, "extra magmatic identity, multilinearized (repeatable)")->allow_extra_args(false);
        app->add_option("--differential", differentials, "extra generator in differential form (repeatable)")->allow_extra_args(false);
        app->add_option("--identities-file", identities_file, "JSON list of magmatic polynomials");
    }

    std::vector<NovElement> generators() const {
        std::vector<NovElement> gens;
        auto add_magmatic = [&](const MagPoly& f) {
            for (const auto& m : multilinearize(f)) gens.push_back(embed(m));
        };
        if (!family.empty()) {
            const Family f = parse_family(family);
            for (auto& g : family_generators(f, point.point(family_parameters(f))).embedded) gens.push_back(std::move(g));
        } else if (point.alpha || point.beta || point.gamma || point.delta) {
            throw UsageError("parameters need --family");
        }
        for (const auto& text : identities) add_magmatic(MagPoly::parse(text));
        for (const auto& text : differentials) gens.push_back(linearize_differential(text));
        if (!identities_file.empty()) {
            const json j = json::parse(read_file(identities_file));
            if (!j.is_array()) throw UsageError("--identities-file needs a JSON list");
            for (const auto& p : j) add_magmatic(poly_from_json(p.dump()));
        }
        return gens;
    }

    std::string describe() const {
        std::string s = family.empty() ? "Nov" : family + point.point(family_parameters(parse_family(family))).str();
        for (const auto& t : identities) s += " / " + t;
        for (const auto& t : differentials) s += " / " + t;
        if (!identities_file.empty()) s += " / " + identities_file;
        return s;
    }
};

// ---- series input shared by the series subcommands

struct SeriesFlags {
    std::string series;
    std::string dims;
    std::string file;
    int order = kDefaultSeriesOrder;

    void add(CLI::App* app, const std::string& prefix = "") {
        app->add_option("--" + prefix + "series", series, "series text, e.g. \"t + t^2 + 1/3 t^3\"");
        app->add_option("--" + prefix + "dims", dims, "dimensions from arity 1, comma separated");
        app->add_option("--" + prefix + "series-file", file, "JSON list of coefficients c_1..c_N");
        if (prefix.empty()) app->add_option("--order", order, "truncation order")->check(CLI::Range(1, 400));
    }

    bool given() const { return !series.empty() || !dims.empty() || !file.empty(); }

    PolySeries poly(int ord) const {
        const int sources = !series.empty() + !dims.empty() + !file.empty();
        if (sources != 1) throw UsageError("give exactly one of --series, --dims, --series-file");
        if (!series.empty()) return parse_series(series, ord);
        if (!file.empty()) return series_from_json(read_file(file)).truncated(ord);
        std::vector<long> d;
        std::stringstream ss(dims);
        for (std::string item; std::getline(ss, item, ',');) {
            try {
                std::size_t used = 0;
                d.push_back(std::stol(item, &used));
                if (used != item.size() || d.back() < 0) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw UsageError("bad dimension '" + item + "'");
            }
        }
        return to_poly(from_dims(d, ord));
    }

    RationalSeries rational(int ord) const { return to_rational(poly(ord)); }
};

// ---- Gröbner input

struct GbFlags {
    std::string system;
    bool as_printed = false;
    std::string presentation;
    std::string family;
    PointFlags point;

    void add(CLI::App* app) {
        app->add_option("--system", system, "listed system: Q(1:-1), Q(1:0) or Q(0:1)");
        app->add_flag("--as-printed", as_printed, "use the system exactly as printed");
        app->add_option("--presentation", presentation, "presentation JSON file");
        app->add_option("--family", family, "S or T: polarized presentation of the Koszul family");
        point.add(app);
    }

    static GbSystem parse_system(const std::string& name) {
        for (const auto s : {GbSystem::q_1_m1, GbSystem::q_1_0, GbSystem::q_0_1}) {
            if (gb_system_name(s) == name) return s;
        }
        throw UsageError("unknown system '" + name + "' (expected Q(1:-1), Q(1:0) or Q(0:1))");
    }

    int sources() const { return !system.empty() + !presentation.empty() + !family.empty(); }

    /// Listed rules for --system, the orbit-expanded system otherwise.
    RewriteSystem rewrite_system() const {
        if (sources() != 1) throw UsageError("give exactly one of --system, --presentation, --family");
        if (!system.empty()) return gb_system(parse_system(system), as_printed);
        return to_rewrite_system(presentation_input());
    }

    Presentation presentation_input() const {
        if (!presentation.empty()) return presentation_from_json(read_file(presentation));
        if (!family.empty()) {
            const Family f = parse_family(family);
            return koszul_family_presentation(f, point.point(family_parameters(f)));
        }
        const GbSystem s = parse_system(system);
        Presentation p;
        p.relations = gb_system_relations(s, as_printed);
        return p;
    }
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    throw UsageError("unknown format '" + s + "' (text, json or tsv)");
}

std::string tsv_escape(std::string s) {
    for (char& c : s) {
        if (c == '\t' || c == '\n') c = ' ';
    }
    return s;
}

Output report_output(const VerificationReport& r) {
    Output o;
    o.text = r.table();
    o.data = json::parse(to_json(r));
    o.tsv = "id\tcriterion\tstatus\tcomputed\texpected\tmillis\n";
    for (const auto& c : r.checks) {
        o.tsv += c.id + "\t" + std::to_string(c.criterion) + "\t" + std::string(status_name(c.status)) + "\t" +
                 tsv_escape(c.computed) + "\t" + tsv_escape(c.expected) + "\t" + std::to_string(c.millis) + "\n";
    }
    o.code = r.has_failure() ? kExitCheckFailed : kExitOk;
    return o;
}

std::string coefficient_str(const ParamPoly& c) { return c.is_constant() ? c.constant_value().str() : c.str(); }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with quotients of the Novikov operad", "novikov"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_flag;
    unsigned jobs = 0;
    app.add_option("--format", format_flag, "text, json or tsv (default: $NOVIKOV_FORMAT, else text)");
    app.add_option("--jobs", jobs, "worker threads, 0 = hardware concurrency");

    std::function<Output()> action;

    // dim
    QuotientFlags dim_q;
    int dim_arity = 0;
    int dim_from = 0;
    auto* dim = app.add_subcommand("dim", "dimension of the quotient in one arity or a range");
    dim_q.add(dim);
    dim->add_option("--arity", dim_arity, "arity (upper end of the range with --from)")->required()->check(CLI::Range(1, kMaxArityCap));
    dim->add_option("--from", dim_from, "first arity of the range")->check(CLI::Range(1, kMaxArityCap));
    dim->callback([&] {
        action = [&] {
            const int from = dim_from == 0 ? dim_arity : dim_from;
            if (from > dim_arity) throw UsageError("--from exceeds --arity");
            const IdealBasis ideal = build_ideal(dim_q.generators(), dim_arity, {kMaxArityCap});
            Output o;
            o.data = {{"quotient", dim_q.describe()}, {"dims", json::object()}};
            o.tsv = "arity\tdim\n";
            for (int n = from; n <= dim_arity; ++n) {
                const auto d = ideal.quotient_dim(n);
                o.text += from == dim_arity ? std::to_string(d) + "\n" : std::to_string(n) + " " + std::to_string(d) + "\n";
                o.data["dims"][std::to_string(n)] = d;
                o.tsv += std::to_string(n) + "\t" + std::to_string(d) + "\n";
            }
            return o;
        };
    });

    // decompose
    QuotientFlags dec_q;
    int dec_arity = 0;
    auto* dec = app.add_subcommand("decompose", "S_n-module decomposition of the quotient in one arity");
    dec_q.add(dec);
    dec->add_option("--arity", dec_arity, "arity")->required()->check(CLI::Range(1, kMaxArityCap));
    dec->callback([&] {
        action = [&] {
            const IdealBasis ideal = build_ideal(dec_q.generators(), dec_arity, {kMaxArityCap});
            const ModuleDecomposition d = decompose(ideal, dec_arity);
            Output o;
            o.text = d.str() + "\n";
            o.data = json::parse(to_json(d));
            o.tsv = "partition\tmultiplicity\n";
            for (const auto& [p, m] : d.modules) o.tsv += partition_label(p) + "\t" + std::to_string(m) + "\n";
            return o;
        };
    });

    // distributive
    QuotientFlags dist_q;
    int dist_arity = 6;
    auto* dist = app.add_subcommand("distributive", "multiplicity-one test of the subvariety lattice");
    dist_q.add(dist);
    dist->add_option("--max-arity", dist_arity, "last arity checked")->capture_default_str()->check(CLI::Range(1, kMaxArityCap));
    dist->callback([&] {
        action = [&] {
            const IdealBasis ideal = build_ideal(dist_q.generators(), dist_arity, {kMaxArityCap});
            const auto r = is_distributive(ideal, dist_arity);
            Output o;
            o.data = {{"distributive", r.distributive}, {"max_arity", dist_arity}};
            if (r.distributive) {
                o.text = "distributive through arity " + std::to_string(dist_arity) + "\n";
                o.tsv = "distributive\tarity\tpartition\ntrue\t\t\n";
            } else {
                const auto& [n, p] = *r.first_failure;
                o.text = "not distributive: " + partition_label(p) + " repeats in arity " + std::to_string(n) + "\n";
                o.data["failure"] = {{"arity", n}, {"partition", p}};
                o.tsv = "distributive\tarity\tpartition\nfalse\t" + std::to_string(n) + "\t" + partition_label(p) + "\n";
                o.code = kExitCheckFailed;
            }
            return o;
        };
    });

    // implies
    QuotientFlags imp_q;
    std::string imp_magmatic, imp_differential, imp_file;
    auto* imp = app.add_subcommand("implies", "whether the quotient's identities force a candidate");
    imp_q.add(imp);
    imp->add_option("--candidate", imp_magmatic, "multilinear magmatic identity");
    imp->add_option("--candidate-differential", imp_differential, "differential monomial text, linearized");
    imp->add_option("--candidate-file", imp_file, "NovElement JSON");
    imp->callback([&] {
        action = [&] {
            if (!imp_magmatic.empty() + !imp_differential.empty() + !imp_file.empty() != 1) {
                throw UsageError("give exactly one of --candidate, --candidate-differential, --candidate-file");
            }
            NovElement e = !imp_magmatic.empty()      ? embed(MagPoly::parse(imp_magmatic))
                           : !imp_differential.empty() ? linearize_differential(imp_differential)
                                                       : nov_element_from_json(read_file(imp_file));
            const IdealBasis ideal = build_ideal(imp_q.generators(), e.arity(), {kMaxArityCap});
            const bool yes = ideal.contains(e);
            Output o;
            o.text = yes ? "implied\n" : "not implied\n";
            o.data = {{"implied", yes}, {"arity", e.arity()}};
            o.tsv = "implied\tarity\n" + std::string(yes ? "true" : "false") + "\t" + std::to_string(e.arity()) + "\n";
            o.code = yes ? kExitOk : kExitCheckFailed;
            return o;
        };
    });

    // series
    auto* series = app.add_subcommand("series", "exponential generating series");
    series->require_subcommand(1);
    SeriesFlags inv_s;
    auto* inv = series->add_subcommand("invert", "compositional inverse");
    inv_s.add(inv);
    inv->callback([&] {
        action = [&] {
            const PolySeries f = inv_s.poly(inv_s.order);
            const PolySeries g = comp_inverse(f);
            Output o;
            o.text = g.str() + "\n";
            o.data = json::parse(to_json(g));
            o.tsv = "k\tcoefficient\n";
            for (int k = 1; k <= g.order(); ++k) o.tsv += std::to_string(k) + "\t" + coefficient_str(g[k]) + "\n";
            return o;
        };
    });
    SeriesFlags sign_s;
    auto* sign = series->add_subcommand("sign-test", "alternating-sign test on the inverse coefficients");
    sign_s.add(sign);
    sign->callback([&] {
        action = [&] {
            const SignTestResult r = koszul_sign_test(sign_s.rational(sign_s.order));
            Output o;
            o.data = {{"passed", r.passed}};
            o.tsv = "passed\tn\tvalue\n";
            if (r.passed) {
                o.text = "pass through t^" + std::to_string(r.inverse.order()) + "\n";
                o.tsv += "true\t\t\n";
            } else {
                o.text = "fail at n=" + std::to_string(*r.failing_n) + ": " + r.value->str() + "\n";
                o.data["failing_n"] = *r.failing_n;
                o.data["value"] = r.value->str();
                o.tsv += "false\t" + std::to_string(*r.failing_n) + "\t" + r.value->str() + "\n";
                o.code = kExitCheckFailed;
            }
            return o;
        };
    });
    SeriesFlags dc_f, dc_g;
    auto* dc = series->add_subcommand("dual-check", "checks -g(-f(t)) = t; g defaults to the inverse-derived dual");
    dc_f.add(dc);
    dc_g.add(dc, "dual-");
    dc->callback([&] {
        action = [&] {
            const RationalSeries f = dc_f.rational(dc_f.order);
            const RationalSeries g = dc_g.given() ? dc_g.rational(dc_f.order) : sign_twist(comp_inverse(f));
            const bool ok = check_dual_pair(f, g);
            Output o;
            o.text = std::string(ok ? "dual pair" : "not a dual pair") + "\ndual: " + g.str() + "\n";
            o.data = {{"dual_pair", ok}, {"dual", json::parse(to_json(g))}};
            o.tsv = "dual_pair\tdual\n" + std::string(ok ? "true" : "false") + "\t" + g.str() + "\n";
            o.code = ok ? kExitOk : kExitCheckFailed;
            return o;
        };
    });
    SeriesFlags w_s;
    int w_n = 0, w_k = 0;
    auto* weighted = series->add_subcommand("weighted", "coefficient of u^k t^n in the inverse of a series in t and u");
    w_s.add(weighted);
    weighted->add_option("--n", w_n, "power of t")->required()->check(CLI::Range(1, 400));
    weighted->add_option("--k", w_k, "power of u")->required()->check(CLI::Range(0, 400));
    weighted->callback([&] {
        action = [&] {
            const Rational c = weighted_inverse_coeff(w_s.poly(std::max(w_s.order, w_n)), w_n, w_k);
            Output o;
            o.text = c.str() + "\n";
            o.data = {{"n", w_n}, {"k", w_k}, {"coefficient", c.str()}};
            o.tsv = "n\tk\tcoefficient\n" + std::to_string(w_n) + "\t" + std::to_string(w_k) + "\t" + c.str() + "\n";
            return o;
        };
    });

    // gb
    auto* gb = app.add_subcommand("gb", "Gröbner bases of shuffle presentations");
    gb->require_subcommand(1);
    GbFlags gbc_f;
    int gbc_arity = 5;
    int gbc_count_to = 6;
    auto* gbc = gb->add_subcommand("check", "reducedness, Gröbner property and normal counts");
    gbc_f.add(gbc);
    gbc->add_option("--max-arity", gbc_arity, "overlaps up to this arity")->capture_default_str()->check(CLI::Range(3, 7));
    gbc->add_option("--count-to", gbc_count_to, "normal counts for arities 3..N")->capture_default_str()->check(CLI::Range(3, 8));
    gbc->callback([&] {
        action = [&] {
            const RewriteSystem rs = gbc_f.rewrite_system();
            const bool reduced = rs.is_reduced();
            const bool groebner = is_groebner(rs, gbc_arity);
            Output o;
            o.data = {{"rules", rs.size()}, {"reduced", reduced}, {"groebner", groebner}, {"normal_counts", json::object()}};
            o.text = std::to_string(rs.size()) + " rules, " + (reduced ? "reduced" : "not reduced") + ", " +
                     (groebner ? "Gröbner" : "not Gröbner") + " through arity " + std::to_string(gbc_arity) + "\n";
            o.tsv = "arity\tnormal\n";
            for (int n = 3; n <= gbc_count_to; ++n) {
                const auto c = normal_count(rs, n);
                o.text += "normal monomials in arity " + std::to_string(n) + ": " + std::to_string(c) + "\n";
                o.data["normal_counts"][std::to_string(n)] = c;
                o.tsv += std::to_string(n) + "\t" + std::to_string(c) + "\n";
            }
            o.code = reduced && groebner ? kExitOk : kExitCheckFailed;
            return o;
        };
    });
    GbFlags gbx_f;
    int gbx_arity = 5;
    std::size_t gbx_budget = 2000;
    std::string gbx_order;
    auto* gbx = gb->add_subcommand("complete", "completion to a Gröbner basis");
    gbx_f.add(gbx);
    gbx->add_option("--max-arity", gbx_arity, "completion arity bound")->capture_default_str()->check(CLI::Range(3, 7));
    gbx->add_option("--budget", gbx_budget, "rule budget")->capture_default_str();
    gbx->add_option("--order", gbx_order, "monomial order, overriding the presentation's");
    gbx->callback([&] {
        action = [&] {
            if (gbx_f.sources() != 1) throw UsageError("give exactly one of --system, --presentation, --family");
            Presentation p = gbx_f.presentation_input();
            if (!gbx_order.empty()) p.order = gbx_order;
            const RewriteSystem rs = complete(to_rewrite_system(p), CompletionOptions{gbx_arity, gbx_budget, jobs});
            const Presentation done = to_presentation(rs);
            Output o;
            o.data = json::parse(to_json(done));
            o.text = "order " + done.order + "\n";
            o.tsv = "arity\trelation\n";
            for (std::size_t i = 0; i < done.relations.size(); ++i) {
                o.text += done.relations[i].str() + "\n";
                o.tsv += std::to_string(rs.rules()[i].lead().arity()) + "\t" + done.relations[i].str() + "\n";
            }
            return o;
        };
    });
    GbFlags gbn_f;
    int gbn_arity = 0;
    auto* gbn = gb->add_subcommand("count-normal", "number of normal monomials in one arity");
    gbn_f.add(gbn);
    gbn->add_option("--arity", gbn_arity, "arity")->required()->check(CLI::Range(1, 8));
    gbn->callback([&] {
        action = [&] {
            const auto c = normal_count(gbn_f.rewrite_system(), gbn_arity);
            Output o;
            o.text = std::to_string(c) + "\n";
            o.data = {{"arity", gbn_arity}, {"normal", c}};
            o.tsv = "arity\tnormal\n" + std::to_string(gbn_arity) + "\t" + std::to_string(c) + "\n";
            return o;
        };
    });

    // dual
    std::vector<std::string> dual_rel;
    std::string dual_sym = "none";
    std::string dual_family;
    PointFlags dual_point;
    bool dual_mirror = false, dual_catalog = false;
    auto* dual = app.add_subcommand("dual", "Koszul dual of a binary quadratic operad");
    dual->add_option("--relation", dual_rel, "arity-3 relation (repeatable)")->allow_extra_args(false);
    dual->add_option("--symmetry", dual_sym, "generator symmetry: none, sym or antisym")->capture_default_str();
    dual->add_option("--family", dual_family, "arity-3 presentation of a family quotient of Nov");
    dual_point.add(dual);
    dual->add_flag("--mirror", dual_mirror, "report the mirrored (opposite-hand) dual");
    dual->add_flag("--catalog", dual_catalog, "compare the duals of the Koszul quotients with the expected list");
    dual->callback([&] {
        action = [&] {
            Output o;
            if (dual_catalog) {
                if (!dual_rel.empty() || !dual_family.empty()) throw UsageError("--catalog takes no input");
                o.data = json::array();
                o.tsv = "name\tmatches\texpected\tdetail\n";
                for (const auto& d : catalogued_duals()) {
                    o.text += std::string(d.matches ? "match    " : "MISMATCH ") + d.name + ": " + d.detail + "\n";
                    o.data.push_back({{"name", d.name}, {"source", d.source}, {"expected", d.expected},
                                      {"matches", d.matches}, {"detail", d.detail}});
                    o.tsv += d.name + "\t" + (d.matches ? "true" : "false") + "\t" + d.expected + "\t" + d.detail + "\n";
                    if (!d.matches) o.code = kExitCheckFailed;
                }
                return o;
            }
            QuadraticPresentation p;
            if (!dual_family.empty()) {
                if (!dual_rel.empty()) throw UsageError("give --family or --relation, not both");
                const Family f = parse_family(dual_family);
                p = novikov_quotient_presentation(family_generators(f, dual_point.point(family_parameters(f))).magmatic);
            } else {
                if (dual_rel.empty()) throw UsageError("give --relation, --family or --catalog");
                p.generator = dual_sym == "none"      ? Symmetry::none
                              : dual_sym == "sym"     ? Symmetry::sym
                              : dual_sym == "antisym" ? Symmetry::antisym
                                                      : throw UsageError("unknown symmetry '" + dual_sym + "'");
                for (const auto& r : dual_rel) p.relations.push_back(MagPoly::parse(r));
            }
            QuadraticPresentation d = koszul_dual(p);
            if (dual_mirror) d = mirrored(d);
            o.data = {{"rank", relation_rank(d)}, {"relations", json::array()}};
            o.tsv = "relation\n";
            for (const auto& r : d.relations) {
                o.text += r.str() + "\n";
                o.data["relations"].push_back(r.str());
                o.tsv += r.str() + "\n";
            }
            if (d.relations.empty()) o.text = "(no relations)\n";
            return o;
        };
    });

    // algebra
    auto* algebra = app.add_subcommand("algebra", "identities in small algebras");
    algebra->require_subcommand(1);
    std::string alg_name = "B";
    std::string alg_delta;
    std::vector<std::string> alg_ids;
    bool alg_novikov = false;
    std::string alg_family;
    PointFlags alg_point;
    auto* alg = algebra->add_subcommand("check", "substitutes all basis tuples into each identity");
    alg->add_option("--algebra", alg_name, "A (ee = e) or B (the two-dimensional algebra)")->capture_default_str();
    alg->add_option("--delta-value", alg_delta, "rational value for the parameter of B (default symbolic)");
    alg->add_option("--identity", alg_ids, "magmatic identity, multilinearized (repeatable)")->allow_extra_args(false);
    alg->add_flag("--novikov", alg_novikov, "the two Novikov identities");
    alg->add_option("--family", alg_family, "defining identities of a family at a point");
    alg_point.add(alg);
    alg->callback([&] {
        action = [&] {
            FiniteAlgebra a = alg_name == "A" ? algebra_A()
                              : alg_name == "B" ? algebra_B()
                                                : throw UsageError("unknown algebra '" + alg_name + "'");
            if (!alg_delta.empty()) a = a.specialize({{Param::delta, Rational::parse(alg_delta)}});
            std::vector<std::pair<std::string, MagPoly>> ids;
            if (alg_novikov) {
                const auto nov = novikov_identities();
                ids.emplace_back("right-symmetric", nov[0]);
                ids.emplace_back("left-commutative", nov[1]);
            }
            if (!alg_family.empty()) {
                const Family f = parse_family(alg_family);
                for (const auto& g : family_generators(f, alg_point.point(family_parameters(f))).magmatic) {
                    ids.emplace_back(g.str(), g);
                }
            }
            for (const auto& t : alg_ids) {
                for (const auto& m : multilinearize(MagPoly::parse(t))) ids.emplace_back(t, m);
            }
            if (ids.empty()) throw UsageError("give --identity, --novikov or --family");
            Output o;
            o.data = json::array();
            o.tsv = "identity\tholds\n";
            for (const auto& [name, f] : ids) {
                const bool h = check_algebra_identity(a, f);
                o.text += std::string(h ? "holds  " : "fails  ") + name + "\n";
                o.data.push_back({{"identity", name}, {"holds", h}});
                o.tsv += name + "\t" + (h ? "true" : "false") + "\n";
                if (!h) o.code = kExitCheckFailed;
            }
            return o;
        };
    });

    // lattice
    PointFlags lat_point;
    int lat_arity = 5;
    std::string lat_element;
    auto* lat = app.add_subcommand("lattice", "implication diagram of the modules of O at a point");
    lat_point.add(lat);
    lat->add_option("--max-arity", lat_arity, "last arity")->capture_default_str()->check(CLI::Range(1, kDefaultArityCap));
    lat->add_option("--element", lat_element, "differential element; prints the nodes it forces");
    lat->callback([&] {
        action = [&] {
            const LatticeReport r = lattice_report(lat_point.point({true, true}), lat_arity, jobs);
            Output o;
            if (!lat_element.empty()) {
                const auto hit = implied_nodes(r, linearize_differential(lat_element));
                o.data = json::array();
                o.tsv = "arity\tpartition\n";
                for (const auto i : hit) {
                    o.text += r.nodes[i].label() + " (arity " + std::to_string(r.nodes[i].arity) + ")\n";
                    o.data.push_back({{"arity", r.nodes[i].arity}, {"partition", r.nodes[i].partition}});
                    o.tsv += std::to_string(r.nodes[i].arity) + "\t" + r.nodes[i].label() + "\n";
                }
                if (hit.empty()) o.text = "(none)\n";
                return o;
            }
            o.data = json::parse(to_json(r));
            o.tsv = "from\tto\n";
            for (const auto& [a, b] : r.hasse_edges()) {
                o.text += r.nodes[a].label() + " -> " + r.nodes[b].label() + "\n";
                o.tsv += r.nodes[a].label() + "\t" + r.nodes[b].label() + "\n";
            }
            return o;
        };
    });

    // verify-all
    int ver_arity = kDefaultArityCap;
    std::vector<std::string> ver_groups;
    bool ver_no_timings = false, ver_quiet = false;
    std::string ver_report;
    auto* ver = app.add_subcommand("verify-all", "runs every catalogued check");
    ver->add_option("--max-arity", ver_arity, "checks needing more are skipped")->capture_default_str()->check(CLI::Range(1, kDefaultArityCap));
    ver->add_option("--group", ver_groups, "restrict to a check group (repeatable)")->allow_extra_args(false);
    ver->add_flag("--no-timings", ver_no_timings, "zero the timings so the report is reproducible");
    ver->add_flag("--quiet", ver_quiet, "no progress on the error stream");
    ver->add_option("--report", ver_report, "re-read a JSON report instead of computing");
    ver->callback([&] {
        action = [&] {
            if (!ver_report.empty()) return report_output(report_from_json(read_file(ver_report)));
            VerifyConfig config;
            config.max_arity = ver_arity;
            config.groups = {ver_groups.begin(), ver_groups.end()};
            config.jobs = jobs;
            config.timings = !ver_no_timings;
            if (!ver_quiet) {
                config.progress = [&err](const CheckResult& c) {
                    err << "[" << status_name(c.status) << "] " << c.id << "\n";
                };
            }
            return report_output(verify_all(config));
        };
    });

    // Help of the innermost subcommand on the command line.
    auto synopsis = [&app] {
        const CLI::App* cur = &app;
        while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
        return cur->help();
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << synopsis();
        return kExitUsage;
    }

    try {
        std::string f = format_flag;
        if (f.empty()) {
            const char* env = std::getenv("NOVIKOV_FORMAT");
            f = env != nullptr && *env != '\0' ? env : "text";
        }
        const Format format = parse_format(f);
        const Output o = action();
        switch (format) {
            case Format::text: out << o.text; break;
            case Format::json: out << o.data.dump(2) << "\n"; break;
            case Format::tsv: out << o.tsv; break;
        }
        return o.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << synopsis();
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: bad JSON input: " << e.what() << "\n\n" << synopsis();
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n\n" << synopsis();
        return kExitUsage;
    }
}

} // namespace novikov::cli
