#include "mhs/cli.hpp"

#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhs/census.hpp"
#include "mhs/limits.hpp"
#include "mhs/monodromy.hpp"
#include "mhs/polylog.hpp"
#include "mhs/single_valued.hpp"
#include "mhs/weight3.hpp"

namespace mhs {

using nlohmann::json;

namespace {

// thrown by a subcommand whose check failed; the payload is already printed
struct VerifyFailed {};

enum class Format { json, csv, pretty };

struct Config {
    int n = 2;
    std::string m, kind, loop, divisor, fn = "L11", suite = "all", limit_id;
    std::vector<std::string> point;
    int tangent = 1, grid = 100;
    unsigned seed = 7;
    double t = 1e-6, tol = -1.0;
    bool csv = false, pretty = false, closed = false, series = false;
};

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& M, const std::vector<std::string>& labels) {
    json re = json::array(), im = json::array();
    for (int r = 0; r < M.rows(); ++r) {
        json a = json::array(), b = json::array();
        for (int c = 0; c < M.cols(); ++c) {
            a.push_back(M(r, c).real());
            b.push_back(M(r, c).imag());
        }
        re.push_back(a);
        im.push_back(b);
    }
    return {{"labels", labels}, {"re", re}, {"im", im}};
}

json imatrix_json(const IMatrix& M) {
    json out = json::array();
    for (int r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
        out.push_back(row);
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> out;
    for (const auto& i : all_indices(n)) out.push_back(i.str());
    return out;
}

std::vector<std::string> plain_labels(int N) {
    std::vector<std::string> out;
    for (int r = 0; r < N; ++r) out.push_back("r" + std::to_string(r));
    return out;
}

void write_matrix_csv(std::ostream& out, const CMatrix& M, const std::vector<std::string>& labels) {
    out << "row,col,re,im\n";
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            out << labels[r] << ',' << labels[c] << ',' << fmt(M(r, c).real()) << ',' << fmt(M(r, c).imag()) << '\n';
}

void emit(std::ostream& out, const Config& c, const json& j) { out << (c.pretty ? j.dump(2) : j.dump()) << '\n'; }

Point point_or_default(const Config& c, std::size_t dim) {
    Point p = parse_point(c.point);
    if (p.size() != dim)
        throw UsageError("expected " + std::to_string(dim) + " coordinate(s) in --point, got " + std::to_string(p.size()));
    return p;
}

bool has_kind(const Config& c) { return !c.kind.empty(); }

CMatrix small_matrix(const Config& c, SmallKind k, const Point& p) {
    if (k == SmallKind::classical) return classical_matrix(c.n, p[0]).M;
    return k == SmallKind::li21 ? build_21(p[0], p[1]).M : build_12(p[0], p[1]).M;
}

std::vector<int> small_tau(const Config& c, SmallKind k) {
    if (k == SmallKind::classical) {
        std::vector<int> t(c.n + 1);
        for (int i = 0; i <= c.n; ++i) t[i] = i;
        return t;
    }
    return k == SmallKind::li21 ? std::vector<int>{0, 1, 1, 2, 2, 3} : std::vector<int>{0, 1, 1, 2, 2, 2, 3};
}

void cmd_eval(const Config& c, std::ostream& out) {
    const Point p = parse_point(c.point);
    cplx v;
    json j;
    if (!c.m.empty()) {
        const MultiIndex m = parse_ints(c.m);
        if (p.size() != m.size()) throw UsageError("--li and --point differ in depth");
        v = c.series ? li_series(m, p) : li_iterated(m, p);
    } else {
        v = multilog(p);
    }
    if (c.csv) {
        out << "re,im\n" << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
        return;
    }
    emit(out, c, cjson(v));
}

void cmd_matrix(const Config& c, std::ostream& out) {
    CMatrix M;
    std::vector<std::string> labels;
    std::vector<int> tau;
    if (has_kind(c)) {
        const SmallKind k = parse_small_kind(c.kind);
        const Point p = point_or_default(c, k == SmallKind::classical ? 1 : 2);
        M = small_matrix(c, k, p);
        tau = small_tau(c, k);
        labels = plain_labels(static_cast<int>(M.rows()));
    } else {
        auto v = build_matrix(c.n, point_or_default(c, c.n));
        M = v.M;
        tau = v.tau;
        labels = index_labels(c.n);
    }
    if (c.csv) return write_matrix_csv(out, M, labels);
    json j = matrix_json(M, labels);
    j["tau"] = tau;
    emit(out, c, j);
}

void cmd_omega(const Config& c, std::ostream& out) {
    Connection om;
    std::vector<std::string> labels;
    if (has_kind(c)) {
        const SmallKind k = parse_small_kind(c.kind);
        om = small_connection(k, c.n);
        labels = plain_labels(static_cast<int>(om.c.size()));
    } else {
        om = connection(c.n);
        labels = index_labels(c.n);
    }
    json entries = json::array();
    if (c.csv) out << "row,col,form\n";
    for (std::size_t r = 0; r < om.c.size(); ++r)
        for (std::size_t k = 0; k < om.c[r].size(); ++k) {
            if (om.c[r][k].empty()) continue;
            if (c.csv)
                out << labels[r] << ',' << labels[k] << ",\"" << om.c[r][k].str() << "\"\n";
            else
                entries.push_back({{"row", labels[r]}, {"col", labels[k]}, {"form", om.c[r][k].str()}});
        }
    if (!c.csv) emit(out, c, {{"labels", labels}, {"entries", entries}});
}

void cmd_monodromy(const Config& c, std::ostream& out) {
    const double tol = c.tol > 0 ? c.tol : 1e-4;
    std::vector<LoopLabel> loops;
    const bool w3 = has_kind(c);
    const SmallKind k = w3 ? parse_small_kind(c.kind) : SmallKind::classical;
    if (!c.loop.empty())
        loops.push_back(LoopLabel::parse(c.loop));
    else if (w3)
        for (const auto& g : weight3_generators(k)) loops.push_back(g.loop);
    else
        loops = all_loops(c.n);
    json rows = json::array();
    bool ok = true;
    for (const auto& q : loops) {
        IMatrix listed;
        if (w3) {
            for (const auto& g : weight3_generators(k))
                if (g.loop.first == q.first && g.loop.second == q.second) listed = g.M;
            if (listed.size() == 0) throw UsageError("no listed generator for loop " + q.str());
        } else {
            listed = generator(c.n, q);
        }
        json r{{"loop", q.str()}, {"generator", imatrix_json(listed)}};
        if (!c.point.empty()) {
            const Point x0 = point_or_default(c, w3 ? 2 : c.n);
            auto t = w3 ? weight3_transport(k, x0, q) : transport(c.n, x0, q);
            const bool match = t.deviation < tol && t.M == listed;
            ok = ok && match;
            r["transport"] = imatrix_json(t.M);
            r["deviation"] = t.deviation;
            r["match"] = match;
        }
        rows.push_back(r);
    }
    emit(out, c, rows);
    if (!ok) throw VerifyFailed{};
}

void cmd_limit(const Config& c, std::ostream& out) {
    if (!c.limit_id.empty()) {
        auto r = limit_case(c.limit_id, parse_point(c.point), c.t);
        const auto labels = plain_labels(static_cast<int>(r.computed.rows()));
        json j{{"case", r.id},
               {"computed", matrix_json(r.computed, labels)},
               {"displayed", matrix_json(r.displayed, labels)},
               {"residual", r.residual},
               {"max_diff", r.max_diff},
               {"rational_dev", r.rational_dev}};
        emit(out, c, j);
        if (c.tol > 0 && !r.entrywise(c.tol)) throw VerifyFailed{};
        return;
    }
    if (c.divisor.empty()) throw UsageError("limit needs --case or --divisor");
    auto b = limit_basis(c.n, point_or_default(c, c.n), LoopLabel::parse(c.divisor), c.tangent, c.t);
    if (c.csv) return write_matrix_csv(out, b.value, index_labels(c.n));
    json j{{"divisor", b.divisor},  {"tangent", b.tangent},   {"limit", matrix_json(b.value, index_labels(c.n))},
           {"residual", b.residual}, {"stabilized", b.stabilized}, {"generator_log", b.generator_log}};
    emit(out, c, j);
    if (c.tol > 0 && b.residual > c.tol) throw VerifyFailed{};
}

void cmd_sv(const Config& c, std::ostream& out) {
    const Point p = parse_point(c.point);
    auto need = [&](std::size_t k) {
        if (p.size() != k) throw UsageError(c.fn + " takes " + std::to_string(k) + " coordinate(s)");
    };
    double v = 0.0;
    json j{{"fn", c.fn}};
    if (c.fn == "L2") {
        need(1);
        v = sv_dilog(p[0]);
    } else if (c.fn == "L3") {
        need(1);
        v = sv_trilog(p[0]);
    } else if (c.fn == "L11") {
        need(2);
        v = sv_doublelog(p[0], p[1]);
    } else if (c.fn == "L11_dilogs") {
        need(2);
        v = sv_doublelog_dilogs(p[0], p[1]);
    } else if (c.fn == "L12") {
        need(2);
        v = sv_12(p[0], p[1]);
    } else if (c.fn == "L21") {
        need(2);
        v = sv_21(p[0], p[1]);
    } else if (c.fn == "matrix") {
        SVMatrix b;
        if (has_kind(c)) {
            const SmallKind k = parse_small_kind(c.kind);
            need(k == SmallKind::classical ? 1 : 2);
            b = sv_matrix(small_matrix(c, k, p), small_tau(c, k), p);
        } else {
            need(static_cast<std::size_t>(c.n));
            b = sv_matrix(c.n, p);
        }
        const auto labels = has_kind(c) ? plain_labels(static_cast<int>(b.B.rows())) : index_labels(c.n);
        v = (b.logB(b.logB.rows() - 1, 0) / cplx(0.0, -2.0)).real();
        j["logB"] = matrix_json(b.logB, labels);
        j["invariant_dev"] = b.invariant_dev;
    } else {
        throw UsageError("unknown --fn " + c.fn + " (L2, L3, L11, L11_dilogs, L12, L21, matrix)");
    }
    j["value"] = v;
    if (c.csv) {
        out << "fn,value\n" << c.fn << ',' << fmt(v) << '\n';
        return;
    }
    emit(out, c, j);
}

Point random_point(std::mt19937& g, int n) {
    std::uniform_real_distribution<double> rad(0.15, 0.7), ang(-3.0, 3.0);
    Point p(n);
    for (auto& v : p) v = std::polar(rad(g), ang(g));
    return p;
}

void cmd_verify(const Config& c, std::ostream& out) {
    const std::set<std::string> suites{"all", "sv", "flatness", "integrability", "monodromy"};
    if (!suites.count(c.suite)) throw UsageError("unknown --suite " + c.suite);
    const bool all = c.suite == "all";
    json reports = json::array();
    bool ok = true;
    auto add = [&](const std::string& id, double residual, double tol, int points) {
        const bool pass = residual < tol;
        ok = ok && pass;
        reports.push_back({{"id", id}, {"max_residual", residual}, {"tol", tol}, {"points", points}, {"pass", pass}});
    };
    if (all || c.suite == "sv") {
        for (const auto& r : identity_suite({c.grid, c.seed})) {
            const bool multi = r.id == "zagier" || r.id == "li11" || r.id == "li21" || r.id == "li12_li21";
            const double tol = c.tol > 0 ? c.tol : (multi ? 1e-10 : 1e-9);
            add(r.id, r.max_residual, tol, static_cast<int>(r.points.size()));
            reports.back()["description"] = r.description;
            reports.back()["residuals"] = r.residuals;
        }
    }
    std::mt19937 g(c.seed);
    const int pts = std::min(c.grid, 10);
    if (all || c.suite == "flatness") {
        const double tol = c.tol > 0 ? c.tol : 1e-6;
        for (int n : {2, 3}) {
            double worst = 0.0;
            for (int i = 0; i < pts; ++i) worst = std::max(worst, verify_flatness(n, random_point(g, n), 1e-5));
            add("flatness.n" + std::to_string(n), worst, tol, pts);
        }
        for (auto k : {SmallKind::li21, SmallKind::li12}) {
            double worst = 0.0;
            for (int i = 0; i < pts; ++i) worst = std::max(worst, verify_weight3_flatness(k, random_point(g, 2), 1e-5));
            add("flatness." + kind_name(k), worst, tol, pts);
        }
    }
    if (all || c.suite == "integrability") {
        const double tol = c.tol > 0 ? c.tol : 1e-9;
        for (int n : {1, 2, 3}) {
            double worst = 0.0;
            for (int i = 0; i < pts; ++i) {
                auto r = verify_integrability(connection(n), random_point(g, n));
                worst = std::max({worst, r.d_omega, r.wedge});
            }
            add("integrability.n" + std::to_string(n), worst, tol, pts);
        }
    }
    if (all || c.suite == "monodromy") {
        const double tol = c.tol > 0 ? c.tol : 1e-4;
        const std::vector<Point> base{{cplx(0.228, -0.343), cplx(0.455, -0.166)},
                                      {cplx(0.798, -0.131), cplx(0.671, -0.126), cplx(0.292, -0.184)}};
        for (const auto& x0 : base) {
            const int n = static_cast<int>(x0.size());
            double worst = 0.0;
            for (const auto& q : all_loops(n)) {
                auto t = transport(n, x0, q);
                worst = std::max(worst, t.M == generator(n, q) ? t.deviation : 1.0);
            }
            add("monodromy.n" + std::to_string(n), worst, tol, static_cast<int>(all_loops(n).size()));
        }
    }
    if (c.csv) {
        out << "id,max_residual,tol,pass\n";
        for (const auto& r : reports)
            out << r["id"].get<std::string>() << ',' << fmt(r["max_residual"].get<double>()) << ','
                << fmt(r["tol"].get<double>()) << ',' << (r["pass"].get<bool>() ? "true" : "false") << '\n';
    } else {
        emit(out, c, reports);
    }
    if (!ok) throw VerifyFailed{};
}

void cmd_census(const Config& c, std::ostream& out) {
    const MultiIndex m = parse_ints(c.m);
    const auto e = enumerate_census(m);
    json j{{"c", e.c}, {"d", d_vector(m)}};
    if (c.closed) {
        if (m.size() != 2) throw UsageError("--closed needs depth two");
        j["closed"] = closed_form_double(m[0], m[1]).c;
    }
    if (c.csv) {
        out << "k,c,d\n";
        const auto d = d_vector(m);
        for (std::size_t k = 0; k < e.c.size(); ++k) out << k << ',' << e.c[k] << ',' << d[k] << '\n';
        return;
    }
    emit(out, c, j);
}

}  // namespace

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return re;
        }
        const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse complex number '" + s + "' (expected re,im)");
    }
}

Point parse_point(const std::vector<std::string>& tokens) {
    Point p;
    for (const auto& t : tokens) p.push_back(parse_complex(t));
    if (p.empty()) throw UsageError("--point is required");
    return p;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("cannot parse integer list '" + s + "'");
        }
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variations of mixed Hodge-Tate structure for multiple polylogarithms", "mhs"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", "JSON output (default)");
        s->add_flag("--csv", c.csv, "CSV output");
        s->add_flag("--pretty", c.pretty, "indented JSON");
    };
    auto point = [&](CLI::App* s) {
        s->add_option("--point", c.point, "coordinates as re,im")->expected(1, -1)->allow_extra_args();
    };
    auto* eval = app.add_subcommand("eval", "Li_m(x) or the multiple logarithm");
    eval->add_option("--li,--m", c.m, "multi-index m_1,...,m_n");
    eval->add_flag("--series", c.series, "nested sum instead of the iterated integral");
    point(eval);
    auto* matrix = app.add_subcommand("matrix", "period matrix");
    auto* omega = app.add_subcommand("omega", "connection forms");
    auto* mono = app.add_subcommand("monodromy", "generators and transport");
    auto* limit = app.add_subcommand("limit", "limit structures");
    auto* sv = app.add_subcommand("sv", "single-valued functions");
    auto* verify = app.add_subcommand("verify", "identity and structure checks");
    auto* census = app.add_subcommand("census", "graded-quotient multiplicities");
    for (auto* s : {matrix, omega, mono, limit, sv}) {
        s->add_option("--n", c.n, "depth")->check(CLI::Range(1, 5));
        s->add_option("--kind", c.kind, "2,1, 1,2 or classical");
    }
    for (auto* s : {matrix, mono, limit, sv}) point(s);
    mono->add_option("--loop", c.loop, "i,j with j = 0 for the axis x_i = 0");
    limit->add_option("--case", c.limit_id, "tabulated case id");
    limit->add_option("--divisor", c.divisor, "divisor as a loop label i,j");
    limit->add_option("--tangent", c.tangent, "tangent coordinate");
    limit->add_option("--t", c.t, "smallest sample parameter")->check(CLI::PositiveNumber);
    sv->add_option("--fn", c.fn, "L2, L3, L11, L11_dilogs, L12, L21 or matrix");
    verify->add_option("--suite", c.suite, "all, sv, flatness, integrability or monodromy");
    verify->add_option("--grid", c.grid, "grid points")->check(CLI::PositiveNumber);
    verify->add_option("--seed", c.seed, "grid seed");
    census->add_option("--m", c.m, "multi-index")->required();
    census->add_flag("--closed", c.closed, "add the depth-two closed form");
    for (auto* s : {mono, limit, verify}) s->add_option("--tol", c.tol, "tolerance")->check(CLI::PositiveNumber);
    for (auto* s : {eval, matrix, omega, mono, limit, sv, verify, census}) common(s);

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }
    try {
        if (*eval) cmd_eval(c, out);
        if (*matrix) cmd_matrix(c, out);
        if (*omega) cmd_omega(c, out);
        if (*mono) cmd_monodromy(c, out);
        if (*limit) cmd_limit(c, out);
        if (*sv) cmd_sv(c, out);
        if (*verify) cmd_verify(c, out);
        if (*census) cmd_census(c, out);
    } catch (const VerifyFailed&) {
        return kVerifyFailed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const GeometryError& e) {
        err << "geometry error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}

}  // namespace mhs
