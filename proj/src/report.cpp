#include "hardy/report.hpp"
#include "hardy/series.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hardy::report {

using nlohmann::json;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

TailInfo estimate_tail(const std::vector<Real>& terms) {
    TailInfo t;
    try {
        auto est = series::fit_tail(terms, 1);
        t.available = true;
        t.fitted_exponent = est.fitted_exponent;
        t.tail_estimate = est.tail_estimate;
        t.tail_bound = est.tail_bound;
        t.window_lo = est.window_lo;
        t.window_hi = est.window_hi;
        t.diverges = est.diverges;
    } catch (const series::FitRejected& e) {
        t.note = e.what();
    } catch (const std::invalid_argument& e) {
        t.note = e.what();
    }
    return t;
}

std::string dec_string_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string to_dec_string(const Real& v) {
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(Real::default_precision()) + 3);
    os << v;
    return os.str();
}

std::vector<CaseReport> run(const RunConfig& config) {
    if (config.order < 8) throw std::invalid_argument("order must be >= 8");
    if (config.precision < 53) throw std::invalid_argument("precision must be >= 53");
    bool with_oracle = config.mode == "oracle-only" || config.mode == "full";
    bool with_series = config.mode == "series-only" || config.mode == "full";
    if (!with_oracle && !with_series)
        throw std::invalid_argument("mode must be series-only, oracle-only or full");
    if (with_oracle && config.samples < 100)
        throw std::invalid_argument("samples must be >= 100 when the oracle is enabled");
    if (config.cases.empty()) throw std::invalid_argument("no cases selected");

    set_precision_bits(config.precision);

    std::vector<CaseReport> reports;
    for (const auto& id : config.cases) {
        auto c = catalog::parse_case(id);
        CaseReport r;
        r.id = c.id;
        r.diagnostic = c.diagnostic;

        if (with_series) {
            double t0 = now_ms();
            auto ident = catalog::identity(c, config.order, config.square_m);
            r.statement = ident.statement;
            r.lhs_partial = ident.partial;
            r.rhs = ident.rhs;
            r.abs_err = boost::multiprecision::abs(ident.partial - ident.rhs);
            r.rel_err = ident.rhs != 0 ? Real(r.abs_err / boost::multiprecision::abs(ident.rhs))
                                       : Real(0);
            r.n = ident.n;
            r.terms = ident.terms;
            r.tail = estimate_tail(ident.terms);
            r.series_ms = now_ms() - t0;

            if (c.diagnostic) {
                r.verdict = (r.tail.available && r.tail.diverges) ? "diverges" : "fail";
            } else if (r.tail.available && r.tail.diverges) {
                r.verdict = "diverges";
            } else {
                Real bound = r.tail.available ? r.tail.tail_bound : Real(0);
                bound += Real(config.tolerance) * boost::multiprecision::abs(r.rhs);
                r.verdict = r.abs_err <= bound ? "pass" : "fail";
            }
        } else {
            r.lhs_partial = 0;
            r.rhs = 0;
            r.abs_err = 0;
            r.rel_err = 0;
            r.verdict = "skipped";
        }

        if (with_oracle && !c.diagnostic) {
            double t0 = now_ms();
            OracleInfo o;
            auto geo = catalog::geometry(c);
            o.moments = oracle::estimate_exit_moments(geo, config.samples, config.eps,
                                                      config.seed);
            o.g_base = catalog::g_value(c, Real(geo.bx0), Real(geo.by0));
            o.base_sq = geo.bx0 * geo.bx0 + geo.by0 * geo.by0;
            double g = static_cast<double>(o.g_base);
            double slack_g = 3 * o.moments.se_time + 20 * config.eps;
            o.g_ok = std::fabs(o.moments.two_mean_time - g) <= slack_g;
            double slack_d = 3 * (o.moments.se_sq_exit + o.moments.se_time) + 20 * config.eps;
            o.dynkin_ok = std::fabs(o.moments.mean_sq_exit -
                                    (o.base_sq + o.moments.two_mean_time)) <= slack_d;
            r.oracle = o;
            r.oracle_ms = now_ms() - t0;
            if (!with_series) {
                r.verdict = (o.g_ok && o.dynkin_ok) ? "pass" : "fail";
            } else if (!o.g_ok || !o.dynkin_ok) {
                r.verdict = "fail";
            }
        }

        reports.push_back(std::move(r));
    }
    return reports;
}

int exit_status(const std::vector<CaseReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == "fail") return 1;
    return 0;
}

void write_json(const RunConfig& config, const std::vector<CaseReport>& reports,
                std::ostream& os) {
    json root;
    root["schema"] = 1;
    root["config"] = {
        {"order", config.order},
        {"precision", config.precision},
        {"samples", config.samples},
        {"eps", dec_string_double(config.eps)},
        {"seed", config.seed},
        {"mode", config.mode},
        {"tolerance", dec_string_double(config.tolerance)},
    };
    json arr = json::array();
    for (const auto& r : reports) {
        json jr = {
            {"case", r.id},
            {"statement", r.statement},
            {"diagnostic", r.diagnostic},
            {"lhs_partial", to_dec_string(r.lhs_partial)},
            {"rhs", to_dec_string(r.rhs)},
            {"abs_err", to_dec_string(r.abs_err)},
            {"rel_err", to_dec_string(r.rel_err)},
            {"verdict", r.verdict},
            {"series_ms", r.series_ms},
            {"oracle_ms", r.oracle_ms},
        };
        if (r.tail.available) {
            jr["tail"] = {
                {"fitted_exponent", to_dec_string(r.tail.fitted_exponent)},
                {"tail_estimate", to_dec_string(r.tail.tail_estimate)},
                {"tail_bound", to_dec_string(r.tail.tail_bound)},
                {"window_lo", r.tail.window_lo},
                {"window_hi", r.tail.window_hi},
                {"diverges", r.tail.diverges},
            };
        } else {
            jr["tail"] = {{"note", r.tail.note}};
        }
        if (r.oracle) {
            const auto& o = *r.oracle;
            jr["oracle"] = {
                {"two_mean_time", dec_string_double(o.moments.two_mean_time)},
                {"se_time", dec_string_double(o.moments.se_time)},
                {"mean_sq_exit", dec_string_double(o.moments.mean_sq_exit)},
                {"se_sq_exit", dec_string_double(o.moments.se_sq_exit)},
                {"samples", o.moments.samples},
                {"eps", dec_string_double(o.moments.eps)},
                {"capped", o.moments.capped},
                {"g_base", to_dec_string(o.g_base)},
                {"base_sq", dec_string_double(o.base_sq)},
                {"g_ok", o.g_ok},
                {"dynkin_ok", o.dynkin_ok},
            };
        }
        arr.push_back(std::move(jr));
    }
    root["reports"] = std::move(arr);
    os << root.dump(2) << "\n";
}

void write_csv(const std::vector<CaseReport>& reports, std::ostream& os) {
    os << "case,n,term,partial\n";
    for (const auto& r : reports) {
        Real partial = 0;
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            partial += r.terms[i];
            os << r.id << "," << r.n[i] << "," << to_dec_string(r.terms[i]) << ","
               << to_dec_string(partial) << "\n";
        }
    }
}

} // namespace hardy::report
