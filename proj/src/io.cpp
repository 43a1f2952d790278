#include "certitrack/io.hpp"

#include <fstream>

#include "certitrack/errors.hpp"

namespace certitrack {

using nlohmann::json;

namespace {

GaussianRational gaussian_from_json(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_string() ||
        !j["im"].is_string())
        throw ParseError("expected {\"re\": \"p/q\", \"im\": \"p/q\"}");
    return {parse_rational(j["re"].get<std::string>()), parse_rational(j["im"].get<std::string>())};
}

json gaussian_to_json(const GaussianRational& g) {
    return json{{"re", format_rational(g.re)}, {"im", format_rational(g.im)}};
}

unsigned get_uint(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("missing or invalid \"") + key + "\"");
    return j[key].get<unsigned>();
}

} // namespace

PolySystem system_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("system file must be a JSON object");
    unsigned n = get_uint(j, "n");
    unsigned vars = get_uint(j, "vars");
    if (vars != n + 1) throw ParseError("\"vars\" must equal n+1");
    if (!j.contains("polys") || !j["polys"].is_array() || j["polys"].size() != n)
        throw ParseError("\"polys\" must be an array of n polynomials");

    std::vector<HomogeneousPolynomial> polys;
    polys.reserve(n);
    for (const auto& jp : j["polys"]) {
        unsigned degree = get_uint(jp, "degree");
        if (!jp.contains("terms") || !jp["terms"].is_array())
            throw ParseError("polynomial needs a \"terms\" array");
        std::vector<MonomialTerm> terms;
        for (const auto& jt : jp["terms"]) {
            if (!jt.contains("exp") || !jt["exp"].is_array() || jt["exp"].size() != vars)
                throw ParseError("term \"exp\" must list one exponent per variable");
            MonomialTerm t;
            for (const auto& e : jt["exp"]) {
                if (!e.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
                t.exponents.push_back(e.get<unsigned>());
            }
            t.coeff = gaussian_from_json(jt);
            terms.push_back(std::move(t));
        }
        try {
            polys.emplace_back(degree, vars, std::move(terms));
        } catch (const DimensionMismatchError& e) {
            throw ParseError(e.what()); // non-homogeneous term, zero degree, ...
        }
    }
    try {
        return PolySystem(std::move(polys));
    } catch (const DimensionMismatchError& e) {
        throw ParseError(e.what());
    }
}

json system_to_json(const PolySystem& sys) {
    json polys = json::array();
    for (const auto& p : sys.polys()) {
        json terms = json::array();
        for (const auto& t : p.terms()) {
            json jt = gaussian_to_json(t.coeff);
            jt["exp"] = t.exponents;
            terms.push_back(std::move(jt));
        }
        polys.push_back(json{{"degree", p.degree()}, {"terms", std::move(terms)}});
    }
    return json{{"n", sys.n()}, {"vars", sys.nvars()}, {"polys", std::move(polys)}};
}

QVector vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("z") || !j["z"].is_array() || j["z"].empty())
        throw ParseError("point file must be {\"z\": [gaussian rationals]}");
    QVector v(j["z"].size());
    std::size_t i = 0;
    for (const auto& e : j["z"]) v[i++] = gaussian_from_json(e);
    return v;
}

json vector_to_json(const QVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(gaussian_to_json(v[i]));
    return json{{"z", std::move(arr)}};
}

json result_to_json(const TrackResult& res) {
    json z_star = json::array();
    for (std::size_t i = 0; i < res.z_star.size(); ++i) z_star.push_back(gaussian_to_json(res.z_star[i]));

    json trace = json::array();
    for (const auto& rec : res.trace) {
        json jr{
            {"i", rec.i},
            {"s", format_rational(rec.s)},
            {"t", format_rational(rec.t)},
            {"a", format_rational(rec.a)},
            {"b", format_rational(rec.b)},
            {"W", format_rational(rec.W)},
            {"L", format_rational(rec.L)},
            {"U", format_rational(rec.U)},
            {"eps", format_rational(rec.eps)},
            {"z_bits", rec.z_bits},
            {"lu_depth", rec.lu_depth},
        };
        if (rec.z) {
            json zj = json::array();
            for (std::size_t i = 0; i < rec.z->size(); ++i) zj.push_back(gaussian_to_json((*rec.z)[i]));
            jr["z"] = std::move(zj);
        }
        trace.push_back(std::move(jr));
    }

    json out{
        {"status", to_string(res.status)},
        {"steps", res.steps},
        {"z_star", std::move(z_star)},
        {"trace", std::move(trace)},
    };
    if (!res.message.empty()) out["message"] = res.message;
    return out;
}

json bounds_to_json(const std::vector<BoundsRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{
            {"m", format_rational(r.m)},
            {"c0", r.c0},
            {"lb", r.lb},
            {"lb_text", r.lb_text},
            {"ub", r.ub},
            {"observed_steps", r.observed_steps},
            {"ratio_ub_over_steps", r.ratio_ub_over_steps},
        });
    }
    return json{{"rows", std::move(arr)}};
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in " + path);
    return j;
}

} // namespace

PolySystem load_system_file(const std::string& path) {
    return system_from_json(parse_file(path));
}

QVector load_vector_file(const std::string& path) {
    return vector_from_json(parse_file(path));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

} // namespace certitrack
