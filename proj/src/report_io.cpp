#include "tcn/report_io.hpp"

#include <fstream>

#include "tcn/algebra_io.hpp"
#include "tcn/error.hpp"

namespace tcn {

using nlohmann::json;

json report_to_json(const BoundReport& r)
{
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json cert = nullptr;
    if (r.zcl.certificate) {
        json factors = json::array();
        for (const auto& f : r.zcl.certificate->factors) factors.push_back(element_to_json(f));
        cert = {{"factors", factors}, {"product", element_to_json(r.zcl.certificate->product)}};
    }
    json out = json::object();
    out["space"] = r.space;
    out["n"] = r.n;
    out["field"] = r.field.to_string();
    out["lower"] = r.lower;
    out["lower_source"] = to_string(r.lower_source);
    out["zcl"] = r.zcl.m;
    out["upper"] = r.upper;
    out["upper_cat"] = r.upper_cat;
    out["upper_growth"] = opt(r.upper_growth);
    out["exact"] = opt(r.exact);
    out["certificate"] = cert;
    return out;
}

json plan_to_json(const Plan& p)
{
    json paths = json::array();
    for (const auto& path : p.paths) paths.push_back(path.samples);
    json out = json::object();
    out["k"] = p.k;
    out["n"] = p.n;
    out["domain"] = p.domain;
    out["samples"] = p.samples;
    out["paths"] = paths;
    return out;
}

std::vector<SpherePoint> read_config(const json& doc)
{
    if (!doc.is_array() || doc.empty()) throw InputError("configuration must be a nonempty array of points");
    std::vector<SpherePoint> out;
    for (const auto& p : doc) {
        if (!p.is_array()) throw InputError("each configuration point must be an array of numbers");
        std::vector<double> coords;
        for (const auto& c : p) {
            if (!c.is_number()) throw InputError("configuration coordinates must be numbers");
            coords.push_back(c.get<double>());
        }
        out.push_back(SpherePoint::normalized(std::move(coords)));
    }
    return out;
}

std::vector<SpherePoint> read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return read_config(json::parse(in));
    } catch (const json::exception& e) {
        throw InputError("'" + path.string() + "': " + e.what());
    }
}

}  // namespace tcn
