#include "tcn/algebra_io.hpp"

#include <fstream>
#include <map>

#include "tcn/error.hpp"

namespace tcn {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const char* where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(std::string("missing key '") + key + "' in " + where);
    return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const char* where)
{
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw InputError(std::string("'") + key + "' in " + where + " must be a string");
    return v.get<std::string>();
}

std::optional<int> optional_int(const json& meta, const char* key)
{
    if (!meta.contains(key) || meta.at(key).is_null()) return std::nullopt;
    if (!meta.at(key).is_number_integer())
        throw InputError(std::string("meta.") + key + " must be an integer or null");
    return meta.at(key).get<int>();
}

Scalar read_coeff(const Field& field, const json& v)
{
    if (v.is_number_integer()) return Scalar(field, mpz_class(std::to_string(v.get<long long>())));
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    throw InputError("coefficient must be a string \"int\" or \"int/int\"");
}

}  // namespace

LoadedSpace read_space_json(const json& doc, const LoadOptions& options)
{
    if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
    const std::string name = require_string(doc, "name", "algebra document");
    const Field field = Field::parse(require_string(doc, "field", "algebra document"));

    const json& basis_json = require(doc, "basis", "algebra document");
    if (!basis_json.is_array() || basis_json.empty())
        throw InputError("'basis' must be a nonempty array");
    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    for (const auto& b : basis_json) {
        BasisElement e{require_string(b, "name", "basis entry"), 0};
        const json& d = require(b, "degree", "basis entry");
        if (!d.is_number_integer()) throw InputError("degree of '" + e.name + "' must be an integer");
        e.degree = d.get<int>();
        if (e.degree < 0) throw InputError("degree of '" + e.name + "' is negative");
        if (!index.emplace(e.name, basis.size()).second)
            throw InputError("duplicate basis name '" + e.name + "'");
        basis.push_back(e);
    }
    auto lookup = [&](const std::string& n) {
        auto it = index.find(n);
        if (it == index.end()) throw InputError("unknown basis name '" + n + "'");
        return it->second;
    };

    const std::size_t unit = lookup(require_string(doc, "unit", "algebra document"));
    AlgebraBuilder builder(field, basis, unit);
    if (doc.contains("products")) {
        const json& products = doc.at("products");
        if (!products.is_array()) throw InputError("'products' must be an array");
        std::map<std::pair<std::size_t, std::size_t>, bool> seen;
        for (const auto& p : products) {
            const std::size_t l = lookup(require_string(p, "left", "product entry"));
            const std::size_t r = lookup(require_string(p, "right", "product entry"));
            if (seen[{l, r}])
                throw InputError("product (" + basis[l].name + ", " + basis[r].name + ") given twice");
            seen[{l, r}] = true;
            const json& result = require(p, "result", "product entry");
            if (!result.is_array()) throw InputError("product result must be an array");
            std::vector<Term> terms;
            for (const auto& t : result)
                terms.push_back({lookup(require_string(t, "basis", "result term")),
                                 read_coeff(field, require(t, "coeff", "result term"))});
            builder.set_product(l, r, SparseVector::from_terms(field, std::move(terms)));
        }
    }

    LoadedSpace out;
    out.space.name = name;
    out.space.algebra = builder.build();

    const json meta = doc.contains("meta") ? doc.at("meta") : json::object();
    if (!meta.is_object()) throw InputError("'meta' must be an object");
    const auto dim = optional_int(meta, "dim");
    out.space.formal_dim = dim.value_or(out.space.algebra->top_degree());
    out.space.connectivity = optional_int(meta, "conn").value_or(0);
    out.space.cat_upper = optional_int(meta, "cat_upper");
    if (!out.space.cat_upper && dim) out.space.cat_upper = *dim;
    out.space.tc2_known = optional_int(meta, "tc2");
    check_space(out.space);

    const bool assoc = !(options.skip_associativity &&
                         out.space.algebra->dim() > kAssociativityCheckLimit);
    out.violations = validate(*out.space.algebra, assoc);
    return out;
}

LoadedSpace read_space_file(const std::filesystem::path& path, const LoadOptions& options)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    try {
        return read_space_json(doc, options);
    } catch (const json::exception& e) {
        throw InputError("'" + path.string() + "': " + e.what());
    }
}

SpaceDescriptor load_space(const std::filesystem::path& path, const LoadOptions& options)
{
    LoadedSpace loaded = read_space_file(path, options);
    if (!loaded.violations.empty()) {
        std::string msg = "'" + path.string() + "' violates the graded-algebra laws:";
        for (const auto& v : loaded.violations) msg += "\n  " + to_string(v.kind) + ": " + v.message;
        throw InputError(msg);
    }
    return loaded.space;
}

json space_to_json(const SpaceDescriptor& space)
{
    const GradedAlgebra& alg = *space.algebra;
    json basis = json::array();
    for (const auto& b : alg.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
    json products = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = i; j < alg.dim(); ++j) {
            const SparseVector v = alg.multiply_basis(i, j);
            if (v.is_zero()) continue;
            json result = json::array();
            for (const auto& t : v.terms())
                result.push_back({{"basis", alg.basis_name(t.index)}, {"coeff", t.coeff.to_string()}});
            products.push_back({{"left", alg.basis_name(i)}, {"right", alg.basis_name(j)}, {"result", result}});
        }
    }
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    return {{"name", space.name},
            {"field", alg.field().to_string()},
            {"basis", basis},
            {"unit", alg.basis_name(alg.unit_index())},
            {"products", products},
            {"meta",
             {{"dim", space.formal_dim},
              {"conn", space.connectivity},
              {"cat_upper", opt(space.cat_upper)},
              {"tc2", opt(space.tc2_known)}}}};
}

json element_to_json(const Element& e)
{
    json out = json::array();
    for (const auto& t : e.coeffs().terms())
        out.push_back({{"basis", e.algebra()->basis_name(t.index)}, {"coeff", t.coeff.to_string()}});
    return out;
}

}  // namespace tcn
