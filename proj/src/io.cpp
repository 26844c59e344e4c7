#include "filling/io.hpp"

#include <fstream>
#include <sstream>

namespace filling::io {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object())
        throw ParseError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + "." + key + ": missing");
    return *it;
}

int int_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_number_integer())
        throw ParseError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

std::string string_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_string())
        throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

bool bool_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_boolean())
        throw ParseError(where + "." + key + ": expected a boolean");
    return v.get<bool>();
}

const Json& array_field(const Json& obj, const char* key, const std::string& where)
{
    const Json& v = field(obj, key, where);
    if (!v.is_array())
        throw ParseError(where + "." + key + ": expected an array");
    return v;
}

Rational rational_field(const Json& obj, const char* key, const std::string& where)
{
    const std::string text = string_field(obj, key, where);
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + "." + key + ": " + e.what());
    }
}

std::string at(const std::string& where, std::size_t index)
{
    return where + "[" + std::to_string(index) + "]";
}

} // namespace

Json algebra_to_json(const GradedLieAlgebra& algebra)
{
    Json brackets = Json::array();
    for (const auto& [ij, row] : algebra.brackets()) {
        Json terms = Json::array();
        for (const auto& [k, c] : row)
            terms.push_back({{"k", k}, {"coeff", to_string(c)}});
        brackets.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", std::move(terms)}});
    }
    return {
        {"name", algebra.name()},
        {"dimension", algebra.dimension()},
        {"labels", algebra.labels()},
        {"layers", algebra.layers()},
        {"brackets", std::move(brackets)},
    };
}

AlgebraPtr algebra_from_json(const Json& json)
{
    const std::string root = "algebra";
    const std::string name = string_field(json, "name", root);
    const int dimension = int_field(json, "dimension", root);

    std::vector<std::string> labels;
    const Json& label_json = array_field(json, "labels", root);
    for (std::size_t p = 0; p < label_json.size(); ++p) {
        if (!label_json[p].is_string())
            throw ParseError(at(root + ".labels", p) + ": expected a string");
        labels.push_back(label_json[p].get<std::string>());
    }
    std::vector<int> layers;
    const Json& layer_json = array_field(json, "layers", root);
    for (std::size_t p = 0; p < layer_json.size(); ++p) {
        if (!layer_json[p].is_number_integer())
            throw ParseError(at(root + ".layers", p) + ": expected an integer");
        layers.push_back(layer_json[p].get<int>());
    }
    if (dimension < 1)
        throw ParseError(root + ".dimension: must be positive");
    if (static_cast<int>(labels.size()) != dimension)
        throw ParseError(root + ".labels: expected " + std::to_string(dimension) + " entries");
    if (static_cast<int>(layers.size()) != dimension)
        throw ParseError(root + ".layers: expected " + std::to_string(dimension) + " entries");

    std::vector<BracketTerm> terms;
    const Json& bracket_json = array_field(json, "brackets", root);
    for (std::size_t b = 0; b < bracket_json.size(); ++b) {
        const std::string where = at(root + ".brackets", b);
        const int i = int_field(bracket_json[b], "i", where);
        const int j = int_field(bracket_json[b], "j", where);
        if (i >= j)
            throw ParseError(where + ": requires i < j");
        const Json& term_json = array_field(bracket_json[b], "terms", where);
        for (std::size_t t = 0; t < term_json.size(); ++t) {
            const std::string twhere = at(where + ".terms", t);
            terms.push_back({i, j, int_field(term_json[t], "k", twhere), rational_field(term_json[t], "coeff", twhere)});
        }
    }
    return make_algebra(name, std::move(labels), std::move(layers), terms);
}

Json form_to_json(const InvariantForm& form)
{
    Json terms = Json::array();
    for (const auto& [mono, c] : form.terms())
        terms.push_back({{"indices", mono.indices()}, {"coeff", to_string(c)}});
    return {{"degree", form.degree()}, {"terms", std::move(terms)}};
}

InvariantForm form_from_json(const Json& json, const AlgebraPtr& algebra)
{
    const std::string root = "form";
    const int degree = int_field(json, "degree", root);
    if (degree < 0)
        throw ParseError(root + ".degree: must be nonnegative");
    InvariantForm form(algebra, degree);
    const Json& term_json = array_field(json, "terms", root);
    for (std::size_t t = 0; t < term_json.size(); ++t) {
        const std::string where = at(root + ".terms", t);
        const Json& idx_json = array_field(term_json[t], "indices", where);
        std::vector<int> indices;
        for (std::size_t p = 0; p < idx_json.size(); ++p) {
            if (!idx_json[p].is_number_integer())
                throw ParseError(at(where + ".indices", p) + ": expected an integer");
            const int x = idx_json[p].get<int>();
            if (x < 0 || x >= algebra->dimension())
                throw ParseError(at(where + ".indices", p) + ": index out of range");
            indices.push_back(x);
        }
        if (static_cast<int>(indices.size()) != degree)
            throw ParseError(where + ".indices: expected " + std::to_string(degree) + " entries");
        MultiIndex mono;
        try {
            mono = MultiIndex(std::move(indices));
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ".indices: must be strictly increasing");
        }
        form.add(mono, rational_field(term_json[t], "coeff", where));
    }
    return form;
}

Json certificate_to_json(const Certificate& cert)
{
    return {
        {"algebra", cert.algebra_name},
        {"n", cert.n},
        {"degree", cert.degree},
        {"weight_s", cert.weight_s},
        {"boundary_r", cert.boundary_exponent_r},
        {"exponent", to_string(cert.exponent)},
        {"checks",
         {{"closed", cert.checks.closed},
          {"homogeneous", cert.checks.homogeneous},
          {"restriction_nonvanishing", cert.checks.restriction_nonvanishing}}},
        {"provenance_note", cert.provenance_note},
    };
}

Certificate certificate_from_json(const Json& json)
{
    const std::string root = "certificate";
    Certificate cert;
    cert.algebra_name = string_field(json, "algebra", root);
    cert.n = int_field(json, "n", root);
    cert.degree = int_field(json, "degree", root);
    cert.weight_s = int_field(json, "weight_s", root);
    cert.boundary_exponent_r = int_field(json, "boundary_r", root);
    cert.exponent = rational_field(json, "exponent", root);
    const Json& checks = field(json, "checks", root);
    cert.checks.closed = bool_field(checks, "closed", root + ".checks");
    cert.checks.homogeneous = bool_field(checks, "homogeneous", root + ".checks");
    cert.checks.restriction_nonvanishing = bool_field(checks, "restriction_nonvanishing", root + ".checks");
    cert.provenance_note = string_field(json, "provenance_note", root);
    return cert;
}

Json kernel_to_json(const KernelBasis& basis, bool include_forms)
{
    Json out = {
        {"algebra", basis.algebra_name},
        {"degree", basis.degree},
        {"weight", basis.weight},
        {"space_size", basis.space_size},
        {"dimension", basis.dimension()},
    };
    if (include_forms) {
        Json forms = Json::array();
        for (const auto& f : basis.basis)
            forms.push_back(form_to_json(f));
        out["basis"] = std::move(forms);
    }
    return out;
}

std::string dump(const Json& json)
{
    return json.dump(2) + "\n";
}

AlgebraPtr load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    Json json;
    try {
        json = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return algebra_from_json(json);
}

std::string format_form(const InvariantForm& form)
{
    if (form.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : form.terms()) {
        const bool negative = c < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const Rational magnitude = abs(c);
        if (magnitude != 1)
            out << to_string(magnitude) << " ";
        for (std::size_t p = 0; p < mono.size(); ++p) {
            if (p > 0)
                out << "^";
            out << form.algebra()->labels()[static_cast<std::size_t>(mono[p])] << "*";
        }
    }
    return out.str();
}

} // namespace filling::io
