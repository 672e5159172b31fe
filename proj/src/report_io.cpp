#include "hmc/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hmc::report_io {

std::string to_bfile(const CountReport& rep) {
    std::ostringstream out;
    for (std::size_t n : rep.support())
        out << n << " " << rep.coeff[n].get_str() << "\n";
    return out.str();
}

std::string to_csv(const CountReport& rep) {
    std::ostringstream out;
    out << "n,a_n\n";
    for (std::size_t n : rep.support())
        out << n << "," << rep.coeff[n].get_str() << "\n";
    return out.str();
}

std::string to_plain(const CountReport& rep) {
    std::ostringstream out;
    out << "# family " << rep.family.str() << "  kind " << to_string(rep.kind)
        << "  method " << to_string(rep.method) << "  max_index " << rep.max_index()
        << "\n";
    for (std::size_t n : rep.support())
        out << n << " " << rep.coeff[n].get_str() << "\n";
    return out.str();
}

namespace {

nlohmann::json factor_to_json(int v) {
    if (v == FamilySpec::kInf) return "inf";
    return v;
}

int factor_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf")
            throw std::domain_error("json family factor must be a number or \"inf\"");
        return FamilySpec::kInf;
    }
    return j.get<int>();
}

} // namespace

std::string to_json(const CountReport& rep) {
    nlohmann::json j;
    j["family"]["p"] = factor_to_json(rep.family.p);
    j["family"]["q"] = factor_to_json(rep.family.q);
    j["kind"] = to_string(rep.kind);
    j["method"] = to_string(rep.method);
    j["max_index"] = rep.max_index();
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t n : rep.support())
        coeffs.push_back({n, rep.coeff[n].get_str()});
    j["coefficients"] = coeffs;
    return j.dump(2) + "\n";
}

CountReport from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CountReport rep;
    rep.family = FamilySpec::make(factor_from_json(j.at("family").at("p")),
                                  factor_from_json(j.at("family").at("q")));
    rep.kind = kind_from_string(j.at("kind").get<std::string>());
    rep.method = method_from_string(j.at("method").get<std::string>());
    rep.coeff.assign(j.at("max_index").get<std::size_t>() + 1, Int(0));
    for (const auto& entry : j.at("coefficients")) {
        std::size_t n = entry.at(0).get<std::size_t>();
        rep.coeff.at(n) = Int(entry.at(1).get<std::string>());
    }
    return rep;
}

Kind kind_from_string(const std::string& s) {
    if (s == "rooted") return Kind::rooted;
    if (s == "conjugacy") return Kind::conjugacy;
    throw std::domain_error("unknown kind: " + s);
}

Method method_from_string(const std::string& s) {
    if (s == "hypergeometric") return Method::hypergeometric;
    if (s == "riccati") return Method::riccati;
    if (s == "cycle_index") return Method::cycle_index;
    if (s == "oracle") return Method::oracle;
    if (s == "closed_form") return Method::closed_form;
    throw std::domain_error("unknown method: " + s);
}

} // namespace hmc::report_io
