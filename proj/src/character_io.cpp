#include "weylpark/character_io.hpp"

#include <map>
#include <sstream>

namespace weylpark::io {

json integer_json(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) return json(z.get_si());
    return json(z.get_str());
}

json weight_json(const combinatorics::WeightVector& w) { return json(w.coords()); }

namespace {

std::string weight_cell(const combinatorics::WeightVector& w) {
    std::string s = "\"";
    for (int i = 0; i < w.rank(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "\"";
}

mpz_class integer_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<long long>()));
}

}  // namespace

json character_json(const degeneration::BigradedCharacter& ch) {
    json out = json::array();
    for (const auto& [k, d] : ch.entries())
        out.push_back({{"weight", weight_json(std::get<0>(k))}, {"x", std::get<1>(k)}, {"y", std::get<2>(k)}, {"dim", d}});
    return out;
}

std::string character_csv(const degeneration::BigradedCharacter& ch) {
    std::ostringstream os;
    os << "weight,x,y,dim\n";
    for (const auto& [k, d] : ch.entries())
        os << weight_cell(std::get<0>(k)) << ',' << std::get<1>(k) << ',' << std::get<2>(k) << ',' << d << '\n';
    return os.str();
}

std::string character_pretty(const degeneration::BigradedCharacter& ch) {
    std::ostringstream os;
    // group by (x, y)
    std::map<std::pair<int, int>, std::vector<std::pair<combinatorics::WeightVector, long long>>> groups;
    for (const auto& [k, d] : ch.entries()) groups[{std::get<1>(k), std::get<2>(k)}].push_back({std::get<0>(k), d});
    for (const auto& [xy, items] : groups) {
        os << "x^" << xy.first << " y^" << xy.second << ":";
        for (const auto& [w, d] : items) os << "  " << (d == 1 ? "" : std::to_string(d) + "*") << "e" << w.to_string();
        os << '\n';
    }
    os << "total dimension " << ch.total() << '\n';
    return os.str();
}

json series_json(const fock::Series& s) {
    json out = json::array();
    for (const auto& [k, c] : s)
        out.push_back({{"x", std::get<1>(k)}, {"y", std::get<2>(k)}, {"weight", weight_json(std::get<0>(k))}, {"coeff", integer_json(c)}});
    return out;
}

std::string series_csv(const fock::Series& s) {
    std::ostringstream os;
    os << "x,y,weight,coeff\n";
    for (const auto& [k, c] : s)
        os << std::get<1>(k) << ',' << std::get<2>(k) << ',' << weight_cell(std::get<0>(k)) << ',' << c << '\n';
    return os.str();
}

std::string series_pretty(const fock::Series& s) {
    std::map<int, std::vector<std::string>> by_x;
    for (const auto& [k, c] : s) {
        std::ostringstream t;
        t << (c == 1 ? std::string() : c.get_str() + "*") << "e" << std::get<0>(k).to_string();
        if (std::get<2>(k) > 0) t << "*y" << (std::get<2>(k) > 1 ? "^" + std::to_string(std::get<2>(k)) : "");
        by_x[std::get<1>(k)].push_back(t.str());
    }
    std::ostringstream os;
    for (const auto& [x, items] : by_x) {
        os << "x^" << x << ":";
        for (const auto& t : items) os << "  " << t;
        os << '\n';
    }
    return os.str();
}

json schur_json(const symfunc::SchurExpansion& e) {
    json out = json::array();
    for (const auto& [lambda, c] : e.terms()) {
        json coeffs = json::array();
        for (const auto& z : c.coefficients()) coeffs.push_back(integer_json(z));
        out.push_back({{"partition", lambda.parts()}, {"coeffs", coeffs}});
    }
    return out;
}

degeneration::BigradedCharacter character_from_json(const json& j) {
    degeneration::BigradedCharacter ch;
    for (const auto& rec : j)
        ch.add(combinatorics::WeightVector(rec.at("weight").get<std::vector<int>>()), rec.at("x").get<int>(),
               rec.at("y").get<int>(), rec.at("dim").get<long long>());
    return ch;
}

fock::Series series_from_json(const json& j) {
    fock::Series s;
    for (const auto& rec : j)
        s[{combinatorics::WeightVector(rec.at("weight").get<std::vector<int>>()), rec.at("x").get<int>(),
           rec.at("y").get<int>()}] += integer_from_json(rec.at("coeff"));
    return s;
}

}  // namespace weylpark::io
