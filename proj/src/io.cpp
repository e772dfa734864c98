#include "phik/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace phik::io {

namespace {

std::string str(u64 v) { return std::to_string(v); }

BigInt parse_integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? BigInt(v.get<u64>()) : BigInt(static_cast<long>(v.get<i64>()));
    }
    if (v.is_string()) {
        BigInt out;
        if (out.set_str(v.get<std::string>(), 10) == 0) return out;
    }
    throw DomainError("table entry " + where + " is not an integer");
}

u64 parse_key(const std::string& key) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc{} || ptr != key.data() + key.size() || v == 0)
        throw DomainError("table key '" + key + "' is not a positive integer");
    return v;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

}  // namespace

std::string exact(const Rational& v) { return v.get_str(); }

json to_json(const IdentityReport& report) {
    json instances = json::array();
    for (const auto& inst : report.instances) {
        json item{{"k", str(inst.k)}, {"n", str(inst.n)}, {"label", inst.label},
                  {"lhs", exact(inst.lhs)}, {"rhs", exact(inst.rhs)}, {"holds", inst.holds()}};
        if (!inst.note.empty()) item["note"] = inst.note;
        instances.push_back(std::move(item));
    }
    json failures = json::array();
    for (std::size_t i : report.failures) failures.push_back(instances[i]);
    json skipped = json::array();
    for (const auto& s : report.skipped)
        skipped.push_back({{"k", str(s.k)}, {"n", str(s.n)}, {"reason", s.reason}});
    json out{{"identity", report.identity},
             {"k_range", {str(report.k_min), str(report.k_max)}},
             {"n_range", {str(report.n_min), str(report.n_max)}},
             {"ok", report.ok()},
             {"complete", report.complete()},
             {"instance_count", str(report.instances.size())},
             {"failures", failures},
             {"skipped", skipped},
             {"instances", instances}};
    if (!report.f_name.empty()) out["f"] = report.f_name;
    return out;
}

json to_json(const PartialSum& sum) {
    return {{"k", str(sum.k)}, {"x", str(sum.x)}, {"value", sum.value.get_str()},
            {"method", to_string(sum.method)}};
}

json to_json(const Enclosure& e, unsigned k, u64 prime_bound) {
    return {{"k", str(k)},
            {"prime_bound", str(prime_bound)},
            {"lo", to_decimal(e.lo, kEnclosureDigits, false)},
            {"hi", to_decimal(e.hi, kEnclosureDigits, true)},
            {"width", to_decimal(e.width(), kEnclosureDigits, true)}};
}

std::string error_table_csv(const std::vector<ErrorRow>& rows) {
    std::ostringstream out;
    out << kErrorTableHeader << '\n';
    for (const auto& r : rows) {
        out << r.x << ',' << r.sum.get_str() << ',' << to_decimal(r.main_term_lo, 6, false) << ','
            << to_decimal(r.main_term_hi, 6, true) << ',' << format_double(r.delta) << ','
            << format_double(r.normalized_ratio) << '\n';
    }
    return out.str();
}

json to_json(const std::vector<ErrorRow>& rows, unsigned k) {
    json table = json::array();
    for (const auto& r : rows) {
        json row{{"x", str(r.x)},
                 {"sum", r.sum.get_str()},
                 {"main_term_lo", to_decimal(r.main_term_lo, 6, false)},
                 {"main_term_hi", to_decimal(r.main_term_hi, 6, true)},
                 {"delta", r.delta}};
        if (std::isnan(r.normalized_ratio)) row["normalized_ratio"] = nullptr;
        else row["normalized_ratio"] = r.normalized_ratio;
        table.push_back(std::move(row));
    }
    return {{"k", str(k)}, {"rows", table}};
}

FunctionSpec parse_function_table(const std::string& name, const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError("table '" + name + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw DomainError("table '" + name + "' must be a JSON object");
    const bool nested = doc.contains("values");
    const json& values = nested ? doc.at("values") : doc;
    if (!values.is_object()) throw DomainError("table values must be a JSON object");

    ArithmeticFunction::Table table;
    for (const auto& [key, value] : values.items())
        table.emplace(parse_key(key), parse_integer(value, key));

    FunctionSpec spec{ArithmeticFunction("table:" + name, std::move(table)), {}};
    if (nested && doc.contains("rhs")) {
        for (const auto& [key, value] : doc.at("rhs").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw DomainError("rhs key '" + key + "' must be 'k,n'");
            const u64 k = parse_key(key.substr(0, comma));
            const u64 n = parse_key(key.substr(comma + 1));
            spec.rhs_override.push_back({{static_cast<unsigned>(k), n}, Rational(parse_integer(value, key))});
        }
    }
    return spec;
}

FunctionSpec parse_function_spec(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) {
        const std::string path = spec.substr(6);
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open table file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_function_table(path, buffer.str());
    }
    if (auto f = registered(spec)) return {ArithmeticFunction(*f), {}};
    throw DomainError("unknown function spec '" + spec + "'");
}

}  // namespace phik::io
