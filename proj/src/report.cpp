#include "harmcert/report.hpp"

#include "harmcert/errors.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace harmcert {

namespace {

constexpr const char* csv_header = "n,quantity,midpoint,radius,bound_lo,bound_hi,verdict";

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

auto row_key(const ReportRow& r) { return std::tie(r.n, r.quantity); }

} // namespace

ReportRow make_row(std::uint64_t n, std::string quantity, const CertifiedReal& value,
                   const Rational& bound_lo, const Rational& bound_hi, Verdict verdict)
{
    const DecimalEnclosure dec = to_decimal(value, report_digits);
    return ReportRow{n,
                     std::move(quantity),
                     dec.midpoint,
                     dec.radius,
                     bound_lo.to_string(),
                     bound_hi.to_string(),
                     verdict};
}

Verdict CertificationReport::aggregate() const
{
    Verdict v = Verdict::pass;
    for (const auto& row : rows) {
        v = combine(v, row.verdict);
    }
    return v;
}

void CertificationReport::sort_rows()
{
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ReportRow& a, const ReportRow& b) { return row_key(a) < row_key(b); });
}

void CertificationReport::append(const CertificationReport& other)
{
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    sort_rows();
}

std::string CertificationReport::to_csv() const
{
    std::ostringstream os;
    os << csv_header << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << csv_field(r.quantity) << ',' << r.midpoint << ',' << r.radius << ','
           << r.bound_lo << ',' << r.bound_hi << ',' << to_string(r.verdict) << '\n';
    }
    return os.str();
}

std::string CertificationReport::to_json() const
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta.parameters) {
        params[key] = value;
    }
    nlohmann::ordered_json doc;
    doc["meta"] = {
        {"command", meta.command},
        {"parameters", params},
        {"precision_policy",
         {{"initial_bits", meta.policy.initial_bits},
          {"max_bits", meta.policy.max_bits},
          {"growth_factor", meta.policy.growth_factor}}},
        {"digits", report_digits},
    };
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"n", r.n},
                             {"quantity", r.quantity},
                             {"midpoint", r.midpoint},
                             {"radius", r.radius},
                             {"bound_lo", r.bound_lo},
                             {"bound_hi", r.bound_hi},
                             {"verdict", to_string(r.verdict)}});
    }
    doc["rows"] = std::move(rows_json);
    doc["aggregate"] = to_string(aggregate());
    return doc.dump(2) + "\n";
}

CertificationReport CertificationReport::from_csv(const std::string& text)
{
    CertificationReport report;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != csv_header) {
        throw UsageError("report CSV must start with the header '" + std::string(csv_header) + "'");
    }
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 7) {
            throw UsageError("report CSV row has " + std::to_string(f.size()) + " fields: " + line);
        }
        report.rows.push_back(
            ReportRow{std::stoull(f[0]), f[1], f[2], f[3], f[4], f[5], parse_verdict(f[6])});
    }
    return report;
}

CertificationReport CertificationReport::from_json(const std::string& text)
{
    CertificationReport report;
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto& meta = doc.at("meta");
        report.meta.command = meta.at("command").get<std::string>();
        for (const auto& [key, value] : meta.at("parameters").items()) {
            report.meta.parameters.emplace_back(key, value.get<std::string>());
        }
        const auto& policy = meta.at("precision_policy");
        report.meta.policy.initial_bits = policy.at("initial_bits").get<unsigned>();
        report.meta.policy.max_bits = policy.at("max_bits").get<unsigned>();
        report.meta.policy.growth_factor = policy.at("growth_factor").get<unsigned>();
        for (const auto& r : doc.at("rows")) {
            report.rows.push_back(ReportRow{r.at("n").get<std::uint64_t>(),
                                            r.at("quantity").get<std::string>(),
                                            r.at("midpoint").get<std::string>(),
                                            r.at("radius").get<std::string>(),
                                            r.at("bound_lo").get<std::string>(),
                                            r.at("bound_hi").get<std::string>(),
                                            parse_verdict(r.at("verdict").get<std::string>())});
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed report JSON: ") + e.what());
    }
    return report;
}

std::string Table::to_csv() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << csv_field(columns[i]);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_field(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string Table::to_json(const std::vector<std::pair<std::string, std::string>>& meta) const
{
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta) {
        m[key] = value;
    }
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i) {
            obj[columns[i]] = row[i];
        }
        rows_json.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["meta"] = std::move(m);
    doc["rows"] = std::move(rows_json);
    return doc.dump(2) + "\n";
}

} // namespace harmcert
