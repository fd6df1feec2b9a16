#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "harmcert/certified_real.hpp"
#include "harmcert/precision.hpp"
#include "harmcert/rational.hpp"

namespace harmcert {

/// Significant digits used for every decimal in reports.
inline constexpr int report_digits = 40;

/// One certified claim: bound_lo < quantity < bound_hi.
struct ReportRow {
    std::uint64_t n = 0;
    std::string quantity;
    std::string midpoint;
    std::string radius;
    std::string bound_lo; // exact rational
    std::string bound_hi; // exact rational
    Verdict verdict = Verdict::unresolved;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

ReportRow make_row(std::uint64_t n, std::string quantity, const CertifiedReal& value,
                   const Rational& bound_lo, const Rational& bound_hi, Verdict verdict);

struct ReportMeta {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    PrecisionPolicy policy;
};

/// Batch result. Rows are kept ordered by n, then quantity name.
class CertificationReport {
public:
    ReportMeta meta;
    std::vector<ReportRow> rows;

    /// pass iff every row passes; fail if any row fails; else unresolved.
    [[nodiscard]] Verdict aggregate() const;
    void sort_rows();
    void append(const CertificationReport& other);

    [[nodiscard]] std::string to_csv() const;
    [[nodiscard]] std::string to_json() const;
    static CertificationReport from_csv(const std::string& text);
    static CertificationReport from_json(const std::string& text);
};

/// Column-oriented table used by the reporting commands.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string to_csv() const;
    /// {"meta": {...}, "rows": [{column: value, ...}, ...]}
    [[nodiscard]] std::string to_json(const std::vector<std::pair<std::string, std::string>>& meta) const;
};

} // namespace harmcert
