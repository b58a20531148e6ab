#ifndef APOLAR_REPORT_HPP
#define APOLAR_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar/ring.hpp"
#include "apolar/tangent.hpp"

namespace apolar {

// The machine-readable result of one check: everything the Verdict carries
// plus the inputs that produced it. Serializes to a stable JSON schema whose
// round-trip is exact.
struct ReportDocument {
    std::int32_t n = 0;
    std::string field;       // FieldSpec::str form ("q", "fp:2")
    std::string polynomial;  // text grammar
    std::vector<std::int64_t> hf_quotient;               // degrees 0..3
    std::array<std::optional<std::int64_t>, 6> hf_square; // degrees 0..5, absent = not computed
    bool condition_holds = false;
    std::optional<std::array<std::int64_t, 3>> tangent_hf;  // tangent degrees -1, 0, 1
    std::optional<std::string> failure_reason;
    double apolar_ms = 0.0;
    double degree4_ms = 0.0;
    double degree5_ms = 0.0;
    std::array<std::string, 6> method;  // per square degree

    bool operator==(const ReportDocument&) const = default;

    nlohmann::json to_json() const;
    static ReportDocument from_json(const nlohmann::json& j);

    // The four checks in pipeline order with per-check pass/fail lines,
    // followed by the collected Hilbert data.
    std::string human_text() const;
};

ReportDocument make_report(std::int32_t n, const FieldSpec& field, const HomogeneousForm& f,
                           const Verdict& verdict);

}  // namespace apolar

#endif
