#include "apolar/report.hpp"

#include <sstream>

#include "apolar/util.hpp"

namespace apolar {

using nlohmann::json;

nlohmann::json ReportDocument::to_json() const {
    json j;
    j["n"] = n;
    j["field"] = field;
    j["polynomial"] = polynomial;
    j["hf_quotient"] = hf_quotient;
    json sq = json::array();
    for (const auto& v : hf_square) {
        if (v) sq.push_back(*v); else sq.push_back(nullptr);
    }
    j["hf_square"] = sq;
    j["condition_holds"] = condition_holds;
    if (tangent_hf) {
        j["tangent_hf"] = json::array({(*tangent_hf)[0], (*tangent_hf)[1], (*tangent_hf)[2]});
    } else {
        j["tangent_hf"] = nullptr;
    }
    if (failure_reason) j["failure_reason"] = *failure_reason; else j["failure_reason"] = nullptr;
    j["timings_ms"] = json{{"apolar", apolar_ms}, {"degree4", degree4_ms}, {"degree5", degree5_ms}};
    j["methods"] = method;
    return j;
}

ReportDocument ReportDocument::from_json(const nlohmann::json& j) {
    ReportDocument r;
    try {
        r.n = j.at("n").get<std::int32_t>();
        r.field = j.at("field").get<std::string>();
        r.polynomial = j.at("polynomial").get<std::string>();
        r.hf_quotient = j.at("hf_quotient").get<std::vector<std::int64_t>>();
        const auto& sq = j.at("hf_square");
        if (!sq.is_array() || sq.size() != 6)
            throw InputError("hf_square must be an array of six entries");
        for (std::size_t i = 0; i < 6; ++i)
            if (!sq[i].is_null()) r.hf_square[i] = sq[i].get<std::int64_t>();
        r.condition_holds = j.at("condition_holds").get<bool>();
        const auto& th = j.at("tangent_hf");
        if (!th.is_null()) {
            if (!th.is_array() || th.size() != 3)
                throw InputError("tangent_hf must be null or an array of three entries");
            r.tangent_hf = std::array<std::int64_t, 3>{th[0].get<std::int64_t>(),
                                                       th[1].get<std::int64_t>(),
                                                       th[2].get<std::int64_t>()};
        }
        const auto& fr = j.at("failure_reason");
        if (!fr.is_null()) r.failure_reason = fr.get<std::string>();
        const auto& t = j.at("timings_ms");
        r.apolar_ms = t.at("apolar").get<double>();
        r.degree4_ms = t.at("degree4").get<double>();
        r.degree5_ms = t.at("degree5").get<double>();
        r.method = j.at("methods").get<std::array<std::string, 6>>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report document: ") + e.what());
    }
    return r;
}

std::string ReportDocument::human_text() const {
    std::ostringstream out;
    FieldSpec spec = FieldSpec::parse(field);
    out << "n = " << n << ", field = " << spec.display() << "\n";
    out << "polynomial: " << polynomial << "\n";

    auto line = [&](const std::string& label, std::optional<std::int64_t> got,
                    std::int64_t want, const std::string& extra) {
        out << "  check " << label << " == " << want << " : ";
        if (!got) {
            out << "skipped\n";
        } else {
            out << *got << (got == want ? "  pass" : "  FAIL");
            if (!extra.empty()) out << "  [" << extra << "]";
            out << "\n";
        }
    };
    std::optional<std::int64_t> h0, h1;
    if (hf_quotient.size() == 4) {
        h0 = hf_quotient[0];
        h1 = hf_quotient[1];
    }
    line("H(S/I)_0  ", h0, 1, "");
    line("H(S/I)_1  ", h1, n, "");
    line("H(S/I^2)_4", hf_square[4], n, method[4]);
    line("H(S/I^2)_5", hf_square[5], 0, method[5]);

    out << "result: small tangent space condition "
        << (condition_holds ? "HOLDS" : "FAILS") << "\n";
    if (failure_reason) out << "failure reason: " << *failure_reason << "\n";

    out << "H(S/I)   = (";
    for (std::size_t i = 0; i < hf_quotient.size(); ++i)
        out << (i ? ", " : "") << hf_quotient[i];
    out << ")\n";
    out << "H(S/I^2) = (";
    for (std::size_t i = 0; i < hf_square.size(); ++i) {
        out << (i ? ", " : "");
        if (hf_square[i]) out << *hf_square[i]; else out << "-";
    }
    out << ")\n";
    if (tangent_hf) {
        out << "tangent space Hilbert function (degrees -1, 0, 1) = ("
            << (*tangent_hf)[0] << ", " << (*tangent_hf)[1] << ", " << (*tangent_hf)[2] << ")\n";
    }
    if (condition_holds) {
        // Known consequence of the verified condition; stated, not computed.
        out << "consequence: Ann(f) is a smooth point of an elementary component of the "
               "Hilbert scheme of points\n";
    }
    out << "timings: apolar " << apolar_ms << " ms, degree 4 " << degree4_ms
        << " ms, degree 5 " << degree5_ms << " ms\n";
    return out.str();
}

ReportDocument make_report(std::int32_t n, const FieldSpec& field, const HomogeneousForm& f,
                           const Verdict& verdict) {
    ReportDocument r;
    r.n = n;
    r.field = field.str();
    r.polynomial = format_form(f);
    r.hf_quotient = verdict.hf_quotient;
    r.hf_square = verdict.square.hf;
    r.condition_holds = verdict.condition_holds;
    r.tangent_hf = verdict.tangent_hf;
    if (verdict.failure_reason) r.failure_reason = failure_reason_str(*verdict.failure_reason);
    r.apolar_ms = verdict.ms_apolar;
    r.degree4_ms = verdict.ms_degree4;
    r.degree5_ms = verdict.ms_degree5;
    r.method = verdict.square.method;
    return r;
}

}  // namespace apolar
