#include "gvc/json_io.hpp"

#include "gvc/text.hpp"

namespace gvc {

namespace {

Json sample_json(int m, bool vanished, const std::optional<Polynomial>& witness)
{
    Json j;
    j["m"] = m;
    j["vanished"] = vanished;
    if (witness)
        j["witness"] = format(*witness);
    return j;
}

} // namespace

Json vanish_report_json(const VanishReport& report)
{
    Json j;
    j["m_max"] = report.m_max;
    j["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
    j["empirical_threshold"] = report.empirical_threshold;
    Json results = Json::array();
    for (const auto& [m, entry] : report.results)
        results.push_back(sample_json(m, entry.vanished, entry.witness));
    j["results"] = std::move(results);
    return j;
}

Json certificate_json(const GvcCertificate& cert)
{
    Json j;
    j["phi"] = format(cert.phi);
    j["c"] = cert.c ? Json(format_rational_pair(*cert.c)) : Json(nullptr);
    j["phi_normalized"] = format(cert.phi_normalized);
    j["a1"] = cert.a1 ? Json(format_rational_pair(*cert.a1)) : Json(nullptr);
    j["g"] = cert.g ? Json(format(*cert.g)) : Json(nullptr);
    j["d"] = cert.d ? Json(*cert.d) : Json(nullptr);
    j["r"] = cert.r ? Json(*cert.r) : Json(nullptr);
    j["m_star"] = cert.m_star;
    Json samples = Json::array();
    for (const auto& s : cert.samples)
        samples.push_back(sample_json(s.m, s.vanished, s.witness));
    j["samples"] = std::move(samples);
    return j;
}

Json form_report_json(const FormReport& report)
{
    Json j;
    j["lambda_p_vanishes"] = report.lambda_p_vanishes;
    j["square_vanishes"] = report.square_vanishes;
    j["lambda_p_witness"] =
        report.lambda_p_witness ? Json(format(*report.lambda_p_witness)) : Json(nullptr);
    j["square_witness"] =
        report.square_witness ? Json(format(*report.square_witness)) : Json(nullptr);
    if (report.decomposition) {
        j["f"] = format(report.decomposition->f);
        j["g"] = format(report.decomposition->g);
    } else {
        j["f"] = nullptr;
        j["g"] = nullptr;
    }
    j["f_is_linear"] = report.f_is_linear;
    j["g_degree_within_order"] = report.g_degree_within_order;
    j["a1"] = report.a1 ? Json(format_rational_pair(*report.a1)) : Json(nullptr);
    return j;
}

Json eq1_report_json(const Eq1Report& report)
{
    Json j;
    j["direct"] = format(report.direct);
    j["transcribed"] = format(report.transcribed);
    j["residual"] = format(report.residual);
    return j;
}

Json search_result_json(const SearchResult& result)
{
    Json j;
    j["candidates"] = result.candidates;
    j["hypothesis_survivors"] = result.hypothesis_survivors;
    j["exhaustive"] = result.exhaustive;
    Json failures = Json::array();
    for (const auto& f : result.failures) {
        Json entry;
        entry["P"] = format(f.P);
        entry["Q"] = format(f.Q);
        entry["failing_m"] = f.failing_m;
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    return j;
}

} // namespace gvc
